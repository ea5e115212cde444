use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fockcrystal::crystal::{build_graph, e_tilde, f_tilde, node_id, signature, CrystalGraph};
use fockcrystal::groups::{
    block_id, blocks, brauer_tree, cuspidal_report, gl_cuspidal_partitions, hecke_parameters, Family, GroupFamily,
    UnipotentLabel,
};
use fockcrystal::partition::{parse_multipartition, Partition};
use fockcrystal::residue::QuiverSpec;
use fockcrystal::symfun::CharTable;
use fockcrystal::Error;

mod selftest;

#[derive(Parser)]
#[command(name = "fockcrystal", version, about = "Crystals, blocks and cuspidal counts for unipotent representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weak Harish-Chandra branching graph (the crystal) up to a rank.
    Branch {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Unipotent ℓ-blocks of one rank.
    Blocks {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Weakly cuspidal labels and cuspidal dimensions, or GL cuspidal partitions with --gl.
    Cuspidal {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        /// List the cuspidal partitions of GL_m instead (needs --e and --ell).
        #[arg(long)]
        gl: Option<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Hecke parameters of the series up to a rank.
    Hecke {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Brauer tree of the block of a B/C symbol "t:μ1/μ2" with cyclic defect.
    Brauer {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        label: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Signatures and crystal operators at one node "t:μ1/μ2".
    CrystalNode {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        node: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Character table of a symmetric group.
    CharTable {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Runs the built-in invariant checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupName {
    Gu,
    Sp,
    So,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long, value_enum, default_value = "gu")]
    group: GroupName,
    /// Order of -q (GU).
    #[arg(long)]
    e: Option<u64>,
    /// Order of q (Sp, SO).
    #[arg(long, conflicts_with = "d")]
    f: Option<u64>,
    /// Shorthand for --f 2d.
    #[arg(long)]
    d: Option<u64>,
    /// The prime ℓ, used only by GL cuspidal partitions.
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Dot,
    Json,
    Tsv,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short = 'o', long)]
    output: Option<std::path::PathBuf>,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::Parse(_) => 2,
            Error::Unsupported(_) => 3,
            Error::Invariant(_) => 4,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn unsupported(msg: impl Into<String>) -> Failure {
    Failure { code: 3, msg: msg.into() }
}

type Res<T> = std::result::Result<T, Failure>;

fn max_degree() -> Res<usize> {
    match std::env::var("FOCKCRYSTAL_MAX_DEGREE") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("FOCKCRYSTAL_MAX_DEGREE={v:?} is not a number"))),
        Err(_) => Ok(40),
    }
}

fn check_degree(n: usize) -> Res<()> {
    let cap = max_degree()?;
    if n > cap {
        return Err(usage(format!("degree {n} exceeds FOCKCRYSTAL_MAX_DEGREE={cap}")));
    }
    Ok(())
}

impl GroupArgs {
    fn family(&self) -> Res<GroupFamily> {
        let fam = match self.group {
            GroupName::Gu => Family::Gu,
            GroupName::Sp => Family::Sp,
            GroupName::So => Family::SoOdd,
        };
        let spec = if fam == Family::Gu {
            if self.f.is_some() || self.d.is_some() {
                return Err(usage("GU takes --e, not --f or --d"));
            }
            match self.e {
                Some(e) => QuiverSpec::gu(e)?,
                None => QuiverSpec::gu_char0(),
            }
        } else {
            if self.e.is_some() {
                return Err(usage("Sp and SO take --f or --d, not --e"));
            }
            match (self.f, self.d) {
                (Some(f), _) => QuiverSpec::bc(f)?,
                (None, Some(d)) => QuiverSpec::bc(2 * d)?,
                (None, None) => QuiverSpec::bc_char0(),
            }
        };
        Ok(GroupFamily::new(fam, spec)?)
    }
}

fn emit(out: &OutArgs, text: String) -> Res<()> {
    let text = if text.ends_with('\n') { text } else { text + "\n" };
    match &out.output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| Failure { code: 4, msg: e.to_string() })
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn no_dot(out: &OutArgs, what: &str) -> Res<()> {
    if out.format == Format::Dot {
        return Err(usage(format!("{what} has no DOT output; use json or tsv")));
    }
    Ok(())
}

fn graph_output(g: &CrystalGraph, fam: &GroupFamily, format: Format) -> String {
    let spec = fam.spec();
    match format {
        Format::Json => {
            let nodes: Vec<Value> = g
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "id": n.id,
                        "t": n.t,
                        "mu": fockcrystal::partition::multipartition_text(&n.mu),
                        "rank": n.rank,
                        "hw": n.highest_weight,
                    })
                })
                .collect();
            let edges: Vec<Value> = g
                .edges
                .iter()
                .map(|e| json!({"from": g.nodes[e.from].id, "to": g.nodes[e.to].id, "residue": e.residue.text(spec)}))
                .collect();
            pretty(&json!({"nodes": nodes, "edges": edges}))
        }
        Format::Tsv => {
            let mut s = String::from("kind\tid\tt\tmu\trank\thw\n");
            for n in &g.nodes {
                let mu = fockcrystal::partition::multipartition_text(&n.mu);
                s += &format!("node\t{}\t{}\t{}\t{}\t{}\n", n.id, n.t, mu, n.rank, n.highest_weight);
            }
            s += "kind\tfrom\tto\tresidue\n";
            for e in &g.edges {
                s += &format!("edge\t{}\t{}\t{}\n", g.nodes[e.from].id, g.nodes[e.to].id, e.residue.text(spec));
            }
            s
        }
        Format::Dot => {
            let mut s = String::from("digraph crystal {\n");
            for n in &g.nodes {
                let style = if n.highest_weight { ", shape=doublecircle" } else { "" };
                s += &format!("  \"{}\" [label=\"{}\\nrank {}\"{style}];\n", n.id, n.id, n.rank);
            }
            for e in &g.edges {
                s += &format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    g.nodes[e.from].id,
                    g.nodes[e.to].id,
                    e.residue.text(spec)
                );
            }
            s + "}\n"
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    match cli.command {
        Command::Branch { g, max_rank, out } => {
            check_degree(max_rank)?;
            let fam = g.family()?;
            let graph = build_graph(fam.tower(), max_rank);
            emit(&out, graph_output(&graph, &fam, out.format))
        }
        Command::Blocks { g, rank, out } => {
            check_degree(rank)?;
            no_dot(&out, "blocks")?;
            let fam = g.family()?;
            let bs = blocks(&fam, rank)?;
            let text = match out.format {
                Format::Json => pretty(&Value::Array(bs.iter().map(|b| b.to_json()).collect())),
                _ => {
                    let mut s = String::from("core\tweight\tlabel\n");
                    for b in &bs {
                        for l in &b.labels {
                            s += &format!("{}\t{}\t{l}\n", b.id.core_text(), b.id.degree());
                        }
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::Cuspidal { g, max_rank, gl, out } => {
            no_dot(&out, "cuspidal")?;
            if let Some(m) = gl {
                check_degree(m)?;
                let e = g.e.ok_or_else(|| usage("--gl needs --e"))? as usize;
                let ell = g.ell.ok_or_else(|| usage("--gl needs --ell"))?;
                let parts = gl_cuspidal_partitions(m, e, ell)?;
                let text = match out.format {
                    Format::Json => pretty(&Value::Array(
                        parts
                            .iter()
                            .map(|c| json!({"partition": c.partition.to_string(), "hecke": c.factorization()}))
                            .collect(),
                    )),
                    _ => parts.iter().map(|c| format!("{}\t{}\n", c.partition, c.factorization())).collect(),
                };
                return emit(&out, text);
            }
            check_degree(max_rank)?;
            let fam = g.family()?;
            if !fam.spec().is_finite() {
                return Err(usage("cuspidal reports need --e or --f"));
            }
            let rep = cuspidal_report(&fam, max_rank)?;
            let text = match out.format {
                Format::Json => pretty(&Value::Array(rep.iter().map(|r| r.to_json()).collect())),
                _ => {
                    let mut s = String::from("rank\tweakly\tcuspidal_dim\n");
                    for r in &rep {
                        let w: Vec<String> = r.weakly.iter().map(|l| l.to_string()).collect();
                        let c = r.cuspidal_dim.map_or("-".to_string(), |d| d.to_string());
                        s += &format!("{}\t{}\t{c}\n", r.rank, w.join(" "));
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::Hecke { g, max_rank, out } => {
            check_degree(max_rank)?;
            no_dot(&out, "hecke")?;
            let fam = g.family()?;
            let rows: Vec<(usize, String)> =
                fam.tower().series_up_to(max_rank).into_iter().map(|t| (t, hecke_parameters(&fam, t).text())).collect();
            let text = match out.format {
                Format::Json => pretty(&Value::Array(rows.iter().map(|(t, h)| json!({"t": t, "hecke": h})).collect())),
                _ => rows.iter().map(|(t, h)| format!("{t}\t{h}\n")).collect(),
            };
            emit(&out, text)
        }
        Command::Brauer { g, label, out } => {
            no_dot(&out, "brauer")?;
            let fam = g.family()?;
            if fam.is_unitary_group() {
                return Err(unsupported("Brauer trees are implemented for Sp and SO"));
            }
            let l = UnipotentLabel::parse(&label, &fam)?;
            check_degree(l.rank())?;
            let tree = brauer_tree(&block_id(&l, &fam)?, &fam)?;
            let text = match out.format {
                Format::Json => pretty(&tree.to_json()),
                _ => {
                    let mut s = String::from("side\tk\tsymbol\n");
                    for (k, sym) in &tree.left {
                        s += &format!("rho\t{k}\t{sym}\n");
                    }
                    s += "exc\t-\t-\n";
                    for (k, sym) in &tree.right {
                        s += &format!("eta\t{k}\t{sym}\n");
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::CrystalNode { g, node, out } => {
            no_dot(&out, "crystal-node")?;
            let fam = g.family()?;
            let (t, m) = node.split_once(':').ok_or_else(|| usage(format!("node {node:?} is not t:μ1/μ2")))?;
            let t: usize = t.trim().parse().map_err(|_| usage(format!("bad series index in {node:?}")))?;
            let mu: Vec<Partition> = parse_multipartition(m)?;
            if mu.len() != 2 {
                return Err(usage("nodes are bipartitions"));
            }
            let tower = fam.tower();
            let sp = tower.space(t);
            let spec = fam.spec();
            let residues: BTreeSet<_> =
                sp.addable(&mu).into_iter().chain(sp.removable(&mu)).map(|c| sp.residue(c)).collect();
            let mut sigs = Vec::new();
            for i in residues {
                let s = signature(&sp, &mu, i);
                sigs.push(json!({
                    "residue": i.text(spec),
                    "epsilon": s.epsilon,
                    "phi": s.phi,
                    "f": f_tilde(&sp, &mu, i).map(|nu| node_id(t, &nu)),
                    "e": e_tilde(&sp, &mu, i).map(|nu| node_id(t, &nu)),
                }));
            }
            let doc = json!({
                "id": node_id(t, &mu),
                "rank": tower.rank(t, mu.iter().map(Partition::size).sum()),
                "charge": sp.charge(),
                "weight": sp.weight_of(&mu).to_json(spec),
                "signatures": sigs,
            });
            let text = match out.format {
                Format::Json => pretty(&doc),
                _ => {
                    let mut s = String::from("residue\tepsilon\tphi\tf\te\n");
                    for v in doc["signatures"].as_array().unwrap() {
                        let o = |k: &str| v[k].as_str().unwrap_or("-").to_string();
                        s += &format!("{}\t{}\t{}\t{}\t{}\n", o("residue"), v["epsilon"], v["phi"], o("f"), o("e"));
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::CharTable { degree, out } => {
            check_degree(degree)?;
            no_dot(&out, "char-table")?;
            let t = CharTable::new(degree);
            let names: Vec<String> = t.labels.iter().map(|l| l.to_string()).collect();
            let text = match out.format {
                Format::Json => pretty(&json!({"degree": degree, "labels": names, "values": t.values})),
                _ => {
                    let mut s = format!("chi\t{}\n", names.join("\t"));
                    for (n, row) in names.iter().zip(&t.values) {
                        let r: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        s += &format!("{n}\t{}\n", r.join("\t"));
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::Selftest => {
            let results = selftest::run_all();
            let mut ok = true;
            for (name, pass) in &results {
                println!("{} {name}", if *pass { "PASS" } else { "FAIL" });
                ok &= pass;
            }
            if ok {
                Ok(())
            } else {
                Err(Failure { code: 4, msg: "self-test failed".into() })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
