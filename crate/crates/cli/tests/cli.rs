use std::process::{Command, Output};

use fockcrystal::groups::{blocks, brauer_tree, block_id, GroupFamily, UnipotentLabel};
use fockcrystal::partition::partition_count;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcrystal")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn branch_dot_has_one_node_per_label() {
    let dot = stdout(&["branch", "--group", "gu", "--e", "3", "--max-rank", "6", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).count();
    let expected: u64 = (0..=6).map(partition_count).sum();
    assert_eq!(nodes as u64, expected);
    assert_eq!(expected, 30);
    assert!(dot.lines().any(|l| l.contains("->")));
}

#[test]
fn blocks_of_sp4_rank_two() {
    let v = json(&["blocks", "--group", "sp", "--f", "4", "--rank", "2", "--format", "json"]);
    let arr = v.as_array().unwrap();
    let total: usize = arr.iter().map(|b| b["labels"].as_array().unwrap().len()).sum();
    assert_eq!(total, 6);
    assert_eq!(arr.len(), 3);
    // Re-parse the document into the library's blocks.
    let g = GroupFamily::sp(4).unwrap();
    let lib = blocks(&g, 2).unwrap();
    assert_eq!(arr.len(), lib.len());
    for (doc, b) in arr.iter().zip(&lib) {
        let labels: Vec<UnipotentLabel> =
            doc["labels"].as_array().unwrap().iter().map(|l| UnipotentLabel::parse(l.as_str().unwrap(), &g).unwrap()).collect();
        assert_eq!(labels, b.labels);
        assert_eq!(doc["block"], b.id.to_json());
        for l in &labels {
            assert_eq!(block_id(l, &g).unwrap(), b.id);
        }
    }
    assert_eq!(stdout(&["blocks", "--group", "sp", "--d", "2", "--rank", "2"]), serde_json::to_string_pretty(&v).unwrap() + "\n");
}

#[test]
fn brauer_json_matches_library() {
    let v = json(&["brauer", "--group", "sp", "--f", "4", "--label", "1:0/0"]);
    assert_eq!(v["exceptional"], Value::Bool(true));
    assert_eq!(v["left"].as_array().unwrap().len(), 3);
    assert_eq!(v["right"].as_array().unwrap().len(), 1);
    let g = GroupFamily::sp(4).unwrap();
    let id = block_id(&UnipotentLabel::parse("1:0/0", &g).unwrap(), &g).unwrap();
    assert_eq!(v, brauer_tree(&id, &g).unwrap().to_json());
}

#[test]
fn cuspidal_reports() {
    let v = json(&["cuspidal", "--group", "gu", "--e", "3", "--max-rank", "6"]);
    let ranks = v.as_array().unwrap();
    assert_eq!(ranks.len(), 7);
    assert_eq!(ranks[0]["cuspidal_dim"], 1);
    let last = &ranks[6];
    assert!(last["cuspidal_dim"].as_u64().unwrap() < last["weakly"].as_array().unwrap().len() as u64);
    let gl = json(&["cuspidal", "--e", "3", "--ell", "2", "--gl", "6"]);
    let parts: Vec<&str> = gl.as_array().unwrap().iter().map(|x| x["partition"].as_str().unwrap()).collect();
    assert_eq!(parts, ["1,1,1,1,1,1", "3,1,1,1", "3,3", "6"]);
}

#[test]
fn other_subcommands_emit_json() {
    let h = json(&["hecke", "--group", "sp", "--f", "4", "--max-rank", "2"]);
    assert_eq!(h[0]["hecke"], "Q=(1, (-q)^-1); q");
    let node = json(&["crystal-node", "--e", "3", "--node", "0:0/0"]);
    assert_eq!(node["rank"], 0);
    assert!(node["signatures"].as_array().unwrap().iter().all(|s| s["epsilon"] == 0));
    let table = json(&["char-table", "--degree", "3"]);
    assert_eq!(table["labels"], serde_json::json!(["3", "2,1", "1,1,1"]));
    assert_eq!(table["values"], serde_json::json!([[1, 1, 1], [-1, 0, 2], [1, -1, 1]]));
    let tsv = stdout(&["blocks", "--e", "3", "--rank", "3", "--format", "tsv"]);
    assert_eq!(tsv.lines().count(), 1 + 3);
    assert!(tsv.lines().skip(1).all(|l| l.starts_with("0\t1\t")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["branch", "--e", "3", "--max-rank", "5", "--format", "dot"][..],
        &["blocks", "--group", "sp", "--f", "6", "--rank", "5"][..],
        &["cuspidal", "--e", "3", "--max-rank", "6"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn writes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("fockcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("blocks.json");
    let p = path.to_str().unwrap();
    stdout(&["blocks", "--e", "3", "--rank", "4", "-o", p]);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, json(&["blocks", "--e", "3", "--rank", "4"]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["selftest"]).status.code(), Some(0));
    assert_eq!(run(&["branch", "--max-rank", "x"]).status.code(), Some(2));
    assert_eq!(run(&["blocks", "--e", "3", "--rank", "2", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["blocks", "--group", "sp", "--f", "4", "--d", "2", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["blocks", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["brauer", "--e", "3", "--label", "3"]).status.code(), Some(3));
    assert_eq!(run(&["brauer", "--group", "sp", "--f", "4", "--label", "0:0/0"]).status.code(), Some(3));
    assert_eq!(run(&["crystal-node", "--e", "3", "--node", "bad"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_fockcrystal"))
        .args(["char-table", "--degree", "9"])
        .env("FOCKCRYSTAL_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}
