//! Unipotent labels of GU_n, Sp_2n and SO_2n+1: Harish-Chandra series, Hecke parameters,
//! ℓ-blocks, Brauer trees and cuspidal counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::crystal::{build_graph, Tower};
use crate::error::{invalid, Error, Result};
use crate::fock::FockSpace;
use crate::heisenberg::hw_kernel;
use crate::partition::{e_core, e_weight, partitions, staircase_index, two_core_index, varpi, Partition};
use crate::residue::{Kind, QuiverSpec, Residue};
use crate::symbol::{symbol_weights, symbols_of_rank, Symbol};
use crate::weight::{kappa_star, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gu,
    Sp,
    SoOdd,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gu => "GU",
            Family::Sp => "Sp",
            Family::SoOdd => "SO",
        }
    }
}

/// A family together with its quiver: e for GU, f for Sp and SO.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupFamily {
    family: Family,
    spec: QuiverSpec,
}

impl GroupFamily {
    pub fn new(family: Family, spec: QuiverSpec) -> Result<Self> {
        let ok = match family {
            Family::Gu => spec.is_gu() && spec.kind() != Kind::GuCircle,
            Family::Sp | Family::SoOdd => spec.is_bc(),
        };
        if !ok {
            return invalid(format!("{} needs a {} quiver", family.name(), if family == Family::Gu { "unitary" } else { "B/C" }));
        }
        Ok(GroupFamily { family, spec })
    }

    pub fn gu(e: u64) -> Result<Self> {
        Self::new(Family::Gu, QuiverSpec::gu(e)?)
    }

    pub fn sp(f: u64) -> Result<Self> {
        Self::new(Family::Sp, QuiverSpec::bc(f)?)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    pub fn is_unitary_group(&self) -> bool {
        self.family == Family::Gu
    }

    pub fn tower(&self) -> Tower {
        if self.is_unitary_group() {
            Tower::unitary(self.spec)
        } else {
            Tower::bc(self.spec)
        }
        .expect("family and quiver checked at construction")
    }

    /// For B/C: d = f/2 when f is even (unitary prime), d = f when f is odd (linear prime).
    pub fn bc_d(&self) -> Option<usize> {
        let f = self.spec.f()? as usize;
        (!self.is_unitary_group()).then_some(if f % 2 == 0 { f / 2 } else { f })
    }

    pub fn unitary_prime(&self) -> bool {
        self.spec.f().is_some_and(|f| f % 2 == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnipotentLabel {
    Partition(Partition),
    Symbol(Symbol),
}

impl UnipotentLabel {
    pub fn rank(&self) -> usize {
        match self {
            UnipotentLabel::Partition(p) => p.size(),
            UnipotentLabel::Symbol(s) => s.rank(),
        }
    }

    pub fn parse(s: &str, g: &GroupFamily) -> Result<Self> {
        Ok(if g.is_unitary_group() { UnipotentLabel::Partition(s.parse()?) } else { UnipotentLabel::Symbol(s.parse()?) })
    }
}

impl fmt::Display for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnipotentLabel::Partition(p) => write!(f, "{p}"),
            UnipotentLabel::Symbol(s) => write!(f, "{s}"),
        }
    }
}

/// Labels of rank n, sorted by text.
pub fn unipotent_labels(g: &GroupFamily, n: usize) -> Vec<UnipotentLabel> {
    let mut out: Vec<UnipotentLabel> = if g.is_unitary_group() {
        partitions(n).into_iter().map(UnipotentLabel::Partition).collect()
    } else {
        symbols_of_rank(n).into_iter().map(UnipotentLabel::Symbol).collect()
    };
    out.sort_by_key(|l| l.to_string());
    out
}

/// The series t: Δ_t is the 2-core (GU) or 2t+1 the defect (B/C).
pub fn hc_series(label: &UnipotentLabel) -> usize {
    match label {
        UnipotentLabel::Partition(p) => two_core_index(&e_core(p, 2)),
        UnipotentLabel::Symbol(s) => s.t(),
    }
}

/// Q_t = ((-q)^a, (-q)^b) with the quadratic parameter q^k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeParameters {
    pub exponents: [i64; 2],
    pub quadratic_q_power: u32,
}

impl HeckeParameters {
    /// The parameters as quiver vertices.
    pub fn residues(&self, spec: &QuiverSpec) -> Result<[Residue; 2]> {
        let r = |a: i64| -> Result<Residue> {
            if spec.is_gu() {
                Ok(Residue::neg_q_pow(a, spec))
            } else {
                Residue::normalize(if a % 2 == 0 { 1 } else { -1 }, a, spec)
            }
        };
        Ok([r(self.exponents[0])?, r(self.exponents[1])?])
    }

    pub fn text(&self) -> String {
        let p = |a: i64| match a {
            0 => "1".to_string(),
            1 => "(-q)".to_string(),
            a => format!("(-q)^{a}"),
        };
        let quad = if self.quadratic_q_power == 1 { "q".to_string() } else { format!("q^{}", self.quadratic_q_power) };
        format!("Q=({}, {}); {quad}", p(self.exponents[0]), p(self.exponents[1]))
    }
}

pub fn hecke_parameters(g: &GroupFamily, t: usize) -> HeckeParameters {
    let t = t as i64;
    if g.is_unitary_group() {
        let e = if t % 2 == 0 { [-1 - t, t] } else { [t, -1 - t] };
        HeckeParameters { exponents: e, quadratic_q_power: 2 }
    } else {
        HeckeParameters { exponents: [t, -1 - t], quadratic_q_power: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockId {
    /// (e-core, e-weight).
    Gu { core: Partition, weight: usize },
    /// (d-core or d-cocore, degree).
    Bc { core: Symbol, degree: usize, cocore: bool },
}

impl BlockId {
    pub fn degree(&self) -> usize {
        match self {
            BlockId::Gu { weight, .. } => *weight,
            BlockId::Bc { degree, .. } => *degree,
        }
    }

    pub fn core_text(&self) -> String {
        match self {
            BlockId::Gu { core, .. } => core.to_string(),
            BlockId::Bc { core, .. } => core.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "core": self.core_text(), "weight": self.degree() })
    }
}

pub fn block_id(label: &UnipotentLabel, g: &GroupFamily) -> Result<BlockId> {
    if !g.spec.is_finite() {
        return invalid("blocks need a finite e or f");
    }
    match label {
        UnipotentLabel::Partition(p) => {
            let e = g.spec.e().expect("finite unitary quiver") as usize;
            Ok(BlockId::Gu { core: e_core(p, e), weight: e_weight(p, e) })
        }
        UnipotentLabel::Symbol(s) => {
            let d = g.bc_d().expect("finite B/C quiver");
            let cocore = g.unitary_prime();
            let core = if cocore { s.d_cocore(d) } else { s.d_core(d) };
            let degree = (s.rank() - core.rank()) / d;
            Ok(BlockId::Bc { core, degree, cocore })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub id: BlockId,
    pub labels: Vec<UnipotentLabel>,
}

impl Block {
    pub fn to_json(&self) -> Value {
        json!({
            "block": self.id.to_json(),
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The labels of rank n grouped by block, ordered by their first label.
pub fn blocks(g: &GroupFamily, n: usize) -> Result<Vec<Block>> {
    let mut map: BTreeMap<BlockId, Vec<UnipotentLabel>> = BTreeMap::new();
    for l in unipotent_labels(g, n) {
        map.entry(block_id(&l, g)?).or_default().push(l);
    }
    let mut out: Vec<Block> = map.into_iter().map(|(id, labels)| Block { id, labels }).collect();
    out.sort_by_key(|b| b.labels[0].to_string());
    Ok(out)
}

/// The weight used to compare with blocks.
/// GU: κ* of the weight of |λ, 1⟩ on the circle quiver. B/C, f even: the weights of both parametrizations.
pub fn label_weight(label: &UnipotentLabel, g: &GroupFamily) -> Result<BTreeSet<Weight>> {
    match label {
        UnipotentLabel::Partition(p) => {
            let e = g.spec.e().ok_or_else(|| Error::InvalidArgument("the weight needs a finite e".into()))?;
            let circle = QuiverSpec::gu_circle(e)?;
            let w = FockSpace::new(circle, vec![0])?.weight_of(std::slice::from_ref(p));
            Ok(BTreeSet::from([kappa_star(&w, &circle, &g.spec)?]))
        }
        UnipotentLabel::Symbol(s) => {
            if !g.unitary_prime() {
                return Err(Error::Unsupported("symbol weights need f even".into()));
            }
            symbol_weights(s, g.bc_d().unwrap())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub pairs: usize,
    /// Pairs (a, b) where "same block" and "same weight" disagree.
    pub mismatches: Vec<(String, String)>,
}

/// Compares the block partition with the weight fibres on each rank ≤ n.
/// For GU with e even the comparison runs inside each 2-core.
pub fn weight_block_crosscheck(g: &GroupFamily, n: usize) -> Result<CrosscheckReport> {
    let mut rep = CrosscheckReport::default();
    let per_core = g.is_unitary_group() && g.spec.e().is_some_and(|e| e % 2 == 0);
    for k in 0..=n {
        let data: Vec<(UnipotentLabel, BlockId, BTreeSet<Weight>, usize)> = unipotent_labels(g, k)
            .into_iter()
            .map(|l| {
                let b = block_id(&l, g)?;
                let w = label_weight(&l, g)?;
                let t = hc_series(&l);
                Ok((l, b, w, t))
            })
            .collect::<Result<_>>()?;
        for (i, a) in data.iter().enumerate() {
            for b in &data[i + 1..] {
                if per_core && a.3 != b.3 {
                    continue;
                }
                rep.pairs += 1;
                if (a.1 == b.1) != (a.2 == b.2) {
                    rep.mismatches.push((a.0.to_string(), b.0.to_string()));
                }
            }
        }
    }
    Ok(rep)
}

/// A line-shaped Brauer tree: ρ_a … ρ_1, the exceptional vertex, then η_1 … η_b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTree {
    pub core: Symbol,
    /// (k, symbol) in display order ρ_a, …, ρ_1.
    pub left: Vec<(i64, Symbol)>,
    /// (k, symbol) in display order η_1, …, η_b.
    pub right: Vec<(i64, Symbol)>,
}

impl BrauerTree {
    pub fn a(&self) -> usize {
        self.left.len()
    }

    pub fn b(&self) -> usize {
        self.right.len()
    }

    pub fn to_json(&self) -> Value {
        let side = |v: &[(i64, Symbol)]| v.iter().map(|(k, s)| json!({"k": k, "symbol": s.to_string()})).collect::<Vec<_>>();
        json!({
            "core": self.core.to_string(),
            "left": side(&self.left),
            "exceptional": true,
            "right": side(&self.right),
        })
    }
}

/// The Brauer tree of a B/C block of degree 1.
/// Unitary prime: ρ_k adds the d-cohook (k, k+d) taking a bead from the longer row, η_k from the shorter.
/// Linear prime: ρ_k adds a d-hook to the longer row, η_k to the shorter.
/// Within each side k increases away from the exceptional vertex.
pub fn brauer_tree(block: &BlockId, g: &GroupFamily) -> Result<BrauerTree> {
    let BlockId::Bc { core, degree, cocore } = block else {
        return Err(Error::Unsupported("Brauer trees are implemented for B/C blocks".into()));
    };
    if *degree != 1 {
        return Err(Error::Unsupported(format!("block of degree {degree} does not have cyclic defect")));
    }
    let d = g.bc_d().ok_or_else(|| Error::InvalidArgument("Brauer trees need a finite B/C quiver".into()))?;
    if *cocore != g.unitary_prime() {
        return invalid("block and group disagree on the prime type");
    }
    let moves = if *cocore { core.add_cohooks(d) } else { core.add_hooks(d) };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (m, s) in moves {
        let side = if m.row == crate::symbol::Row::X { &mut left } else { &mut right };
        side.push((m.x, s));
    }
    left.sort_by(|a, b| b.0.cmp(&a.0));
    right.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(BrauerTree { core: core.clone(), left, right })
}

/// One rank of a cuspidal report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalRank {
    pub rank: usize,
    /// Weakly cuspidal labels: highest-weight crystal nodes.
    pub weakly: Vec<UnipotentLabel>,
    /// For each weakly cuspidal label, t' with e-core Δ_{t'} (GU) and its Hecke parameters.
    pub parameters: Vec<(usize, HeckeParameters)>,
    /// Dimension of the joint e_i and b* kernel (GU only).
    pub cuspidal_dim: Option<usize>,
}

impl CuspidalRank {
    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "weakly": self.weakly.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "parameters": self.parameters.iter().map(|(t, h)| json!({"t": t, "hecke": h.text()})).collect::<Vec<_>>(),
            "cuspidal_dim": self.cuspidal_dim,
        })
    }
}

fn label_of(g: &GroupFamily, t: usize, mu: &[Partition]) -> Result<UnipotentLabel> {
    Ok(if g.is_unitary_group() {
        UnipotentLabel::Partition(varpi(t, mu)?)
    } else {
        UnipotentLabel::Symbol(Symbol::new(t, [mu[0].clone(), mu[1].clone()]))
    })
}

/// Weakly cuspidal labels of rank ≤ max_rank, by rank then text.
pub fn weakly_cuspidal_labels(g: &GroupFamily, max_rank: usize) -> Result<Vec<UnipotentLabel>> {
    let graph = build_graph(g.tower(), max_rank);
    let mut out = Vec::new();
    for node in graph.highest_weight_nodes() {
        out.push(label_of(g, node.t, &node.mu)?);
    }
    out.sort_by_key(|l| (l.rank(), l.to_string()));
    Ok(out)
}

pub fn cuspidal_report(g: &GroupFamily, max_rank: usize) -> Result<Vec<CuspidalRank>> {
    let weakly = weakly_cuspidal_labels(g, max_rank)?;
    let kernel = g.is_unitary_group() && g.spec.e().is_some_and(|e| e % 2 == 1);
    let mut out = Vec::new();
    for n in 0..=max_rank {
        let here: Vec<UnipotentLabel> = weakly.iter().filter(|l| l.rank() == n).cloned().collect();
        let mut parameters = Vec::new();
        for l in &here {
            let t = match l {
                UnipotentLabel::Partition(p) => {
                    let e = g.spec.e().expect("finite e") as usize;
                    staircase_index(&e_core(p, e))
                        .ok_or_else(|| Error::Invariant(format!("the e-core of weakly cuspidal {p} is not a 2-core")))?
                }
                UnipotentLabel::Symbol(s) => s.t(),
            };
            parameters.push((t, hecke_parameters(g, t)));
        }
        let cuspidal_dim = if kernel {
            Some(hw_kernel(&g.tower(), n, g.spec.e().unwrap() as usize)?.dimension)
        } else {
            None
        };
        out.push(CuspidalRank { rank: n, weakly: here, parameters, cuspidal_dim });
    }
    Ok(out)
}

/// A cuspidal partition of m for GL: (1^{m_{-1}}, e^{m_0}, (eℓ)^{m_1}, …).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlCuspidal {
    pub partition: Partition,
    /// m_{-1}, m_0, m_1, …
    pub multiplicities: Vec<usize>,
}

impl GlCuspidal {
    /// The ramified Hecke algebra as a tensor product.
    pub fn factorization(&self) -> String {
        let mut parts = vec![format!("H^{{Q_t;q^2}}_{{k,{}}}", self.multiplicities[0])];
        for &m in &self.multiplicities[1..] {
            if m > 0 {
                parts.push(format!("H^{{1,1;1}}_{{k,{m}}}"));
            }
        }
        parts.join(" ⊗ ")
    }
}

pub fn gl_cuspidal_partitions(m: usize, e: usize, ell: usize) -> Result<Vec<GlCuspidal>> {
    if e < 2 {
        return invalid("e must be at least 2");
    }
    if ell < 2 || (2..ell).take_while(|k| k * k <= ell).any(|k| ell % k == 0) {
        return invalid("ℓ must be a prime");
    }
    // Sizes e, eℓ, eℓ², … up to m.
    let mut sizes = Vec::new();
    let mut s = e;
    while s <= m {
        sizes.push(s);
        s *= ell;
    }
    let mut out = Vec::new();
    fn rec(j: usize, rest: usize, sizes: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == sizes.len() {
            let mut v = vec![rest];
            v.extend(cur.iter().copied());
            out.push(v);
            return;
        }
        for c in 0..=rest / sizes[j] {
            cur.push(c);
            rec(j + 1, rest - c * sizes[j], sizes, cur, out);
            cur.pop();
        }
    }
    let mut mults = Vec::new();
    rec(0, m, &sizes, &mut Vec::new(), &mut mults);
    for mv in mults {
        let mut parts = Vec::new();
        for (j, &c) in mv[1..].iter().enumerate() {
            parts.extend(std::iter::repeat(sizes[j]).take(c));
        }
        parts.extend(std::iter::repeat(1).take(mv[0]));
        out.push(GlCuspidal { partition: Partition::new(parts)?, multiplicities: mv });
    }
    out.sort_by(|a, b| a.partition.cmp(&b.partition));
    Ok(out)
}
