//! Charged symbols of odd defect: hooks, cohooks, cores, cocores, a-values and weights.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{invalid, Error, Result};
use crate::fock::FockSpace;
use crate::partition::{beads_above, e_core, from_complete_beads, parse_multipartition, safe_floor, tau, Partition};
use crate::residue::QuiverSpec;
use crate::weight::{sigma_twist, Weight};

/// A pair of charged β-sets {β_a(λ), β_b(ν)} before normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRows {
    pub top: (i64, Partition),
    pub bottom: (i64, Partition),
}

impl TwoRows {
    /// Θ[m]: both charges shifted by m.
    pub fn shifted(&self, m: i64) -> TwoRows {
        TwoRows {
            top: (self.top.0 + m, self.top.1.clone()),
            bottom: (self.bottom.0 + m, self.bottom.1.clone()),
        }
    }

    /// Θ†: rows exchanged.
    pub fn dagger(&self) -> TwoRows {
        TwoRows { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// |a - b|.
    pub fn defect(&self) -> u64 {
        (self.top.0 - self.bottom.0).unsigned_abs()
    }

    pub fn rank(&self) -> u64 {
        let d = self.defect();
        (self.top.1.size() + self.bottom.1.size()) as u64 + d * d / 4
    }

    /// The canonical symbol Θ_t(μ), t ≥ 0, equal to these rows up to shift and exchange.
    pub fn canonical(&self) -> Result<Symbol> {
        let sum = self.top.0 + self.bottom.0;
        if sum.rem_euclid(2) == 0 {
            return invalid("even defect symbols are not supported");
        }
        let m = (-1 - sum) / 2;
        let t = self.top.0 + m;
        if t >= 0 {
            Ok(Symbol { t: t as usize, mu: [self.top.1.clone(), self.bottom.1.clone()] })
        } else {
            Ok(Symbol { t: (-1 - t) as usize, mu: [self.bottom.1.clone(), self.top.1.clone()] })
        }
    }
}

/// Θ_t(μ) = {β_t(μ¹), β_{-1-t}(μ²)} with t ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    t: usize,
    mu: [Partition; 2],
}

/// Which row a bead leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Row {
    X,
    Y,
}

/// A d-hook or d-cohook (x, x+d): the bead at x+d leaves `row` and lands at x,
/// in the same row for a hook and in the other row for a cohook.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Move {
    pub row: Row,
    pub x: i64,
    pub d: usize,
}

impl Symbol {
    pub fn new(t: usize, mu: [Partition; 2]) -> Self {
        Symbol { t, mu }
    }

    /// Θ_t(μ) for any integer t, normalized to t ≥ 0.
    pub fn from_raw(t: i64, mu1: Partition, mu2: Partition) -> Symbol {
        TwoRows { top: (t, mu1), bottom: (-1 - t, mu2) }.canonical().expect("odd defect")
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn mu(&self) -> &[Partition; 2] {
        &self.mu
    }

    pub fn rows(&self) -> TwoRows {
        let t = self.t as i64;
        TwoRows { top: (t, self.mu[0].clone()), bottom: (-1 - t, self.mu[1].clone()) }
    }

    pub fn defect(&self) -> usize {
        2 * self.t + 1
    }

    pub fn rank(&self) -> usize {
        self.mu[0].size() + self.mu[1].size() + self.t * (self.t + 1)
    }

    fn charges(&self) -> (i64, i64) {
        (self.t as i64, -1 - self.t as i64)
    }

    /// A floor below which both rows are full, with `slack` spare beads.
    fn floor(&self, slack: i64) -> i64 {
        let (a, b) = self.charges();
        safe_floor(&self.mu[0], a, 1).min(safe_floor(&self.mu[1], b, 1)) - slack
    }

    fn bead_sets(&self, floor: i64) -> (BTreeSet<i64>, BTreeSet<i64>) {
        let (a, b) = self.charges();
        (
            beads_above(&self.mu[0], a, floor).into_iter().collect(),
            beads_above(&self.mu[1], b, floor).into_iter().collect(),
        )
    }

    /// Rebuilds a symbol from two bead windows that are full below `floor`.
    fn from_sets(x: &BTreeSet<i64>, y: &BTreeSet<i64>) -> Symbol {
        let row = |s: &BTreeSet<i64>| {
            let v: Vec<i64> = s.iter().rev().copied().collect();
            from_complete_beads(&v)
        };
        let (p1, a) = row(x);
        let (p2, b) = row(y);
        debug_assert_eq!(a + b, -1);
        Symbol::from_raw(a, p1, p2)
    }

    /// d-hooks of both rows, sorted.
    pub fn d_hooks(&self, d: usize) -> Vec<Move> {
        assert!(d >= 1, "d must be positive");
        let floor = self.floor(d as i64 + 1);
        let (x, y) = self.bead_sets(floor);
        let di = d as i64;
        let mut out = Vec::new();
        for (row, set) in [(Row::X, &x), (Row::Y, &y)] {
            for &b in set {
                let lo = b - di;
                if lo >= floor && !set.contains(&lo) {
                    out.push(Move { row, x: lo, d });
                }
            }
        }
        out.sort();
        out
    }

    /// d-cohooks: x+d in one row and x missing from the other. Sorted.
    pub fn d_cohooks(&self, d: usize) -> Vec<Move> {
        assert!(d >= 1, "d must be positive");
        let floor = self.floor(d as i64 + 1);
        let (x, y) = self.bead_sets(floor);
        let di = d as i64;
        let mut out = Vec::new();
        for (row, from, to) in [(Row::X, &x, &y), (Row::Y, &y, &x)] {
            for &b in from {
                let lo = b - di;
                if lo >= floor && !to.contains(&lo) {
                    out.push(Move { row, x: lo, d });
                }
            }
        }
        out.sort();
        out
    }

    fn apply(&self, m: Move, cross: bool) -> Result<Symbol> {
        let floor = self.floor(m.d as i64 + 1).min(m.x - 1);
        let (mut x, mut y) = self.bead_sets(floor);
        let top = m.x + m.d as i64;
        let (from, to) = match (m.row, cross) {
            (Row::X, false) => (&mut x, None),
            (Row::Y, false) => (&mut y, None),
            (Row::X, true) => (&mut x, Some(&mut y)),
            (Row::Y, true) => (&mut y, Some(&mut x)),
        };
        let kind = if cross { "cohook" } else { "hook" };
        if !from.remove(&top) {
            return invalid(format!("({}, {top}) is not a {}-{kind} of {self}", m.x, m.d));
        }
        let target = match to {
            Some(t) => t,
            None => from,
        };
        if !target.insert(m.x) {
            return invalid(format!("({}, {top}) is not a {}-{kind} of {self}", m.x, m.d));
        }
        Ok(Symbol::from_sets(&x, &y))
    }

    /// Symbols with one more d-hook (`cross = false`) or d-cohook (`cross = true`).
    /// The move records the bead leaving `row` at x for x+d.
    fn additions(&self, d: usize, cross: bool) -> Vec<(Move, Symbol)> {
        assert!(d >= 1, "d must be positive");
        let floor = self.floor(d as i64 + 1);
        let (x, y) = self.bead_sets(floor);
        let di = d as i64;
        let mut out = Vec::new();
        for row in [Row::X, Row::Y] {
            let (from, other) = if row == Row::X { (&x, &y) } else { (&y, &x) };
            let to = if cross { other } else { from };
            for &b in from {
                if to.contains(&(b + di)) {
                    continue;
                }
                let (mut nx, mut ny) = (x.clone(), y.clone());
                let (f, o) = if row == Row::X { (&mut nx, &mut ny) } else { (&mut ny, &mut nx) };
                f.remove(&b);
                if cross { o } else { f }.insert(b + di);
                out.push((Move { row, x: b, d }, Symbol::from_sets(&nx, &ny)));
            }
        }
        out.sort();
        out
    }

    pub fn add_hooks(&self, d: usize) -> Vec<(Move, Symbol)> {
        self.additions(d, false)
    }

    pub fn add_cohooks(&self, d: usize) -> Vec<(Move, Symbol)> {
        self.additions(d, true)
    }

    pub fn remove_hook(&self, m: Move) -> Result<Symbol> {
        self.apply(m, false)
    }

    pub fn remove_cohook(&self, m: Move) -> Result<Symbol> {
        self.apply(m, true)
    }

    /// Removes d-hooks until none is left.
    pub fn d_core(&self, d: usize) -> Symbol {
        let mut cur = self.clone();
        while let Some(&m) = cur.d_hooks(d).first() {
            cur = cur.remove_hook(m).expect("listed hook");
        }
        cur
    }

    /// Removes d-cohooks until none is left.
    pub fn d_cocore(&self, d: usize) -> Symbol {
        let mut cur = self.clone();
        while let Some(&m) = cur.d_cohooks(d).first() {
            cur = cur.remove_cohook(m).expect("listed cohook");
        }
        cur
    }

    /// The 2d-cores s of (μ¹, t) and r of (μ², d-1-t).
    pub fn cohook_cores(&self, d: usize) -> (Vec<i64>, Vec<i64>) {
        let t = self.t as i64;
        let s = tau(&self.mu[0], t, 2 * d).charge;
        let r = tau(&self.mu[1], d as i64 - 1 - t, 2 * d).charge;
        (s, r)
    }

    /// s + r, constant on cohook classes.
    pub fn cohook_invariant(&self, d: usize) -> Vec<i64> {
        let (s, r) = self.cohook_cores(d);
        s.iter().zip(&r).map(|(a, b)| a + b).collect()
    }

    /// Cocore test through 2d-cores: μ¹, μ² are 2d-cores and r_p - s_p ∈ {0, 1}.
    pub fn is_cocore_by_cores(&self, d: usize) -> bool {
        let (s, r) = self.cohook_cores(d);
        e_core(&self.mu[0], 2 * d) == self.mu[0]
            && e_core(&self.mu[1], 2 * d) == self.mu[1]
            && s.iter().zip(&r).all(|(a, b)| b - a == 0 || b - a == 1)
    }

    /// Both rows merged with multiplicity, non-increasing, down to where the tail is κ_i = -⌊i/2⌋.
    pub fn kappa_sequence(&self) -> Vec<i64> {
        let floor = self.floor(1);
        let (a, b) = self.charges();
        let mut k: Vec<i64> = beads_above(&self.mu[0], a, floor);
        k.extend(beads_above(&self.mu[1], b, floor));
        k.sort_unstable_by(|p, q| q.cmp(p));
        k
    }

    /// a(Θ) = Σ_{i≥1} (i-1)(κ_i + ⌊i/2⌋).
    pub fn a_value(&self) -> i64 {
        self.kappa_sequence()
            .iter()
            .enumerate()
            .map(|(j, &k)| {
                let i = j as i64 + 1;
                (i - 1) * (k + i / 2)
            })
            .sum()
    }

    /// Two-row brace notation down to a window where both rows are full.
    pub fn pretty(&self) -> String {
        let (x, y) = self.bead_sets(self.floor(0));
        let row = |s: &BTreeSet<i64>| s.iter().rev().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
        format!("{{ {} | {} }}", row(&x), row(&y))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}/{}", self.t, self.mu[0], self.mu[1])
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad symbol {s:?}"));
        let (t, m) = s.split_once(':').ok_or_else(bad)?;
        let t: usize = t.trim().parse().map_err(|_| bad())?;
        let mu = parse_multipartition(m)?;
        if mu.len() != 2 {
            return Err(bad());
        }
        Ok(Symbol { t, mu: [mu[0].clone(), mu[1].clone()] })
    }
}

/// κ-dominance order on one series and rank: Θ_t(μ) ≼ Θ_t(λ) iff λ = μ or κ(λ) is strictly dominated by κ(μ).
pub fn symbol_order_leq(a: &Symbol, b: &Symbol) -> Result<bool> {
    if a.t != b.t || a.rank() != b.rank() {
        return invalid("the order compares symbols of one series and one rank");
    }
    if a == b {
        return Ok(true);
    }
    let (ka, kb) = (a.kappa_sequence(), b.kappa_sequence());
    let n = ka.len().max(kb.len());
    let pad = |k: &[i64], i: usize| -> i64 {
        if i < k.len() {
            k[i]
        } else {
            -((i as i64 + 1) / 2)
        }
    };
    let (mut sa, mut sb) = (0i64, 0i64);
    let mut strict = false;
    for i in 0..n {
        sa += pad(&ka, i);
        sb += pad(&kb, i);
        if sb > sa {
            return Ok(false);
        }
        strict |= sb < sa;
    }
    Ok(strict)
}

/// ∇ = Δ(t,2d) + Δ(d-1-t,2d) + t/2.
pub fn nabla(t: i64, d: i64) -> Rational64 {
    use crate::weight::delta_shift;
    delta_shift(t, 2 * d) + delta_shift(d - 1 - t, 2 * d) + Rational64::new(t, 2)
}

fn bc_even(d: usize) -> Result<QuiverSpec> {
    if d < 2 {
        return invalid("symbol weights need f = 2d ≥ 4");
    }
    QuiverSpec::bc(2 * d as u64)
}

/// wt(μ, t) = Λ_{P_t} - Σ n_i(μ, P_t) α_i - ∇ δ with P_t = q^{(t, d-1-t)}; any integer t.
pub fn raw_weight(t: i64, mu: &[Partition; 2], d: usize) -> Result<Weight> {
    let spec = bc_even(d)?;
    let sp = FockSpace::new(spec, vec![t, d as i64 - 1 - t])?;
    let mut w = sp.weight_of(mu);
    w.delta -= Rational64::new(t, 2);
    Ok(w)
}

/// σ_*^t(wt(μ, t)) for any integer t.
pub fn raw_symbol_weight(t: i64, mu: &[Partition; 2], d: usize) -> Result<Weight> {
    let w = raw_weight(t, mu, d)?;
    if t.rem_euclid(2) == 1 {
        sigma_twist(&w, &bc_even(d)?)
    } else {
        Ok(w)
    }
}

/// The weight of the canonical parametrization t ≥ 0, for f = 2d.
pub fn symbol_weight(s: &Symbol, d: usize) -> Result<Weight> {
    raw_symbol_weight(s.t as i64, &s.mu, d)
}

/// The two integer parametrizations (t, μ) and (-1-t, μ†) of a symbol.
pub fn parametrizations(s: &Symbol) -> [(i64, [Partition; 2]); 2] {
    let t = s.t as i64;
    let [a, b] = s.mu.clone();
    [(t, [a.clone(), b.clone()]), (-1 - t, [b, a])]
}

/// s + r for one parametrization.
pub fn raw_cohook_invariant(t: i64, mu: &[Partition; 2], d: usize) -> Vec<i64> {
    let s = tau(&mu[0], t, 2 * d).charge;
    let r = tau(&mu[1], d as i64 - 1 - t, 2 * d).charge;
    s.iter().zip(&r).map(|(a, b)| a + b).collect()
}

/// The set of s + r over both parametrizations.
pub fn cohook_invariants(s: &Symbol, d: usize) -> BTreeSet<Vec<i64>> {
    parametrizations(s).iter().map(|(t, mu)| raw_cohook_invariant(*t, mu, d)).collect()
}

/// The set of weights over both parametrizations; the two differ by ±δ/2.
pub fn symbol_weights(s: &Symbol, d: usize) -> Result<BTreeSet<Weight>> {
    parametrizations(s).iter().map(|(t, mu)| raw_symbol_weight(*t, mu, d)).collect()
}

/// All canonical symbols of odd defect and rank n.
pub fn symbols_of_rank(n: usize) -> Vec<Symbol> {
    let mut out = Vec::new();
    let mut t = 0;
    while t * (t + 1) <= n {
        for mu in crate::partition::multipartitions(n - t * (t + 1), 2) {
            out.push(Symbol { t, mu: [mu[0].clone(), mu[1].clone()] });
        }
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Symbol {
        x.parse().unwrap()
    }

    #[test]
    fn defect_rank() {
        assert_eq!((s("0:0/0").defect(), s("0:0/0").rank()), (1, 0));
        assert_eq!((s("1:0/0").defect(), s("1:0/0").rank()), (3, 2));
        assert_eq!((s("2:1/1").defect(), s("2:1/1").rank()), (5, 8));
        let r = s("2:2,1/3").rows();
        for m in [-3, 0, 4] {
            assert_eq!(r.shifted(m).rank(), r.rank());
            assert_eq!(r.shifted(m).defect(), r.defect());
            assert_eq!(r.shifted(m).canonical().unwrap(), s("2:2,1/3"));
            assert_eq!(r.shifted(m).dagger().canonical().unwrap(), s("2:2,1/3"));
        }
        assert_eq!(Symbol::from_raw(-1, "1".parse().unwrap(), Partition::empty()), s("0:0/1"));
    }

    #[test]
    fn cohook_examples() {
        assert_eq!(s("1:0/0").d_cocore(2), s("0:0/0"));
        assert_eq!(s("2:0/0").d_cocore(4), s("1:0/0"));
        for d in 1..6 {
            assert!(s("0:0/0").d_hooks(d).is_empty());
            assert!(s("0:0/0").d_cohooks(d).is_empty());
            for t in 0..4 {
                let e = Symbol::new(t, [Partition::empty(), Partition::empty()]);
                assert_eq!(e.d_core(d), e);
            }
        }
        // Θ_0((2,2), ∅): X = {2, 1, -2, -3, ...}, Y = {-1, -2, ...}.
        let th = s("0:2,2/0");
        let moves = th.d_cohooks(2);
        assert_eq!(moves, vec![Move { row: Row::X, x: 0, d: 2 }]);
        assert_eq!(th.remove_cohook(moves[0]).unwrap(), s("0:0/2"));
        assert_eq!(th.d_hooks(2), vec![Move { row: Row::X, x: -1, d: 2 }, Move { row: Row::X, x: 0, d: 2 }]);
        assert!(th.remove_cohook(Move { row: Row::Y, x: 5, d: 2 }).is_err());
    }

    #[test]
    fn a_values() {
        assert_eq!(s("0:0/0").a_value(), 0);
        assert_eq!(s("1:0/0").a_value(), 1);
        let k = s("1:0/0").kappa_sequence();
        assert_eq!(&k[..4], &[1, 0, -1, -2]);
    }

    #[test]
    fn nabla_values() {
        assert_eq!(nabla(0, 2), Rational64::from_integer(0));
        assert_eq!(nabla(1, 2), Rational64::new(1, 2));
    }

    #[test]
    fn order_examples() {
        let a = s("0:2/0");
        assert!(symbol_order_leq(&a, &a).unwrap());
        assert!(symbol_order_leq(&a, &s("1:0/0")).is_err());
    }

    #[test]
    fn text() {
        assert_eq!(s("1:2,1/3").to_string(), "1:2,1/3");
        assert_eq!(s("0:0/0").pretty(), "{ 0 -1 -2 | -1 -2 }");
        assert!("1:2".parse::<Symbol>().is_err());
    }
}
