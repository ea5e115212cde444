//! Partitions, β-sets, hooks, cores and quotients, and the bijection τ_l.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// An integer partition stored as a non-increasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts not non-increasing: {parts:?}"));
        }
        if parts.contains(&0) {
            return invalid("zero part before a positive part");
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase Δ_t = (t, t-1, ..., 1).
    pub fn staircase(t: usize) -> Self {
        Partition { parts: (1..=t).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// λ_i with 1-based index, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(1);
        let parts = (1..=n).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Cells (x, y), 1-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |y| (i + 1, y)))
    }

    /// Cells that can be added, ordered by row.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..=self.len() + 1 {
            let here = self.part(x);
            if x == 1 || self.part(x - 1) > here {
                out.push((x, here + 1));
            }
        }
        out
    }

    /// Cells that can be removed, ordered by row.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..=self.len() {
            if self.part(x + 1) < self.part(x) {
                out.push((x, self.part(x)));
            }
        }
        out
    }

    /// Adds a cell at the end of row `x`; the caller guarantees addability.
    pub fn with_cell_added(&self, x: usize) -> Partition {
        let mut parts = self.parts.clone();
        if x > parts.len() {
            parts.push(1);
        } else {
            parts[x - 1] += 1;
        }
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// Removes the last cell of row `x`; the caller guarantees removability.
    pub fn with_cell_removed(&self, x: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[x - 1] -= 1;
        if parts[x - 1] == 0 {
            parts.pop();
        }
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// Parts scaled by `a`.
    pub fn scaled(&self, a: usize) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p * a).collect() }
    }

    /// Union of parts (as multisets).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiplicity of `k` as a part.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Lusztig's a-function Σ (i-1) λ_i.
    pub fn a_value(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Dominance order: all partial sums of `self` bounded by those of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return invalid("dominance order needs partitions of equal size");
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

/// All `l`-multipartitions of total size `n`.
pub fn multipartitions(n: usize, l: usize) -> Vec<Vec<Partition>> {
    if l == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for head in partitions(first) {
            for tail in multipartitions(n - first, l - 1) {
                let mut v = Vec::with_capacity(l);
                v.push(head.clone());
                v.extend(tail);
                out.push(v);
            }
        }
    }
    out
}

/// A finite window of the β-set β_d(λ): its first `beads.len()` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    pub charge: i64,
    pub beads: Vec<i64>,
}

/// The first `n_beads` elements λ_u + d + 1 - u of β_d(λ).
pub fn beta_set(lambda: &Partition, d: i64, n_beads: usize) -> Result<BetaSet> {
    if n_beads < lambda.len() {
        return invalid(format!("{n_beads} beads cannot hold {} parts", lambda.len()));
    }
    let beads = (1..=n_beads).map(|u| lambda.part(u) as i64 + d + 1 - u as i64).collect();
    Ok(BetaSet { charge: d, beads })
}

/// Recovers (λ, d) from a bead window whose tail is consecutive.
pub fn from_beta_set(b: &BetaSet) -> Result<(Partition, i64)> {
    from_beads(&b.beads)
}

/// Recovers (λ, d) from a strictly decreasing bead window; every integer
/// below the last bead is taken to be a bead.
pub fn from_beads(beads: &[i64]) -> Result<(Partition, i64)> {
    if beads.is_empty() {
        return invalid("empty bead window");
    }
    if beads.windows(2).any(|w| w[0] <= w[1]) {
        return invalid("beads not strictly decreasing");
    }
    let n = beads.len();
    if n >= 2 && beads[n - 2] != beads[n - 1] + 1 {
        return invalid("bead window tail is not consecutive");
    }
    Ok(from_complete_beads(beads))
}

/// Same as [`from_beads`] without the tail check.
pub(crate) fn from_complete_beads(beads: &[i64]) -> (Partition, i64) {
    let n = beads.len() as i64;
    let d = beads[beads.len() - 1] + n - 1;
    let parts = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - d - 1 + (i as i64 + 1)) as usize)
        .collect();
    (Partition::new(parts).expect("bead window yields a partition"), d)
}

/// All beads of β_d(λ) that are ≥ `floor`, decreasing.
pub fn beads_above(lambda: &Partition, d: i64, floor: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut u = 1usize;
    loop {
        let b = lambda.part(u) as i64 + d + 1 - u as i64;
        if b < floor {
            break;
        }
        out.push(b);
        u += 1;
    }
    out
}

/// A floor safely below every gap of β_d(λ), with `extra` consecutive beads of slack.
pub(crate) fn safe_floor(lambda: &Partition, d: i64, extra: i64) -> i64 {
    d - lambda.len() as i64 - extra
}

/// e-hooks (x, x+e) of (λ, d): x+e ∈ β_d(λ), x ∉ β_d(λ). Sorted by x.
pub fn e_hooks(lambda: &Partition, d: i64, e: usize) -> Vec<(i64, i64)> {
    assert!(e >= 1, "e must be positive");
    let e = e as i64;
    let floor = safe_floor(lambda, d, 1);
    let beads = beads_above(lambda, d, floor);
    let set: BTreeSet<i64> = beads.iter().copied().collect();
    let mut out: Vec<(i64, i64)> = beads
        .iter()
        .filter_map(|&b| {
            let x = b - e;
            (x >= floor && !set.contains(&x)).then_some((x, b))
        })
        .collect();
    out.sort();
    out
}

/// Removes the e-hook (x, x+e) from (λ, d).
pub fn remove_hook(lambda: &Partition, d: i64, x: i64, e: usize) -> Result<Partition> {
    let floor = safe_floor(lambda, d, 1).min(x - 1);
    let mut beads = beads_above(lambda, d, floor);
    let top = x + e as i64;
    let pos = beads.iter().position(|&b| b == top);
    if pos.is_none() || beads.contains(&x) || x < floor {
        return invalid(format!("({x},{top}) is not an {e}-hook"));
    }
    beads[pos.unwrap()] = x;
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let (p, c) = from_complete_beads(&beads);
    debug_assert_eq!(c, d);
    Ok(p)
}

/// The e-core, obtained by removing hooks greedily from the largest x down.
pub fn e_core(lambda: &Partition, e: usize) -> Partition {
    let mut cur = lambda.clone();
    loop {
        let hooks = e_hooks(&cur, 0, e);
        match hooks.last() {
            None => return cur,
            Some(&(x, _)) => cur = remove_hook(&cur, 0, x, e).expect("listed hook"),
        }
    }
}

/// e-core, e-quotient (the components of τ_e(λ, 0)) and e-weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub weight: usize,
}

pub fn e_core_quotient(lambda: &Partition, e: usize) -> CoreQuotient {
    let core = e_core(lambda, e);
    let quotient = tau(lambda, 0, e).components;
    let weight = quotient.iter().map(Partition::size).sum();
    debug_assert_eq!(lambda.size(), core.size() + e * weight);
    CoreQuotient { core, quotient, weight }
}

/// e-weight w_e(λ).
pub fn e_weight(lambda: &Partition, e: usize) -> usize {
    (lambda.size() - e_core(lambda, e).size()) / e
}

/// A charged l-partition (μ, s).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedMultipartition {
    pub components: Vec<Partition>,
    pub charge: Vec<i64>,
}

impl ChargedMultipartition {
    pub fn new(components: Vec<Partition>, charge: Vec<i64>) -> Result<Self> {
        if components.is_empty() || components.len() != charge.len() {
            return invalid("need l ≥ 1 components and l charges");
        }
        Ok(ChargedMultipartition { components, charge })
    }

    pub fn empty(charge: Vec<i64>) -> Self {
        let components = vec![Partition::empty(); charge.len()];
        ChargedMultipartition { components, charge }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

/// Text for a list of components, "2,1/0".
pub fn multipartition_text(components: &[Partition]) -> String {
    components.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("/")
}

/// Parses "2,1/0" into components.
pub fn parse_multipartition(s: &str) -> Result<Vec<Partition>> {
    s.split('/').map(str::parse).collect()
}

impl fmt::Display for ChargedMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.charge.iter().map(|c| c.to_string()).collect();
        write!(f, "{}:{}", s.join(","), multipartition_text(&self.components))
    }
}

impl FromStr for ChargedMultipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (cs, ms) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let charge = cs
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad charge {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let components = parse_multipartition(ms)?;
        ChargedMultipartition::new(components, charge).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Runner index p ∈ {1..l} and position z with x = p - l + l·z.
fn runner(x: i64, l: i64) -> (usize, i64) {
    let r = x.rem_euclid(l);
    let p = if r == 0 { l } else { r };
    (p as usize, (x - p) / l + 1)
}

/// τ_l(λ, d): the l-partition μ and charge s with
/// β_d(λ) = ⊔_p (p - l + l·β_{s_p}(μ^p)).
pub fn tau(lambda: &Partition, d: i64, l: usize) -> ChargedMultipartition {
    assert!(l >= 1, "l must be positive");
    let li = l as i64;
    let floor = safe_floor(lambda, d, 2 * li + 1);
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); l];
    for b in beads_above(lambda, d, floor) {
        let (p, z) = runner(b, li);
        rows[p - 1].push(z);
    }
    let mut components = Vec::with_capacity(l);
    let mut charge = Vec::with_capacity(l);
    for row in rows {
        let (mu, s) = from_complete_beads(&row);
        components.push(mu);
        charge.push(s);
    }
    ChargedMultipartition { components, charge }
}

/// Inverse of [`tau`].
pub fn tau_inv(m: &ChargedMultipartition) -> (Partition, i64) {
    let l = m.level() as i64;
    let low = m
        .components
        .iter()
        .zip(&m.charge)
        .map(|(mu, &s)| safe_floor(mu, s, 2))
        .min()
        .unwrap();
    let mut beads = Vec::new();
    for (p, (mu, &s)) in m.components.iter().zip(&m.charge).enumerate() {
        for z in beads_above(mu, s, low) {
            beads.push(p as i64 + 1 - l + l * z);
        }
    }
    let cut = l * low;
    beads.retain(|&x| x >= cut);
    beads.sort_unstable_by(|a, b| b.cmp(a));
    from_complete_beads(&beads)
}

/// σ_t, the charge of the empty bipartition under τ_2(Δ_t, 0).
pub fn sigma(t: usize) -> (i64, i64) {
    let t = t as i64;
    if t % 2 == 0 {
        (-t / 2, t / 2)
    } else {
        ((1 + t) / 2, -(1 + t) / 2)
    }
}

/// ϖ_t(μ): the partition with 2-core Δ_t and 2-quotient μ.
pub fn varpi(t: usize, mu: &[Partition]) -> Result<Partition> {
    if mu.len() != 2 {
        return invalid("ϖ_t needs a bipartition");
    }
    let (s1, s2) = sigma(t);
    let (lambda, d) = tau_inv(&ChargedMultipartition { components: mu.to_vec(), charge: vec![s1, s2] });
    if d != 0 {
        return Err(Error::Invariant(format!("ϖ_{t} produced charge {d}")));
    }
    Ok(lambda)
}

/// Inverse of ϖ: (t, μ) with λ = ϖ_t(μ).
pub fn varpi_inv(lambda: &Partition) -> (usize, Vec<Partition>) {
    let m = tau(lambda, 0, 2);
    let t = two_core_index(&e_core(lambda, 2));
    debug_assert_eq!((m.charge[0], m.charge[1]), sigma(t));
    (t, m.components)
}

/// t with Δ_t equal to the given 2-core. Panics if it is not a staircase.
pub fn two_core_index(core: &Partition) -> usize {
    let t = core.len();
    assert_eq!(core, &Partition::staircase(t), "not a 2-core");
    t
}

/// t with Δ_t = λ, if λ is a staircase.
pub fn staircase_index(lambda: &Partition) -> Option<usize> {
    let t = lambda.len();
    (lambda == &Partition::staircase(t)).then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(beta_set(&Partition::empty(), 0, 4).unwrap().beads, vec![0, -1, -2, -3]);
        assert_eq!(beta_set(&p("2,1"), 0, 5).unwrap().beads, vec![2, 0, -2, -3, -4]);
        assert_eq!(beta_set(&p("4,2,1"), 0, 5).unwrap().beads, vec![4, 1, -1, -3, -4]);
        assert!(beta_set(&p("4,2,1"), 0, 2).is_err());
    }

    #[test]
    fn from_beta_set_examples() {
        assert_eq!(from_beads(&[2, 0, -2, -3, -4]).unwrap(), (p("2,1"), 0));
        assert_eq!(from_beads(&[0, -1, -2, -3]).unwrap(), (Partition::empty(), 0));
        assert_eq!(from_beads(&[1, 0, -1, -2]).unwrap(), (Partition::empty(), 1));
        assert!(from_beads(&[3, 1]).is_err());
    }

    #[test]
    fn hook_examples() {
        assert!(e_hooks(&Partition::empty(), 0, 3).is_empty());
        // β_0(4,2,1) = {4, 1, -1, -3, ...}: 1 is a bead, so (1, 4) is not a hook.
        assert_eq!(e_hooks(&p("4,2,1"), 0, 3), vec![(-2, 1)]);
        assert!(e_hooks(&p("2,1"), 0, 2).is_empty());
    }

    #[test]
    fn core_examples() {
        let cq = e_core_quotient(&p("4,2,1"), 3);
        assert_eq!(cq.core, p("1"));
        assert_eq!(cq.weight, 2);
        let cq = e_core_quotient(&p("2,1"), 2);
        assert_eq!(cq.core, p("2,1"));
        assert_eq!(cq.weight, 0);
        assert_eq!(cq.quotient, vec![Partition::empty(), Partition::empty()]);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&p("2,1"), 0, 2).charge, vec![-1, 1]);
        assert_eq!(tau(&p("1"), 0, 2).charge, vec![1, -1]);
        assert_eq!(tau(&Partition::empty(), 0, 3).charge, vec![0, 0, 0]);
        let m: ChargedMultipartition = "0,0:1/0".parse().unwrap();
        assert_eq!(tau_inv(&m), (p("1,1"), 0));
    }

    #[test]
    fn varpi_examples() {
        assert_eq!(varpi(2, &[Partition::empty(), Partition::empty()]).unwrap(), p("2,1"));
        assert_eq!(varpi(0, &[p("1"), Partition::empty()]).unwrap(), p("1,1"));
        assert_eq!(varpi(1, &[Partition::empty(), Partition::empty()]).unwrap(), p("1"));
    }

    #[test]
    fn a_value_and_dominance() {
        assert_eq!(Partition::empty().a_value(), 0);
        assert_eq!(p("2,1").a_value(), 1);
        assert_eq!(p("1,1,1").a_value(), 3);
        assert!(p("1,1,1").dominance_leq(&p("3")).unwrap());
        assert!(!p("3").dominance_leq(&p("1,1,1")).unwrap());
        assert!(p("2,2").dominance_leq(&p("3,1")).unwrap());
        assert!(p("2").dominance_leq(&p("1")).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("4,2,1").to_string(), "4,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(""), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        let m: ChargedMultipartition = "-1,1:2,1/3".parse().unwrap();
        assert_eq!(m.to_string(), "-1,1:2,1/3");
    }

    #[test]
    fn counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partition_count(10), 42);
        assert_eq!(multipartitions(2, 2).len(), 5);
    }
}
