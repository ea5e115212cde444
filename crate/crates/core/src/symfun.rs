//! Symmetric functions in the power-sum basis, Murnaghan–Nakayama characters,
//! the Heisenberg operators b/b* and the scaling maps F^a, F_a.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::partition::{beads_above, from_complete_beads, partitions, safe_floor, Partition};

/// Coefficients in the φ-basis, φ_λ ↦ c_λ.
pub type PhiVector = BTreeMap<Partition, BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Σ c_λ p_λ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::p(&Partition::empty())
    }

    /// The power sum p_λ.
    pub fn p(lambda: &Partition) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda.clone(), BigRational::one());
        f
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn plus(&self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn minus(&self, o: &SymFunc) -> SymFunc {
        self.plus(&o.scaled(&rat(-1)))
    }

    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// The degree-n component.
    pub fn homogeneous(&self, n: usize) -> SymFunc {
        SymFunc { terms: self.terms.iter().filter(|(k, _)| k.size() == n).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    /// {"p":[["2,1","1/2"],...]}
    pub fn to_json(&self) -> Value {
        let p: Vec<Value> = self.terms.iter().map(|(k, v)| json!([k.to_string(), v.to_string()])).collect();
        json!({ "p": p })
    }

    pub fn from_json(v: &Value) -> Result<SymFunc> {
        let bad = || Error::Parse("malformed symmetric function JSON".into());
        let mut f = SymFunc::zero();
        for e in v.get("p").and_then(Value::as_array).ok_or_else(bad)? {
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let lam: Partition = pair[0].as_str().ok_or_else(bad)?.parse()?;
            let c: BigRational = pair[1].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            f.add_term(lam, c);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.terms.iter().map(|(k, v)| format!("{v}·p[{k}]")).collect();
        write!(f, "{}", s.join(" + "))
    }
}

/// z_λ = Π k^{m_k} m_k!.
pub fn z(lambda: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in lambda.parts() {
        *counts.entry(k).or_default() += 1;
    }
    for (k, m) in counts {
        for j in 1..=m {
            out *= BigInt::from(k) * BigInt::from(j);
        }
    }
    out
}

/// Moves of one bead of β_0(λ) by k: (new partition, (-1)^{beads strictly between}).
/// `up` adds a k-ribbon, otherwise one is removed.
fn ribbon_moves(lambda: &Partition, k: usize, up: bool) -> Vec<(Partition, i64)> {
    let k = k as i64;
    let floor = safe_floor(lambda, 0, k + 1);
    let beads = beads_above(lambda, 0, floor);
    let set: BTreeSet<i64> = beads.iter().copied().collect();
    let mut out = Vec::new();
    for &b in &beads {
        let to = if up { b + k } else { b - k };
        if to < floor || set.contains(&to) {
            continue;
        }
        let (lo, hi) = if up { (b, to) } else { (to, b) };
        let between = set.range(lo + 1..hi).count();
        let mut nb: Vec<i64> = beads.iter().map(|&x| if x == b { to } else { x }).collect();
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let (mu, _) = from_complete_beads(&nb);
        out.push((mu, if between % 2 == 0 { 1 } else { -1 }));
    }
    out.sort();
    out
}

/// χ^λ_ν by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() != nu.size() {
        return invalid(format!("χ^λ_ν needs |λ| = |ν|, got {} and {}", lambda.size(), nu.size()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, nu.parts(), &mut memo))
}

fn mn_rec(lambda: &Partition, nu: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    if nu.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), nu.len())) {
        return v;
    }
    let v = ribbon_moves(lambda, nu[0], false).iter().map(|(mu, s)| s * mn_rec(mu, &nu[1..], memo)).sum();
    memo.insert((lambda.clone(), nu.len()), v);
    v
}

/// The character table of S_m, rows and columns in the order of [`partitions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub degree: usize,
    pub labels: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(m: usize) -> Self {
        let labels = partitions(m);
        let values = labels
            .iter()
            .map(|l| {
                labels
                    .iter()
                    .map(|nu| {
                        let mut memo = HashMap::new();
                        mn_rec(l, nu.parts(), &mut memo)
                    })
                    .collect()
            })
            .collect();
        CharTable { degree: m, labels, values }
    }

    fn pos(&self, p: &Partition) -> Option<usize> {
        self.labels.binary_search_by(|x| p.cmp(x)).ok()
    }

    pub fn value(&self, lambda: &Partition, nu: &Partition) -> Option<i64> {
        Some(self.values[self.pos(lambda)?][self.pos(nu)?])
    }

    /// Σ_ν z_ν^{-1} χ^λ_ν χ^μ_ν for all λ, μ.
    pub fn orthogonality_matrix(&self) -> Vec<Vec<BigRational>> {
        let zs: Vec<BigRational> = self.labels.iter().map(|nu| BigRational::from_integer(z(nu))).collect();
        let n = self.labels.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        (0..n).fold(BigRational::zero(), |acc, c| {
                            acc + rat(self.values[a][c] * self.values[b][c]) / &zs[c]
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// φ_λ = Σ_ν z_ν^{-1} χ^λ_ν p_ν.
pub fn phi(lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::zero();
    let mut memo = HashMap::new();
    for nu in partitions(lambda.size()) {
        memo.clear();
        let c = mn_rec(lambda, nu.parts(), &mut memo);
        if c != 0 {
            f.add_term(nu.clone(), rat(c) / BigRational::from_integer(z(&nu)));
        }
    }
    f
}

/// Expansion in the φ-basis: the coefficient of φ_λ is ⟨f, φ_λ⟩ = Σ_ν c_ν χ^λ_ν.
pub fn to_phi(f: &SymFunc) -> PhiVector {
    let mut out = PhiVector::new();
    for n in f.degrees() {
        let table = CharTable::new(n);
        for (a, lam) in table.labels.iter().enumerate() {
            let mut c = BigRational::zero();
            for (nu, v) in f.homogeneous(n).terms() {
                let col = table.pos(nu).expect("partition of n");
                c += v * rat(table.values[a][col]);
            }
            if !c.is_zero() {
                out.insert(lam.clone(), c);
            }
        }
    }
    out
}

/// Σ c_λ φ_λ back in power sums.
pub fn from_phi(v: &PhiVector) -> SymFunc {
    v.iter().fold(SymFunc::zero(), |acc, (lam, c)| acc.plus(&phi(lam).scaled(c)))
}

/// The Hall form with ⟨p_ν, p_μ⟩ = z_ν δ_{νμ}.
pub fn hall(f: &SymFunc, g: &SymFunc) -> BigRational {
    f.terms
        .iter()
        .filter_map(|(k, v)| g.terms.get(k).map(|w| v * w * BigRational::from_integer(z(k))))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// b_λ: multiplication by p_λ.
pub fn b(lambda: &Partition, f: &SymFunc) -> SymFunc {
    SymFunc::p(lambda).mul(f)
}

/// b*_n = n ∂/∂p_n.
fn b_star_part(n: usize, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (k, v) in &f.terms {
        let m = k.multiplicity(n);
        if m == 0 {
            continue;
        }
        let mut parts = k.parts().to_vec();
        let pos = parts.iter().position(|&x| x == n).unwrap();
        parts.remove(pos);
        out.add_term(Partition::new(parts).expect("parts stay sorted"), v * rat((n * m) as i64));
    }
    out
}

/// b*_λ, the Hall adjoint of b_λ.
pub fn b_star(lambda: &Partition, f: &SymFunc) -> SymFunc {
    lambda.parts().iter().fold(f.clone(), |g, &n| b_star_part(n, &g))
}

/// p_k φ_λ in the φ-basis, by adding k-ribbons with sign (-1)^{height}.
pub fn p_times_phi(lambda: &Partition, k: usize) -> PhiVector {
    collect(ribbon_moves(lambda, k, true))
}

/// b*_k φ_λ in the φ-basis, by removing k-ribbons.
pub fn p_star_phi(lambda: &Partition, k: usize) -> PhiVector {
    collect(ribbon_moves(lambda, k, false))
}

fn collect(moves: Vec<(Partition, i64)>) -> PhiVector {
    let mut out = PhiVector::new();
    for (mu, s) in moves {
        let e = out.entry(mu).or_insert_with(BigRational::zero);
        *e += rat(s);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// b_{2n}(φ_λ) = Σ (-1)^{N(λ,x,2n)} φ_ν, with N the number of beads of β_0(λ) strictly inside (x, x+2n).
pub fn b_level1_on_phi(lambda: &Partition, n: usize) -> PhiVector {
    p_times_phi(lambda, 2 * n)
}

/// F^a: p_λ ↦ p_{aλ}.
pub fn frob_up(a: usize, f: &SymFunc) -> Result<SymFunc> {
    if a == 0 {
        return invalid("F^a needs a ≥ 1");
    }
    let mut out = SymFunc::zero();
    for (k, v) in &f.terms {
        out.add_term(k.scaled(a), v.clone());
    }
    Ok(out)
}

/// F_a: p_{aμ} ↦ (z_{aμ}/z_μ) p_μ, and p_λ ↦ 0 unless every part of λ is divisible by a.
pub fn frob_down(a: usize, f: &SymFunc) -> Result<SymFunc> {
    if a == 0 {
        return invalid("F_a needs a ≥ 1");
    }
    let mut out = SymFunc::zero();
    for (k, v) in &f.terms {
        if k.parts().iter().any(|&x| x % a != 0) {
            continue;
        }
        let mu = Partition::new(k.parts().iter().map(|&x| x / a).collect()).expect("sorted");
        let r = BigRational::new(z(k), z(&mu));
        out.add_term(mu, v * r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&p("1,1,1,1"), &p("4")).unwrap(), -1);
        assert_eq!(mn_character(&p("3"), &p("2,1")).unwrap(), 1);
        assert!(mn_character(&p("3"), &p("2")).is_err());
        let t = CharTable::new(4);
        assert_eq!(t.labels.len(), 5);
        assert_eq!(t.value(&p("2,2"), &p("1,1,1,1")), Some(2));
    }

    #[test]
    fn phi_examples() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(phi(&p("1")), SymFunc::p(&p("1")));
        let p11 = SymFunc::p(&p("1,1"));
        let p2 = SymFunc::p(&p("2"));
        assert_eq!(phi(&p("2")), p11.plus(&p2).scaled(&half));
        assert_eq!(phi(&p("1,1")), p11.minus(&p2).scaled(&half));
        assert_eq!(to_phi(&phi(&p("3,1"))), PhiVector::from([(p("3,1"), rat(1))]));
    }

    #[test]
    fn heisenberg_examples() {
        let one = SymFunc::one();
        assert_eq!(b(&p("3"), &one), SymFunc::p(&p("3")));
        let n = p("2");
        let comm = b(&n, &b_star(&n, &one)).minus(&b_star(&n, &b(&n, &one)));
        assert_eq!(comm, one.scaled(&rat(-2)));
        assert_eq!(b_star(&p("2"), &phi(&p("2"))), one);
    }

    #[test]
    fn ribbons() {
        let v = b_level1_on_phi(&Partition::empty(), 1);
        assert_eq!(v, PhiVector::from([(p("2"), rat(1)), (p("1,1"), rat(-1))]));
        assert_eq!(to_phi(&SymFunc::p(&p("2"))), v);
    }

    #[test]
    fn scaling_maps() {
        assert_eq!(frob_up(2, &SymFunc::p(&p("1"))).unwrap(), SymFunc::p(&p("2")));
        assert_eq!(frob_down(2, &SymFunc::p(&p("2"))).unwrap(), SymFunc::p(&p("1")).scaled(&rat(2)));
        assert!(frob_down(2, &SymFunc::p(&p("1"))).unwrap().is_zero());
        assert!(frob_up(0, &SymFunc::one()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = phi(&p("2,1"));
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }
}
