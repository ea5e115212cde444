//! Charged Fock spaces F(Q): residues of boxes, Chevalley operators, weights and the pairing.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::partition::{multipartition_text, sigma, ChargedMultipartition, Partition};
use crate::residue::{QuiverSpec, Residue};
use crate::weight::{alpha, delta_shift, Weight};

/// A box (x, y) of component p, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
    pub p: usize,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.p)
    }
}

/// The Fock space F(Q) with Q_p = b_p·v^{c_p}.
///
/// Each base b_p is 1 or an affine node, so c_p is also the charge of Q_p
/// relative to the affine node of its component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockSpace {
    spec: QuiverSpec,
    bases: Vec<Residue>,
    charge: Vec<i64>,
}

impl FockSpace {
    /// F(Q) with every base equal to 1.
    pub fn new(spec: QuiverSpec, charge: Vec<i64>) -> Result<Self> {
        let bases = vec![Residue::one(); charge.len()];
        Self::with_bases(spec, bases, charge)
    }

    pub fn with_bases(spec: QuiverSpec, bases: Vec<Residue>, charge: Vec<i64>) -> Result<Self> {
        if charge.is_empty() || bases.len() != charge.len() {
            return invalid("need l ≥ 1 and one base per charge");
        }
        let ok = |b: &Residue| *b == Residue::one() || !spec.is_finite() || spec.is_affine(*b);
        if !bases.iter().all(ok) {
            return invalid("each base must be 1 or an affine node");
        }
        Ok(FockSpace { spec, bases, charge })
    }

    /// The level-2 space F(Q_t) of the unitary tower.
    pub fn gu_series(spec: QuiverSpec, t: usize) -> Result<Self> {
        if !spec.is_gu() || spec.kind() == crate::residue::Kind::GuCircle {
            return invalid("unitary series need a unitary quiver");
        }
        let (s1, s2) = sigma(t);
        match spec.e() {
            Some(e) if e % 2 == 1 => Self::new(spec, vec![s1 - (e as i64 + 1) / 2, s2]),
            _ => {
                let b = Residue::neg_q_pow(-1, &spec);
                Self::with_bases(spec, vec![b, Residue::one()], vec![s1, s2])
            }
        }
    }

    /// The level-2 space F(Q_t) of the B/C tower.
    pub fn bc_series(spec: QuiverSpec, t: usize) -> Result<Self> {
        if !spec.is_bc() {
            return invalid("B/C series need a B/C quiver");
        }
        let t = t as i64;
        match spec.f() {
            Some(f) if f % 2 == 0 => {
                let d = f as i64 / 2;
                let c = if t % 2 == 0 { vec![t, d - 1 - t] } else { vec![t - d, -1 - t] };
                Self::new(spec, c)
            }
            _ => {
                let m = Residue::normalize(-1, 0, &spec)?;
                let (b1, b2) = if t % 2 == 0 { (Residue::one(), m) } else { (m, Residue::one()) };
                Self::with_bases(spec, vec![b1, b2], vec![t, -1 - t])
            }
        }
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }

    pub fn charge(&self) -> &[i64] {
        &self.charge
    }

    pub fn bases(&self) -> &[Residue] {
        &self.bases
    }

    /// Q_p for p = 1..l.
    pub fn parameters(&self) -> Vec<Residue> {
        self.bases.iter().zip(&self.charge).map(|(b, &c)| b.times_v_pow(c, &self.spec)).collect()
    }

    /// ct(A) = c_p + y - x.
    pub fn content(&self, c: Cell) -> i64 {
        self.charge[c.p - 1] + c.y as i64 - c.x as i64
    }

    /// res(A) = b_p·v^{ct(A)}.
    pub fn residue(&self, c: Cell) -> Residue {
        self.bases[c.p - 1].times_v_pow(self.content(c), &self.spec)
    }

    fn check(&self, mu: &[Partition]) {
        assert_eq!(mu.len(), self.level(), "multipartition level does not match the Fock space");
    }

    pub fn addable(&self, mu: &[Partition]) -> Vec<Cell> {
        self.check(mu);
        let mut out = Vec::new();
        for (p, part) in mu.iter().enumerate() {
            out.extend(part.addable_cells().into_iter().map(|(x, y)| Cell { x, y, p: p + 1 }));
        }
        out
    }

    pub fn removable(&self, mu: &[Partition]) -> Vec<Cell> {
        self.check(mu);
        let mut out = Vec::new();
        for (p, part) in mu.iter().enumerate() {
            out.extend(part.removable_cells().into_iter().map(|(x, y)| Cell { x, y, p: p + 1 }));
        }
        out
    }

    /// Addable boxes of residue i.
    pub fn addable_boxes(&self, mu: &[Partition], i: Residue) -> Vec<Cell> {
        self.addable(mu).into_iter().filter(|&c| self.residue(c) == i).collect()
    }

    /// Removable boxes of residue i.
    pub fn removable_boxes(&self, mu: &[Partition], i: Residue) -> Vec<Cell> {
        self.removable(mu).into_iter().filter(|&c| self.residue(c) == i).collect()
    }

    /// Residues of all boxes, with multiplicity n_i(μ, Q).
    pub fn residue_counts(&self, mu: &[Partition]) -> BTreeMap<Residue, i64> {
        self.check(mu);
        let mut out = BTreeMap::new();
        for (p, part) in mu.iter().enumerate() {
            for (x, y) in part.cells() {
                *out.entry(self.residue(Cell { x, y, p: p + 1 })).or_insert(0) += 1;
            }
        }
        out
    }

    /// wt(|μ, Q⟩) = Σ_p (Λ_{Q_p} - Δ(c_p, N)δ) - Σ_i n_i α_i; no δ in characteristic 0.
    pub fn weight_of(&self, mu: &[Partition]) -> Weight {
        let mut w = Weight::zero();
        for q in self.parameters() {
            w.add_lambda(q, 1);
        }
        if let Some(n) = self.spec.component_size() {
            for &c in &self.charge {
                w.delta -= delta_shift(c, n as i64);
            }
        }
        for (i, n) in self.residue_counts(mu) {
            w = &w - &alpha(i, &self.spec).scaled(n);
        }
        if !self.spec.is_finite() {
            w.delta = Rational64::zero();
        }
        w
    }

    pub fn charged(&self, mu: &[Partition]) -> ChargedMultipartition {
        ChargedMultipartition { components: mu.to_vec(), charge: self.charge.clone() }
    }

    pub fn vector(&self) -> FockVector {
        FockVector { space: self.clone(), terms: BTreeMap::new() }
    }

    /// The basis vector |μ, Q⟩.
    pub fn basis(&self, mu: &[Partition]) -> FockVector {
        self.check(mu);
        let mut v = self.vector();
        v.terms.insert(mu.to_vec(), BigRational::one());
        v
    }
}

fn add_cell(mu: &[Partition], c: Cell) -> Vec<Partition> {
    let mut out = mu.to_vec();
    out[c.p - 1] = out[c.p - 1].with_cell_added(c.x);
    out
}

fn remove_cell(mu: &[Partition], c: Cell) -> Vec<Partition> {
    let mut out = mu.to_vec();
    out[c.p - 1] = out[c.p - 1].with_cell_removed(c.x);
    out
}

impl FockSpace {
    /// μ with the box c added (c must be addable).
    pub fn add(&self, mu: &[Partition], c: Cell) -> Vec<Partition> {
        add_cell(mu, c)
    }

    /// μ with the box c removed (c must be removable).
    pub fn remove(&self, mu: &[Partition], c: Cell) -> Vec<Partition> {
        remove_cell(mu, c)
    }
}

/// A finite rational combination of standard basis vectors of one Fock space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    space: FockSpace,
    terms: BTreeMap<Vec<Partition>, BigRational>,
}

impl FockVector {
    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &[Partition]) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mu: Vec<Partition>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scaled(&self, c: &BigRational) -> FockVector {
        let mut out = self.space.vector();
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    pub fn plus(&self, other: &FockVector) -> Result<FockVector> {
        if self.space != other.space {
            return invalid("vectors live in different Fock spaces");
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &FockVector) -> Result<FockVector> {
        self.plus(&other.scaled(&-BigRational::one()))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Orthonormal pairing of standard basis vectors.
    pub fn pairing(&self, other: &FockVector) -> Result<BigRational> {
        if self.space != other.space {
            return invalid("pairing needs vectors of the same Fock space");
        }
        let mut s = BigRational::zero();
        for (k, v) in &self.terms {
            if let Some(w) = other.terms.get(k) {
                s += v * w;
            }
        }
        Ok(s)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(k, v)| format!("{v}|{}⟩", multipartition_text(k))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// f_i: sum over addable i-boxes.
pub fn apply_f(x: &FockVector, i: Residue) -> FockVector {
    let sp = &x.space;
    let mut out = sp.vector();
    for (mu, c) in &x.terms {
        for cell in sp.addable_boxes(mu, i) {
            out.add_term(add_cell(mu, cell), c.clone());
        }
    }
    debug_assert!(!x.is_integral() || out.is_integral());
    out
}

/// e_i: sum over removable i-boxes.
pub fn apply_e(x: &FockVector, i: Residue) -> FockVector {
    let sp = &x.space;
    let mut out = sp.vector();
    for (mu, c) in &x.terms {
        for cell in sp.removable_boxes(mu, i) {
            out.add_term(remove_cell(mu, cell), c.clone());
        }
    }
    debug_assert!(!x.is_integral() || out.is_integral());
    out
}
