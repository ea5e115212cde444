//! Vertex sets I(v) inside k^×, generated by q and -1, with canonical forms.
//!
//! Only the orders of q, -q and q² enter; the field itself never appears.
//! A residue is stored as (ε, k), meaning ε·q^k.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Unitary groups in characteristic zero: vertices (-q)^ℤ, arrows ×q².
    GuChar0,
    /// Unitary groups modulo ℓ.
    GuModL,
    /// Types B/C in characteristic zero: vertices ±q^ℤ, arrows ×q.
    BcChar0,
    /// Types B/C modulo ℓ.
    BcModL,
    /// The auxiliary quiver I_e(-q) of the unitary tower: vertices (-q)^ℤ, arrows ×(-q).
    GuCircle,
}

/// Arithmetic data of a quiver: the kind and the order f of q (None in characteristic zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuiverSpec {
    kind: Kind,
    f: Option<u64>,
}

/// Order of -q given the order f of q.
fn order_of_neg_q(f: u64) -> u64 {
    if f % 2 == 1 {
        2 * f
    } else if f % 4 == 0 {
        f
    } else {
        f / 2
    }
}

/// Order f of q given the order e of -q.
fn f_from_e(e: u64) -> u64 {
    if e % 2 == 1 {
        2 * e
    } else if e % 4 == 0 {
        e
    } else {
        e / 2
    }
}

impl QuiverSpec {
    /// Unitary groups modulo ℓ, given e = order of -q.
    pub fn gu(e: u64) -> Result<Self> {
        Self::gu_kind(Kind::GuModL, e)
    }

    /// The circle quiver I_e(-q) paired with [`QuiverSpec::gu`].
    pub fn gu_circle(e: u64) -> Result<Self> {
        Self::gu_kind(Kind::GuCircle, e)
    }

    fn gu_kind(kind: Kind, e: u64) -> Result<Self> {
        if e < 2 {
            return invalid(format!("e = {e} is too small"));
        }
        let f = f_from_e(e);
        if f < 3 {
            return invalid(format!("e = {e} forces q of order {f} < 3"));
        }
        Ok(QuiverSpec { kind, f: Some(f) })
    }

    /// Types B/C modulo ℓ, given f = order of q.
    pub fn bc(f: u64) -> Result<Self> {
        if f < 3 {
            return invalid(format!("f = {f} must be at least 3"));
        }
        Ok(QuiverSpec { kind: Kind::BcModL, f: Some(f) })
    }

    pub fn gu_char0() -> Self {
        QuiverSpec { kind: Kind::GuChar0, f: None }
    }

    pub fn bc_char0() -> Self {
        QuiverSpec { kind: Kind::BcChar0, f: None }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Order of q.
    pub fn f(&self) -> Option<u64> {
        self.f
    }

    /// Order of -q.
    pub fn e(&self) -> Option<u64> {
        self.f.map(order_of_neg_q)
    }

    /// Order of q².
    pub fn d(&self) -> Option<u64> {
        self.f.map(|f| if f % 2 == 0 { f / 2 } else { f })
    }

    pub fn is_finite(&self) -> bool {
        self.f.is_some()
    }

    /// Vertices live in (-q)^ℤ.
    pub fn is_gu(&self) -> bool {
        matches!(self.kind, Kind::GuChar0 | Kind::GuModL | Kind::GuCircle)
    }

    pub fn is_bc(&self) -> bool {
        !self.is_gu()
    }

    /// The quiver step v as (sign, exponent of q).
    pub fn step(&self) -> (i8, i64) {
        match self.kind {
            Kind::GuChar0 | Kind::GuModL => (1, 2),
            Kind::BcChar0 | Kind::BcModL => (1, 1),
            Kind::GuCircle => (-1, 1),
        }
    }

    /// Number of vertices in each connected component (the order of v).
    pub fn component_size(&self) -> Option<u64> {
        match self.kind {
            Kind::GuChar0 | Kind::BcChar0 => None,
            Kind::GuModL => self.d(),
            Kind::BcModL => self.f,
            Kind::GuCircle => self.e(),
        }
    }

    /// Affine nodes, one per component: 1, plus -q^{-1} (unitary, e even) or -1 (B/C, f odd).
    pub fn affine_nodes(&self) -> Vec<Residue> {
        let Some(f) = self.f else { return Vec::new() };
        let mut out = vec![Residue::one()];
        match self.kind {
            Kind::GuModL if self.e().unwrap() % 2 == 0 => out.push(self.norm(-1, -1)),
            Kind::BcModL if f % 2 == 1 => out.push(self.norm(-1, 0)),
            _ => {}
        }
        out
    }

    /// All vertices of a finite quiver, sorted.
    pub fn vertices(&self) -> Vec<Residue> {
        let Some(f) = self.f else { return Vec::new() };
        let mut out: Vec<Residue> = if self.is_gu() {
            (0..self.e().unwrap() as i64).map(|a| Residue::neg_q_pow(a, self)).collect()
        } else if f % 2 == 0 {
            (0..f as i64).map(|k| self.norm(1, k)).collect()
        } else {
            (0..f as i64).flat_map(|k| [self.norm(1, k), self.norm(-1, k)]).collect()
        };
        out.sort();
        out.dedup();
        out
    }

    /// Normal form of ε·q^k without the vertex check.
    fn norm(&self, sign: i8, k: i64) -> Residue {
        match self.f {
            None => Residue { sign, exp: k },
            Some(f) => {
                let f = f as i64;
                if f % 2 == 0 {
                    let k = if sign < 0 { k + f / 2 } else { k };
                    Residue { sign: 1, exp: k.rem_euclid(f) }
                } else {
                    Residue { sign, exp: k.rem_euclid(f) }
                }
            }
        }
    }

    /// Whether a normal-form residue is a vertex of this quiver.
    fn is_vertex(&self, r: Residue) -> bool {
        if !self.is_gu() {
            return true;
        }
        match self.e() {
            None => (r.sign == 1) == (r.exp % 2 == 0),
            Some(e) => (0..e as i64).any(|a| self.norm(if a % 2 == 0 { 1 } else { -1 }, a) == r),
        }
    }

    /// The affine node of the component containing `i` and the offset k with i = node·v^k, 0 ≤ k < N.
    pub fn affine_decompose(&self, i: Residue) -> Option<(Residue, i64)> {
        let n = self.component_size()? as i64;
        let nodes = self.affine_nodes();
        let mut cur = i;
        for k in 0..n {
            if nodes.contains(&cur) {
                return Some((cur, k));
            }
            cur = cur.times_v_pow(-1, self);
        }
        None
    }

    /// Whether `i` is one of the affine nodes.
    pub fn is_affine(&self, i: Residue) -> bool {
        self.affine_nodes().contains(&i)
    }
}

/// An element ε·q^k of k^× in normal form for some [`QuiverSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    sign: i8,
    exp: i64,
}

impl Residue {
    pub fn one() -> Self {
        Residue { sign: 1, exp: 0 }
    }

    /// Canonical representative of ε·q^k; errors if it is not a vertex.
    pub fn normalize(sign: i8, k: i64, spec: &QuiverSpec) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return invalid("sign must be ±1");
        }
        let r = spec.norm(sign, k);
        if !spec.is_vertex(r) {
            return invalid(format!("{}q^{k} is not a vertex of (-q)^Z", if sign < 0 { "-" } else { "" }));
        }
        Ok(r)
    }

    /// q^k.
    pub fn q_pow(k: i64, spec: &QuiverSpec) -> Result<Self> {
        Self::normalize(1, k, spec)
    }

    /// (-q)^a.
    pub fn neg_q_pow(a: i64, spec: &QuiverSpec) -> Self {
        spec.norm(if a.rem_euclid(2) == 0 { 1 } else { -1 }, a)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Product of two residues.
    pub fn times(&self, other: Residue, spec: &QuiverSpec) -> Residue {
        spec.norm(self.sign * other.sign, self.exp + other.exp)
    }

    /// i·v^k.
    pub fn times_v_pow(&self, k: i64, spec: &QuiverSpec) -> Residue {
        let (s, e) = spec.step();
        let sign = if s < 0 && k.rem_euclid(2) == 1 { -self.sign } else { self.sign };
        spec.norm(sign, self.exp + e * k)
    }

    /// -i.
    pub fn negated(&self, spec: &QuiverSpec) -> Residue {
        spec.norm(-self.sign, self.exp)
    }

    /// The exponent a with self = (-q)^a; in [0, e) for finite unitary quivers.
    pub fn neg_q_exponent(&self, spec: &QuiverSpec) -> Result<i64> {
        if !spec.is_gu() {
            return invalid("(-q)-coordinates exist only for unitary quivers");
        }
        match spec.e() {
            None => Ok(self.exp),
            Some(e) => (0..e as i64)
                .find(|&a| Residue::neg_q_pow(a, spec) == *self)
                .ok_or_else(|| Error::InvalidArgument("not a power of -q".into())),
        }
    }

    /// Text form: "(-q)^a" for unitary quivers, "q^k" or "-q^k" otherwise.
    pub fn text(&self, spec: &QuiverSpec) -> String {
        if spec.is_gu() {
            format!("(-q)^{}", self.neg_q_exponent(spec).unwrap_or(self.exp))
        } else if self.sign < 0 {
            format!("-q^{}", self.exp)
        } else {
            format!("q^{}", self.exp)
        }
    }

    /// Parses "q^3", "-q^2", "(-q)^1", "1", "-1", "q", "-q".
    pub fn parse(s: &str, spec: &QuiverSpec) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        let bad = || Error::Parse(format!("bad residue {s:?}"));
        let exp_of = |rest: &str| -> Result<i64> {
            if rest.is_empty() {
                Ok(1)
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| bad())
            }
        };
        if let Some(rest) = s.strip_prefix("(-q)") {
            return Ok(Residue::neg_q_pow(exp_of(rest)?, spec));
        }
        let (sign, body) = match s.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, s.as_str()),
        };
        let k = if body == "1" {
            0
        } else {
            exp_of(body.strip_prefix('q').ok_or_else(bad)?)?
        };
        Residue::normalize(sign, k, spec).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// i ↦ i·v.
pub fn arrow(i: Residue, spec: &QuiverSpec) -> Residue {
    i.times_v_pow(1, spec)
}

/// Specialization from a characteristic-zero quiver to a finite one of the same family.
pub fn spec_map(i: Residue, source: &QuiverSpec, target: &QuiverSpec) -> Result<Residue> {
    let ok = matches!(
        (source.kind(), target.kind()),
        (Kind::GuChar0, Kind::GuModL) | (Kind::BcChar0, Kind::BcModL)
    );
    if !ok {
        return invalid("specialization needs a characteristic-zero source and a finite target of the same family");
    }
    Residue::normalize(i.sign, i.exp, target)
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-q^{}", self.exp)
        } else {
            write!(f, "q^{}", self.exp)
        }
    }
}
