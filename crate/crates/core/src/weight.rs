//! Weights: integer Λ-coefficients on quiver vertices plus a rational δ-coefficient.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::residue::{QuiverSpec, Residue};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub lambda: BTreeMap<Residue, i64>,
    pub delta: Rational64,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    /// Λ_i.
    pub fn fundamental(i: Residue) -> Self {
        let mut w = Weight::zero();
        w.lambda.insert(i, 1);
        w
    }

    /// c·δ.
    pub fn delta(c: Rational64) -> Self {
        Weight { lambda: BTreeMap::new(), delta: c }
    }

    /// Coefficient of Λ_i, which is also ⟨α_i^∨, w⟩.
    pub fn coeff(&self, i: Residue) -> i64 {
        self.lambda.get(&i).copied().unwrap_or(0)
    }

    /// ⟨α_i^∨, w⟩.
    pub fn pair(&self, i: Residue) -> i64 {
        self.coeff(i)
    }

    pub fn add_lambda(&mut self, i: Residue, c: i64) {
        let e = self.lambda.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.lambda.remove(&i);
        }
    }

    pub fn scaled(&self, c: i64) -> Weight {
        if c == 0 {
            return Weight::zero();
        }
        Weight {
            lambda: self.lambda.iter().map(|(&i, &v)| (i, v * c)).collect(),
            delta: self.delta * c,
        }
    }

    /// The Λ-part, forgetting δ.
    pub fn classical(&self) -> Weight {
        Weight { lambda: self.lambda.clone(), delta: Rational64::zero() }
    }

    pub fn to_json(&self, spec: &QuiverSpec) -> Value {
        let lambda: Vec<Value> = self.lambda.iter().map(|(i, c)| json!([i.text(spec), c])).collect();
        json!({ "lambda": lambda, "delta": self.delta.to_string() })
    }

    pub fn from_json(v: &Value, spec: &QuiverSpec) -> Result<Weight> {
        let bad = || Error::Parse("malformed weight JSON".into());
        let mut w = Weight::zero();
        for entry in v.get("lambda").and_then(Value::as_array).ok_or_else(bad)? {
            let pair = entry.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let i = Residue::parse(pair[0].as_str().ok_or_else(bad)?, spec)?;
            w.add_lambda(i, pair[1].as_i64().ok_or_else(bad)?);
        }
        let d = v.get("delta").and_then(Value::as_str).ok_or_else(bad)?;
        w.delta = d.parse().map_err(|_| bad())?;
        Ok(w)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        let mut w = self.clone();
        for (&i, &c) in &o.lambda {
            w.add_lambda(i, c);
        }
        w.delta += o.delta;
        w
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        self + &(-o)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// The simple root α_i = 2Λ_i - Λ_{iv} - Λ_{iv^{-1}} (+ δ at an affine node).
pub fn alpha(i: Residue, spec: &QuiverSpec) -> Weight {
    let mut w = Weight::zero();
    w.add_lambda(i, 2);
    w.add_lambda(i.times_v_pow(1, spec), -1);
    w.add_lambda(i.times_v_pow(-1, spec), -1);
    if spec.is_affine(i) {
        w.delta = Rational64::from_integer(1);
    }
    w
}

/// Δ(d, e) = (d̄(1 - d̄/e) + d(d/e - 1))/2 with d̄ = d mod e.
pub fn delta_shift(d: i64, e: i64) -> Rational64 {
    let db = d.rem_euclid(e);
    Rational64::new(db * (e - db) + d * (d - e), 2 * e)
}

/// s_i(w) = w - ⟨α_i^∨, w⟩ α_i.
pub fn weyl_reflect(w: &Weight, i: Residue, spec: &QuiverSpec) -> Weight {
    w - &alpha(i, spec).scaled(w.pair(i))
}

/// κ*: Λ_{i,∘} ↦ Λ_i + Λ_{-q^{-1} i}, δ_∘ ↦ δ, from the circle quiver to the unitary quiver.
pub fn kappa_star(w: &Weight, circle: &QuiverSpec, gu: &QuiverSpec) -> Result<Weight> {
    if circle.kind() != crate::residue::Kind::GuCircle || !gu.is_gu() || circle.e() != gu.e() {
        return invalid("κ* maps the circle quiver I_e(-q) to the unitary quiver with the same e");
    }
    let mut out = Weight::delta(w.delta);
    for (&i, &c) in &w.lambda {
        let a = i.neg_q_exponent(circle)?;
        out.add_lambda(Residue::neg_q_pow(a, gu), c);
        out.add_lambda(Residue::neg_q_pow(a - 1, gu), c);
    }
    Ok(out)
}

/// σ_*: Λ_i ↦ Λ_{-i}, fixing δ.
pub fn sigma_twist(w: &Weight, spec: &QuiverSpec) -> Result<Weight> {
    if !spec.is_bc() || spec.f().map_or(true, |f| f % 2 == 1) {
        return invalid("σ_* is defined on the B/C quiver with f even");
    }
    let mut out = Weight::delta(w.delta);
    for (&i, &c) in &w.lambda {
        out.add_lambda(i.negated(spec), c);
    }
    Ok(out)
}
