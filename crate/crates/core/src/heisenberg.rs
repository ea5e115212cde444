//! The level-2 Heisenberg action on F(Q_t), its transport to the level-1 action on Λ,
//! and joint kernels of e_i and b* on rank strata.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use crate::crystal::{Tower, TowerKind};
use crate::error::{invalid, Result};
use crate::fock::{apply_e, FockVector};
use crate::linalg::nullspace;
use crate::partition::{varpi, Partition};
use crate::residue::Residue;
use crate::symfun::{p_star_phi, p_times_phi, PhiVector};
use crate::weight::Weight;

fn on_components(x: &FockVector, n: usize, op: fn(&Partition, usize) -> PhiVector) -> Result<FockVector> {
    if x.space().level() != 2 {
        return invalid("the level-2 Heisenberg action needs a level-2 Fock space");
    }
    if n == 0 {
        return invalid("Heisenberg operators are indexed by n ≥ 1");
    }
    let mut out = x.space().vector();
    for (mu, c) in x.terms() {
        for (nu, s) in op(&mu[0], n) {
            out.add_term(vec![nu, mu[1].clone()], c * s);
        }
        for (nu, s) in op(&mu[1], n) {
            out.add_term(vec![mu[0].clone(), nu], c * s);
        }
    }
    Ok(out)
}

/// b_n ⊗ 1 + 1 ⊗ b_n in the φ-bases of both components.
pub fn level2_heisenberg(x: &FockVector, n: usize) -> Result<FockVector> {
    on_components(x, n, p_times_phi)
}

/// b*_n ⊗ 1 + 1 ⊗ b*_n.
pub fn level2_heisenberg_star(x: &FockVector, n: usize) -> Result<FockVector> {
    on_components(x, n, p_star_phi)
}

/// |μ, Q_t⟩ ↦ (-1)^{a(ϖ_t(μ))} φ_{ϖ_t(μ)}.
pub fn intertwine(x: &FockVector, t: usize) -> Result<PhiVector> {
    let mut out = PhiVector::new();
    for (mu, c) in x.terms() {
        let lam = varpi(t, mu)?;
        let c = if lam.a_value() % 2 == 0 { c.clone() } else { -c.clone() };
        *out.entry(lam).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Joint kernel on one rank stratum of a tower.
#[derive(Clone, Debug)]
pub struct HwKernel {
    pub rank: usize,
    /// Dimension of the kernel of all e_i alone.
    pub weakly_dimension: usize,
    /// Dimension of the kernel of all e_i and all b*.
    pub dimension: usize,
    /// Echelon basis, one vector per free coordinate, grouped by (t, weight).
    pub basis: Vec<(usize, FockVector)>,
}

/// Kernel of {e_i} ∪ {b*_k : k a positive multiple of `period`, box_rank·k ≤ n} on the rank-n stratum.
/// Computed separately on each (t, weight) piece, which all operators map injectively.
pub fn hw_kernel(tower: &Tower, n: usize, period: usize) -> Result<HwKernel> {
    if period == 0 {
        return invalid("the Heisenberg period must be positive");
    }
    if tower.kind() != TowerKind::Unitary {
        return invalid("the Heisenberg kernel is implemented for the unitary tower");
    }
    let mut pieces: BTreeMap<(usize, Weight), Vec<Vec<Partition>>> = BTreeMap::new();
    let series: Vec<_> = tower.series_up_to(n).into_iter().map(|t| tower.space(t)).collect();
    for (t, mu) in tower.labels(n) {
        pieces.entry((t, series[t].weight_of(&mu))).or_default().push(mu);
    }
    let mut weakly = 0;
    let mut basis = Vec::new();
    for ((t, _), labels) in pieces {
        let sp = &series[t];
        let residues: BTreeSet<Residue> =
            labels.iter().flat_map(|mu| sp.removable(mu).into_iter().map(|c| sp.residue(c))).collect();
        let mut chevalley: Vec<Vec<FockVector>> = Vec::new();
        let mut heis: Vec<Vec<FockVector>> = Vec::new();
        for mu in &labels {
            let v = sp.basis(mu);
            chevalley.push(residues.iter().map(|&i| apply_e(&v, i)).collect());
            let ks = (1..).map(|j| j * period).take_while(|k| tower.box_rank() * k <= n);
            heis.push(ks.map(|k| level2_heisenberg_star(&v, k)).collect::<Result<_>>()?);
        }
        let cols = labels.len();
        let e_rows = equations(&chevalley);
        weakly += nullspace(&e_rows, cols).len();
        let mut all = e_rows;
        all.extend(equations(&heis));
        for v in nullspace(&all, cols) {
            let mut x = sp.vector();
            for (mu, c) in labels.iter().zip(v) {
                x.add_term(mu.clone(), c);
            }
            basis.push((t, x));
        }
    }
    Ok(HwKernel { rank: n, weakly_dimension: weakly, dimension: basis.len(), basis })
}

/// Rows of the linear map whose column c sends basis vector c to images[c][op] in slot op.
fn equations(images: &[Vec<FockVector>]) -> Vec<Vec<BigRational>> {
    let cols = images.len();
    let mut index: BTreeMap<(usize, Vec<Partition>), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (col, ops) in images.iter().enumerate() {
        for (op, img) in ops.iter().enumerate() {
            for (nu, c) in img.terms() {
                let r = *index.entry((op, nu.clone())).or_insert_with(|| {
                    rows.push(vec![BigRational::zero(); cols]);
                    rows.len() - 1
                });
                rows[r][col] += c;
            }
        }
    }
    rows
}
