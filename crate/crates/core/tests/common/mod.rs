//! Reference implementations shared by the integration tests. They work on
//! Young diagrams and plain bead lists, not on the library's β-set code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fockcrystal::partition::{ChargedMultipartition, Partition};
use fockcrystal::symbol::Symbol;
use num_bigint::BigInt;

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn parts_of(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// p(0..=max) by Euler's pentagonal recurrence.
pub fn partition_numbers(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max as i64 {
        let mut acc = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[(n - g2) as usize];
            }
        }
        p[n as usize] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}

/// Number of bipartitions of 0..=max.
pub fn bipartition_numbers(max: usize) -> Vec<u64> {
    let p = partition_numbers(max);
    (0..=max).map(|n| (0..=n).map(|a| p[a] * p[n - a]).sum()).collect()
}

/// Σ_{t(t+1) ≤ n} p_2(n - t(t+1)).
pub fn bc_label_count(n: usize) -> u64 {
    let p2 = bipartition_numbers(n);
    (0..).take_while(|t| t * (t + 1) <= n).map(|t| p2[n - t * (t + 1)]).sum()
}

/// Hook length of the 1-based cell (i, j).
pub fn hook_length(lam: &Partition, i: usize, j: usize) -> usize {
    let conj = lam.conjugate();
    lam.part(i) - j + conj.part(j) - i + 1
}

/// Removes the rim hook attached to cell (i, j).
pub fn strip_rim(lam: &Partition, i: usize, j: usize) -> Partition {
    let foot = lam.conjugate().part(j);
    let mut v: Vec<usize> = lam.parts().to_vec();
    for r in i..foot {
        v[r - 1] = lam.part(r + 1) - 1;
    }
    v[foot - 1] = j - 1;
    Partition::new(v).unwrap()
}

/// e-core and e-weight by stripping rim hooks off the diagram.
pub fn diagram_core(lam: &Partition, e: usize) -> (Partition, usize) {
    let mut cur = lam.clone();
    let mut w = 0;
    'outer: loop {
        let cells: Vec<(usize, usize)> = cur.cells().collect();
        for (i, j) in cells {
            if hook_length(&cur, i, j) == e {
                cur = strip_rim(&cur, i, j);
                w += 1;
                continue 'outer;
            }
        }
        return (cur, w);
    }
}

/// m! / Π hooks.
pub fn hook_dimension(lam: &Partition) -> BigInt {
    let mut num = BigInt::from(1);
    for k in 1..=lam.size() {
        num *= k;
    }
    let mut den = BigInt::from(1);
    for (i, j) in lam.cells() {
        den *= hook_length(lam, i, j);
    }
    num / den
}

/// τ_l by reading a bead window directly: runner p holds positions z with
/// x = p - l + l·z, and each runner is cut at the same z0.
pub fn tau_oracle(lam: &Partition, d: i64, l: usize) -> ChargedMultipartition {
    let li = l as i64;
    let z0 = (d - lam.len() as i64 - 2 * li) / li - 2;
    let cut = 1 - li + li * z0;
    let mut beads = Vec::new();
    let mut u = 1i64;
    loop {
        let b = lam.part(u as usize) as i64 + d + 1 - u;
        if b < cut {
            break;
        }
        beads.push(b);
        u += 1;
    }
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); l];
    for b in beads {
        let p = (b - 1).rem_euclid(li) + 1;
        let z = (b - p + li) / li;
        rows[(p - 1) as usize].push(z);
    }
    let mut comps = Vec::new();
    let mut charge = Vec::new();
    for mut row in rows {
        row.sort_unstable_by(|a, b| b.cmp(a));
        let k = row.len() as i64;
        let s = z0 + k - 1;
        let parts = row.iter().enumerate().map(|(idx, &z)| (z - s - 1 + idx as i64 + 1) as usize).collect();
        comps.push(Partition::new(parts).unwrap());
        charge.push(s);
    }
    ChargedMultipartition { components: comps, charge }
}

/// Every d-cocore reachable by removing d-cohooks in any order.
pub fn all_cocores(s: &Symbol, d: usize) -> BTreeSet<Symbol> {
    let moves = s.d_cohooks(d);
    if moves.is_empty() {
        return BTreeSet::from([s.clone()]);
    }
    moves.into_iter().flat_map(|m| all_cocores(&s.remove_cohook(m).unwrap(), d)).collect()
}

/// Every d-core reachable by removing d-hooks in any order.
pub fn all_cores(s: &Symbol, d: usize) -> BTreeSet<Symbol> {
    let moves = s.d_hooks(d);
    if moves.is_empty() {
        return BTreeSet::from([s.clone()]);
    }
    moves.into_iter().flat_map(|m| all_cores(&s.remove_hook(m).unwrap(), d)).collect()
}

/// Sets of indices grouped by key, as a canonical partition of 0..n.
pub fn fibers<K: Ord + Clone>(keys: &[K]) -> BTreeSet<Vec<usize>> {
    let mut map: std::collections::BTreeMap<K, Vec<usize>> = std::collections::BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        map.entry(k.clone()).or_default().push(i);
    }
    map.into_values().collect()
}
