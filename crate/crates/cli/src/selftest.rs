//! Quick invariant checks behind `fockcrystal selftest`.

use num_rational::BigRational;

use fockcrystal::crystal::{build_graph, Tower};
use fockcrystal::fock::{apply_e, apply_f};
use fockcrystal::groups::{weight_block_crosscheck, GroupFamily};
use fockcrystal::partition::{multipartitions, partition_count, partitions, tau, tau_inv};
use fockcrystal::residue::QuiverSpec;
use fockcrystal::symfun::CharTable;

fn tau_round_trip() -> bool {
    (0..=8).all(|n| {
        partitions(n).iter().all(|lam| {
            (-2..=2).all(|d| [2, 3].iter().all(|&l| tau_inv(&tau(lam, d, l)) == (lam.clone(), d)))
        })
    })
}

fn fock_sl2() -> bool {
    let spec = QuiverSpec::bc(4).unwrap();
    let sp = fockcrystal::fock::FockSpace::new(spec, vec![0, 1]).unwrap();
    (0..=4).all(|n| {
        multipartitions(n, 2).iter().all(|mu| {
            let v = sp.basis(mu);
            let w = sp.weight_of(mu);
            spec.vertices().into_iter().all(|i| {
                let ef = apply_e(&apply_f(&v, i), i);
                let fe = apply_f(&apply_e(&v, i), i);
                let c = BigRational::from_integer(w.pair(i).into());
                ef.minus(&fe).unwrap() == v.scaled(&c)
            })
        })
    })
}

fn crystal_counts() -> bool {
    let g = build_graph(Tower::unitary(QuiverSpec::gu(3).unwrap()).unwrap(), 6);
    (0..=6).all(|n| g.nodes.iter().filter(|x| x.rank == n).count() as u64 == partition_count(n))
}

fn char_tables() -> bool {
    (0..=5).all(|m| {
        let t = CharTable::new(m);
        let o = t.orthogonality_matrix();
        (0..o.len()).all(|a| (0..o.len()).all(|b| o[a][b] == BigRational::from_integer(i64::from(a == b).into())))
    })
}

fn blocks_vs_weights() -> bool {
    let gu = weight_block_crosscheck(&GroupFamily::gu(3).unwrap(), 6);
    let bc = weight_block_crosscheck(&GroupFamily::sp(4).unwrap(), 5);
    matches!((gu, bc), (Ok(a), Ok(b)) if a.mismatches.is_empty() && b.mismatches.is_empty())
}

pub fn run_all() -> Vec<(&'static str, bool)> {
    vec![
        ("tau-round-trip", tau_round_trip()),
        ("fock-sl2", fock_sl2()),
        ("crystal-counts", crystal_counts()),
        ("character-orthogonality", char_tables()),
        ("blocks-vs-weights", blocks_vs_weights()),
    ]
}
