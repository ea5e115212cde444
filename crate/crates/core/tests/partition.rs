mod common;

use common::{diagram_core, part, partition_numbers, tau_oracle};
use fockcrystal::partition::*;
use proptest::prelude::*;

fn partition_strategy(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

#[test]
fn enumeration_matches_pentagonal_recurrence() {
    let p = partition_numbers(20);
    for n in 0..=20 {
        let all = partitions(n);
        assert_eq!(all.len() as u64, p[n]);
        assert_eq!(partition_count(n), p[n]);
        assert!(all.windows(2).all(|w| w[0] > w[1]), "not strictly decreasing at n = {n}");
        assert!(all.iter().all(|l| l.size() == n));
    }
    let two: Vec<u64> = common::bipartition_numbers(8);
    for n in 0..=8 {
        assert_eq!(multipartitions(n, 2).len() as u64, two[n]);
    }
}

#[test]
fn e_core_examples_against_diagram_oracle() {
    for (lam, e, core, w) in [("4,2,1", 3, "1", 2), ("2,1", 2, "2,1", 0), ("5,5,2", 4, "4,2,2", 1), ("0", 5, "0", 0)] {
        let cq = e_core_quotient(&part(lam), e);
        assert_eq!(cq.core, part(core), "{lam}");
        assert_eq!(cq.weight, w, "{lam}");
        assert_eq!(diagram_core(&part(lam), e), (part(core), w), "{lam}");
    }
}

#[test]
fn hooks_of_421() {
    // β_0 = {4, 1, -1, -3, -4, ...}: only 1 → -2 is a 3-hook.
    assert_eq!(e_hooks(&part("4,2,1"), 0, 3), vec![(-2, 1)]);
    assert_eq!(remove_hook(&part("4,2,1"), 0, -2, 3).unwrap(), part("4"));
    assert!(remove_hook(&part("4,2,1"), 0, 1, 3).is_err());
}

#[test]
fn staircases_are_the_two_cores() {
    for n in 0..=15 {
        for lam in partitions(n) {
            let is_core = e_hooks(&lam, 0, 2).is_empty();
            assert_eq!(is_core, staircase_index(&lam).is_some(), "{lam}");
        }
    }
}

#[test]
fn twisted_sign_is_fixed_by_two_core_and_size() {
    // (-1)^{a(λ)} ε_λ with ε_λ = (-1)^{m(m-1)/2 - a(λ*)}.
    for n in 0..=12 {
        let mut seen: std::collections::BTreeMap<Partition, usize> = std::collections::BTreeMap::new();
        let mut raw = std::collections::BTreeSet::new();
        for lam in partitions(n) {
            let core = e_core(&lam, 2);
            raw.insert((core.clone(), lam.a_value() % 2));
            let parity = (lam.a_value() + n * (n.saturating_sub(1)) / 2 + lam.conjugate().a_value()) % 2;
            let prev = *seen.entry(core.clone()).or_insert(parity);
            assert_eq!(prev, parity, "sign differs inside 2-core {core} at size {n}");
        }
        if n >= 2 {
            // The a-value parity alone is not an invariant: (2) and (1,1) differ.
            assert!(raw.len() > seen.len());
        }
    }
}

#[test]
fn varpi_is_a_bijection_onto_partitions() {
    for n in 0..=12 {
        let mut count = 0;
        for t in (0..).take_while(|t| t * (t + 1) / 2 <= n) {
            let rest = n - t * (t + 1) / 2;
            if rest % 2 == 1 {
                continue;
            }
            for mu in multipartitions(rest / 2, 2) {
                let lam = varpi(t, &mu).unwrap();
                assert_eq!(lam.size(), n);
                assert_eq!(varpi_inv(&lam), (t, mu.clone()));
                assert_eq!(diagram_core(&lam, 2).0, Partition::staircase(t));
                count += 1;
            }
        }
        assert_eq!(count as u64, partition_numbers(n)[n]);
    }
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!("a,b".parse::<Partition>().is_err());
    assert!(beta_set(&part("3,2,1"), 0, 2).is_err());
    assert!(from_beads(&[0, 1]).is_err());
    assert!(from_beads(&[]).is_err());
    assert!(varpi(0, &[Partition::empty()]).is_err());
    assert!(part("3").dominance_leq(&part("2")).is_err());
    assert!("1,2:0/0/0".parse::<ChargedMultipartition>().is_err());
}

proptest! {
    #[test]
    fn beta_set_round_trip(lam in partition_strategy(8, 10), d in -3i64..=3, extra in 0usize..6) {
        let b = beta_set(&lam, d, lam.len() + extra).unwrap();
        prop_assert!(b.beads.windows(2).all(|w| w[0] > w[1]));
        let c = beta_set(&lam, d, lam.len() + extra + 2).unwrap();
        prop_assert_eq!(from_beta_set(&c).unwrap(), (lam, d));
    }

    #[test]
    fn tau_round_trip(lam in partition_strategy(8, 10), d in -3i64..=3, l in 1usize..=4) {
        let m = tau(&lam, d, l);
        prop_assert_eq!(m.charge.iter().sum::<i64>(), d);
        prop_assert_eq!(&m, &tau_oracle(&lam, d, l));
        prop_assert_eq!(tau_inv(&m), (lam, d));
    }

    #[test]
    fn core_weight_bookkeeping(lam in partition_strategy(7, 9), e in 2usize..=5) {
        let cq = e_core_quotient(&lam, e);
        prop_assert_eq!(lam.size(), cq.core.size() + e * cq.weight);
        prop_assert_eq!(cq.weight, cq.quotient.iter().map(Partition::size).sum::<usize>());
        prop_assert!(e_hooks(&cq.core, 0, e).is_empty());
        prop_assert_eq!((cq.core.clone(), cq.weight), diagram_core(&lam, e));
        prop_assert_eq!(e_weight(&lam, e), cq.weight);
    }

    #[test]
    fn hooks_shift_with_charge(lam in partition_strategy(7, 9), d in -3i64..=3, e in 1usize..=5) {
        let base = e_hooks(&lam, 0, e);
        let moved: Vec<(i64, i64)> = base.iter().map(|&(x, y)| (x + d, y + d)).collect();
        prop_assert_eq!(e_hooks(&lam, d, e), moved);
        for &(x, _) in &base {
            let smaller = remove_hook(&lam, 0, x, e).unwrap();
            prop_assert_eq!(smaller.size() + e, lam.size());
            prop_assert_eq!(e_core(&smaller, e), e_core(&lam, e));
        }
    }

    #[test]
    fn conjugation(lam in partition_strategy(7, 9), mu in partition_strategy(7, 9)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert!(lam.dominance_leq(&lam).unwrap());
        if lam.size() == mu.size() {
            let forward = lam.dominance_leq(&mu).unwrap();
            prop_assert_eq!(forward, mu.conjugate().dominance_leq(&lam.conjugate()).unwrap());
        }
    }

    #[test]
    fn text_round_trip(lam in partition_strategy(6, 12), mu in partition_strategy(4, 5), s in -5i64..5) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        let m = ChargedMultipartition::new(vec![lam, mu], vec![s, -s]).unwrap();
        prop_assert_eq!(m.to_string().parse::<ChargedMultipartition>().unwrap(), m);
    }

    #[test]
    fn cells_add_and_remove(lam in partition_strategy(6, 8)) {
        for (x, _) in lam.addable_cells() {
            let bigger = lam.with_cell_added(x);
            prop_assert_eq!(bigger.size(), lam.size() + 1);
            prop_assert_eq!(bigger.with_cell_removed(x), lam.clone());
        }
        for (x, _) in lam.removable_cells() {
            prop_assert_eq!(lam.with_cell_removed(x).size() + 1, lam.size());
        }
    }
}
