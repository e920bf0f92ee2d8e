mod common;

use bergesat::berge::{contains_berge, creates_new_berge, find_berge_witness};
use bergesat::combin::KSubsets;
use bergesat::invariants::make_clique;
use bergesat::oracle::{
    berge_oracle, berge_oracle_witness, greedy_saturate, min_saturation_search,
};
use bergesat::saturation::{is_saturated, CheckMode};
use bergesat::witness::validate;
use bergesat::{Hypergraph, SearchConstraints};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn host() -> impl Strategy<Value = Hypergraph> {
    (4usize..=8, 0usize..=7, any::<u64>()).prop_map(|(n, m, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_hypergraph(&mut rng, n, m, 2..=4)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn containment_matches_oracle(h in host(), which in 0usize..6) {
        let (_, f) = &common::small_patterns()[which];
        let w = find_berge_witness(f, &h, &SearchConstraints::default());
        prop_assert_eq!(w.is_some(), berge_oracle(f, &h).unwrap());
        if let Some(w) = w {
            prop_assert_eq!(validate(f, &h, &w, None), Ok(()));
        }
    }

    #[test]
    fn new_copies_match_oracle(h in host(), which in 0usize..6, pick in any::<prop::sample::Index>()) {
        prop_assume!(h.edge_count() < 8);
        let (_, f) = &common::small_patterns()[which];
        let missing: Vec<Vec<usize>> = h.missing_edges(3).collect();
        prop_assume!(!missing.is_empty());
        let e = pick.get(&missing).clone();
        let plus = h.add_edge(&e).unwrap();
        let slow = berge_oracle_witness(f, &plus, Some(plus.edge_count() - 1)).unwrap();
        prop_assert_eq!(creates_new_berge(&h, &e, f).unwrap(), slow.is_some());
    }

    #[test]
    fn adding_edges_keeps_copies(h in host(), which in 0usize..6, pick in any::<prop::sample::Index>()) {
        let (_, f) = &common::small_patterns()[which];
        let missing: Vec<Vec<usize>> = h.missing_edges(3).collect();
        prop_assume!(!missing.is_empty());
        if contains_berge(f, &h) {
            prop_assert!(contains_berge(f, &h.add_edge(pick.get(&missing)).unwrap()));
        }
    }

    #[test]
    fn constrained_witnesses_validate(h in host(), which in 0usize..6, mask in any::<u16>()) {
        let (_, f) = &common::small_patterns()[which];
        let core: Vec<usize> = (0..h.n()).filter(|v| mask >> v & 1 == 1).collect();
        let forbidden: Vec<usize> = (0..h.n()).filter(|v| mask >> (v + 8) & 1 == 1 && !core.contains(v)).collect();
        let c = SearchConstraints::require_core(core).forbid(forbidden);
        if let Some(w) = find_berge_witness(f, &h, &c) {
            prop_assert_eq!(validate(f, &h, &w, Some(&c)), Ok(()));
        }
    }
}

#[test]
fn saturated_hosts_pass_independent_recheck() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (name, f) in common::small_patterns() {
        for n in [5, 6, 7] {
            let h = greedy_saturate(&Hypergraph::empty(n), &f, 3, None).unwrap();
            let r = is_saturated(&h, &f, 3, CheckMode::Full, 2).unwrap();
            assert!(r.is_saturated(), "{name} n={n}");
            let mut missing: Vec<Vec<usize>> = h.missing_edges(3).collect();
            missing.shuffle(&mut rng);
            for e in missing.iter().take(20) {
                let edges = h.edges().iter().cloned().chain([e.clone()]);
                let plus = Hypergraph::new(n, edges).unwrap();
                let found = if plus.edge_count() <= 8 {
                    berge_oracle(&f, &plus).unwrap()
                } else {
                    contains_berge(&f, &plus)
                };
                assert!(found, "{name} n={n}: adding {e:?} keeps the host free");
            }
            let again = greedy_saturate(&h, &f, 3, None).unwrap();
            assert_eq!(again.edge_count(), h.edge_count());
        }
    }
}

#[test]
fn triangle_saturation_formula_inside_caps() {
    let k3 = make_clique(3).unwrap();
    let cases = [
        (3, 2),
        (4, 2),
        (5, 2),
        (6, 2),
        (7, 2),
        (4, 3),
        (5, 3),
        (6, 3),
        (5, 4),
        (6, 4),
        (6, 5),
        (7, 5),
        (7, 6),
        (9, 8),
    ];
    for (n, k) in cases {
        let naive = min_saturation_search(n, k, &k3, 6, false).unwrap().unwrap();
        assert_eq!(naive.m_star, (n - 1).div_ceil(k - 1), "n={n} k={k}");
        if n <= 6 {
            let reduced = min_saturation_search(n, k, &k3, 6, true).unwrap().unwrap();
            assert_eq!(reduced.witness, naive.witness, "n={n} k={k}");
            assert!(reduced.examined <= naive.examined);
        }
    }
}

#[test]
fn missing_edges_are_lexicographic() {
    let h = Hypergraph::new(6, vec![vec![0, 1, 2], vec![2, 4, 5]]).unwrap();
    let expected: Vec<Vec<usize>> = KSubsets::all(6, 3)
        .filter(|e| !h.contains_edge(e))
        .collect();
    assert_eq!(h.missing_edges(3).collect::<Vec<_>>(), expected);
}
