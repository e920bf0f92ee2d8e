#![allow(dead_code)]

use bergesat::invariants::{make_clique, make_cycle, make_path};
use bergesat::{Graph, Hypergraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// K_2, K_3, P_3, P_4, C_4 and K_4 minus an edge.
pub fn small_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", make_clique(2).unwrap()),
        ("K3", make_clique(3).unwrap()),
        ("P3", make_path(3).unwrap()),
        ("P4", make_path(4).unwrap()),
        ("C4", make_cycle(4).unwrap()),
        (
            "K4-e",
            Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
        ),
    ]
}

/// Random hypergraph with edge sizes in `sizes`, distinct edges.
pub fn random_hypergraph(
    rng: &mut impl Rng,
    n: usize,
    edges: usize,
    sizes: std::ops::RangeInclusive<usize>,
) -> Hypergraph {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let verts: Vec<usize> = (0..n).collect();
    let mut attempts = 0;
    while out.len() < edges && attempts < 1000 {
        attempts += 1;
        let size = rng.gen_range(sizes.clone()).min(n);
        let mut e: Vec<usize> = verts.choose_multiple(rng, size).copied().collect();
        e.sort_unstable();
        if !out.contains(&e) {
            out.push(e);
        }
    }
    Hypergraph::new(n, out).unwrap()
}

/// Random k-uniform hypergraph in which every edge through `v` also contains
/// `u`, so that `u` dominates `v`. Returns `None` when the edits collide.
pub fn dominated_hypergraph(
    rng: &mut impl Rng,
    n: usize,
    edges: usize,
    k: usize,
    u: usize,
    v: usize,
) -> Option<Hypergraph> {
    let base = random_hypergraph(rng, n, edges, k..=k);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for e in base.edges() {
        let mut e = e.clone();
        if e.contains(&v) && !e.contains(&u) {
            let others: Vec<usize> = e.iter().copied().filter(|&x| x != v).collect();
            let drop = *others.choose(rng).unwrap();
            e.retain(|&x| x != drop);
            e.push(u);
            e.sort_unstable();
        }
        if out.contains(&e) {
            return None;
        }
        out.push(e);
    }
    Some(Hypergraph::new(n, out).unwrap())
}
