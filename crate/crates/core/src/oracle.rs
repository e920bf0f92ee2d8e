//! Slow reference algorithms: exhaustive Berge containment, greedy
//! completion to a saturated hypergraph, and exact minimum-saturation search
//! on tiny instances.

use itertools::Itertools;
use rayon::prelude::*;

use crate::berge::BergeIndex;
use crate::combin::{binomial, unrank, KSubsets};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::witness::{BergeWitness, SearchConstraints};

pub const ORACLE_MAX_PATTERN_EDGES: usize = 6;
pub const ORACLE_MAX_HOST_EDGES: usize = 8;
pub const SEARCH_MAX_CANDIDATES: u64 = 25;
pub const SEARCH_MAX_M: usize = 6;

/// Exhaustive Berge containment: every injection of pattern vertices, then
/// every injective assignment of host edges to pattern edges. No matching.
pub fn berge_oracle(f: &Graph, h: &Hypergraph) -> Result<bool> {
    Ok(berge_oracle_witness(f, h, None)?.is_some())
}

/// As [`berge_oracle`], returning the first witness found. With
/// `required_edge`, only witnesses using that host edge index count.
pub fn berge_oracle_witness(
    f: &Graph,
    h: &Hypergraph,
    required_edge: Option<usize>,
) -> Result<Option<BergeWitness>> {
    if f.edge_count() > ORACLE_MAX_PATTERN_EDGES {
        return Err(Error::SizeCap {
            what: "pattern edges",
            size: f.edge_count(),
            cap: ORACLE_MAX_PATTERN_EDGES,
        });
    }
    if h.edge_count() > ORACLE_MAX_HOST_EDGES {
        return Err(Error::SizeCap {
            what: "host edges",
            size: h.edge_count(),
            cap: ORACLE_MAX_HOST_EDGES,
        });
    }
    if f.n() > h.n() || f.edge_count() > h.edge_count() {
        return Ok(None);
    }
    for core in (0..h.n()).permutations(f.n()) {
        let mut used = vec![false; h.edge_count()];
        let mut edge_map = Vec::with_capacity(f.edge_count());
        if assign(f, h, &core, 0, &mut used, &mut edge_map, required_edge) {
            return Ok(Some(BergeWitness {
                core_map: core,
                edge_map,
            }));
        }
    }
    Ok(None)
}

fn assign(
    f: &Graph,
    h: &Hypergraph,
    core: &[usize],
    i: usize,
    used: &mut [bool],
    edge_map: &mut Vec<usize>,
    required: Option<usize>,
) -> bool {
    if i == f.edge_count() {
        return required.is_none_or(|r| used[r]);
    }
    let (a, b) = f.edges()[i];
    for (slot, e) in h.edges().iter().enumerate() {
        if used[slot] || !e.contains(&core[a]) || !e.contains(&core[b]) {
            continue;
        }
        used[slot] = true;
        edge_map.push(slot);
        if assign(f, h, core, i + 1, used, edge_map, required) {
            return true;
        }
        edge_map.pop();
        used[slot] = false;
    }
    false
}

/// Adds missing k-sets in `order` (lexicographic when `None`) whenever the
/// addition keeps the hypergraph Berge-`f`-free, then sweeps every remaining
/// missing set once more in lexicographic order. The result is certified
/// saturated by a full check.
pub fn greedy_saturate(
    h: &Hypergraph,
    f: &Graph,
    k: usize,
    order: Option<&[Vec<usize>]>,
) -> Result<Hypergraph> {
    if !h.is_k_uniform(k) {
        return Err(Error::NotUniform(k));
    }
    if BergeIndex::new(h)
        .find_witness(f, &SearchConstraints::default())
        .is_some()
    {
        return Err(Error::NotFree);
    }
    let mut current = h.clone();
    let try_add = |current: &mut Hypergraph, e: &[usize]| -> Result<()> {
        let index = BergeIndex::new(current);
        if index.edge_slot(e).is_none() && !index.creates_new(f, e)? {
            *current = current.add_edge(e)?;
        }
        Ok(())
    };
    if let Some(order) = order {
        for e in order {
            if e.len() != k {
                return Err(Error::InvalidEdge(e.clone()));
            }
            let mut e = e.clone();
            e.sort_unstable();
            try_add(&mut current, &e)?;
        }
    }
    // A set rejected once stays rejected: adding edges never removes a copy.
    for e in KSubsets::all(h.n(), k) {
        try_add(&mut current, &e)?;
    }
    assert!(
        saturated_single(&current, f, k),
        "greedy completion left a non-saturated hypergraph"
    );
    Ok(current)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub m_star: usize,
    pub witness: Hypergraph,
    /// Edge subsets tested, in lexicographic order, up to and including the
    /// witness.
    pub examined: u64,
}

/// Smallest m ≤ `m_max` such that some m-subset of the k-sets of [0,n) is
/// Berge-`f`-saturated. The witness is the lexicographically least such
/// subset (comparing sorted lists of k-set ranks). With `isomorph_reject`,
/// only subsets that are lexicographically least in their orbit under
/// vertex permutations are tested.
pub fn min_saturation_search(
    n: usize,
    k: usize,
    f: &Graph,
    m_max: usize,
    isomorph_reject: bool,
) -> Result<Option<SearchResult>> {
    if k < 2 || n < k {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= k <= n, got n={n}, k={k}"
        )));
    }
    let candidates = binomial(n, k);
    if candidates > SEARCH_MAX_CANDIDATES {
        return Err(Error::SizeCap {
            what: "candidate edges",
            size: candidates as usize,
            cap: SEARCH_MAX_CANDIDATES as usize,
        });
    }
    if m_max > SEARCH_MAX_M {
        return Err(Error::SizeCap {
            what: "m_max",
            size: m_max,
            cap: SEARCH_MAX_M,
        });
    }
    let all: Vec<Vec<usize>> = KSubsets::all(n, k).collect();
    let perms = if isomorph_reject {
        permutation_tables(n, &all)
    } else {
        Vec::new()
    };
    let big = candidates as usize;
    let mut examined = 0u64;
    for m in 0..=m_max.min(big) {
        let count = binomial(big, m);
        let test = |r: u64| -> Option<Vec<usize>> {
            let subset = unrank(big, m, r);
            if isomorph_reject && !is_orbit_minimum(&subset, &perms) {
                return None;
            }
            let h =
                Hypergraph::new(n, subset.iter().map(|&i| all[i].clone())).expect("valid subset");
            saturated_single(&h, f, k).then_some(subset)
        };
        let found = (0..count)
            .into_par_iter()
            .find_first(|&r| test(r).is_some());
        let tested_below = |end: u64| -> u64 {
            if !isomorph_reject {
                return end;
            }
            (0..end)
                .into_par_iter()
                .filter(|&r| is_orbit_minimum(&unrank(big, m, r), &perms))
                .count() as u64
        };
        match found {
            Some(r) => {
                examined += tested_below(r + 1);
                let subset = unrank(big, m, r);
                let witness = Hypergraph::new(n, subset.iter().map(|&i| all[i].clone()))?;
                return Ok(Some(SearchResult {
                    m_star: m,
                    witness,
                    examined,
                }));
            }
            None => examined += tested_below(count),
        }
    }
    Ok(None)
}

/// Saturation check without a worker pool, for many tiny hosts.
fn saturated_single(h: &Hypergraph, f: &Graph, k: usize) -> bool {
    let index = BergeIndex::new(h);
    if index
        .find_witness(f, &SearchConstraints::default())
        .is_some()
    {
        return false;
    }
    KSubsets::all(h.n(), k)
        .filter(|e| index.edge_slot(e).is_none())
        .all(|e| index.creates_new(f, &e).expect("missing edge"))
}

/// For every vertex permutation, the image index of every candidate edge.
fn permutation_tables(n: usize, all: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..n)
        .permutations(n)
        .map(|p| {
            all.iter()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                    img.sort_unstable();
                    all.binary_search(&img).expect("image is a k-set")
                })
                .collect()
        })
        .collect()
}

fn is_orbit_minimum(subset: &[usize], perms: &[Vec<usize>]) -> bool {
    let mut img = vec![0; subset.len()];
    perms.iter().all(|p| {
        for (slot, &i) in img.iter_mut().zip(subset) {
            *slot = p[i];
        }
        img.sort_unstable();
        img.as_slice() >= subset
    })
}
