//! Berge-F containment.
//!
//! The search places pattern vertices on host vertices one at a time and,
//! after each placement, asks a bipartite matching whether the pattern edges
//! whose endpoints are both placed can still receive distinct hyperedges.
//! A placement is abandoned as soon as that matching stops being perfect.
//!
//! Host vertices are tried in descending degree order (ties by id). For a
//! complete pattern every placement of the same vertex set is equivalent, so
//! cores are enumerated as sets: images are forced to increase in that order.
//!
//! A [`BergeIndex`] precomputes incidence bitsets for one host so that many
//! queries, including queries against `H + e` for a candidate edge `e`, share
//! the work.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::invariants::make_clique;
use crate::matching::{max_matching, Matching};
use crate::witness::{BergeWitness, SearchConstraints};

const NONE: usize = usize::MAX;

/// Precomputed incidence structure of a host hypergraph.
#[derive(Clone, Debug)]
pub struct BergeIndex<'h> {
    h: &'h Hypergraph,
    /// Edge slots: every edge of `h`, plus one slot for an added edge.
    slots: usize,
    incidence: Vec<FixedBitSet>,
    adjacent: Vec<FixedBitSet>,
    neighbours: Vec<Vec<usize>>,
    degree: Vec<usize>,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
}

impl<'h> BergeIndex<'h> {
    pub fn new(h: &'h Hypergraph) -> Self {
        let n = h.n();
        let slots = h.edge_count() + 1;
        let mut incidence = vec![FixedBitSet::with_capacity(slots); n];
        let mut adjacent = vec![FixedBitSet::with_capacity(n); n];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                incidence[v].insert(i);
                for &u in e {
                    if u != v {
                        adjacent[v].insert(u);
                    }
                }
            }
        }
        let degree: Vec<usize> = incidence.iter().map(|s| s.count_ones(..)).collect();
        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
        let mut rank = vec![0; n];
        for (r, &v) in by_rank.iter().enumerate() {
            rank[v] = r;
        }
        let neighbours = adjacent
            .iter()
            .map(|a| {
                let mut list: Vec<usize> = a.ones().collect();
                list.sort_by_key(|&u| rank[u]);
                list
            })
            .collect();
        BergeIndex {
            h,
            slots,
            incidence,
            adjacent,
            neighbours,
            degree,
            rank,
            by_rank,
        }
    }

    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.h
    }

    /// Slot index of an existing edge equal to `e`.
    pub fn edge_slot(&self, e: &[usize]) -> Option<usize> {
        let (&first, rest) = e.split_first()?;
        if e.iter().any(|&v| v >= self.h.n()) {
            return None;
        }
        let mut common = self.incidence[first].clone();
        for &v in rest {
            common.intersect_with(&self.incidence[v]);
        }
        common
            .ones()
            .find(|&s| s < self.h.edge_count() && self.h.edges()[s].len() == e.len())
    }

    pub fn find_witness(&self, f: &Graph, c: &SearchConstraints) -> Option<BergeWitness> {
        let required_slot = match &c.required_edge {
            Some(e) => Some(self.edge_slot(e)?),
            None => None,
        };
        let host = Host {
            index: self,
            extra: Vec::new(),
        };
        run_search(&host, f, c, required_slot)
    }

    /// Searches `H + extra` for a witness that uses `extra`. The witness
    /// refers to `extra` by edge index `|E(H)|`. Any `required_edge` in `c`
    /// is ignored in favour of `extra`.
    pub fn find_new_witness(
        &self,
        f: &Graph,
        extra: &[usize],
        c: &SearchConstraints,
    ) -> Result<Option<BergeWitness>> {
        let mut sorted = extra.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != extra.len()
            || sorted.len() < 2
            || sorted.iter().any(|&v| v >= self.h.n())
        {
            return Err(Error::InvalidEdge(sorted));
        }
        if self.edge_slot(&sorted).is_some() {
            return Err(Error::EdgeExists(sorted));
        }
        let host = Host {
            index: self,
            extra: sorted,
        };
        Ok(run_search(&host, f, c, Some(self.slots - 1)))
    }

    pub fn creates_new(&self, f: &Graph, extra: &[usize]) -> Result<bool> {
        Ok(self
            .find_new_witness(f, extra, &SearchConstraints::default())?
            .is_some())
    }
}

/// `H` plus an optional added edge occupying the last slot.
struct Host<'a, 'h> {
    index: &'a BergeIndex<'h>,
    extra: Vec<usize>,
}

impl Host<'_, '_> {
    fn n(&self) -> usize {
        self.index.h.n()
    }

    fn in_extra(&self, v: usize) -> bool {
        self.extra.binary_search(&v).is_ok()
    }

    fn degree(&self, v: usize) -> usize {
        self.index.degree[v] + usize::from(self.in_extra(v))
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.index.adjacent[a].contains(b) || (self.in_extra(a) && self.in_extra(b))
    }

    fn slot_vertices(&self, slot: usize) -> &[usize] {
        if slot == self.index.slots - 1 {
            &self.extra
        } else {
            &self.index.h.edges()[slot]
        }
    }

    /// Slots containing both `a` and `b`, except `skip`.
    fn common_slots(&self, a: usize, b: usize, skip: Option<usize>) -> Vec<usize> {
        let mut out: Vec<usize> = self.index.incidence[a]
            .intersection(&self.index.incidence[b])
            .filter(|&s| Some(s) != skip)
            .collect();
        let last = self.index.slots - 1;
        if Some(last) != skip && self.in_extra(a) && self.in_extra(b) {
            out.push(last);
        }
        out
    }
}

fn run_search(
    host: &Host,
    f: &Graph,
    c: &SearchConstraints,
    required_slot: Option<usize>,
) -> Option<BergeWitness> {
    let n = host.n();
    if f.n() > n {
        return None;
    }
    let mut required = FixedBitSet::with_capacity(n);
    let mut forbidden = FixedBitSet::with_capacity(n);
    for &v in &c.required_core {
        if v >= n {
            return None;
        }
        required.insert(v);
    }
    for &v in &c.forbidden_core {
        if v >= n || required.contains(v) {
            return None;
        }
        forbidden.insert(v);
    }
    if required.count_ones(..) > f.n() {
        return None;
    }

    let clique = f.n() >= 2 && f.is_complete();
    let pinned_choices: Vec<Option<usize>> = match required_slot {
        None => vec![None],
        // Any edge of a clique is equivalent to any other.
        Some(_) if clique => vec![Some(0)],
        Some(_) => (0..f.edge_count()).map(Some).collect(),
    };
    let mut required_list: Vec<usize> = required.ones().collect();
    required_list.sort_by_key(|&v| host.index.rank[v]);

    for pinned in pinned_choices {
        let mut search = Search::new(
            host,
            f,
            clique,
            pinned,
            required_slot,
            &required,
            &forbidden,
        );
        search.required_list = required_list.clone();
        if search.extend(0) {
            return Some(search.witness());
        }
    }
    None
}

struct Search<'a, 'b, 'h> {
    host: &'a Host<'b, 'h>,
    clique: bool,
    order: Vec<usize>,
    f_deg: Vec<usize>,
    /// For each pattern vertex: (neighbour, pattern edge id).
    f_adj: Vec<Vec<(usize, usize)>>,
    edge_count: usize,
    pinned: Option<usize>,
    required_slot: Option<usize>,
    required: &'a FixedBitSet,
    forbidden: &'a FixedBitSet,
    required_list: Vec<usize>,
    missing_required: usize,
    image: Vec<usize>,
    used: FixedBitSet,
    matching: Matching,
    demand_edge: Vec<usize>,
}

impl<'a, 'b, 'h> Search<'a, 'b, 'h> {
    fn new(
        host: &'a Host<'b, 'h>,
        f: &Graph,
        clique: bool,
        pinned: Option<usize>,
        required_slot: Option<usize>,
        required: &'a FixedBitSet,
        forbidden: &'a FixedBitSet,
    ) -> Self {
        let nf = f.n();
        let f_deg = f.degrees();
        let mut f_adj = vec![Vec::new(); nf];
        for (id, &(a, b)) in f.edges().iter().enumerate() {
            f_adj[a].push((b, id));
            f_adj[b].push((a, id));
        }

        // Pinned endpoints first, then whichever vertex has the most placed
        // neighbours, then highest degree, then lowest id.
        let mut order = Vec::with_capacity(nf);
        let mut placed = vec![false; nf];
        if let Some(p) = pinned {
            let (a, b) = f.edges()[p];
            order.extend([a, b]);
            placed[a] = true;
            placed[b] = true;
        }
        while order.len() < nf {
            let next = (0..nf)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = f_adj[v].iter().filter(|&&(u, _)| placed[u]).count();
                    (links, f_deg[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }

        Search {
            host,
            clique,
            order,
            f_deg,
            f_adj,
            edge_count: f.edge_count(),
            pinned,
            required_slot,
            required,
            forbidden,
            required_list: Vec::new(),
            missing_required: required.count_ones(..),
            image: vec![NONE; nf],
            used: FixedBitSet::with_capacity(host.n()),
            matching: Matching::new(host.index.slots),
            demand_edge: Vec::new(),
        }
    }

    fn free_start(&self) -> usize {
        if self.pinned.is_some() {
            2
        } else {
            0
        }
    }

    fn candidates(&self, pos: usize) -> Vec<usize> {
        let host = self.host;
        let rank = &host.index.rank;
        let x = self.order[pos];
        let mut cands: Vec<usize> = if self.pinned.is_some() && pos < 2 {
            let mut v = host.slot_vertices(self.required_slot.unwrap()).to_vec();
            v.sort_by_key(|&w| rank[w]);
            v
        } else if let Some(anchor) = self.f_adj[x]
            .iter()
            .map(|&(y, _)| self.image[y])
            .filter(|&w| w != NONE)
            .min_by_key(|&w| host.index.neighbours[w].len())
        {
            let mut v = host.index.neighbours[anchor].clone();
            if host.in_extra(anchor) {
                for &u in &host.extra {
                    if u != anchor && !host.index.adjacent[anchor].contains(u) {
                        v.push(u);
                    }
                }
                v.sort_by_key(|&w| rank[w]);
            }
            v
        } else {
            host.index.by_rank.clone()
        };

        // Images must increase in rank for a clique, within the pinned
        // pair and within the free positions.
        if self.clique {
            let prev = if pos == 1 || pos > self.free_start() {
                Some(rank[self.image[self.order[pos - 1]]])
            } else {
                None
            };
            if let Some(p) = prev {
                let cut = cands.partition_point(|&w| rank[w] <= p);
                cands.drain(..cut);
            }
        }
        cands
    }

    fn extend(&mut self, pos: usize) -> bool {
        let nf = self.order.len();
        if pos == nf {
            return true;
        }
        let slots_left = nf - pos;
        if self.missing_required > slots_left {
            return false;
        }
        let must_be_required = self.missing_required == slots_left;
        let x = self.order[pos];
        let in_free_clique_part = self.clique && pos >= self.free_start();
        let min_missing_rank = if in_free_clique_part {
            self.required_list
                .iter()
                .filter(|&&v| !self.used.contains(v))
                .map(|&v| self.host.index.rank[v])
                .min()
        } else {
            None
        };

        for w in self.candidates(pos) {
            let rank_w = self.host.index.rank[w];
            if let Some(m) = min_missing_rank {
                // Later free positions only move up in rank.
                if rank_w > m {
                    break;
                }
            }
            if self.used.contains(w) || self.forbidden.contains(w) {
                continue;
            }
            let is_required = self.required.contains(w);
            if must_be_required && !is_required {
                continue;
            }
            if self.host.degree(w) < self.f_deg[x] {
                continue;
            }
            let mut ok = true;
            for &(y, id) in &self.f_adj[x] {
                let iy = self.image[y];
                if iy != NONE && Some(id) != self.pinned && !self.host.adjacent(w, iy) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }

            let cp = self.matching.checkpoint();
            let demands_before = self.demand_edge.len();
            for i in 0..self.f_adj[x].len() {
                let (y, id) = self.f_adj[x][i];
                let iy = self.image[y];
                if iy == NONE || Some(id) == self.pinned {
                    continue;
                }
                let supply = self.host.common_slots(w, iy, self.required_slot);
                self.matching.add_left(supply);
                self.demand_edge.push(id);
            }
            let feasible = self.matching.left_count() == demands_before
                || self.matching.maximize() == self.matching.left_count();
            if feasible {
                self.image[x] = w;
                self.used.insert(w);
                if is_required {
                    self.missing_required -= 1;
                }
                if self.extend(pos + 1) {
                    return true;
                }
                if is_required {
                    self.missing_required += 1;
                }
                self.used.set(w, false);
                self.image[x] = NONE;
            }
            self.matching.rollback(cp);
            self.demand_edge.truncate(demands_before);
        }
        false
    }

    fn witness(&self) -> BergeWitness {
        let mut edge_map = vec![NONE; self.edge_count];
        for (l, &id) in self.demand_edge.iter().enumerate() {
            edge_map[id] = self.matching.mate_of_left(l).expect("perfect matching");
        }
        if let Some(p) = self.pinned {
            edge_map[p] = self.required_slot.unwrap();
        }
        BergeWitness {
            core_map: self.image.clone(),
            edge_map,
        }
    }
}

/// A witness for a Berge copy of `f` in `h` satisfying `c`, or `None` when
/// none exists.
pub fn find_berge_witness(
    f: &Graph,
    h: &Hypergraph,
    c: &SearchConstraints,
) -> Option<BergeWitness> {
    BergeIndex::new(h).find_witness(f, c)
}

pub fn contains_berge(f: &Graph, h: &Hypergraph) -> bool {
    find_berge_witness(f, h, &SearchConstraints::default()).is_some()
}

/// Whether `H + e` has a Berge copy of `f` that uses `e`.
pub fn creates_new_berge(h: &Hypergraph, e: &[usize], f: &Graph) -> Result<bool> {
    BergeIndex::new(h).creates_new(f, e)
}

/// Whether adding the 2-edge `uv` creates a new Berge-K_ℓ.
pub fn is_ell_good(h: &Hypergraph, u: usize, v: usize, ell: usize) -> Result<bool> {
    if u == v {
        return Err(Error::InvalidEdge(vec![u, v]));
    }
    creates_new_berge(h, &[u, v], &make_clique(ell)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreReport {
    pub subset_size: usize,
    pub checked: u64,
    pub failures: Vec<Vec<usize>>,
}

impl CoreReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every `m`-subset of the vertices is exactly the core of some
/// Berge-K_m.
pub fn all_subsets_are_cores(h: &Hypergraph, m: usize) -> Result<CoreReport> {
    if m > h.n() {
        return Err(Error::InvalidParameter(format!(
            "subset size {m} exceeds {} vertices",
            h.n()
        )));
    }
    let clique = if m >= 2 {
        make_clique(m)?
    } else {
        Graph::empty(m)
    };
    let index = BergeIndex::new(h);
    let mut report = CoreReport {
        subset_size: m,
        checked: 0,
        failures: Vec::new(),
    };
    for subset in crate::combin::KSubsets::all(h.n(), m) {
        report.checked += 1;
        let c = SearchConstraints::require_core(subset.clone());
        if index.find_witness(&clique, &c).is_none() {
            report.failures.push(subset);
        }
    }
    Ok(report)
}

/// Assigns each demanded pair its own containing hyperedge, via maximum
/// bipartite matching. Returns the supply index for each demand.
pub fn edge_assignment(demands: &[(usize, usize)], supply: &[Vec<usize>]) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = demands
        .iter()
        .map(|&(a, b)| {
            supply
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(&a) && e.contains(&b))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    max_matching(&adj, supply.len()).into_iter().collect()
}
