//! Exact invariants of small pattern graphs, plus the standard generators.
//!
//! Everything here is exhaustive. Independence and cover numbers use bitmask
//! branching and are limited to 32 vertices; the feedback search enumerates
//! vertex subsets by increasing size and is limited to 24.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combin::KSubsets;
use crate::error::{Error, Result};
use crate::hypergraph::Graph;

pub const MAX_BITMASK_VERTICES: usize = 32;
pub const MAX_FEEDBACK_VERTICES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub alpha: usize,
    pub beta: usize,
    pub delta: usize,
    pub girth: Girth,
    pub feedback: usize,
    pub feedback_set: Vec<usize>,
}

pub fn report(f: &Graph) -> Result<InvariantReport> {
    let (feedback, feedback_set) = feedback_number(f)?;
    Ok(InvariantReport {
        alpha: independence_number(f)?,
        beta: vertex_cover_number(f)?,
        delta: min_degree(f)?,
        girth: girth(f),
        feedback,
        feedback_set,
    })
}

fn neighbour_masks(f: &Graph) -> Result<Vec<u32>> {
    if f.n() > MAX_BITMASK_VERTICES {
        return Err(Error::SizeCap {
            what: "pattern graph",
            size: f.n(),
            cap: MAX_BITMASK_VERTICES,
        });
    }
    let mut adj = vec![0u32; f.n()];
    for &(a, b) in f.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    Ok(adj)
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// α(F), the size of a largest independent set.
pub fn independence_number(f: &Graph) -> Result<usize> {
    let adj = neighbour_masks(f)?;
    Ok(max_independent(&adj, full_mask(f.n())) as usize)
}

fn max_independent(adj: &[u32], mut cand: u32) -> u32 {
    let mut taken = 0;
    loop {
        if cand == 0 {
            return taken;
        }
        // Vertices of degree <= 1 can always be taken.
        let mut best = (0, u32::MAX);
        let mut forced = None;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                forced = Some(v);
                break;
            }
            if best.1 == u32::MAX || d > best.0 {
                best = (d, v as u32);
            }
        }
        if let Some(v) = forced {
            taken += 1;
            cand &= !(adj[v] | (1 << v));
            continue;
        }
        let v = best.1 as usize;
        let without = max_independent(adj, cand & !(1 << v));
        let with = 1 + max_independent(adj, cand & !(adj[v] | (1 << v)));
        return taken + without.max(with);
    }
}

/// β(F), the size of a smallest vertex cover. Computed by its own branching
/// rather than as `n - α`.
pub fn vertex_cover_number(f: &Graph) -> Result<usize> {
    let adj = neighbour_masks(f)?;
    Ok(min_cover(&adj, full_mask(f.n())) as usize)
}

fn min_cover(adj: &[u32], mut alive: u32) -> u32 {
    let mut cover = 0;
    loop {
        let mut best: Option<(u32, usize)> = None;
        let mut pendant = None;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & alive).count_ones();
            if d == 0 {
                alive &= !(1 << v);
            } else if d == 1 {
                pendant = Some(v);
                break;
            } else if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        if let Some(v) = pendant {
            // Some minimum cover takes the neighbour of a pendant vertex.
            let u = (adj[v] & alive).trailing_zeros() as usize;
            cover += 1;
            alive &= !(1 << u) & !(1 << v);
            continue;
        }
        let Some((_, v)) = best else {
            return cover;
        };
        let nbrs = adj[v] & alive;
        let take_v = 1 + min_cover(adj, alive & !(1 << v));
        let take_nbrs = nbrs.count_ones() + min_cover(adj, alive & !nbrs & !(1 << v));
        return cover + take_v.min(take_nbrs);
    }
}

/// δ(F).
pub fn min_degree(f: &Graph) -> Result<usize> {
    f.degrees()
        .into_iter()
        .min()
        .ok_or_else(|| Error::InvalidParameter("minimum degree of the empty graph".into()))
}

/// Shortest cycle length by breadth-first search from every vertex.
pub fn girth(f: &Graph) -> Girth {
    let adj = f.adjacency();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; f.n()];
    let mut parent = vec![usize::MAX; f.n()];
    for root in 0..f.n() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// True iff `f` minus `removed` has no cycle.
pub fn is_acyclic_without(f: &Graph, removed: &[usize]) -> bool {
    let mut gone = vec![false; f.n()];
    for &v in removed {
        gone[v] = true;
    }
    let mut parent: Vec<usize> = (0..f.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in f.edges() {
        if gone[a] || gone[b] {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// f(F) and the lexicographically least minimum feedback vertex set.
pub fn feedback_number(f: &Graph) -> Result<(usize, Vec<usize>)> {
    if f.n() > MAX_FEEDBACK_VERTICES {
        return Err(Error::SizeCap {
            what: "pattern graph",
            size: f.n(),
            cap: MAX_FEEDBACK_VERTICES,
        });
    }
    for size in 0..=f.n() {
        if let Some(s) = KSubsets::all(f.n(), size).find(|s| is_acyclic_without(f, s)) {
            return Ok((size, s));
        }
    }
    unreachable!("removing every vertex leaves an acyclic graph")
}

pub fn make_clique(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("clique size {l} < 2")));
    }
    Graph::new(l, (0..l).flat_map(|a| (a + 1..l).map(move |b| (a, b))))
}

/// K_{1,l}: centre 0, leaves `1..=l`.
pub fn make_star(l: usize) -> Result<Graph> {
    if l < 1 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    Graph::new(l + 1, (1..=l).map(|v| (0, v)))
}

pub fn make_cycle(l: usize) -> Result<Graph> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {l} < 3")));
    }
    Graph::new(l, (0..l).map(|v| (v, (v + 1) % l)))
}

/// Path with `m` vertices.
pub fn make_path(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("path on {m} vertices")));
    }
    Graph::new(m, (1..m).map(|v| (v - 1, v)))
}

/// F ∨ G: `g` is shifted past `f`'s vertices and every cross pair is joined.
pub fn complete_join(f: &Graph, g: &Graph) -> Graph {
    let off = f.n();
    let edges = f
        .edges()
        .iter()
        .copied()
        .chain(g.edges().iter().map(|&(a, b)| (a + off, b + off)))
        .chain((0..f.n()).flat_map(|x| (0..g.n()).map(move |y| (x, y + off))));
    Graph::new(f.n() + g.n(), edges).expect("join of valid graphs is valid")
}
