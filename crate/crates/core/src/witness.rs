use std::collections::HashSet;
use std::fmt::Write as _;

use crate::hypergraph::{format_set, Graph, Hypergraph};

/// A Berge copy of a pattern graph: where each pattern vertex sits, and
/// which hyperedge stands in for each pattern edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeWitness {
    /// Host vertex of each pattern vertex.
    pub core_map: Vec<usize>,
    /// Host edge index for each pattern edge, in `Graph::edges` order.
    pub edge_map: Vec<usize>,
}

/// Restrictions on which witnesses count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchConstraints {
    /// Host vertices that must all be core vertices.
    pub required_core: Vec<usize>,
    /// Host vertices that must not be core vertices.
    pub forbidden_core: Vec<usize>,
    /// A host edge that must be the image of some pattern edge.
    pub required_edge: Option<Vec<usize>>,
}

impl SearchConstraints {
    pub fn require_core(core: impl Into<Vec<usize>>) -> Self {
        SearchConstraints {
            required_core: core.into(),
            ..Default::default()
        }
    }

    pub fn require_edge(edge: impl Into<Vec<usize>>) -> Self {
        SearchConstraints {
            required_edge: Some(edge.into()),
            ..Default::default()
        }
    }

    pub fn forbid(mut self, vertices: impl IntoIterator<Item = usize>) -> Self {
        self.forbidden_core.extend(vertices);
        self
    }
}

impl BergeWitness {
    /// Core vertices in ascending order.
    pub fn core_vertices(&self) -> Vec<usize> {
        let mut c = self.core_map.clone();
        c.sort_unstable();
        c
    }

    /// Text form: `core: x->w` lines for every pattern vertex, then
    /// `edge: {x,y} -> {a,b,c}` lines for every pattern edge.
    pub fn to_text(&self, f: &Graph, h: &Hypergraph) -> String {
        let mut s = String::new();
        for (x, w) in self.core_map.iter().enumerate() {
            let _ = writeln!(s, "core: {x}->{w}");
        }
        for (&(a, b), &slot) in f.edges().iter().zip(&self.edge_map) {
            let _ = writeln!(
                s,
                "edge: {{{a},{b}}} -> {{{}}}",
                format_set(&h.edges()[slot], ",")
            );
        }
        s
    }
}

/// Checks a witness against the definition directly: injective core map,
/// distinct edge images, each pattern edge inside its image, and the
/// constraints if given.
pub fn validate(
    f: &Graph,
    h: &Hypergraph,
    w: &BergeWitness,
    constraints: Option<&SearchConstraints>,
) -> Result<(), String> {
    if w.core_map.len() != f.n() {
        return Err(format!(
            "core map has {} entries, pattern has {} vertices",
            w.core_map.len(),
            f.n()
        ));
    }
    if w.edge_map.len() != f.edge_count() {
        return Err(format!(
            "edge map has {} entries, pattern has {} edges",
            w.edge_map.len(),
            f.edge_count()
        ));
    }
    let mut images = HashSet::new();
    for &v in &w.core_map {
        if v >= h.n() {
            return Err(format!("core vertex {v} out of range"));
        }
        if !images.insert(v) {
            return Err(format!("core vertex {v} used twice"));
        }
    }
    let mut used = HashSet::new();
    for (&(a, b), &slot) in f.edges().iter().zip(&w.edge_map) {
        let Some(edge) = h.edges().get(slot) else {
            return Err(format!("edge index {slot} out of range"));
        };
        if !used.insert(slot) {
            return Err(format!("hyperedge {edge:?} used twice"));
        }
        for x in [a, b] {
            if !edge.contains(&w.core_map[x]) {
                return Err(format!("pattern edge {{{a},{b}}} not inside {edge:?}"));
            }
        }
    }
    if let Some(c) = constraints {
        for v in &c.required_core {
            if !images.contains(v) {
                return Err(format!("required core vertex {v} missing"));
            }
        }
        for v in &c.forbidden_core {
            if images.contains(v) {
                return Err(format!("forbidden core vertex {v} used"));
            }
        }
        if let Some(req) = &c.required_edge {
            let mut req = req.clone();
            req.sort_unstable();
            if !w.edge_map.iter().any(|&slot| h.edges()[slot] == req) {
                return Err(format!("required edge {req:?} not used"));
            }
        }
    }
    Ok(())
}
