//! Generators for the saturated and Berge-free constructions.
//!
//! Vertex numbering is fixed: c-vertices, then d-vertices, then A-blocks in
//! index order, then B-blocks, then the apex, then spares. Role tags are
//! 1-based, so `c1` is vertex 0.

use std::fmt;

use crate::combin::KSubsets;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::invariants::{feedback_number, independence_number, is_acyclic_without};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// c_i of a small construction.
    C(usize),
    /// d_j, padding every small-construction edge to size k.
    D(usize),
    /// s-th vertex of block A_i.
    A(usize, usize),
    /// s-th vertex of block B_i.
    B(usize, usize),
    Apex,
    /// Leftover vertex that carries no edge.
    Spare(usize),
    /// j-th vertex of the core set V_1.
    V1(usize),
    /// Vertex of V_2, carrying exactly one edge.
    V2(usize),
    /// s-th vertex of the i-th a-block of V_3.
    V3(usize, usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::C(i) => write!(f, "c{i}"),
            Role::D(j) => write!(f, "d{j}"),
            Role::A(i, s) => write!(f, "A{i}.{s}"),
            Role::B(i, s) => write!(f, "B{i}.{s}"),
            Role::Apex => f.write_str("v"),
            Role::Spare(s) => write!(f, "T{s}"),
            Role::V1(j) => write!(f, "v{j}"),
            Role::V2(s) => write!(f, "w{s}"),
            Role::V3(i, s) => write!(f, "M{i}.{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionLabels {
    roles: Vec<Role>,
}

impl ConstructionLabels {
    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn vertices_where(&self, pred: impl Fn(Role) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(self.roles[v]))
            .collect()
    }

    /// `role vertex` lines in vertex order.
    pub fn to_text(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("{r} {v}\n"))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub hypergraph: Hypergraph,
    pub labels: ConstructionLabels,
    /// Hypothesis warnings that did not stop generation.
    pub warnings: Vec<String>,
}

impl Construction {
    fn new(n: usize, edges: Vec<Vec<usize>>, roles: Vec<Role>) -> Result<Self> {
        debug_assert_eq!(roles.len(), n);
        Ok(Construction {
            hypergraph: Hypergraph::new(n, edges)?,
            labels: ConstructionLabels { roles },
            warnings: Vec::new(),
        })
    }
}

fn small_roles(c_count: usize, k: usize) -> Vec<Role> {
    (1..=c_count)
        .map(Role::C)
        .chain((1..=k - 3).map(Role::D))
        .collect()
}

/// C(k,4): `{c_i, c_{i+1}, c_{i+2}} ∪ D` for i = 1..5, indices mod 5.
pub fn build_c_k_4(k: usize) -> Result<Construction> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("uniformity k={k} < 3")));
    }
    let d: Vec<usize> = (5..k + 2).collect();
    let edges = (0..5)
        .map(|i| {
            let mut e = vec![i, (i + 1) % 5, (i + 2) % 5];
            e.extend(&d);
            e
        })
        .collect();
    Construction::new(k + 2, edges, small_roles(5, k))
}

/// C(k,ℓ) for ℓ ≥ 5: every edge of K_ℓ − c1c2 padded by one extra c-vertex
/// and D.
pub fn build_c_k_ell(k: usize, ell: usize) -> Result<Construction> {
    if k < 3 || ell < 5 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 3 and ell >= 5, got k={k} ell={ell}"
        )));
    }
    // 0-based: c1 = 0, c2 = 1, c3 = 2, c4 = 3, c5 = 4.
    let (c1, c2, c3, c4, c5) = (0, 1, 2, 3, 4);
    let d: Vec<usize> = (ell..ell + k - 3).collect();
    let mut edges = Vec::new();
    for x in 0..ell {
        for y in x + 1..ell {
            if (x, y) == (c1, c2) {
                continue;
            }
            let has = |v| x == v || y == v;
            let third = if has(c1) {
                c2
            } else if (x, y) == (c2, c3) {
                c4
            } else if (x, y) == (c2, c4) {
                c5
            } else if has(c2) {
                c3
            } else {
                c1
            };
            let mut e = vec![x, y, third];
            e.extend(&d);
            edges.push(e);
        }
    }
    Construction::new(k + ell - 3, edges, small_roles(ell, k))
}

/// C(k,4) or C(k,ℓ) depending on ℓ.
pub fn build_c(k: usize, ell: usize) -> Result<Construction> {
    match ell {
        4 => build_c_k_4(k),
        l if l >= 5 => build_c_k_ell(k, l),
        _ => Err(Error::InvalidParameter(format!(
            "clique size ell={ell} < 4"
        ))),
    }
}

pub fn small_vertex_count(k: usize, ell: usize) -> usize {
    if ell == 4 {
        k + 2
    } else {
        k + ell - 3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SParameters {
    pub a: usize,
    pub b: usize,
}

/// The unique `(a, b)` with `a(k−1) + b(k−2) = n − |V(C)| − 1`, `1 ≤ b ≤ k−1`
/// and `a ≥ 0`.
pub fn solve_ab(n: usize, k: usize, ell: usize) -> Result<SParameters> {
    if k < 3 || ell < 4 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 3 and ell >= 4, got k={k} ell={ell}"
        )));
    }
    let too_small = || Error::InvalidParameter(format!("n={n} too small for S(n,{k},{ell})"));
    let rest = n
        .checked_sub(small_vertex_count(k, ell) + 1)
        .ok_or_else(too_small)?;
    // k−2 ≡ −1 (mod k−1), so b ≡ −rest.
    let m = k - 1;
    let b = match (m - rest % m) % m {
        0 => m,
        r => r,
    };
    let used = b * (k - 2);
    if used > rest {
        return Err(too_small());
    }
    debug_assert_eq!((rest - used) % m, 0);
    Ok(SParameters {
        a: (rest - used) / m,
        b,
    })
}

/// S(n,k,ℓ): C(k,ℓ) plus edges `A_i ∪ {c_j}` and `B_i ∪ {v, c_j}` for
/// j = 1..ℓ−2.
pub fn build_s(n: usize, k: usize, ell: usize) -> Result<(Construction, SParameters)> {
    let params = solve_ab(n, k, ell)?;
    let small = build_c(k, ell)?;
    let vc = small.hypergraph.n();
    let mut edges = small.hypergraph.edges().to_vec();
    let mut roles = small.labels.roles.clone();
    let hubs: Vec<usize> = (0..ell - 2).collect();

    let mut next = vc;
    for i in 1..=params.a {
        let block: Vec<usize> = (next..next + k - 1).collect();
        roles.extend((1..k).map(|s| Role::A(i, s)));
        next += k - 1;
        for &c in &hubs {
            let mut e = block.clone();
            e.push(c);
            edges.push(e);
        }
    }
    let apex = n - 1;
    for i in 1..=params.b {
        let block: Vec<usize> = (next..next + k - 2).collect();
        roles.extend((1..k - 1).map(|s| Role::B(i, s)));
        next += k - 2;
        for &c in &hubs {
            let mut e = block.clone();
            e.extend([apex, c]);
            edges.push(e);
        }
    }
    debug_assert_eq!(next, apex);
    roles.push(Role::Apex);
    Ok((Construction::new(n, edges, roles)?, params))
}

/// H(n,k,F): ν = |V(F)| − α(F) − 1 core vertices, blocks of size k−ν+1, and
/// for every block A_i the ν edges `(V_1 ∪ A_i) ∖ {v_j}`.
pub fn build_h_min_deg(n: usize, k: usize, f: &Graph) -> Result<Construction> {
    let alpha = independence_number(f)?;
    if f.n() < alpha + 2 {
        return Err(Error::InvalidParameter(format!(
            "need |V(F)| >= alpha(F) + 2, got {} and alpha {alpha}",
            f.n()
        )));
    }
    let nu = f.n() - alpha - 1;
    if k <= nu {
        return Err(Error::InvalidParameter(format!(
            "need k > nu, got k={k} nu={nu}"
        )));
    }
    if n < nu {
        return Err(Error::InvalidParameter(format!(
            "n={n} smaller than nu={nu}"
        )));
    }
    let block = k - nu + 1;
    let a = (n - nu) / block;
    let t = (n - nu) % block;

    let mut roles: Vec<Role> = (1..=nu).map(Role::V1).collect();
    let mut edges = Vec::with_capacity(a * nu);
    for i in 1..=a {
        let start = nu + (i - 1) * block;
        roles.extend((1..=block).map(|s| Role::A(i, s)));
        for j in 0..nu {
            let e: Vec<usize> = (0..nu)
                .filter(|&x| x != j)
                .chain(start..start + block)
                .collect();
            edges.push(e);
        }
    }
    roles.extend((1..=t).map(Role::Spare));
    Construction::new(n, edges, roles)
}

/// H_k(n,a,G,S). Without `feedback_set`, the lexicographically least minimum
/// feedback set of `g` is used; a supplied set must be a minimum one.
pub fn build_h_feedback(
    n: usize,
    k: usize,
    a: usize,
    g: &Graph,
    feedback_set: Option<&[usize]>,
) -> Result<Construction> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("uniformity k={k} < 3")));
    }
    let (f, computed) = feedback_number(g)?;
    let s: Vec<usize> = match feedback_set {
        None => computed,
        Some(s) => {
            let mut s = s.to_vec();
            s.sort_unstable();
            s.dedup();
            if s.iter().any(|&v| v >= g.n()) || !is_acyclic_without(g, &s) {
                return Err(Error::InvalidParameter(format!(
                    "{s:?} is not a feedback vertex set"
                )));
            }
            if s.len() != f {
                return Err(Error::InvalidParameter(format!(
                    "feedback set {s:?} is not minimum (f = {f})"
                )));
            }
            s
        }
    };
    if f == 0 {
        return Construction::new(n, Vec::new(), (1..=n).map(Role::Spare).collect());
    }
    if a < 1 || a > k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= a <= k, got a={a}"
        )));
    }
    if a + f < k {
        return Err(Error::InvalidParameter(format!(
            "need a + f(G) >= k, got a={a} f={f} k={k}"
        )));
    }
    let core = g.induced(&s);
    let links = core.edge_count();
    let v2 = (k - 2) * links;
    let v3 = n
        .checked_sub(f + v2)
        .filter(|&r| r >= a)
        .ok_or_else(|| Error::InvalidParameter(format!("n={n} leaves no room for an a-block")))?;

    let mut roles: Vec<Role> = (1..=f).map(Role::V1).collect();
    roles.extend((1..=v2).map(Role::V2));
    let mut edges = Vec::new();
    for (i, &(x, y)) in core.edges().iter().enumerate() {
        let mut e = vec![x, y];
        e.extend(f + i * (k - 2)..f + (i + 1) * (k - 2));
        edges.push(e);
    }
    let blocks = v3 / a;
    let first = f + v2;
    for i in 0..blocks {
        let block: Vec<usize> = (first + i * a..first + (i + 1) * a).collect();
        roles.extend((1..=a).map(|s| Role::V3(i + 1, s)));
        for pick in KSubsets::all(f, k - a) {
            let mut e = block.clone();
            e.extend(pick);
            edges.push(e);
        }
    }
    roles.extend((1..=v3 % a).map(Role::Spare));
    let mut out = Construction::new(n, edges, roles)?;
    if a == k {
        out.warnings.push(format!(
            "a = k = {k}: outside 1 <= a <= k-1, accepted for the a = k-f+1 case"
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binomial;
    use crate::invariants::{make_clique, make_cycle};

    #[test]
    fn c34_is_the_tight_cycle() {
        let c = build_c_k_4(3).unwrap();
        let expected = Hypergraph::new(
            5,
            vec![
                vec![0, 1, 2],
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 0],
                vec![4, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(c.hypergraph, expected);
        assert!(c.hypergraph.is_k_uniform(3));
        assert_eq!(c.labels.vertex(Role::C(1)), Some(0));
    }

    #[test]
    fn c_k_4_shape() {
        for k in 3..=7 {
            let c = build_c_k_4(k).unwrap();
            assert_eq!((c.hypergraph.n(), c.hypergraph.edge_count()), (k + 2, 5));
            assert!(c.hypergraph.is_k_uniform(k));
        }
        let c = build_c_k_4(4).unwrap();
        let d1 = c.labels.vertex(Role::D(1)).unwrap();
        assert!(c.hypergraph.edges().iter().all(|e| e.contains(&d1)));
        let c1 = c.labels.vertex(Role::C(1)).unwrap();
        assert!(c.hypergraph.dominates(d1, c1));
        assert!(build_c_k_4(2).is_err());
    }

    #[test]
    fn c_k_ell_shape() {
        let c = build_c_k_ell(3, 5).unwrap();
        assert_eq!((c.hypergraph.n(), c.hypergraph.edge_count()), (5, 9));
        assert!(c.hypergraph.is_k_uniform(3));
        // c2 c3 → c2 c3 c4
        assert!(c.hypergraph.contains_edge(&[1, 2, 3]));
        let c = build_c_k_ell(4, 5).unwrap();
        let d1 = c.labels.vertex(Role::D(1)).unwrap();
        assert!(c.hypergraph.edges().iter().all(|e| e.contains(&d1)));
        for k in 3..=5 {
            for ell in 5..=8 {
                let c = build_c_k_ell(k, ell).unwrap();
                assert_eq!(c.hypergraph.n(), k + ell - 3);
                assert_eq!(c.hypergraph.edge_count() as u64, binomial(ell, 2) - 1);
                assert!(c.hypergraph.is_k_uniform(k));
            }
        }
        assert!(build_c_k_ell(3, 4).is_err());
    }

    #[test]
    fn solve_ab_examples() {
        assert_eq!(solve_ab(20, 3, 4).unwrap(), SParameters { a: 6, b: 2 });
        assert_eq!(solve_ab(21, 3, 4).unwrap(), SParameters { a: 7, b: 1 });
        assert_eq!(solve_ab(50, 4, 5).unwrap(), SParameters { a: 13, b: 2 });
        assert!(solve_ab(6, 3, 4).is_err());
        // rest = 1 with k = 5 needs b = 3, i.e. 9 vertices: impossible.
        assert!(solve_ab(9, 5, 4).is_err());
    }

    #[test]
    fn solve_ab_brute_force_agrees() {
        for k in 3..=6 {
            for ell in 4..=6 {
                for n in 0..120 {
                    let target = n as i64 - small_vertex_count(k, ell) as i64 - 1;
                    let brute: Vec<(usize, usize)> = (0..=n)
                        .flat_map(|a| (1..k).map(move |b| (a, b)))
                        .filter(|&(a, b)| (a * (k - 1) + b * (k - 2)) as i64 == target)
                        .collect();
                    match solve_ab(n, k, ell) {
                        Ok(p) => assert_eq!(brute, vec![(p.a, p.b)], "n={n} k={k} ell={ell}"),
                        Err(_) => assert!(brute.is_empty(), "n={n} k={k} ell={ell}"),
                    }
                }
            }
        }
    }

    #[test]
    fn s_edge_counts() {
        let (s, p) = build_s(20, 3, 4).unwrap();
        assert_eq!(s.hypergraph.edge_count(), 21);
        assert_eq!(p, SParameters { a: 6, b: 2 });
        let (s, _) = build_s(21, 3, 4).unwrap();
        assert_eq!(s.hypergraph.edge_count(), 21);
        assert_eq!(s.hypergraph.n(), 21);
    }

    #[test]
    fn s_structure() {
        for (n, k, ell) in [(40, 3, 4), (61, 4, 5), (90, 5, 6), (33, 3, 6)] {
            let (s, p) = build_s(n, k, ell).unwrap();
            let h = &s.hypergraph;
            assert_eq!(h.n(), n);
            assert!(h.is_k_uniform(k));
            let vc = small_vertex_count(k, ell);
            let heavy = h
                .edges()
                .iter()
                .filter(|e| e.iter().filter(|&&v| v < vc).count() >= 2)
                .count();
            assert_eq!(heavy as u64, binomial(ell, 2) - 1);
            let apex = s.labels.vertex(Role::Apex).unwrap();
            let deg = h.degrees();
            assert_eq!(deg[apex], p.b * (ell - 2));
            let mut nbrs: Vec<usize> = h
                .edges()
                .iter()
                .filter(|e| e.contains(&apex))
                .flatten()
                .copied()
                .filter(|&u| u != apex)
                .collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            let strong: Vec<usize> = nbrs.into_iter().filter(|&u| deg[u] >= ell - 1).collect();
            assert_eq!(strong, (0..ell - 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn h_min_deg_k4() {
        let c = build_h_min_deg(12, 3, &make_clique(4).unwrap()).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 10);
        assert!(c.hypergraph.is_k_uniform(3));
        for i in 1..=5 {
            let block = c
                .labels
                .vertices_where(|r| matches!(r, Role::A(j, _) if j == i));
            let meet = c
                .hypergraph
                .edges()
                .iter()
                .filter(|e| e.iter().any(|v| block.contains(v)))
                .count();
            assert_eq!(meet, 2);
        }
        let star = crate::invariants::make_star(3).unwrap();
        assert!(build_h_min_deg(12, 3, &star).is_err());
    }

    #[test]
    fn h_feedback_cases() {
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let h = build_h_feedback(20, 3, 2, &tree, None).unwrap();
        assert_eq!((h.hypergraph.n(), h.hypergraph.edge_count()), (20, 0));

        let c5 = make_cycle(5).unwrap();
        let h = build_h_feedback(40, 3, 3, &c5, Some(&[2])).unwrap();
        assert_eq!(h.hypergraph.edge_count(), 13);
        assert!(h.hypergraph.is_k_uniform(3));
        assert_eq!(h.warnings.len(), 1);

        let k4 = make_clique(4).unwrap();
        let h = build_h_feedback(12, 3, 2, &k4, None).unwrap();
        // one link edge {v1, v2, w1}, then 4 blocks of 2 with 2 edges each,
        // one spare.
        assert!(h.hypergraph.contains_edge(&[0, 1, 2]));
        assert_eq!(h.hypergraph.edge_count(), 1 + 4 * 2);
        assert!(h.warnings.is_empty());
        let deg = h.hypergraph.degrees();
        for v in h.labels.vertices_where(|r| matches!(r, Role::V2(_))) {
            assert_eq!(deg[v], 1);
        }
        assert_eq!(deg[11], 0);

        assert!(build_h_feedback(12, 3, 2, &k4, Some(&[0])).is_err());
        assert!(build_h_feedback(12, 3, 2, &k4, Some(&[0, 1, 2])).is_err());
        assert!(build_h_feedback(12, 3, 0, &k4, None).is_err());
        assert!(build_h_feedback(3, 3, 2, &k4, None).is_err());
    }
}
