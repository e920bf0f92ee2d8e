//! Hopcroft–Karp maximum bipartite matching.
//!
//! [`Matching`] supports growing the left side one vertex at a time and
//! re-maximizing from the current matching, with checkpoints so that a
//! backtracking search can undo everything added since a given point.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
pub struct Checkpoint {
    left: usize,
    log: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Matching {
    adj: Vec<Vec<usize>>,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    matched: usize,
    // (is_right, index, previous mate)
    log: Vec<(bool, usize, usize)>,
    dist: Vec<usize>,
}

impl Matching {
    pub fn new(right_count: usize) -> Self {
        Matching {
            mate_right: vec![NONE; right_count],
            ..Default::default()
        }
    }

    /// Clears all state and resizes the right side.
    pub fn reset(&mut self, right_count: usize) {
        self.adj.clear();
        self.mate_left.clear();
        self.mate_right.clear();
        self.mate_right.resize(right_count, NONE);
        self.matched = 0;
        self.log.clear();
    }

    pub fn left_count(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.matched
    }

    pub fn add_left(&mut self, rights: Vec<usize>) -> usize {
        debug_assert!(rights.iter().all(|&r| r < self.mate_right.len()));
        self.adj.push(rights);
        self.mate_left.push(NONE);
        self.adj.len() - 1
    }

    pub fn mate_of_left(&self, l: usize) -> Option<usize> {
        match self.mate_left[l] {
            NONE => None,
            r => Some(r),
        }
    }

    pub fn is_left_perfect(&self) -> bool {
        self.matched == self.adj.len()
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            left: self.adj.len(),
            log: self.log.len(),
        }
    }

    pub fn rollback(&mut self, cp: Checkpoint) {
        while self.log.len() > cp.log {
            let (is_right, i, old) = self.log.pop().unwrap();
            if is_right {
                self.mate_right[i] = old;
            } else {
                if self.mate_left[i] == NONE && old != NONE {
                    self.matched += 1;
                } else if self.mate_left[i] != NONE && old == NONE {
                    self.matched -= 1;
                }
                self.mate_left[i] = old;
            }
        }
        self.adj.truncate(cp.left);
        self.mate_left.truncate(cp.left);
    }

    fn set_left(&mut self, l: usize, r: usize) {
        self.log.push((false, l, self.mate_left[l]));
        if self.mate_left[l] == NONE {
            self.matched += 1;
        }
        self.mate_left[l] = r;
    }

    fn set_right(&mut self, r: usize, l: usize) {
        self.log.push((true, r, self.mate_right[r]));
        self.mate_right[r] = l;
    }

    /// Augments to a maximum matching and returns its size.
    pub fn maximize(&mut self) -> usize {
        let n = self.adj.len();
        loop {
            self.dist.clear();
            self.dist.resize(n, NONE);
            let mut queue = VecDeque::new();
            for l in 0..n {
                if self.mate_left[l] == NONE {
                    self.dist[l] = 0;
                    queue.push_back(l);
                }
            }
            let mut free_layer = NONE;
            while let Some(l) = queue.pop_front() {
                if self.dist[l] >= free_layer {
                    continue;
                }
                for &r in &self.adj[l] {
                    let m = self.mate_right[r];
                    if m == NONE {
                        free_layer = free_layer.min(self.dist[l]);
                    } else if self.dist[m] == NONE {
                        self.dist[m] = self.dist[l] + 1;
                        queue.push_back(m);
                    }
                }
            }
            if free_layer == NONE {
                return self.matched;
            }
            for l in 0..n {
                if self.mate_left[l] == NONE {
                    self.augment(l, free_layer);
                }
            }
        }
    }

    fn augment(&mut self, l: usize, free_layer: usize) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            let m = self.mate_right[r];
            let ok = if m == NONE {
                self.dist[l] == free_layer
            } else {
                self.dist[m] == self.dist[l] + 1 && self.augment(m, free_layer)
            };
            if ok {
                self.set_right(r, l);
                self.set_left(l, r);
                return true;
            }
        }
        self.dist[l] = NONE;
        false
    }
}

/// Maximum matching of a bipartite graph given as left adjacency lists.
/// Returns the mate of each left vertex.
pub fn max_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut m = Matching::new(right_count);
    for rights in adj {
        m.add_left(rights.clone());
    }
    m.maximize();
    (0..adj.len()).map(|l| m.mate_of_left(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_max(adj: &[Vec<usize>], used: &mut Vec<bool>, l: usize) -> usize {
        if l == adj.len() {
            return 0;
        }
        let mut best = brute_max(adj, used, l + 1);
        for &r in &adj[l] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + brute_max(adj, used, l + 1));
                used[r] = false;
            }
        }
        best
    }

    #[test]
    fn simple_cases() {
        assert!(max_matching(&[], 3).is_empty());
        let m = max_matching(&[vec![0], vec![0]], 1);
        assert_eq!(m.iter().flatten().count(), 1);
        let m = max_matching(&[vec![0, 1], vec![0]], 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
    }

    #[test]
    fn rollback_restores_state() {
        let mut m = Matching::new(3);
        m.add_left(vec![0, 1]);
        m.maximize();
        let cp = m.checkpoint();
        let before = m.mate_of_left(0);
        m.add_left(vec![0]);
        m.add_left(vec![1]);
        assert_eq!(m.maximize(), 2);
        m.rollback(cp);
        assert_eq!(m.left_count(), 1);
        assert_eq!(m.size(), 1);
        assert_eq!(m.mate_of_left(0), before);
        m.add_left(vec![2]);
        assert_eq!(m.maximize(), 2);
    }

    proptest! {
        #[test]
        fn matches_brute_force(adj in proptest::collection::vec(
            proptest::collection::btree_set(0usize..6, 0..4), 0..7)) {
            let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
            let mates = max_matching(&adj, 6);
            let size = mates.iter().flatten().count();
            prop_assert_eq!(size, brute_max(&adj, &mut vec![false; 6], 0));
            let mut seen = std::collections::HashSet::new();
            for (l, m) in mates.iter().enumerate() {
                if let Some(r) = m {
                    prop_assert!(adj[l].contains(r));
                    prop_assert!(seen.insert(*r));
                }
            }
        }

        #[test]
        fn incremental_equals_batch(adj in proptest::collection::vec(
            proptest::collection::btree_set(0usize..5, 0..3), 1..7)) {
            let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
            let mut inc = Matching::new(5);
            for (i, rights) in adj.iter().enumerate() {
                inc.add_left(rights.clone());
                inc.maximize();
                let batch = max_matching(&adj[..=i], 5).iter().flatten().count();
                prop_assert_eq!(inc.size(), batch);
            }
        }
    }
}
