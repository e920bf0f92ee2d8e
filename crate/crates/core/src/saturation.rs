//! Berge-F-freeness and saturation checking.
//!
//! The verifier treats the host as opaque. Missing k-sets are walked in
//! lexicographic order, cut into contiguous rank ranges, checked on a worker
//! pool and merged back in range order, so the report does not depend on
//! the number of workers.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::berge::{all_subsets_are_cores, BergeIndex, CoreReport};
use crate::combin::{binomial, unrank, KSubsets};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::invariants::make_clique;
use crate::witness::{BergeWitness, SearchConstraints};

const CHUNK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every missing k-set. The only mode that certifies saturation.
    Full,
    /// `count` missing k-sets drawn uniformly with a seeded generator.
    Sampled { count: u64, seed: u64 },
    /// One missing k-set per orbit of the twin-swapping automorphisms.
    Orbits,
}

impl std::fmt::Display for CheckMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckMode::Full => f.write_str("full"),
            CheckMode::Sampled { count, seed } => write!(f, "sampled({count},{seed})"),
            CheckMode::Orbits => f.write_str("orbits"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    /// Number of twin classes among the vertices.
    pub classes: usize,
    /// Missing k-sets covered by the checked representatives.
    pub covered: u64,
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub is_free: bool,
    pub violations_free: Vec<BergeWitness>,
    pub checked_missing: u64,
    /// Missing k-sets whose addition creates no new Berge copy.
    pub violations_sat: Vec<Vec<usize>>,
    pub elapsed: Duration,
    pub mode: CheckMode,
    pub orbits: Option<OrbitSummary>,
}

impl SaturationReport {
    /// Certified saturation: free, no failing missing edge, full mode.
    pub fn is_saturated(&self) -> bool {
        self.no_violations() && self.mode == CheckMode::Full
    }

    /// Free and no failing edge among those checked.
    pub fn no_violations(&self) -> bool {
        self.is_free && self.violations_sat.is_empty()
    }

    /// Same report with timing erased, for comparisons.
    pub fn untimed(&self) -> SaturationReport {
        SaturationReport {
            elapsed: Duration::ZERO,
            ..self.clone()
        }
    }
}

impl PartialEq for SaturationReport {
    fn eq(&self, other: &Self) -> bool {
        self.is_free == other.is_free
            && self.violations_free == other.violations_free
            && self.checked_missing == other.checked_missing
            && self.violations_sat == other.violations_sat
            && self.mode == other.mode
            && self.orbits == other.orbits
    }
}

/// `Ok(())` when `h` has no Berge copy of `f`, otherwise one witness.
pub fn is_berge_free(h: &Hypergraph, f: &Graph) -> std::result::Result<(), BergeWitness> {
    match BergeIndex::new(h).find_witness(f, &SearchConstraints::default()) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// Checks that `h` is Berge-`f`-free and that every missing k-set (or the
/// subset selected by `mode`) creates a new Berge copy. Missing sets are
/// not examined when `h` is not free.
pub fn is_saturated(
    h: &Hypergraph,
    f: &Graph,
    k: usize,
    mode: CheckMode,
    jobs: usize,
) -> Result<SaturationReport> {
    if !h.is_k_uniform(k) {
        return Err(Error::NotUniform(k));
    }
    let start = Instant::now();
    let index = BergeIndex::new(h);
    let mut report = SaturationReport {
        is_free: true,
        violations_free: Vec::new(),
        checked_missing: 0,
        violations_sat: Vec::new(),
        elapsed: Duration::ZERO,
        mode,
        orbits: None,
    };
    if let Some(w) = index.find_witness(f, &SearchConstraints::default()) {
        report.is_free = false;
        report.violations_free.push(w);
        report.elapsed = start.elapsed();
        return Ok(report);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;

    let (checked, failures) = match mode {
        CheckMode::Full => {
            let total = binomial(h.n(), k);
            let chunks = total.div_ceil(CHUNK);
            let parts: Vec<(u64, Vec<Vec<usize>>)> = pool.install(|| {
                (0..chunks)
                    .into_par_iter()
                    .map(|c| {
                        let sets = KSubsets::range(h.n(), k, c * CHUNK, (c + 1) * CHUNK);
                        check_sets(&index, f, sets.filter(|e| index.edge_slot(e).is_none()))
                    })
                    .collect()
            });
            merge(parts)
        }
        CheckMode::Sampled { count, seed } => {
            let sample = sample_missing(&index, k, count, seed);
            check_list(&pool, &index, f, &sample)
        }
        CheckMode::Orbits => {
            let (reps, summary) = orbit_representatives(&index, k);
            report.orbits = Some(summary);
            check_list(&pool, &index, f, &reps)
        }
    };
    report.checked_missing = checked;
    report.violations_sat = failures;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn check_sets(
    index: &BergeIndex,
    f: &Graph,
    sets: impl Iterator<Item = Vec<usize>>,
) -> (u64, Vec<Vec<usize>>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for e in sets {
        checked += 1;
        if !index.creates_new(f, &e).expect("missing edge") {
            failures.push(e);
        }
    }
    (checked, failures)
}

fn check_list(
    pool: &rayon::ThreadPool,
    index: &BergeIndex,
    f: &Graph,
    sets: &[Vec<usize>],
) -> (u64, Vec<Vec<usize>>) {
    let parts: Vec<_> = pool.install(|| {
        sets.par_chunks(CHUNK as usize)
            .map(|chunk| check_sets(index, f, chunk.iter().cloned()))
            .collect()
    });
    merge(parts)
}

fn merge(parts: Vec<(u64, Vec<Vec<usize>>)>) -> (u64, Vec<Vec<usize>>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (c, f) in parts {
        checked += c;
        failures.extend(f);
    }
    (checked, failures)
}

/// Up to `count` distinct missing k-sets, uniformly chosen, returned in
/// lexicographic order.
fn sample_missing(index: &BergeIndex, k: usize, count: u64, seed: u64) -> Vec<Vec<usize>> {
    let h = index.hypergraph();
    let total = binomial(h.n(), k);
    let present = h.edges().iter().filter(|e| e.len() == k).count() as u64;
    let missing = total - present;
    let target = count.min(missing);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks: Vec<u64> = if missing <= target.saturating_mul(4) {
        let all: Vec<u64> = (0..total)
            .filter(|&r| index.edge_slot(&unrank(h.n(), k, r)).is_none())
            .collect();
        rand::seq::index::sample(&mut rng, all.len(), target as usize)
            .into_iter()
            .map(|i| all[i])
            .collect()
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        while (out.len() as u64) < target {
            let r = rng.gen_range(0..total);
            if seen.insert(r) && index.edge_slot(&unrank(h.n(), k, r)).is_none() {
                out.push(r);
            }
        }
        out
    };
    ranks.sort_unstable();
    ranks.into_iter().map(|r| unrank(h.n(), k, r)).collect()
}

/// Twin classes: vertices contained in exactly the same edges. Classes are
/// ordered by their smallest member, members ascending.
pub fn twin_classes(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_key: HashMap<&[usize], usize> = HashMap::new();
    for (v, key) in incident.iter().enumerate() {
        let id = *by_key.entry(key.as_slice()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    classes
}

/// One missing k-set per twin-class signature (how many vertices it takes
/// from each class). Swapping twins fixes every edge, so all k-sets with the
/// same signature behave identically.
fn orbit_representatives(index: &BergeIndex, k: usize) -> (Vec<Vec<usize>>, OrbitSummary) {
    let classes = twin_classes(index.hypergraph());
    let mut reps = Vec::new();
    let mut covered = 0u64;
    let mut counts = vec![0usize; classes.len()];

    fn walk(
        i: usize,
        left: usize,
        classes: &[Vec<usize>],
        counts: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if left == 0 {
            visit(counts);
            return;
        }
        if i == classes.len() {
            return;
        }
        for c in (0..=left.min(classes[i].len())).rev() {
            counts[i] = c;
            walk(i + 1, left - c, classes, counts, visit);
        }
        counts[i] = 0;
    }

    walk(0, k, &classes, &mut counts, &mut |counts| {
        let mut rep: Vec<usize> = counts
            .iter()
            .zip(&classes)
            .flat_map(|(&c, class)| class[..c].iter().copied())
            .collect();
        rep.sort_unstable();
        if index.edge_slot(&rep).is_none() {
            covered += counts
                .iter()
                .zip(&classes)
                .map(|(&c, class)| binomial(class.len(), c))
                .product::<u64>();
            reps.push(rep);
        }
    });
    reps.sort();
    (
        reps,
        OrbitSummary {
            classes: classes.len(),
            covered,
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub checked: u64,
    pub failures: Vec<(usize, usize)>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// ℓ-goodness of every pair that is not already a 2-edge.
pub fn all_pairs_good(h: &Hypergraph, ell: usize) -> Result<PairReport> {
    let clique = make_clique(ell)?;
    let index = BergeIndex::new(h);
    let mut report = PairReport {
        checked: 0,
        failures: Vec::new(),
    };
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if index.edge_slot(&[u, v]).is_some() {
                continue;
            }
            report.checked += 1;
            if !index.creates_new(&clique, &[u, v])? {
                report.failures.push((u, v));
            }
        }
    }
    Ok(report)
}

/// Every (ℓ−1)-set of vertices is the core of a Berge-K_{ℓ−1}.
pub fn all_cores_present(h: &Hypergraph, ell: usize) -> Result<CoreReport> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell={ell} < 2")));
    }
    all_subsets_are_cores(h, ell - 1)
}
