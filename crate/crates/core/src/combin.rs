//! Lexicographic k-subsets of `0..n` with ranking, used to partition the
//! k-uniform complement into contiguous work ranges.

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The k-subset of `0..n` at position `rank` in lexicographic order.
pub fn unrank(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let mut c = next;
        loop {
            let block = binomial(n - c - 1, k - i - 1);
            if rank < block {
                break;
            }
            rank -= block;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

/// Position of a sorted k-subset of `0..n` in lexicographic order.
pub fn rank(n: usize, subset: &[usize]) -> u64 {
    let k = subset.len();
    let mut r = 0u64;
    let mut next = 0;
    for (i, &c) in subset.iter().enumerate() {
        for skipped in next..c {
            r += binomial(n - skipped - 1, k - i - 1);
        }
        next = c + 1;
    }
    r
}

/// Advance `subset` to its lexicographic successor. Returns false when
/// `subset` was the last k-subset.
pub fn advance(n: usize, subset: &mut [usize]) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over the lexicographic k-subsets of `0..n` with ranks in `start..end`.
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
    remaining: u64,
}

impl KSubsets {
    pub fn all(n: usize, k: usize) -> Self {
        Self::range(n, k, 0, binomial(n, k))
    }

    pub fn range(n: usize, k: usize, start: u64, end: u64) -> Self {
        let end = end.min(binomial(n, k));
        if start >= end {
            return KSubsets {
                n,
                current: None,
                remaining: 0,
            };
        }
        KSubsets {
            n,
            current: Some(unrank(n, k, start)),
            remaining: end - start,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        self.remaining -= 1;
        if self.remaining > 0 && !advance(self.n, cur) {
            self.remaining = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}
