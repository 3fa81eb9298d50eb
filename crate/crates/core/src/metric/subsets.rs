/// `C(n, k)`, saturating at `u64::MAX`.
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

/// Advances `combo` (strictly increasing, entries in `[lo, n)`) to the next
/// combination in lexicographic order. Returns false when exhausted.
pub(crate) fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic enumeration of the `k`-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started {
            if !advance(&mut self.current, self.n) {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(self.current.clone())
    }
}
