use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::subsets::{advance, binomial};
use super::{first_collision, Landmarks, Mode, Predicate, Scratch, SearchResult};
use crate::distance::DistanceMatrix;
use crate::error::MetricError;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// First cardinality tried; defaults to the predicate's minimum.
    pub start_k: Option<usize>,
    /// Maximum number of subsets tested before giving up.
    pub budget: u64,
    pub all_optima: bool,
    /// Worker count; `None` uses the global rayon pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
    /// For psi: search dim first and start at `max(2, dim)`.
    pub dim_lower_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            start_k: None,
            budget: DEFAULT_BUDGET,
            all_optima: false,
            threads: None,
            dim_lower_bound: false,
        }
    }
}

/// 1-based position of the first passing subset, and the passing subsets.
type LevelHits = (u64, Vec<Vec<usize>>);

enum Chunk {
    /// Passing subsets with their 1-based position in the level.
    Hits(Vec<(u64, Vec<usize>)>),
    Miss,
    OverBudget,
    Skipped,
}

struct Level<'a> {
    dm: &'a DistanceMatrix,
    predicate: Predicate,
    k: usize,
    /// Subsets examined before this level started.
    base: u64,
    budget: u64,
    all_optima: bool,
}

impl Level<'_> {
    /// Scans the subsets whose smallest element is `first`.
    fn scan(&self, first: usize, offset: u64, best: &AtomicUsize) -> Chunk {
        let n = self.dm.dim();
        let mut combo: Vec<usize> = (first..first + self.k).collect();
        let mut scratch = Scratch::default();
        let mut hits = Vec::new();
        let mut pos = offset;
        loop {
            if !self.all_optima && best.load(Ordering::Relaxed) < first {
                return Chunk::Skipped;
            }
            pos += 1;
            if self.base + pos > self.budget {
                return Chunk::OverBudget;
            }
            if first_collision(self.dm, &combo, self.predicate, &mut scratch).is_none() {
                hits.push((pos, combo.clone()));
                if !self.all_optima {
                    best.fetch_min(first, Ordering::Relaxed);
                    return Chunk::Hits(hits);
                }
            }
            if !advance(&mut combo[1..], n) {
                break;
            }
        }
        if hits.is_empty() {
            Chunk::Miss
        } else {
            Chunk::Hits(hits)
        }
    }

    /// Position of the first hit and every hit in the first passing chunk.
    fn run(&self, parallel: bool) -> Result<Option<LevelHits>, MetricError> {
        let n = self.dm.dim();
        let mut offsets = Vec::with_capacity(n + 1 - self.k);
        let mut acc = 0u64;
        for first in 0..=n - self.k {
            offsets.push((first, acc));
            acc = acc.saturating_add(binomial(n - 1 - first, self.k - 1));
        }
        let best = AtomicUsize::new(usize::MAX);
        let chunks: Vec<Chunk> = if parallel {
            offsets
                .par_iter()
                .map(|&(first, off)| self.scan(first, off, &best))
                .collect()
        } else {
            offsets
                .iter()
                .map(|&(first, off)| self.scan(first, off, &best))
                .collect()
        };

        // Earlier chunks decide: the result is what a sequential scan would give.
        let mut found: Vec<(u64, Vec<usize>)> = Vec::new();
        for chunk in chunks {
            match chunk {
                Chunk::Hits(h) => {
                    found.extend(h);
                    if !self.all_optima {
                        break;
                    }
                }
                Chunk::OverBudget => {
                    return Err(MetricError::BudgetExceeded {
                        budget: self.budget,
                    });
                }
                Chunk::Miss | Chunk::Skipped => {}
            }
        }
        if found.is_empty() {
            return Ok(None);
        }
        let examined = if self.all_optima { acc } else { found[0].0 };
        Ok(Some((
            examined,
            found.into_iter().map(|(_, s)| s).collect(),
        )))
    }
}

fn search(
    dm: &DistanceMatrix,
    predicate: Predicate,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<SearchResult, MetricError> {
    let started = Instant::now();
    let min = predicate.min_size();
    let start = opts.start_k.unwrap_or(min);
    if start < min {
        return Err(MetricError::InvalidStart { got: start, min });
    }
    let n = dm.dim();
    if n < min {
        return Err(MetricError::LandmarksTooSmall(n));
    }
    let parallel = opts.threads != Some(1);
    let run_levels = || -> Result<SearchResult, MetricError> {
        let mut examined = 0u64;
        for k in start..=n {
            let level = Level {
                dm,
                predicate,
                k,
                base: examined,
                budget: opts.budget,
                all_optima: opts.all_optima,
            };
            if let Some((used, sets)) = level.run(parallel)? {
                return Ok(SearchResult {
                    cardinality: k,
                    best_set: Landmarks {
                        elements: sets[0].clone(),
                        mode,
                    },
                    all_optima: opts.all_optima.then_some(sets),
                    subsets_examined: examined + used,
                    elapsed: started.elapsed(),
                });
            }
            examined = examined.saturating_add(binomial(n, k));
        }
        // Unreachable for genuine distance matrices: the full set always passes.
        Err(MetricError::BudgetExceeded {
            budget: opts.budget,
        })
    };
    match opts.threads {
        Some(t) if t > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_or_else(|_| run_levels(), |pool| pool.install(run_levels)),
        _ => run_levels(),
    }
}

/// Smallest `k >= start_k` with a `k`-subset satisfying `predicate`, found by
/// scanning each level in lexicographic order. Parallel runs return the same
/// set and count as the sequential scan.
pub fn min_cardinality_search(
    dm: &DistanceMatrix,
    predicate: Predicate,
    opts: &SearchOptions,
) -> Result<SearchResult, MetricError> {
    search(dm, predicate, Mode::Vertex, opts)
}

/// Metric dimension of `g`.
pub fn metric_dimension(g: &Graph, opts: &SearchOptions) -> Result<SearchResult, MetricError> {
    search(
        g.vertex_distances()?,
        Predicate::Resolving,
        Mode::Vertex,
        opts,
    )
}

/// Edge metric dimension of `g`, i.e. the metric dimension of `L(g)`.
pub fn edge_metric_dimension(g: &Graph, opts: &SearchOptions) -> Result<SearchResult, MetricError> {
    search(
        g.line_distances()?,
        Predicate::Resolving,
        Mode::EdgeViaLineGraph,
        opts,
    )
}

fn psi_on(
    dm: &DistanceMatrix,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<SearchResult, MetricError> {
    if !opts.dim_lower_bound {
        return search(dm, Predicate::DoublyResolving, mode, opts);
    }
    let dim_opts = SearchOptions {
        start_k: None,
        all_optima: false,
        ..opts.clone()
    };
    let dim = search(dm, Predicate::Resolving, mode, &dim_opts)?;
    let start = opts.start_k.unwrap_or(2).max(dim.cardinality).max(2);
    let psi_opts = SearchOptions {
        start_k: Some(start),
        budget: opts.budget.saturating_sub(dim.subsets_examined),
        ..opts.clone()
    };
    let mut result = search(dm, Predicate::DoublyResolving, mode, &psi_opts)?;
    result.subsets_examined += dim.subsets_examined;
    result.elapsed += dim.elapsed;
    Ok(result)
}

/// Minimum doubly resolving set of `g` (vertex version).
pub fn psi(g: &Graph, opts: &SearchOptions) -> Result<SearchResult, MetricError> {
    psi_on(g.vertex_distances()?, Mode::Vertex, opts)
}

/// Minimum edge doubly resolving set of `g`, i.e. psi of `L(g)`.
pub fn psi_edge(g: &Graph, opts: &SearchOptions) -> Result<SearchResult, MetricError> {
    psi_on(g.line_distances()?, Mode::EdgeViaLineGraph, opts)
}
