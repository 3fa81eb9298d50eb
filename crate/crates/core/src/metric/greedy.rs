use std::collections::HashMap;

use super::{first_collision, Landmarks, Mode, Predicate, Scratch};
use crate::distance::DistanceMatrix;
use crate::error::MetricError;

/// Number of unordered pairs inside the blocks of a partition.
fn unresolved_pairs(class: &[usize]) -> u64 {
    let mut sizes: HashMap<usize, u64> = HashMap::new();
    for &c in class {
        *sizes.entry(c).or_default() += 1;
    }
    sizes.values().map(|&s| s * (s - 1) / 2).sum()
}

/// Splits each block of `class` by the difference `d(u, z) - d(u, anchor)`.
fn refine(dm: &DistanceMatrix, class: &[usize], anchor: usize, z: usize) -> Vec<usize> {
    let mut ids: HashMap<(usize, i64), usize> = HashMap::new();
    class
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            let diff = i64::from(dm.get(u, z)) - i64::from(dm.get(u, anchor));
            let next = ids.len();
            *ids.entry((c, diff)).or_insert(next)
        })
        .collect()
}

/// Doubly resolving set built greedily, then pruned to a minimal one.
///
/// Elements are grouped by their difference vector relative to the first
/// landmark; two elements are doubly resolved once they sit in different
/// groups. The seed is the landmark pair leaving the fewest unresolved pairs,
/// and each further landmark is the one resolving the most new pairs. Ties go
/// to the lowest index. Finally each landmark, in ascending order, is dropped
/// if the rest still doubly resolves.
pub fn greedy_doubly_resolving(dm: &DistanceMatrix) -> Result<Landmarks, MetricError> {
    let n = dm.dim();
    if n < 2 {
        return Err(MetricError::LandmarksTooSmall(n));
    }
    let zero = vec![0usize; n];

    let mut seed = (0, 1, u64::MAX);
    for x in 0..n {
        for y in x + 1..n {
            let left = unresolved_pairs(&refine(dm, &zero, x, y));
            if left < seed.2 {
                seed = (x, y, left);
            }
        }
    }
    let anchor = seed.0;
    let mut chosen = vec![seed.0, seed.1];
    let mut class = refine(dm, &zero, seed.0, seed.1);
    let mut left = seed.2;

    while left > 0 {
        let mut best: Option<(usize, Vec<usize>, u64)> = None;
        for z in (0..n).filter(|z| !chosen.contains(z)) {
            let next = refine(dm, &class, anchor, z);
            let rest = unresolved_pairs(&next);
            if best.as_ref().is_none_or(|b| rest < b.2) {
                best = Some((z, next, rest));
            }
        }
        match best {
            Some((z, next, rest)) if rest < left => {
                chosen.push(z);
                class = next;
                left = rest;
            }
            // No landmark helps; the matrix is not a graph metric.
            _ => {
                chosen = (0..n).collect();
                break;
            }
        }
    }

    chosen.sort_unstable();
    let mut scratch = Scratch::default();
    let mut i = 0;
    while i < chosen.len() && chosen.len() > 2 {
        let mut rest = chosen.clone();
        rest.remove(i);
        if first_collision(dm, &rest, Predicate::DoublyResolving, &mut scratch).is_none() {
            chosen = rest;
        } else {
            i += 1;
        }
    }
    Landmarks::new(chosen, Mode::Vertex)
}
