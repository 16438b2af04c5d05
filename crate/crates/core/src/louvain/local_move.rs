use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};

use rayon::prelude::*;

use super::accumulator::ScanAccumulator;
use crate::atomic::{atomic_labels, unwrap_labels};
use crate::graph::{Graph, VertexId};
use crate::parallel::WorkerLocal;
use crate::quality::{delta_modularity, CommunityWeights};
use crate::traverse::flags;

/// Vertices handed to a worker at a time.
const MOVE_CHUNK: usize = 2048;

/// Greedy local-moving phase on `graph`, updating `membership` and the
/// community totals in `weights` in place. Returns the number of iterations
/// performed.
///
/// `weights` must be consistent with `membership` on entry.
pub fn louvain_move(
    graph: &Graph,
    membership: &mut [VertexId],
    weights: &CommunityWeights,
    tolerance: f64,
    max_iterations: usize,
) -> usize {
    let labels = atomic_labels(membership.iter().copied());
    let scratch = WorkerLocal::new(|| ScanAccumulator::new(graph.num_vertices()));
    let iterations = move_vertices(graph, &labels, weights, tolerance, max_iterations, &scratch);
    membership.copy_from_slice(&unwrap_labels(labels));
    iterations
}

pub(crate) fn move_vertices(
    graph: &Graph,
    labels: &[AtomicU32],
    weights: &CommunityWeights,
    tolerance: f64,
    max_iterations: usize,
    scratch: &WorkerLocal<ScanAccumulator>,
) -> usize {
    let n = graph.num_vertices();
    let m = graph.m();
    let processed = flags(n);
    let chunks = n.div_ceil(MOVE_CHUNK);
    let mut iterations = 0;
    while iterations < max_iterations {
        iterations += 1;
        let gain: f64 = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut acc = scratch.get();
                acc.ensure_capacity(n);
                let end = ((chunk + 1) * MOVE_CHUNK).min(n);
                (chunk * MOVE_CHUNK..end)
                    .map(|i| {
                        move_vertex(
                            graph,
                            labels,
                            weights,
                            &processed,
                            &mut acc,
                            m,
                            i as VertexId,
                        )
                    })
                    .sum::<f64>()
            })
            .sum();
        if gain <= tolerance {
            break;
        }
    }
    iterations
}

/// Moves `i` to its best neighbouring community if that strictly improves
/// modularity; returns the gain.
#[inline]
fn move_vertex(
    graph: &Graph,
    labels: &[AtomicU32],
    weights: &CommunityWeights,
    processed: &[AtomicBool],
    acc: &mut ScanAccumulator,
    m: f64,
    i: VertexId,
) -> f64 {
    if processed[i as usize].load(Ordering::Relaxed) {
        return 0.0;
    }
    processed[i as usize].store(true, Ordering::Relaxed);

    let own = labels[i as usize].load(Ordering::Relaxed);
    acc.clear();
    acc.scan_with(graph, i, false, |j| {
        labels[j as usize].load(Ordering::Relaxed)
    });
    if acc.is_empty() {
        return 0.0;
    }
    let k_i = weights.vertex(i);
    let k_to_own = acc.get(own);
    let sigma_own = weights.community(own);
    let mut best = (0.0, own);
    for (c, k_to_c) in acc.iter() {
        if c == own {
            continue;
        }
        let gain = delta_modularity(k_to_c, k_to_own, k_i, weights.community(c), sigma_own, m);
        if gain > best.0 {
            best = (gain, c);
        }
    }
    let (gain, target) = best;
    if target == own {
        return 0.0;
    }
    weights.move_vertex(i, own, target);
    labels[i as usize].store(target, Ordering::Relaxed);
    for &j in graph.targets_of(i) {
        processed[j as usize].store(false, Ordering::Relaxed);
    }
    gain
}
