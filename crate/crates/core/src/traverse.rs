use std::sync::atomic::{AtomicBool, Ordering};

use crate::graph::{Graph, VertexId};

/// Breadth-first traversal from `start` over vertices accepted by `follow`,
/// claiming each vertex in `visited` with an atomic test-and-set so it is
/// reported to `on_visit` exactly once across all concurrent traversals.
///
/// `start` is visited only if it was not already claimed. `queue` is scratch
/// space and is left empty on return.
pub(crate) fn bfs_visit_for_each(
    visited: &[AtomicBool],
    graph: &Graph,
    start: VertexId,
    queue: &mut Vec<VertexId>,
    mut follow: impl FnMut(VertexId) -> bool,
    mut on_visit: impl FnMut(VertexId),
) {
    if visited[start as usize].swap(true, Ordering::AcqRel) {
        return;
    }
    queue.clear();
    queue.push(start);
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        on_visit(i);
        for &j in graph.targets_of(i) {
            if visited[j as usize].load(Ordering::Relaxed) || !follow(j) {
                continue;
            }
            if !visited[j as usize].swap(true, Ordering::AcqRel) {
                queue.push(j);
            }
        }
    }
    queue.clear();
}

pub(crate) fn flags(n: usize) -> Vec<AtomicBool> {
    (0..n).map(|_| AtomicBool::new(false)).collect()
}
