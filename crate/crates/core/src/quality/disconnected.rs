use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::traverse::{bfs_visit_for_each, flags};

/// Communities are dealt to workers in blocks of this many ids.
pub const DEFAULT_CHUNK_SIZE: usize = 1024;

/// Per-community flag, indexed by label, set when the community's induced
/// subgraph has two or more connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedFlags(Vec<bool>);

impl DisconnectedFlags {
    pub fn from_vec(flags: Vec<bool>) -> Self {
        DisconnectedFlags(flags)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&f| f).count()
    }

    pub fn is_disconnected(&self, c: VertexId) -> bool {
        self.0.get(c as usize).copied().unwrap_or(false)
    }

    /// Labels of the disconnected communities in ascending order.
    pub fn disconnected(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(c, _)| c as VertexId)
    }
}

/// Number of members of every community, indexed by label.
pub fn community_sizes(graph: &Graph, membership: &[VertexId]) -> Vec<usize> {
    atomic_sizes(graph.num_vertices(), membership)
        .into_iter()
        .map(AtomicUsize::into_inner)
        .collect()
}

fn atomic_sizes(n: usize, membership: &[VertexId]) -> Vec<AtomicUsize> {
    let sizes: Vec<AtomicUsize> = (0..n).map(|_| AtomicUsize::new(0)).collect();
    membership.par_iter().for_each(|&c| {
        sizes[c as usize].fetch_add(1, Ordering::Relaxed);
    });
    sizes
}

pub fn disconnected_communities(graph: &Graph, membership: &[VertexId]) -> DisconnectedFlags {
    disconnected_communities_chunked(graph, membership, DEFAULT_CHUNK_SIZE)
}

/// Flags internally-disconnected communities.
///
/// Every worker of the current pool scans all vertices but only handles the
/// communities in its own work-list: blocks of `chunk` consecutive labels dealt
/// round-robin. For each community it owns, a worker runs one BFS restricted to
/// the community from its first member and compares the number of reached
/// vertices with the community size.
pub fn disconnected_communities_chunked(
    graph: &Graph,
    membership: &[VertexId],
    chunk: usize,
) -> DisconnectedFlags {
    let n = graph.num_vertices();
    assert_eq!(
        membership.len(),
        n,
        "membership length must match vertex count"
    );
    let chunk = chunk.max(1);
    let sizes = atomic_sizes(n, membership);
    let visited = flags(n);
    let disconnected: Vec<AtomicBool> = flags(n);

    rayon::broadcast(|ctx| {
        let (t, workers) = (ctx.index(), ctx.num_threads());
        let mut queue = Vec::new();
        for i in 0..n as VertexId {
            let c = membership[i as usize];
            let size = sizes[c as usize].load(Ordering::Relaxed);
            if size == 0 || (c as usize / chunk) % workers != t {
                continue;
            }
            let mut reached = 0;
            bfs_visit_for_each(
                &visited,
                graph,
                i,
                &mut queue,
                |j| membership[j as usize] == c,
                |_| reached += 1,
            );
            if reached < size {
                disconnected[c as usize].store(true, Ordering::Relaxed);
            }
            sizes[c as usize].store(0, Ordering::Relaxed);
        }
    });

    DisconnectedFlags(
        disconnected
            .into_iter()
            .map(AtomicBool::into_inner)
            .collect(),
    )
}

/// Fraction of `num_communities` non-empty communities that are flagged.
pub fn disconnected_fraction(flags: &DisconnectedFlags, num_communities: usize) -> Result<f64> {
    if num_communities == 0 {
        return Err(Error::InvalidParams("no communities".into()));
    }
    Ok(flags.count() as f64 / num_communities as f64)
}
