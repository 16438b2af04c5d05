//! Modularity, delta-modularity and internally-disconnected community detection.

mod disconnected;
mod membership;

use rayon::prelude::*;

use crate::atomic::AtomicF64;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use disconnected::{
    community_sizes, disconnected_communities, disconnected_communities_chunked,
    disconnected_fraction, DisconnectedFlags, DEFAULT_CHUNK_SIZE,
};
pub use membership::Membership;

/// Modularity of `membership` on `graph`:
/// `Q = sum_c [ sigma_c / 2m - (Sigma_c / 2m)^2 ]`, where `sigma_c` sums the
/// stored arcs with both endpoints in `c` and `Sigma_c` sums the weighted
/// degrees of the members of `c`.
pub fn modularity(graph: &Graph, membership: &[VertexId]) -> Result<f64> {
    let n = graph.num_vertices();
    if membership.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: membership.len(),
        });
    }
    let two_m = graph.total_weight();
    if two_m <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    let (internal, degrees): (f64, Vec<f64>) = {
        let per_vertex: Vec<(f64, f64)> = (0..n as VertexId)
            .into_par_iter()
            .map(|i| {
                let c = membership[i as usize];
                let mut inside = 0.0;
                let mut total = 0.0;
                for (j, w) in graph.neighbors(i) {
                    total += w;
                    if membership[j as usize] == c {
                        inside += w;
                    }
                }
                (inside, total)
            })
            .collect();
        let internal = per_vertex.iter().map(|p| p.0).sum();
        (internal, per_vertex.into_iter().map(|p| p.1).collect())
    };
    let mut community_total = vec![0.0; n];
    for (i, k) in degrees.into_iter().enumerate() {
        let c = membership[i] as usize;
        if c >= n {
            return Err(Error::LabelOutOfRange {
                index: i,
                label: c as u64,
                limit: n,
            });
        }
        community_total[c] += k;
    }
    let expected: f64 = community_total
        .iter()
        .map(|s| (s / two_m) * (s / two_m))
        .sum();
    Ok(internal / two_m - expected)
}

/// Change in modularity from moving a vertex `i` out of community `d` into `c`:
///
/// `(K_i->c - K_i->d) / m - K_i / (2 m^2) * (K_i + Sigma_c - Sigma_d)`
///
/// `sigma_d` still includes `k_i`; `sigma_c` does not. The link weights
/// `k_i_to_c` and `k_i_to_d` exclude any self-loop on `i`.
#[inline]
pub fn delta_modularity(
    k_i_to_c: f64,
    k_i_to_d: f64,
    k_i: f64,
    sigma_c: f64,
    sigma_d: f64,
    m: f64,
) -> f64 {
    (k_i_to_c - k_i_to_d) / m - k_i / (2.0 * m * m) * (k_i + sigma_c - sigma_d)
}

/// Per-vertex weighted degree `K'` and per-community total `Sigma'`.
///
/// Community totals are atomic so concurrent moves can update them in place.
#[derive(Debug)]
pub struct CommunityWeights {
    vertex_total: Vec<f64>,
    community_total: Vec<AtomicF64>,
}

impl CommunityWeights {
    /// Weights for the singleton partition, where `Sigma'[i] = K'[i]`.
    pub fn singletons(graph: &Graph) -> Self {
        let vertex_total = graph.vertex_weights();
        let community_total = vertex_total.iter().map(|&k| AtomicF64::new(k)).collect();
        CommunityWeights {
            vertex_total,
            community_total,
        }
    }

    pub fn from_membership(graph: &Graph, membership: &[VertexId]) -> Self {
        let vertex_total = graph.vertex_weights();
        let community_total: Vec<AtomicF64> = (0..vertex_total.len())
            .map(|_| AtomicF64::new(0.0))
            .collect();
        for (i, &c) in membership.iter().enumerate() {
            let slot = &community_total[c as usize];
            slot.store(slot.load() + vertex_total[i]);
        }
        CommunityWeights {
            vertex_total,
            community_total,
        }
    }

    #[inline]
    pub fn vertex(&self, i: VertexId) -> f64 {
        self.vertex_total[i as usize]
    }

    #[inline]
    pub fn community(&self, c: VertexId) -> f64 {
        self.community_total[c as usize].load()
    }

    pub fn vertex_totals(&self) -> &[f64] {
        &self.vertex_total
    }

    pub fn community_totals(&self) -> Vec<f64> {
        self.community_total.iter().map(AtomicF64::load).collect()
    }

    /// Moves the weight of vertex `i` from community `from` to `to`.
    #[inline]
    pub fn move_vertex(&self, i: VertexId, from: VertexId, to: VertexId) {
        let k = self.vertex_total[i as usize];
        self.community_total[from as usize].fetch_add(-k);
        self.community_total[to as usize].fetch_add(k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use splitpass_testkit::{fixtures, oracle};

    fn graph(n: usize, edges: &[(u32, u32, f64)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn all_in_one_community_is_zero() {
        let (n, edges) = fixtures::two_triangles_bridged();
        let g = graph(n, &edges);
        assert!(modularity(&g, &vec![0; n]).unwrap().abs() < 1e-15);
    }

    #[test]
    fn triangle_singletons() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]);
        let q = modularity(&g, &[0, 1, 2]).unwrap();
        assert!((q + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn two_disjoint_triangles() {
        let (n, edges) = fixtures::two_triangles();
        let g = graph(n, &edges);
        let labels = [0, 0, 0, 3, 3, 3];
        let expected = oracle::modularity_pairwise(n, &edges, &labels);
        assert!((expected - 0.5).abs() < 1e-12);
        assert!((modularity(&g, &labels).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn zero_weight_graph_is_an_error() {
        let g = Graph::from_edges(3, []).unwrap();
        assert!(matches!(
            modularity(&g, &[0, 1, 2]),
            Err(Error::ZeroTotalWeight)
        ));
        assert!(matches!(
            modularity(&g, &[0, 1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn self_loops_count_once_inside() {
        let g = graph(2, &[(0, 0, 2.0), (0, 1, 1.0)]);
        let labels = [0, 0];
        let expected = oracle::modularity_pairwise(2, &[(0, 0, 2.0), (0, 1, 1.0)], &labels);
        assert!((modularity(&g, &labels).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn delta_for_triangle_move() {
        let dq = delta_modularity(2.0, 0.0, 2.0, 4.0, 2.0, 3.0);
        assert!((dq - 2.0 / 9.0).abs() < 1e-15);
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]);
        let before = modularity(&g, &[0, 1, 1]).unwrap();
        let after = modularity(&g, &[1, 1, 1]).unwrap();
        assert!((after - before - dq).abs() < 1e-15);
    }

    #[test]
    fn delta_degenerate_cases() {
        // Moving back into the same community.
        assert_eq!(delta_modularity(1.5, 1.5, 2.0, 3.0, 5.0, 4.0), 0.0);
        // Isolated vertex.
        assert_eq!(delta_modularity(0.0, 0.0, 0.0, 7.0, 1.0, 4.0), 0.0);
    }

    #[test]
    fn community_weights_track_moves() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 2.0)]);
        let w = CommunityWeights::singletons(&g);
        assert_eq!(w.community_totals(), vec![1.0, 3.0, 2.0]);
        w.move_vertex(0, 0, 1);
        assert_eq!(w.community_totals(), vec![0.0, 4.0, 2.0]);
        let fresh = CommunityWeights::from_membership(&g, &[1, 1, 2]);
        assert_eq!(fresh.community_totals(), w.community_totals());
    }
}
