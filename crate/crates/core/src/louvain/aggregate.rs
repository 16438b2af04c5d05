use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::accumulator::ScanAccumulator;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::parallel::{exclusive_scan, split_by_offsets_mut, WorkerLocal};

/// Collapses each community of `membership` into a super-vertex.
///
/// Labels must be contiguous in `[0, k)`. Arcs between members of `c` and `d`
/// become an arc `(c, d)` carrying their summed weight; arcs inside `c`,
/// original self-loops included, become the self-loop of `c`. The result
/// reports exactly the input's total weight; the sum of its regrouped arc
/// weights can differ from it by rounding.
pub fn louvain_aggregate(graph: &Graph, membership: &[VertexId]) -> Result<Graph> {
    let scratch = WorkerLocal::new(|| ScanAccumulator::new(0));
    aggregate(graph, membership, &scratch)
}

pub(crate) fn aggregate(
    graph: &Graph,
    membership: &[VertexId],
    scratch: &WorkerLocal<ScanAccumulator>,
) -> Result<Graph> {
    let n = graph.num_vertices();
    if membership.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: membership.len(),
        });
    }
    let k = membership
        .par_iter()
        .copied()
        .max()
        .map_or(0, |c| c as usize + 1);
    if k > n {
        return Err(Error::NonContiguousLabels {
            label: k as VertexId - 1,
            count: n,
        });
    }

    // Vertices of each community, as a CSR of its own.
    let counts: Vec<AtomicUsize> = (0..k).map(|_| AtomicUsize::new(0)).collect();
    membership.par_iter().for_each(|&c| {
        counts[c as usize].fetch_add(1, Ordering::Relaxed);
    });
    let mut member_offsets: Vec<usize> = counts.into_iter().map(AtomicUsize::into_inner).collect();
    if let Some(empty) = member_offsets.iter().position(|&s| s == 0) {
        return Err(Error::NonContiguousLabels {
            label: empty as VertexId,
            count: k,
        });
    }
    member_offsets.push(0);
    exclusive_scan(&mut member_offsets);
    let cursor: Vec<AtomicUsize> = member_offsets[..k]
        .iter()
        .map(|&o| AtomicUsize::new(o))
        .collect();
    let slots: Vec<AtomicU32> = (0..n).map(|_| AtomicU32::new(0)).collect();
    (0..n as VertexId).into_par_iter().for_each(|i| {
        let at = cursor[membership[i as usize] as usize].fetch_add(1, Ordering::Relaxed);
        slots[at].store(i, Ordering::Relaxed);
    });
    let mut members: Vec<VertexId> = slots.into_iter().map(AtomicU32::into_inner).collect();
    split_by_offsets_mut(&mut members, &member_offsets)
        .into_par_iter()
        .for_each(|part| part.sort_unstable());

    // Upper bound on each super-vertex degree: the total degree of its members.
    let mut bound_offsets: Vec<usize> = (0..k)
        .into_par_iter()
        .map(|c| {
            members[member_offsets[c]..member_offsets[c + 1]]
                .iter()
                .map(|&i| graph.degree(i))
                .sum()
        })
        .collect();
    bound_offsets.push(0);
    let bound = exclusive_scan(&mut bound_offsets);

    let mut loose_targets = vec![0 as VertexId; bound];
    let mut loose_weights = vec![0.0; bound];
    let degrees: Vec<usize> = split_by_offsets_mut(&mut loose_targets, &bound_offsets)
        .into_par_iter()
        .zip(split_by_offsets_mut(&mut loose_weights, &bound_offsets))
        .enumerate()
        .map(|(c, (targets, weights))| {
            let mut acc = scratch.get();
            acc.ensure_capacity(k);
            acc.clear();
            for &i in &members[member_offsets[c]..member_offsets[c + 1]] {
                acc.scan_with(graph, i, true, |j| membership[j as usize]);
            }
            acc.sort_keys();
            for (slot, (d, w)) in acc.iter().enumerate() {
                targets[slot] = d;
                weights[slot] = w;
            }
            let degree = acc.len();
            acc.clear();
            degree
        })
        .collect();

    // Close the gaps left by the degree bounds.
    let mut offsets = degrees;
    offsets.push(0);
    let arcs = exclusive_scan(&mut offsets);
    let mut targets = vec![0 as VertexId; arcs];
    let mut weights = vec![0.0; arcs];
    split_by_offsets_mut(&mut targets, &offsets)
        .into_par_iter()
        .zip(split_by_offsets_mut(&mut weights, &offsets))
        .enumerate()
        .for_each(|(c, (t, w))| {
            let from = bound_offsets[c];
            t.copy_from_slice(&loose_targets[from..from + t.len()]);
            w.copy_from_slice(&loose_weights[from..from + w.len()]);
        });

    Ok(Graph::from_parts_with_total(
        offsets,
        targets,
        weights,
        graph.total_weight(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::worker_pool;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use splitpass_testkit::{fixtures, generate};
    use std::collections::BTreeMap;

    #[test]
    fn bridged_triangles() {
        let (n, edges) = fixtures::two_triangles_bridged();
        let g = Graph::from_edges(n, edges).unwrap();
        let agg = louvain_aggregate(&g, &[0, 0, 0, 1, 1, 1]).unwrap();
        assert_eq!(agg.num_vertices(), 2);
        assert_eq!(
            agg.neighbors(0).collect::<Vec<_>>(),
            vec![(0, 6.0), (1, 1.0)]
        );
        assert_eq!(
            agg.neighbors(1).collect::<Vec<_>>(),
            vec![(0, 1.0), (1, 6.0)]
        );
        assert_eq!(agg.total_weight(), 14.0);
        agg.check_symmetry().unwrap();
    }

    #[test]
    fn singletons_are_identity() {
        let (n, edges) = fixtures::karate();
        let g = Graph::from_edges(n, edges).unwrap();
        let c: Vec<u32> = (0..n as u32).collect();
        assert_eq!(louvain_aggregate(&g, &c).unwrap(), g);
    }

    #[test]
    fn single_community_becomes_one_self_loop() {
        let (n, edges) = fixtures::les_miserables();
        let g = Graph::from_edges(n, edges).unwrap();
        let agg = louvain_aggregate(&g, &vec![0; n]).unwrap();
        assert_eq!(agg.num_vertices(), 1);
        assert_eq!(
            agg.neighbors(0).collect::<Vec<_>>(),
            vec![(0, g.total_weight())]
        );
    }

    #[test]
    fn rejects_gaps() {
        let g = Graph::from_edges(3, [(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            louvain_aggregate(&g, &[0, 2, 2]),
            Err(Error::NonContiguousLabels { label: 1, .. })
        ));
    }

    #[test]
    fn matches_regrouping_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for round in 0..40 {
            let (n, edges) = generate::small_weighted(50, &mut rng);
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let raw = generate::random_membership(n, &mut rng);
            // renumber by first appearance
            let mut map = BTreeMap::new();
            let c: Vec<u32> = raw
                .iter()
                .map(|&l| {
                    let next = map.len() as u32;
                    *map.entry(l).or_insert(next)
                })
                .collect();
            let mut expected = BTreeMap::<(u32, u32), f64>::new();
            for &(u, v, w) in &edges {
                let (a, b) = (c[u as usize], c[v as usize]);
                if u == v {
                    *expected.entry((a, a)).or_default() += w;
                } else {
                    *expected.entry((a, b)).or_default() += w;
                    *expected.entry((b, a)).or_default() += w;
                }
            }
            let agg = worker_pool(1 + round % 3)
                .unwrap()
                .install(|| louvain_aggregate(&g, &c))
                .unwrap();
            assert_eq!(agg.num_vertices(), map.len());
            let mut seen = 0;
            for a in 0..agg.num_vertices() as u32 {
                for (b, w) in agg.neighbors(a) {
                    assert!((expected[&(a, b)] - w).abs() < 1e-9, "arc ({a},{b})");
                    seen += 1;
                }
            }
            assert_eq!(seen, expected.len());
            assert_eq!(agg.total_weight(), g.total_weight());
            let summed: f64 = agg.weights().iter().sum();
            assert!((summed - g.total_weight()).abs() <= 1e-9 * g.total_weight().max(1.0));
        }
    }
}
