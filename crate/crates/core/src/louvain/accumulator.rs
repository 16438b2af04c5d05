use crate::graph::{Graph, VertexId};

/// Collision-free map from community id to accumulated link weight.
///
/// Backed by a dense array indexed by community plus the list of touched keys,
/// so clearing costs O(touched) rather than O(capacity). Keys iterate in order
/// of first insertion.
#[derive(Debug, Clone)]
pub struct ScanAccumulator {
    weights: Vec<f64>,
    keys: Vec<VertexId>,
}

impl ScanAccumulator {
    pub fn new(capacity: usize) -> Self {
        ScanAccumulator {
            weights: vec![0.0; capacity],
            keys: Vec::new(),
        }
    }

    pub fn ensure_capacity(&mut self, capacity: usize) {
        if self.weights.len() < capacity {
            self.weights.resize(capacity, 0.0);
        }
    }

    pub fn clear(&mut self) {
        for &k in &self.keys {
            self.weights[k as usize] = 0.0;
        }
        self.keys.clear();
    }

    /// Adds `w` to community `c`. Weights are strictly positive, so a zero
    /// slot always means the key is absent.
    #[inline]
    pub fn add(&mut self, c: VertexId, w: f64) {
        let slot = &mut self.weights[c as usize];
        if *slot == 0.0 {
            self.keys.push(c);
        }
        *slot += w;
    }

    #[inline]
    pub fn get(&self, c: VertexId) -> f64 {
        self.weights[c as usize]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[VertexId] {
        &self.keys
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        self.keys
            .iter()
            .map(move |&k| (k, self.weights[k as usize]))
    }

    pub fn total(&self) -> f64 {
        self.iter().map(|(_, w)| w).sum()
    }

    pub(crate) fn sort_keys(&mut self) {
        self.keys.sort_unstable();
    }

    /// Accumulates `w` under `community_of(j)` for every arc `(i, j, w)`,
    /// skipping the self-loop of `i` unless `include_self` is set.
    #[inline]
    pub fn scan_with(
        &mut self,
        graph: &Graph,
        i: VertexId,
        include_self: bool,
        community_of: impl Fn(VertexId) -> VertexId,
    ) {
        for (j, w) in graph.neighbors(i) {
            if !include_self && i == j {
                continue;
            }
            self.add(community_of(j), w);
        }
    }
}

/// Adds the link weight from `i` to each neighbouring community into `acc`.
pub fn scan_communities(
    acc: &mut ScanAccumulator,
    graph: &Graph,
    membership: &[VertexId],
    i: VertexId,
    include_self: bool,
) {
    acc.ensure_capacity(membership.len());
    acc.scan_with(graph, i, include_self, |j| membership[j as usize]);
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use splitpass_testkit::generate;
    use std::collections::BTreeMap;

    #[test]
    fn star_center() {
        let g = Graph::from_edges(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let c = [0, 1, 2, 3];
        let mut acc = ScanAccumulator::new(4);
        scan_communities(&mut acc, &g, &c, 0, false);
        assert_eq!(
            acc.iter().collect::<Vec<_>>(),
            vec![(1, 1.0), (2, 1.0), (3, 1.0)]
        );
    }

    #[test]
    fn lone_self_loop() {
        let g = Graph::from_edges(1, [(0, 0, 3.0)]).unwrap();
        let mut acc = ScanAccumulator::new(1);
        scan_communities(&mut acc, &g, &[0], 0, false);
        assert!(acc.is_empty());
        scan_communities(&mut acc, &g, &[0], 0, true);
        assert_eq!(acc.get(0), 3.0);
    }

    #[test]
    fn clear_resets_touched_slots() {
        let mut acc = ScanAccumulator::new(5);
        acc.add(3, 1.0);
        acc.add(1, 2.0);
        acc.add(3, 0.5);
        assert_eq!(acc.keys(), &[3, 1]);
        assert_eq!(acc.get(3), 1.5);
        acc.clear();
        assert!(acc.is_empty());
        assert_eq!(acc.get(3), 0.0);
    }

    #[test]
    fn matches_grouping_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut acc = ScanAccumulator::new(0);
        for _ in 0..50 {
            let (n, edges) = generate::small_weighted(40, &mut rng);
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let c = generate::random_membership(n, &mut rng);
            let i = rng.gen_range(0..n as u32);
            for include_self in [false, true] {
                let mut expected = BTreeMap::<u32, f64>::new();
                let mut self_weight = 0.0;
                for &(u, v, w) in &edges {
                    if u == i && v == i {
                        self_weight += w;
                        if include_self {
                            *expected.entry(c[i as usize]).or_default() += w;
                        }
                    } else if u == i {
                        *expected.entry(c[v as usize]).or_default() += w;
                    } else if v == i {
                        *expected.entry(c[u as usize]).or_default() += w;
                    }
                }
                acc.clear();
                scan_communities(&mut acc, &g, &c, i, include_self);
                assert_eq!(acc.len(), expected.len());
                for (k, w) in expected {
                    assert!((acc.get(k) - w).abs() < 1e-12);
                }
                let k_i: f64 = g.weights_of(i).iter().sum();
                let excluded = if include_self { 0.0 } else { self_weight };
                assert!((acc.total() - (k_i - excluded)).abs() < 1e-12);
            }
        }
    }
}
