//! Brute-force reference computations, written for clarity rather than speed.

/// Dense symmetric adjacency matrix; a self-loop `(i, i, w)` adds `w` once to `A[i][i]`.
pub fn adjacency(n: usize, edges: &[(u32, u32, f64)]) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v, w) in edges {
        let (u, v) = (u as usize, v as usize);
        a[u][v] += w;
        if u != v {
            a[v][u] += w;
        }
    }
    a
}

/// Modularity from the pairwise definition:
/// `Q = 1/2m * sum_{i,j} [A_ij - K_i K_j / 2m] delta(C_i, C_j)`.
pub fn modularity_pairwise(n: usize, edges: &[(u32, u32, f64)], labels: &[u32]) -> f64 {
    let a = adjacency(n, edges);
    let k: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let two_m: f64 = k.iter().sum();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                q += a[i][j] - k[i] * k[j] / two_m;
            }
        }
    }
    q / two_m
}

struct DisjointSet(Vec<usize>);

impl DisjointSet {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Connected components of each community's induced subgraph, labelled by the
/// minimum vertex id of the component.
pub fn community_components(n: usize, edges: &[(u32, u32, f64)], labels: &[u32]) -> Vec<u32> {
    let mut sets = DisjointSet((0..n).collect());
    for &(u, v, _) in edges {
        if labels[u as usize] == labels[v as usize] {
            sets.union(u as usize, v as usize);
        }
    }
    let mut min_id = vec![u32::MAX; n];
    for i in 0..n {
        let r = sets.find(i);
        min_id[r] = min_id[r].min(i as u32);
    }
    (0..n).map(|i| min_id[sets.find(i)]).collect()
}

/// Labels of communities whose induced subgraph has more than one component.
pub fn disconnected_labels(n: usize, edges: &[(u32, u32, f64)], labels: &[u32]) -> Vec<u32> {
    let components = community_components(n, edges, labels);
    let mut pieces = std::collections::BTreeMap::<u32, std::collections::BTreeSet<u32>>::new();
    for i in 0..n {
        pieces.entry(labels[i]).or_default().insert(components[i]);
    }
    pieces
        .into_iter()
        .filter(|(_, p)| p.len() > 1)
        .map(|(c, _)| c)
        .collect()
}

/// Relabels each community with its minimum member id.
pub fn canonical(labels: &[u32]) -> Vec<u32> {
    let mut first = std::collections::HashMap::new();
    labels
        .iter()
        .enumerate()
        .map(|(i, &c)| *first.entry(c).or_insert(i as u32))
        .collect()
}

/// Whether two labelings induce the same same-community relation, checked pair by pair.
pub fn same_partition(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

/// Highest modularity over every set partition of `n <= 10` vertices.
pub fn best_partition(n: usize, edges: &[(u32, u32, f64)]) -> (f64, Vec<u32>) {
    assert!(n <= 10);
    let mut labels = vec![0u32; n];
    let mut best = (f64::NEG_INFINITY, labels.clone());
    // Restricted growth strings enumerate each set partition once.
    fn walk(
        i: usize,
        max: u32,
        labels: &mut Vec<u32>,
        n: usize,
        edges: &[(u32, u32, f64)],
        best: &mut (f64, Vec<u32>),
    ) {
        if i == n {
            let q = modularity_pairwise(n, edges, labels);
            if q > best.0 + 1e-12 {
                *best = (q, labels.clone());
            }
            return;
        }
        for c in 0..=max + 1 {
            labels[i] = c;
            walk(i + 1, max.max(c), labels, n, edges, best);
        }
    }
    if n > 0 {
        labels[0] = 0;
        walk(1, 0, &mut labels, n, edges, &mut best);
    }
    best
}

/// Sequential greedy local moving from singletons. Vertices are swept in id
/// order; each moves to the neighbouring community (in order of first
/// appearance among its sorted neighbours) with the largest modularity gain,
/// where gains are computed by re-evaluating the full pairwise modularity.
/// Sweeps repeat until a sweep's total gain is at most `tolerance`.
pub fn greedy_local_moving(
    n: usize,
    edges: &[(u32, u32, f64)],
    tolerance: f64,
    max_sweeps: usize,
) -> Vec<u32> {
    let a = adjacency(n, edges);
    let mut labels: Vec<u32> = (0..n as u32).collect();
    for _ in 0..max_sweeps {
        let mut total_gain = 0.0;
        for i in 0..n {
            let current = modularity_pairwise(n, edges, &labels);
            let own = labels[i];
            let mut candidates = Vec::new();
            for (j, &w) in a[i].iter().enumerate() {
                if j != i && w > 0.0 && labels[j] != own && !candidates.contains(&labels[j]) {
                    candidates.push(labels[j]);
                }
            }
            let mut best = (0.0, own);
            for c in candidates {
                labels[i] = c;
                let gain = modularity_pairwise(n, edges, &labels) - current;
                if gain > best.0 {
                    best = (gain, c);
                }
            }
            labels[i] = best.1;
            total_gain += best.0;
        }
        if total_gain <= tolerance {
            break;
        }
    }
    labels
}
