//! Deterministic synthetic graphs. Every generator takes the RNG by reference
//! and returns `(num_vertices, edges)` with each undirected edge listed once.

use std::collections::HashSet;

use rand::Rng;

use crate::Edges;

fn unit(pairs: impl IntoIterator<Item = (u32, u32)>) -> Edges {
    pairs.into_iter().map(|(u, v)| (u, v, 1.0)).collect()
}

fn key(u: u32, v: u32) -> (u32, u32) {
    (u.min(v), u.max(v))
}

/// Uniform weight in `(0, hi]`.
pub fn positive_weight<R: Rng>(rng: &mut R, hi: f64) -> f64 {
    hi - rng.gen_range(0.0..hi)
}

/// `G(n, m)`-style graph: `m` distinct random non-loop edges (fewer if the
/// graph is too small to hold them).
pub fn erdos_renyi<R: Rng>(n: usize, m: usize, rng: &mut R) -> (usize, Edges) {
    let max = n * n.saturating_sub(1) / 2;
    let m = m.min(max);
    let mut seen = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u != v && seen.insert(key(u, v)) {
            pairs.push((u, v));
        }
    }
    (n, unit(pairs))
}

/// Small random graph with weights in `(0, 4]`, occasional self-loops and
/// possibly isolated vertices.
pub fn small_weighted<R: Rng>(max_vertices: usize, rng: &mut R) -> (usize, Edges) {
    let n = rng.gen_range(1..=max_vertices);
    let density = rng.gen_range(0.0..0.5);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u..n as u32 {
            let p = if u == v { 0.05 } else { density };
            if rng.gen_bool(p) {
                edges.push((u, v, positive_weight(rng, 4.0)));
            }
        }
    }
    (n, edges)
}

/// Planted partition with `blocks` equal blocks. Each vertex draws `intra`
/// partners inside its block and `inter` partners anywhere.
pub fn planted_partition<R: Rng>(
    n: usize,
    blocks: usize,
    intra: usize,
    inter: usize,
    rng: &mut R,
) -> (usize, Edges) {
    let block_size = n.div_ceil(blocks);
    let mut seen = HashSet::with_capacity(n * (intra + inter));
    let mut pairs = Vec::with_capacity(n * (intra + inter));
    for u in 0..n as u32 {
        let start = (u as usize / block_size) * block_size;
        let end = (start + block_size).min(n);
        for k in 0..intra + inter {
            let v = if k < intra {
                rng.gen_range(start..end) as u32
            } else {
                rng.gen_range(0..n as u32)
            };
            if u != v && seen.insert(key(u, v)) {
                pairs.push((u, v));
            }
        }
    }
    (n, unit(pairs))
}

/// Planted partition with weights in `(0, 4]`.
pub fn weighted_planted_partition<R: Rng>(
    n: usize,
    blocks: usize,
    intra: usize,
    inter: usize,
    rng: &mut R,
) -> (usize, Edges) {
    let (n, mut edges) = planted_partition(n, blocks, intra, inter, rng);
    for e in &mut edges {
        e.2 = positive_weight(rng, 4.0);
    }
    (n, edges)
}

/// Road-network-like lattice: each grid edge survives with probability 0.9,
/// plus sparse diagonal shortcuts.
pub fn road_grid<R: Rng>(width: usize, height: usize, rng: &mut R) -> (usize, Edges) {
    let id = |x: usize, y: usize| (y * width + x) as u32;
    let mut pairs = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width && rng.gen_bool(0.9) {
                pairs.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < height && rng.gen_bool(0.9) {
                pairs.push((id(x, y), id(x, y + 1)));
            }
            if x + 1 < width && y + 1 < height && rng.gen_bool(0.05) {
                pairs.push((id(x, y), id(x + 1, y + 1)));
            }
        }
    }
    (width * height, unit(pairs))
}

/// Preferential attachment: each new vertex links to `m` distinct earlier
/// vertices chosen proportionally to degree.
pub fn preferential_attachment<R: Rng>(n: usize, m: usize, rng: &mut R) -> (usize, Edges) {
    let mut ends: Vec<u32> = Vec::with_capacity(2 * n * m);
    let mut pairs = Vec::with_capacity(n * m);
    for u in 0..=m as u32 {
        for v in u + 1..=m as u32 {
            pairs.push((u, v));
            ends.extend([u, v]);
        }
    }
    let mut chosen = Vec::with_capacity(m);
    for u in (m + 1) as u32..n as u32 {
        chosen.clear();
        while chosen.len() < m {
            let v = ends[rng.gen_range(0..ends.len())];
            if !chosen.contains(&v) {
                chosen.push(v);
            }
        }
        for &v in &chosen {
            pairs.push((v, u));
            ends.extend([u, v]);
        }
    }
    (n, unit(pairs))
}

/// Sparse chain-dominated graph in the style of k-mer overlap graphs: long
/// paths with occasional breaks and short-range branches.
pub fn kmer_chains<R: Rng>(n: usize, rng: &mut R) -> (usize, Edges) {
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for u in 0..n as u32 - 1 {
        if rng.gen_bool(0.97) && seen.insert((u, u + 1)) {
            pairs.push((u, u + 1));
        }
        if rng.gen_bool(0.12) {
            let v = (u as usize + rng.gen_range(2..40)).min(n - 1) as u32;
            if v != u && seen.insert(key(u, v)) {
                pairs.push((u, v));
            }
        }
    }
    (n, unit(pairs))
}

/// Random labels in `[0, k)` for `n` vertices, `k` drawn from `1..=n`.
pub fn random_membership<R: Rng>(n: usize, rng: &mut R) -> Vec<u32> {
    let k = rng.gen_range(1..=n as u32);
    (0..n).map(|_| rng.gen_range(0..k)).collect()
}
