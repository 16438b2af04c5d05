//! Immutable weighted undirected graphs in CSR form.
//!
//! Every undirected edge `{i, j}` with `i != j` is stored as two arcs, `(i, j, w)`
//! and `(j, i, w)`. A self-loop `(i, i, w)` is stored as a single arc, so it
//! contributes `w` to the weighted degree of `i` and `w` to the total weight.
//! With this ordered-pair convention the total weight equals `2m`.

mod edge_list;
mod matrix_market;

use std::io::Write;
use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use edge_list::{load_edge_list, parse_edge_list};
pub use matrix_market::{load_matrix_market, parse_matrix_market};

/// Vertex identifier. Community labels share the same domain.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    weights: Vec<f64>,
    total_weight: f64,
}

/// One raw input edge before symmetrization. `line` is used for error reporting.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RawEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: f64,
    pub line: usize,
}

impl Graph {
    /// Builds a graph with `num_vertices` vertices from undirected edges.
    ///
    /// Edges listed twice in the same direction are merged by summing their weights.
    /// An edge listed in both directions with the same weight is kept once; with
    /// different weights it is rejected.
    pub fn from_edges<I>(num_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, f64)>,
    {
        let raw = edges
            .into_iter()
            .enumerate()
            .map(|(k, (u, v, w))| RawEdge {
                u,
                v,
                w,
                line: k + 1,
            })
            .collect::<Vec<_>>();
        for e in &raw {
            let max = e.u.max(e.v) as usize;
            if max >= num_vertices {
                return Err(Error::IndexOutOfRange {
                    line: e.line,
                    index: max as i64,
                    max: num_vertices.saturating_sub(1),
                });
            }
        }
        Self::symmetrize(num_vertices, raw)
    }

    /// Builds a graph directly from CSR arrays, checking every invariant.
    pub fn from_csr(
        offsets: Vec<usize>,
        targets: Vec<VertexId>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        if offsets.len() < 2 {
            return Err(Error::EmptyGraph);
        }
        let n = offsets.len() - 1;
        if offsets[0] != 0
            || offsets.windows(2).any(|w| w[0] > w[1])
            || offsets[n] != targets.len()
            || targets.len() != weights.len()
        {
            return Err(Error::InvalidParams("inconsistent CSR offsets".into()));
        }
        if let Some(&t) = targets.iter().find(|&&t| t as usize >= n) {
            return Err(Error::IndexOutOfRange {
                line: 0,
                index: t as i64,
                max: n - 1,
            });
        }
        if let Some(&w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::NonPositiveWeight { line: 0, weight: w });
        }
        let mut graph = Self::from_parts(offsets, targets, weights);
        graph.sort_neighbors();
        graph.check_symmetry()?;
        Ok(graph)
    }

    pub(crate) fn from_parts(
        offsets: Vec<usize>,
        targets: Vec<VertexId>,
        weights: Vec<f64>,
    ) -> Self {
        let total_weight = weights.iter().sum();
        Self::from_parts_with_total(offsets, targets, weights, total_weight)
    }

    /// For graphs derived from another whose total weight is known to carry
    /// over unchanged; avoids re-summing regrouped weights.
    pub(crate) fn from_parts_with_total(
        offsets: Vec<usize>,
        targets: Vec<VertexId>,
        weights: Vec<f64>,
        total_weight: f64,
    ) -> Self {
        Graph {
            offsets,
            targets,
            weights,
            total_weight,
        }
    }

    pub(crate) fn symmetrize(num_vertices: usize, mut raw: Vec<RawEdge>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        for e in &raw {
            if !(e.w.is_finite() && e.w > 0.0) {
                return Err(Error::NonPositiveWeight {
                    line: e.line,
                    weight: e.w,
                });
            }
        }
        // Key each entry by its unordered pair plus a direction bit.
        let key = |e: &RawEdge| (e.u.min(e.v), e.u.max(e.v), e.u > e.v);
        raw.sort_by_key(key);

        let mut edges: Vec<(VertexId, VertexId, f64)> = Vec::with_capacity(raw.len());
        let mut k = 0;
        while k < raw.len() {
            let (a, b, _) = key(&raw[k]);
            let mut forward = None;
            let mut backward = None;
            while k < raw.len() && (raw[k].u.min(raw[k].v), raw[k].u.max(raw[k].v)) == (a, b) {
                let slot = if raw[k].u > raw[k].v {
                    &mut backward
                } else {
                    &mut forward
                };
                *slot = Some(slot.unwrap_or(0.0) + raw[k].w);
                k += 1;
            }
            let w = match (forward, backward) {
                (Some(f), Some(r)) if f == r => f,
                (Some(f), Some(r)) => {
                    return Err(Error::AsymmetricWeights {
                        u: a,
                        v: b,
                        forward: f,
                        backward: r,
                    })
                }
                (Some(w), None) | (None, Some(w)) => w,
                (None, None) => unreachable!(),
            };
            edges.push((a, b, w));
        }

        let mut degree = vec![0usize; num_vertices + 1];
        for &(a, b, _) in &edges {
            degree[a as usize + 1] += 1;
            if a != b {
                degree[b as usize + 1] += 1;
            }
        }
        for i in 0..num_vertices {
            degree[i + 1] += degree[i];
        }
        let offsets = degree;
        let num_arcs = offsets[num_vertices];
        let mut cursor = offsets[..num_vertices].to_vec();
        let mut targets = vec![0; num_arcs];
        let mut weights = vec![0.0; num_arcs];
        let mut place = |src: VertexId, dst: VertexId, w: f64| {
            let slot = &mut cursor[src as usize];
            targets[*slot] = dst;
            weights[*slot] = w;
            *slot += 1;
        };
        for &(a, b, w) in &edges {
            place(a, b, w);
            if a != b {
                place(b, a, w);
            }
        }
        let mut graph = Self::from_parts(offsets, targets, weights);
        graph.sort_neighbors();
        Ok(graph)
    }

    fn sort_neighbors(&mut self) {
        let mut pairs = Vec::new();
        for i in 0..self.num_vertices() {
            let range = self.arc_range(i as VertexId);
            let targets = &mut self.targets[range.clone()];
            if targets.windows(2).all(|w| w[0] <= w[1]) {
                continue;
            }
            pairs.clear();
            pairs.extend(
                targets
                    .iter()
                    .copied()
                    .zip(self.weights[range.clone()].iter().copied()),
            );
            pairs.sort_by_key(|&(t, _)| t);
            for (k, (t, w)) in pairs.iter().enumerate() {
                self.targets[range.start + k] = *t;
                self.weights[range.start + k] = *w;
            }
        }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of stored arcs (`2M` when there are no self-loops).
    #[inline]
    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    /// Number of undirected edges, counting each self-loop once.
    pub fn num_edges(&self) -> usize {
        let loops = (0..self.num_vertices() as VertexId)
            .filter(|&i| self.targets_of(i).binary_search(&i).is_ok())
            .count();
        (self.num_arcs() + loops) / 2
    }

    /// Sum of all stored arc weights, i.e. `2m`. An aggregated graph reports
    /// the total of the graph it was built from.
    #[inline]
    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// `m`, the undirected total edge weight.
    #[inline]
    pub fn m(&self) -> f64 {
        self.total_weight / 2.0
    }

    #[inline]
    pub fn arc_range(&self, i: VertexId) -> Range<usize> {
        self.offsets[i as usize]..self.offsets[i as usize + 1]
    }

    #[inline]
    pub fn degree(&self, i: VertexId) -> usize {
        self.arc_range(i).len()
    }

    #[inline]
    pub fn targets_of(&self, i: VertexId) -> &[VertexId] {
        &self.targets[self.arc_range(i)]
    }

    #[inline]
    pub fn weights_of(&self, i: VertexId) -> &[f64] {
        &self.weights[self.arc_range(i)]
    }

    #[inline]
    pub fn neighbors(&self, i: VertexId) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        let range = self.arc_range(i);
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn targets(&self) -> &[VertexId] {
        &self.targets
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weighted degree `K_i` of every vertex.
    pub fn vertex_weights(&self) -> Vec<f64> {
        (0..self.num_vertices() as VertexId)
            .into_par_iter()
            .map(|i| self.weights_of(i).iter().sum())
            .collect()
    }

    /// Verifies that every arc `(i, j, w)` has a reverse arc `(j, i, w)`.
    pub fn check_symmetry(&self) -> Result<()> {
        (0..self.num_vertices() as VertexId)
            .into_par_iter()
            .try_for_each(|i| {
                for (j, w) in self.neighbors(i) {
                    let back = self.targets_of(j);
                    let reverse = back.binary_search(&i).ok().map(|k| self.weights_of(j)[k]);
                    if reverse != Some(w) {
                        return Err(Error::AsymmetricWeights {
                            u: i,
                            v: j,
                            forward: w,
                            backward: reverse.unwrap_or(0.0),
                        });
                    }
                }
                Ok(())
            })
    }

    /// Writes one `u v w` line per undirected edge with `u <= v`.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        for i in 0..self.num_vertices() as VertexId {
            for (j, w) in self.neighbors(i) {
                if i <= j {
                    writeln!(out, "{i} {j} {w}")?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }
}
