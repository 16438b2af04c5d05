//! Multi-pass parallel Louvain with optional splitting of internally
//! disconnected communities after every pass or once at the end.

mod accumulator;
mod aggregate;
mod local_move;

use std::borrow::Cow;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atomic::{atomic_labels, unwrap_labels};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::parallel::{default_workers, worker_pool, WorkerLocal};
use crate::quality::{self, CommunityWeights, Membership};
use crate::report::{secs, DetectionReport, PassRecord, PhaseTimes, REPORT_SCHEMA};
use crate::split::{split_disconnected, SplitConfig, SplitMode};

pub use accumulator::{scan_communities, ScanAccumulator};
pub use aggregate::louvain_aggregate;
pub use local_move::louvain_move;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LouvainParams {
    /// Per-iteration convergence threshold on the summed modularity gain.
    pub tolerance: f64,
    /// The tolerance is divided by this after every pass.
    pub tolerance_drop: f64,
    /// Passes stop once the community count shrinks by less than this ratio.
    pub aggregation_tolerance: f64,
    pub max_passes: usize,
    pub max_iterations: usize,
    pub split: SplitConfig,
    pub workers: usize,
}

impl Default for LouvainParams {
    fn default() -> Self {
        LouvainParams {
            tolerance: 1e-2,
            tolerance_drop: 10.0,
            aggregation_tolerance: 0.8,
            max_passes: 10,
            max_iterations: 20,
            split: SplitConfig::default(),
            workers: default_workers(),
        }
    }
}

impl LouvainParams {
    pub fn with_split(mut self, split: SplitConfig) -> Self {
        self.split = split;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidParams(msg.to_string()));
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return fail("tolerance must be >= 0");
        }
        if self.tolerance_drop.is_nan() || self.tolerance_drop <= 1.0 {
            return fail("tolerance drop must be > 1");
        }
        if !(self.aggregation_tolerance > 0.0 && self.aggregation_tolerance <= 1.0) {
            return fail("aggregation tolerance must be in (0, 1]");
        }
        if self.max_passes == 0 || self.max_iterations == 0 {
            return fail("max passes and max iterations must be >= 1");
        }
        if self.workers == 0 {
            return fail("worker count must be >= 1");
        }
        Ok(())
    }
}

/// Progress notifications from [`louvain_observed`].
#[derive(Debug)]
pub enum PassEvent<'a> {
    /// After local moving (and the per-pass split, if enabled).
    /// `membership` labels vertices of `graph`; `dendrogram` maps original
    /// vertices to vertices of `graph`.
    Moved {
        pass: usize,
        iterations: usize,
        graph: &'a Graph,
        membership: &'a [VertexId],
        dendrogram: &'a [VertexId],
    },
    /// After aggregation. `dendrogram` maps original vertices to the
    /// super-vertices of `graph`.
    Aggregated {
        pass: usize,
        graph: &'a Graph,
        dendrogram: &'a [VertexId],
    },
}

/// Runs community detection on `graph`.
pub fn louvain(graph: &Graph, params: &LouvainParams) -> Result<(Membership, DetectionReport)> {
    louvain_observed(graph, params, &mut |_| {})
}

/// [`louvain`] with a callback invoked at pass milestones.
pub fn louvain_observed(
    graph: &Graph,
    params: &LouvainParams,
    observer: &mut (dyn FnMut(PassEvent<'_>) + Send),
) -> Result<(Membership, DetectionReport)> {
    params.validate()?;
    let pool = worker_pool(params.workers)?;
    pool.install(|| run(graph, params, observer))
}

fn run(
    graph: &Graph,
    params: &LouvainParams,
    observer: &mut (dyn FnMut(PassEvent<'_>) + Send),
) -> Result<(Membership, DetectionReport)> {
    let started = Instant::now();
    let n = graph.num_vertices();
    let scratch = WorkerLocal::new(|| ScanAccumulator::new(n));

    let mut dendrogram: Vec<VertexId> = (0..n as VertexId).collect();
    let mut current: Cow<'_, Graph> = Cow::Borrowed(graph);
    let mut tolerance = params.tolerance;
    let mut unfolded: Option<Vec<VertexId>> = None;
    let mut records = Vec::new();
    let mut totals = PhaseTimes::default();

    for pass in 0..params.max_passes {
        let mut times = PhaseTimes::default();
        let vertices = current.num_vertices();

        let t = Instant::now();
        let weights = CommunityWeights::singletons(&current);
        let labels = atomic_labels(0..vertices as VertexId);
        times.other_s += secs(t.elapsed());

        let t = Instant::now();
        let iterations = local_move::move_vertices(
            &current,
            &labels,
            &weights,
            tolerance,
            params.max_iterations,
            &scratch,
        );
        let mut membership = unwrap_labels(labels);
        times.local_moving_s = secs(t.elapsed());

        if params.split.mode == SplitMode::Pass {
            let t = Instant::now();
            membership =
                split_disconnected(&current, &membership, params.split.technique).into_vec();
            times.splitting_s = secs(t.elapsed());
        }

        observer(PassEvent::Moved {
            pass,
            iterations,
            graph: &current,
            membership: &membership,
            dendrogram: &dendrogram,
        });

        let t = Instant::now();
        let communities = count_labels(&membership, vertices);
        let converged = iterations <= 1;
        let low_shrink = communities as f64 / vertices as f64 > params.aggregation_tolerance;
        if converged || low_shrink {
            unfolded = Some(membership);
            times.other_s += secs(t.elapsed());
            records.push(PassRecord {
                pass,
                vertices,
                communities,
                iterations,
                times,
            });
            totals += times;
            break;
        }
        let (renumbered, _) = renumber(&membership);
        dendrogram = lookup(&dendrogram, &renumbered);
        times.other_s += secs(t.elapsed());

        let t = Instant::now();
        current = Cow::Owned(aggregate::aggregate(&current, &renumbered, &scratch)?);
        times.aggregation_s = secs(t.elapsed());
        tolerance /= params.tolerance_drop;

        observer(PassEvent::Aggregated {
            pass,
            graph: &current,
            dendrogram: &dendrogram,
        });
        records.push(PassRecord {
            pass,
            vertices,
            communities,
            iterations,
            times,
        });
        totals += times;
    }

    let t = Instant::now();
    if let Some(last) = unfolded {
        dendrogram = lookup(&dendrogram, &last);
    }
    totals.other_s += secs(t.elapsed());

    if params.split.mode == SplitMode::Last {
        let t = Instant::now();
        dendrogram = split_disconnected(graph, &dendrogram, params.split.technique).into_vec();
        totals.splitting_s += secs(t.elapsed());
    }

    let t = Instant::now();
    let (labels, num_communities) = renumber(&dendrogram);
    totals.other_s += secs(t.elapsed());
    let total_runtime_s = secs(started.elapsed());

    let modularity = match quality::modularity(graph, &labels) {
        Ok(q) => Some(q),
        Err(Error::ZeroTotalWeight) => None,
        Err(e) => return Err(e),
    };
    let flags = quality::disconnected_communities(graph, &labels);
    let disconnected_fraction = quality::disconnected_fraction(&flags, num_communities)?;

    let report = DetectionReport {
        schema: REPORT_SCHEMA,
        modularity,
        num_communities,
        disconnected_fraction,
        passes: records.len(),
        pass_records: records,
        phase_totals: totals,
        total_runtime_s,
        workers: rayon::current_num_threads(),
        num_vertices: n,
        num_edges: graph.num_edges(),
        params: params.clone(),
    };
    Ok((Membership::from_vec_unchecked(labels), report))
}

fn count_labels(membership: &[VertexId], limit: usize) -> usize {
    let mut seen = vec![false; limit];
    membership
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
        .count()
}

/// Maps labels to `[0, k)` in order of first appearance by vertex id.
pub fn renumber_communities(membership: &[VertexId]) -> (Membership, usize) {
    let (labels, k) = renumber(membership);
    (Membership::from_vec_unchecked(labels), k)
}

fn renumber(membership: &[VertexId]) -> (Vec<VertexId>, usize) {
    let mut map = vec![VertexId::MAX; membership.len()];
    let mut next = 0;
    let labels = membership
        .iter()
        .map(|&c| {
            let slot = &mut map[c as usize];
            if *slot == VertexId::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    (labels, next as usize)
}

/// Composes memberships: `result[i] = coarse[fine[i]]`.
pub fn lookup_dendrogram(fine: &[VertexId], coarse: &[VertexId]) -> Result<Membership> {
    if let Some((index, &label)) = fine
        .iter()
        .enumerate()
        .find(|(_, &c)| c as usize >= coarse.len())
    {
        return Err(Error::LabelOutOfRange {
            index,
            label: label as u64,
            limit: coarse.len(),
        });
    }
    Membership::new(lookup(fine, coarse))
}

fn lookup(fine: &[VertexId], coarse: &[VertexId]) -> Vec<VertexId> {
    fine.par_iter().map(|&c| coarse[c as usize]).collect()
}
