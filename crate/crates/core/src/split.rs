//! Splitting internally-disconnected communities into their connected pieces.
//!
//! Three techniques produce the same partition: minimum-label propagation
//! (LP), label propagation that only revisits vertices whose neighbours changed
//! (LPP), and per-community BFS. They differ only in which member id ends up
//! as the label of each piece.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU32, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atomic::{atomic_labels, unwrap_labels};
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::quality::Membership;
use crate::traverse::{bfs_visit_for_each, flags};

const SWEEP_GRAIN: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTechnique {
    Lp,
    Lpp,
    Bfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitMode {
    /// Never split.
    None,
    /// Split once, after the last pass, on the original graph.
    Last,
    /// Split after the local-moving phase of every pass.
    Pass,
}

/// When and how disconnected communities are split. `technique` is ignored
/// when `mode` is [`SplitMode::None`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct SplitConfig {
    pub technique: SplitTechnique,
    pub mode: SplitMode,
}

impl SplitConfig {
    pub const NONE: SplitConfig = SplitConfig {
        technique: SplitTechnique::Bfs,
        mode: SplitMode::None,
    };

    pub fn pass(technique: SplitTechnique) -> Self {
        SplitConfig {
            technique,
            mode: SplitMode::Pass,
        }
    }

    pub fn last(technique: SplitTechnique) -> Self {
        SplitConfig {
            technique,
            mode: SplitMode::Last,
        }
    }

    /// Every configuration that splits, in the order SP-BFS, SP-LP, SP-LPP, SL-BFS, SL-LP, SL-LPP.
    pub fn all_splitting() -> [SplitConfig; 6] {
        use SplitTechnique::*;
        [
            Self::pass(Bfs),
            Self::pass(Lp),
            Self::pass(Lpp),
            Self::last(Bfs),
            Self::last(Lp),
            Self::last(Lpp),
        ]
    }
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig::pass(SplitTechnique::Bfs)
    }
}

impl fmt::Display for SplitTechnique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitTechnique::Lp => "lp",
            SplitTechnique::Lpp => "lpp",
            SplitTechnique::Bfs => "bfs",
        })
    }
}

impl FromStr for SplitTechnique {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "lp" => Ok(SplitTechnique::Lp),
            "lpp" => Ok(SplitTechnique::Lpp),
            "bfs" => Ok(SplitTechnique::Bfs),
            _ => Err(Error::InvalidParams(format!(
                "unknown split technique `{s}`"
            ))),
        }
    }
}

impl fmt::Display for SplitConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            SplitMode::None => f.write_str("none"),
            SplitMode::Last => write!(f, "last-{}", self.technique),
            SplitMode::Pass => write!(f, "pass-{}", self.technique),
        }
    }
}

impl FromStr for SplitConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "none" {
            return Ok(SplitConfig::NONE);
        }
        let bad = || Error::InvalidParams(format!("unknown split mode `{s}`"));
        let (mode, technique) = s.split_once('-').ok_or_else(bad)?;
        let technique = technique.parse().map_err(|_| bad())?;
        match mode {
            "last" => Ok(SplitConfig::last(technique)),
            "pass" => Ok(SplitConfig::pass(technique)),
            _ => Err(bad()),
        }
    }
}

impl From<SplitConfig> for String {
    fn from(config: SplitConfig) -> String {
        config.to_string()
    }
}

impl TryFrom<String> for SplitConfig {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// Splits with the given technique.
pub fn split_disconnected(
    graph: &Graph,
    membership: &[VertexId],
    technique: SplitTechnique,
) -> Membership {
    match technique {
        SplitTechnique::Lp => split_disconnected_lp(graph, membership, false),
        SplitTechnique::Lpp => split_disconnected_lp(graph, membership, true),
        SplitTechnique::Bfs => split_disconnected_bfs(graph, membership),
    }
}

/// Minimum-label propagation restricted to communities. Each vertex ends up
/// labelled with the smallest vertex id in its community-restricted component.
pub fn split_disconnected_lp(graph: &Graph, membership: &[VertexId], pruning: bool) -> Membership {
    split_disconnected_lp_counted(graph, membership, pruning).0
}

/// Like [`split_disconnected_lp`], also returning the number of sweeps
/// performed (including the final sweep that changes nothing).
pub fn split_disconnected_lp_counted(
    graph: &Graph,
    membership: &[VertexId],
    pruning: bool,
) -> (Membership, usize) {
    let n = graph.num_vertices();
    assert_eq!(
        membership.len(),
        n,
        "membership length must match vertex count"
    );
    let labels = atomic_labels(0..n as VertexId);
    // true = processed; LP never sets it, so every sweep visits all vertices.
    let processed = flags(n);
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let changed: usize = (0..n as VertexId)
            .into_par_iter()
            .with_min_len(SWEEP_GRAIN)
            .map(|i| propagate_min(graph, membership, &labels, &processed, pruning, i))
            .sum();
        if changed == 0 {
            break;
        }
    }
    (
        Membership::from_vec_unchecked(unwrap_labels(labels)),
        sweeps,
    )
}

#[inline]
fn propagate_min(
    graph: &Graph,
    membership: &[VertexId],
    labels: &[AtomicU32],
    processed: &[AtomicBool],
    pruning: bool,
    i: VertexId,
) -> usize {
    if pruning {
        if processed[i as usize].load(Ordering::Relaxed) {
            return 0;
        }
        processed[i as usize].store(true, Ordering::Relaxed);
    }
    let c = membership[i as usize];
    let own = labels[i as usize].load(Ordering::Relaxed);
    let mut min = own;
    for &j in graph.targets_of(i) {
        if membership[j as usize] == c {
            min = min.min(labels[j as usize].load(Ordering::Relaxed));
        }
    }
    if min == own {
        return 0;
    }
    labels[i as usize].store(min, Ordering::Relaxed);
    if pruning {
        for &j in graph.targets_of(i) {
            if membership[j as usize] == c {
                processed[j as usize].store(false, Ordering::Relaxed);
            }
        }
    }
    1
}

/// Per-community BFS splitting.
///
/// Every worker sweeps all vertices, starting at its own offset. An unvisited
/// vertex whose community is not busy is claimed with a compare-and-swap on the
/// community's busy flag; a BFS restricted to that community then labels every
/// reachable member with the start vertex's id. Workers re-sweep until a full
/// sweep finds no vertex left behind by a busy community.
pub fn split_disconnected_bfs(graph: &Graph, membership: &[VertexId]) -> Membership {
    let n = graph.num_vertices();
    assert_eq!(
        membership.len(),
        n,
        "membership length must match vertex count"
    );
    let labels = atomic_labels(0..n as VertexId);
    let visited = flags(n);
    let busy = flags(n);
    let remaining = AtomicUsize::new(n);

    rayon::broadcast(|ctx| {
        let start = ctx.index() * n / ctx.num_threads();
        let mut queue = Vec::new();
        loop {
            let mut deferred = false;
            for k in 0..n {
                let i = ((start + k) % n) as VertexId;
                if visited[i as usize].load(Ordering::Acquire) {
                    continue;
                }
                let c = membership[i as usize];
                let claim = &busy[c as usize];
                if claim.load(Ordering::Relaxed)
                    || claim
                        .compare_exchange(false, true, Ordering::Acquire, Ordering::Relaxed)
                        .is_err()
                {
                    deferred = true;
                    continue;
                }
                let mut reached = 0;
                bfs_visit_for_each(
                    &visited,
                    graph,
                    i,
                    &mut queue,
                    |j| membership[j as usize] == c,
                    |j| {
                        labels[j as usize].store(i, Ordering::Relaxed);
                        reached += 1;
                    },
                );
                remaining.fetch_sub(reached, Ordering::AcqRel);
                claim.store(false, Ordering::Release);
            }
            if !deferred || remaining.load(Ordering::Acquire) == 0 {
                break;
            }
            std::thread::yield_now();
        }
    });

    Membership::from_vec_unchecked(unwrap_labels(labels))
}

/// Relabels every community with the smallest vertex id it contains.
pub fn canonicalize_partition(membership: &[VertexId]) -> Membership {
    let mut min_member = vec![VertexId::MAX; membership.len()];
    for (i, &c) in membership.iter().enumerate() {
        let slot = &mut min_member[c as usize];
        *slot = (*slot).min(i as VertexId);
    }
    Membership::from_vec_unchecked(membership.iter().map(|&c| min_member[c as usize]).collect())
}
