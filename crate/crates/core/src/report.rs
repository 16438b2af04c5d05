//! Run summaries produced by the detection driver.

use std::ops::AddAssign;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::louvain::LouvainParams;

/// Version of the serialized report layout.
pub const REPORT_SCHEMA: u32 = 1;

/// Wall time spent in each phase, in seconds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseTimes {
    pub local_moving_s: f64,
    pub splitting_s: f64,
    pub aggregation_s: f64,
    pub other_s: f64,
}

impl PhaseTimes {
    pub fn sum(&self) -> f64 {
        self.local_moving_s + self.splitting_s + self.aggregation_s + self.other_s
    }
}

impl AddAssign for PhaseTimes {
    fn add_assign(&mut self, rhs: PhaseTimes) {
        self.local_moving_s += rhs.local_moving_s;
        self.splitting_s += rhs.splitting_s;
        self.aggregation_s += rhs.aggregation_s;
        self.other_s += rhs.other_s;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PassRecord {
    pub pass: usize,
    /// Vertices of the (super-vertex) graph the pass ran on.
    pub vertices: usize,
    /// Communities left after local moving and any per-pass split.
    pub communities: usize,
    pub iterations: usize,
    #[serde(flatten)]
    pub times: PhaseTimes,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectionReport {
    pub schema: u32,
    /// `None` when the graph has no edge weight and modularity is undefined.
    pub modularity: Option<f64>,
    pub num_communities: usize,
    pub disconnected_fraction: f64,
    pub passes: usize,
    pub pass_records: Vec<PassRecord>,
    /// Per-phase totals, including work done after the last pass.
    pub phase_totals: PhaseTimes,
    pub total_runtime_s: f64,
    pub workers: usize,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub params: LouvainParams,
}

pub(crate) fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_times_add_up() {
        let mut t = PhaseTimes {
            local_moving_s: 1.0,
            splitting_s: 0.5,
            aggregation_s: 0.25,
            other_s: 0.125,
        };
        assert_eq!(t.sum(), 1.875);
        t += t;
        assert_eq!(t.sum(), 3.75);
    }
}
