//! Parallel Louvain community detection that can split communities which
//! end up internally disconnected.
//!
//! ```no_run
//! use splitpass::{louvain, Graph, LouvainParams};
//!
//! let graph = Graph::from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
//! let (membership, report) = louvain(&graph, &LouvainParams::default()).unwrap();
//! assert_eq!(report.num_communities, 2);
//! assert_eq!(membership[0], membership[1]);
//! ```

pub mod atomic;
pub mod error;
pub mod graph;
pub mod louvain;
pub mod parallel;
pub mod quality;
pub mod report;
pub mod split;
mod traverse;

pub use error::{Error, Result};
pub use graph::{load_edge_list, load_matrix_market, Graph, VertexId};
pub use louvain::{louvain, louvain_observed, LouvainParams, PassEvent};
pub use quality::{disconnected_communities, modularity, Membership};
pub use report::{DetectionReport, PassRecord, PhaseTimes};
pub use split::{split_disconnected, SplitConfig, SplitMode, SplitTechnique};
