//! Fixtures, graph generators and brute-force oracles for the splitpass test suites.
//!
//! Nothing here depends on the `splitpass` crate: graphs are plain
//! `(num_vertices, edges)` pairs and every oracle works on its own adjacency.

pub mod corpus;
pub mod fixtures;
pub mod generate;
pub mod oracle;

/// Undirected edge list: each edge appears once, self-loops allowed.
pub type Edges = Vec<(u32, u32, f64)>;
