//! Metric-dimensionality analysis for finite connected graphs.
//!
//! The central quantity is `Dim(G)`: the largest k such that the whole
//! vertex set is a k-metric generator, equal to the minimum size of a
//! distinctive set over all vertex pairs. Alongside it the crate computes
//! the structural bounds that sandwich it — the landmark bound sigma, the
//! boundary bound eta, the separator bound mu, the shortest maximal
//! geodesic A, and the diameter lower bound — plus a fast specialized path
//! for block graphs and a verification harness that re-checks every bound
//! against brute-force oracles on generated corpora.
//!
//! Heavy loops (per-source BFS, per-pair minima, per-radius sweeps) run on
//! rayon when the default `parallel` feature is on, and degrade to plain
//! iterators under `--no-default-features`.

pub mod blockgraph;
pub mod blocks;
pub mod boundary;
pub mod dimension;
pub mod distance;
pub mod error;
pub mod exec;
pub mod generate;
pub mod geodesic;
pub mod graph;
pub mod report;
pub mod separator;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
