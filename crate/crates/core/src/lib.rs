//! Certificates for Ramsey-type statements on graphs of large chromatic
//! number.
//!
//! - [`mono_tree`]: in every 2-edge-coloring of a graph with `χ >= k` there
//!   is a monochromatic tree on `k` vertices, produced together with the
//!   bipartite component multigraph and its König edge coloring.
//! - [`mono_matching`]: matching targets `n_1..n_t`, the matching Ramsey
//!   number, and two independent routes to a monochromatic `n_i K_2`.
//! - [`chromatic`]: exact chromatic number with proper-coloring witnesses.
//! - [`hunter`]: exhaustive coloring search, tiny Ramsey numbers, candidate
//!   generators and the counterexample hunt for acyclic patterns.
//! - [`cli`]: the subcommands behind the `ramsey-chromatic` binary.

pub mod chromatic;
pub mod cli;
pub mod error;
pub mod graph;
pub mod hunter;
pub mod mono_matching;
pub mod mono_tree;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeColoring, Graph, VertexColoring};
