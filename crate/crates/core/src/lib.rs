//! Shortest non-separating s–t paths on connected chordal graphs.
//!
//! A path is *non-separating* when deleting its edges leaves the graph
//! connected. [`solve`] finds a shortest such path on a connected chordal
//! graph with positive integer lengths, and [`decide`] answers the existence
//! question alone. The [`oracle`] module contains exhaustive reference
//! implementations for small graphs, and [`reduction`] builds the 3-SAT
//! gadget graphs that show the general problem is NP-hard.

pub mod chordal;
pub mod connectivity;
pub mod decision;
pub mod dijkstra;
mod error;
pub mod format;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod solver;

pub use chordal::{is_chordal, perfect_elimination_ordering};
pub use connectivity::{bridges, BlockCutTree};
pub use decision::{decide, prune_to_bridge_free_region, Decision, PrunedGraph};
pub use dijkstra::{dijkstra, ShortestPathTree};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Graph, Length, Path, VertexId};
pub use solver::{solve, solve_detailed, SolveReport};
