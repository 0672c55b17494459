//! Equitable tree-colorings of d-degenerate graphs.
//!
//! Given a graph and a number of colors `k`, [`solve()`] produces a coloring in
//! which every color class induces a forest and holds at most `ceil(n / k)`
//! vertices. When `k >= alpha * d` and `n >= beta * Delta` for one of the
//! pairs in [`plan::THEOREM_TABLE`], the construction never fails.
//!
//! The crate also ships an independent [`verify`] pass, an exhaustive
//! [`oracle`] for small graphs and a deterministic instance [`generator`].

pub mod cli;
pub mod coloring;
pub mod degeneracy;
pub mod generator;
pub mod graph;
pub mod layered;
pub mod oracle;
pub mod plan;
pub mod small_t;
pub mod solve;
pub mod union_find;
pub mod verify;

pub use coloring::PartialColoring;
pub use degeneracy::DegeneracyOrdering;
pub use graph::{parse_edge_list, write_edge_list, Graph, VertexSet};
pub use plan::{Base3Plan, Branch, SolvePlan};
pub use solve::{solve, Solution, SolveError, SolveOptions};
