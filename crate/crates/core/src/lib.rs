//! Reduction-based anytime coloring for large sparse graphs.
//!
//! The solver repeatedly shrinks the graph with optimality-preserving
//! reductions, brackets the chromatic number with a clique lower bound and
//! greedy upper bounds, and peels off independent sets when the reductions
//! stall. Every reported answer is backed by a verified proper coloring of
//! the input graph.
//!
//! ```
//! use recol::{generators, solve, SolverConfig};
//! use std::time::Duration;
//!
//! let g = generators::petersen();
//! let config = SolverConfig { time_limit: Duration::from_millis(200), max_rounds: Some(20), ..Default::default() };
//! let result = solve(&g, &config).unwrap();
//! assert_eq!(result.ans, 3);
//! ```

pub mod bounds;
pub mod coloring;
pub mod deadline;
pub mod extract;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod solver;
pub mod view;

pub use coloring::Coloring;
pub use deadline::Deadline;
pub use graph::{Graph, GraphError, Vertex};
pub use solver::{best_coloring_certificate, solve, SolveError, SolveResult, SolverConfig};
pub use view::SubgraphView;
