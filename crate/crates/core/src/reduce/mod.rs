//! Optimality-preserving reductions and the inverse mapping that lifts a
//! kernel coloring back to the full graph.
//!
//! Rules, in sweep order:
//! * degree: a vertex with fewer than `lb` neighbors can always be colored
//!   last;
//! * complement crown, `|C| = 1`: `N̄[u]` with `|N̄(u)| ≤ 1` is one class;
//! * complement crown, `|C| = 2`: an edge `{u, v}` with `N̄(u) = N̄(v) =
//!   {x, y}` yields classes `{u, x}` and `{v, y}`;
//! * independent set: an independent `N̄[u]` is one class;
//! * domination: if `N(u) ⊆ N(v)` then `u` reuses `v`'s color.

mod reconstruct;
mod rules;
mod trace;

pub use reconstruct::{reconstruct, ReconstructError};
pub use rules::{FixpointSummary, Reducer, ReductionConfig, RuleCounters};
pub use trace::{ReductionEvent, ReductionTrace};
