//! File formats: graph input, coloring output, run statistics.

mod labels;
mod output;
mod parse;
mod stats;

pub use labels::LabelMap;
pub use output::{write_coloring, WriteError};
pub use parse::{
    parse_dimacs_col, parse_edge_list, parse_graph, Format, ParseError, ParseErrorKind, ParsedGraph,
};
pub use stats::{
    emit_stats, BatchStats, BatchSummary, RoundStats, RunStats, BATCH_SCHEMA, RUN_SCHEMA,
};
