use std::io::{self, Write};

use thiserror::Error;

use super::labels::LabelMap;
use crate::coloring::Coloring;

#[derive(Debug, Error)]
pub enum WriteError {
    #[error("coloring is empty")]
    Empty,
    #[error("vertex {0} has no color")]
    Uncolored(usize),
    #[error("coloring covers {colors} vertices but {labels} labels are known")]
    LabelMismatch { colors: usize, labels: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Writes `s <k>` followed by one `<label> <color>` line per vertex.
pub fn write_coloring<W: Write>(
    coloring: &Coloring,
    labels: &LabelMap,
    mut sink: W,
) -> Result<(), WriteError> {
    if coloring.is_empty() {
        return Err(WriteError::Empty);
    }
    if coloring.len() != labels.len() {
        return Err(WriteError::LabelMismatch {
            colors: coloring.len(),
            labels: labels.len(),
        });
    }
    writeln!(sink, "s {}", coloring.num_colors())?;
    for (v, c) in coloring.iter() {
        let c = c.ok_or(WriteError::Uncolored(v))?;
        writeln!(sink, "{} {}", labels.label(v), c)?;
    }
    sink.flush()?;
    Ok(())
}
