use thiserror::Error;

use super::trace::ReductionEvent;
use crate::coloring::Coloring;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("dominator {v} of vertex {u} has no color during replay")]
    UncoloredDominator { u: Vertex, v: Vertex },
    #[error("vertex {0} is neither in the kernel nor removed by the trace")]
    Uncovered(Vertex),
    #[error("reconstructed coloring is not proper")]
    Improper,
}

/// Extends a coloring of the kernel to every vertex of `base` by replaying
/// `events` backwards.
///
/// Class events get fresh colors, dominated vertices copy their dominator's
/// color, and degree-removed vertices take the smallest color missing from
/// their colored neighbors (a fresh one if none is missing).
pub fn reconstruct(
    base: &Graph,
    events: &[ReductionEvent],
    kernel: &Coloring,
) -> Result<Coloring, ReconstructError> {
    const NONE: u32 = u32::MAX;
    let n = base.num_vertices();
    let mut colors: Vec<u32> = (0..n)
        .map(|v| kernel.color(v).map_or(NONE, |c| c as u32))
        .collect();
    let mut next = kernel.num_colors() as u32;
    // seen[c] == stamp marks color c as taken by a neighbor of the current vertex
    let mut seen: Vec<u32> = Vec::new();
    let mut stamp = 0u32;

    for event in events.iter().rev() {
        match event {
            ReductionEvent::Crown1 { members }
            | ReductionEvent::IndepClass { members }
            | ReductionEvent::ExtractedClass { members } => {
                for &w in members {
                    colors[w] = next;
                }
                next += 1;
            }
            ReductionEvent::Crown2 { pair_a, pair_b } => {
                for (a, b) in [pair_a, pair_b] {
                    colors[*a] = next;
                    colors[*b] = next;
                    next += 1;
                }
            }
            ReductionEvent::Dominated { u, v } => {
                if colors[*v] == NONE {
                    return Err(ReconstructError::UncoloredDominator { u: *u, v: *v });
                }
                colors[*u] = colors[*v];
            }
            ReductionEvent::DegreeRemoved { u, .. } => {
                seen.resize(next as usize + 1, 0);
                stamp += 1;
                for &w in base.neighbors(*u) {
                    let c = colors[w];
                    if c != NONE {
                        seen[c as usize] = stamp;
                    }
                }
                let c = (0..next)
                    .find(|&c| seen[c as usize] != stamp)
                    .unwrap_or(next);
                if c == next {
                    next += 1;
                }
                colors[*u] = c;
            }
        }
    }

    if let Some(v) = colors.iter().position(|&c| c == NONE) {
        return Err(ReconstructError::Uncovered(v));
    }
    let coloring = Coloring::from_dense(colors, next as usize);
    if !coloring.is_proper_on(base) {
        return Err(ReconstructError::Improper);
    }
    Ok(coloring)
}
