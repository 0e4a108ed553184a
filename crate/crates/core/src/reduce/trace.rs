use serde::Serialize;

use crate::graph::Vertex;

/// One applied reduction (or driver extraction), in application order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ReductionEvent {
    /// `u` had fewer than `lb` live neighbors.
    DegreeRemoved { u: Vertex, lb: usize },
    /// `N(u) ⊆ N(v)`; `u` later takes `v`'s color.
    Dominated { u: Vertex, v: Vertex },
    /// `N̄[u]` with at most two members, removed as one color class.
    Crown1 { members: Vec<Vertex> },
    /// Adjacent `u`, `v` sharing the non-neighbor pair `{x, y}`; removed as
    /// the two classes `{u, x}` and `{v, y}`.
    Crown2 {
        pair_a: (Vertex, Vertex),
        pair_b: (Vertex, Vertex),
    },
    /// Independent `N̄[u]` removed as one class.
    IndepClass { members: Vec<Vertex> },
    /// Independent set taken by the driver when no rule applies.
    ExtractedClass { members: Vec<Vertex> },
}

impl ReductionEvent {
    /// Number of fresh color classes this event commits.
    pub fn classes(&self) -> usize {
        match self {
            ReductionEvent::DegreeRemoved { .. } | ReductionEvent::Dominated { .. } => 0,
            ReductionEvent::Crown2 { .. } => 2,
            ReductionEvent::Crown1 { .. }
            | ReductionEvent::IndepClass { .. }
            | ReductionEvent::ExtractedClass { .. } => 1,
        }
    }

    /// Number of vertices the event removed.
    pub fn removed(&self) -> usize {
        match self {
            ReductionEvent::DegreeRemoved { .. } | ReductionEvent::Dominated { .. } => 1,
            ReductionEvent::Crown2 { .. } => 4,
            ReductionEvent::Crown1 { members }
            | ReductionEvent::IndepClass { members }
            | ReductionEvent::ExtractedClass { members } => members.len(),
        }
    }
}

/// Ordered log of events since the view was last reset.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    events: Vec<ReductionEvent>,
    colors_consumed: usize,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, event: ReductionEvent) {
        self.colors_consumed += event.classes();
        self.events.push(event);
    }

    pub fn events(&self) -> &[ReductionEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Color classes committed by the logged events (`usedcol`).
    pub fn colors_consumed(&self) -> usize {
        self.colors_consumed
    }

    pub fn clear(&mut self) {
        self.events.clear();
        self.colors_consumed = 0;
    }
}
