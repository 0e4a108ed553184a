use std::collections::VecDeque;
use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

use super::trace::{ReductionEvent, ReductionTrace};
use crate::deadline::{Deadline, Ticker};
use crate::graph::Vertex;
use crate::view::SubgraphView;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionConfig {
    /// Domination is only attempted on kernels at most this large.
    pub domination_vertex_limit: usize,
    /// Independent-set reduction only inspects vertices with at most this
    /// many non-neighbors.
    pub indset_non_neighbor_limit: usize,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            domination_vertex_limit: 200,
            indset_non_neighbor_limit: 10,
        }
    }
}

/// Vertices removed per rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounters {
    pub degree: usize,
    pub dominate: usize,
    pub crown1: usize,
    pub crown2: usize,
    pub indset: usize,
}

impl RuleCounters {
    pub fn total(&self) -> usize {
        self.degree + self.dominate + self.crown1 + self.crown2 + self.indset
    }
}

impl AddAssign for RuleCounters {
    fn add_assign(&mut self, o: Self) {
        self.degree += o.degree;
        self.dominate += o.dominate;
        self.crown1 += o.crown1;
        self.crown2 += o.crown2;
        self.indset += o.indset;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixpointSummary {
    pub removed_total: usize,
    pub colors_consumed_delta: usize,
    /// False when the deadline cut the sweep short.
    pub completed: bool,
}

/// Applies the reduction rules to a [`SubgraphView`], logging each event.
///
/// Every pass leaves the view consistent even when the deadline interrupts
/// it, so a cut-short fixpoint is still a valid (partial) reduction.
#[derive(Debug)]
pub struct Reducer {
    config: ReductionConfig,
    ticker: Ticker,
    counters: RuleCounters,
}

impl Reducer {
    pub fn new(config: ReductionConfig, deadline: Deadline) -> Self {
        Reducer {
            config,
            ticker: Ticker::new(deadline),
            counters: RuleCounters::default(),
        }
    }

    pub fn counters(&self) -> RuleCounters {
        self.counters
    }

    pub fn expired(&self) -> bool {
        self.ticker.expired()
    }

    /// Degree rule: cascades away every vertex with live degree below
    /// `local_lb` (clamped to at least 1).
    pub fn reduce_degree(
        &mut self,
        view: &mut SubgraphView<'_>,
        local_lb: usize,
        trace: &mut ReductionTrace,
    ) -> usize {
        let lb = local_lb.max(1);
        let base = view.base();
        let mut queued = vec![false; base.num_vertices()];
        let mut seeds: Vec<Vertex> = view
            .alive()
            .iter()
            .copied()
            .filter(|&u| view.live_degree(u) < lb)
            .collect();
        seeds.sort_unstable();
        for &u in &seeds {
            queued[u] = true;
        }
        let mut queue = VecDeque::from(seeds);
        let mut removed = 0;
        while let Some(u) = queue.pop_front() {
            view.delete_vertex(u);
            trace.push(ReductionEvent::DegreeRemoved { u, lb });
            removed += 1;
            for &w in base.neighbors(u) {
                if !queued[w] && view.is_alive(w) && view.live_degree(w) < lb {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
            if self.ticker.tick() {
                break;
            }
        }
        self.counters.degree += removed;
        removed
    }

    /// Complement crown with a single-vertex crown: `|N̄(u)| ≤ 1`.
    pub fn reduce_crown1(
        &mut self,
        view: &mut SubgraphView<'_>,
        trace: &mut ReductionTrace,
    ) -> usize {
        let mut removed = 0;
        loop {
            // a qualifying vertex needs live degree ≥ alive − 2
            if view.alive_count() > view.base().max_degree() + 2 {
                break;
            }
            let mut changed = false;
            for u in view.alive_sorted() {
                if view.is_alive(u) && view.non_neighbor_count(u) <= 1 {
                    let members = view.complement_closed_neighborhood(u);
                    for &w in &members {
                        view.delete_vertex(w);
                    }
                    removed += members.len();
                    trace.push(ReductionEvent::Crown1 { members });
                    changed = true;
                }
            }
            if !changed || self.ticker.poll() {
                break;
            }
        }
        self.counters.crown1 += removed;
        removed
    }

    /// Complement crown with a two-vertex crown: an edge `{u, v}` whose
    /// endpoints have the same two non-neighbors.
    pub fn reduce_crown2(
        &mut self,
        view: &mut SubgraphView<'_>,
        trace: &mut ReductionTrace,
    ) -> usize {
        let mut removed = 0;
        while view.alive_count() >= 4 && view.alive_count() <= view.base().max_degree() + 3 {
            let candidates: Vec<(Vertex, (Vertex, Vertex))> = view
                .alive_sorted()
                .into_iter()
                .filter(|&u| view.non_neighbor_count(u) == 2)
                .map(|u| {
                    let others: Vec<Vertex> = view
                        .complement_closed_neighborhood(u)
                        .into_iter()
                        .filter(|&w| w != u)
                        .collect();
                    (u, (others[0], others[1]))
                })
                .collect();
            let found = candidates.iter().enumerate().find_map(|(i, &(u, pair))| {
                candidates[i + 1..]
                    .iter()
                    .find(|&&(v, other)| other == pair && view.has_edge(u, v))
                    .map(|&(v, _)| (u, v, pair))
            });
            let Some((u, v, (x, y))) = found else {
                break;
            };
            for w in [u, v, x, y] {
                view.delete_vertex(w);
            }
            trace.push(ReductionEvent::Crown2 {
                pair_a: (u, x),
                pair_b: (v, y),
            });
            removed += 4;
            if self.ticker.poll() {
                break;
            }
        }
        self.counters.crown2 += removed;
        removed
    }

    /// Removes `N̄[u]` as a color class whenever it is independent, for
    /// vertices with few non-neighbors.
    pub fn reduce_indset(
        &mut self,
        view: &mut SubgraphView<'_>,
        trace: &mut ReductionTrace,
    ) -> usize {
        let limit = self.config.indset_non_neighbor_limit;
        let mut removed = 0;
        loop {
            if view.alive_count() > view.base().max_degree() + 1 + limit {
                break;
            }
            let mut changed = false;
            for u in view.alive_sorted() {
                if !view.is_alive(u) || view.non_neighbor_count(u) > limit {
                    continue;
                }
                let members = view.complement_closed_neighborhood(u);
                if view.is_independent(&members) {
                    for &w in &members {
                        view.delete_vertex(w);
                    }
                    removed += members.len();
                    trace.push(ReductionEvent::IndepClass { members });
                    changed = true;
                }
            }
            if !changed || self.ticker.poll() {
                break;
            }
        }
        self.counters.indset += removed;
        removed
    }

    /// Domination rule on small kernels. When `N(u) = N(v)` only the larger
    /// id is removed, so twins never both vanish on each other's account.
    pub fn reduce_dominate(
        &mut self,
        view: &mut SubgraphView<'_>,
        trace: &mut ReductionTrace,
    ) -> usize {
        let k = view.alive_count();
        if k > self.config.domination_vertex_limit || k < 2 {
            return 0;
        }
        let order = view.alive_sorted();
        let words = k.div_ceil(64);
        let mut rows = vec![0u64; k * words];
        for (i, &u) in order.iter().enumerate() {
            for v in view.live_neighbors(u) {
                let j = order.binary_search(&v).unwrap();
                rows[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        let subset = |rows: &[u64], a: usize, b: usize| {
            let (ra, rb) = (&rows[a * words..][..words], &rows[b * words..][..words]);
            ra.iter().zip(rb).all(|(x, y)| x & !y == 0)
        };
        let mut alive = vec![true; k];
        let mut removed = 0;
        loop {
            let mut changed = false;
            for i in 0..k {
                if !alive[i] {
                    continue;
                }
                let dominator = (0..k).find(|&j| {
                    j != i
                        && alive[j]
                        && subset(&rows, i, j)
                        // twins: keep the smaller id
                        && !(i < j && subset(&rows, j, i))
                });
                if let Some(j) = dominator {
                    let (u, v) = (order[i], order[j]);
                    view.delete_vertex(u);
                    trace.push(ReductionEvent::Dominated { u, v });
                    alive[i] = false;
                    for r in 0..k {
                        rows[r * words + i / 64] &= !(1 << (i % 64));
                    }
                    removed += 1;
                    changed = true;
                }
            }
            if !changed || self.ticker.poll() {
                break;
            }
        }
        self.counters.dominate += removed;
        removed
    }

    /// Sweeps degree → crown1 → crown2 → indset → dominate until a full
    /// sweep removes nothing or the deadline passes.
    ///
    /// `local_lb` must be a lower bound on χ of the current alive subgraph.
    /// Every color class committed during the sweep lowers the bound used by
    /// the degree rule by one.
    pub fn run_fixpoint(
        &mut self,
        view: &mut SubgraphView<'_>,
        local_lb: usize,
        trace: &mut ReductionTrace,
    ) -> FixpointSummary {
        let start_alive = view.alive_count();
        let start_colors = trace.colors_consumed();
        let mut completed = true;
        'sweep: loop {
            let before = view.alive_count();
            let lb = local_lb.saturating_sub(trace.colors_consumed() - start_colors);
            self.reduce_degree(view, lb, trace);
            if self.ticker.poll() {
                completed = false;
                break;
            }
            type Pass = fn(&mut Reducer, &mut SubgraphView<'_>, &mut ReductionTrace) -> usize;
            let passes: [Pass; 4] = [
                Reducer::reduce_crown1,
                Reducer::reduce_crown2,
                Reducer::reduce_indset,
                Reducer::reduce_dominate,
            ];
            for pass in passes {
                pass(self, view, trace);
                if self.ticker.poll() {
                    completed = false;
                    break 'sweep;
                }
            }
            if view.alive_count() == before {
                break;
            }
        }
        FixpointSummary {
            removed_total: start_alive - view.alive_count(),
            colors_consumed_delta: trace.colors_consumed() - start_colors,
            completed,
        }
    }
}
