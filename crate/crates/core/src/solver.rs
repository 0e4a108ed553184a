//! The anytime driver.
//!
//! Each round starts from the full graph and alternates three moves until
//! the round's lower bound meets its upper bound: bound the kernel (clique
//! growth below, greedy coloring above), reduce it to a fixpoint, and, when
//! neither the kernel nor the bounds changed, peel off an independent set as
//! a new color class. The best kernel coloring of the round is lifted back
//! through the reduction trace, and the smallest verified coloring over all
//! rounds is kept.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{degeneracy_color, dsatur_color, find_clique, BoundState, CliqueSearchParams};
use crate::coloring::Coloring;
use crate::deadline::Deadline;
use crate::extract::find_independent_set;
use crate::graph::Graph;
use crate::oracle::verify_coloring;
use crate::reduce::{
    reconstruct, ReconstructError, Reducer, ReductionConfig, ReductionEvent, ReductionTrace,
    RuleCounters,
};
use crate::view::SubgraphView;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub time_limit: Duration,
    pub seed: u64,
    pub clique: CliqueSearchParams,
    pub reduction: ReductionConfig,
    /// Stop after this many rounds even if time remains.
    pub max_rounds: Option<u64>,
    /// Stop once a round certifies that `ans` is optimal.
    pub stop_when_optimal: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            time_limit: Duration::from_secs(60),
            seed: 0,
            clique: CliqueSearchParams::default(),
            reduction: ReductionConfig::default(),
            max_rounds: None,
            stop_when_optimal: true,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolveError> {
        if self.time_limit.is_zero() {
            return Err(SolveError::InvalidConfig(
                "time limit must be positive".into(),
            ));
        }
        let eps = self.clique.seed_fraction;
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(SolveError::InvalidConfig(format!(
                "seed fraction {eps} not in (0, 1]"
            )));
        }
        if self.clique.sample_size == 0 {
            return Err(SolveError::InvalidConfig(
                "sample size must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("internal invariant violated during reconstruction: {0}")]
    Reconstruct(#[from] ReconstructError),
    #[error("stored witness is not a proper coloring with {0} colors")]
    InvalidWitness(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperBoundMethod {
    Degeneracy,
    Dsatur,
}

impl UpperBoundMethod {
    pub fn name(self) -> &'static str {
        match self {
            UpperBoundMethod::Degeneracy => "degeneracy",
            UpperBoundMethod::Dsatur => "dsatur",
        }
    }
}

/// What one round did.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundRecord {
    pub round: u64,
    /// Final round lower bound. Once an independent set has been extracted
    /// this only bounds the round's own trajectory.
    pub lb: usize,
    /// Final round upper-bound estimate (before reconstruction).
    pub ub: usize,
    /// Colors of the reconstructed coloring, if the round produced one.
    pub colors: Option<usize>,
    /// Lower bound on χ of the input graph established before the first
    /// extraction of the round.
    pub certified_lb: Option<usize>,
    pub kernel_size: usize,
    pub extractions: usize,
    pub removed: RuleCounters,
    pub colorer: UpperBoundMethod,
    /// False when the deadline interrupted the round.
    pub completed: bool,
    /// Time since the solve started, at the end of this round.
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub ans: usize,
    pub best_coloring: Coloring,
    pub rounds: u64,
    pub trajectory: Vec<RoundRecord>,
    pub seed: u64,
    /// Best certified lower bound on χ, if any round produced one.
    pub lower_bound: Option<usize>,
    pub proven_optimal: bool,
    pub time_to_best: Duration,
    pub elapsed: Duration,
}

/// Runs the anytime loop on `base` until the time limit, the round cap, or
/// (optionally) a certificate of optimality.
pub fn solve(base: &Graph, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    config.validate()?;
    let n = base.num_vertices();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let start = Instant::now();
    let deadline = start
        .checked_add(config.time_limit)
        .map_or(Deadline::NONE, Deadline::at);

    if base.num_edges() == 0 {
        return Ok(SolveResult {
            ans: 1,
            best_coloring: Coloring::from_assignment(&vec![Some(0); n]),
            rounds: 0,
            trajectory: Vec::new(),
            seed: config.seed,
            lower_bound: Some(1),
            proven_optimal: true,
            time_to_best: start.elapsed(),
            elapsed: start.elapsed(),
        });
    }

    let mut ans = n;
    let mut best = Coloring::singletons(n);
    let mut time_to_best = Duration::ZERO;
    let mut lower_bound: Option<usize> = None;
    let mut trajectory = Vec::new();
    let mut view = SubgraphView::new(base);
    let mut round = 0u64;

    loop {
        if deadline.expired() || config.max_rounds.is_some_and(|cap| round >= cap) {
            break;
        }
        if config.stop_when_optimal && lower_bound.is_some_and(|lb| lb >= ans) {
            break;
        }
        round += 1;
        let (mut record, coloring) = run_round(&mut view, config, round, deadline)?;
        record.elapsed = start.elapsed();
        if let Some(c) = coloring {
            if c.num_colors() < ans {
                ans = c.num_colors();
                best = c;
                time_to_best = record.elapsed;
            }
        }
        lower_bound = lower_bound.max(record.certified_lb);
        trajectory.push(record);
    }

    Ok(SolveResult {
        ans,
        best_coloring: best,
        rounds: round,
        trajectory,
        seed: config.seed,
        lower_bound,
        proven_optimal: lower_bound.is_some_and(|lb| lb >= ans),
        time_to_best,
        elapsed: start.elapsed(),
    })
}

fn run_round(
    view: &mut SubgraphView<'_>,
    config: &SolverConfig,
    round: u64,
    deadline: Deadline,
) -> Result<(RoundRecord, Option<Coloring>), SolveError> {
    let base = view.base();
    let n = base.num_vertices();
    view.reset();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(round);
    let colorer = if round == 1 {
        UpperBoundMethod::Degeneracy
    } else {
        UpperBoundMethod::Dsatur
    };

    let mut trace = ReductionTrace::new();
    let mut reducer = Reducer::new(config.reduction, deadline);
    let mut bounds = BoundState::new(n);
    // kernel coloring behind `bounds.ub`, with the trace length it belongs to
    let mut best_kernel: Option<(usize, Coloring)> = None;
    let mut extractions = 0;
    let mut certified_lb = None;
    let mut completed = false;

    loop {
        if bounds.lb >= bounds.ub {
            completed = true;
            break;
        }
        if deadline.expired() {
            break;
        }
        let usedcol = trace.colors_consumed();
        if view.is_empty() {
            if usedcol < bounds.ub {
                bounds.ub = usedcol;
                best_kernel = Some((trace.len(), Coloring::uncolored(n)));
            }
            completed = true;
            break;
        }

        let clique = find_clique(view, bounds.lb, usedcol, &config.clique, &mut rng, deadline);
        let upper = match colorer {
            UpperBoundMethod::Degeneracy => degeneracy_color(view, bounds.ub, usedcol, deadline),
            UpperBoundMethod::Dsatur => dsatur_color(view, bounds.ub, usedcol, &mut rng, deadline),
        };
        if let Some(coloring) = upper.coloring {
            best_kernel = Some((trace.len(), coloring));
        }
        let local_lb = clique.lb.saturating_sub(usedcol);
        let summary = reducer.run_fixpoint(view, local_lb, &mut trace);

        if summary.removed_total > 0 || clique.lb > bounds.lb || upper.ub < bounds.ub {
            bounds.lb = clique.lb;
            bounds.ub = upper.ub;
        } else {
            if extractions == 0 {
                certified_lb = Some(bounds.lb);
            }
            let members = find_independent_set(view, round, &mut rng);
            for &v in &members {
                view.delete_vertex(v);
            }
            trace.push(ReductionEvent::ExtractedClass { members });
            extractions += 1;
        }
        bounds.usedcol = trace.colors_consumed();
    }
    if extractions == 0 {
        certified_lb = Some(bounds.lb);
    }

    let coloring = match best_kernel {
        Some((len, kernel)) => Some(reconstruct(base, &trace.events()[..len], &kernel)?),
        None => None,
    };
    let record = RoundRecord {
        round,
        lb: bounds.lb,
        ub: bounds.ub,
        colors: coloring.as_ref().map(Coloring::num_colors),
        certified_lb,
        kernel_size: view.alive_count(),
        extractions,
        removed: reducer.counters(),
        colorer,
        completed,
        elapsed: Duration::ZERO,
    };
    Ok((record, coloring))
}

/// Returns the stored witness after re-checking it against `base`.
pub fn best_coloring_certificate<'r>(
    base: &Graph,
    result: &'r SolveResult,
) -> Result<&'r Coloring, SolveError> {
    let c = &result.best_coloring;
    if verify_coloring(base, c) && c.num_colors() == result.ans {
        Ok(c)
    } else {
        Err(SolveError::InvalidWitness(result.ans))
    }
}
