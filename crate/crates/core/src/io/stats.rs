//! Machine-readable run reports. The JSON layout is documented in the
//! README; field names are part of the stable interface.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::reduce::RuleCounters;
use crate::solver::{RoundRecord, SolveResult};

pub const RUN_SCHEMA: &str = "recol.run/1";
pub const BATCH_SCHEMA: &str = "recol.batch/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub schema: String,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub ans: usize,
    /// Certified lower bound on χ; absent when every round extracted an
    /// independent set before its bounds settled.
    pub lower_bound: Option<usize>,
    pub proven_optimal: bool,
    pub rounds: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_to_best_secs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_secs: Option<f64>,
    pub trajectory: Vec<RoundStats>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundStats {
    pub round: u64,
    pub lb: usize,
    pub ub: usize,
    pub colors: Option<usize>,
    pub certified_lb: Option<usize>,
    pub kernel_size: usize,
    pub extractions: usize,
    pub colorer: String,
    pub completed: bool,
    pub removed: RuleCounters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_secs: Option<f64>,
}

impl RoundStats {
    fn from_record(r: &RoundRecord, timing: bool) -> Self {
        RoundStats {
            round: r.round,
            lb: r.lb,
            ub: r.ub,
            colors: r.colors,
            certified_lb: r.certified_lb,
            kernel_size: r.kernel_size,
            extractions: r.extractions,
            colorer: r.colorer.name().to_owned(),
            completed: r.completed,
            removed: r.removed,
            elapsed_secs: timing.then_some(r.elapsed.as_secs_f64()),
        }
    }
}

impl RunStats {
    /// Wall-clock fields are included only when `timing` is set; without
    /// them the document depends only on the instance and configuration.
    pub fn from_result(instance: &str, graph: &Graph, result: &SolveResult, timing: bool) -> Self {
        RunStats {
            schema: RUN_SCHEMA.to_owned(),
            instance: instance.to_owned(),
            n: graph.num_vertices(),
            m: graph.num_edges(),
            seed: result.seed,
            ans: result.ans,
            lower_bound: result.lower_bound,
            proven_optimal: result.proven_optimal,
            rounds: result.rounds,
            time_to_best_secs: timing.then_some(result.time_to_best.as_secs_f64()),
            elapsed_secs: timing.then_some(result.elapsed.as_secs_f64()),
            trajectory: result
                .trajectory
                .iter()
                .map(|r| RoundStats::from_record(r, timing))
                .collect(),
        }
    }
}

/// Min / average / number of runs hitting the min, over a set of seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub runs: usize,
    pub min: usize,
    pub avg: f64,
    pub hit: usize,
}

impl BatchSummary {
    pub fn from_answers(instance: &str, graph: &Graph, answers: &[usize]) -> Self {
        assert!(!answers.is_empty(), "batch without runs");
        let min = *answers.iter().min().unwrap();
        BatchSummary {
            instance: instance.to_owned(),
            n: graph.num_vertices(),
            m: graph.num_edges(),
            runs: answers.len(),
            min,
            avg: answers.iter().sum::<usize>() as f64 / answers.len() as f64,
            hit: answers.iter().filter(|&&a| a == min).count(),
        }
    }

    /// Tab-separated `instance n m min avg hit` row.
    pub fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{:.1}\t{}",
            self.instance, self.n, self.m, self.min, self.avg, self.hit
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchStats {
    pub schema: String,
    pub summary: BatchSummary,
    pub runs: Vec<RunStats>,
}

impl BatchStats {
    pub fn new(summary: BatchSummary, runs: Vec<RunStats>) -> Self {
        BatchStats {
            schema: BATCH_SCHEMA.to_owned(),
            summary,
            runs,
        }
    }
}

/// Writes one pretty-printed JSON document followed by a newline.
pub fn emit_stats<T: Serialize, W: Write>(stats: &T, mut sink: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut sink, stats)?;
    writeln!(sink)?;
    sink.flush()
}
