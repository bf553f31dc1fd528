//! Batch fuzzing: random shapes through the theorem catalog and the oracle.
//!
//! Trial `i` draws everything from `derive_seed(master, i)`, so results do
//! not depend on scheduling. With the `parallel` feature the trials run on
//! the rayon pool; without it, or with [`Execution::Sequential`], they run
//! in order on the calling thread. Either way the outcomes come back in
//! trial order and are identical.

use serde::Serialize;

use crate::kernel::TriangleShape;
use crate::oracle::{cross_validate, OracleReport, Placement, DEFAULT_REL_TOL};
use crate::sampling::{derive_seed, random_shape, rng_from_seed};
use crate::theorems::{run_all, TheoremReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzConfig {
    pub count: usize,
    pub seed: u64,
    pub rel_tol: f64,
    /// Random point configurations per placement.
    pub queries: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { count: 100, seed: 0, rel_tol: DEFAULT_REL_TOL, queries: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub index: usize,
    pub trial_seed: u64,
    pub shape: TriangleShape,
    pub theorems_passed: usize,
    pub theorems_total: usize,
    /// Only the reports that failed.
    pub failed_theorems: Vec<TheoremReport>,
    pub oracle: OracleReport,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        self.failed_theorems.is_empty() && self.oracle.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub count: usize,
    pub passed: usize,
    pub seed: u64,
    pub comparisons: usize,
    pub max_rel_error: f64,
    pub first_failure: Option<TrialOutcome>,
}

impl FuzzSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.count
    }
}

/// Shape for trial `index` of a run seeded with `master`.
pub fn trial_shape(master: u64, index: usize) -> TriangleShape {
    random_shape(&mut rng_from_seed(derive_seed(master, index as u64)))
}

pub fn run_trial(cfg: &FuzzConfig, index: usize) -> TrialOutcome {
    let trial_seed = derive_seed(cfg.seed, index as u64);
    let shape = random_shape(&mut rng_from_seed(trial_seed));
    let reports = run_all(&shape, derive_seed(trial_seed, 1));
    let theorems_total = reports.len();
    let failed_theorems: Vec<_> = reports.into_iter().filter(|r| !r.passed).collect();

    let mut oracle = cross_validate(&shape, Placement::Canonical, derive_seed(trial_seed, 2), cfg.queries, cfg.rel_tol);
    oracle.merge(cross_validate(
        &shape,
        Placement::Random(derive_seed(trial_seed, 3)),
        derive_seed(trial_seed, 4),
        cfg.queries,
        cfg.rel_tol,
    ));

    TrialOutcome {
        index,
        trial_seed,
        shape,
        theorems_passed: theorems_total - failed_theorems.len(),
        theorems_total,
        failed_theorems,
        oracle,
    }
}

/// `f(0), …, f(n − 1)` in order, on the rayon pool when available.
pub fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

pub fn run_trials(cfg: &FuzzConfig, exec: Execution) -> Vec<TrialOutcome> {
    map_indexed(cfg.count, exec, |i| run_trial(cfg, i))
}

pub fn run_fuzz(cfg: &FuzzConfig, exec: Execution) -> FuzzSummary {
    summarize(cfg, run_trials(cfg, exec))
}

fn summarize(cfg: &FuzzConfig, outcomes: Vec<TrialOutcome>) -> FuzzSummary {
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let comparisons = outcomes.iter().map(|o| o.oracle.comparisons).sum();
    let max_rel_error = outcomes.iter().map(|o| o.oracle.max_rel_error).fold(0.0, f64::max);
    let first_failure = outcomes.into_iter().find(|o| !o.passed());
    FuzzSummary { count: cfg.count, passed, seed: cfg.seed, comparisons, max_rel_error, first_failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let cfg = FuzzConfig { count: 24, seed: 99, ..FuzzConfig::default() };
        let seq = run_trials(&cfg, Execution::Sequential);
        let par = run_trials(&cfg, Execution::Parallel);
        assert_eq!(seq, par);
        assert!(seq.iter().all(TrialOutcome::passed));
    }

    #[test]
    fn single_trial_reproduces_shape() {
        let cfg = FuzzConfig { count: 1, seed: 7, ..FuzzConfig::default() };
        let a = run_fuzz(&cfg, Execution::Sequential);
        assert!(a.all_passed());
        assert_eq!(run_trial(&cfg, 0).shape, trial_shape(7, 0));
    }

    #[test]
    fn map_indexed_keeps_order() {
        let v = map_indexed(100, Execution::Parallel, |i| i * i);
        assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }
}
