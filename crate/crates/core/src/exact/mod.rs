//! Exact solvers: exhaustive search over orderings plus the polynomial and
//! FPT algorithms for singleton systems on DAGs and trees.

mod brute;
mod dag;
mod tree_dp;
mod tree_vc;

use std::time::Duration;

use thiserror::Error;

use crate::model::{Instance, Objective, Ordering, Semantics};
use crate::reach::{meets_threshold, reachability_report};

pub use brute::{solve_brute_force, BruteForceConfig, DEFAULT_BUDGET};
pub use dag::{solve_dag_singleton_maxmin, solve_dag_singleton_minmax, AchievableMax};
pub use tree_dp::{solve_tree_dp, solve_tree_dp_optimise};
pub use tree_vc::solve_tree_vc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Stop at the first ordering meeting the threshold.
    Decision,
    /// Find the best extreme value.
    Optimise,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Complete orderings (or DP joint states) examined.
    pub explored: u64,
    pub elapsed: Duration,
    /// Tree solvers: number of edges with both endpoints of degree at least two.
    pub non_leaf_edges: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    pub optimal_value: Option<usize>,
    pub witness: Option<Ordering>,
    pub stats: SolveStats,
}

impl SolveResult {
    /// Everything except the wall-clock time, for determinism checks.
    pub fn same_outcome(&self, other: &SolveResult) -> bool {
        self.decision == other.decision
            && self.optimal_value == other.optimal_value
            && self.witness == other.witness
            && self.stats.explored == other.stats.explored
            && self.stats.non_leaf_edges == other.stats.non_leaf_edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not-a-DAG: the graph contains a directed cycle")]
    NotADag,
    #[error("not-a-tree: the graph is not an undirected tree")]
    NotATree,
    #[error("non-singleton: every class must contain exactly one edge")]
    NotSingleton,
    #[error("budget-exceeded: explored {explored} orderings (budget {budget}) without finishing")]
    BudgetExceeded { budget: u64, explored: u64, best: Option<(usize, Ordering)> },
    #[error("internal check failed: {0}")]
    Internal(String),
}

/// Per-edge class lists for systems whose classes are single edges. Identical
/// repeated singleton classes are collapsed onto one edge and expanded back to
/// consecutive timesteps when an edge order is turned into an ordering.
#[derive(Debug, Clone)]
pub(crate) struct SingletonView {
    edge_classes: Vec<Vec<usize>>,
}

impl SingletonView {
    pub(crate) fn new(instance: &Instance) -> Result<Self, SolveError> {
        let mut edge_classes = vec![Vec::new(); instance.graph().edge_count()];
        for (c, class) in instance.classes().classes().iter().enumerate() {
            match class.as_slice() {
                [e] => edge_classes[*e].push(c),
                _ => return Err(SolveError::NotSingleton),
            }
        }
        Ok(Self { edge_classes })
    }

    /// Ordering that activates the classes of `edge_order[0]` first, then those
    /// of `edge_order[1]`, and so on.
    pub(crate) fn expand(&self, edge_order: &[usize]) -> Ordering {
        let schedule: Vec<usize> = edge_order.iter().flat_map(|&e| self.edge_classes[e].iter().copied()).collect();
        Ordering::from_schedule(&schedule)
    }
}

pub(crate) fn require_strict_minmax(instance: &Instance, solver: &str) -> Result<(), SolveError> {
    if instance.semantics() != Semantics::Strict {
        return Err(SolveError::Precondition(format!("{solver} requires strict semantics")));
    }
    if instance.objective() != Objective::MinMax {
        return Err(SolveError::Precondition(format!("{solver} requires the min-max objective")));
    }
    if instance.time_lists().is_some() {
        return Err(SolveError::Precondition(format!("{solver} does not support time lists")));
    }
    Ok(())
}

/// Re-checks a witness against the instance before it leaves a solver.
pub(crate) fn verify_witness(instance: &Instance, witness: &Ordering, expected: usize) -> Result<(), SolveError> {
    let report = reachability_report(instance, witness).map_err(|e| SolveError::Internal(e.to_string()))?;
    if report.extreme_value != expected {
        return Err(SolveError::Internal(format!(
            "witness evaluates to {} but the solver claimed {expected}",
            report.extreme_value
        )));
    }
    Ok(())
}

pub(crate) fn decision_for(instance: &Instance, value: usize) -> bool {
    meets_threshold(instance.objective(), value, instance.k())
}
