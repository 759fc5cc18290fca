//! Singleton systems on directed acyclic graphs.

use std::time::Instant;

use super::{decision_for, require_strict_minmax, verify_witness, SingletonView, SolveError, SolveResult, SolveStats};
use crate::model::{Instance, Objective, Ordering, Semantics};

/// Edge indices sorted by the topological position of their tails (ties by index).
fn edges_by_tail(instance: &Instance) -> Result<Vec<usize>, SolveError> {
    let g = instance.graph();
    if !g.is_directed() {
        return Err(SolveError::Precondition("the DAG solvers need a directed graph".into()));
    }
    let topo = g.topological_order().ok_or(SolveError::NotADag)?;
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in topo.iter().enumerate() {
        pos[v] = i;
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| (pos[g.edge(e).0], e));
    Ok(order)
}

/// Optimum `Δout + 1`: activating edges in reverse tail-topological order
/// leaves no temporal path longer than one edge.
pub fn solve_dag_singleton_minmax(instance: &Instance) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let order = edges_by_tail(instance)?;
    require_strict_minmax(instance, "the DAG solver")?;
    let view = SingletonView::new(instance)?;
    let reversed: Vec<usize> = order.into_iter().rev().collect();
    let witness = view.expand(&reversed);
    let g = instance.graph();
    let value = if g.vertex_count() == 0 { 0 } else { g.max_out_degree() + 1 };
    verify_witness(instance, &witness, value)?;
    Ok(SolveResult {
        decision: decision_for(instance, value),
        optimal_value: Some(value),
        witness: Some(witness),
        stats: SolveStats { explored: 1, elapsed: started.elapsed(), non_leaf_edges: None },
    })
}

/// Largest temporal reach any single vertex can attain, with one ordering
/// attaining it for every vertex at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchievableMax {
    /// Maximum static reachability of the graph.
    pub value: usize,
    /// Tail-topological ordering; every static reach set is realised temporally.
    pub witness: Ordering,
}

pub fn solve_dag_singleton_maxmin(instance: &Instance) -> Result<AchievableMax, SolveError> {
    let order = edges_by_tail(instance)?;
    if instance.semantics() != Semantics::Strict || instance.objective() != Objective::MaxMin {
        return Err(SolveError::Precondition(
            "the DAG max-min solver requires strict semantics and the max-min objective".into(),
        ));
    }
    if instance.time_lists().is_some() {
        return Err(SolveError::Precondition("the DAG max-min solver does not support time lists".into()));
    }
    let view = SingletonView::new(instance)?;
    let witness = view.expand(&order);
    let g = instance.graph();
    let value = (0..g.vertex_count()).map(|v| g.static_reach(v).len()).max().unwrap_or(0);
    let report =
        crate::reach::reachability_report(instance, &witness).map_err(|e| SolveError::Internal(e.to_string()))?;
    if report.max_value() != value {
        return Err(SolveError::Internal(format!(
            "topological witness reaches {} but the static maximum is {value}",
            report.max_value()
        )));
    }
    Ok(AchievableMax { value, witness })
}
