//! Trees: leaf edges first, then every permutation of the non-leaf edges.

use std::time::Instant;

use super::{
    decision_for, require_strict_minmax, verify_witness, SingletonView, SolveError, SolveMode, SolveResult, SolveStats,
};
use crate::model::{Instance, Objective};
use crate::reach::{timeline, ClassArcs, Scratch};

pub(super) fn tree_view(instance: &Instance, solver: &str) -> Result<SingletonView, SolveError> {
    let g = instance.graph();
    if g.is_directed() || !g.is_tree() {
        return Err(SolveError::NotATree);
    }
    require_strict_minmax(instance, solver)?;
    SingletonView::new(instance)
}

/// In-place lexicographic successor; false once `xs` is the last permutation.
pub(super) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|x| *x > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub fn solve_tree_vc(instance: &Instance, mode: SolveMode) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let view = tree_view(instance, "the tree solver")?;
    let g = instance.graph();
    let (leaf, mut inner): (Vec<usize>, Vec<usize>) = (0..g.edge_count()).partition(|&e| g.is_leaf_edge(e));
    let non_leaf = inner.len();
    let k = instance.k() as usize;

    if mode == SolveMode::Decision && k <= g.max_degree() {
        return Ok(SolveResult {
            decision: false,
            optimal_value: None,
            witness: None,
            stats: SolveStats { explored: 0, elapsed: started.elapsed(), non_leaf_edges: Some(non_leaf) },
        });
    }

    let arcs = ClassArcs::new(instance);
    let mut scratch = Scratch::new(g.vertex_count());
    let mut explored = 0;
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut order = leaf.clone();
    loop {
        explored += 1;
        order.truncate(leaf.len());
        order.extend_from_slice(&inner);
        let tl = timeline(&view.expand(&order));
        let cutoff = match (&best, mode) {
            (_, SolveMode::Decision) => k,
            (None, _) => usize::MAX,
            (Some((b, _)), _) => b.saturating_sub(1),
        };
        if let Some(value) = arcs.extreme_with_cutoff(&tl, Objective::MinMax, cutoff, &mut scratch) {
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, order.clone()));
            }
            if mode == SolveMode::Decision {
                break;
            }
        }
        if !next_permutation(&mut inner) {
            break;
        }
    }

    let stats = SolveStats { explored, elapsed: started.elapsed(), non_leaf_edges: Some(non_leaf) };
    let Some((value, order)) = best else {
        return Ok(SolveResult { decision: false, optimal_value: None, witness: None, stats });
    };
    let witness = view.expand(&order);
    verify_witness(instance, &witness, value)?;
    Ok(SolveResult {
        decision: decision_for(instance, value),
        optimal_value: (mode == SolveMode::Optimise).then_some(value),
        witness: Some(witness),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn star_has_one_candidate() {
        let g = Graph::undirected(6, (1..6).map(|i| (0, i)).collect()).unwrap();
        let r = solve_tree_vc(&Instance::singleton(g, 6).unwrap(), SolveMode::Optimise).unwrap();
        assert_eq!(r.optimal_value, Some(6));
        assert_eq!(r.stats.explored, 1);
        assert_eq!(r.stats.non_leaf_edges, Some(0));
    }

    #[test]
    fn p5_two_candidates() {
        let g = Graph::undirected(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let r = solve_tree_vc(&Instance::singleton(g, 4).unwrap(), SolveMode::Optimise).unwrap();
        assert_eq!(r.optimal_value, Some(4));
        assert_eq!(r.stats.explored, 2);
        assert!(r.decision);
    }

    #[test]
    fn cycle_is_not_a_tree() {
        let g = Graph::undirected(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(solve_tree_vc(&Instance::singleton(g, 3).unwrap(), SolveMode::Decision), Err(SolveError::NotATree));
    }

    #[test]
    fn permutations_in_order() {
        let mut xs = vec![0, 1, 2];
        let mut seen = vec![xs.clone()];
        while next_permutation(&mut xs) {
            seen.push(xs.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }
}
