//! Exhaustive search over injective, list-respecting time assignments.
//!
//! Assignments are enumerated in lexicographic order of the `times` vector.
//! The search space is split into chunks by the timestep of class 0; chunks
//! may run in parallel, and their results are merged so that the output
//! (value, witness, explored count) matches a sequential run exactly.

use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::time::Instant;

use super::{decision_for, verify_witness, SolveError, SolveMode, SolveResult, SolveStats};
use crate::model::{Instance, Objective, Ordering};
use crate::parallel::{map_indices, Parallelism};
use crate::reach::{ClassArcs, Scratch};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Maximum number of complete assignments to evaluate.
    pub budget: u64,
    pub parallelism: Parallelism,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, parallelism: Parallelism::default() }
    }
}

struct Search<'a> {
    arcs: ClassArcs,
    objective: Objective,
    mode: SolveMode,
    k: usize,
    // permitted ranks per class, ascending
    domains: Vec<Vec<usize>>,
    rank_count: usize,
    rank_times: Vec<u32>,
    instance: &'a Instance,
}

#[derive(Debug, Default)]
struct ChunkOutcome {
    explored: u64,
    best: Option<(usize, Vec<usize>)>,
    hit: bool,
}

struct Shared {
    first_hit: AtomicUsize,
    global_best: AtomicUsize,
}

struct ChunkState<'s> {
    chunk: usize,
    limit: u64,
    ranks: Vec<usize>,
    used: Vec<bool>,
    slots: Vec<usize>,
    scratch: Scratch,
    out: ChunkOutcome,
    shared: &'s Shared,
    timeline: Vec<(u32, usize)>,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(instance: &'a Instance, mode: SolveMode) -> Self {
        let h = instance.classes().len();
        let (domains, rank_times) = match instance.time_lists() {
            None => ((0..h).map(|_| (0..h).collect()).collect(), (1..=h as u32).collect()),
            Some(lists) => {
                let mut all: Vec<u32> = lists.lists().iter().flatten().copied().collect();
                all.sort_unstable();
                all.dedup();
                let domains =
                    lists.lists().iter().map(|l| l.iter().map(|t| all.binary_search(t).unwrap()).collect()).collect();
                (domains, all)
            }
        };
        Self {
            arcs: ClassArcs::new(instance),
            objective: instance.objective(),
            mode,
            k: instance.k() as usize,
            domains,
            rank_count: rank_times.len(),
            rank_times,
            instance,
        }
    }

    fn to_ordering(&self, ranks: &[usize]) -> Ordering {
        Ordering::new(ranks.iter().map(|&r| self.rank_times[r]).collect())
    }

    fn h(&self) -> usize {
        self.domains.len()
    }

    /// Chunk keys: the permitted ranks of class 0 (a single empty chunk when h = 0).
    fn chunks(&self) -> Vec<usize> {
        if self.h() == 0 {
            vec![NONE]
        } else {
            self.domains[0].clone()
        }
    }

    /// Number of complete assignments in a chunk, capped at `cap + 1`.
    fn count_chunk(&self, first: usize, cap: u64) -> u64 {
        let h = self.h();
        if h == 0 {
            return 1;
        }
        if self.instance.time_lists().is_none() {
            let mut total: u64 = 1;
            for i in 1..h as u64 {
                total = total.saturating_mul(i);
                if total > cap {
                    return cap + 1;
                }
            }
            return total;
        }
        let mut used = vec![false; self.rank_count];
        used[first] = true;
        let mut count = 0;
        self.count_rec(1, &mut used, cap, &mut count);
        count
    }

    fn count_rec(&self, class: usize, used: &mut [bool], cap: u64, count: &mut u64) {
        if *count > cap {
            return;
        }
        if class == self.h() {
            *count += 1;
            return;
        }
        for &r in &self.domains[class] {
            if !used[r] {
                used[r] = true;
                self.count_rec(class + 1, used, cap, count);
                used[r] = false;
                if *count > cap {
                    return;
                }
            }
        }
    }

    fn run_chunk(&self, chunk: usize, first: usize, limit: u64, shared: &Shared) -> ChunkOutcome {
        let n = self.arcs.vertex_count();
        let mut st = ChunkState {
            chunk,
            limit,
            ranks: vec![NONE; self.h()],
            used: vec![false; self.rank_count],
            slots: vec![NONE; self.rank_count],
            scratch: Scratch::new(n),
            out: ChunkOutcome::default(),
            shared,
            timeline: Vec::with_capacity(self.h()),
        };
        if limit == 0 {
            return st.out;
        }
        if first == NONE {
            self.leaf(&mut st);
        } else {
            st.ranks[0] = first;
            st.used[first] = true;
            st.slots[first] = 0;
            self.descend(1, &mut st);
        }
        st.out
    }

    /// Returns false once the chunk should stop.
    fn descend(&self, class: usize, st: &mut ChunkState<'_>) -> bool {
        if class == self.h() {
            return self.leaf(st);
        }
        for &r in &self.domains[class] {
            if st.used[r] {
                continue;
            }
            st.used[r] = true;
            st.ranks[class] = r;
            st.slots[r] = class;
            let go_on = self.descend(class + 1, st);
            st.used[r] = false;
            st.slots[r] = NONE;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn leaf(&self, st: &mut ChunkState<'_>) -> bool {
        st.out.explored += 1;
        st.timeline.clear();
        st.timeline.extend(st.slots.iter().enumerate().filter(|(_, &c)| c != NONE).map(|(r, &c)| (r as u32 + 1, c)));
        match self.mode {
            SolveMode::Decision => {
                if self.arcs.extreme_with_cutoff(&st.timeline, self.objective, self.k, &mut st.scratch).is_some() {
                    st.out.hit = true;
                    st.out.best = Some((0, st.ranks.clone()));
                    st.shared.first_hit.fetch_min(st.chunk, AtomicOrdering::Relaxed);
                    return false;
                }
                if st.shared.first_hit.load(AtomicOrdering::Relaxed) < st.chunk {
                    return false;
                }
            }
            SolveMode::Optimise => {
                let global = st.shared.global_best.load(AtomicOrdering::Relaxed);
                let local = st.out.best.as_ref().map(|(v, _)| *v);
                let cutoff = match self.objective {
                    Objective::MinMax => local.map_or(global, |b| b.saturating_sub(1).min(global)),
                    Objective::MaxMin => local.map_or(global, |b| (b + 1).max(global)),
                };
                if let Some(value) =
                    self.arcs.extreme_with_cutoff(&st.timeline, self.objective, cutoff, &mut st.scratch)
                {
                    let better = match (self.objective, local) {
                        (_, None) => true,
                        (Objective::MinMax, Some(b)) => value < b,
                        (Objective::MaxMin, Some(b)) => value > b,
                    };
                    if better {
                        st.out.best = Some((value, st.ranks.clone()));
                        match self.objective {
                            Objective::MinMax => st.shared.global_best.fetch_min(value, AtomicOrdering::Relaxed),
                            Objective::MaxMin => st.shared.global_best.fetch_max(value, AtomicOrdering::Relaxed),
                        };
                    }
                }
            }
        }
        st.out.explored < st.limit
    }
}

/// Exact answer by exhaustive enumeration; works for every objective,
/// semantics and optional time lists. In optimisation mode the witness is the
/// lexicographically smallest `times` vector among the optima.
pub fn solve_brute_force(
    instance: &Instance,
    mode: SolveMode,
    config: &BruteForceConfig,
) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let search = Search::new(instance, mode);
    let chunks = search.chunks();

    // chunk limits in lexicographic order, so truncation by the budget is deterministic
    let mut limits = Vec::with_capacity(chunks.len());
    let mut remaining = config.budget;
    let mut truncated = false;
    for &first in &chunks {
        let count = search.count_chunk(first, remaining);
        if count > remaining {
            truncated = true;
            limits.push(remaining);
            remaining = 0;
        } else {
            limits.push(count);
            remaining -= count;
        }
    }

    let shared = Shared {
        first_hit: AtomicUsize::new(usize::MAX),
        global_best: AtomicUsize::new(match instance.objective() {
            Objective::MinMax => usize::MAX,
            Objective::MaxMin => 0,
        }),
    };
    let outcomes: Vec<ChunkOutcome> = if config.parallelism.is_parallel() {
        map_indices(config.parallelism, chunks.len(), |c| search.run_chunk(c, chunks[c], limits[c], &shared))
    } else {
        let mut outs = Vec::with_capacity(chunks.len());
        for (c, &first) in chunks.iter().enumerate() {
            let out = search.run_chunk(c, first, limits[c], &shared);
            let hit = out.hit;
            outs.push(out);
            if hit {
                break;
            }
        }
        outs
    };

    let mut explored = 0;
    let mut chosen: Option<(usize, Vec<usize>)> = None;
    for out in outcomes {
        explored += out.explored;
        if mode == SolveMode::Decision {
            if out.hit {
                chosen = out.best;
                break;
            }
            continue;
        }
        if let Some((value, ranks)) = out.best {
            let better = match (&chosen, instance.objective()) {
                (None, _) => true,
                (Some((b, _)), Objective::MinMax) => value < *b,
                (Some((b, _)), Objective::MaxMin) => value > *b,
            };
            if better {
                chosen = Some((value, ranks));
            }
        }
    }

    let stats = SolveStats { explored, elapsed: started.elapsed(), non_leaf_edges: None };
    match mode {
        SolveMode::Decision => match chosen {
            Some((_, ranks)) => {
                let witness = search.to_ordering(&ranks);
                let value = crate::reach::reachability_report(instance, &witness)
                    .map_err(|e| SolveError::Internal(e.to_string()))?
                    .extreme_value;
                if !decision_for(instance, value) {
                    return Err(SolveError::Internal("decision witness fails the threshold".into()));
                }
                Ok(SolveResult { decision: true, optimal_value: None, witness: Some(witness), stats })
            }
            None if truncated => Err(SolveError::BudgetExceeded { budget: config.budget, explored, best: None }),
            None => Ok(SolveResult { decision: false, optimal_value: None, witness: None, stats }),
        },
        SolveMode::Optimise => {
            let best = chosen.map(|(v, ranks)| (v, search.to_ordering(&ranks)));
            if truncated {
                return Err(SolveError::BudgetExceeded { budget: config.budget, explored, best });
            }
            match best {
                Some((value, witness)) => {
                    verify_witness(instance, &witness, value)?;
                    Ok(SolveResult {
                        decision: decision_for(instance, value),
                        optimal_value: Some(value),
                        witness: Some(witness),
                        stats,
                    })
                }
                // only reachable when no list-respecting assignment exists
                None => Ok(SolveResult { decision: false, optimal_value: None, witness: None, stats }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::model::{EdgeClassSystem, Semantics, TimeLists};

    fn path(n: usize) -> Graph {
        Graph::undirected(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    #[test]
    fn p5_optimum_is_four() {
        let inst = Instance::singleton(path(5), 4).unwrap();
        let r = solve_brute_force(&inst, SolveMode::Optimise, &BruteForceConfig::default()).unwrap();
        assert_eq!(r.optimal_value, Some(4));
        assert!(r.decision);
        assert_eq!(r.stats.explored, 24);
    }

    #[test]
    fn triangle_optimum_is_three() {
        let k3 = Graph::undirected(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::singleton(k3, 3).unwrap();
        let r = solve_brute_force(&inst, SolveMode::Optimise, &BruteForceConfig::default()).unwrap();
        assert_eq!(r.optimal_value, Some(3));
        // lexicographically first optimum is the identity
        assert_eq!(r.witness, Some(Ordering::identity(3)));
    }

    #[test]
    fn decision_stops_at_first_witness() {
        let inst = Instance::singleton(path(5), 4).unwrap();
        let r = solve_brute_force(&inst, SolveMode::Decision, &BruteForceConfig::default()).unwrap();
        assert!(r.decision);
        let w = r.witness.unwrap();
        assert!(crate::reach::decide(&inst, &w).unwrap());
        let no = solve_brute_force(&inst.with_k(3), SolveMode::Decision, &BruteForceConfig::default()).unwrap();
        assert!(!no.decision);
        assert!(no.witness.is_none());
        assert_eq!(no.stats.explored, 24);
    }

    #[test]
    fn budget_exceeded_reports_partial_best() {
        let inst = Instance::singleton(path(6), 3).unwrap();
        let cfg = BruteForceConfig { budget: 10, parallelism: Parallelism::Sequential };
        match solve_brute_force(&inst, SolveMode::Optimise, &cfg) {
            Err(SolveError::BudgetExceeded { budget: 10, explored: 10, best: Some(_) }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn list_variant_respects_lists() {
        let inst = Instance::new(
            path(3),
            EdgeClassSystem::singletons(2),
            Objective::MinMax,
            Semantics::Strict,
            Some(TimeLists::new(vec![vec![5], vec![2, 7]])),
            2,
        )
        .unwrap();
        let r = solve_brute_force(&inst, SolveMode::Optimise, &BruteForceConfig::default()).unwrap();
        assert_eq!(r.stats.explored, 2);
        assert_eq!(r.witness, Some(Ordering::new(vec![5, 2])));
        assert_eq!(r.optimal_value, Some(3));
    }

    #[test]
    fn maxmin_prefers_larger_minimum() {
        let inst = Instance::singleton(path(3), 3).unwrap().with_objective(Objective::MaxMin);
        let r = solve_brute_force(&inst, SolveMode::Optimise, &BruteForceConfig::default()).unwrap();
        assert_eq!(r.optimal_value, Some(2));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Graph::undirected(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
        let inst = Instance::singleton(g, 4).unwrap();
        for mode in [SolveMode::Decision, SolveMode::Optimise] {
            let seq = solve_brute_force(
                &inst,
                mode,
                &BruteForceConfig { budget: DEFAULT_BUDGET, parallelism: Parallelism::Sequential },
            )
            .unwrap();
            let par = solve_brute_force(
                &inst,
                mode,
                &BruteForceConfig { budget: DEFAULT_BUDGET, parallelism: Parallelism::Parallel },
            )
            .unwrap();
            assert!(seq.same_outcome(&par), "{seq:?} vs {par:?}");
        }
    }

    #[test]
    fn empty_class_system() {
        let g = Graph::directed(3, vec![]).unwrap();
        let inst = Instance::singleton(g, 1).unwrap();
        let r = solve_brute_force(&inst, SolveMode::Optimise, &BruteForceConfig::default()).unwrap();
        assert_eq!(r.optimal_value, Some(1));
        assert_eq!(r.stats.explored, 1);
    }
}
