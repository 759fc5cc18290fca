//! Temporal reachability under an ordering, and the derived reports.
//!
//! Every reach set is computed by one forward sweep over the active classes in
//! time order, tracking the earliest arrival time of each vertex.

use crate::error::OrderingError;
use crate::graph::Graph;
use crate::model::{Instance, Objective, Ordering, Semantics};
use crate::parallel::{map_indices, Parallelism};

const UNREACHED: u32 = u32::MAX;

/// Per-class arc lists (both directions for undirected edges), shared by all
/// sweeps over one instance.
#[derive(Debug, Clone)]
pub(crate) struct ClassArcs {
    arcs: Vec<Vec<(u32, u32)>>,
    semantics: Semantics,
    vertex_count: usize,
}

impl ClassArcs {
    pub(crate) fn new(instance: &Instance) -> Self {
        let g = instance.graph();
        let arcs = instance
            .classes()
            .classes()
            .iter()
            .map(|class| {
                let mut out = Vec::with_capacity(class.len() * 2);
                for &e in class {
                    let (u, v) = g.edge(e);
                    out.push((u as u32, v as u32));
                    if !g.is_directed() {
                        out.push((v as u32, u as u32));
                    }
                }
                out
            })
            .collect();
        Self { arcs, semantics: instance.semantics(), vertex_count: g.vertex_count() }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

/// `(time, class)` pairs sorted by time.
pub(crate) type Timeline = Vec<(u32, usize)>;

pub(crate) fn timeline(ordering: &Ordering) -> Timeline {
    let mut tl: Timeline = ordering.times().iter().enumerate().map(|(c, &t)| (t, c)).collect();
    tl.sort_unstable();
    tl
}

/// Reusable sweep buffers.
#[derive(Debug, Clone)]
pub(crate) struct Scratch {
    arrival: Vec<u32>,
    touched: Vec<u32>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Self { arrival: vec![UNREACHED; n], touched: Vec::new() }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.arrival[v as usize] = UNREACHED;
        }
        self.touched.clear();
    }
}

impl ClassArcs {
    /// Sweeps from `source` using classes active strictly after `after`.
    /// Returns the number of reached vertices, or stops early (returning a
    /// value above `cap`) once more than `cap` vertices are reached. The
    /// reached vertices are left in `scratch.touched`.
    pub(crate) fn sweep(
        &self,
        timeline: &[(u32, usize)],
        source: usize,
        after: u32,
        cap: usize,
        scratch: &mut Scratch,
    ) -> usize {
        scratch.reset();
        scratch.arrival[source] = after;
        scratch.touched.push(source as u32);
        let start = timeline.partition_point(|&(t, _)| t <= after);
        for &(time, class) in &timeline[start..] {
            let arcs = &self.arcs[class];
            match self.semantics {
                Semantics::Strict => {
                    for &(a, b) in arcs {
                        if scratch.arrival[a as usize] < time && scratch.arrival[b as usize] == UNREACHED {
                            scratch.arrival[b as usize] = time;
                            scratch.touched.push(b);
                        }
                    }
                }
                Semantics::Weak => loop {
                    let before = scratch.touched.len();
                    for &(a, b) in arcs {
                        if scratch.arrival[a as usize] <= time && scratch.arrival[b as usize] == UNREACHED {
                            scratch.arrival[b as usize] = time;
                            scratch.touched.push(b);
                        }
                    }
                    if scratch.touched.len() == before {
                        break;
                    }
                },
            }
            if scratch.touched.len() > cap {
                break;
            }
        }
        scratch.touched.len()
    }

    pub(crate) fn reached(&self, scratch: &Scratch) -> Vec<usize> {
        let mut out: Vec<usize> = scratch.touched.iter().map(|&v| v as usize).collect();
        out.sort_unstable();
        out
    }

    /// Extreme reach size under `objective`, abandoning the evaluation once it
    /// is certain the extreme fails `accept`-style cutoff: for min-max any
    /// vertex above `cutoff`, for max-min any vertex below it. `None` means
    /// the cutoff was crossed.
    pub(crate) fn extreme_with_cutoff(
        &self,
        timeline: &[(u32, usize)],
        objective: Objective,
        cutoff: usize,
        scratch: &mut Scratch,
    ) -> Option<usize> {
        let n = self.vertex_count;
        match objective {
            Objective::MinMax => {
                let mut best = 0;
                for v in 0..n {
                    let size = self.sweep(timeline, v, 0, cutoff, scratch);
                    if size > cutoff {
                        return None;
                    }
                    best = best.max(size);
                }
                Some(best)
            }
            Objective::MaxMin => {
                let mut best = usize::MAX;
                for v in 0..n {
                    let size = self.sweep(timeline, v, 0, usize::MAX, scratch);
                    if size < cutoff {
                        return None;
                    }
                    best = best.min(size);
                }
                Some(if n == 0 { 0 } else { best })
            }
        }
    }
}

/// Vertices temporally reachable from `source` using classes active strictly
/// after `after` (0 means every class). The source is always included; the
/// result is sorted.
pub fn reach_set(
    instance: &Instance,
    ordering: &Ordering,
    source: usize,
    after: u32,
) -> Result<Vec<usize>, OrderingError> {
    ordering.validate_for(instance)?;
    let n = instance.graph().vertex_count();
    if source >= n {
        return Err(OrderingError::BadSource { vertex: source, vertex_count: n });
    }
    let arcs = ClassArcs::new(instance);
    let mut scratch = Scratch::new(n);
    arcs.sweep(&timeline(ordering), source, after, usize::MAX, &mut scratch);
    Ok(arcs.reached(&scratch))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityReport {
    pub per_vertex_size: Vec<usize>,
    /// Largest size (min-max) or smallest size (max-min).
    pub extreme_value: usize,
    /// Smallest vertex attaining `extreme_value`.
    pub extreme_vertex: usize,
    pub extreme_set: Vec<usize>,
}

impl ReachabilityReport {
    pub fn max_value(&self) -> usize {
        self.per_vertex_size.iter().copied().max().unwrap_or(0)
    }

    pub fn min_value(&self) -> usize {
        self.per_vertex_size.iter().copied().min().unwrap_or(0)
    }
}

pub fn reachability_report(instance: &Instance, ordering: &Ordering) -> Result<ReachabilityReport, OrderingError> {
    reachability_report_with(instance, ordering, Parallelism::default())
}

pub fn reachability_report_with(
    instance: &Instance,
    ordering: &Ordering,
    par: Parallelism,
) -> Result<ReachabilityReport, OrderingError> {
    ordering.validate_for(instance)?;
    let arcs = ClassArcs::new(instance);
    let tl = timeline(ordering);
    Ok(report_from(&arcs, &tl, instance.objective(), par))
}

pub(crate) fn per_vertex_sizes(arcs: &ClassArcs, tl: &[(u32, usize)], par: Parallelism) -> Vec<usize> {
    let n = arcs.vertex_count();
    #[cfg(feature = "parallel")]
    if par.is_parallel() && n > 256 {
        use rayon::prelude::*;
        return (0..n)
            .into_par_iter()
            .map_init(|| Scratch::new(n), |scratch, v| arcs.sweep(tl, v, 0, usize::MAX, scratch))
            .collect();
    }
    let _ = par;
    let mut scratch = Scratch::new(n);
    (0..n).map(|v| arcs.sweep(tl, v, 0, usize::MAX, &mut scratch)).collect()
}

pub(crate) fn report_from(
    arcs: &ClassArcs,
    tl: &[(u32, usize)],
    objective: Objective,
    par: Parallelism,
) -> ReachabilityReport {
    let sizes = per_vertex_sizes(arcs, tl, par);
    let mut extreme_vertex = 0;
    for (v, &s) in sizes.iter().enumerate() {
        let better = match objective {
            Objective::MinMax => s > sizes[extreme_vertex],
            Objective::MaxMin => s < sizes[extreme_vertex],
        };
        if better {
            extreme_vertex = v;
        }
    }
    let (extreme_value, extreme_set) = if sizes.is_empty() {
        (0, Vec::new())
    } else {
        let mut scratch = Scratch::new(arcs.vertex_count());
        arcs.sweep(tl, extreme_vertex, 0, usize::MAX, &mut scratch);
        (sizes[extreme_vertex], arcs.reached(&scratch))
    };
    ReachabilityReport { per_vertex_size: sizes, extreme_value, extreme_vertex, extreme_set }
}

/// Certificate check: extreme value at most `k` (min-max) or at least `k` (max-min).
pub fn decide(instance: &Instance, ordering: &Ordering) -> Result<bool, OrderingError> {
    let report = reachability_report(instance, ordering)?;
    Ok(meets_threshold(instance.objective(), report.extreme_value, instance.k()))
}

pub(crate) fn meets_threshold(objective: Objective, value: usize, k: u32) -> bool {
    match objective {
        Objective::MinMax => value <= k as usize,
        Objective::MaxMin => value >= k as usize,
    }
}

/// Edge-class interaction graph on vertex set `0..h`. Undirected input: two
/// classes are adjacent when they contain edges sharing an endpoint (a shared
/// edge counts). Directed input: adjacent when some vertex has an in-edge in
/// one class and an out-edge in the other.
pub fn interaction_graph(instance: &Instance) -> Graph {
    class_conflicts(instance, instance.graph().is_directed())
}

/// Classes adjacent whenever they hold edges sharing an endpoint, ignoring
/// direction. A supergraph of [`interaction_graph`].
pub fn incidence_interaction_graph(instance: &Instance) -> Graph {
    class_conflicts(instance, false)
}

fn class_conflicts(instance: &Instance, in_out_rule: bool) -> Graph {
    let g = instance.graph();
    let h = instance.classes().len();
    let n = g.vertex_count();
    let mut touching_in: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut touching_out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, class) in instance.classes().classes().iter().enumerate() {
        for &e in class {
            let (u, v) = g.edge(e);
            touching_out[u].push(c);
            touching_in[v].push(c);
        }
    }
    let mut adjacent = std::collections::BTreeSet::new();
    for v in 0..n {
        if in_out_rule {
            for &i in &touching_in[v] {
                for &j in &touching_out[v] {
                    if i != j {
                        adjacent.insert((i.min(j), i.max(j)));
                    }
                }
            }
        } else {
            let mut here: Vec<usize> = touching_in[v].iter().chain(&touching_out[v]).copied().collect();
            here.sort_unstable();
            here.dedup();
            for (a, &i) in here.iter().enumerate() {
                for &j in &here[a + 1..] {
                    adjacent.insert((i, j));
                }
            }
        }
    }
    Graph::undirected(h, adjacent.into_iter().collect()).expect("interaction graph is simple")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalizeError {
    #[error("leaves-first normalisation needs an undirected graph")]
    Directed,
    #[error("leaves-first normalisation needs a singleton class system")]
    NotSingleton,
    #[error("leaves-first normalisation needs the strict min-max problem")]
    WrongProblem,
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

/// Moves every leaf-edge class ahead of all other classes, keeping relative
/// order inside both blocks. Never increases the maximum reachability.
pub fn leaves_first_normalize(instance: &Instance, ordering: &Ordering) -> Result<Ordering, NormalizeError> {
    let g = instance.graph();
    if g.is_directed() {
        return Err(NormalizeError::Directed);
    }
    if !instance.is_singleton_system() {
        return Err(NormalizeError::NotSingleton);
    }
    if instance.objective() != Objective::MinMax || instance.semantics() != Semantics::Strict {
        return Err(NormalizeError::WrongProblem);
    }
    ordering.validate_for(instance)?;
    let schedule = ordering.schedule();
    let is_leaf = |c: &usize| g.is_leaf_edge(instance.classes().class(*c)[0]);
    let reordered: Vec<usize> =
        schedule.iter().filter(|c| is_leaf(c)).chain(schedule.iter().filter(|c| !is_leaf(c))).copied().collect();
    Ok(Ordering::from_schedule(&reordered))
}

/// Maximum reach size for every ordering in `orderings`, evaluated in parallel
/// when requested.
pub fn batch_max_reach(instance: &Instance, orderings: &[Ordering], par: Parallelism) -> Vec<usize> {
    let arcs = ClassArcs::new(instance);
    map_indices(par, orderings.len(), |i| {
        let tl = timeline(&orderings[i]);
        let mut scratch = Scratch::new(arcs.vertex_count());
        (0..arcs.vertex_count()).map(|v| arcs.sweep(&tl, v, 0, usize::MAX, &mut scratch)).max().unwrap_or(0)
    })
}
