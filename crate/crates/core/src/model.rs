//! Instances of the temporal ordering problem and the orderings that solve them.

use std::fmt;

use crate::error::{InvalidInstance, OrderingError, Violation};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Minimise the largest reachability set.
    MinMax,
    /// Maximise the smallest reachability set.
    MaxMin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// Consecutive edges of a temporal path need strictly increasing times.
    Strict,
    /// Consecutive edges may share a timestep.
    Weak,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::MinMax => "minmax",
            Objective::MaxMin => "maxmin",
        })
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Strict => "strict",
            Semantics::Weak => "weak",
        })
    }
}

/// Ordered multiset of edge classes. Each class is active at exactly one
/// timestep; identical classes may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassSystem {
    classes: Vec<Vec<usize>>,
}

impl EdgeClassSystem {
    pub fn new(classes: Vec<Vec<usize>>) -> Self {
        Self { classes }
    }

    /// One class per edge, in edge-index order.
    pub fn singletons(edge_count: usize) -> Self {
        Self { classes: (0..edge_count).map(|e| vec![e]).collect() }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    /// Every class has exactly one edge, classes are pairwise disjoint and
    /// every edge appears.
    pub fn is_singleton_system(&self, edge_count: usize) -> bool {
        if self.classes.len() != edge_count {
            return false;
        }
        let mut seen = vec![false; edge_count];
        for class in &self.classes {
            match class.as_slice() {
                [e] if *e < edge_count && !seen[*e] => seen[*e] = true,
                _ => return false,
            }
        }
        true
    }

    /// Largest number of edges of one class meeting at a single vertex.
    pub fn max_class_degree(&self, graph: &Graph) -> usize {
        let mut deg = vec![0usize; graph.vertex_count()];
        let mut best = 0;
        for class in &self.classes {
            for &e in class {
                let (u, v) = graph.edge(e);
                deg[u] += 1;
                deg[v] += 1;
                best = best.max(deg[u]).max(deg[v]);
            }
            for &e in class {
                let (u, v) = graph.edge(e);
                deg[u] = 0;
                deg[v] = 0;
            }
        }
        best
    }
}

/// Permitted timesteps for each class (list variant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeLists {
    lists: Vec<Vec<u32>>,
}

impl TimeLists {
    /// Lists are stored sorted and deduplicated.
    pub fn new(lists: Vec<Vec<u32>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Self { lists }
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn list(&self, class: usize) -> &[u32] {
        &self.lists[class]
    }

    pub fn permits(&self, class: usize, time: u32) -> bool {
        self.lists[class].binary_search(&time).is_ok()
    }

    /// Whether some injective list-respecting assignment exists (Hall's
    /// condition), decided by bipartite matching.
    pub fn has_distinct_representatives(&self) -> bool {
        let mut owner: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
        for class in 0..self.lists.len() {
            let mut visited = std::collections::HashSet::new();
            if !self.augment(class, &mut owner, &mut visited) {
                return false;
            }
        }
        true
    }

    fn augment(
        &self,
        class: usize,
        owner: &mut std::collections::HashMap<u32, usize>,
        visited: &mut std::collections::HashSet<u32>,
    ) -> bool {
        for &t in &self.lists[class] {
            if !visited.insert(t) {
                continue;
            }
            let free = match owner.get(&t) {
                None => true,
                Some(&other) => self.augment(other, owner, visited),
            };
            if free {
                owner.insert(t, class);
                return true;
            }
        }
        false
    }
}

/// Timestep assigned to each class; `times[i]` belongs to class `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordering {
    times: Vec<u32>,
}

impl Ordering {
    pub fn new(times: Vec<u32>) -> Self {
        Self { times }
    }

    /// Class `i` at timestep `i + 1`.
    pub fn identity(h: usize) -> Self {
        Self { times: (1..=h as u32).collect() }
    }

    /// Builds the ordering in which `schedule[j]` is active at timestep `j + 1`.
    pub fn from_schedule(schedule: &[usize]) -> Self {
        let mut times = vec![0; schedule.len()];
        for (pos, &class) in schedule.iter().enumerate() {
            times[class] = pos as u32 + 1;
        }
        Self { times }
    }

    pub fn times(&self) -> &[u32] {
        &self.times
    }

    pub fn time(&self, class: usize) -> u32 {
        self.times[class]
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Class indices sorted by their timestep.
    pub fn schedule(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.times.len()).collect();
        idx.sort_by_key(|&i| self.times[i]);
        idx
    }

    /// Checks injectivity and either the bijection onto `1..=h` or the time lists.
    pub fn validate_for(&self, instance: &Instance) -> Result<(), OrderingError> {
        let h = instance.classes().len();
        if self.times.len() != h {
            return Err(OrderingError::LengthMismatch { expected: h, found: self.times.len() });
        }
        let mut owner = std::collections::HashMap::with_capacity(h);
        for (class, &time) in self.times.iter().enumerate() {
            match instance.time_lists() {
                None if time == 0 || time as usize > h => {
                    return Err(OrderingError::TimeOutOfRange { class, time, h });
                }
                Some(lists) if !lists.permits(class, time) => {
                    return Err(OrderingError::NotInList { class, time, list: lists.list(class).to_vec() });
                }
                _ => {}
            }
            if let Some(first) = owner.insert(time, class) {
                return Err(OrderingError::DuplicateTime { time, first, second: class });
            }
        }
        Ok(())
    }
}

/// Unvalidated instance data, as read from a file or assembled by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceCandidate {
    pub directed: bool,
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub classes: Vec<Vec<usize>>,
    pub objective: Objective,
    pub semantics: Semantics,
    pub time_lists: Option<Vec<Vec<u32>>>,
    pub k: u32,
}

/// A validated problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    classes: EdgeClassSystem,
    objective: Objective,
    semantics: Semantics,
    time_lists: Option<TimeLists>,
    k: u32,
}

impl Instance {
    /// Validates a candidate, returning every violated invariant on failure.
    pub fn validate(raw: InstanceCandidate) -> Result<Self, InvalidInstance> {
        let mut violations = Graph::check(raw.directed, raw.vertex_count, &raw.edges);
        let m = raw.edges.len();
        if raw.classes.is_empty() && m > 0 {
            violations.push(Violation::EmptyClassList { edge_count: m });
        }
        let mut covered = vec![false; m];
        for (class, edges) in raw.classes.iter().enumerate() {
            for &e in edges {
                if e >= m {
                    violations.push(Violation::BadClassEdgeIndex { class, edge: e, edge_count: m });
                } else {
                    covered[e] = true;
                }
            }
        }
        violations
            .extend(covered.iter().enumerate().filter(|(_, &c)| !c).map(|(edge, _)| Violation::UncoveredEdge { edge }));
        if let Some(lists) = &raw.time_lists {
            if lists.len() != raw.classes.len() {
                violations.push(Violation::TimeListCount { expected: raw.classes.len(), found: lists.len() });
            }
            for (class, list) in lists.iter().enumerate() {
                if list.is_empty() {
                    violations.push(Violation::EmptyTimeList { class });
                }
                if list.contains(&0) {
                    violations.push(Violation::ZeroTime { class });
                }
            }
        }
        if raw.k == 0 {
            violations.push(Violation::ZeroThreshold);
        }
        if !violations.is_empty() {
            return Err(InvalidInstance(violations));
        }
        Ok(Self {
            graph: Graph::new(raw.directed, raw.vertex_count, raw.edges)?,
            classes: EdgeClassSystem::new(raw.classes),
            objective: raw.objective,
            semantics: raw.semantics,
            time_lists: raw.time_lists.map(TimeLists::new),
            k: raw.k,
        })
    }

    pub fn new(
        graph: Graph,
        classes: EdgeClassSystem,
        objective: Objective,
        semantics: Semantics,
        time_lists: Option<TimeLists>,
        k: u32,
    ) -> Result<Self, InvalidInstance> {
        Self::validate(InstanceCandidate {
            directed: graph.is_directed(),
            vertex_count: graph.vertex_count(),
            edges: graph.edges().to_vec(),
            classes: classes.classes,
            objective,
            semantics,
            time_lists: time_lists.map(|l| l.lists),
            k,
        })
    }

    /// Strict min-max instance with one class per edge.
    pub fn singleton(graph: Graph, k: u32) -> Result<Self, InvalidInstance> {
        let classes = EdgeClassSystem::singletons(graph.edge_count());
        Self::new(graph, classes, Objective::MinMax, Semantics::Strict, None, k)
    }

    pub fn to_candidate(&self) -> InstanceCandidate {
        InstanceCandidate {
            directed: self.graph.is_directed(),
            vertex_count: self.graph.vertex_count(),
            edges: self.graph.edges().to_vec(),
            classes: self.classes.classes.clone(),
            objective: self.objective,
            semantics: self.semantics,
            time_lists: self.time_lists.as_ref().map(|l| l.lists.clone()),
            k: self.k,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn classes(&self) -> &EdgeClassSystem {
        &self.classes
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn time_lists(&self) -> Option<&TimeLists> {
        self.time_lists.as_ref()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn with_k(&self, k: u32) -> Self {
        assert!(k >= 1, "threshold must be positive");
        Self { k, ..self.clone() }
    }

    pub fn with_objective(&self, objective: Objective) -> Self {
        Self { objective, ..self.clone() }
    }

    pub fn with_semantics(&self, semantics: Semantics) -> Self {
        Self { semantics, ..self.clone() }
    }

    pub fn is_singleton_system(&self) -> bool {
        self.classes.is_singleton_system(self.graph.edge_count())
    }

    /// Restriction to the given classes: the underlying graph keeps every
    /// vertex but only edges used by those classes (re-indexed in order).
    pub fn restrict(&self, class_indices: &[usize]) -> Result<Self, InvalidInstance> {
        let mut remap = vec![usize::MAX; self.graph.edge_count()];
        let mut edges = Vec::new();
        let mut classes = Vec::with_capacity(class_indices.len());
        for &c in class_indices {
            let mut mapped = Vec::with_capacity(self.classes.class(c).len());
            for &e in self.classes.class(c) {
                if remap[e] == usize::MAX {
                    remap[e] = edges.len();
                    edges.push(self.graph.edge(e));
                }
                mapped.push(remap[e]);
            }
            classes.push(mapped);
        }
        Self::validate(InstanceCandidate {
            directed: self.graph.is_directed(),
            vertex_count: self.graph.vertex_count(),
            edges,
            classes,
            objective: self.objective,
            semantics: self.semantics,
            time_lists: None,
            k: self.k,
        })
    }
}
