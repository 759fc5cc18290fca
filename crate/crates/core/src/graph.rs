//! Static (di)graphs with an indexed edge list.

use std::collections::{HashSet, VecDeque};

use crate::error::{InvalidInstance, Violation};

/// A simple static graph. Vertices are `0..vertex_count`; edges are
/// identified by their position in [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge) pairs leaving each vertex; both directions when undirected
    out_adj: Vec<Vec<(usize, usize)>>,
    in_adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, reporting every violated invariant at once.
    pub fn new(directed: bool, vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, InvalidInstance> {
        let violations = Self::check(directed, vertex_count, &edges);
        if violations.is_empty() {
            Ok(Self::build(directed, vertex_count, edges))
        } else {
            Err(InvalidInstance(violations))
        }
    }

    pub fn undirected(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, InvalidInstance> {
        Self::new(false, vertex_count, edges)
    }

    pub fn directed(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, InvalidInstance> {
        Self::new(true, vertex_count, edges)
    }

    pub(crate) fn check(directed: bool, vertex_count: usize, edges: &[(usize, usize)]) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut seen = std::collections::HashMap::new();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            let mut in_range = true;
            for w in [u, v] {
                if w >= vertex_count {
                    violations.push(Violation::VertexOutOfRange { edge: idx, vertex: w, vertex_count });
                    in_range = false;
                }
            }
            if u == v {
                violations.push(Violation::SelfLoop { edge: idx, vertex: u });
                continue;
            }
            if !in_range {
                continue;
            }
            let key = if directed || u < v { (u, v) } else { (v, u) };
            if let Some(&first) = seen.get(&key) {
                violations.push(Violation::DuplicateEdge { edge: idx, first });
            } else {
                seen.insert(key, idx);
            }
        }
        violations
    }

    fn build(directed: bool, vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            out_adj[u].push((v, idx));
            if directed {
                in_adj[v].push((u, idx));
            } else {
                out_adj[v].push((u, idx));
            }
        }
        Self { directed, vertex_count, edges, out_adj, in_adj }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    /// Out-neighbours (all neighbours when undirected) paired with the edge index.
    pub fn incident_out(&self, v: usize) -> &[(usize, usize)] {
        &self.out_adj[v]
    }

    /// In-neighbours paired with the edge index; empty for undirected graphs.
    pub fn incident_in(&self, v: usize) -> &[(usize, usize)] {
        &self.in_adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adj[v].iter().chain(self.in_adj[v].iter()).map(|&(w, _)| w)
    }

    /// Total degree (in + out for directed graphs).
    pub fn degree(&self, v: usize) -> usize {
        self.out_adj[v].len() + self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// Edges with an endpoint of degree one.
    pub fn is_leaf_edge(&self, idx: usize) -> bool {
        let (u, v) = self.edges[idx];
        self.degree(u) == 1 || self.degree(v) == 1
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        !self.directed && self.vertex_count > 0 && self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// Kahn's algorithm; `None` when a directed cycle exists (or the graph is undirected).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        if !self.directed {
            return None;
        }
        let mut indeg: Vec<usize> = (0..self.vertex_count).map(|v| self.in_adj[v].len()).collect();
        let mut queue: VecDeque<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, _) in &self.out_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    pub fn is_dag(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices reachable from `source` in the static graph, including itself.
    pub fn static_reach(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        seen[source] = true;
        let mut stack = vec![source];
        let mut out = vec![source];
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.out_adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Two-colouring of an undirected graph by layered traversal, if one exists.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let mut side = vec![usize::MAX; self.vertex_count];
        for start in 0..self.vertex_count {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Edge indices keyed by unordered endpoint pair (undirected) or ordered pair.
    pub fn edge_lookup(&self) -> HashSet<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| if self.directed || u < v { (u, v) } else { (v, u) }).collect()
    }
}

/// Incremental builder used by the instance generators.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        Self { vertex_count: n, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn build(self, directed: bool) -> Result<Graph, InvalidInstance> {
        Graph::new(directed, self.vertex_count, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges_all_at_once() {
        let err = Graph::undirected(3, vec![(0, 5), (1, 1), (0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err.0.len(), 3);
        assert!(matches!(err.0[0], Violation::VertexOutOfRange { edge: 0, vertex: 5, .. }));
        assert!(matches!(err.0[1], Violation::SelfLoop { edge: 1, .. }));
        assert!(matches!(err.0[2], Violation::DuplicateEdge { edge: 3, first: 2 }));
    }

    #[test]
    fn antiparallel_arcs_are_distinct_when_directed() {
        assert!(Graph::directed(2, vec![(0, 1), (1, 0)]).is_ok());
        assert!(Graph::undirected(2, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn degrees_and_shape_predicates() {
        let p3 = Graph::undirected(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.max_degree(), 2);
        assert!(p3.is_tree());
        assert!(p3.is_leaf_edge(0) && p3.is_leaf_edge(1));

        let dag = Graph::directed(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(dag.max_out_degree(), 2);
        assert_eq!(dag.topological_order(), Some(vec![0, 1, 2]));
        assert_eq!(dag.static_reach(1), vec![1, 2]);

        let cyc = Graph::directed(2, vec![(0, 1), (1, 0)]).unwrap();
        assert!(!cyc.is_dag());
    }

    #[test]
    fn odd_cycle_has_no_bipartition() {
        let c3 = Graph::undirected(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(c3.bipartition().is_none());
        let c4 = Graph::undirected(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bipartition(), Some(vec![0, 1, 0, 1]));
    }
}
