//! Tree instances (min-max, non-singleton) from k-clique.
//!
//! A path `s = p_0, …, p_k = r` carries `n(C(k,2) + 1)` leaves `u_i^j` at `s`
//! and one leaf `w_j` per source edge at `r`. Class `E_i` holds the whole
//! path, the leaves `u_i^*` and the `w_j` of edges incident with `v_i`.

use super::{binomial2, BuildError, NamedVertexMap, Reduction};
use crate::graph::{Graph, GraphBuilder};
use crate::model::{EdgeClassSystem, Instance, Objective, Semantics};

pub fn reduce_pclique(graph: &Graph, k: usize) -> Result<Reduction, BuildError> {
    if graph.is_directed() {
        return Err(BuildError::InvalidParameter("the source graph must be undirected".into()));
    }
    if k < 2 {
        return Err(BuildError::InvalidParameter(format!("clique size must be at least 2, got {k}")));
    }
    let n = graph.vertex_count();
    if n == 0 {
        return Err(BuildError::InvalidParameter("the source graph has no vertices".into()));
    }
    // A single class activates the whole tree at once; s then reaches
    // C(k,2) + 3 vertices, which only exceeds the threshold when k > 2.
    if n == 1 && k == 2 {
        return Err(BuildError::InvalidParameter("a one-vertex source needs clique size at least 3".into()));
    }
    let pairs = binomial2(k);
    let mut b = GraphBuilder::new();
    let mut names = NamedVertexMap::new();
    let path: Vec<usize> = (0..=k).map(|_| b.add_vertex()).collect();
    let (s, r) = (path[0], path[k]);
    names.insert("s", s);
    names.insert("r", r);
    for (i, &p) in path.iter().enumerate().skip(1).take(k - 1) {
        names.insert(format!("p_{i}"), p);
    }
    let path_edges: Vec<usize> = path.windows(2).map(|w| b.add_edge(w[0], w[1])).collect();
    let mut classes: Vec<Vec<usize>> = vec![path_edges; n];
    for (i, class) in classes.iter_mut().enumerate() {
        for j in 0..=pairs {
            let u = b.add_vertex();
            names.insert(format!("u_{}^{}", i + 1, j + 1), u);
            class.push(b.add_edge(s, u));
        }
    }
    for (j, &(x, y)) in graph.edges().iter().enumerate() {
        let w = b.add_vertex();
        names.insert(format!("w_{}", j + 1), w);
        let e = b.add_edge(r, w);
        classes[x].push(e);
        classes[y].push(e);
    }
    let g = b.build(false)?;
    let total = g.vertex_count();
    debug_assert_eq!(total, k + 1 + graph.edge_count() + n * (pairs + 1));
    let instance = Instance::new(
        g,
        EdgeClassSystem::new(classes),
        Objective::MinMax,
        Semantics::Strict,
        None,
        (total - pairs) as u32,
    )?;
    Ok(Reduction { instance, names })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{solve_brute_force, BruteForceConfig, SolveMode};

    #[test]
    fn triangle_versus_path() {
        let k3 = Graph::undirected(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let red = reduce_pclique(&k3, 3).unwrap();
        assert!(red.instance.graph().is_tree());
        assert_eq!(red.instance.graph().vertex_count(), 4 + 3 + 3 * 4);
        let yes = solve_brute_force(&red.instance, SolveMode::Decision, &BruteForceConfig::default()).unwrap();
        assert!(yes.decision);

        let p3 = Graph::undirected(3, vec![(0, 1), (1, 2)]).unwrap();
        let red = reduce_pclique(&p3, 3).unwrap();
        let no = solve_brute_force(&red.instance, SolveMode::Decision, &BruteForceConfig::default()).unwrap();
        assert!(!no.decision);
        assert_eq!(no.stats.explored, 6);
    }
}
