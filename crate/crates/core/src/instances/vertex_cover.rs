//! Instances from vertex cover: a list variant on disjoint five-vertex paths
//! and a max-min tree instance.

use super::{BuildError, NamedVertexMap, Reduction};
use crate::graph::{Graph, GraphBuilder};
use crate::model::{EdgeClassSystem, Instance, Objective, Semantics, TimeLists};

fn undirected(graph: &Graph) -> Result<(), BuildError> {
    if graph.is_directed() {
        return Err(BuildError::InvalidParameter("the source graph must be undirected".into()));
    }
    Ok(())
}

/// One path `u[e] u'[e] x_e v'[e] v[e]` per source edge `e = uv`. Class `i`
/// (for source vertex `v_i`) holds the end edges at `v_i`'s copies and may use
/// any timestep in `1..=n+1` except `k+1`; the final class holds every middle
/// edge and must use `k+1`. Threshold 4.
pub fn reduce_vertex_cover_list(graph: &Graph, k: usize) -> Result<Reduction, BuildError> {
    undirected(graph)?;
    let n = graph.vertex_count();
    if k >= n {
        return Err(BuildError::InvalidParameter(format!("cover size {k} must be below the vertex count {n}")));
    }
    let mut b = GraphBuilder::new();
    let mut names = NamedVertexMap::new();
    let mut classes = vec![Vec::new(); n + 1];
    for (j, &(u, v)) in graph.edges().iter().enumerate() {
        let e = format!("e_{}", j + 1);
        let p: Vec<usize> = (0..5).map(|_| b.add_vertex()).collect();
        names.insert(format!("v_{}[{e}]", u + 1), p[0]);
        names.insert(format!("v_{}'[{e}]", u + 1), p[1]);
        names.insert(format!("x_{e}"), p[2]);
        names.insert(format!("v_{}'[{e}]", v + 1), p[3]);
        names.insert(format!("v_{}[{e}]", v + 1), p[4]);
        classes[u].push(b.add_edge(p[0], p[1]));
        classes[n].push(b.add_edge(p[1], p[2]));
        classes[n].push(b.add_edge(p[2], p[3]));
        classes[v].push(b.add_edge(p[3], p[4]));
    }
    let middle = k as u32 + 1;
    let mut lists: Vec<Vec<u32>> = vec![(1..=n as u32 + 1).filter(|&t| t != middle).collect(); n];
    lists.push(vec![middle]);
    let instance = Instance::new(
        b.build(false)?,
        EdgeClassSystem::new(classes),
        Objective::MinMax,
        Semantics::Strict,
        Some(TimeLists::new(lists)),
        4,
    )?;
    Ok(Reduction { instance, names })
}

/// Path `s … r` on `n - k` vertices, `m` leaves `w_j` at `r` (one per source
/// edge) and `m + 1` leaves `u_j` at `s`. Class `i` holds the path, every
/// `s u_j`, and `r w_j` for the edges at `v_i`. Max-min threshold `n + m - k + 1`.
pub fn reduce_vertex_cover_maxmin(graph: &Graph, k: usize) -> Result<Reduction, BuildError> {
    undirected(graph)?;
    let n = graph.vertex_count();
    let m = graph.edge_count();
    if n < k + 2 {
        return Err(BuildError::InvalidParameter(format!("need n - k >= 2 (n = {n}, k = {k})")));
    }
    let len = n - k;
    let mut b = GraphBuilder::new();
    let mut names = NamedVertexMap::new();
    let path: Vec<usize> = (0..len).map(|_| b.add_vertex()).collect();
    names.insert("s", path[0]);
    names.insert("r", path[len - 1]);
    for (i, &p) in path.iter().enumerate().take(len - 1).skip(1) {
        names.insert(format!("p_{i}"), p);
    }
    let mut shared: Vec<usize> = path.windows(2).map(|w| b.add_edge(w[0], w[1])).collect();
    let mut w_edges = Vec::with_capacity(m);
    for j in 0..m {
        let w = b.add_vertex();
        names.insert(format!("w_{}", j + 1), w);
        w_edges.push(b.add_edge(path[len - 1], w));
    }
    for j in 0..=m {
        let u = b.add_vertex();
        names.insert(format!("u_{}", j + 1), u);
        shared.push(b.add_edge(path[0], u));
    }
    let mut classes = vec![shared; n];
    for (j, &(x, y)) in graph.edges().iter().enumerate() {
        classes[x].push(w_edges[j]);
        classes[y].push(w_edges[j]);
    }
    let instance = Instance::new(
        b.build(false)?,
        EdgeClassSystem::new(classes),
        Objective::MaxMin,
        Semantics::Strict,
        None,
        (n + m - k + 1) as u32,
    )?;
    Ok(Reduction { instance, names })
}
