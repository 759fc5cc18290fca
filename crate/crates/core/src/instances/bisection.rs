//! Singleton min-max instances from minimum bisection on cubic graphs.
//!
//! For each source vertex `v_i` the instance has a path `v_i^a w_i v_i^b`,
//! pendant leaves on `w_i`, `(r, k - r - 10)`-decorations rooted at `v_i^a`
//! and `v_i^b`, and for each source edge `v_i v_j` a `v_i^a`-`v_j^a` and a
//! `v_i^b`-`v_j^b` `k`-gadget. Hubs `x_a` and `x_b` join all `v^a` and all
//! `v^b` vertices. With `r = 3n` and the threshold below, which of
//! `w_i v_i^a`, `w_i v_i^b` goes first encodes the side of `v_i`.

use super::gadgets::{build_decoration, build_uv_gadget};
use super::{binomial2, BuildError, NamedVertexMap, Reduction};
use crate::graph::{Graph, GraphBuilder};
use crate::model::{Instance, Ordering};

/// Four times the threshold `h`: `4 + n(26 + 12n) + n(11 + 6n) + 6α`.
fn threshold_times_four(n: usize, alpha: usize) -> usize {
    let r = 3 * n;
    4 + n * (26 + 4 * r) + n * (11 + 2 * r) + 6 * alpha
}

/// Reachability threshold for a cubic graph on `n` vertices and cut bound
/// `alpha`, rounded down to an integer.
pub fn bisection_threshold(n: usize, alpha: usize) -> usize {
    threshold_times_four(n, alpha) / 4
}

/// Twice the reach of `x_a` under the witness ordering for a bisection with
/// `side_a` vertices on side A and `cut` crossing edges:
/// `2 + n(13 + 2r) + |A|(11 + 2r) + 3 cut`.
pub fn bisection_x_a_reach_twice(n: usize, r: usize, side_a: usize, cut: usize) -> usize {
    2 + n * (13 + 2 * r) + side_a * (11 + 2 * r) + 3 * cut
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Phase {
    Leaf,
    Hub,
    Path,
    DecorationRoot,
    GadgetAttach,
    Triangle,
    DecorationClique,
}

struct Built {
    graph: Graph,
    names: NamedVertexMap,
    phases: Vec<Phase>,
    // per source vertex: (w v^a edge, w v^b edge)
    path_edges: Vec<(usize, usize)>,
    k: usize,
}

fn build(source: &Graph, alpha: usize) -> Result<Built, BuildError> {
    if source.is_directed() {
        return Err(BuildError::InvalidParameter("the source graph must be undirected".into()));
    }
    let n = source.vertex_count();
    if let Some(v) = (0..n).find(|&v| source.degree(v) != 3) {
        return Err(BuildError::NotCubic { vertex: v, degree: source.degree(v) });
    }
    if n % 2 == 1 {
        return Err(BuildError::OddVertexCount(n));
    }
    if n == 0 {
        return Err(BuildError::Regime("the source graph is empty".into()));
    }
    let r = 3 * n;
    let k = bisection_threshold(n, alpha);
    let w_leaves = k as i64 - 2 * r as i64 - 21;
    let dec_leaves = k as i64 - r as i64 - 10;
    if w_leaves < 1 || dec_leaves < 1 || k < 5 {
        return Err(BuildError::Regime(format!("pendant counts must be positive (threshold {k}, r {r})")));
    }

    let mut b = GraphBuilder::new();
    let mut names = NamedVertexMap::new();
    let mut phases = Vec::new();
    let push = |phases: &mut Vec<Phase>, b: &GraphBuilder, p: Phase| phases.resize(b.edge_count(), p);

    let x_a = b.add_vertex();
    let x_b = b.add_vertex();
    names.insert("x_a", x_a);
    names.insert("x_b", x_b);
    let mut va = Vec::with_capacity(n);
    let mut vb = Vec::with_capacity(n);
    let mut path_edges = Vec::with_capacity(n);
    for i in 0..n {
        let (a, w, bb) = (b.add_vertex(), b.add_vertex(), b.add_vertex());
        names.insert(format!("v_{}^a", i + 1), a);
        names.insert(format!("w_{}", i + 1), w);
        names.insert(format!("v_{}^b", i + 1), bb);
        let ea = b.add_edge(w, a);
        let eb = b.add_edge(w, bb);
        push(&mut phases, &b, Phase::Path);
        path_edges.push((ea, eb));
        for j in 0..w_leaves as usize {
            let leaf = b.add_vertex();
            names.insert(format!("w_{}/leaf_{}", i + 1, j + 1), leaf);
            b.add_edge(w, leaf);
        }
        push(&mut phases, &b, Phase::Leaf);
        va.push(a);
        vb.push(bb);
    }
    for i in 0..n {
        b.add_edge(x_a, va[i]);
        b.add_edge(x_b, vb[i]);
    }
    push(&mut phases, &b, Phase::Hub);
    for (side, roots) in [("a", &va), ("b", &vb)] {
        for (i, &root) in roots.iter().enumerate() {
            let start = b.edge_count();
            let dec = build_decoration(r, dec_leaves as usize, root, &mut b)?;
            names.merge_prefixed(&format!("D(v_{}^{side})/", i + 1), dec);
            let clique_end = start + binomial2(r);
            let leaf_end = clique_end + r * dec_leaves as usize;
            push(&mut phases, &b, Phase::DecorationRoot);
            phases[start..clique_end].fill(Phase::DecorationClique);
            phases[clique_end..leaf_end].fill(Phase::Leaf);
        }
    }
    for (e, &(i, j)) in source.edges().iter().enumerate() {
        for (side, ends) in [("a", &va), ("b", &vb)] {
            let start = b.edge_count();
            let gadget = build_uv_gadget(k, ends[i], ends[j], &mut b)?;
            names.merge_prefixed(&format!("G{}^{side}/", e + 1), gadget);
            push(&mut phases, &b, Phase::Leaf);
            phases[start..start + 2].fill(Phase::GadgetAttach);
            phases[start + 2..start + 5].fill(Phase::Triangle);
        }
    }
    let graph = b.build(false)?;
    debug_assert!((0..graph.edge_count()).all(|e| (phases[e] == Phase::Leaf) == graph.is_leaf_edge(e)));
    Ok(Built { graph, names, phases, path_edges, k })
}

/// Builds the instance with threshold [`bisection_threshold`]. Rejects
/// non-cubic or odd-order sources and sources too small for every pendant
/// count to be positive.
pub fn reduce_min_bisection(cubic_graph: &Graph, alpha: usize) -> Result<Reduction, BuildError> {
    let built = build(cubic_graph, alpha)?;
    let instance = Instance::singleton(built.graph, built.k as u32)?;
    Ok(Reduction { instance, names: built.names })
}

/// The ordering used to show bisections give small reach: leaf edges, hub
/// edges, path edges (for `v_i` in A the `v_i^a` side first), decoration
/// root edges, gadget attachment edges, triangle edges, decoration cliques.
pub fn bisection_witness(cubic_graph: &Graph, alpha: usize, in_a: &[bool]) -> Result<Ordering, BuildError> {
    let built = build(cubic_graph, alpha)?;
    if in_a.len() != cubic_graph.vertex_count() {
        return Err(BuildError::InvalidParameter("side assignment has the wrong length".into()));
    }
    if 2 * in_a.iter().filter(|&&a| a).count() != in_a.len() {
        return Err(BuildError::InvalidParameter("the two sides must have equal size".into()));
    }
    let mut schedule = Vec::with_capacity(built.phases.len());
    for phase in [Phase::Leaf, Phase::Hub] {
        schedule.extend((0..built.phases.len()).filter(|&e| built.phases[e] == phase));
    }
    for (i, &(ea, eb)) in built.path_edges.iter().enumerate() {
        if in_a[i] {
            schedule.extend([ea, eb]);
        } else {
            schedule.extend([eb, ea]);
        }
    }
    for phase in [Phase::DecorationRoot, Phase::GadgetAttach, Phase::Triangle, Phase::DecorationClique] {
        schedule.extend((0..built.phases.len()).filter(|&e| built.phases[e] == phase));
    }
    Ok(Ordering::from_schedule(&schedule))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::undirected(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_threshold_and_size() {
        assert_eq!(threshold_times_four(4, 4), 464);
        assert_eq!(bisection_threshold(4, 4), 116);
        let red = reduce_min_bisection(&k4(), 4).unwrap();
        assert_eq!(red.instance.k(), 116);
        assert_eq!(red.instance.graph().vertex_count(), 13498);
        assert_eq!(red.instance.graph().edge_count(), 14052);
        assert!(red.instance.graph().is_connected());
    }

    #[test]
    fn rejects_non_cubic_and_odd() {
        let p3 = Graph::undirected(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(reduce_min_bisection(&p3, 0), Err(BuildError::NotCubic { .. })));
    }
}
