use super::{BuildError, NamedVertexMap};
use crate::graph::GraphBuilder;

/// Appends an `(r, s)`-decoration rooted at `root`: a clique on `r` new
/// vertices, `s` pendant leaves on each, and an edge from `root` to every
/// clique vertex. Edges are added in that order (clique, pendants, root).
/// Labels: `q_i` for clique vertices and `q_i/leaf_j` for leaves (1-based).
pub fn build_decoration(
    r: usize,
    s: usize,
    root: usize,
    into: &mut GraphBuilder,
) -> Result<NamedVertexMap, BuildError> {
    if r == 0 || s == 0 {
        return Err(BuildError::InvalidParameter("decorations need r, s >= 1".into()));
    }
    let mut names = NamedVertexMap::new();
    let clique: Vec<usize> = (0..r).map(|_| into.add_vertex()).collect();
    for (i, &q) in clique.iter().enumerate() {
        names.insert(format!("q_{}", i + 1), q);
    }
    for i in 0..r {
        for j in i + 1..r {
            into.add_edge(clique[i], clique[j]);
        }
    }
    for (i, &q) in clique.iter().enumerate() {
        for j in 0..s {
            let leaf = into.add_vertex();
            names.insert(format!("q_{}/leaf_{}", i + 1, j + 1), leaf);
            into.add_edge(q, leaf);
        }
    }
    for &q in &clique {
        into.add_edge(root, q);
    }
    Ok(names)
}

/// Appends a `u`-`v` `k`-gadget: triangle `abc` with `a ~ u`, `b ~ v`, `k - 4`
/// leaves on each of `a` and `b` and `k - 3` on `c`. Edges are added as
/// `ua, vb, ab, ac, bc`, then the pendant edges of `a`, `b`, `c`.
pub fn build_uv_gadget(k: usize, u: usize, v: usize, into: &mut GraphBuilder) -> Result<NamedVertexMap, BuildError> {
    if k < 5 {
        return Err(BuildError::InvalidParameter(format!("gadgets need k >= 5, got {k}")));
    }
    let mut names = NamedVertexMap::new();
    let a = into.add_vertex();
    let b = into.add_vertex();
    let c = into.add_vertex();
    names.insert("a", a);
    names.insert("b", b);
    names.insert("c", c);
    into.add_edge(u, a);
    into.add_edge(v, b);
    into.add_edge(a, b);
    into.add_edge(a, c);
    into.add_edge(b, c);
    for (name, hub, count) in [("a", a, k - 4), ("b", b, k - 4), ("c", c, k - 3)] {
        for j in 0..count {
            let leaf = into.add_vertex();
            names.insert(format!("{name}/leaf_{}", j + 1), leaf);
            into.add_edge(hub, leaf);
        }
    }
    Ok(names)
}
