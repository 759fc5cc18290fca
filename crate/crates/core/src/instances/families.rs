use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BuildError;
use crate::graph::GraphBuilder;
use crate::model::Instance;

/// Benchmark graph families; every one yields a strict min-max singleton
/// instance with classes in edge-index order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyKind {
    Path {
        n: usize,
    },
    /// `2^(depth+1) - 1` vertices; vertex `i > 0` hangs below `(i - 1) / 2`.
    CompleteBinaryTree {
        depth: u32,
    },
    /// Clique on `r` vertices, each with `s` pendant leaves; clique edges come first.
    CliqueWithPendants {
        r: usize,
        s: usize,
    },
    /// Vertex `i` attaches to a uniform earlier vertex.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Arc `i -> j` for `i < j` with probability `p`.
    RandomDag {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomGraph {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn positive(name: &str, value: usize) -> Result<(), BuildError> {
    if value == 0 {
        return Err(BuildError::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

fn probability(p: f64) -> Result<(), BuildError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(BuildError::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Builds the family member; `k` defaults to the vertex count.
pub fn gen_family(kind: FamilyKind, k: Option<u32>) -> Result<Instance, BuildError> {
    let mut b: GraphBuilder;
    let mut directed = false;
    match kind {
        FamilyKind::Path { n } => {
            positive("n", n)?;
            b = GraphBuilder::with_vertices(n);
            for i in 1..n {
                b.add_edge(i - 1, i);
            }
        }
        FamilyKind::CompleteBinaryTree { depth } => {
            if depth > 24 {
                return Err(BuildError::InvalidParameter(format!("depth {depth} is too large")));
            }
            let n = (1usize << (depth + 1)) - 1;
            b = GraphBuilder::with_vertices(n);
            for i in 1..n {
                b.add_edge((i - 1) / 2, i);
            }
        }
        FamilyKind::CliqueWithPendants { r, s } => {
            positive("r", r)?;
            b = GraphBuilder::with_vertices(r);
            for i in 0..r {
                for j in i + 1..r {
                    b.add_edge(i, j);
                }
            }
            for i in 0..r {
                for _ in 0..s {
                    let leaf = b.add_vertex();
                    b.add_edge(i, leaf);
                }
            }
        }
        FamilyKind::RandomTree { n, seed } => {
            positive("n", n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            b = GraphBuilder::with_vertices(n);
            for i in 1..n {
                let j = rng.gen_range(0..i);
                b.add_edge(j, i);
            }
        }
        FamilyKind::RandomDag { n, p, seed } | FamilyKind::RandomGraph { n, p, seed } => {
            positive("n", n)?;
            probability(p)?;
            directed = matches!(kind, FamilyKind::RandomDag { .. });
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            b = GraphBuilder::with_vertices(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        b.add_edge(i, j);
                    }
                }
            }
        }
    }
    let graph = b.build(directed)?;
    let k = k.unwrap_or(graph.vertex_count().max(1) as u32);
    Ok(Instance::singleton(graph, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_instance;

    #[test]
    fn sizes() {
        let p = gen_family(FamilyKind::Path { n: 5 }, None).unwrap();
        assert_eq!((p.graph().vertex_count(), p.graph().edge_count(), p.classes().len()), (5, 4, 4));
        let c = gen_family(FamilyKind::CliqueWithPendants { r: 3, s: 2 }, None).unwrap();
        assert_eq!((c.graph().vertex_count(), c.graph().edge_count()), (9, 9));
        let t = gen_family(FamilyKind::CompleteBinaryTree { depth: 13 }, None).unwrap();
        assert_eq!(t.graph().vertex_count(), 16383);
        assert!(t.graph().is_tree());
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = gen_family(FamilyKind::RandomGraph { n: 12, p: 0.3, seed: 9 }, None).unwrap();
        let b = gen_family(FamilyKind::RandomGraph { n: 12, p: 0.3, seed: 9 }, None).unwrap();
        assert_eq!(write_instance(&a), write_instance(&b));
        let t = gen_family(FamilyKind::RandomTree { n: 20, seed: 4 }, None).unwrap();
        assert!(t.graph().is_tree());
        let d = gen_family(FamilyKind::RandomDag { n: 10, p: 0.5, seed: 1 }, None).unwrap();
        assert!(d.graph().is_dag());
    }

    #[test]
    fn bad_parameters() {
        assert!(gen_family(FamilyKind::Path { n: 0 }, None).is_err());
        assert!(gen_family(FamilyKind::RandomGraph { n: 3, p: 1.5, seed: 0 }, None).is_err());
    }
}
