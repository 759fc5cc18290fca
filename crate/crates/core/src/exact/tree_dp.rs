//! Bottom-up dynamic programme over a rooted tree.
//!
//! For a non-root vertex `v` with parent edge `e↑`, a state `(α, β)` records
//! * `α`: the largest reach inside the subtree of `v` over the vertices that
//!   can still leave the subtree through `e↑` (this includes `v` itself), and
//! * `β`: the number of subtree vertices reached by entering `v` through `e↑`.
//!
//! Only the relative order of the edges at each vertex matters in a tree, so a
//! state is realised by a permutation of the edges incident to `v` together
//! with one realised state per child.

use std::collections::BTreeMap;
use std::time::Instant;

use super::tree_vc::{next_permutation, tree_view};
use super::{verify_witness, SolveError, SolveResult, SolveStats};
use crate::model::Instance;

type State = (usize, usize);

const PARENT: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Realisation {
    /// Local order of incident edges: child positions, with `PARENT` for `e↑`.
    perm: Vec<usize>,
    child_states: Vec<State>,
}

struct Rooted {
    parent_edge: Vec<Option<usize>>,
    children: Vec<Vec<(usize, usize)>>,
    post_order: Vec<usize>,
}

fn root_tree(instance: &Instance) -> Rooted {
    let g = instance.graph();
    let n = g.vertex_count();
    let mut parent_edge = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut pre = Vec::with_capacity(n);
    let mut stack = vec![0];
    seen[0] = true;
    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    while let Some(v) = stack.pop() {
        pre.push(v);
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = Some(e);
                children[v].push((w, e));
                stack.push(w);
            }
        }
    }
    pre.reverse();
    Rooted { parent_edge, children, post_order: pre }
}

/// DP layer key while scanning a permutation from its last edge to its first:
/// suffix sum of child β values, best exit candidate α so far, and β of `v`
/// once `e↑` has been passed.
type ScanKey = (usize, usize, Option<usize>);

struct Dp<'a> {
    k: usize,
    rooted: &'a Rooted,
    states: Vec<BTreeMap<State, Realisation>>,
    explored: u64,
}

impl Dp<'_> {
    fn realise(&mut self, v: usize) {
        let is_root = self.rooted.parent_edge[v].is_none();
        let d = self.rooted.children[v].len();
        if !is_root && d == 0 {
            self.states[v].insert((1, 1), Realisation { perm: vec![PARENT], child_states: Vec::new() });
            return;
        }
        let child_states: Vec<Vec<State>> =
            self.rooted.children[v].iter().map(|&(c, _)| self.states[c].keys().copied().collect()).collect();
        if child_states.iter().any(|s| s.is_empty()) {
            return;
        }
        let mut perm: Vec<usize> = (0..d).collect();
        if !is_root {
            // PARENT sorts last, so the first permutation is the identity on children
            perm.push(PARENT);
        }
        let k = self.k;
        loop {
            self.explored += 1;
            // layers[i] holds keys reachable after scanning perm[len-i..]
            let mut layers: Vec<BTreeMap<ScanKey, (ScanKey, Option<State>)>> = Vec::with_capacity(perm.len() + 1);
            let mut start = BTreeMap::new();
            start.insert((0, 0, None), ((0, 0, None), None));
            layers.push(start);
            for &slot in perm.iter().rev() {
                let mut next = BTreeMap::new();
                for &(sum, best, beta) in layers.last().unwrap().keys() {
                    let key = (sum, best, beta);
                    if slot == PARENT {
                        next.entry((sum, best, Some(1 + sum))).or_insert((key, None));
                        continue;
                    }
                    for &(a, b) in &child_states[slot] {
                        if 1 + a + sum > k || 1 + sum + b > k {
                            continue;
                        }
                        let exit = if beta.is_some() { best.max(a + 1 + sum) } else { best };
                        next.entry((sum + b, exit, beta)).or_insert((key, Some((a, b))));
                    }
                }
                layers.push(next);
            }
            let finals: Vec<ScanKey> = layers.last().unwrap().keys().copied().collect();
            for end in finals {
                let (sum, best, beta) = end;
                let state = if is_root { (0, 0) } else { (best.max(1 + sum), beta.expect("parent slot scanned")) };
                if self.states[v].contains_key(&state) {
                    continue;
                }
                let mut chosen = vec![(0, 0); d];
                let mut key = end;
                for (depth, &slot) in perm.iter().enumerate() {
                    let (prev, pick) = layers[perm.len() - depth][&key];
                    if let Some(s) = pick {
                        chosen[slot] = s;
                    }
                    key = prev;
                }
                self.states[v].insert(state, Realisation { perm: perm.clone(), child_states: chosen });
                if is_root {
                    return;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    /// Edge sequence of the subtree of `v` (including `e↑`) realising `state`.
    fn sequence(&self, v: usize, state: State) -> Vec<usize> {
        let real = &self.states[v][&state];
        let mut pending: Vec<(Vec<usize>, usize)> = self.rooted.children[v]
            .iter()
            .zip(&real.child_states)
            .map(|(&(c, e), &s)| {
                let seq = self.sequence(c, s);
                let cut = seq.iter().position(|&x| x == e).expect("child sequence contains its parent edge") + 1;
                (seq, cut)
            })
            .collect();
        let mut out = Vec::new();
        for &slot in &real.perm {
            if slot == PARENT {
                out.push(self.rooted.parent_edge[v].unwrap());
            } else {
                let (seq, cut) = &pending[slot];
                out.extend_from_slice(&seq[..*cut]);
            }
        }
        for &slot in &real.perm {
            if slot != PARENT {
                let (seq, cut) = &mut pending[slot];
                out.extend_from_slice(&seq[*cut..]);
                seq.clear();
                *cut = 0;
            }
        }
        out
    }
}

fn decide_tree(instance: &Instance, k: usize) -> Result<(Option<Vec<usize>>, u64, usize), SolveError> {
    let g = instance.graph();
    let non_leaf = (0..g.edge_count()).filter(|&e| !g.is_leaf_edge(e)).count();
    if k <= g.max_degree() {
        return Ok((None, 0, non_leaf));
    }
    let rooted = root_tree(instance);
    let mut dp = Dp { k, rooted: &rooted, states: vec![BTreeMap::new(); g.vertex_count()], explored: 0 };
    for &v in &rooted.post_order {
        dp.realise(v);
    }
    if dp.states[0].is_empty() {
        return Ok((None, dp.explored, non_leaf));
    }
    let order = dp.sequence(0, (0, 0));
    Ok((Some(order), dp.explored, non_leaf))
}

/// Decision for the instance threshold `k`. `explored` counts the local
/// permutations examined.
pub fn solve_tree_dp(instance: &Instance) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let view = tree_view(instance, "the tree DP")?;
    let (order, explored, non_leaf) = decide_tree(instance, instance.k() as usize)?;
    let witness = match order {
        Some(order) => {
            let w = view.expand(&order);
            if !crate::reach::decide(instance, &w).map_err(|e| SolveError::Internal(e.to_string()))? {
                return Err(SolveError::Internal("tree DP witness exceeds the threshold".into()));
            }
            Some(w)
        }
        None => None,
    };
    Ok(SolveResult {
        decision: witness.is_some(),
        optimal_value: None,
        witness,
        stats: SolveStats { explored, elapsed: started.elapsed(), non_leaf_edges: Some(non_leaf) },
    })
}

/// Smallest threshold the DP accepts, found by increasing `k` from `Δ + 1`.
pub fn solve_tree_dp_optimise(instance: &Instance) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let view = tree_view(instance, "the tree DP")?;
    let g = instance.graph();
    let mut total = 0;
    let mut k = g.max_degree() + 1;
    loop {
        let (order, explored, non_leaf) = decide_tree(instance, k)?;
        total += explored;
        if let Some(order) = order {
            let witness = view.expand(&order);
            verify_witness(instance, &witness, k)?;
            return Ok(SolveResult {
                decision: k <= instance.k() as usize,
                optimal_value: Some(k),
                witness: Some(witness),
                stats: SolveStats { explored: total, elapsed: started.elapsed(), non_leaf_edges: Some(non_leaf) },
            });
        }
        if k >= g.vertex_count() {
            return Err(SolveError::Internal(format!("no ordering found with threshold {k}")));
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::undirected(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    #[test]
    fn p5_threshold_four() {
        let inst = Instance::singleton(path(5), 4).unwrap();
        let yes = solve_tree_dp(&inst).unwrap();
        assert!(yes.decision);
        let w = yes.witness.unwrap();
        assert_eq!(crate::reach::reachability_report(&inst, &w).unwrap().extreme_value, 4);
        assert!(!solve_tree_dp(&inst.with_k(3)).unwrap().decision);
        assert_eq!(solve_tree_dp_optimise(&inst).unwrap().optimal_value, Some(4));
    }

    #[test]
    fn single_edge() {
        let inst = Instance::singleton(path(2), 2).unwrap();
        assert!(solve_tree_dp(&inst).unwrap().decision);
        assert!(!solve_tree_dp(&inst.with_k(1)).unwrap().decision);
    }

    #[test]
    fn single_vertex() {
        let inst = Instance::singleton(Graph::undirected(1, vec![]).unwrap(), 1).unwrap();
        assert!(solve_tree_dp(&inst).unwrap().decision);
        assert_eq!(solve_tree_dp_optimise(&inst).unwrap().optimal_value, Some(1));
    }

    #[test]
    fn long_paths_need_four() {
        for n in 5..12 {
            let inst = Instance::singleton(path(n), 4).unwrap();
            assert!(solve_tree_dp(&inst).unwrap().decision, "P{n}");
            assert!(!solve_tree_dp(&inst.with_k(3)).unwrap().decision, "P{n}");
        }
    }

    #[test]
    fn spider_matches_brute_force() {
        let g = Graph::undirected(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let inst = Instance::singleton(g, 7).unwrap();
        let brute = super::super::solve_brute_force(
            &inst,
            super::super::SolveMode::Optimise,
            &super::super::BruteForceConfig::default(),
        )
        .unwrap();
        assert_eq!(solve_tree_dp_optimise(&inst).unwrap().optimal_value, brute.optimal_value);
    }
}
