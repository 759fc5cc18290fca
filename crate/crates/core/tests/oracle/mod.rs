//! Reference implementations for tests: naive temporal search, exhaustive
//! ordering enumeration, small-graph enumeration and source-problem solvers.
//! Nothing here calls into the library's reachability code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempord::{Graph, Instance, InstanceCandidate, Objective, Semantics};

/// Vertices reachable from `source` by time-respecting paths whose first
/// edge is active strictly after `after`; depth-first over (vertex, arrival).
pub fn reach(instance: &Instance, times: &[u32], source: usize, after: u32) -> BTreeSet<usize> {
    let g = instance.graph();
    let weak = instance.semantics() == Semantics::Weak;
    let mut active: Vec<Vec<u32>> = vec![Vec::new(); g.edge_count()];
    for (c, class) in instance.classes().classes().iter().enumerate() {
        for &e in class {
            active[e].push(times[c]);
        }
    }
    let mut seen_state = HashSet::new();
    let mut reached = BTreeSet::from([source]);
    // (vertex, arrival time, is the start)
    let mut stack = vec![(source, after, true)];
    while let Some((v, at, start)) = stack.pop() {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let next = if a == v {
                b
            } else if b == v && !g.is_directed() {
                a
            } else {
                continue;
            };
            for &t in &active[e] {
                let usable = if start || !weak { t > at } else { t >= at };
                if usable && seen_state.insert((next, t)) {
                    reached.insert(next);
                    stack.push((next, t, false));
                }
            }
        }
    }
    reached
}

pub fn sizes(instance: &Instance, times: &[u32]) -> Vec<usize> {
    (0..instance.graph().vertex_count()).map(|v| reach(instance, times, v, 0).len()).collect()
}

/// Largest (min-max) or smallest (max-min) reach size.
pub fn extreme(instance: &Instance, times: &[u32]) -> usize {
    let s = sizes(instance, times);
    match instance.objective() {
        Objective::MinMax => s.into_iter().max().unwrap_or(0),
        Objective::MaxMin => s.into_iter().min().unwrap_or(0),
    }
}

pub fn max_reach(instance: &Instance, times: &[u32]) -> usize {
    sizes(instance, times).into_iter().max().unwrap_or(0)
}

/// All bijections onto `1..=h` as times vectors, in lexicographic order.
pub fn permutations(h: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for t in 0..used.len() {
            if !used[t] {
                used[t] = true;
                prefix.push(t as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; h], &mut out);
    out
}

/// Every injective choice `times[i] ∈ lists[i]`, lexicographic.
pub fn list_assignments(lists: &[Vec<u32>]) -> Vec<Vec<u32>> {
    fn go(lists: &[Vec<u32>], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == lists.len() {
            out.push(prefix.clone());
            return;
        }
        let mut options = lists[prefix.len()].clone();
        options.sort_unstable();
        options.dedup();
        for t in options {
            if !prefix.contains(&t) {
                prefix.push(t);
                go(lists, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(lists, &mut Vec::new(), &mut out);
    out
}

pub fn candidate_orderings(instance: &Instance) -> Vec<Vec<u32>> {
    match instance.time_lists() {
        Some(lists) => list_assignments(lists.lists()),
        None => permutations(instance.classes().len()),
    }
}

/// Best extreme value over every ordering and the lexicographically first
/// ordering attaining it; `None` when no ordering exists.
pub fn optimum(instance: &Instance) -> Option<(usize, Vec<u32>)> {
    let mut best: Option<(usize, Vec<u32>)> = None;
    for times in candidate_orderings(instance) {
        let v = extreme(instance, &times);
        let better = match (&best, instance.objective()) {
            (None, _) => true,
            (Some((b, _)), Objective::MinMax) => v < *b,
            (Some((b, _)), Objective::MaxMin) => v > *b,
        };
        if better {
            best = Some((v, times));
        }
    }
    best
}

pub fn meets(instance: &Instance, value: usize) -> bool {
    match instance.objective() {
        Objective::MinMax => value <= instance.k() as usize,
        Objective::MaxMin => value >= instance.k() as usize,
    }
}

pub fn static_reach(g: &Graph, source: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([source]);
    let mut stack = vec![source];
    while let Some(v) = stack.pop() {
        for &(a, b) in g.edges() {
            let next = if a == v {
                b
            } else if b == v && !g.is_directed() {
                a
            } else {
                continue;
            };
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}

// ---------------------------------------------------------------- generators

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple graph with exactly the requested shape.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, directed: bool) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    if directed {
        Graph::directed(n, edges).unwrap()
    } else {
        Graph::undirected(n, edges).unwrap()
    }
}

/// Random labelled tree on `n` vertices with shuffled edge order.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for i in (1..edges.len()).rev() {
        edges.swap(i, rng.gen_range(0..=i));
    }
    Graph::undirected(n, edges).unwrap()
}

/// Random DAG: arcs only from lower to higher label, then labels permuted.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        label.swap(i, rng.gen_range(0..=i));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    let edges = pairs[..m].iter().map(|&(i, j)| (label[i], label[j])).collect();
    Graph::directed(n, edges).unwrap()
}

/// General instance: random classes covering every edge (repeats allowed),
/// random semantics and objective, optional time lists.
pub fn random_instance(rng: &mut ChaCha8Rng, max_n: usize, max_h: usize, lists: bool) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let directed = rng.gen_bool(0.4);
    let p = rng.gen_range(0.2..0.7);
    let g = random_graph(rng, n, p, directed);
    let m = g.edge_count();
    let h = if m == 0 { rng.gen_range(0..=1) } else { rng.gen_range(1..=max_h) };
    let mut classes: Vec<Vec<usize>> = (0..h).map(|_| (0..m).filter(|_| rng.gen_bool(0.3)).collect()).collect();
    for e in 0..m {
        if !classes.iter().any(|c| c.contains(&e)) {
            let c = rng.gen_range(0..h);
            classes[c].push(e);
            classes[c].sort_unstable();
        }
    }
    let time_lists = (lists && rng.gen_bool(0.5)).then(|| {
        (0..h)
            .map(|_| {
                let mut l: Vec<u32> = (1..=(h as u32 + 2)).filter(|_| rng.gen_bool(0.5)).collect();
                if l.is_empty() {
                    l.push(rng.gen_range(1..=h as u32 + 2));
                }
                l
            })
            .collect()
    });
    Instance::validate(InstanceCandidate {
        directed,
        vertex_count: n,
        edges: g.edges().to_vec(),
        classes,
        objective: if rng.gen_bool(0.3) { Objective::MaxMin } else { Objective::MinMax },
        semantics: if rng.gen_bool(0.3) { Semantics::Weak } else { Semantics::Strict },
        time_lists,
        k: rng.gen_range(1..=n as u32 + 1),
    })
    .unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, h: usize) -> Vec<u32> {
    let mut t: Vec<u32> = (1..=h as u32).collect();
    for i in (1..h).rev() {
        t.swap(i, rng.gen_range(0..=i));
    }
    t
}

// ------------------------------------------------------- small-graph catalogue

fn relabel(edges: &[(usize, usize)], perm: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    out
}

fn vertex_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n).into_iter().map(|p| p.into_iter().map(|t| t as usize - 1).collect()).collect()
}

/// One representative per isomorphism class of simple undirected graphs on
/// `n` vertices (n ≤ 6).
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = vertex_permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let canon = perms.iter().map(|p| relabel(&edges, p)).min().unwrap();
        if seen.insert(canon) {
            out.push(Graph::undirected(n, edges).unwrap());
        }
    }
    out
}

/// One representative per isomorphism class of trees on `n` vertices, by
/// minimum rooted canonical string over all roots.
pub fn trees_up_to_iso(n: usize) -> Vec<Graph> {
    fn canon(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| canon(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    if n == 1 {
        return vec![Graph::undirected(1, vec![]).unwrap()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // every labelled tree arises from a parent array with parent[i] < i
    let mut parent = vec![0usize; n];
    loop {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (parent[i], i)).collect();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let key = (0..n).map(|r| canon(&adj, r, usize::MAX)).min().unwrap();
        if seen.insert(key) {
            out.push(Graph::undirected(n, edges).unwrap());
        }
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            if parent[i] + 1 < i {
                parent[i] += 1;
                break;
            }
            parent[i] = 0;
            i -= 1;
        }
    }
}

// ------------------------------------------------------- source problems

pub fn has_clique(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    let adj = g.edge_lookup();
    let joined = |a: usize, b: usize| adj.contains(&(a, b)) || adj.contains(&(b, a));
    (0u32..(1 << n)).any(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        vs.len() == k && vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| joined(a, b)))
    })
}

pub fn vertex_cover_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..(1 << n))
        .filter(|mask| g.edges().iter().all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Satisfying assignments of a CNF over `variables` variables.
pub fn satisfying_assignments(variables: usize, clauses: &[Vec<i32>]) -> Vec<Vec<bool>> {
    (0u32..(1 << variables))
        .map(|mask| (0..variables).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|a| clauses.iter().all(|c| c.iter().any(|&l| a[l.unsigned_abs() as usize - 1] == (l > 0))))
        .collect()
}
