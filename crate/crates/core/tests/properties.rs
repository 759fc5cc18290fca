mod oracle;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;
use tempord::approx::{
    approx_general, approx_singleton, color_interaction_graph, compose_orderings, edge_coloring_delta_plus_one,
};
use tempord::io::{parse_instance, parse_ordering, write_instance, write_ordering};
use tempord::{
    interaction_graph, leaves_first_normalize, reach_set, reachability_report, Instance, Objective, Ordering, Semantics,
};

fn as_set(v: Vec<usize>) -> BTreeSet<usize> {
    v.into_iter().collect()
}

/// A valid ordering for the instance (list-respecting when lists exist).
fn some_ordering(rng: &mut rand_chacha::ChaCha8Rng, inst: &Instance) -> Option<Ordering> {
    match inst.time_lists() {
        None => Some(Ordering::new(oracle::random_permutation(rng, inst.classes().len()))),
        Some(lists) => {
            let all = oracle::list_assignments(lists.lists());
            (!all.is_empty()).then(|| Ordering::new(all[rng.gen_range(0..all.len())].clone()))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reach_set_matches_naive_search(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 7, 6, true);
        let Some(o) = some_ordering(&mut rng, &inst) else { return Ok(()) };
        let after = rng.gen_range(0..=inst.classes().len() as u32 + 1);
        for v in 0..inst.graph().vertex_count() {
            let ours = as_set(reach_set(&inst, &o, v, after).unwrap());
            prop_assert_eq!(ours, oracle::reach(&inst, o.times(), v, after));
        }
    }

    #[test]
    fn reach_inside_static_reach_and_monotone_in_after(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 8, 8, false);
        let o = some_ordering(&mut rng, &inst).unwrap();
        let g = inst.graph();
        for v in 0..g.vertex_count() {
            let mut previous = as_set(reach_set(&inst, &o, v, 0).unwrap());
            prop_assert!(previous.is_subset(&oracle::static_reach(g, v)));
            for after in 1..=inst.classes().len() as u32 + 1 {
                let now = as_set(reach_set(&inst, &o, v, after).unwrap());
                prop_assert!(now.is_subset(&previous));
                previous = now;
            }
        }
    }

    #[test]
    fn strict_inside_weak(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 8, 8, false);
        let o = some_ordering(&mut rng, &inst).unwrap();
        let strict = inst.with_semantics(Semantics::Strict);
        let weak = inst.with_semantics(Semantics::Weak);
        for v in 0..inst.graph().vertex_count() {
            let s = as_set(reach_set(&strict, &o, v, 0).unwrap());
            let w = as_set(reach_set(&weak, &o, v, 0).unwrap());
            prop_assert!(s.is_subset(&w));
        }
    }

    #[test]
    fn degree_observations(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 8, 8, false);
        let o = some_ordering(&mut rng, &inst).unwrap();
        let g = inst.graph();
        let report = reachability_report(&inst, &o).unwrap();
        for v in 0..g.vertex_count() {
            let set = as_set(reach_set(&inst, &o, v, 0).unwrap());
            prop_assert!(set.contains(&v));
            for &(w, _) in g.incident_out(v) {
                prop_assert!(set.contains(&w));
            }
            prop_assert_eq!(report.per_vertex_size[v], set.len());
        }
    }

    #[test]
    fn leaf_and_first_edge_observations(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let mut inst = oracle::random_instance(&mut rng, 8, 8, false);
        if inst.graph().is_directed() {
            inst = tempord::Instance::singleton(oracle::random_tree(&mut rng, 7), 7).unwrap();
        }
        let o = some_ordering(&mut rng, &inst).unwrap();
        let g = inst.graph();
        let first_active = |e: usize| {
            inst.classes().classes().iter().enumerate().filter(|(_, c)| c.contains(&e)).map(|(i, _)| o.time(i)).min()
        };
        for v in 0..g.vertex_count() {
            let rv = as_set(reach_set(&inst, &o, v, 0).unwrap());
            for &(u, e) in g.incident_out(v) {
                let t1 = first_active(e).unwrap();
                let others_later = g
                    .incident_out(v)
                    .iter()
                    .filter(|&&(_, f)| f != e)
                    .all(|&(_, f)| first_active(f).unwrap() > t1);
                // a shared class with another edge at v makes that edge active at t1 too
                if g.degree(v) == 1 || others_later {
                    let ru = as_set(reach_set(&inst, &o, u, 0).unwrap());
                    prop_assert!(rv.is_subset(&ru), "v={} u={}", v, u);
                }
            }
        }
    }

    #[test]
    fn independent_swap_keeps_every_reach_set(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 8, 8, false);
        let h = inst.classes().len();
        if h < 2 {
            return Ok(());
        }
        let o = some_ordering(&mut rng, &inst).unwrap();
        let hg = interaction_graph(&inst);
        let schedule = o.schedule();
        for slot in 0..h - 1 {
            let (i, j) = (schedule[slot], schedule[slot + 1]);
            if hg.neighbors(i).any(|x| x == j) {
                continue;
            }
            let mut times = o.times().to_vec();
            times.swap(i, j);
            let swapped = Ordering::new(times);
            for v in 0..inst.graph().vertex_count() {
                prop_assert_eq!(reach_set(&inst, &o, v, 0).unwrap(), reach_set(&inst, &swapped, v, 0).unwrap());
            }
        }
    }

    #[test]
    fn leaves_first_never_hurts(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let n = rng.gen_range(2..=9);
        let inst = Instance::singleton(oracle::random_tree(&mut rng, n), n as u32).unwrap();
        let o = Ordering::new(oracle::random_permutation(&mut rng, inst.classes().len()));
        let normal = leaves_first_normalize(&inst, &o).unwrap();
        let before = reachability_report(&inst, &o).unwrap().extreme_value;
        let after = reachability_report(&inst, &normal).unwrap().extreme_value;
        prop_assert!(after <= before);
        let g = inst.graph();
        let leaf_times: Vec<u32> = (0..g.edge_count()).filter(|&e| g.is_leaf_edge(e)).map(|e| normal.time(e)).collect();
        let inner_times: Vec<u32> = (0..g.edge_count()).filter(|&e| !g.is_leaf_edge(e)).map(|e| normal.time(e)).collect();
        prop_assert!(leaf_times.iter().all(|l| inner_times.iter().all(|i| l < i)));
    }

    #[test]
    fn composed_ordering_within_block_product(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let n = rng.gen_range(2..=8);
        let inst = Instance::singleton(oracle::random_tree(&mut rng, n), n as u32).unwrap();
        let h = inst.classes().len();
        let (a, b): (Vec<usize>, Vec<usize>) = (0..h).partition(|_| rng.gen_bool(0.5));
        let mut blocks = Vec::new();
        let mut bound = 1usize;
        for part in [a, b] {
            if part.is_empty() {
                continue;
            }
            let sub = inst.restrict(&part).unwrap();
            let o = Ordering::new(oracle::random_permutation(&mut rng, part.len()));
            bound *= reachability_report(&sub, &o).unwrap().max_value();
            blocks.push((part, o));
        }
        let composed = compose_orderings(&inst, &blocks).unwrap();
        prop_assert!(reachability_report(&inst, &composed).unwrap().max_value() <= bound);
    }

    #[test]
    fn edge_colourings_are_proper(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let n = rng.gen_range(1..=50);
        let p = rng.gen_range(0.02..0.5);
        let g = oracle::random_graph(&mut rng, n, p, false);
        let c = edge_coloring_delta_plus_one(&g).unwrap();
        prop_assert!(c.is_proper_edge_coloring(&g));
        prop_assert!(c.color_count <= g.max_degree() + 1);
        if g.bipartition().is_some() {
            prop_assert!(c.color_count <= g.max_degree());
        }
    }

    #[test]
    fn interaction_colourings_are_proper(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let n = rng.gen_range(1..=30);
        let p = rng.gen_range(0.05..0.6);
        let h = oracle::random_graph(&mut rng, n, p, false);
        let c = color_interaction_graph(&h);
        prop_assert!(c.is_proper_vertex_coloring(&h));
        prop_assert!(c.color_count <= (h.max_degree() + 1).max(2));
    }

    #[test]
    fn approximation_bounds_hold(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.05..0.5);
        let g = oracle::random_graph(&mut rng, n, p, false);
        let inst = Instance::singleton(g, n as u32).unwrap();
        let a = approx_singleton(&inst).unwrap();
        let reached = reachability_report(&inst, &a.ordering).unwrap().max_value();
        prop_assert!(num_bigint::BigUint::from(reached) <= a.bound);

        let general = oracle::random_instance(&mut rng, 9, 8, false)
            .with_semantics(Semantics::Strict)
            .with_objective(Objective::MinMax);
        let b = approx_general(&general).unwrap();
        let reached = reachability_report(&general, &b.ordering).unwrap().max_value();
        prop_assert!(num_bigint::BigUint::from(reached) <= b.bound);
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let inst = oracle::random_instance(&mut rng, 9, 9, true);
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(write_instance(&back), text);
        let o = Ordering::new(oracle::random_permutation(&mut rng, inst.classes().len()));
        prop_assert_eq!(parse_ordering(&write_ordering(&o)).unwrap(), o);
    }
}
