//! Directed min-max instances (threshold 9) from (3,4)-SAT.
//!
//! Each literal `ℓ` of a variable gets a directed path
//! `v_{ℓ,1} -> v_{ℓ,2} -> v_{ℓ,3}`; clause `c_j` points at `v_{ℓ,1}` for its
//! literals. Every clause/literal pair contributes four classes: two copies
//! of `{c_j v_{ℓ,1}, v_{ℓ,2} v_{ℓ,3}, v_{¬ℓ,1} v_{¬ℓ,2}}` (labelled `ℓ`) and two
//! copies of `{c_j v_{ℓ,1}, v_{ℓ,1} v_{ℓ,2}, v_{¬ℓ,2} v_{¬ℓ,3}}` (labelled `¬ℓ`).

use std::collections::{BTreeMap, BTreeSet};

use super::{BuildError, NamedVertexMap, Reduction};
use crate::graph::GraphBuilder;
use crate::model::{EdgeClassSystem, Instance, Objective, Ordering, Semantics};

/// CNF formula; literals are non-zero, `-x` negates variable `x` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    /// Every clause has three distinct variables and no variable occurs in
    /// more than four clauses.
    pub fn check_34(&self) -> Result<(), BuildError> {
        let mut occurrences: BTreeMap<u32, usize> = BTreeMap::new();
        for (j, clause) in self.clauses.iter().enumerate() {
            let vars: BTreeSet<u32> = clause.iter().map(|l| l.unsigned_abs()).collect();
            if clause.len() != 3 || vars.len() != 3 {
                return Err(BuildError::MalformedFormula(format!("clause {} needs three distinct variables", j + 1)));
            }
            for &v in &vars {
                if v == 0 || v as usize > self.variables {
                    return Err(BuildError::MalformedFormula(format!("clause {} uses unknown variable {v}", j + 1)));
                }
                let count = occurrences.entry(v).or_default();
                *count += 1;
                if *count > 4 {
                    return Err(BuildError::MalformedFormula(format!("variable {v} occurs in more than four clauses")));
                }
            }
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }
}

fn literal_name(lit: i32) -> String {
    if lit > 0 {
        format!("x_{lit}")
    } else {
        format!("¬x_{}", -lit)
    }
}

/// Label literal of every class, in class order: per clause, per literal
/// `ℓ` in clause order, `[ℓ, ℓ, ¬ℓ, ¬ℓ]`.
pub fn sat34_class_literals(cnf: &Cnf) -> Vec<i32> {
    cnf.clauses.iter().flat_map(|c| c.iter().flat_map(|&l| [l, l, -l, -l])).collect()
}

/// Builds the instance on the variables that occur in the formula.
pub fn reduce_34sat(formula: &Cnf) -> Result<Reduction, BuildError> {
    formula.check_34()?;
    let used: BTreeSet<u32> = formula.clauses.iter().flatten().map(|l| l.unsigned_abs()).collect();
    let mut b = GraphBuilder::new();
    let mut names = NamedVertexMap::new();
    let clause_vertex: Vec<usize> = (0..formula.clauses.len())
        .map(|j| {
            let c = b.add_vertex();
            names.insert(format!("c_{}", j + 1), c);
            c
        })
        .collect();
    // path vertices and the two path edges of every literal
    let mut path: BTreeMap<i32, ([usize; 3], [usize; 2])> = BTreeMap::new();
    for &x in &used {
        for lit in [x as i32, -(x as i32)] {
            let vs = [b.add_vertex(), b.add_vertex(), b.add_vertex()];
            for (p, &v) in vs.iter().enumerate() {
                names.insert(format!("v_{{{},{}}}", literal_name(lit), p + 1), v);
            }
            let es = [b.add_edge(vs[0], vs[1]), b.add_edge(vs[1], vs[2])];
            path.insert(lit, (vs, es));
        }
    }
    let mut classes = Vec::with_capacity(12 * formula.clauses.len());
    for (j, clause) in formula.clauses.iter().enumerate() {
        for &lit in clause {
            let entry = b.add_edge(clause_vertex[j], path[&lit].0[0]);
            let (_, own) = path[&lit];
            let (_, neg) = path[&-lit];
            let positive = vec![entry, own[1], neg[0]];
            let negative = vec![entry, own[0], neg[1]];
            classes.extend([positive.clone(), positive, negative.clone(), negative]);
        }
    }
    let graph = b.build(true)?;
    assert!(graph.is_dag(), "clause graph must be acyclic");
    assert!(graph.max_degree() <= 5, "clause graph degree exceeds five");
    let instance = Instance::new(graph, EdgeClassSystem::new(classes), Objective::MinMax, Semantics::Strict, None, 9)?;
    Ok(Reduction { instance, names })
}

/// Ordering from a truth assignment: classes whose label literal is true take
/// the first half of the timesteps (in class order), the rest follow.
pub fn sat34_assignment_ordering(formula: &Cnf, assignment: &[bool]) -> Ordering {
    let labels = sat34_class_literals(formula);
    let truth = |l: i32| assignment[l.unsigned_abs() as usize - 1] == (l > 0);
    let schedule: Vec<usize> = (0..labels.len())
        .filter(|&c| truth(labels[c]))
        .chain((0..labels.len()).filter(|&c| !truth(labels[c])))
        .collect();
    Ordering::from_schedule(&schedule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reach::reachability_report;

    #[test]
    fn single_clause_counts() {
        let cnf = Cnf { variables: 3, clauses: vec![vec![1, 2, 3]] };
        let red = reduce_34sat(&cnf).unwrap();
        let g = red.instance.graph();
        assert_eq!((g.vertex_count(), g.edge_count(), red.instance.classes().len()), (19, 15, 12));
        let o = sat34_assignment_ordering(&cnf, &[true, false, false]);
        assert!(reachability_report(&red.instance, &o).unwrap().extreme_value <= 9);
        assert_eq!(red.names["c_1"], 0);
        assert!(red.names.get("v_{¬x_2,3}").is_some());
    }

    #[test]
    fn malformed_formulas() {
        let repeated = Cnf { variables: 3, clauses: vec![vec![1, -1, 2]] };
        assert!(reduce_34sat(&repeated).is_err());
        let five = Cnf { variables: 9, clauses: (0..5).map(|i| vec![1, 2 + i, 3 + i]).collect() };
        assert!(reduce_34sat(&five).is_err());
    }
}
