//! Orderings with guaranteed reachability bounds, built from colourings.
//!
//! Scheduling the colour classes of a proper colouring one after another
//! means each block on its own lets a vertex reach at most `d + 1` others
//! (`d = 1` for single edges); composing `c` blocks multiplies these bounds.

mod coloring;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

pub use coloring::{color_interaction_graph, edge_coloring_delta_plus_one, Coloring, DirectedInput};

use crate::model::{Instance, Objective, Ordering, Semantics};
use crate::reach::{incidence_interaction_graph, interaction_graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not-a-partition: class {class} {problem}")]
    NotAPartition { class: usize, problem: &'static str },
    #[error("block {block}: sub-ordering must be a bijection onto 1..={len}")]
    BadBlockOrdering { block: usize, len: usize },
}

/// Exact non-negative fraction, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub numer: BigUint,
    pub denom: BigUint,
}

impl Ratio {
    pub fn new(numer: BigUint, denom: BigUint) -> Self {
        let g = numer.gcd(&denom);
        Self { numer: numer / &g, denom: denom / g }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == BigUint::from(1u32) {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Concatenates per-block orderings: block `i` takes the timesteps right
/// after those of blocks `0..i`, keeping its internal order. Each block is a
/// list of class indices; its ordering ranks those classes `1..=len` in list
/// order. Blocks must partition the classes.
pub fn compose_orderings(instance: &Instance, blocks: &[(Vec<usize>, Ordering)]) -> Result<Ordering, ApproxError> {
    let h = instance.classes().len();
    let mut times = vec![0u32; h];
    let mut offset = 0u32;
    for (b, (classes, sub)) in blocks.iter().enumerate() {
        let len = classes.len();
        let mut seen = vec![false; len];
        if sub.len() != len
            || sub
                .times()
                .iter()
                .any(|&t| t == 0 || t as usize > len || std::mem::replace(&mut seen[t as usize - 1], true))
        {
            return Err(ApproxError::BadBlockOrdering { block: b, len });
        }
        for (j, &c) in classes.iter().enumerate() {
            if c >= h {
                return Err(ApproxError::NotAPartition { class: c, problem: "does not exist" });
            }
            if times[c] != 0 {
                return Err(ApproxError::NotAPartition { class: c, problem: "appears in two blocks" });
            }
            times[c] = offset + sub.time(j);
        }
        offset += len as u32;
    }
    if let Some(c) = times.iter().position(|&t| t == 0) {
        return Err(ApproxError::NotAPartition { class: c, problem: "is in no block" });
    }
    Ok(Ordering::new(times))
}

fn block_schedule(coloring: &Coloring) -> Ordering {
    let schedule: Vec<usize> = coloring.classes().into_iter().flatten().collect();
    Ordering::from_schedule(&schedule)
}

fn require_plain_minmax(instance: &Instance) -> Result<(), ApproxError> {
    if instance.objective() != Objective::MinMax || instance.semantics() != Semantics::Strict {
        return Err(ApproxError::Precondition("needs the strict min-max problem".into()));
    }
    if instance.time_lists().is_some() {
        return Err(ApproxError::Precondition("time lists are not supported".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonApprox {
    pub ordering: Ordering,
    pub coloring: Coloring,
    /// `2^colors`: no vertex reaches more under `ordering`.
    pub bound: BigUint,
    /// Worst-case ratio `2^(Δ+1) / (Δ+1)` against the optimum.
    pub ratio: Ratio,
}

/// Edge-colour the graph with at most `Δ + 1` colours and activate the
/// colour classes in turn.
pub fn approx_singleton(instance: &Instance) -> Result<SingletonApprox, ApproxError> {
    require_plain_minmax(instance)?;
    let g = instance.graph();
    if g.is_directed() {
        return Err(ApproxError::Precondition("needs an undirected graph".into()));
    }
    if !instance.is_singleton_system() {
        return Err(ApproxError::Precondition("needs a singleton class system".into()));
    }
    let edge_colors = edge_coloring_delta_plus_one(g).map_err(|e| ApproxError::Precondition(e.to_string()))?;
    // class c holds edge classes[c][0]; colour the classes through their edges
    let colors: Vec<usize> = instance.classes().classes().iter().map(|c| edge_colors.colors[c[0]]).collect();
    let coloring = Coloring { colors, color_count: edge_colors.color_count };
    let delta = g.max_degree() as u32;
    Ok(SingletonApprox {
        ordering: block_schedule(&coloring),
        bound: BigUint::from(2u32).pow(coloring.color_count as u32),
        ratio: Ratio::new(BigUint::from(2u32).pow(delta + 1), BigUint::from(delta + 1)),
        coloring,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralApprox {
    pub ordering: Ordering,
    pub coloring: Coloring,
    /// Largest number of edges of one class at a single vertex.
    pub class_degree: usize,
    /// `(d+1)^colors`.
    pub bound: BigUint,
}

/// Colour the interaction graph and activate the colour classes in turn.
///
/// On directed graphs the in/out interaction rule lets two out-edges of one
/// vertex share a block, so the incidence graph of the classes is coloured
/// instead.
pub fn approx_general(instance: &Instance) -> Result<GeneralApprox, ApproxError> {
    require_plain_minmax(instance)?;
    let conflicts = if instance.graph().is_directed() {
        incidence_interaction_graph(instance)
    } else {
        interaction_graph(instance)
    };
    let coloring = color_interaction_graph(&conflicts);
    let d = instance.classes().max_class_degree(instance.graph());
    Ok(GeneralApprox {
        ordering: block_schedule(&coloring),
        bound: BigUint::from(d as u64 + 1).pow(coloring.color_count as u32),
        class_degree: d,
        coloring,
    })
}
