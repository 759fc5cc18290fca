//! Temporal ordering of edge classes to control reachability.
//!
//! An [`Instance`] pairs a static graph with classes of edges that become
//! active together. An [`Ordering`] assigns each class a distinct timestep;
//! vertices then reach others only along paths whose edges are active at
//! increasing times. The crate evaluates orderings, solves the min-max and
//! max-min problems exactly where that is tractable, builds orderings with
//! guaranteed bounds, and generates benchmark and reduction instances.

pub mod approx;
pub mod error;
pub mod exact;
pub mod graph;
pub mod instances;
pub mod io;
pub mod model;
pub mod parallel;
pub mod reach;

pub use error::{InvalidInstance, OrderingError, Violation};
pub use graph::{Graph, GraphBuilder};
pub use model::{EdgeClassSystem, Instance, InstanceCandidate, Objective, Ordering, Semantics, TimeLists};
pub use parallel::Parallelism;
pub use reach::{
    decide, incidence_interaction_graph, interaction_graph, leaves_first_normalize, reach_set, reachability_report,
    ReachabilityReport,
};
