use std::fmt;

use thiserror::Error;

/// A single violated instance invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("index-out-of-range: edge {edge} references vertex {vertex} but there are {vertex_count} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    #[error("self-loop: edge {edge} joins vertex {vertex} to itself")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("duplicate-edge: edge {edge} repeats edge {first}")]
    DuplicateEdge { edge: usize, first: usize },
    #[error("empty-class-list: no classes given for {edge_count} edges")]
    EmptyClassList { edge_count: usize },
    #[error("bad-class-edge-index: class {class} references edge {edge} but there are {edge_count} edges")]
    BadClassEdgeIndex { class: usize, edge: usize, edge_count: usize },
    #[error("uncovered-edge: edge {edge} belongs to no class")]
    UncoveredEdge { edge: usize },
    #[error("empty-time-list: class {class} has no permitted timestep")]
    EmptyTimeList { class: usize },
    #[error("time-list-count: {found} time lists given for {expected} classes")]
    TimeListCount { expected: usize, found: usize },
    #[error("zero-time: class {class} permits timestep 0; timesteps start at 1")]
    ZeroTime { class: usize },
    #[error("bad-threshold: k must be at least 1")]
    ZeroThreshold,
}

/// The complete list of invariants an instance candidate violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct InvalidInstance(pub Vec<Violation>);

impl fmt::Display for InvalidInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid instance ({} violation(s))", self.0.len())?;
        for v in &self.0 {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

/// Reasons an ordering does not fit an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("ordering assigns {found} timesteps but the instance has {expected} classes")]
    LengthMismatch { expected: usize, found: usize },
    #[error("injectivity: classes {first} and {second} share timestep {time}")]
    DuplicateTime { time: u32, first: usize, second: usize },
    #[error("class {class} has timestep {time}, outside 1..={h}")]
    TimeOutOfRange { class: usize, time: u32, h: usize },
    #[error("class {class} has timestep {time}, not in its permitted list {list:?}")]
    NotInList { class: usize, time: u32, list: Vec<u32> },
    #[error("vertex {vertex} out of range ({vertex_count} vertices)")]
    BadSource { vertex: usize, vertex_count: usize },
}
