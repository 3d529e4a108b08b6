//! Dominating set reconfiguration under token sliding, jumping and
//! addition/removal.
//!
//! [`oracle`] decides any instance exactly by breadth-first search over
//! configurations. [`cograph`] and [`dually_chordal`] decide token sliding in
//! polynomial time on their classes and build witness sequences. [`transforms`]
//! holds rule conversions, the hardness gadgets and their generators.

pub mod cograph;
pub mod config;
pub mod dually_chordal;
pub mod error;
pub mod graph;
pub mod oracle;
#[cfg(test)]
mod properties;
pub mod random;
pub mod transforms;

pub use cograph::{
    decide_join, join_sides, recognize_cograph, solve_cograph, solve_join, Answer, Cotree,
    JoinReason, JoinSolver, JoinVerdict,
};
pub use config::{
    apply_move, is_dominating, reverse_sequence, verify_sequence, Configuration, Failure, Instance,
    Move, ReconfSequence, Rule, Verdict,
};
pub use dually_chordal::{
    canonicalize, find_mno, is_mno, mds, mno_from_intervals, mno_from_tree, solve_dually_chordal,
    DcOutcome, Mno, MnoCheck, TriggeredDs,
};
pub use error::{Error, MoveError, Result};
pub use graph::{Graph, Interval, IntervalFamily, Vertex, VertexSet};
pub use oracle::{
    reachable, shortest_distance, Limits, Reachability, ReconfGraph, ReconfGraphStats,
};
