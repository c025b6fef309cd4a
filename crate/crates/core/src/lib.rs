//! Core algorithms for edge-colored graphs: rainbow substructure search,
//! color-degree machinery, instance generators, and a theorem verification
//! harness with counterexample mining.
//!
//! Everything in this crate is pure and deterministic: the same inputs
//! (including seeds and search budgets) always produce the same outputs,
//! so campaign reports can be replayed bit-for-bit. File IO, wall-clock
//! timing, and the worker pool live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod audit;
pub mod colordeg;
pub mod detect;
pub mod generate;
pub mod graph;
pub mod lemmas;
pub mod mine;
pub mod oracle;
pub mod report;
pub mod verify;

pub use colordeg::{color_degree, min_color_degree, ColorDegreeError};
pub use detect::{RainbowWitness, SearchBudget, WitnessKind};
pub use graph::{ColorSet, EdgeColoredGraph, GraphError, ParseError, VertexSet};
pub use verify::{Params, TheoremId};
