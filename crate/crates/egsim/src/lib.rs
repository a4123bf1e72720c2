//! Exact simulation of stabilizer states in the extended graph-state
//! representation: a global phase times per-qubit local Cliffords applied to
//! a graph state.
//!
//! The crate provides the exact scalar/Pauli/Clifford algebra, graph
//! rewrites (local complementation, biclique edge products), reduction to a
//! unique canonical form, Clifford gate application driven by a
//! controlled-Pauli dispatch table, Pauli measurement, state merging and
//! splitting, an O(n·d^2) inner product, classification of linearly
//! dependent state triplets, and a dense state-vector oracle used to
//! cross-check everything on small systems.

pub mod algebra;
pub mod gates;
pub mod graph;
pub mod inner;
pub mod oracle;
pub mod state;
pub mod triplets;
pub mod verify;

pub use algebra::{LocalClifford, PauliLetter, PauliOperator, PhaseScalar, SinglePauli, Word};
pub use graph::Graph;
pub use state::{ExtendedGraphState, FormClass};
