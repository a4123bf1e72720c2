//! Exact scalar, Pauli, and single-qubit Clifford algebra.

pub mod clifford;
pub mod cyclotomic;
pub mod pauli;
pub mod scalar;

pub use clifford::{all_cosets, LocalClifford, Word, WordLetter};
pub use pauli::{PauliLetter, PauliOperator, SinglePauli};
pub use scalar::PhaseScalar;
