//! The extended graph state container: `scalar · ⊗_i C_i · |G>`, together
//! with reduction to the unique canonical form, support computation,
//! canonical-form enumeration, and (de)serialization.

mod reduce;

use crate::algebra::{
    LocalClifford, PauliLetter, PauliOperator, PhaseScalar, SinglePauli, Word,
};
use crate::graph::{Graph, GraphError};
use crate::oracle::{self, DenseState, OracleError};
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedGraphState {
    pub scalar: PhaseScalar,
    pub locals: Vec<LocalClifford>,
    pub graph: Graph,
}

/// How far along the normalization pipeline a state's shape is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormClass {
    General,
    Reduced,
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StateError {
    #[error("state must have at least one qubit")]
    Empty,
    #[error("qubit count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration guarded at n ≤ {1}, got {0}")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed state file: {0}")]
    Parse(String),
}

impl ExtendedGraphState {
    /// |+>^⊗n: empty graph, identity locals.
    pub fn plus_state(n: usize) -> Result<ExtendedGraphState, StateError> {
        if n == 0 {
            return Err(StateError::Empty);
        }
        Ok(ExtendedGraphState {
            scalar: PhaseScalar::ONE,
            locals: vec![LocalClifford::IDENTITY; n],
            graph: Graph::empty(n),
        })
    }

    /// A computational basis state: |b> = X^b H |+> per qubit.
    pub fn basis_state(bits: &[bool]) -> Result<ExtendedGraphState, StateError> {
        let mut s = ExtendedGraphState::plus_state(bits.len())?;
        for (q, &b) in bits.iter().enumerate() {
            s.locals[q] = if b {
                LocalClifford::new(0, PauliLetter::X, Word::H)
            } else {
                LocalClifford::H
            };
        }
        Ok(s)
    }

    /// The all-zero vector on n qubits (scalar zero; graph/locals are inert).
    pub fn zero_vector(n: usize) -> ExtendedGraphState {
        ExtendedGraphState {
            scalar: PhaseScalar::ZERO,
            locals: vec![LocalClifford::IDENTITY; n],
            graph: Graph::empty(n),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    /// Compose a local Clifford onto qubit q from the outside.
    pub fn apply_local(&mut self, q: usize, c: &LocalClifford) {
        let (comp, extra) = c.compose(&self.locals[q]);
        self.locals[q] = comp;
        self.scalar = self.scalar.mul(&extra);
    }

    /// Multiply an n-qubit Pauli onto the state from the outside.
    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        assert_eq!(p.num_qubits(), self.num_qubits());
        for q in 0..self.num_qubits() {
            let l = p.letter(q);
            if l != PauliLetter::I {
                self.apply_local(q, &LocalClifford::from_pauli(SinglePauli::new(l, 0)));
            }
        }
        self.scalar = self
            .scalar
            .mul(&PhaseScalar::i_pow(p.phase_as_letter_product() as i64));
    }

    /// Exact same state, words shortened to {I,S,H}, no H–H edges, Pauli
    /// layer folded into the z-form.
    pub fn to_reduced_form(&self) -> ExtendedGraphState {
        if self.is_zero() {
            return self.clone();
        }
        reduce::reduced_form(self)
    }

    /// Exact same state in the unique canonical form.
    pub fn to_canonical_form(&self) -> ExtendedGraphState {
        if self.is_zero() {
            return self.clone();
        }
        reduce::canonical_form(self)
    }

    /// Shape classification (strongest class whose predicate holds).
    pub fn form_class(&self) -> FormClass {
        let reduced = (0..self.num_qubits()).all(|q| {
            let c = &self.locals[q];
            let word_ok = matches!(c.word, Word::I | Word::S | Word::H);
            let pauli_ok = match c.word {
                Word::H => matches!(c.pauli, PauliLetter::I | PauliLetter::X),
                _ => matches!(c.pauli, PauliLetter::I | PauliLetter::Z),
            };
            word_ok && pauli_ok && c.phase_exp == 0
        }) && (0..self.num_qubits()).all(|x| {
            self.locals[x].word != Word::H
                || self
                    .graph
                    .neighbors(x)
                    .iter()
                    .all(|y| self.locals[y].word != Word::H)
        });
        if !reduced {
            return FormClass::General;
        }
        let canonical = (0..self.num_qubits()).all(|x| {
            self.locals[x].word != Word::H || self.graph.neighbors(x).iter().all(|y| y > x)
        });
        if canonical {
            FormClass::Canonical
        } else {
            FormClass::Reduced
        }
    }

    /// Support size 2^(n-k) where k counts the H words; requires reduced
    /// form (canonicalize first otherwise).
    pub fn support_size(&self) -> u128 {
        debug_assert_ne!(self.form_class(), FormClass::General);
        let k = self
            .locals
            .iter()
            .filter(|c| c.word == Word::H)
            .count();
        1u128 << (self.num_qubits() - k)
    }

    /// Dense state vector (n ≤ 12).
    pub fn densify(&self) -> Result<DenseState, OracleError> {
        oracle::densify_parts(&self.scalar, &self.locals, &self.graph)
    }

    /// Canonicalize both sides and compare; with `up_to_phase`, the scalars
    /// may differ in angle (but not magnitude).
    pub fn state_equal(&self, other: &ExtendedGraphState, up_to_phase: bool) -> bool {
        if self.num_qubits() != other.num_qubits() {
            return false;
        }
        let a = self.to_canonical_form();
        let b = other.to_canonical_form();
        if a.is_zero() || b.is_zero() {
            return a.is_zero() == b.is_zero();
        }
        a.graph == b.graph
            && a.locals == b.locals
            && if up_to_phase {
                a.scalar.half_exponent() == b.scalar.half_exponent()
            } else {
                a.scalar == b.scalar
            }
    }

    /// Serialize as a structured text block; bit-exact round trip.
    pub fn to_state_file(&self) -> String {
        let mut s = String::new();
        writeln!(s, "qubits {}", self.num_qubits()).unwrap();
        writeln!(s, "scalar {}", self.scalar).unwrap();
        writeln!(s, "edges").unwrap();
        s.push_str(&self.graph.to_edge_list());
        writeln!(s, ".").unwrap();
        writeln!(s, "locals").unwrap();
        for (q, c) in self.locals.iter().enumerate() {
            writeln!(s, "{} {}", q + 1, c).unwrap();
        }
        writeln!(s, ".").unwrap();
        s
    }

    pub fn from_state_file(text: &str) -> Result<ExtendedGraphState, StateError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = |what: &str| StateError::Parse(what.to_string());
        let n: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("qubits "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("missing qubits header"))?;
        if n == 0 {
            return Err(StateError::Empty);
        }
        let scalar: PhaseScalar = lines
            .next()
            .and_then(|l| l.strip_prefix("scalar "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("missing scalar line"))?;
        if lines.next() != Some("edges") {
            return Err(bad("missing edges section"));
        }
        let mut edge_text = String::new();
        for l in lines.by_ref() {
            if l == "." {
                break;
            }
            edge_text.push_str(l);
            edge_text.push('\n');
        }
        let graph = Graph::from_edge_list(n, &edge_text)?;
        if lines.next() != Some("locals") {
            return Err(bad("missing locals section"));
        }
        let mut locals = vec![LocalClifford::IDENTITY; n];
        for l in lines.by_ref() {
            if l == "." {
                break;
            }
            let (q, c) = l.split_once(' ').ok_or_else(|| bad(l))?;
            let q: usize = q
                .parse()
                .ok()
                .filter(|&q| q >= 1 && q <= n)
                .ok_or_else(|| bad(l))?;
            locals[q - 1] = c.parse().map_err(|_| bad(l))?;
        }
        Ok(ExtendedGraphState {
            scalar,
            locals,
            graph,
        })
    }

    /// DOT export with each vertex labeled by its local Clifford.
    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.locals.iter().map(|c| c.to_string()).collect();
        self.graph.to_dot(Some(&labels))
    }
}

/// Yield every canonical form on n qubits exactly once (guarded at n ≤ 5).
/// The count is 2^n · ∏_{k=1..n} (2^k + 1).
pub fn enumerate_canonical(
    n: usize,
) -> Result<impl Iterator<Item = ExtendedGraphState>, StateError> {
    const MAX_N: usize = 5;
    if n == 0 {
        return Err(StateError::Empty);
    }
    if n > MAX_N {
        return Err(StateError::TooLarge(n, MAX_N));
    }
    // Per qubit k (0-indexed): a set of edges to lower qubits, plus a word
    // c_k in {I,S,H} and z_k in {I,Z}, with c_k != H whenever a lower edge
    // exists.  Encode the per-qubit choice as an integer and iterate the
    // mixed-radix product.
    let choices_per_qubit: Vec<Vec<(u32, LocalClifford)>> = (0..n)
        .map(|k| {
            let mut v = Vec::new();
            for mask in 0u32..(1 << k) {
                let words: &[Word] = if mask == 0 {
                    &[Word::I, Word::S, Word::H]
                } else {
                    &[Word::I, Word::S]
                };
                for &w in words {
                    for z in [false, true] {
                        let pauli = match (z, w) {
                            (false, _) => PauliLetter::I,
                            (true, Word::H) => PauliLetter::X,
                            (true, _) => PauliLetter::Z,
                        };
                        v.push((mask, LocalClifford::new(0, pauli, w)));
                    }
                }
            }
            v
        })
        .collect();
    let mut idx = vec![0usize; n];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut graph = Graph::empty(n);
        let mut locals = Vec::with_capacity(n);
        for k in 0..n {
            let (mask, c) = choices_per_qubit[k][idx[k]];
            locals.push(c);
            for j in 0..k {
                if mask >> j & 1 == 1 {
                    graph.toggle_edge(j, k).unwrap();
                }
            }
        }
        // Advance the mixed-radix counter.
        let mut k = 0;
        loop {
            if k == n {
                done = true;
                break;
            }
            idx[k] += 1;
            if idx[k] < choices_per_qubit[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        Some(ExtendedGraphState {
            scalar: PhaseScalar::ONE,
            locals,
            graph,
        })
    }))
}
