//! Exact inner products between extended graph states.
//!
//! ⟨ψ|ψ'⟩ reduces to a closed-basis overlap: fold the bra's locals into the
//! ket as D_i = C_i†C_i', absorb the bra's CZ layer edge by edge through
//! star operations, append the bra's H layer, reduce, and read off the
//! amplitude at |0…0⟩.  Every rewrite emits its exact phase, so the result
//! is global-phase sensitive.  When the CZ absorption keeps each star's
//! center in the Z-conjugation case (arranged by at most one sliding or
//! complementation fix per vertex), the whole computation costs O(nd²)
//! edge toggles, d being the largest degree encountered.

use crate::algebra::{LocalClifford, PauliLetter, PhaseScalar, SinglePauli};
use crate::gates::{self, GateError};
use crate::state::{ExtendedGraphState, FormClass};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InnerError {
    #[error("states act on different qubit counts: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("closed-basis overlap requires a state in reduced form")]
    NotReduced,
    #[error("bit string length {0} does not match state size {1}")]
    LengthMismatch(usize, usize),
    #[error("gate application failed: {0}")]
    Gate(#[from] GateError),
}

/// One star of CZ gates absorbed from the bra's edge layer: all edges from
/// `center` to the higher-numbered `partners`.
#[derive(Clone, Debug)]
pub struct StarOp {
    pub center: usize,
    pub partners: Vec<usize>,
}

/// Cost diagnostics for an inner-product run.  The runtime bound is stated
/// in terms of the largest degree encountered mid-computation, which is not
/// an input-only quantity, so it is reported rather than promised.
#[derive(Clone, Copy, Debug, Default)]
pub struct InnerStats {
    pub max_degree: usize,
}

/// ⟨0…0|s⟩ for a state in reduced form.  Zero whenever some H-word qubit
/// carries the X image of an inner Z; otherwise the graph edges and S words
/// contribute nothing at the all-zeros index and the amplitude is
/// 2^(−(n−k)/2) times the state's scalar, k counting the H-word qubits.
pub fn zero_overlap(s: &ExtendedGraphState) -> Result<PhaseScalar, InnerError> {
    if s.is_zero() {
        return Ok(PhaseScalar::ZERO);
    }
    if s.form_class() == FormClass::General {
        return Err(InnerError::NotReduced);
    }
    let mut h_count = 0usize;
    for c in &s.locals {
        if c.word == crate::algebra::Word::H {
            h_count += 1;
            if c.pauli == PauliLetter::X {
                return Ok(PhaseScalar::ZERO);
            }
        }
    }
    let a = (s.num_qubits() - h_count) as u32;
    Ok(s.scalar.mul(&PhaseScalar::new(a, 0)))
}

/// Exact ⟨s1|s2⟩, with cost diagnostics.
pub fn inner_product_with_stats(
    s1: &ExtendedGraphState,
    s2: &ExtendedGraphState,
) -> Result<(PhaseScalar, InnerStats), InnerError> {
    let n = s1.num_qubits();
    if s2.num_qubits() != n {
        return Err(InnerError::SizeMismatch(n, s2.num_qubits()));
    }
    if s1.is_zero() || s2.is_zero() {
        return Ok((PhaseScalar::ZERO, InnerStats::default()));
    }

    // Fold the bra's scalar and locals into the ket: D_i = C_i† C_i'.
    let mut t = s2.clone();
    t.scalar = s1.scalar.conj().mul(&s2.scalar);
    for i in 0..n {
        let (adj, r1) = s1.locals[i].adjoint();
        let (d, r2) = adj.compose(&s2.locals[i]);
        t.locals[i] = d;
        t.scalar = t.scalar.mul(&r1).mul(&r2);
    }

    let mut stats = InnerStats::default();
    let track = |t: &ExtendedGraphState, stats: &mut InnerStats| {
        for v in 0..n {
            stats.max_degree = stats.max_degree.max(t.graph.degree(v));
        }
    };
    track(&t, &mut stats);
    track(s1, &mut stats);

    // Absorb the bra's CZ layer, one star per vertex, ascending.
    let z = SinglePauli::new(PauliLetter::Z, 0);
    for p in 0..n {
        let star = StarOp {
            center: p,
            partners: s1.graph.neighbors(p).iter().filter(|&q| q > p).collect(),
        };
        if star.partners.is_empty() {
            continue;
        }
        match t.locals[p].conjugate_pauli(z).letter {
            PauliLetter::Z => {}
            PauliLetter::Y => {
                // |G⟩ = H_p S_p† H_p ∏_{i∈N(p)} S_i |L_p(G)⟩: complementing
                // at p lets D_p absorb HS†H, after which it conjugates Z to
                // ±Z.
                let neighbors = t.graph.neighbors(p);
                t.graph.local_complement(p).expect("p in range");
                let (fix, r) = hsdh();
                t.scalar = t.scalar.mul(&r);
                compose_inner(&mut t, p, &fix);
                for i in neighbors.iter() {
                    compose_inner(&mut t, i, &LocalClifford::S);
                }
            }
            PauliLetter::X if t.graph.degree(p) == 0 => {
                // An isolated vertex is stabilized by X_p, so each CZ of the
                // star collapses: the +X case is the identity on |G⟩ and the
                // −X case applies the partner's own conjugated Z inside.
                let negative = t.locals[p].conjugate_pauli(z).phase_exp == 2;
                if negative {
                    for &q in &star.partners {
                        let dq = t.locals[q].conjugate_pauli(z);
                        compose_inner(&mut t, q, &LocalClifford::from_pauli(dq));
                    }
                }
                track(&t, &mut stats);
                continue;
            }
            PauliLetter::X => {
                // Undo one H pair through the sliding identity at (p, q0):
                // |G⟩ = H_p H_q0 Z_p Z_q0 ∏_{a∈M(p),b∈M(q0)} CZ_{a,b}|G⟩,
                // which hands D_p an H and returns it to the Z case.
                let q0 = t.graph.neighbors(p).min().expect("degree > 0");
                let a = t.graph.closed_neighborhood(p);
                let b = t.graph.closed_neighborhood(q0);
                compose_inner(&mut t, p, &LocalClifford::H);
                compose_inner(&mut t, q0, &LocalClifford::H);
                let zp = LocalClifford::from_pauli(z);
                compose_inner(&mut t, p, &zp);
                compose_inner(&mut t, q0, &zp);
                let diag = t.graph.apply_cz_product(&a, &b);
                for v in 0..n {
                    if diag.z_bit(v) {
                        compose_inner(&mut t, v, &zp);
                    }
                }
            }
            PauliLetter::I => unreachable!("conjugated Z is never identity"),
        }
        debug_assert_eq!(
            t.locals[p].conjugate_pauli(z).letter,
            PauliLetter::Z,
            "star center must be in the Z case after fixing"
        );
        for &q in &star.partners {
            gates::apply_cz(&mut t, p, q)?;
        }
        track(&t, &mut stats);
    }

    // Append the bra's H layer on the outside, reduce, and evaluate at zero.
    for i in 0..n {
        let (c, r) = LocalClifford::H.compose(&t.locals[i]);
        t.locals[i] = c;
        t.scalar = t.scalar.mul(&r);
    }
    let reduced = t.to_reduced_form();
    track(&reduced, &mut stats);
    Ok((zero_overlap(&reduced)?, stats))
}

/// Exact ⟨s1|s2⟩.
pub fn inner_product(
    s1: &ExtendedGraphState,
    s2: &ExtendedGraphState,
) -> Result<PhaseScalar, InnerError> {
    inner_product_with_stats(s1, s2).map(|(v, _)| v)
}

/// Exact computational-basis amplitude ⟨bits|s⟩.
pub fn amplitude(s: &ExtendedGraphState, bits: &[bool]) -> Result<PhaseScalar, InnerError> {
    if bits.len() != s.num_qubits() {
        return Err(InnerError::LengthMismatch(bits.len(), s.num_qubits()));
    }
    let basis = ExtendedGraphState::basis_state(bits).expect("nonempty");
    inner_product(&basis, s)
}

/// H·S†·H as a single local Clifford, with its leftover phase.
fn hsdh() -> (LocalClifford, PhaseScalar) {
    let (a, r1) = LocalClifford::H.compose(&LocalClifford::SDG);
    let (b, r2) = a.compose(&LocalClifford::H);
    (b, r1.mul(&r2))
}

/// Composes `c` onto qubit `q` from the inside (the graph side).
fn compose_inner(t: &mut ExtendedGraphState, q: usize, c: &LocalClifford) {
    let (d, r) = t.locals[q].compose(c);
    t.locals[q] = d;
    t.scalar = t.scalar.mul(&r);
}

impl ExtendedGraphState {
    /// Convenience forwarding of [`inner_product`].
    pub fn inner_product(&self, other: &ExtendedGraphState) -> Result<PhaseScalar, InnerError> {
        inner_product(self, other)
    }
}
