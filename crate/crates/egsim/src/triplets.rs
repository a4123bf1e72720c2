//! Linear dependence among triplets of stabilizer states.
//!
//! Three pairwise non-parallel stabilizer states can only be linearly
//! dependent in three ways, distinguishable by the moduli of their pairwise
//! inner products: a Pauli-related pair plus its normalized sum (one
//! orthogonal pair, the other two overlaps of modulus 1/sqrt(2)), an
//! S-gate-related triple (all overlaps of modulus 1/sqrt(2)), or a
//! CZ-related triple (all overlaps of modulus 1/2).  [`classify_triplet`]
//! decides the class and returns exact dependence coefficients;
//! [`complete_pair`] extends two states whose inner product permits it to a
//! dependent triple.

use crate::algebra::cyclotomic::Cyc;
use crate::algebra::{
    LocalClifford, PauliLetter, PauliOperator, PhaseScalar, SinglePauli, Word,
};
use crate::gates::{self, GateError, MergeSpec};
use crate::graph::{Graph, VertexSet};
use crate::inner::{self, InnerError};
use crate::state::ExtendedGraphState;
use std::fmt;

/// Errors from triplet classification and completion.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum TripletError {
    #[error("states have different qubit counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("input state is not a unit vector")]
    NonUnit,
    #[error(transparent)]
    Inner(#[from] InnerError),
    #[error(transparent)]
    Gate(#[from] GateError),
}

/// An exact scalar `num / sqrt(2)^root_half` with `num` in Z[w].
///
/// Dependence coefficients such as (1-i)/sqrt(2) or sqrt(2) lie outside the
/// `PhaseScalar` family (they are neither zero nor of unit-or-smaller
/// modulus times a power of w), so this slightly larger ring carries them.
/// Values are kept normalized: the numerator is not divisible by sqrt(2)
/// unless the denominator exponent is zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Coefficient {
    num: Cyc,
    root_half: u32,
}

impl Coefficient {
    pub const ZERO: Coefficient = Coefficient { num: Cyc::ZERO, root_half: 0 };
    pub const ONE: Coefficient = Coefficient { num: Cyc::ONE, root_half: 0 };

    pub fn new(num: Cyc, root_half: u32) -> Coefficient {
        let mut c = Coefficient { num, root_half };
        if num.is_zero() {
            c.root_half = 0;
            return c;
        }
        while c.root_half > 0 {
            match c.num.div_sqrt2() {
                Some(m) => {
                    c.num = m;
                    c.root_half -= 1;
                }
                None => break,
            }
        }
        c
    }

    pub fn from_phase(p: &PhaseScalar) -> Coefficient {
        if p.is_zero() {
            return Coefficient::ZERO;
        }
        Coefficient::new(Cyc::omega(p.omega_exponent() as i64), p.half_exponent())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    #[must_use]
    pub fn add(&self, o: &Coefficient) -> Coefficient {
        // Bring both to the larger denominator exponent.
        let e = self.root_half.max(o.root_half);
        let lift = |c: &Coefficient| {
            let mut v = c.num;
            for _ in 0..(e - c.root_half) {
                v = v.mul(&Cyc::SQRT2);
            }
            v
        };
        Coefficient::new(lift(self).add(&lift(o)), e)
    }

    #[must_use]
    pub fn neg(&self) -> Coefficient {
        Coefficient { num: self.num.neg(), root_half: self.root_half }
    }

    #[must_use]
    pub fn sub(&self, o: &Coefficient) -> Coefficient {
        self.add(&o.neg())
    }

    #[must_use]
    pub fn mul(&self, o: &Coefficient) -> Coefficient {
        Coefficient::new(self.num.mul(&o.num), self.root_half + o.root_half)
    }

    #[must_use]
    pub fn conj(&self) -> Coefficient {
        Coefficient { num: self.num.conj(), root_half: self.root_half }
    }

    /// Exact division by the real number (2^a - 1)/2^a; `a` must be > 0 and
    /// the quotient must stay in the ring.
    fn div_one_minus_half_pow(&self, a: u32) -> Coefficient {
        let d = (1i64 << a) - 1;
        let scaled = self.num.mul(&Cyc::int(1 << a));
        let mut q = [0i64; 4];
        for k in 0..4 {
            assert_eq!(scaled.0[k] % d, 0, "dependence coefficients must stay exact");
            q[k] = scaled.0[k] / d;
        }
        Coefficient::new(Cyc(q), self.root_half)
    }

    /// The value as `(u + v*i) / 2^(m/2)` when it lies in that sub-ring.
    pub fn gaussian_parts(&self) -> Option<(i64, i64, u32)> {
        if self.num.0[1] == 0 && self.num.0[3] == 0 {
            return Some((self.num.0[0], self.num.0[2], self.root_half));
        }
        let lifted = self.num.mul(&Cyc::SQRT2);
        if lifted.0[1] == 0 && lifted.0[3] == 0 {
            return Some((lifted.0[0], lifted.0[2], self.root_half + 1));
        }
        None
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        self.num.to_complex() * 2f64.powf(-(self.root_half as f64) / 2.0)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gaussian_parts() {
            Some((u, v, m)) => {
                if v == 0 && m == 0 {
                    return write!(f, "{u}");
                }
                if v == 0 {
                    write!(f, "{u}")?;
                } else {
                    write!(f, "({u}{v:+}i)")?;
                }
                if m > 0 {
                    write!(f, "/2^({m}/2)")?;
                }
                Ok(())
            }
            None => {
                let [c0, c1, c2, c3] = self.num.0;
                write!(f, "({c0}{c1:+}w{c2:+}w^2{c3:+}w^3)/2^({}/2)", self.root_half)
            }
        }
    }
}

/// The kind of linear relation among three stabilizer states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripletClass {
    /// The three states span a three-dimensional space.
    Independent,
    /// Some pair is equal up to global phase.
    Parallel,
    /// One pair is related by the Pauli `P` (up to phase); the third state
    /// is proportional to their normalized sum.
    PauliCase(PauliOperator),
    /// All overlaps have modulus 1/sqrt(2); in the frame where the first
    /// state becomes |0..0>, the other two differ by an S gate on qubit
    /// `x` (0-indexed).
    SCase(usize),
    /// All overlaps have modulus 1/2; in the frame where the first state
    /// becomes |0..0>, the other two differ by Z_x Z_y CZ_{x,y}.
    CZCase(usize, usize),
}

/// Classification outcome: the class, and when the triple is dependent and
/// pairwise non-parallel, exact coefficients with `s1 = c[0]*s2 + c[1]*s3`.
#[derive(Debug, Clone, PartialEq)]
pub struct TripletAnalysis {
    pub class: TripletClass,
    pub coefficients: Option<[Coefficient; 2]>,
}

/// The reduced-form data of a state, viewed as the circuit
/// `L · CZ(edges) · H^n` that prepares it from |0..0> (up to its scalar).
struct Frame {
    scalar: PhaseScalar,
    locals: Vec<LocalClifford>,
    graph: Graph,
}

fn frame_of(s: &ExtendedGraphState) -> Frame {
    let r = s.to_reduced_form();
    Frame { scalar: r.scalar, locals: r.locals, graph: r.graph }
}

/// Apply the inverse of the frame circuit: H^n · CZ(edges) · L^dagger.
fn into_frame(f: &Frame, t: &ExtendedGraphState) -> Result<ExtendedGraphState, GateError> {
    let mut u = t.clone();
    for q in 0..u.num_qubits() {
        let (adj, residue) = f.locals[q].adjoint();
        u.apply_local(q, &adj);
        u.scalar = u.scalar.mul(&residue);
    }
    for (x, y) in f.graph.edges() {
        gates::apply_cz(&mut u, x, y)?;
    }
    for q in 0..u.num_qubits() {
        u.apply_local(q, &LocalClifford::H);
    }
    Ok(u)
}

/// Apply the frame circuit forward: L · CZ(edges) · H^n.
fn out_of_frame(f: &Frame, t: &ExtendedGraphState) -> Result<ExtendedGraphState, GateError> {
    let mut u = t.clone();
    for q in 0..u.num_qubits() {
        u.apply_local(q, &LocalClifford::H);
    }
    for (x, y) in f.graph.edges() {
        gates::apply_cz(&mut u, x, y)?;
    }
    for q in 0..u.num_qubits() {
        u.apply_local(q, &f.locals[q]);
    }
    Ok(u)
}

fn check_unit(s: &ExtendedGraphState) -> Result<(), TripletError> {
    if s.is_zero() || !s.scalar.is_unit() {
        return Err(TripletError::NonUnit);
    }
    Ok(())
}

fn check_sizes(s1: &ExtendedGraphState, s2: &ExtendedGraphState) -> Result<(), TripletError> {
    if s1.num_qubits() != s2.num_qubits() {
        return Err(TripletError::SizeMismatch(s1.num_qubits(), s2.num_qubits()));
    }
    Ok(())
}

/// The qubits whose word is not H in the reduced form of `t`.
fn non_h_qubits(t: &ExtendedGraphState) -> Vec<usize> {
    let r = t.to_reduced_form();
    (0..r.num_qubits())
        .filter(|&q| r.locals[q].word != Word::H)
        .collect()
}

/// For `partner` orthogonal to `anchor` and Pauli-related to it, the
/// positive-Hermitian Pauli `P` with `P * anchor` parallel to `partner`.
fn pauli_witness(
    anchor: &ExtendedGraphState,
    partner: &ExtendedGraphState,
) -> Result<PauliOperator, TripletError> {
    let n = anchor.num_qubits();
    let f = frame_of(anchor);
    let r = into_frame(&f, partner)?.to_reduced_form();
    debug_assert_eq!(r.support_size(), 1);
    // In the frame, partner is a basis state |b>; the relating Pauli is
    // X^b, which conjugates through H^n and the CZ layer to Z^b and then
    // out through the local layer.
    let mut p = PauliOperator::identity(n);
    for q in 0..n {
        if r.locals[q].pauli == PauliLetter::X {
            let sp = f.locals[q].conjugate_pauli_out(SinglePauli::new(PauliLetter::Z, 0));
            p = p.mul(&PauliOperator::embed(n, q, sp));
        }
    }
    let k = p.phase_as_letter_product();
    p.mul_phase(-(k as i64));
    Ok(p)
}

/// Decide how (and whether) three unit stabilizer states are linearly
/// dependent.
///
/// The decision uses only exact pairwise inner products: three unit states
/// are dependent precisely when their Gram matrix is singular, and the
/// moduli pattern of the overlaps separates the dependent classes.  For a
/// dependent pairwise-non-parallel triple, the returned coefficients
/// satisfy `s1 = c[0]*s2 + c[1]*s3` exactly.  A triple containing a
/// parallel pair reports [`TripletClass::Parallel`] with no coefficients.
pub fn classify_triplet(
    s1: &ExtendedGraphState,
    s2: &ExtendedGraphState,
    s3: &ExtendedGraphState,
) -> Result<TripletAnalysis, TripletError> {
    check_sizes(s1, s2)?;
    check_sizes(s1, s3)?;
    for s in [s1, s2, s3] {
        check_unit(s)?;
    }
    let g12 = inner::inner_product(s1, s2)?;
    let g13 = inner::inner_product(s1, s3)?;
    let g23 = inner::inner_product(s2, s3)?;
    if g12.is_unit() || g13.is_unit() || g23.is_unit() {
        return Ok(TripletAnalysis { class: TripletClass::Parallel, coefficients: None });
    }

    // Gram determinant: 1 - |g12|^2 - |g13|^2 - |g23|^2 + 2 Re(g12 g23 conj(g13)).
    let modulus_sq = |g: &PhaseScalar| {
        if g.is_zero() {
            Coefficient::ZERO
        } else {
            Coefficient::new(Cyc::ONE, 2 * g.half_exponent())
        }
    };
    let t = Coefficient::from_phase(&g12)
        .mul(&Coefficient::from_phase(&g23))
        .mul(&Coefficient::from_phase(&g13).conj());
    let det = Coefficient::ONE
        .sub(&modulus_sq(&g12))
        .sub(&modulus_sq(&g13))
        .sub(&modulus_sq(&g23))
        .add(&t)
        .add(&t.conj());
    if !det.is_zero() {
        return Ok(TripletAnalysis { class: TripletClass::Independent, coefficients: None });
    }

    // Solve s1 = c2*s2 + c3*s3 from <s2|s1> and <s3|s1>.
    let b2 = Coefficient::from_phase(&g12.conj());
    let b3 = Coefficient::from_phase(&g13.conj());
    let h = Coefficient::from_phase(&g23);
    let c2 = b2.sub(&h.mul(&b3));
    let c3 = b3.sub(&h.conj().mul(&b2));
    let (c2, c3) = if g23.is_zero() {
        (c2, c3)
    } else {
        let a = g23.half_exponent();
        (c2.div_one_minus_half_pow(a), c3.div_one_minus_half_pow(a))
    };
    let coefficients = Some([c2, c3]);

    let class = match [&g12, &g13, &g23].map(|g| (!g.is_zero()).then(|| g.half_exponent())) {
        // Exactly one orthogonal pair: Pauli-related pair plus merged sum.
        [None, Some(1), Some(1)] => TripletClass::PauliCase(pauli_witness(s1, s2)?),
        [Some(1), None, Some(1)] => TripletClass::PauliCase(pauli_witness(s1, s3)?),
        [Some(1), Some(1), None] => TripletClass::PauliCase(pauli_witness(s2, s3)?),
        [Some(1), Some(1), Some(1)] => {
            let f = frame_of(s1);
            let framed = into_frame(&f, s2)?;
            let xs = non_h_qubits(&framed);
            debug_assert_eq!(xs.len(), 1);
            TripletClass::SCase(xs[0])
        }
        [Some(2), Some(2), Some(2)] => {
            let f = frame_of(s1);
            let framed = into_frame(&f, s2)?;
            let xs = non_h_qubits(&framed);
            debug_assert_eq!(xs.len(), 2);
            TripletClass::CZCase(xs[0], xs[1])
        }
        other => unreachable!("dependent non-parallel triple with overlap pattern {other:?}"),
    };
    Ok(TripletAnalysis { class, coefficients })
}

/// Extend a pair of unit stabilizer states to a linearly dependent triple
/// when their exact inner product permits it.
///
/// Returns `-(s1 + s2)` when `<s1|s2>` is exactly (i-1)/2 or -1/2 (the two
/// completable non-Pauli overlaps; the result then has all three pairwise
/// inner products equal), `(s1 + s2)/sqrt(2)` when the states are
/// Pauli-related with a sum that is again a stabilizer state (including
/// the zero vector for `s2 = -s1`), and `None` otherwise.
pub fn complete_pair(
    s1: &ExtendedGraphState,
    s2: &ExtendedGraphState,
) -> Result<Option<ExtendedGraphState>, TripletError> {
    check_sizes(s1, s2)?;
    check_unit(s1)?;
    check_unit(s2)?;
    let n = s1.num_qubits();
    let g = inner::inner_product(s1, s2)?;
    let f = frame_of(s1);

    if g == PhaseScalar::new(1, 3) {
        // <s1|s2> = (i-1)/2: in s1's frame s2 reads a|0..0> + a'|b> with
        // b_x = 1 at its single non-H qubit, and -(s1+s2) works out to
        // i * S_x applied to the framed s2.
        let mut u = into_frame(&f, s2)?.to_reduced_form();
        let xs = non_h_qubits(&u);
        debug_assert_eq!(xs.len(), 1);
        u.apply_local(xs[0], &LocalClifford::S);
        u.scalar = u.scalar.mul(&PhaseScalar::i_pow(1));
        return Ok(Some(out_of_frame(&f, &u)?.to_reduced_form()));
    }

    if g == PhaseScalar::new(2, 4) {
        // <s1|s2> = -1/2: the framed s2 has support on four strings, one of
        // them all-zero; Z_x Z_y CZ_{x,y} negates the other three, which is
        // exactly -(s1+s2) in the frame.
        let mut u = into_frame(&f, s2)?.to_reduced_form();
        let xs = non_h_qubits(&u);
        debug_assert_eq!(xs.len(), 2);
        u.apply_local(xs[0], &LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0)));
        u.apply_local(xs[1], &LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0)));
        gates::apply_cz(&mut u, xs[0], xs[1])?;
        return Ok(Some(out_of_frame(&f, &u)?.to_reduced_form()));
    }

    // Pauli-related pair: in s1's frame s2 must be a single basis state
    // lambda * |b> with lambda a power of i.
    let r = into_frame(&f, s2)?.to_reduced_form();
    if r.support_size() != 1 {
        return Ok(None);
    }
    let lambda = r.scalar.mul(&f.scalar.conj());
    if lambda.omega_exponent() % 2 != 0 {
        // e.g. s2 = w * P s1: the sum is not a stabilizer state.
        return Ok(None);
    }
    let k = lambda.omega_exponent() / 2;
    let b: Vec<usize> = (0..n).filter(|&q| r.locals[q].pauli == PauliLetter::X).collect();
    if b.is_empty() {
        return Ok(match k {
            0 => None, // s2 = s1: the sum sqrt(2)*s1 is not a unit state.
            2 => Some(ExtendedGraphState::zero_vector(n)),
            _ => {
                // (1 + (+/-)i)/sqrt(2) = w^(+/-1) times s1.
                let mut out = s1.clone();
                out.scalar = out.scalar.mul(&PhaseScalar::omega(if k == 1 { 1 } else { 7 }));
                Some(out)
            }
        });
    }
    // (|0..0> + i^k |b>)/sqrt(2) = H^n (I + i^k Z_b)|+..+>/sqrt(2).
    let spec = MergeSpec { b: VertexSet::from_iter(n, b), k };
    let mut t = gates::merge_z(&Graph::empty(n), &spec)?;
    for q in 0..n {
        t.apply_local(q, &LocalClifford::H);
    }
    t.scalar = t.scalar.mul(&f.scalar);
    Ok(Some(out_of_frame(&f, &t)?.to_reduced_form()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, DenseState};
    use crate::state::tests::random_state;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ket(bits: &[bool]) -> ExtendedGraphState {
        ExtendedGraphState::basis_state(bits).unwrap()
    }

    fn plus(n: usize) -> ExtendedGraphState {
        ExtendedGraphState::plus_state(n).unwrap()
    }

    /// Dense linear-combination check: s1 = c2*s2 + c3*s3.
    fn check_coefficients(
        s1: &ExtendedGraphState,
        s2: &ExtendedGraphState,
        s3: &ExtendedGraphState,
        c: &[Coefficient; 2],
    ) {
        let d1 = s1.densify().unwrap();
        let mut rhs = s2.densify().unwrap();
        rhs.scale(c[0].to_complex());
        let mut t3 = s3.densify().unwrap();
        t3.scale(c[1].to_complex());
        rhs.add(&t3);
        assert!(d1.approx_eq(&rhs));
    }

    fn dense_rank(states: [&ExtendedGraphState; 3]) -> usize {
        let ds: Vec<DenseState> = states.iter().map(|s| s.densify().unwrap()).collect();
        oracle::rank(&ds)
    }

    #[test]
    fn coefficient_ring_basics() {
        let half_i_minus_1 = Coefficient::new(Cyc::omega(3), 1); // (i-1)/2
        assert_eq!(half_i_minus_1.gaussian_parts(), Some((-1, 1, 2)));
        assert_eq!(half_i_minus_1.to_string(), "(-1+1i)/2^(2/2)");
        let sqrt2 = Coefficient::new(Cyc::SQRT2, 0);
        assert_eq!(sqrt2.gaussian_parts(), Some((2, 0, 1)));
        // sqrt(2) * sqrt(2) = 2, and (i-1)/2 + (1-i)/2 = 0.
        assert_eq!(sqrt2.mul(&sqrt2), Coefficient::new(Cyc::int(2), 0));
        assert!(half_i_minus_1.add(&half_i_minus_1.neg()).is_zero());
        // Mixed denominators: 1 + 1/sqrt(2).
        let v = Coefficient::ONE.add(&Coefficient::new(Cyc::ONE, 1));
        assert!((v.to_complex().re - (1.0 + 0.5f64.sqrt())).abs() < 1e-12);
        assert_eq!(Coefficient::from_phase(&PhaseScalar::new(2, 4)).to_string(), "-1/2^(2/2)");
    }

    #[test]
    fn basis_pair_with_plus_is_pauli_case() {
        let s1 = ket(&[false]);
        let s2 = ket(&[true]);
        let s3 = plus(1);
        let a = classify_triplet(&s1, &s2, &s3).unwrap();
        let TripletClass::PauliCase(p) = &a.class else {
            panic!("expected Pauli class, got {:?}", a.class)
        };
        assert_eq!(p.to_letter_string(), "X");
        assert_eq!(p.phase_exp(), 0);
        check_coefficients(&s1, &s2, &s3, &a.coefficients.unwrap());
    }

    #[test]
    fn s_gate_example_has_documented_coefficients() {
        // |0> = (1-i)/sqrt(2) |+>  +  (1+i)/sqrt(2) S|+>.
        let s1 = ket(&[false]);
        let s2 = plus(1);
        let mut s3 = plus(1);
        s3.apply_local(0, &LocalClifford::S);
        let a = classify_triplet(&s1, &s2, &s3).unwrap();
        assert_eq!(a.class, TripletClass::SCase(0));
        let c = a.coefficients.unwrap();
        assert_eq!(c[0].gaussian_parts(), Some((1, -1, 1)));
        assert_eq!(c[1].gaussian_parts(), Some((1, 1, 1)));
        check_coefficients(&s1, &s2, &s3, &c);
    }

    #[test]
    fn cz_example_has_unit_coefficients() {
        // |00> = |++>  +  Z1 Z2 CZ |++>.
        let s1 = ket(&[false, false]);
        let s2 = plus(2);
        let mut s3 = plus(2);
        let z = LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0));
        s3.apply_local(0, &z);
        s3.apply_local(1, &z);
        gates::apply_cz(&mut s3, 0, 1).unwrap();
        let a = classify_triplet(&s1, &s2, &s3).unwrap();
        assert_eq!(a.class, TripletClass::CZCase(0, 1));
        let c = a.coefficients.unwrap();
        assert_eq!(c[0], Coefficient::ONE);
        assert_eq!(c[1], Coefficient::ONE);
        check_coefficients(&s1, &s2, &s3, &c);
    }

    #[test]
    fn parallel_and_independent_detection() {
        let mut rephased = plus(1);
        rephased.scalar = PhaseScalar::omega(3);
        let a = classify_triplet(&plus(1), &rephased, &ket(&[false])).unwrap();
        assert_eq!(a.class, TripletClass::Parallel);
        assert!(a.coefficients.is_none());

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen_independent = 0;
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let s1 = random_state(&mut rng, n);
            let s2 = random_state(&mut rng, n);
            let s3 = random_state(&mut rng, n);
            let a = classify_triplet(&s1, &s2, &s3).unwrap();
            let rank = dense_rank([&s1, &s2, &s3]);
            match a.class {
                TripletClass::Independent => {
                    assert_eq!(rank, 3);
                    seen_independent += 1;
                }
                TripletClass::Parallel => assert!(rank <= 2),
                _ => {
                    assert!(rank <= 2);
                    check_coefficients(&s1, &s2, &s3, &a.coefficients.unwrap());
                }
            }
        }
        assert!(seen_independent > 200);
    }

    /// A reduced state with the given non-H qubits wired to random H
    /// neighborhoods, suitable as the framed middle state of a dependent
    /// triple.
    fn random_framed_state(
        rng: &mut ChaCha8Rng,
        n: usize,
        free: &[usize],
    ) -> ExtendedGraphState {
        let mut s = plus(n);
        for q in 0..n {
            if !free.contains(&q) {
                s.apply_local(q, &LocalClifford::H);
            }
        }
        for &x in free {
            if rng.gen_bool(0.5) {
                s.apply_local(x, &LocalClifford::S);
            }
            if rng.gen_bool(0.5) {
                s.apply_local(x, &LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0)));
            }
            for q in 0..n {
                if q != x && !free.contains(&q) && rng.gen_bool(0.4) {
                    gates::apply_cz(&mut s, x, q).unwrap();
                }
            }
        }
        if free.len() == 2 && rng.gen_bool(0.5) {
            gates::apply_cz(&mut s, free[0], free[1]).unwrap();
        }
        s.scalar = s.scalar.mul(&PhaseScalar::omega(rng.gen_range(0..8)));
        s
    }

    /// Dress all states of a triple with one common random Clifford circuit.
    fn apply_common_circuit(
        rng: &mut ChaCha8Rng,
        states: &mut [ExtendedGraphState],
    ) {
        let n = states[0].num_qubits();
        for _ in 0..(4 * n) {
            match rng.gen_range(0..3) {
                0 => {
                    let q = rng.gen_range(0..n);
                    for s in states.iter_mut() {
                        s.apply_local(q, &LocalClifford::H);
                    }
                }
                1 => {
                    let q = rng.gen_range(0..n);
                    for s in states.iter_mut() {
                        s.apply_local(q, &LocalClifford::S);
                    }
                }
                _ if n >= 2 => {
                    let x = rng.gen_range(0..n);
                    let mut y = rng.gen_range(0..n - 1);
                    if y >= x {
                        y += 1;
                    }
                    for s in states.iter_mut() {
                        gates::apply_cz(s, x, y).unwrap();
                    }
                }
                _ => {}
            }
        }
    }

    #[test]
    fn constructed_s_triples_classify_and_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..120 {
            let n = rng.gen_range(1..=6);
            let x = rng.gen_range(0..n);
            let psi = random_framed_state(&mut rng, n, &[x]);
            let mut s_psi = psi.clone();
            s_psi.apply_local(x, &LocalClifford::S);
            let mut triple = [ket(&vec![false; n]), psi, s_psi];
            apply_common_circuit(&mut rng, &mut triple);
            let [s1, s2, s3] = triple;

            let a = classify_triplet(&s1, &s2, &s3).unwrap();
            assert!(matches!(a.class, TripletClass::SCase(_)), "got {:?}", a.class);
            assert!(dense_rank([&s1, &s2, &s3]) <= 2);
            check_coefficients(&s1, &s2, &s3, &a.coefficients.unwrap());

            // Rephase s2 so <s1|s2> = (i-1)/2 exactly, then complete the pair.
            let g = s1.inner_product(&s2).unwrap();
            assert_eq!(g.half_exponent(), 1);
            let mut s2p = s2.clone();
            s2p.scalar = s2p
                .scalar
                .mul(&PhaseScalar::omega(3 - g.omega_exponent() as i64));
            let s3p = complete_pair(&s1, &s2p).unwrap().expect("completable pair");
            for (a, b) in [(&s1, &s2p), (&s2p, &s3p), (&s3p, &s1)] {
                assert_eq!(a.inner_product(b).unwrap(), PhaseScalar::new(1, 3));
            }
            let mut sum = s1.densify().unwrap();
            sum.add(&s2p.densify().unwrap());
            sum.scale((-1.0).into());
            assert!(s3p.densify().unwrap().approx_eq(&sum));
        }
    }

    #[test]
    fn constructed_cz_triples_classify_and_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..120 {
            let n = rng.gen_range(2..=6);
            let x = rng.gen_range(0..n - 1);
            let y = rng.gen_range(x + 1..n);
            let psi = random_framed_state(&mut rng, n, &[x, y]);
            let mut d_psi = psi.clone();
            let z = LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0));
            d_psi.apply_local(x, &z);
            d_psi.apply_local(y, &z);
            gates::apply_cz(&mut d_psi, x, y).unwrap();
            let mut triple = [ket(&vec![false; n]), psi, d_psi];
            apply_common_circuit(&mut rng, &mut triple);
            let [s1, s2, s3] = triple;

            let a = classify_triplet(&s1, &s2, &s3).unwrap();
            assert!(matches!(a.class, TripletClass::CZCase(_, _)), "got {:?}", a.class);
            assert!(dense_rank([&s1, &s2, &s3]) <= 2);
            check_coefficients(&s1, &s2, &s3, &a.coefficients.unwrap());

            // Rephase s2 so <s1|s2> = -1/2 exactly, then complete the pair.
            let g = s1.inner_product(&s2).unwrap();
            assert_eq!(g.half_exponent(), 2);
            let mut s2p = s2.clone();
            s2p.scalar = s2p
                .scalar
                .mul(&PhaseScalar::omega(4 - g.omega_exponent() as i64));
            let s3p = complete_pair(&s1, &s2p).unwrap().expect("completable pair");
            for (a, b) in [(&s1, &s2p), (&s2p, &s3p), (&s3p, &s1)] {
                assert_eq!(a.inner_product(b).unwrap(), PhaseScalar::new(2, 4));
            }
            let mut sum = s1.densify().unwrap();
            sum.add(&s2p.densify().unwrap());
            sum.scale((-1.0).into());
            assert!(s3p.densify().unwrap().approx_eq(&sum));
        }
    }

    #[test]
    fn pauli_pairs_complete_and_classify() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut completed = 0;
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let s1 = random_state(&mut rng, n);
            let mut p = PauliOperator::identity(n);
            for q in 0..n {
                p = p.mul(&PauliOperator::embed(
                    n,
                    q,
                    SinglePauli::new(
                        [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z]
                            [rng.gen_range(0..4)],
                        0,
                    ),
                ));
            }
            p.mul_phase(rng.gen_range(0..4));
            let mut s2 = s1.clone();
            s2.apply_pauli(&p);
            let Some(s3) = complete_pair(&s1, &s2).unwrap() else {
                // s2 = +/- i^0 s1 style overlaps can be non-completable.
                assert!(s1.inner_product(&s2).unwrap() == PhaseScalar::new(0, 0));
                continue;
            };
            if s3.is_zero() {
                assert!(s1.state_equal(&s2, true));
                continue;
            }
            completed += 1;
            // s3 = (s1+s2)/sqrt(2), exactly.
            let mut sum = s1.densify().unwrap();
            sum.add(&s2.densify().unwrap());
            sum.scale((0.5f64.sqrt()).into());
            assert!(s3.densify().unwrap().approx_eq(&sum));

            if s1.inner_product(&s2).unwrap().is_zero() {
                let a = classify_triplet(&s1, &s2, &s3).unwrap();
                let TripletClass::PauliCase(w) = &a.class else {
                    panic!("expected Pauli class, got {:?}", a.class)
                };
                // The witness relates the orthogonal pair up to phase; it can
                // differ from p by a stabilizer of s1.
                let mut ws1 = s1.clone();
                ws1.apply_pauli(w);
                assert!(ws1.state_equal(&s2, true));
                check_coefficients(&s1, &s2, &s3, &a.coefficients.unwrap());
            }
        }
        assert!(completed > 100);
    }

    #[test]
    fn plus_minus_pair_completes_to_zero_ket() {
        let s1 = plus(1);
        let mut s2 = plus(1);
        s2.apply_local(0, &LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0)));
        let s3 = complete_pair(&s1, &s2).unwrap().unwrap();
        assert!(s3.state_equal(&ket(&[false]), false));
    }

    #[test]
    fn non_completable_pairs_return_nothing() {
        // <0|+> = 1/sqrt(2) is not a completable overlap.
        assert!(complete_pair(&ket(&[false]), &plus(1)).unwrap().is_none());
        // s2 = s1: the sum sqrt(2)*s1 is not a unit state.
        assert!(complete_pair(&plus(1), &plus(1)).unwrap().is_none());
        // s2 = w * X s1: Pauli-related only up to an eighth root of unity.
        let mut s2 = ket(&[true]);
        s2.scalar = PhaseScalar::omega(1);
        assert!(complete_pair(&ket(&[false]), &s2).unwrap().is_none());
        // s2 = -s1 sums to the zero vector.
        let mut neg = ket(&[false]);
        neg.scalar = PhaseScalar::omega(4);
        assert!(complete_pair(&ket(&[false]), &neg).unwrap().unwrap().is_zero());
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            complete_pair(&plus(1), &plus(2)),
            Err(TripletError::SizeMismatch(1, 2))
        );
        let mut shrunk = plus(1);
        shrunk.scalar = PhaseScalar::new(1, 0);
        assert_eq!(
            classify_triplet(&shrunk, &plus(1), &plus(1)),
            Err(TripletError::NonUnit)
        );
        assert_eq!(
            complete_pair(&ExtendedGraphState::zero_vector(1), &plus(1)),
            Err(TripletError::NonUnit)
        );
    }

    #[test]
    fn single_qubit_triples_match_oracle_exhaustively() {
        let states: Vec<_> = crate::state::enumerate_canonical(1).unwrap().collect();
        assert_eq!(states.len(), 6);
        for a in &states {
            for b in &states {
                for c in &states {
                    let cls = classify_triplet(a, b, c).unwrap();
                    let rank = dense_rank([a, b, c]);
                    match cls.class {
                        TripletClass::Independent => assert_eq!(rank, 3),
                        _ => assert!(rank <= 2),
                    }
                    if let Some(co) = cls.coefficients {
                        check_coefficients(a, b, c, &co);
                    }
                }
            }
        }
    }

    #[test]
    fn two_qubit_triples_match_oracle() {
        let states: Vec<_> = crate::state::enumerate_canonical(2).unwrap().collect();
        assert_eq!(states.len(), 60);
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let mut dependent = 0;
        for _ in 0..2000 {
            let a = &states[rng.gen_range(0..states.len())];
            let b = &states[rng.gen_range(0..states.len())];
            let c = &states[rng.gen_range(0..states.len())];
            let cls = classify_triplet(a, b, c).unwrap();
            let rank = dense_rank([a, b, c]);
            match cls.class {
                TripletClass::Independent => assert_eq!(rank, 3),
                _ => {
                    assert!(rank <= 2);
                    dependent += 1;
                }
            }
        }
        assert!(dependent > 0);
    }

    #[test]
    fn pauli_expectations_are_fourth_roots_or_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let s = random_state(&mut rng, n);
            let mut p = PauliOperator::identity(n);
            for q in 0..n {
                p = p.mul(&PauliOperator::embed(
                    n,
                    q,
                    SinglePauli::new(
                        [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z]
                            [rng.gen_range(0..4)],
                        0,
                    ),
                ));
            }
            let d = s.densify().unwrap();
            let mut pd = d.clone();
            pd.apply_pauli(&p).unwrap();
            let e = d.inner(&pd);
            let ok = e.norm() < 1e-9
                || [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]
                    .iter()
                    .any(|&(re, im)| (e.re - re).abs() < 1e-9 && (e.im - im).abs() < 1e-9);
            assert!(ok, "expectation {e} is not a fourth root of unity or zero");
        }
    }
}
