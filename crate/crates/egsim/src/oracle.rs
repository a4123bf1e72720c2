//! Dense state-vector oracle for cross-checking the exact graph-state
//! machinery on small systems (n ≤ 12).
//!
//! Amplitude indexing: qubit 0 is the most significant bit of the basis
//! index, so `amps[0b10]` on two qubits is the amplitude of |10>.

use crate::algebra::{LocalClifford, PauliLetter, PauliOperator, PhaseScalar};
use crate::graph::Graph;
use num_complex::Complex64;

pub const MAX_DENSE_QUBITS: usize = 12;
const TOL: f64 = 1e-12;
const RANK_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("dense oracle limited to {MAX_DENSE_QUBITS} qubits, got {0}")]
    TooLarge(usize),
    #[error("qubit {0} out of range")]
    OutOfRange(usize),
    #[error("state size mismatch")]
    SizeMismatch,
}

impl DenseState {
    pub fn zero_state(n: usize) -> Result<DenseState, OracleError> {
        if n > MAX_DENSE_QUBITS {
            return Err(OracleError::TooLarge(n));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(DenseState { n, amps })
    }

    pub fn plus_state(n: usize) -> Result<DenseState, OracleError> {
        if n > MAX_DENSE_QUBITS {
            return Err(OracleError::TooLarge(n));
        }
        let a = (1 << n) as f64;
        Ok(DenseState {
            n,
            amps: vec![Complex64::new(1.0 / a.sqrt(), 0.0); 1 << n],
        })
    }

    /// The n-fold tensor power of (|0> + w|1>)/sqrt(2), w = exp(i*pi/4).
    pub fn magic_state(n: usize) -> Result<DenseState, OracleError> {
        let mut s = DenseState::zero_state(n)?;
        let w = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for idx in 0..(1usize << n) {
            let ones = idx.count_ones();
            s.amps[idx] = w.powu(ones) * r.powi(n as i32);
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    fn bit_of(&self, idx: usize, q: usize) -> usize {
        idx >> (self.n - 1 - q) & 1
    }

    pub fn apply_matrix(&mut self, q: usize, m: [[Complex64; 2]; 2]) -> Result<(), OracleError> {
        if q >= self.n {
            return Err(OracleError::OutOfRange(q));
        }
        let mask = 1usize << (self.n - 1 - q);
        for idx in 0..self.amps.len() {
            if idx & mask == 0 {
                let (a0, a1) = (self.amps[idx], self.amps[idx | mask]);
                self.amps[idx] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[idx | mask] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
        Ok(())
    }

    pub fn apply_local(&mut self, q: usize, c: &LocalClifford) -> Result<(), OracleError> {
        self.apply_matrix(q, c.matrix().to_complex())
    }

    pub fn apply_cz(&mut self, x: usize, y: usize) -> Result<(), OracleError> {
        if x >= self.n || y >= self.n || x == y {
            return Err(OracleError::OutOfRange(x.max(y)));
        }
        for idx in 0..self.amps.len() {
            if self.bit_of(idx, x) == 1 && self.bit_of(idx, y) == 1 {
                self.amps[idx] = -self.amps[idx];
            }
        }
        Ok(())
    }

    pub fn apply_pauli(&mut self, p: &PauliOperator) -> Result<(), OracleError> {
        if p.num_qubits() != self.n {
            return Err(OracleError::SizeMismatch);
        }
        for q in 0..self.n {
            let m = match p.letter(q) {
                PauliLetter::I => continue,
                l => LocalClifford::new(0, l, crate::algebra::Word::I)
                    .matrix()
                    .to_complex(),
            };
            self.apply_matrix(q, m)?;
        }
        // The letters above include each Y's own i, so only the
        // letter-product phase remains.
        let extra = PhaseScalar::i_pow(p.phase_as_letter_product() as i64).to_complex();
        self.scale(extra);
        Ok(())
    }

    /// Pointwise vector sum (for projector and superposition checks).
    pub fn add(&mut self, other: &DenseState) {
        assert_eq!(self.n, other.n, "oracle sum size mismatch");
        for (a, b) in self.amps.iter_mut().zip(&other.amps) {
            *a += b;
        }
    }

    pub fn scale(&mut self, c: Complex64) {
        for a in &mut self.amps {
            *a *= c;
        }
    }

    pub fn inner(&self, other: &DenseState) -> Complex64 {
        assert_eq!(self.n, other.n, "oracle inner product size mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn approx_eq(&self, other: &DenseState) -> bool {
        self.n == other.n
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| (a - b).norm() < TOL * 100.0)
    }

    /// Equal up to a global phase factor.
    pub fn approx_eq_up_to_phase(&self, other: &DenseState) -> bool {
        if self.n != other.n {
            return false;
        }
        let ip = self.inner(other);
        (ip.norm() - self.norm() * other.norm()).abs() < 1e-9
    }

    pub fn support_size(&self) -> usize {
        self.amps.iter().filter(|a| a.norm() > TOL * 100.0).count()
    }
}

/// Rank of the span of the given states, by column elimination with a
/// 1e-9 pivot tolerance.
pub fn rank(states: &[DenseState]) -> usize {
    if states.is_empty() {
        return 0;
    }
    let dim = states[0].amps.len();
    let mut cols: Vec<Vec<Complex64>> = states.iter().map(|s| s.amps.clone()).collect();
    let mut rank = 0;
    let mut row = 0;
    while row < dim && rank < cols.len() {
        // Find the column with the largest entry in this row.
        let (best, mag) = (rank..cols.len())
            .map(|c| (c, cols[c][row].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if mag < RANK_TOL {
            row += 1;
            continue;
        }
        cols.swap(rank, best);
        for c in (rank + 1)..cols.len() {
            let f = cols[c][row] / cols[rank][row];
            for r in row..dim {
                let sub = f * cols[rank][r];
                cols[c][r] -= sub;
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Build the dense vector of a local-Clifford-dressed graph state
/// `scalar · ⊗ locals · |G>` directly from its parts.
pub fn densify_parts(
    scalar: &PhaseScalar,
    locals: &[LocalClifford],
    graph: &Graph,
) -> Result<DenseState, OracleError> {
    let n = graph.num_vertices();
    if locals.len() != n {
        return Err(OracleError::SizeMismatch);
    }
    let mut s = DenseState::plus_state(n)?;
    for (u, v) in graph.edges() {
        s.apply_cz(u, v)?;
    }
    for (q, c) in locals.iter().enumerate() {
        s.apply_local(q, c)?;
    }
    s.scale(scalar.to_complex());
    Ok(s)
}
