//! Pauli operators with exact i^k phases.
//!
//! Convention: a Pauli word is `i^k * prod_q X_q^{x_q} Z_q^{z_q}`, i.e. the X
//! part is written to the left of the Z part on every qubit.  The letter Y
//! corresponds to x = z = 1 together with an extra factor of i, since
//! Y = i X Z.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn xz(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_xz(x: bool, z: bool) -> PauliLetter {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    /// The power of i needed to express the letter as i^d X^x Z^z.
    fn delta(self) -> i64 {
        if self == PauliLetter::Y {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for PauliLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

/// `i^phase_exp * letter` on one qubit.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct SinglePauli {
    pub letter: PauliLetter,
    /// Power of i, mod 4.
    pub phase_exp: u8,
}

impl SinglePauli {
    pub const IDENTITY: SinglePauli = SinglePauli {
        letter: PauliLetter::I,
        phase_exp: 0,
    };

    pub fn new(letter: PauliLetter, phase_exp: i64) -> SinglePauli {
        SinglePauli {
            letter,
            phase_exp: phase_exp.rem_euclid(4) as u8,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letter == PauliLetter::I && self.phase_exp == 0
    }

    #[must_use]
    pub fn mul(&self, o: &SinglePauli) -> SinglePauli {
        let (x1, z1) = self.letter.xz();
        let (x2, z2) = o.letter.xz();
        let letter = PauliLetter::from_xz(x1 ^ x2, z1 ^ z2);
        // X^x1 Z^z1 X^x2 Z^z2 = (-1)^(z1 x2) X^(x1+x2) Z^(z1+z2)
        let phase = self.phase_exp as i64
            + o.phase_exp as i64
            + self.letter.delta()
            + o.letter.delta()
            + 2 * (z1 && x2) as i64
            - letter.delta();
        SinglePauli::new(letter, phase)
    }

    /// Hermitian iff it squares to +I; the square is always a phased
    /// identity, so this is a phase check.
    pub fn is_hermitian(&self) -> bool {
        self.mul(self).phase_exp == 0
    }
}

impl fmt::Display for SinglePauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase_exp {
            0 => write!(f, "{}", self.letter),
            k => write!(f, "i^{k}·{}", self.letter),
        }
    }
}

/// An n-qubit Pauli word `i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}`,
/// with the bit vectors packed into u64 words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PauliOperator {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase_exp: u8,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl PauliOperator {
    pub fn identity(n: usize) -> PauliOperator {
        PauliOperator {
            n,
            x: vec![0; words_for(n)],
            z: vec![0; words_for(n)],
            phase_exp: 0,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn set_phase_exp(&mut self, k: i64) {
        self.phase_exp = k.rem_euclid(4) as u8;
    }

    pub fn mul_phase(&mut self, k: i64) {
        self.set_phase_exp(self.phase_exp as i64 + k);
    }

    pub fn x_bit(&self, q: usize) -> bool {
        self.x[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn z_bit(&self, q: usize) -> bool {
        self.z[q / 64] >> (q % 64) & 1 == 1
    }

    fn set_bit(bits: &mut [u64], q: usize, v: bool) {
        if v {
            bits[q / 64] |= 1 << (q % 64);
        } else {
            bits[q / 64] &= !(1 << (q % 64));
        }
    }

    pub fn set_x_bit(&mut self, q: usize, v: bool) {
        Self::set_bit(&mut self.x, q, v);
    }

    pub fn set_z_bit(&mut self, q: usize, v: bool) {
        Self::set_bit(&mut self.z, q, v);
    }

    /// The per-qubit letter (phase excluded, including the Y-factor of i,
    /// which is accounted for in `single` / `set_single`).
    pub fn letter(&self, q: usize) -> PauliLetter {
        PauliLetter::from_xz(self.x_bit(q), self.z_bit(q))
    }

    /// The phase k' such that the operator reads `i^k' * prod_q L_q` as a
    /// product of letters (each Y carrying its own factor of i).
    pub fn phase_as_letter_product(&self) -> u8 {
        let mut k = self.phase_exp as i64;
        for q in 0..self.n {
            k -= self.letter(q).delta();
        }
        k.rem_euclid(4) as u8
    }

    /// Construct `i^k * letter` acting on qubit q of an n-qubit register.
    pub fn embed(n: usize, q: usize, p: SinglePauli) -> PauliOperator {
        let mut op = PauliOperator::identity(n);
        let (x, z) = p.letter.xz();
        op.set_x_bit(q, x);
        op.set_z_bit(q, z);
        // i^j * L = i^(j + delta) * X^x Z^z
        op.set_phase_exp(p.phase_exp as i64 + p.letter.delta());
        op
    }

    pub fn is_identity(&self) -> bool {
        self.phase_exp == 0 && self.x.iter().all(|w| *w == 0) && self.z.iter().all(|w| *w == 0)
    }

    /// self * other (self applied after other).
    #[must_use]
    pub fn mul(&self, o: &PauliOperator) -> PauliOperator {
        assert_eq!(self.n, o.n, "pauli size mismatch");
        let mut anti = 0u32;
        let mut x = self.x.clone();
        let mut z = self.z.clone();
        for w in 0..x.len() {
            anti += (self.z[w] & o.x[w]).count_ones();
            x[w] ^= o.x[w];
            z[w] ^= o.z[w];
        }
        PauliOperator {
            n: self.n,
            x,
            z,
            phase_exp: ((self.phase_exp as i64 + o.phase_exp as i64 + 2 * anti as i64)
                .rem_euclid(4)) as u8,
        }
    }

    pub fn commutes_with(&self, o: &PauliOperator) -> bool {
        let mut anti = 0u32;
        for w in 0..self.x.len() {
            anti += (self.z[w] & o.x[w]).count_ones() + (self.x[w] & o.z[w]).count_ones();
        }
        anti % 2 == 0
    }

    /// Hermitian iff the square is exactly +I.
    pub fn is_hermitian(&self) -> bool {
        self.mul(self).phase_exp == 0
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&q| self.x_bit(q) || self.z_bit(q))
    }

    /// Letter-string rendering like `i^2·XIZ`.
    pub fn to_letter_string(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        // Display convention: show the phase such that the word reads as a
        // product of letters (Y carries its own i).
        let k = self.phase_as_letter_product();
        if k != 0 {
            write!(s, "i^{k}·").unwrap();
        }
        for q in 0..self.n {
            write!(s, "{}", self.letter(q)).unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PauliLetter::*;

    fn sp(l: PauliLetter) -> SinglePauli {
        SinglePauli::new(l, 0)
    }

    #[test]
    fn single_letter_products() {
        // XY = iZ, YX = -iZ, ZX = iY, XZ = -iY, YZ = iX, ZY = -iX
        assert_eq!(sp(X).mul(&sp(Y)), SinglePauli::new(Z, 1));
        assert_eq!(sp(Y).mul(&sp(X)), SinglePauli::new(Z, 3));
        assert_eq!(sp(Z).mul(&sp(X)), SinglePauli::new(Y, 1));
        assert_eq!(sp(X).mul(&sp(Z)), SinglePauli::new(Y, 3));
        assert_eq!(sp(Y).mul(&sp(Z)), SinglePauli::new(X, 1));
        assert_eq!(sp(Z).mul(&sp(Y)), SinglePauli::new(X, 3));
        for l in [I, X, Y, Z] {
            assert_eq!(sp(l).mul(&sp(l)), sp(I));
        }
    }

    #[test]
    fn single_mul_is_associative_over_the_whole_group() {
        let all: Vec<SinglePauli> = [I, X, Y, Z]
            .into_iter()
            .flat_map(|l| (0..4).map(move |k| SinglePauli::new(l, k)))
            .collect();
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn hermitian_iff_square_is_plus_identity() {
        assert!(sp(X).is_hermitian());
        assert!(SinglePauli::new(Y, 2).is_hermitian()); // -Y
        assert!(SinglePauli::new(I, 2).is_hermitian()); // -I
        assert!(!SinglePauli::new(X, 1).is_hermitian()); // iX
        assert!(!SinglePauli::new(I, 1).is_hermitian()); // iI
    }

    #[test]
    fn embedding_round_trips() {
        for l in [I, X, Y, Z] {
            for k in 0..4 {
                let p = SinglePauli::new(l, k);
                let op = PauliOperator::embed(5, 2, p);
                let got = SinglePauli::new(op.letter(2), op.phase_as_letter_product() as i64);
                assert_eq!(got, p);
            }
        }
    }

    #[test]
    fn multi_qubit_product_tracks_anticommutation() {
        // (Z ox I) * (X ox I) = iY ox I
        let zp = PauliOperator::embed(2, 0, sp(Z));
        let xp = PauliOperator::embed(2, 0, sp(X));
        let prod = zp.mul(&xp);
        assert_eq!(prod.letter(0), Y);
        // check the phase against the single-qubit algebra:
        let want = sp(Z).mul(&sp(X));
        let got = SinglePauli::new(prod.letter(0), prod.phase_as_letter_product() as i64);
        assert_eq!(got, want);
        assert!(!zp.commutes_with(&xp));
        let zz = PauliOperator::embed(2, 1, sp(Z));
        assert!(zp.commutes_with(&zz));
    }

    #[test]
    fn letter_string_shows_y_without_spurious_phase() {
        let p = PauliOperator::embed(3, 1, sp(Y));
        assert_eq!(p.to_letter_string(), "IYI");
        let mut q = PauliOperator::embed(3, 0, sp(X));
        q.mul_phase(2);
        assert_eq!(q.to_letter_string(), "i^2·XII");
    }

    #[test]
    fn bit_packing_works_past_one_word() {
        let p = PauliOperator::embed(130, 129, sp(Y));
        assert!(p.x_bit(129) && p.z_bit(129));
        assert!(!p.x_bit(64));
        assert_eq!(p.support().collect::<Vec<_>>(), vec![129]);
    }
}
