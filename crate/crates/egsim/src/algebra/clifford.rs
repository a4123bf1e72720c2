//! The single-qubit Clifford group, represented as `i^k · P · W` where P is
//! a Pauli letter and W is one of the six alternating H/S words
//! {I, S, H, SH, HS, HSH}.
//!
//! Up to global phase there are exactly 24 single-qubit Cliffords, and every
//! one is `P·W` for a unique pair (P, W).  The full group generated by H and
//! S has 192 elements: 24 cosets times 8 powers of w = exp(i*pi/4).  Since a
//! phase of i^k is not always enough to express a product (odd powers of w
//! appear), composition returns the leftover w factor as a `PhaseScalar`.
//!
//! All group tables are computed at startup from exact 2x2 matrices over
//! Z[w]; nothing here is hand-entered.

use super::cyclotomic::{mats, Mat2};
use super::pauli::{PauliLetter, SinglePauli};
use super::scalar::PhaseScalar;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Word {
    I,
    S,
    H,
    SH,
    HS,
    HSH,
}

pub const ALL_WORDS: [Word; 6] = [Word::I, Word::S, Word::H, Word::SH, Word::HS, Word::HSH];
pub const ALL_LETTERS: [PauliLetter; 4] = [
    PauliLetter::I,
    PauliLetter::X,
    PauliLetter::Y,
    PauliLetter::Z,
];

impl Word {
    pub fn name(self) -> &'static str {
        match self {
            Word::I => "I",
            Word::S => "S",
            Word::H => "H",
            Word::SH => "SH",
            Word::HS => "HS",
            Word::HSH => "HSH",
        }
    }

    /// The word as a left-to-right sequence of generators
    /// (leftmost = applied last).
    pub fn letters(self) -> &'static [WordLetter] {
        use WordLetter::*;
        match self {
            Word::I => &[],
            Word::S => &[S],
            Word::H => &[H],
            Word::SH => &[S, H],
            Word::HS => &[H, S],
            Word::HSH => &[H, S, H],
        }
    }

    pub fn from_letters(ls: &[WordLetter]) -> Option<Word> {
        ALL_WORDS.into_iter().find(|w| w.letters() == ls)
    }

    fn index(self) -> usize {
        match self {
            Word::I => 0,
            Word::S => 1,
            Word::H => 2,
            Word::SH => 3,
            Word::HS => 4,
            Word::HSH => 5,
        }
    }
}

/// One generator inside a word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum WordLetter {
    H,
    S,
}

fn letter_index(l: PauliLetter) -> usize {
    match l {
        PauliLetter::I => 0,
        PauliLetter::X => 1,
        PauliLetter::Y => 2,
        PauliLetter::Z => 3,
    }
}

/// `i^phase_exp · pauli · word`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct LocalClifford {
    /// Power of i, mod 4.
    pub phase_exp: u8,
    pub pauli: PauliLetter,
    pub word: Word,
}

struct Tables {
    /// Exact matrix of each of the 24 coset representatives.
    canon: [Mat2; 24],
    /// canon[i] * canon[j] = w^t * canon[k]; stores (k, t).
    compose: [[(u8, u8); 24]; 24],
    /// canon[i]^dagger = w^t * canon[k]; stores (k, t).
    adjoint: [(u8, u8); 24],
    /// canon[i]^dagger * P * canon[i] = i^m * P'; stores P' and m,
    /// indexed by [i][letter P].
    conj: [[SinglePauli; 4]; 24],
}

fn coset_index(pauli: PauliLetter, word: Word) -> usize {
    word.index() * 4 + letter_index(pauli)
}

fn pauli_mat(l: PauliLetter) -> Mat2 {
    match l {
        PauliLetter::I => Mat2::IDENTITY,
        PauliLetter::X => mats::x(),
        PauliLetter::Y => mats::y(),
        PauliLetter::Z => mats::z(),
    }
}

fn word_mat(w: Word) -> Mat2 {
    let mut m = Mat2::IDENTITY;
    for l in w.letters() {
        let g = match l {
            WordLetter::H => mats::h(),
            WordLetter::S => mats::s(),
        };
        m = m.mul(&g);
    }
    m
}

/// Find (k, t) such that m = w^t * canon[k].
fn locate(canon: &[Mat2; 24], m: &Mat2) -> (u8, u8) {
    for (k, c) in canon.iter().enumerate() {
        for t in 0..8i64 {
            if c.scale_omega(t) == *m {
                return (k as u8, t as u8);
            }
        }
    }
    unreachable!("matrix is not in the single-qubit Clifford group");
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut canon = [Mat2::IDENTITY; 24];
        for w in ALL_WORDS {
            for p in ALL_LETTERS {
                canon[coset_index(p, w)] = pauli_mat(p).mul(&word_mat(w));
            }
        }
        let mut compose = [[(0u8, 0u8); 24]; 24];
        for i in 0..24 {
            for j in 0..24 {
                compose[i][j] = locate(&canon, &canon[i].mul(&canon[j]));
            }
        }
        let mut adjoint = [(0u8, 0u8); 24];
        for i in 0..24 {
            adjoint[i] = locate(&canon, &canon[i].dagger());
        }
        let mut conj = [[SinglePauli::IDENTITY; 4]; 24];
        for i in 0..24 {
            for p in ALL_LETTERS {
                if p == PauliLetter::I {
                    continue;
                }
                let m = canon[i].dagger().mul(&pauli_mat(p)).mul(&canon[i]);
                // The result is i^k times a Pauli letter.
                let mut found = None;
                for q in [PauliLetter::X, PauliLetter::Y, PauliLetter::Z] {
                    for k in 0..4i64 {
                        if pauli_mat(q).scale_omega(2 * k) == m {
                            found = Some(SinglePauli::new(q, k));
                        }
                    }
                }
                conj[i][letter_index(p)] =
                    found.expect("Clifford conjugation must map Paulis to phased Paulis");
            }
        }
        Tables {
            canon,
            compose,
            adjoint,
            conj,
        }
    })
}

impl LocalClifford {
    pub const IDENTITY: LocalClifford = LocalClifford {
        phase_exp: 0,
        pauli: PauliLetter::I,
        word: Word::I,
    };
    pub const H: LocalClifford = LocalClifford {
        phase_exp: 0,
        pauli: PauliLetter::I,
        word: Word::H,
    };
    pub const S: LocalClifford = LocalClifford {
        phase_exp: 0,
        pauli: PauliLetter::I,
        word: Word::S,
    };
    /// S^dagger = Z·S.
    pub const SDG: LocalClifford = LocalClifford {
        phase_exp: 0,
        pauli: PauliLetter::Z,
        word: Word::S,
    };

    pub fn new(phase_exp: i64, pauli: PauliLetter, word: Word) -> LocalClifford {
        LocalClifford {
            phase_exp: phase_exp.rem_euclid(4) as u8,
            pauli,
            word,
        }
    }

    pub fn from_pauli(p: SinglePauli) -> LocalClifford {
        LocalClifford::new(p.phase_exp as i64, p.letter, Word::I)
    }

    pub fn is_identity(&self) -> bool {
        *self == LocalClifford::IDENTITY
    }

    fn coset(&self) -> usize {
        coset_index(self.pauli, self.word)
    }

    fn from_coset(k: usize, extra_omega: i64) -> (LocalClifford, PhaseScalar) {
        let word = ALL_WORDS[k / 4];
        let pauli = ALL_LETTERS[k % 4];
        let t = extra_omega.rem_euclid(8);
        let c = LocalClifford::new(t / 2, pauli, word);
        let residue = if t % 2 == 1 {
            PhaseScalar::omega(1)
        } else {
            PhaseScalar::ONE
        };
        (c, residue)
    }

    /// `self · other` as an operator product (self applied after other).
    ///
    /// The true product can carry an odd power of w that the i^k field
    /// cannot hold; it is returned as the second component and must be
    /// folded into the state's global scalar.
    #[must_use]
    pub fn compose(&self, other: &LocalClifford) -> (LocalClifford, PhaseScalar) {
        let (k, t) = tables().compose[self.coset()][other.coset()];
        let total = 2 * (self.phase_exp as i64 + other.phase_exp as i64) + t as i64;
        LocalClifford::from_coset(k as usize, total)
    }

    /// The inverse, with the same leftover-phase convention as `compose`.
    #[must_use]
    pub fn adjoint(&self) -> (LocalClifford, PhaseScalar) {
        let (k, t) = tables().adjoint[self.coset()];
        let total = -2 * (self.phase_exp as i64) + t as i64;
        LocalClifford::from_coset(k as usize, total)
    }

    /// `self^dagger · p · self`: pushes a Pauli from outside the Clifford to
    /// inside (toward the graph state).  The i^k phase of `self` cancels.
    #[must_use]
    pub fn conjugate_pauli(&self, p: SinglePauli) -> SinglePauli {
        if p.letter == PauliLetter::I {
            return p;
        }
        let t = tables().conj[self.coset()][letter_index(p.letter)];
        SinglePauli::new(t.letter, t.phase_exp as i64 + p.phase_exp as i64)
    }

    /// `self · p · self^dagger`: pushes a Pauli from inside to outside.
    #[must_use]
    pub fn conjugate_pauli_out(&self, p: SinglePauli) -> SinglePauli {
        let (adj, _) = self.adjoint();
        adj.conjugate_pauli(p)
    }

    /// The exact 2x2 matrix.
    pub fn matrix(&self) -> Mat2 {
        tables().canon[self.coset()].scale_omega(2 * self.phase_exp as i64)
    }
}

impl fmt::Display for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.phase_exp != 0 {
            parts.push(format!("i^{}", self.phase_exp));
        }
        if self.pauli != PauliLetter::I {
            parts.push(self.pauli.to_string());
        }
        if self.word != Word::I {
            parts.push(self.word.name().to_string());
        }
        if parts.is_empty() {
            return write!(f, "I");
        }
        write!(f, "{}", parts.join("·"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed local Clifford literal: {0}")]
pub struct ParseCliffordError(String);

impl FromStr for LocalClifford {
    type Err = ParseCliffordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('·', "*");
        let mut phase = 0i64;
        let mut pauli = PauliLetter::I;
        let mut word = Word::I;
        let (mut saw_pauli, mut saw_word) = (false, false);
        for part in norm.split('*') {
            if let Some(k) = part.strip_prefix("i^") {
                phase = k.parse().map_err(|_| ParseCliffordError(s.into()))?;
            } else if !saw_pauli && matches!(part, "X" | "Y" | "Z") {
                saw_pauli = true;
                pauli = match part {
                    "X" => PauliLetter::X,
                    "Y" => PauliLetter::Y,
                    _ => PauliLetter::Z,
                };
            } else if !saw_word && matches!(part, "I" | "S" | "H" | "SH" | "HS" | "HSH") {
                saw_word = true;
                word = ALL_WORDS
                    .into_iter()
                    .find(|w| w.name() == part)
                    .unwrap();
            } else {
                return Err(ParseCliffordError(s.into()));
            }
        }
        Ok(LocalClifford::new(phase, pauli, word))
    }
}

/// All 24 Cliffords modulo phase, in table order.
pub fn all_cosets() -> impl Iterator<Item = LocalClifford> {
    ALL_WORDS.into_iter().flat_map(|w| {
        ALL_LETTERS
            .into_iter()
            .map(move |p| LocalClifford::new(0, p, w))
    })
}
