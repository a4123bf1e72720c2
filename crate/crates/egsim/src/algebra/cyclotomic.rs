//! Exact arithmetic over the eighth cyclotomic integers Z[w], w = exp(i*pi/4).
//!
//! Every single-qubit Clifford matrix has entries of the form
//! (a + b*w + c*w^2 + d*w^3) / sqrt(2)^m with integer a..d, so 2x2 matrices
//! over this ring represent the group exactly.  The composition and
//! conjugation tables in `clifford` are derived from these matrices at
//! startup rather than hand-entered.

use num_complex::Complex64;

/// An element of Z[w]: `c[0] + c[1]*w + c[2]*w^2 + c[3]*w^3`, with w^4 = -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Cyc(pub [i64; 4]);

impl Cyc {
    pub const ZERO: Cyc = Cyc([0, 0, 0, 0]);
    pub const ONE: Cyc = Cyc([1, 0, 0, 0]);
    /// sqrt(2) = w - w^3.
    pub const SQRT2: Cyc = Cyc([0, 1, 0, -1]);

    /// w^k for any integer k.
    pub fn omega(k: i64) -> Cyc {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        Cyc(c)
    }

    pub fn int(v: i64) -> Cyc {
        Cyc([v, 0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0, 0]
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        let mut c = [0i64; 4];
        for k in 0..4 {
            c[k] = self.0[k] + o.0[k];
        }
        Cyc(c)
    }

    pub fn neg(&self) -> Cyc {
        Cyc([-self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    pub fn sub(&self, o: &Cyc) -> Cyc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Cyc) -> Cyc {
        let mut c = [0i64; 4];
        for i in 0..4 {
            if self.0[i] == 0 {
                continue;
            }
            for j in 0..4 {
                let v = self.0[i] * o.0[j];
                if i + j < 4 {
                    c[i + j] += v;
                } else {
                    c[i + j - 4] -= v;
                }
            }
        }
        Cyc(c)
    }

    /// Complex conjugate: w^k -> w^(-k).
    pub fn conj(&self) -> Cyc {
        Cyc([self.0[0], -self.0[3], -self.0[2], -self.0[1]])
    }

    /// Exact division by sqrt(2), when all resulting coefficients are integers.
    pub fn div_sqrt2(&self) -> Option<Cyc> {
        // x / sqrt(2) = x * sqrt(2) / 2
        let doubled = self.mul(&Cyc::SQRT2);
        let mut c = [0i64; 4];
        for k in 0..4 {
            if doubled.0[k] % 2 != 0 {
                return None;
            }
            c[k] = doubled.0[k] / 2;
        }
        Some(Cyc(c))
    }

    pub fn to_complex(&self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.0.map(|v| v as f64);
        Complex64::new(a + (b - d) * s, c + (b + d) * s)
    }
}

/// A 2x2 matrix `(1/sqrt(2)^den) * [[e0, e1], [e2, e3]]` over Z[w].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub e: [Cyc; 4],
    pub den: u32,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        e: [Cyc::ONE, Cyc::ZERO, Cyc::ZERO, Cyc::ONE],
        den: 0,
    };

    pub fn new(e: [Cyc; 4], den: u32) -> Mat2 {
        Mat2 { e, den }.normalized()
    }

    /// Divide out common sqrt(2) factors so equal matrices compare equal.
    pub fn normalized(mut self) -> Mat2 {
        while self.den > 0 {
            let reduced: Option<Vec<Cyc>> = self.e.iter().map(Cyc::div_sqrt2).collect();
            match reduced {
                Some(v) => {
                    self.e = [v[0], v[1], v[2], v[3]];
                    self.den -= 1;
                }
                None => break,
            }
        }
        self
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &o.e;
        Mat2::new(
            [
                a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
                a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
                a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
                a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
            ],
            self.den + o.den,
        )
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Mat2 {
        Mat2::new(
            [
                self.e[0].conj(),
                self.e[2].conj(),
                self.e[1].conj(),
                self.e[3].conj(),
            ],
            self.den,
        )
    }

    pub fn scale_omega(&self, k: i64) -> Mat2 {
        let w = Cyc::omega(k);
        Mat2::new(self.e.map(|x| x.mul(&w)), self.den)
    }

    pub fn to_complex(&self) -> [[Complex64; 2]; 2] {
        let d = (2f64).powf(-(self.den as f64) / 2.0);
        [
            [self.e[0].to_complex() * d, self.e[1].to_complex() * d],
            [self.e[2].to_complex() * d, self.e[3].to_complex() * d],
        ]
    }
}

/// Base matrices for the single-qubit Clifford generators and Paulis.
pub mod mats {
    use super::{Cyc, Mat2};

    pub fn h() -> Mat2 {
        Mat2::new(
            [Cyc::ONE, Cyc::ONE, Cyc::ONE, Cyc::int(-1)],
            1,
        )
    }

    pub fn s() -> Mat2 {
        Mat2::new([Cyc::ONE, Cyc::ZERO, Cyc::ZERO, Cyc::omega(2)], 0)
    }

    pub fn x() -> Mat2 {
        Mat2::new([Cyc::ZERO, Cyc::ONE, Cyc::ONE, Cyc::ZERO], 0)
    }

    pub fn y() -> Mat2 {
        Mat2::new([Cyc::ZERO, Cyc::omega(6), Cyc::omega(2), Cyc::ZERO], 0)
    }

    pub fn z() -> Mat2 {
        Mat2::new([Cyc::ONE, Cyc::ZERO, Cyc::ZERO, Cyc::int(-1)], 0)
    }
}
