use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial with big integer coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let mut out: Vec<BigInt> = Vec::new();
        for a in self.coeffs.iter().rev() {
            // out = out * (x + c) + a
            let mut next = vec![BigInt::zero(); out.len() + 1];
            for (i, o) in out.iter().enumerate() {
                next[i + 1] += o;
                next[i] += o * &c;
            }
            next[0] += a;
            out = next;
        }
        Self::new(out)
    }

    /// Adds `x^degree`.
    pub fn add_monomial(&mut self, degree: usize) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += 1;
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => mag.to_string(),
                _ if mag.is_one() => String::new(),
                _ => mag.to_string(),
            };
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push((c.is_negative(), format!("{body}{var}")));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (neg, t)) in terms.iter().enumerate() {
            match (idx, neg) {
                (0, true) => write!(f, "-{t}")?,
                (0, false) => write!(f, "{t}")?,
                (_, true) => write!(f, " - {t}")?,
                (_, false) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}
