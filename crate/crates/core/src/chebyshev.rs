//! Chebyshev polynomials of the first kind, normalized as
//! `T_0 = 2, T_1 = X, T_n = X·T_{n-1} - T_{n-2}`, so that
//! `T_n(x + x^-1) = x^n + x^-n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Integer polynomial in one indeterminate `X`; index `i` holds the
/// coefficient of `X^i`. No trailing zeros are stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn add_scaled(&mut self, other: &IntPoly, c: &BigInt, shift: usize) {
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs.resize(other.coeffs.len() + shift, BigInt::zero());
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += x * c;
        }
        self.trim();
    }

    /// Substitutes a Laurent polynomial for `X` (Horner).
    pub fn eval_laurent(&self, x: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc.add_term(0, c.clone());
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers of `X`, e.g. `X^4 - 4X^2 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// The `n`-th first-kind Chebyshev polynomial (monic for `n >= 1`, `T_0 = 2`).
pub fn cheb_t(n: usize) -> IntPoly {
    let mut prev = IntPoly::from_i64(&[2]);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPoly::from_i64(&[0, 1]);
    for _ in 1..n {
        let mut next = IntPoly::zero();
        next.add_scaled(&cur, &BigInt::one(), 1);
        next.add_scaled(&prev, &BigInt::from(-1), 0);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Coefficients `c_k` with `X^n = Σ_{k≥1} c_k T_k + c_0 · 1`.
///
/// The constant is reported against the unit `1`, not against `T_0 = 2`,
/// which keeps every coefficient an integer. Zero entries are omitted.
pub fn power_in_t(n: usize) -> BTreeMap<usize, BigInt> {
    let nb = BigInt::from(n);
    (0..=n)
        .filter(|k| (n - k).is_multiple_of(2))
        .map(|k| (k, binomial(nb.clone(), BigInt::from((n - k) / 2))))
        .collect()
}
