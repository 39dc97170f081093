//! Exact Laurent polynomials in the variable `A` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::text::Cursor;

/// An element of `Z[A, A^-1]`.
///
/// Terms are kept in a map ordered by exponent and never store a zero
/// coefficient, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// The value `-A^2 - A^-2` of a trivial unoriented circle.
    pub fn delta() -> Self {
        let mut p = Self::monomial(-1, 2);
        p.add_term(-2, BigInt::from(-1));
        p
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` when the polynomial is the single term `c A^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (checked_exp_add(*e, k), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x * c)).collect();
        LaurentPoly { terms }
    }

    /// The substitution `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.checked_neg().expect("exponent overflow"), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Value at `A = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in &self.terms {
            let num = Number::from_str(&c.to_string()).expect("integer literal");
            map.insert(e.to_string(), Value::Number(num));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("Laurent polynomial must be an object".into()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let exp: i64 = k
                .trim()
                .parse()
                .map_err(|_| Error::Json(format!("bad exponent key {k:?}")))?;
            let coeff: BigInt = match c {
                Value::Number(n) => n
                    .to_string()
                    .parse()
                    .map_err(|_| Error::Json(format!("coefficient {n} is not an integer")))?,
                _ => return Err(Error::Json(format!("coefficient for {k:?} must be a number"))),
            };
            p.add_term(exp, coeff);
        }
        Ok(p)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Self> {
        let mut p = Self::zero();
        let mut first = true;
        loop {
            let neg = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') || first {
                false
            } else {
                break;
            };
            let (c, e) = parse_monomial(cur)?
                .ok_or_else(|| cur.error("expected a coefficient or 'A'"))?;
            p.add_term(e, if neg { -c } else { c });
            first = false;
        }
        Ok(p)
    }

    /// Writes the polynomial as a coefficient in front of a basis symbol:
    /// `""` for 1, `"-"` for -1, a bare monomial, or a parenthesized sum.
    pub(crate) fn fmt_as_coefficient(&self) -> String {
        match self.as_monomial() {
            Some((c, 0)) if c.is_one() => String::new(),
            Some((c, 0)) if (-c).is_one() => "-".into(),
            Some(_) => self.to_string(),
            None => format!("({self})"),
        }
    }
}

/// `[coeff] ["A" ["^" exponent]]`, unsigned. `None` if neither part is present.
pub(crate) fn parse_monomial(cur: &mut Cursor<'_>) -> Result<Option<(BigInt, i64)>> {
    let coeff = cur.unsigned_big();
    let mut exp = 0;
    let has_a = cur.eat(b'A');
    if has_a {
        exp = 1;
        if cur.eat(b'^') {
            exp = cur.signed_i64()?;
        }
    }
    if coeff.is_none() && !has_a {
        return Ok(None);
    }
    Ok(Some((coeff.unwrap_or_else(BigInt::one), exp)))
}

fn checked_exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}A")?,
                (e, true) => write!(f, "A^{e}")?,
                (e, false) => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let p = Self::parse_from(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly { terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(checked_exp_add(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        let sum = &LaurentPoly::a_pow(2) + &LaurentPoly::a_pow(-2);
        assert_eq!(sum, LaurentPoly::from_terms([(2, 1), (-2, 1)]));
        let cancel = &LaurentPoly::a_pow(2) + &LaurentPoly::monomial(-1, 2);
        assert!(cancel.is_zero());
        assert_eq!(cancel.len(), 0);
        let d = LaurentPoly::delta();
        assert_eq!(&d + &d, LaurentPoly::from_terms([(2, -2), (-2, -2)]));
    }

    #[test]
    fn mul_examples() {
        assert!((&LaurentPoly::a_pow(1) * &LaurentPoly::a_pow(-1)).is_one());
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, LaurentPoly::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert!((&d * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(LaurentPoly::monomial(1, 4).to_string(), "A^4");
        assert_eq!(LaurentPoly::monomial(-1, -2).to_string(), "-A^-2");
        assert!(LaurentPoly::monomial(0, 7).is_zero());
    }

    #[test]
    fn delta_examples() {
        let d = LaurentPoly::delta();
        assert_eq!(d, LaurentPoly::from_terms([(2, -1), (-2, -1)]));
        assert_eq!(d.eval_at_one(), BigInt::from(-2));
        assert_eq!(&d * &LaurentPoly::monomial(-1, 0), p("A^2 + A^-2"));
    }

    #[test]
    fn format_and_parse() {
        let hopf = LaurentPoly::from_terms([(6, 1), (2, 1), (-2, 1), (-6, 1)]);
        assert_eq!(hopf.to_string(), "A^-6 + A^-2 + A^2 + A^6");
        assert_eq!(p("-A^2 - A^-2"), LaurentPoly::delta());
        assert_eq!(p(" - A ^ 2-A^-2 "), LaurentPoly::delta());
        assert_eq!(p("3 - 2A + 5A^-1"), LaurentPoly::from_terms([(0, 3), (1, -2), (-1, 5)]));
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!(p("0").is_zero());
        assert!(matches!("A^".parse::<LaurentPoly>(), Err(Error::Parse { pos: 2, .. })));
        assert!("A A".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("+".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let d = LaurentPoly::delta();
        let j = d.to_json();
        assert_eq!(j, serde_json::json!({"-2": -1, "2": -1}));
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), d);
        let big = LaurentPoly::monomial(BigInt::from(10).pow(40), 3);
        let text = big.to_json().to_string();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap(), big);
        assert!(LaurentPoly::from_json(&serde_json::json!({"x": 1})).is_err());
        assert!(LaurentPoly::from_json(&serde_json::json!({"1": 1.5})).is_err());
    }

    #[test]
    fn pow_and_inversion() {
        let x = p("A + A^-1");
        assert_eq!(x.pow(3), p("A^3 + 3A + 3A^-1 + A^-3"));
        assert!(x.pow(0).is_one());
        assert_eq!(p("2A^3 - A^-1").invert_variable(), p("2A^-3 - A"));
    }
}
