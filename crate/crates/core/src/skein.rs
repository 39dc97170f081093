//! The Kauffman bracket skein algebra of the torus.
//!
//! Elements are finite `Z[A, A^-1]`-combinations of isotopy classes of
//! simple multicurves, written either in the standard basis (the multicurves
//! themselves) or in the Chebyshev basis `(a,b)_T = T_n((a/n, b/n))`,
//! `n = gcd(a, b)`. In the Chebyshev basis the product is the two-term
//! product-to-sum rule
//!
//! ```text
//! (a,b)_T * (c,d)_T = A^{ad-bc} (a-c, b-d)_T + A^{-(ad-bc)} (a+c, b+d)_T
//! ```
//!
//! with `(0,0)_T` read as `2·1`. The key `Empty` always denotes the unit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::chebyshev::{cheb_t, power_in_t};
use crate::error::{Error, Result};
use crate::laurent::{parse_monomial, LaurentPoly};
use crate::text::Cursor;
use crate::torus::{canonicalize, det2, split_primitive, IntVec2, UnorientedClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Standard,
    ChebyshevT,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Standard => "standard",
            Basis::ChebyshevT => "chebyshev",
        }
    }

    pub fn other(self) -> Basis {
        match self {
            Basis::Standard => Basis::ChebyshevT,
            Basis::ChebyshevT => Basis::Standard,
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Basis::Standard),
            "chebyshev" => Ok(Basis::ChebyshevT),
            _ => Err(Error::parse(0, format!("unknown basis {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinElement {
    basis: Basis,
    terms: BTreeMap<UnorientedClass, LaurentPoly>,
}

impl SkeinElement {
    pub fn zero(basis: Basis) -> Self {
        SkeinElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(basis: Basis) -> Self {
        Self::term(basis, UnorientedClass::Empty, LaurentPoly::one())
    }

    pub fn term(basis: Basis, class: UnorientedClass, coeff: LaurentPoly) -> Self {
        let mut x = Self::zero(basis);
        x.add_term(class, &coeff);
        x
    }

    /// The basis element indexed by `v` (sign ignored, `(0,0)` is the unit).
    pub fn generator(basis: Basis, v: IntVec2) -> Self {
        Self::term(basis, UnorientedClass::of(v), LaurentPoly::one())
    }

    pub fn standard(v: IntVec2) -> Self {
        Self::generator(Basis::Standard, v)
    }

    pub fn chebyshev(v: IntVec2) -> Self {
        Self::generator(Basis::ChebyshevT, v)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (UnorientedClass, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, class: UnorientedClass) -> LaurentPoly {
        self.terms.get(&class).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, class: UnorientedClass, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(class).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&class);
        }
    }

    /// Adds `coeff · (v)_T` in the Chebyshev basis, honoring `(0,0)_T = 2·1`.
    fn add_t_index(&mut self, v: IntVec2, coeff: &LaurentPoly) {
        if v.is_zero() {
            self.add_term(UnorientedClass::Empty, &coeff.scale(&BigInt::from(2)));
        } else {
            self.add_term(canonicalize(v).0, coeff);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.expect_basis(other.basis)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// In-place sum; the bases must agree.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.basis, other.basis, "adding elements of different bases");
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.basis);
        for (k, x) in &self.terms {
            out.add_term(*k, &(x * c));
        }
        out
    }

    /// Applies `A -> A^-1` to every coefficient.
    pub fn invert_variable(&self) -> Self {
        let mut out = Self::zero(self.basis);
        for (k, x) in &self.terms {
            out.add_term(*k, &x.invert_variable());
        }
        out
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis.name(),
                found: self.basis.name(),
            })
        }
    }

    pub fn to_t_basis(&self) -> Result<Self> {
        self.expect_basis(Basis::Standard)?;
        let mut out = Self::zero(Basis::ChebyshevT);
        for (class, coeff) in &self.terms {
            let Ok((n, prim)) = split_primitive(*class) else {
                out.add_term(UnorientedClass::Empty, coeff);
                continue;
            };
            for (k, c) in power_in_t(n as usize) {
                let target = if k == 0 {
                    UnorientedClass::Empty
                } else {
                    UnorientedClass::Curve(k as i64 * prim)
                };
                out.add_term(target, &coeff.scale(&c));
            }
        }
        Ok(out)
    }

    pub fn from_t_basis(&self) -> Result<Self> {
        self.expect_basis(Basis::ChebyshevT)?;
        let mut out = Self::zero(Basis::Standard);
        for (class, coeff) in &self.terms {
            let Ok((n, prim)) = split_primitive(*class) else {
                out.add_term(UnorientedClass::Empty, coeff);
                continue;
            };
            for (j, c) in cheb_t(n as usize).coeffs().iter().enumerate() {
                let target = if j == 0 {
                    UnorientedClass::Empty
                } else {
                    UnorientedClass::Curve(j as i64 * prim)
                };
                out.add_term(target, &coeff.scale(c));
            }
        }
        Ok(out)
    }

    /// Converts to `basis`, a no-op if already there.
    pub fn in_basis(&self, basis: Basis) -> Result<Self> {
        match (self.basis, basis) {
            (a, b) if a == b => Ok(self.clone()),
            (Basis::Standard, _) => self.to_t_basis(),
            _ => self.from_t_basis(),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"class": k.to_json(), "coeff": c.to_json()}))
            .collect();
        json!({"basis": self.basis.name(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let basis: Basis = v
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("missing \"basis\"".into()))?
            .parse()
            .map_err(|_| Error::Json("basis must be \"standard\" or \"chebyshev\"".into()))?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing \"terms\" array".into()))?;
        let mut out = Self::zero(basis);
        for t in terms {
            let class = UnorientedClass::from_json(
                t.get("class")
                    .ok_or_else(|| Error::Json("term without \"class\"".into()))?,
            )?;
            let coeff = LaurentPoly::from_json(
                t.get("coeff")
                    .ok_or_else(|| Error::Json("term without \"coeff\"".into()))?,
            )?;
            out.add_term(class, &coeff);
        }
        Ok(out)
    }

    /// Parses a sum of terms `[sign] [coeff] [class]` where a class is
    /// `(a,b)` or `(a,b)_T` and a coefficient is a monomial such as `3A^-2`
    /// or a parenthesized Laurent polynomial. A term without a class is a
    /// multiple of the unit. Unmarked classes are read in `default_basis`,
    /// and all classes must end up in the same basis.
    pub fn parse(s: &str, default_basis: Basis) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut basis: Option<Basis> = None;
        let mut pending: Vec<(UnorientedClass, LaurentPoly)> = Vec::new();
        let mut first = true;
        loop {
            let neg = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') || first {
                false
            } else {
                break;
            };
            first = false;
            let (coeff, class) = parse_skein_term(&mut cur, &mut basis, default_basis)?;
            pending.push((class, if neg { -coeff } else { coeff }));
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        let mut out = Self::zero(basis.unwrap_or(default_basis));
        for (class, coeff) in pending {
            out.add_term(class, &coeff);
        }
        Ok(out)
    }
}

fn parse_skein_term(
    cur: &mut Cursor<'_>,
    basis: &mut Option<Basis>,
    default_basis: Basis,
) -> Result<(LaurentPoly, UnorientedClass)> {
    let start = cur.pos();
    let mut coeff = None;
    if cur.peek() == Some(b'(') && !looks_like_class(cur) {
        cur.expect(b'(')?;
        coeff = Some(LaurentPoly::parse_from(cur)?);
        cur.expect(b')')?;
    } else if let Some((c, e)) = parse_monomial(cur)? {
        coeff = Some(LaurentPoly::monomial(c, e));
    }
    let mut class = None;
    if cur.peek() == Some(b'(') {
        let v = IntVec2::parse_from(cur)?;
        let b = if cur.peek_raw() == Some(b'_') {
            if !cur.eat_str("_T") {
                return Err(cur.error("expected '_T'"));
            }
            Basis::ChebyshevT
        } else {
            default_basis
        };
        match basis {
            Some(prev) if *prev != b => return Err(cur.error("mixed basis markers")),
            _ => *basis = Some(b),
        }
        class = Some(v);
    }
    if coeff.is_none() && class.is_none() {
        cur.reset(start);
        return Err(cur.error("expected a term"));
    }
    let coeff = coeff.unwrap_or_else(LaurentPoly::one);
    let explicit_zero = class.is_some_and(|v| v.is_zero());
    let class = class.unwrap_or(IntVec2::ZERO);
    if explicit_zero && *basis == Some(Basis::ChebyshevT) {
        // (0,0)_T = 2·1
        return Ok((coeff.scale(&BigInt::from(2)), UnorientedClass::Empty));
    }
    Ok((coeff, UnorientedClass::of(class)))
}

fn looks_like_class(cur: &mut Cursor<'_>) -> bool {
    let save = cur.pos();
    let ok = IntVec2::parse_from(cur).is_ok();
    cur.reset(save);
    ok
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let suffix = match self.basis {
            Basis::Standard => "",
            Basis::ChebyshevT => "_T",
        };
        // Unit term first, then curves in key order.
        for (i, (class, coeff)) in self.terms.iter().enumerate() {
            let body = match class {
                UnorientedClass::Empty => coeff.to_string(),
                UnorientedClass::Curve(v) => {
                    let c = coeff.fmt_as_coefficient();
                    let sep = if c.is_empty() || c == "-" { "" } else { " " };
                    format!("{c}{sep}{v}{suffix}")
                }
            };
            if i == 0 {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// One product-to-sum step on two Chebyshev basis indices.
pub fn product_to_sum(u: IntVec2, v: IntVec2) -> [(IntVec2, i64); 2] {
    let d = det2(u, v);
    [(u - v, d), (u + v, -d)]
}

/// Product in the Chebyshev basis via the product-to-sum rule.
pub fn mul_t(x: &SkeinElement, y: &SkeinElement) -> Result<SkeinElement> {
    x.expect_basis(Basis::ChebyshevT)?;
    y.expect_basis(Basis::ChebyshevT)?;
    let mut out = SkeinElement::zero(Basis::ChebyshevT);
    for (cx, px) in &x.terms {
        for (cy, py) in &y.terms {
            let coeff = px * py;
            match (cx, cy) {
                (UnorientedClass::Empty, other) | (other, UnorientedClass::Empty) => {
                    out.add_term(*other, &coeff);
                }
                (UnorientedClass::Curve(u), UnorientedClass::Curve(v)) => {
                    for (w, e) in product_to_sum(*u, *v) {
                        out.add_t_index(w, &coeff.shift(e));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Product in the standard basis, routed through the Chebyshev basis.
pub fn mul(x: &SkeinElement, y: &SkeinElement) -> Result<SkeinElement> {
    x.expect_basis(Basis::Standard)?;
    y.expect_basis(Basis::Standard)?;
    mul_t(&x.to_t_basis()?, &y.to_t_basis()?)?.from_t_basis()
}

/// `(a,b)_T` expanded in the standard basis; `(0,0)` gives `2·1`.
pub fn chebyshev_of(v: IntVec2) -> SkeinElement {
    let mut t = SkeinElement::zero(Basis::ChebyshevT);
    t.add_t_index(v, &LaurentPoly::one());
    t.from_t_basis().expect("chebyshev basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> IntVec2 {
        IntVec2::new(a, b)
    }

    fn std_el(s: &str) -> SkeinElement {
        SkeinElement::parse(s, Basis::Standard).unwrap()
    }

    fn t_el(s: &str) -> SkeinElement {
        SkeinElement::parse(s, Basis::ChebyshevT).unwrap()
    }

    #[test]
    fn chebyshev_of_examples() {
        assert_eq!(chebyshev_of(v(2, -2)), std_el("(2,-2) - 2"));
        assert_eq!(chebyshev_of(v(1, -1)), std_el("(1,-1)"));
        assert_eq!(chebyshev_of(v(3, 0)), std_el("(3,0) - 3(1,0)"));
        assert_eq!(chebyshev_of(v(0, 0)), std_el("2"));
        assert_eq!(chebyshev_of(v(-3, 0)), chebyshev_of(v(3, 0)));
    }

    #[test]
    fn basis_change_examples() {
        assert_eq!(std_el("(2,0)").to_t_basis().unwrap(), t_el("(2,0)_T + 2"));
        assert_eq!(t_el("(2,0)_T").from_t_basis().unwrap(), std_el("(2,0) - 2"));
        let one_s = SkeinElement::unit(Basis::Standard);
        let one_t = SkeinElement::unit(Basis::ChebyshevT);
        assert_eq!(one_s.to_t_basis().unwrap(), one_t);
        assert_eq!(one_t.from_t_basis().unwrap(), one_s);
        assert!(matches!(one_t.to_t_basis(), Err(Error::BasisMismatch { .. })));
        assert!(matches!(one_s.from_t_basis(), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn mul_t_examples() {
        let r = mul_t(&SkeinElement::chebyshev(v(1, 0)), &SkeinElement::chebyshev(v(0, 1))).unwrap();
        assert_eq!(r, t_el("A(1,-1)_T + A^-1(1,1)_T"));
        let r = mul_t(&SkeinElement::chebyshev(v(1, 0)), &SkeinElement::chebyshev(v(1, 0))).unwrap();
        assert_eq!(r, t_el("(2,0)_T + 2"));
        let r = mul_t(&SkeinElement::chebyshev(v(1, 1)), &SkeinElement::chebyshev(v(1, -1))).unwrap();
        assert_eq!(r, t_el("A^2(2,0)_T + A^-2(0,2)_T"));
        assert!(mul_t(&SkeinElement::standard(v(1, 0)), &SkeinElement::chebyshev(v(1, 0))).is_err());
    }

    #[test]
    fn mul_examples() {
        let r = mul(&SkeinElement::standard(v(1, 0)), &SkeinElement::standard(v(0, 1))).unwrap();
        assert_eq!(r, std_el("A(1,-1) + A^-1(1,1)"));
        let x = std_el("(A^2 - 1)(3,1) + A(0,1)");
        assert_eq!(mul(&SkeinElement::unit(Basis::Standard), &x).unwrap(), x);
        assert_eq!(mul(&x, &SkeinElement::unit(Basis::Standard)).unwrap(), x);
        let r = mul(&SkeinElement::standard(v(1, 0)), &SkeinElement::standard(v(1, 0))).unwrap();
        assert_eq!(r, std_el("(2,0)"));
        assert!(mul(&SkeinElement::chebyshev(v(1, 0)), &x).is_err());
    }

    #[test]
    fn noncommutative() {
        let a = SkeinElement::standard(v(1, 0));
        let b = SkeinElement::standard(v(0, 1));
        assert_ne!(mul(&a, &b).unwrap(), mul(&b, &a).unwrap());
    }

    #[test]
    fn display_and_parse() {
        let x = t_el("A(1,-1)_T + A^-1(1,1)_T");
        assert_eq!(x.to_string(), "A (1,-1)_T + A^-1 (1,1)_T");
        let y = std_el("(-A^2 - A^-2) (2,0) - 2 + (0,1)");
        assert_eq!(y.to_string(), "-2 + (0,1) + (-A^-2 - A^2) (2,0)");
        assert_eq!(SkeinElement::parse(&y.to_string(), Basis::Standard).unwrap(), y);
        assert_eq!(SkeinElement::parse("-(1,0)", Basis::Standard).unwrap().to_string(), "-(1,0)");
        assert_eq!(t_el("(0,0)_T"), t_el("2"));
        assert_eq!(std_el("(-1,0)"), std_el("(1,0)"));
        assert!(SkeinElement::parse("(1,0) + (0,1)_T", Basis::Standard).is_err());
        assert_eq!(t_el("(1,0) + (0,1)_T"), t_el("(1,0)_T + (0,1)_T"));
        assert_eq!(t_el("(1,0)"), SkeinElement::chebyshev(v(1, 0)));
        assert!(SkeinElement::parse("(1,0)_", Basis::Standard).is_err());
        assert!(SkeinElement::parse("", Basis::Standard).is_err());
        assert_eq!(SkeinElement::zero(Basis::Standard).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let x = std_el("(A^3 - 2)(2,4) + 7 + A^-1(0,1)");
        let text = x.to_json().to_string();
        let back = SkeinElement::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, x);
        assert!(SkeinElement::from_json(&json!({"basis": "weird", "terms": []})).is_err());
    }
}
