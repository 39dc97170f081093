//! The oriented skein algebra of the torus and the symmetrization map into it.
//!
//! Every element has a unique normal form as a combination of `γ_v`,
//! `v ∈ Z²`, where `γ_v` is `gcd(v)` identically oriented parallel copies
//! of the primitive oriented curve in the direction of `v` and `γ_0` is the
//! empty curve. Crossings have a single oriented smoothing, so products of
//! generators are monomials:
//!
//! ```text
//! γ_u · γ_v = A^{-det(u,v)} γ_{u+v}
//! ```
//!
//! In particular `γ_v` and `γ_{-v}` are mutually inverse.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::skein::{Basis, SkeinElement};
use crate::torus::{canonicalize, det2, split_primitive, IntVec2, UnorientedClass};

/// Exponent sign in the monomial rule: `γ_u γ_v = A^{SIGN·det(u,v)} γ_{u+v}`.
/// Must agree with the crossing chart used by the smoothing oracle.
pub const MONOMIAL_EXPONENT_SIGN: i64 = -1;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrientedElement {
    terms: BTreeMap<IntVec2, LaurentPoly>,
}

impl OrientedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::gamma(IntVec2::ZERO)
    }

    pub fn gamma(v: IntVec2) -> Self {
        Self::monomial(v, LaurentPoly::one())
    }

    pub fn monomial(v: IntVec2, coeff: LaurentPoly) -> Self {
        let mut x = Self::zero();
        x.add_term(v, &coeff);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IntVec2, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: IntVec2) -> LaurentPoly {
        self.terms.get(&v).cloned().unwrap_or_default()
    }

    /// `Some((v, c))` when the element is the single term `c·γ_v`.
    pub fn as_monomial(&self) -> Option<(IntVec2, &LaurentPoly)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, v: IntVec2, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(v).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(*k, &(x * c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"gamma": k.to_json(), "coeff": c.to_json()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing \"terms\" array".into()))?;
        let mut out = Self::zero();
        for t in terms {
            let key = IntVec2::from_json(
                t.get("gamma")
                    .ok_or_else(|| Error::Json("term without \"gamma\"".into()))?,
            )?;
            let coeff = LaurentPoly::from_json(
                t.get("coeff")
                    .ok_or_else(|| Error::Json("term without \"coeff\"".into()))?,
            )?;
            out.add_term(key, &coeff);
        }
        Ok(out)
    }

    /// Parses `[sign] [coeff] [g(a,b)]` terms; a bare coefficient is a
    /// multiple of the unit.
    pub fn parse(s: &str) -> Result<Self> {
        use crate::laurent::parse_monomial;
        use crate::text::Cursor;

        let mut cur = Cursor::new(s);
        let mut out = Self::zero();
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
            let start = cur.pos();
            let mut coeff = None;
            if cur.peek() == Some(b'(') {
                cur.expect(b'(')?;
                coeff = Some(LaurentPoly::parse_from(&mut cur)?);
                cur.expect(b')')?;
            } else if let Some((c, e)) = parse_monomial(&mut cur)? {
                coeff = Some(LaurentPoly::monomial(c, e));
            }
            let mut key = None;
            if cur.eat(b'g') {
                key = Some(IntVec2::parse_from(&mut cur)?);
            }
            if coeff.is_none() && key.is_none() {
                cur.reset(start);
                return Err(cur.error("expected a term"));
            }
            let c = coeff.unwrap_or_else(LaurentPoly::one);
            out.add_term(key.unwrap_or_default(), &if neg { -c } else { c });
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for OrientedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Unit first, then the remaining keys in order.
        let unit = self.terms.get_key_value(&IntVec2::ZERO);
        let rest = self.terms.iter().filter(|(k, _)| !k.is_zero());
        for (k, c) in unit.into_iter().chain(rest) {
            let body = if k.is_zero() {
                c.to_string()
            } else {
                let cs = c.fmt_as_coefficient();
                let sep = if cs.is_empty() || cs == "-" { "" } else { " " };
                format!("{cs}{sep}g{k}")
            };
            if first {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `γ_u · γ_v = A^{-det(u,v)} γ_{u+v}`.
pub fn gamma_mul(u: IntVec2, v: IntVec2) -> OrientedElement {
    OrientedElement::monomial(u + v, LaurentPoly::a_pow(MONOMIAL_EXPONENT_SIGN * det2(u, v)))
}

pub fn mul(x: &OrientedElement, y: &OrientedElement) -> OrientedElement {
    let mut out = OrientedElement::zero();
    for (u, cu) in &x.terms {
        for (v, cv) in &y.terms {
            let e = MONOMIAL_EXPONENT_SIGN * det2(*u, *v);
            out.add_term(*u + *v, &(cu * cv).shift(e));
        }
    }
    out
}

/// Orientation reversal `γ_v -> γ_{-v}`.
pub fn theta(x: &OrientedElement) -> OrientedElement {
    let terms = x.terms.iter().map(|(k, c)| (-*k, c.clone())).collect();
    OrientedElement { terms }
}

pub fn is_symmetric(x: &OrientedElement) -> bool {
    theta(x) == *x
}

/// Sum of all orientations of a standard-basis multicurve.
///
/// `n` parallel copies of a primitive `p` give `Σ_k C(n,k) γ_{(2k-n)p}`;
/// oppositely oriented neighbours cancel with coefficient 1.
pub fn psi(x: &SkeinElement) -> Result<OrientedElement> {
    expect(x, Basis::Standard)?;
    let mut out = OrientedElement::zero();
    for (class, coeff) in x.terms() {
        for (key, mult) in psi_class(class) {
            out.add_term(key, &coeff.scale(&mult));
        }
    }
    Ok(out)
}

/// `ψ` of one standard basis class, as `(γ key, multiplicity)` pairs.
pub fn psi_class(class: UnorientedClass) -> Vec<(IntVec2, BigInt)> {
    let Ok((n, prim)) = split_primitive(class) else {
        return vec![(IntVec2::ZERO, BigInt::from(1))];
    };
    let nb = BigInt::from(n);
    (0..=n)
        .map(|k| {
            let key = (2 * k as i64 - n as i64) * prim;
            (key, binomial(nb.clone(), BigInt::from(k)))
        })
        .collect()
}

/// `ψ` on the Chebyshev basis: `(v)_T -> γ_v + γ_{-v}`.
pub fn psi_t(x: &SkeinElement) -> Result<OrientedElement> {
    expect(x, Basis::ChebyshevT)?;
    let mut out = OrientedElement::zero();
    for (class, coeff) in x.terms() {
        match class {
            UnorientedClass::Empty => out.add_term(IntVec2::ZERO, coeff),
            UnorientedClass::Curve(v) => {
                out.add_term(v, coeff);
                out.add_term(-v, coeff);
            }
        }
    }
    Ok(out)
}

/// Inverse of [`psi_t`] on the symmetric subalgebra.
pub fn psi_inverse(x: &OrientedElement) -> Result<SkeinElement> {
    let mut out = SkeinElement::zero(Basis::ChebyshevT);
    for (k, c) in &x.terms {
        let (class, flipped) = canonicalize(*k);
        if x.coeff(-*k) != *c {
            return Err(Error::NotSymmetric { key: *k });
        }
        if !flipped {
            out.add_term(class, c);
        }
    }
    Ok(out)
}

fn expect(x: &SkeinElement, basis: Basis) -> Result<()> {
    if x.basis() == basis {
        Ok(())
    } else {
        Err(Error::BasisMismatch {
            expected: basis.name(),
            found: x.basis().name(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> IntVec2 {
        IntVec2::new(a, b)
    }

    fn el(s: &str) -> OrientedElement {
        OrientedElement::parse(s).unwrap()
    }

    #[test]
    fn gamma_mul_examples() {
        assert_eq!(gamma_mul(v(1, 0), v(0, 1)), el("A^-1 g(1,1)"));
        assert_eq!(gamma_mul(v(1, 0), v(-1, 0)), OrientedElement::unit());
        assert_eq!(gamma_mul(v(0, 0), v(3, -2)), el("g(3,-2)"));
    }

    #[test]
    fn mul_examples() {
        let x = el("g(1,0) + g(-1,0)");
        let y = el("g(0,1) + g(0,-1)");
        assert_eq!(mul(&x, &y), el("A g(1,-1) + A g(-1,1) + A^-1 g(1,1) + A^-1 g(-1,-1)"));
        let z = el("(A^2 - 3) g(2,1) + 5");
        assert_eq!(mul(&z, &OrientedElement::unit()), z);
        assert_eq!(mul(&el("g(1,0)"), &el("g(1,0)")), el("g(2,0)"));
    }

    #[test]
    fn exchange_relation() {
        for (u, w) in [(v(1, 0), v(0, 1)), (v(2, -1), v(3, 5)), (v(-2, 2), v(1, 1))] {
            let lhs = gamma_mul(u, w);
            let rhs = gamma_mul(w, u).scale(&LaurentPoly::a_pow(-2 * det2(u, w)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&el("g(2,3)")), el("g(-2,-3)"));
        assert_eq!(theta(&OrientedElement::unit()), OrientedElement::unit());
        let s = el("g(1,0) + g(-1,0)");
        assert_eq!(theta(&s), s);
    }

    #[test]
    fn symmetric_examples() {
        assert!(is_symmetric(&el("g(1,1) + g(-1,-1)")));
        assert!(!is_symmetric(&el("g(1,1)")));
        assert!(is_symmetric(&el("A^2")));
    }

    #[test]
    fn psi_examples() {
        let s = |a, b| SkeinElement::standard(v(a, b));
        assert_eq!(psi(&s(1, 0)).unwrap(), el("g(1,0) + g(-1,0)"));
        assert_eq!(psi(&s(2, 0)).unwrap(), el("g(2,0) + 2 + g(-2,0)"));
        assert_eq!(psi(&SkeinElement::unit(Basis::Standard)).unwrap(), OrientedElement::unit());
        assert!(psi(&SkeinElement::chebyshev(v(1, 0))).is_err());
    }

    /// Brute force: every orientation of n parallel copies, reduced by
    /// cancelling opposite neighbours, lands on γ_{(#up - #down)·p}.
    #[test]
    fn psi_closed_form_matches_enumeration() {
        for n in 1..=4u32 {
            for prim in [v(1, 0), v(2, -3), v(0, 1)] {
                let mut expect = OrientedElement::zero();
                for mask in 0..(1u32 << n) {
                    let up = mask.count_ones() as i64;
                    let down = n as i64 - up;
                    expect.add_term((up - down) * prim, &LaurentPoly::one());
                }
                let got = psi(&SkeinElement::standard(n as i64 * prim)).unwrap();
                assert_eq!(got, expect, "n = {n}, prim = {prim}");
            }
        }
    }

    #[test]
    fn psi_t_examples() {
        let t = |a, b| SkeinElement::chebyshev(v(a, b));
        assert_eq!(psi_t(&t(1, -1)).unwrap(), el("g(1,-1) + g(-1,1)"));
        assert_eq!(psi_t(&t(2, 0)).unwrap(), el("g(2,0) + g(-2,0)"));
        assert_eq!(psi_t(&SkeinElement::unit(Basis::ChebyshevT)).unwrap(), OrientedElement::unit());
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inverse(&el("g(1,1) + g(-1,-1)")).unwrap(), SkeinElement::chebyshev(v(1, 1)));
        let x = el("A^3 g(2,0) + A^3 g(-2,0)");
        assert_eq!(
            psi_inverse(&x).unwrap(),
            SkeinElement::chebyshev(v(2, 0)).scale(&LaurentPoly::a_pow(3))
        );
        assert_eq!(psi_inverse(&el("g(1,0)")), Err(Error::NotSymmetric { key: v(1, 0) }));
        assert_eq!(psi_inverse(&el("7")).unwrap().to_string(), "7");
    }

    #[test]
    fn text_and_json() {
        let x = el("A^-1 g(1,1) - 2 + (A + A^2) g(0,-3)");
        assert_eq!(x.to_string(), "-2 + (A + A^2) g(0,-3) + A^-1 g(1,1)");
        assert_eq!(el(&x.to_string()), x);
        let back = OrientedElement::from_json(&serde_json::from_str(&x.to_json().to_string()).unwrap());
        assert_eq!(back.unwrap(), x);
        assert!(OrientedElement::parse("g(1,").is_err());
    }
}
