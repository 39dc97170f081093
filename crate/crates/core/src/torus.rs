//! Integer bookkeeping for curves on the torus.
//!
//! A vector `(a, b)` is a homology class `a·λ + b·μ`. A simple multicurve is
//! determined up to isotopy by an unordered pair `{v, -v}`, which we store by
//! its representative in the half-plane `a > 0 or (a = 0 and b > 0)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::text::Cursor;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec2 {
    pub a: i64,
    pub b: i64,
}

impl IntVec2 {
    pub const ZERO: IntVec2 = IntVec2 { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        IntVec2 { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// gcd of the absolute coordinates; 0 only for the zero vector.
    pub fn content(self) -> u64 {
        self.a.unsigned_abs().gcd(&self.b.unsigned_abs())
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    /// Whether the vector lies in the canonical half-plane.
    pub fn is_canonical(self) -> bool {
        self.a > 0 || (self.a == 0 && self.b > 0)
    }

    pub fn to_json(self) -> Value {
        Value::from(vec![self.a, self.b])
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Json("class vector must be a two-element array".into()))?;
        let coord = |x: &Value| {
            x.as_i64()
                .ok_or_else(|| Error::Json(format!("coordinate {x} is not an integer")))
        };
        Ok(IntVec2::new(coord(&arr[0])?, coord(&arr[1])?))
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Self> {
        cur.expect(b'(')?;
        let a = cur.signed_i64()?;
        cur.expect(b',')?;
        let b = cur.signed_i64()?;
        cur.expect(b')')?;
        Ok(IntVec2::new(a, b))
    }
}

/// `u.a·v.b - u.b·v.a`; its absolute value is the number of crossings of
/// the two multicurves in generic position.
pub fn det2(u: IntVec2, v: IntVec2) -> i64 {
    u.a * v.b - u.b * v.a
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for IntVec2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let v = Self::parse_from(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl From<(i64, i64)> for IntVec2 {
    fn from((a, b): (i64, i64)) -> Self {
        IntVec2::new(a, b)
    }
}

impl Add for IntVec2 {
    type Output = IntVec2;
    fn add(self, o: IntVec2) -> IntVec2 {
        IntVec2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for IntVec2 {
    type Output = IntVec2;
    fn sub(self, o: IntVec2) -> IntVec2 {
        IntVec2::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for IntVec2 {
    type Output = IntVec2;
    fn neg(self) -> IntVec2 {
        IntVec2::new(-self.a, -self.b)
    }
}

impl Mul<IntVec2> for i64 {
    type Output = IntVec2;
    fn mul(self, v: IntVec2) -> IntVec2 {
        IntVec2::new(self * v.a, self * v.b)
    }
}

/// Isotopy class of a simple multicurve on the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnorientedClass {
    Empty,
    Curve(IntVec2),
}

impl UnorientedClass {
    /// Class of `v`, with `(0,0)` meaning the empty curve.
    pub fn of(v: IntVec2) -> Self {
        canonicalize(v).0
    }

    pub fn vec(self) -> IntVec2 {
        match self {
            UnorientedClass::Empty => IntVec2::ZERO,
            UnorientedClass::Curve(v) => v,
        }
    }

    pub fn is_empty(self) -> bool {
        matches!(self, UnorientedClass::Empty)
    }

    pub fn to_json(self) -> Value {
        match self {
            UnorientedClass::Empty => Value::from("empty"),
            UnorientedClass::Curve(v) => v.to_json(),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if v.as_str() == Some("empty") {
            return Ok(UnorientedClass::Empty);
        }
        let vec = IntVec2::from_json(v)?;
        let (class, flipped) = canonicalize(vec);
        if flipped || class.is_empty() {
            return Err(Error::Json(format!("class {vec} is not canonical")));
        }
        Ok(class)
    }
}

impl fmt::Display for UnorientedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnorientedClass::Empty => write!(f, "1"),
            UnorientedClass::Curve(v) => write!(f, "{v}"),
        }
    }
}

/// Half-plane representative of `{v, -v}` and whether `v` had to be negated.
pub fn canonicalize(v: IntVec2) -> (UnorientedClass, bool) {
    if v.is_zero() {
        (UnorientedClass::Empty, false)
    } else if v.is_canonical() {
        (UnorientedClass::Curve(v), false)
    } else {
        (UnorientedClass::Curve(-v), true)
    }
}

/// Writes a non-empty class as `n · prim` with `prim` primitive.
pub fn split_primitive(c: UnorientedClass) -> Result<(u64, IntVec2)> {
    match c {
        UnorientedClass::Empty => Err(Error::EmptyClass),
        UnorientedClass::Curve(v) => Ok(split_vec(v).expect("non-empty class")),
    }
}

/// Same decomposition for any non-zero vector; the sign stays on `prim`.
pub fn split_vec(v: IntVec2) -> Option<(u64, IntVec2)> {
    let n = v.content();
    if n == 0 {
        return None;
    }
    let k = n as i64;
    Some((n, IntVec2::new(v.a / k, v.b / k)))
}

/// Integer vector `t` with `det2(p, t) = 1`, for primitive `p`.
pub(crate) fn unimodular_partner(p: IntVec2) -> IntVec2 {
    // det2(p, t) = p.a·t.b − p.b·t.a; extended gcd gives x·p.a + y·p.b = 1.
    let e = p.a.extended_gcd(&p.b);
    debug_assert_eq!(e.gcd.abs(), 1, "partner requested for non-primitive {p}");
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    let t = IntVec2::new(-y, x);
    debug_assert_eq!(det2(p, t), 1);
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> IntVec2 {
        IntVec2::new(a, b)
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(v(1, 0), v(0, 1)), 1);
        assert_eq!(det2(v(2, 0), v(0, 2)), 4);
        assert_eq!(det2(v(2, 0), v(0, 2)), 2 * 2 * det2(v(1, 0), v(0, 1)));
        assert_eq!(det2(v(1, 2), v(2, 4)), 0);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(v(-1, 1)), (UnorientedClass::Curve(v(1, -1)), true));
        assert_eq!(canonicalize(v(0, -3)), (UnorientedClass::Curve(v(0, 3)), true));
        assert_eq!(canonicalize(v(2, 4)), (UnorientedClass::Curve(v(2, 4)), false));
        assert_eq!(canonicalize(v(0, 0)), (UnorientedClass::Empty, false));
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_primitive(UnorientedClass::of(v(2, -2))).unwrap(), (2, v(1, -1)));
        assert_eq!(split_primitive(UnorientedClass::of(v(1, 0))).unwrap(), (1, v(1, 0)));
        assert_eq!(split_primitive(UnorientedClass::of(v(6, 4))).unwrap(), (2, v(3, 2)));
        assert_eq!(split_primitive(UnorientedClass::Empty), Err(Error::EmptyClass));
    }

    #[test]
    fn partner_is_unimodular() {
        for a in -7..=7i64 {
            for b in -7..=7i64 {
                let p = v(a, b);
                if p.is_primitive() {
                    assert_eq!(det2(p, unimodular_partner(p)), 1, "{p}");
                }
            }
        }
    }

    #[test]
    fn text_and_json() {
        assert_eq!("( -3 , 4 )".parse::<IntVec2>().unwrap(), v(-3, 4));
        assert!("(1,2".parse::<IntVec2>().is_err());
        assert_eq!(v(1, -2).to_string(), "(1,-2)");
        let c = UnorientedClass::of(v(-1, 2));
        assert_eq!(UnorientedClass::from_json(&c.to_json()).unwrap(), c);
        assert!(UnorientedClass::from_json(&serde_json::json!([-1, 2])).is_err());
        assert_eq!(
            UnorientedClass::from_json(&serde_json::json!("empty")).unwrap(),
            UnorientedClass::Empty
        );
    }
}
