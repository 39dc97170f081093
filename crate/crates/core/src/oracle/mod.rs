//! Brute-force multiplication by superposition and smoothing.
//!
//! These routines never use the product-to-sum rule or the monomial rule of
//! the oriented algebra. They build the two multicurves in generic position,
//! resolve crossings explicitly, trace the resulting curves and reduce, so
//! they serve as ground truth for the fast products.
//!
//! Chart: with `P` over `R` and `det(P, R) > 0` the `A`-smoothing is
//! [`Resolution::Against`], so `(1,0) * (0,1) = A (1,-1) + A^-1 (1,1)`.

mod arrangement;
mod trace;

use std::collections::HashMap;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;

pub use arrangement::{Arrangement, Crossing, DEFAULT_BUDGET, U_IN, U_OUT, V_IN, V_OUT};
pub use trace::{trace, Resolution, TracedComponent};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::oriented::OrientedElement;
use crate::skein::{Basis, SkeinElement};
use crate::torus::{canonicalize, det2, split_primitive, split_vec, IntVec2, UnorientedClass};

/// Value of an oriented trivial circle with winding `w = ±1` is
/// `-A^{2·w·CIRCLE_EXPONENT_SIGN}`.
pub const CIRCLE_EXPONENT_SIGN: i64 = 1;

/// Options for the exponential state sum.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub budget: u32,
    /// Worker threads for state enumeration; 0 uses the global pool.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            workers: 0,
        }
    }
}

/// The resolution that gets the factor `A` at every crossing.
fn a_resolution(arr: &Arrangement) -> Resolution {
    if arr.chart_sign() > 0 {
        Resolution::Against
    } else {
        Resolution::Along
    }
}

/// Bit `i` of `mask` set means crossing `i` takes the `A^-1` smoothing.
pub fn state_resolutions(arr: &Arrangement, mask: u64) -> Vec<Resolution> {
    let a = a_resolution(arr);
    let b = match a {
        Resolution::Along => Resolution::Against,
        Resolution::Against => Resolution::Along,
    };
    (0..arr.crossing_count())
        .map(|i| if mask >> i & 1 == 1 { b } else { a })
        .collect()
}

/// One term of the unoriented state sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateRecord {
    pub mask: u64,
    /// `#A - #B` smoothings.
    pub exponent: i64,
    pub trivial_circles: u32,
    pub residual: UnorientedClass,
}

/// Evaluates one smoothing state of the superposition.
pub fn evaluate_state(arr: &Arrangement, mask: u64) -> Result<StateRecord> {
    let k = arr.crossing_count() as i64;
    let b_count = mask.count_ones() as i64;
    let comps = trace(arr, &state_resolutions(arr, mask), None)?;
    let mut circles = 0u32;
    let mut prim: Option<IntVec2> = None;
    let mut copies = 0i64;
    for comp in &comps {
        if comp.is_trivial() {
            circles += 1;
            continue;
        }
        let UnorientedClass::Curve(dir) = canonicalize(comp.homology).0 else {
            unreachable!()
        };
        match prim {
            Some(p) if p != dir => {
                return Err(Error::Internal(format!(
                    "state {mask:#b} mixes directions {p} and {dir}"
                )))
            }
            _ => prim = Some(dir),
        }
        copies += 1;
    }
    let residual = match prim {
        Some(p) => UnorientedClass::Curve(copies * p),
        None => UnorientedClass::Empty,
    };
    Ok(StateRecord {
        mask,
        exponent: k - 2 * b_count,
        trivial_circles: circles,
        residual,
    })
}

type Tally = HashMap<(i64, u32, UnorientedClass), u64>;

fn tally_range(arr: &Arrangement, range: std::ops::Range<u64>) -> Result<Tally> {
    let mut tally = Tally::new();
    for mask in range {
        let r = evaluate_state(arr, mask)?;
        *tally.entry((r.exponent, r.trivial_circles, r.residual)).or_default() += 1;
    }
    Ok(tally)
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (k, n) in b {
        *a.entry(k).or_default() += n;
    }
    a
}

/// Sums all `2^k` states of the superposition of `u` over `v`.
pub fn state_sum(arr: &Arrangement, config: &OracleConfig) -> Result<SkeinElement> {
    let total = 1u64 << arr.crossing_count();
    let chunk = 1u64 << 10;
    let chunks = total.div_ceil(chunk);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|i| tally_range(arr, i * chunk..((i + 1) * chunk).min(total)))
            .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))
    };
    let tally = if config.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?
    } else {
        run()?
    };
    let states: u64 = tally.values().sum();
    if states != total {
        return Err(Error::Internal(format!("visited {states} of {total} states")));
    }
    let delta = LaurentPoly::delta();
    let mut out = SkeinElement::zero(Basis::Standard);
    for ((exp, circles, class), n) in tally {
        let coeff = delta.pow(circles).shift(exp).scale(&BigInt::from(n));
        out.add_term(class, &coeff);
    }
    Ok(out)
}

/// Writes one line per state: `mask exponent circles residual`.
pub fn dump_states(arr: &Arrangement, out: &mut dyn Write) -> Result<()> {
    for mask in 0..(1u64 << arr.crossing_count()) {
        let r = evaluate_state(arr, mask)?;
        writeln!(
            out,
            "{:0width$b} {} {} {}",
            r.mask,
            r.exponent,
            r.trivial_circles,
            r.residual,
            width = arr.crossing_count().max(1)
        )
        .map_err(|e| Error::Internal(e.to_string()))?;
    }
    Ok(())
}

/// Product of two standard basis multicurves, `u` superposed over `v`.
pub fn unoriented_product(
    u: UnorientedClass,
    v: UnorientedClass,
    config: &OracleConfig,
) -> Result<SkeinElement> {
    let (uv, vv) = match (u, v) {
        (UnorientedClass::Empty, other) | (other, UnorientedClass::Empty) => {
            return Ok(SkeinElement::term(Basis::Standard, other, LaurentPoly::one()))
        }
        (UnorientedClass::Curve(a), UnorientedClass::Curve(b)) => (a, b),
    };
    if det2(uv, vv) == 0 {
        // Parallel: disjoint union of copies of one primitive curve.
        let (n, p) = split_primitive(u)?;
        let (m, _) = split_primitive(v)?;
        let merged = UnorientedClass::Curve((n + m) as i64 * p);
        return Ok(SkeinElement::term(Basis::Standard, merged, LaurentPoly::one()));
    }
    let arr = Arrangement::build(uv, vv, config.budget)?;
    state_sum(&arr, config)
}

/// Bookkeeping from one oriented resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedReport {
    pub result: OrientedElement,
    /// Exponent of `A` collected from smoothing crossings.
    pub crossing_exponent: i64,
    /// Exponent of `A` collected from deleting trivial circles.
    pub circle_exponent: i64,
    pub circles: u32,
    /// Sum of windings of the deleted trivial circles.
    pub removed_winding: i64,
    /// Sum of windings of the surviving essential components.
    pub essential_winding: i64,
    pub states_visited: u64,
}

/// Product `γ_u · γ_v` by the unique oriented smoothing.
pub fn oriented_product(u: IntVec2, v: IntVec2, config: &OracleConfig) -> Result<OrientedElement> {
    Ok(oriented_product_report(u, v, config)?.result)
}

pub fn oriented_product_report(
    u: IntVec2,
    v: IntVec2,
    config: &OracleConfig,
) -> Result<OrientedReport> {
    let nu = u.content() as usize;
    let nv = v.content() as usize;
    oriented_product_signed(u, &vec![1; nu], v, &vec![1; nv], config)
}

/// Oriented product where every parallel copy carries its own orientation:
/// copy `i` of family `u` runs along `sign · u/gcd(u)`.
pub fn oriented_product_signed(
    u: IntVec2,
    u_signs: &[i8],
    v: IntVec2,
    v_signs: &[i8],
    config: &OracleConfig,
) -> Result<OrientedReport> {
    for (w, signs) in [(u, u_signs), (v, v_signs)] {
        if signs.len() as u64 != w.content() {
            return Err(Error::SignCount {
                signs: signs.len(),
                copies: w.content(),
            });
        }
    }
    let net = |w: IntVec2, signs: &[i8]| -> IntVec2 {
        let s: i64 = signs.iter().map(|&x| x as i64).sum();
        split_vec(w).map_or(IntVec2::ZERO, |(_, p)| s * p)
    };
    if u.is_zero() || v.is_zero() || det2(u, v) == 0 {
        // No crossings: parallel curves cancel in opposite pairs.
        return Ok(OrientedReport {
            result: OrientedElement::gamma(net(u, u_signs) + net(v, v_signs)),
            crossing_exponent: 0,
            circle_exponent: 0,
            circles: 0,
            removed_winding: 0,
            essential_winding: 0,
            states_visited: 0,
        });
    }
    let arr = Arrangement::build(u, v, config.budget)?;
    let a_res = a_resolution(&arr);
    let mut resolution = Vec::with_capacity(arr.crossing_count());
    let mut crossing_exponent = 0;
    for c in arr.crossings() {
        let sigma = u_signs[c.u_copy as usize] as i64;
        let tau = v_signs[c.v_copy as usize] as i64;
        let r = if sigma * tau > 0 {
            Resolution::Along
        } else {
            Resolution::Against
        };
        crossing_exponent += if r == a_res { 1 } else { -1 };
        resolution.push(r);
    }
    // Start each component on a port that leaves in its orientation.
    let outgoing = |c: usize| -> [u8; 2] {
        let x = arr.crossings()[c];
        let u_out = if u_signs[x.u_copy as usize] > 0 { U_OUT } else { U_IN };
        let v_out = if v_signs[x.v_copy as usize] > 0 { V_OUT } else { V_IN };
        [u_out, v_out]
    };
    let comps = trace(&arr, &resolution, Some(&outgoing))?;
    let mut circles = 0;
    let mut removed_winding = 0;
    let mut essential_winding = 0;
    let mut key = IntVec2::ZERO;
    let mut coeff = LaurentPoly::a_pow(crossing_exponent);
    let mut circle_exponent = 0;
    let mut direction: Option<IntVec2> = None;
    for comp in comps {
        if comp.is_trivial() {
            circles += 1;
            removed_winding += comp.winding;
            let e = 2 * comp.winding * CIRCLE_EXPONENT_SIGN;
            circle_exponent += e;
            coeff = &coeff * &LaurentPoly::monomial(-1, e);
        } else {
            let dir = canonicalize(comp.homology).0;
            match direction {
                Some(d) if UnorientedClass::Curve(d) != dir => {
                    return Err(Error::Internal("oriented state mixes directions".into()))
                }
                _ => direction = Some(dir.vec()),
            }
            essential_winding += comp.winding;
            key = key + comp.homology;
        }
    }
    if key != net(u, u_signs) + net(v, v_signs) {
        return Err(Error::Internal("oriented homology is not conserved".into()));
    }
    Ok(OrientedReport {
        result: OrientedElement::monomial(key, coeff),
        crossing_exponent,
        circle_exponent,
        circles,
        removed_winding,
        essential_winding,
        states_visited: 1,
    })
}

/// All orientations of a standard basis multicurve, enumerated copy by copy.
pub fn psi_oracle(c: UnorientedClass) -> OrientedElement {
    let Ok((n, p)) = split_primitive(c) else {
        return OrientedElement::unit();
    };
    let mut out = OrientedElement::zero();
    for signs in sign_assignments(n as usize) {
        let net: i64 = signs.iter().map(|&s| s as i64).sum();
        out.add_term(net * p, &LaurentPoly::one());
    }
    out
}

/// `ψ(x)·ψ(y)` computed geometrically: every orientation of every copy of
/// both multicurves, each resolved by the oriented smoothing.
pub fn psi_product_oracle(
    x: UnorientedClass,
    y: UnorientedClass,
    config: &OracleConfig,
) -> Result<(OrientedElement, Vec<OrientedReport>)> {
    let (u, v) = (x.vec(), y.vec());
    let mut out = OrientedElement::zero();
    let mut reports = Vec::new();
    for su in sign_assignments(u.content() as usize) {
        for sv in sign_assignments(v.content() as usize) {
            let r = oriented_product_signed(u, &su, v, &sv, config)?;
            out.add_assign(&r.result);
            reports.push(r);
        }
    }
    Ok((out, reports))
}

fn sign_assignments(n: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1u64 << n).map(move |mask| {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oriented;
    use crate::skein;

    fn v(a: i64, b: i64) -> IntVec2 {
        IntVec2::new(a, b)
    }

    fn cls(a: i64, b: i64) -> UnorientedClass {
        UnorientedClass::of(v(a, b))
    }

    fn std_el(s: &str) -> SkeinElement {
        SkeinElement::parse(s, Basis::Standard).unwrap()
    }

    #[test]
    fn single_crossing_states() {
        let arr = Arrangement::build(v(1, 0), v(0, 1), DEFAULT_BUDGET).unwrap();
        let a = trace(&arr, &state_resolutions(&arr, 0), None).unwrap();
        let b = trace(&arr, &state_resolutions(&arr, 1), None).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(b.len(), 1);
        assert_eq!(a[0].winding, 0);
        let mut classes = [canonicalize(a[0].homology).0, canonicalize(b[0].homology).0];
        classes.sort();
        assert_eq!(classes, [cls(1, -1), cls(1, 1)]);
        // The A-state gives (1,-1).
        assert_eq!(canonicalize(a[0].homology).0, cls(1, -1));
    }

    #[test]
    fn unoriented_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            unoriented_product(cls(1, 0), cls(0, 1), &cfg).unwrap(),
            std_el("A(1,-1) + A^-1(1,1)")
        );
        assert_eq!(unoriented_product(cls(1, 0), cls(1, 0), &cfg).unwrap(), std_el("(2,0)"));
        assert_eq!(unoriented_product(cls(2, 0), cls(-1, 0), &cfg).unwrap(), std_el("(3,0)"));
        assert_eq!(
            unoriented_product(UnorientedClass::Empty, cls(2, 1), &cfg).unwrap(),
            std_el("(2,1)")
        );
        let x = unoriented_product(cls(1, 1), cls(1, -1), &cfg).unwrap();
        let fast = skein::mul(&SkeinElement::standard(v(1, 1)), &SkeinElement::standard(v(1, -1))).unwrap();
        assert_eq!(x, fast);
        assert_eq!(x, std_el("A^2(2,0) + A^-2(0,2) - 2A^2 - 2A^-2"));
    }

    #[test]
    fn trivial_circles_have_unit_winding() {
        let arr = Arrangement::build(v(1, 1), v(1, -1), DEFAULT_BUDGET).unwrap();
        let mut saw_circle = false;
        for mask in 0..4 {
            for comp in trace(&arr, &state_resolutions(&arr, mask), None).unwrap() {
                if comp.is_trivial() {
                    saw_circle = true;
                    assert_eq!(comp.winding.abs(), 1);
                } else {
                    assert_eq!(comp.winding, 0);
                }
            }
        }
        assert!(saw_circle);
    }

    #[test]
    fn oriented_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            oriented_product(v(1, 0), v(0, 1), &cfg).unwrap(),
            OrientedElement::monomial(v(1, 1), LaurentPoly::a_pow(-1))
        );
        assert_eq!(oriented_product(v(1, 0), v(-1, 0), &cfg).unwrap(), OrientedElement::unit());
        assert_eq!(
            oriented_product(v(1, 1), v(1, -1), &cfg).unwrap(),
            OrientedElement::monomial(v(2, 0), LaurentPoly::a_pow(2))
        );
        let r = oriented_product_report(v(2, 0), v(1, 3), &cfg).unwrap();
        assert_eq!(r.states_visited, 1);
        assert_eq!(r.result, oriented::gamma_mul(v(2, 0), v(1, 3)));
    }

    #[test]
    fn psi_oracle_examples() {
        assert_eq!(psi_oracle(cls(1, 0)), OrientedElement::parse("g(1,0) + g(-1,0)").unwrap());
        assert_eq!(psi_oracle(cls(2, 0)), OrientedElement::parse("g(2,0) + 2 + g(-2,0)").unwrap());
        assert_eq!(psi_oracle(UnorientedClass::Empty), OrientedElement::unit());
        for n in 1..=4 {
            let c = cls(n, -n);
            assert_eq!(psi_oracle(c), oriented::psi(&SkeinElement::standard(c.vec())).unwrap());
        }
    }

    #[test]
    fn mixed_orientations_produce_balanced_circles() {
        let cfg = OracleConfig::default();
        let (total, reports) = psi_product_oracle(cls(2, 0), cls(0, 2), &cfg).unwrap();
        assert!(reports.iter().any(|r| r.circles > 0));
        for r in &reports {
            assert_eq!(r.removed_winding + r.essential_winding, 0);
        }
        let expect = oriented::mul(
            &oriented::psi(&SkeinElement::standard(v(2, 0))).unwrap(),
            &oriented::psi(&SkeinElement::standard(v(0, 2))).unwrap(),
        );
        assert_eq!(total, expect);
    }

    #[test]
    fn state_count_and_dump() {
        let arr = Arrangement::build(v(1, 2), v(2, 1), DEFAULT_BUDGET).unwrap();
        let mut buf = Vec::new();
        dump_states(&arr, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 8);
        assert!(text.starts_with("000 3 "));
    }

    #[test]
    fn parallel_workers_agree() {
        let seq = unoriented_product(cls(2, 1), cls(-1, 3), &OracleConfig { budget: 24, workers: 1 }).unwrap();
        let par = unoriented_product(cls(2, 1), cls(-1, 3), &OracleConfig { budget: 24, workers: 4 }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn signs_must_match_copies() {
        let cfg = OracleConfig::default();
        assert!(matches!(
            oriented_product_signed(v(2, 0), &[1], v(0, 1), &[1], &cfg),
            Err(Error::SignCount { .. })
        ));
    }
}
