//! Exhaustive comparison of the fast products against the smoothing oracle
//! over a box of curve classes.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{self, OracleConfig};
use crate::oriented;
use crate::skein::{self, SkeinElement};
use crate::torus::{det2, IntVec2, UnorientedClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    /// Bound on `|a|`, `|b|` of every class.
    pub max_coord: u32,
    /// Pairs with `|det|` above this are skipped.
    pub max_det: u32,
    /// Largest multiplicity used in the ψ check.
    pub max_multiplicity: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_coord: 3,
            max_det: 10,
            max_multiplicity: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckSummary>,
    pub failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}: {} cases ok", c.name, c.cases)?;
        }
        match &self.failure {
            None => write!(f, "all checks passed"),
            Some(c) => write!(f, "FAILED {}: {}", c.check, c.detail),
        }
    }
}

/// Nonzero vectors with both coordinates in `[-m, m]`.
pub fn vectors(max_coord: u32) -> Vec<IntVec2> {
    let m = max_coord as i64;
    (-m..=m)
        .flat_map(|a| (-m..=m).map(move |b| IntVec2::new(a, b)))
        .filter(|v| !v.is_zero())
        .collect()
}

/// Nonempty unoriented classes in the box, one per `±` pair.
pub fn classes(max_coord: u32) -> Vec<UnorientedClass> {
    vectors(max_coord)
        .into_iter()
        .filter(|v| v.is_canonical())
        .map(UnorientedClass::Curve)
        .collect()
}

fn pairs<T: Copy>(items: &[T], keep: impl Fn(T, T) -> bool) -> Vec<(T, T)> {
    items
        .iter()
        .flat_map(|&x| items.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| keep(x, y))
        .collect()
}

fn first_failure<T: Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> Option<String> {
    cases
        .par_iter()
        .map(|c| match check(c) {
            Ok(x) => x,
            Err(e) => Some(e.to_string()),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// Standard basis product through the Chebyshev basis against the state sum.
pub fn check_product_to_sum(b: &SweepBounds, cfg: &OracleConfig) -> (u64, Option<String>) {
    let cases = pairs(&classes(b.max_coord), |x, y| {
        det2(x.vec(), y.vec()).unsigned_abs() <= b.max_det as u64
    });
    let fail = first_failure(&cases, |&(x, y)| {
        let fast = skein::mul(&SkeinElement::standard(x.vec()), &SkeinElement::standard(y.vec()))?;
        let slow = oracle::unoriented_product(x, y, cfg)?;
        Ok((fast != slow).then(|| format!("{x} * {y}: product-to-sum gives {fast}, oracle gives {slow}")))
    });
    (cases.len() as u64, fail)
}

/// Monomial rule against the oriented smoothing, with the grading identities.
pub fn check_oriented(b: &SweepBounds, cfg: &OracleConfig) -> (u64, Option<String>) {
    let cases = pairs(&vectors(b.max_coord), |u, v| {
        det2(u, v).unsigned_abs() <= b.max_det as u64
    });
    let fail = first_failure(&cases, |&(u, v)| {
        let fast = oriented::gamma_mul(u, v);
        let r = oracle::oriented_product_report(u, v, cfg)?;
        if fast != r.result {
            return Ok(Some(format!(
                "g{u} * g{v}: monomial rule gives {fast}, oracle gives {}",
                r.result
            )));
        }
        Ok(grading_violation(&r).map(|m| format!("g{u} * g{v}: {m}")))
    });
    (cases.len() as u64, fail)
}

/// Checks the winding bookkeeping of one oriented resolution.
pub fn grading_violation(r: &oracle::OrientedReport) -> Option<String> {
    if r.circle_exponent % 2 != 0 || r.circle_exponent / 2 + r.removed_winding * oracle::CIRCLE_EXPONENT_SIGN != 0 {
        return Some(format!(
            "circle exponent {} does not match removed winding {}",
            r.circle_exponent, r.removed_winding
        ));
    }
    if r.removed_winding + r.essential_winding != 0 {
        return Some(format!(
            "removed winding {} and essential winding {} do not cancel",
            r.removed_winding, r.essential_winding
        ));
    }
    None
}

/// Classes `n·p` with `p` primitive in the box and `n` up to the bound.
pub fn multiple_classes(b: &SweepBounds) -> Vec<UnorientedClass> {
    classes(b.max_coord)
        .into_iter()
        .filter(|c| c.vec().is_primitive())
        .flat_map(|c| (1..=b.max_multiplicity as i64).map(move |n| UnorientedClass::Curve(n * c.vec())))
        .collect()
}

/// `ψ` carries the oracle product to the product of images.
pub fn check_psi(b: &SweepBounds, cfg: &OracleConfig) -> (u64, Option<String>) {
    let cases = pairs(&multiple_classes(b), |x, y| {
        det2(x.vec(), y.vec()).unsigned_abs() <= b.max_det as u64
    });
    let fail = first_failure(&cases, |&(x, y)| {
        let prod = oracle::unoriented_product(x, y, cfg)?;
        let lhs = oriented::psi(&prod)?;
        let rhs = oriented::mul(
            &oriented::psi(&SkeinElement::standard(x.vec()))?,
            &oriented::psi(&SkeinElement::standard(y.vec()))?,
        );
        Ok((lhs != rhs).then(|| format!("psi({x} * {y}) = {lhs} but psi({x}) psi({y}) = {rhs}")))
    });
    (cases.len() as u64, fail)
}

type Check = fn(&SweepBounds, &OracleConfig) -> (u64, Option<String>);

/// Runs every check in order, stopping at the first failing one.
pub fn run(b: &SweepBounds, cfg: &OracleConfig) -> Result<VerifyReport> {
    let body = || {
        let mut report = VerifyReport {
            checks: Vec::new(),
            failure: None,
        };
        let checks: [(&'static str, Check); 3] = [
            ("product-to-sum vs oracle", check_product_to_sum),
            ("oriented monomial rule and grading", check_oriented),
            ("psi homomorphism", check_psi),
        ];
        for (name, f) in checks {
            let (cases, fail) = f(b, cfg);
            if let Some(detail) = fail {
                report.failure = Some(Counterexample { check: name, detail });
                break;
            }
            report.checks.push(CheckSummary { name, cases });
        }
        report
    };
    if cfg.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        Ok(pool.install(body))
    } else {
        Ok(body())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(vectors(1).len(), 8);
        assert_eq!(classes(1).len(), 4);
        assert_eq!(classes(3).len(), 24);
        let b = SweepBounds {
            max_coord: 1,
            max_det: 2,
            max_multiplicity: 2,
        };
        assert_eq!(multiple_classes(&b).len(), 8);
    }

    #[test]
    fn small_sweep_passes_and_is_worker_independent() {
        let b = SweepBounds {
            max_coord: 2,
            max_det: 4,
            max_multiplicity: 2,
        };
        let one = run(&b, &OracleConfig { budget: 24, workers: 1 }).unwrap();
        let four = run(&b, &OracleConfig { budget: 24, workers: 4 }).unwrap();
        assert!(one.passed(), "{one}");
        assert_eq!(one, four);
        assert_eq!(one.checks.len(), 3);
    }

    #[test]
    fn grading_catches_bad_bookkeeping() {
        let mut r = oracle::oriented_product_report(
            IntVec2::new(1, 0),
            IntVec2::new(0, 1),
            &OracleConfig::default(),
        )
        .unwrap();
        assert_eq!(grading_violation(&r), None);
        r.removed_winding = 1;
        assert!(grading_violation(&r).is_some());
    }
}
