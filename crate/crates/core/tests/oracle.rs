use proptest::prelude::*;

use torus_skein::oracle::{self, Arrangement, OracleConfig};
use torus_skein::oriented;
use torus_skein::skein::{self, SkeinElement};
use torus_skein::torus::{det2, IntVec2, UnorientedClass};

fn pair(bound: i64, max_det: i64) -> impl Strategy<Value = (IntVec2, IntVec2)> {
    let v = move || (-bound..=bound, -bound..=bound).prop_map(|(a, b)| IntVec2::new(a, b));
    (v(), v()).prop_filter("crossing count in range", move |(u, w)| {
        let d = det2(*u, *w).abs();
        d > 0 && d <= max_det
    })
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn arrangement_invariants((u, v) in pair(9, 14)) {
        let arr = Arrangement::build(u, v, 24).unwrap();
        prop_assert_eq!(arr.crossing_count() as i64, det2(u, v).abs());
        arr.check().unwrap();
    }

    #[test]
    fn product_to_sum_beyond_the_sweep((u, v) in pair(7, 9)) {
        let (x, y) = (UnorientedClass::of(u), UnorientedClass::of(v));
        let slow = oracle::unoriented_product(x, y, &OracleConfig::default()).unwrap();
        let fast = skein::mul(&SkeinElement::standard(u), &SkeinElement::standard(v)).unwrap();
        prop_assert_eq!(slow, fast);
    }

    #[test]
    fn monomial_rule_beyond_the_sweep((u, v) in pair(12, 20)) {
        let r = oracle::oriented_product_report(u, v, &OracleConfig::default()).unwrap();
        prop_assert_eq!(r.result, oriented::gamma_mul(u, v));
        prop_assert_eq!(r.crossing_exponent, -det2(u, v));
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let (x, y) = (UnorientedClass::of(IntVec2::new(3, 1)), UnorientedClass::of(IntVec2::new(-1, 3)));
    let base = oracle::unoriented_product(x, y, &OracleConfig { budget: 24, workers: 1 }).unwrap();
    for workers in [2, 3, 8] {
        let r = oracle::unoriented_product(x, y, &OracleConfig { budget: 24, workers }).unwrap();
        assert_eq!(r, base);
    }
}
