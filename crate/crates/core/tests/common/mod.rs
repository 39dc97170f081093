#![allow(dead_code)]

use torus_skein::bracket::{mirror, torus_two, PdCode};

/// Named planar diagrams with at most eight crossings.
pub fn corpus() -> Vec<(&'static str, PdCode)> {
    let pd = |s: &str| PdCode::parse(s).unwrap();
    let hopf = pd("X(1,3,2,4) X(3,1,4,2)");
    vec![
        ("unknot", PdCode::unknot()),
        ("two-component unlink", pd("O O")),
        ("positive kink", pd("X(1,1,2,2)")),
        ("negative kink", pd("X(1,2,2,1)")),
        ("hopf link", hopf.clone()),
        ("mirrored hopf link", mirror(&hopf)),
        ("hopf link and a loop", pd("X(1,3,2,4) X(3,1,4,2) O")),
        ("trefoil", torus_two(3)),
        ("figure eight", pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")),
        ("solomon link", torus_two(4)),
        ("cinquefoil", torus_two(5)),
        ("three-twist knot", pd("X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)")),
        ("stevedore", pd("X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)")),
        ("septafoil", torus_two(7)),
        ("(2,8) torus link", torus_two(8)),
    ]
}
