//! Multiplication by drawing one multicurve over another and smoothing
//! every crossing, compared with the product-to-sum rule.
//!
//! ```bash
//! cargo run --example smoothing_oracle
//! cargo run --example smoothing_oracle -- "(1,2)" "(2,1)"
//! ```

use torus_skein::oracle::{self, Arrangement, OracleConfig};
use torus_skein::skein::{self, SkeinElement};
use torus_skein::torus::det2;
use torus_skein::{IntVec2, UnorientedClass};

fn main() -> Result<(), torus_skein::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (u, v): (IntVec2, IntVec2) = if args.len() == 2 {
        (args[0].parse()?, args[1].parse()?)
    } else {
        (IntVec2::new(1, 2), IntVec2::new(2, 1))
    };
    let cfg = OracleConfig::default();

    println!("{u} over {v}: {} crossings", det2(u, v).abs());
    if det2(u, v) != 0 {
        let arr = Arrangement::build(u, v, cfg.budget)?;
        println!("state  exponent  circles  residual");
        let mut dump = Vec::new();
        oracle::dump_states(&arr, &mut dump)?;
        print!("{}", String::from_utf8_lossy(&dump));
    }

    let slow = oracle::unoriented_product(UnorientedClass::of(u), UnorientedClass::of(v), &cfg)?;
    let fast = skein::mul(&SkeinElement::standard(u), &SkeinElement::standard(v))?;
    println!("oracle:         {slow}");
    println!("product-to-sum: {fast}");

    let report = oracle::oriented_product_report(u, v, &cfg)?;
    println!("oriented:       {}  (crossing exponent {})", report.result, report.crossing_exponent);
    Ok(())
}
