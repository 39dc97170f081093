//! Products of torus curves with the product-to-sum rule.
//!
//! ```bash
//! cargo run --example product_to_sum
//! cargo run --example product_to_sum -- "(2,1)" "(1,3)"
//! ```

use torus_skein::skein::{self, Basis, SkeinElement};

fn main() -> Result<(), torus_skein::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = if args.len() == 2 {
        vec![(args[0].clone(), args[1].clone())]
    } else {
        [("(1,0)", "(0,1)"), ("(0,1)", "(1,0)"), ("(1,1)", "(1,-1)"), ("(2,0)", "(0,1)")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    };

    for (a, b) in pairs {
        let x = SkeinElement::parse(&a, Basis::ChebyshevT)?;
        let y = SkeinElement::parse(&b, Basis::ChebyshevT)?;
        println!("{x} * {y} = {}", skein::mul_t(&x, &y)?);

        // The same product between multicurves, in the standard basis.
        let xs = x.from_t_basis()?;
        let ys = y.from_t_basis()?;
        println!("  as multicurves: ({xs}) * ({ys}) = {}", skein::mul(&xs, &ys)?);
    }
    Ok(())
}
