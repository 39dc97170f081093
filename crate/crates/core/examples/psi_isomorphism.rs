//! Summing over orientations turns skein products into oriented products.
//!
//! ```bash
//! cargo run --example psi_isomorphism
//! ```

use torus_skein::oriented::{self, psi, psi_inverse, psi_t};
use torus_skein::skein::{self, Basis, SkeinElement};

fn main() -> Result<(), torus_skein::Error> {
    let x = SkeinElement::parse("(2,0)", Basis::Standard)?;
    let y = SkeinElement::parse("(1,1)", Basis::Standard)?;
    println!("psi{x} = {}", psi(&x)?);
    println!("psi{y} = {}", psi(&y)?);

    let product = skein::mul(&x, &y)?;
    let lhs = psi(&product)?;
    let rhs = oriented::mul(&psi(&x)?, &psi(&y)?);
    println!();
    println!("{x} * {y} = {product}");
    println!("psi of the product      = {lhs}");
    println!("product of the images   = {rhs}");
    assert_eq!(lhs, rhs);

    // In the Chebyshev basis psi is just symmetrization.
    let t = SkeinElement::parse("A^3 (2,0)_T + (1,-1)_T", Basis::ChebyshevT)?;
    let image = psi_t(&t)?;
    println!();
    println!("psi_T({t}) = {image}");
    println!("and back: {}", psi_inverse(&image)?);
    Ok(())
}
