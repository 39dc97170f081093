//! The oriented algebra, where products of curves are single monomials.
//!
//! ```bash
//! cargo run --example oriented_algebra
//! ```

use torus_skein::oriented::{self, gamma_mul, theta, OrientedElement};
use torus_skein::IntVec2;

fn main() -> Result<(), torus_skein::Error> {
    let e1 = IntVec2::new(1, 0);
    let e2 = IntVec2::new(0, 1);
    println!("g(1,0) g(0,1)  = {}", gamma_mul(e1, e2));
    println!("g(0,1) g(1,0)  = {}", gamma_mul(e2, e1));
    println!("g(1,0) g(-1,0) = {}", gamma_mul(e1, -e1));
    println!("g(1,1) g(1,-1) = {}", gamma_mul(IntVec2::new(1, 1), IntVec2::new(1, -1)));

    let x = OrientedElement::parse("g(1,0) + A^2 g(0,-2)")?;
    let y = OrientedElement::parse("2 - g(1,1)")?;
    let xy = oriented::mul(&x, &y);
    println!();
    println!("x = {x}");
    println!("y = {y}");
    println!("x y = {xy}");
    println!("theta(x y) = {}", theta(&xy));
    println!("theta(x) theta(y) = {}", oriented::mul(&theta(&x), &theta(&y)));
    Ok(())
}
