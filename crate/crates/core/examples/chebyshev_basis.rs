//! Chebyshev polynomials and the change of basis they induce.
//!
//! ```bash
//! cargo run --example chebyshev_basis
//! ```

use torus_skein::chebyshev::{cheb_t, power_in_t};
use torus_skein::skein::{chebyshev_of, SkeinElement};
use torus_skein::{IntVec2, LaurentPoly};

fn main() -> Result<(), torus_skein::Error> {
    let x: LaurentPoly = "A + A^-1".parse()?;
    for n in 0..=6 {
        let t = cheb_t(n);
        println!("T_{n} = {t}    T_{n}(A + A^-1) = {}", t.eval_laurent(&x));
    }

    println!();
    for n in 1..=5usize {
        let parts: Vec<String> = power_in_t(n)
            .iter()
            .rev()
            .map(|(k, c)| if *k == 0 { format!("{c}") } else { format!("{c} T_{k}") })
            .collect();
        println!("X^{n} = {}", parts.join(" + "));
    }

    println!();
    for v in [IntVec2::new(2, 0), IntVec2::new(3, -3), IntVec2::new(4, 2)] {
        let std = SkeinElement::standard(v);
        println!("{v}_T = {}    {v} = {}", chebyshev_of(v), std.to_t_basis()?);
    }
    Ok(())
}
