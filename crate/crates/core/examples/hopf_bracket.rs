//! Kauffman bracket of a few planar diagrams.
//!
//! ```bash
//! cargo run --example hopf_bracket
//! cargo run --example hopf_bracket -- "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
//! ```

use torus_skein::bracket::{disjoint_union, kauffman_bracket, mirror, torus_two, PdCode};

fn main() -> Result<(), torus_skein::Error> {
    if let Some(arg) = std::env::args().nth(1) {
        let d: PdCode = arg.parse()?;
        println!("<{d}> = {}", kauffman_bracket(&d)?);
        return Ok(());
    }

    let hopf: PdCode = "X(1,3,2,4) X(3,1,4,2)".parse()?;
    println!("Hopf link        {}", kauffman_bracket(&hopf)?);
    println!("its mirror       {}", kauffman_bracket(&mirror(&hopf))?);

    let kink: PdCode = "X(1,1,2,2)".parse()?;
    println!("one kink         {}", kauffman_bracket(&kink)?);
    println!("two loops        {}", kauffman_bracket(&"O O".parse()?)?);

    for n in 3..=5 {
        let t = torus_two(n);
        println!("T(2,{n})  w={:<3}  {}", t.writhe(), kauffman_bracket(&t)?);
    }

    let both = disjoint_union(&hopf, &torus_two(3));
    println!("Hopf + trefoil   {}", kauffman_bracket(&both)?);
    Ok(())
}
