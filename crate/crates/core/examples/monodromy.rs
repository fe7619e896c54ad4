//! Monodromy of torus knot divides against the torus knot Alexander polynomial.

use divide_shadow::fibration::monodromy;
use divide_shadow::geometry::{chebyshev, torus_2};
use divide_shadow::lf::lf_of_divide;

fn main() -> divide_shadow::Result<()> {
    for (name, d) in [
        ("T(2,3)", chebyshev(2, 3)),
        ("T(2,7)", torus_2(3)),
        ("T(3,4)", chebyshev(3, 4)),
    ] {
        let m = monodromy(&lf_of_divide(&d, None)?)?;
        println!(
            "{name}: genus {} with {} boundary component",
            m.surface.genus(),
            m.surface.boundary_components
        );
        print!("{}", m.matrix);
        println!("charpoly {}\n", m.charpoly);
    }
    Ok(())
}
