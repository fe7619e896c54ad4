//! Gleams of the shadowed polyhedron, from crossing contributions and from
//! the provenance of each region.

use divide_shadow::doubling::double;
use divide_shadow::geometry::chebyshev;
use divide_shadow::shadow::{build_polyhedron, gleam_recipe, Convention};

fn main() -> divide_shadow::Result<()> {
    let od = double(&chebyshev(2, 3))?;
    let recipe = gleam_recipe(&od)?;
    for c in Convention::ALL {
        let sp = build_polyhedron(&od, c);
        let agree = sp.regions.iter().zip(&recipe).all(|(r, g)| r.gleam == *g);
        println!("{}: agrees with recipe = {agree}", c.name());
        if agree {
            print!("{}", sp.table());
        }
    }
    Ok(())
}
