//! Finds the LF-structure of a shadowed polyhedron and prints the
//! verification of every condition.

use divide_shadow::doubling::double;
use divide_shadow::geometry::chebyshev;
use divide_shadow::lf::{find_lf, search_lf};
use divide_shadow::shadow::{build_polyhedron, CONVENTION};

fn main() -> divide_shadow::Result<()> {
    let sp = build_polyhedron(&double(&chebyshev(3, 4))?, CONVENTION);
    let lf = find_lf(&sp)?;
    print!("{lf}");

    // the exhaustive search also finds it, among others
    let small = build_polyhedron(&double(&chebyshev(2, 3))?, CONVENTION);
    let all = search_lf(&small, 0)?;
    println!("trefoil: {} LF-structures by search", all.len());
    Ok(())
}
