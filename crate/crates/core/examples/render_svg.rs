//! Writes schematic drawings of the three stages to the temp directory.

use divide_shadow::doubling::double;
use divide_shadow::geometry::chebyshev;
use divide_shadow::shadow::{build_polyhedron, CONVENTION};
use divide_shadow::svg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = chebyshev(3, 4);
    let sp = build_polyhedron(&double(&d)?, CONVENTION);
    let dir = std::env::temp_dir();
    for (name, text) in [
        ("divide", svg::render_divide(&d)),
        ("doubled", svg::render_doubled(&sp.od)),
        ("shadow", svg::render_shadow(&sp)),
    ] {
        let path = dir.join(format!("chebyshev-3-4-{name}.svg"));
        std::fs::write(&path, text)?;
        println!("{}", path.display());
    }
    Ok(())
}
