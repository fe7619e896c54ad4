//! Doubles a divide and lists where every face of the doubled curve comes from.

use divide_shadow::doubling::{checkerboard, double};
use divide_shadow::geometry::torus_2;
use divide_shadow::shadow::provenance;

fn main() -> divide_shadow::Result<()> {
    let d = torus_2(2);
    let coloring = checkerboard(&d)?;
    println!("colors {:?}", coloring.colors);

    let od = double(&d)?;
    println!(
        "{} crossings on {} components",
        od.crossings(),
        od.curve.strands().len()
    );
    for name in ["region", "quad", "triangle", "bigon", "outside"] {
        println!("{name:>9} {}", od.count(name));
    }
    for (f, tag) in od.face_tags.iter().enumerate() {
        println!("face {f:2} {}", provenance(tag));
    }
    Ok(())
}
