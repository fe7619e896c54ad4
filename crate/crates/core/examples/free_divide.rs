//! A free divide with one free endpoint: classification, deformation of the
//! free end, and the monodromy of the resulting fibration.

use divide_shadow::doubling::double_free;
use divide_shadow::fibration::monodromy;
use divide_shadow::io::parse;
use divide_shadow::lf::find_lf_free;
use divide_shadow::shadow::{build_polyhedron, CONVENTION};

const SPIRAL: &str = "surface planar n=1
vertex c1 crossing
vertex c2 crossing
vertex b endpoint b=0@0
vertex f free
edge e1 c1.0 c2.0
edge e2 c1.1 c2.2
edge e3 c1.2 c2.1
edge e4 c1.3 b.0
edge e5 c2.3 f.0
";

fn main() -> divide_shadow::Result<()> {
    let d = parse(SPIRAL)?;
    for force in [None, Some(2)] {
        let fc = d.classify_free_as(force)?;
        let od = double_free(&d, &fc)?;
        let lf = find_lf_free(&build_polyhedron(&od, CONVENTION), &fc)?;
        let m = monodromy(&lf)?;
        println!("{}: {} vanishing cycles", fc.label(), lf.disks.len());
        for (t, disk) in m.twists.iter().zip(&lf.disks) {
            print!("{}\n{t}", disk.class.name());
        }
        println!("charpoly {}\n", m.charpoly);
    }
    Ok(())
}
