//! Builds divides from polylines in the unit disk.

use divide_shadow::geometry::{chebyshev, divide_from_curves, Curve};
use divide_shadow::io::emit;

fn main() -> divide_shadow::Result<()> {
    // a figure eight curve sitting inside the disk, with its two lobes as inside regions
    let eight: Vec<(f64, f64)> = (0..64)
        .map(|k| {
            let t = std::f64::consts::TAU * (k as f64 + 0.5) / 64.0;
            (0.6 * t.sin(), 0.4 * t.sin() * t.cos())
        })
        .collect();
    let d = divide_from_curves(&[Curve::closed(eight)])?;
    println!(
        "figure eight: {} double point, {} inside regions",
        d.double_points(),
        d.regions()?.num_inside()
    );
    print!("{}", emit(&d));

    for (p, q) in [(2, 3), (3, 4), (3, 5)] {
        let d = chebyshev(p, q);
        println!("chebyshev({p},{q}): {} double points", d.double_points());
    }
    Ok(())
}
