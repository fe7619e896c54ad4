//! Reads a divide file and prints its regions and admissibility.
//!
//! ```text
//! cargo run --example parse_divide -- fixtures/trefoil.div
//! ```

use divide_shadow::io::{emit, parse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fixtures/trefoil.div".into());
    let d = parse(&std::fs::read_to_string(&path)?)?;
    println!(
        "{} double points, {} edges",
        d.double_points(),
        d.edges().len()
    );

    let regions = d.regions()?;
    for r in &regions.regions {
        println!("region {} outside={} euler={}", r.id, r.outside, r.euler);
    }
    print!("{}", d.check_admissibility()?);
    print!("{}", emit(&d));
    Ok(())
}
