//! Enumerates small free divides and tallies the monodromy polynomials of
//! the fibered ones.

use std::collections::BTreeMap;

use divide_shadow::catalog::{fibered_free_divides, free_divides};
use divide_shadow::fibration::monodromy;
use divide_shadow::lf::lf_of_divide;

fn main() {
    for n in 1..=2 {
        let fibered = fibered_free_divides(n);
        println!(
            "{n} double points: {} free divides, {} fibered",
            free_divides(n).len(),
            fibered.len()
        );
        let mut tally: BTreeMap<String, usize> = BTreeMap::new();
        for (d, _) in &fibered {
            let key = match lf_of_divide(d, None).and_then(|lf| monodromy(&lf)) {
                Ok(m) => m.charpoly.to_string(),
                Err(e) => e.to_string(),
            };
            *tally.entry(key).or_default() += 1;
        }
        for (k, v) in tally {
            println!("  {v:3} x {k}");
        }
    }
}
