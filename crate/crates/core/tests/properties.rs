use std::path::PathBuf;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use divide_shadow::divide::Divide;
use divide_shadow::doubling::{checkerboard, double, double_colored};
use divide_shadow::fibration::monodromy;
use divide_shadow::geometry::chebyshev;
use divide_shadow::io::{emit, parse};
use divide_shadow::lf::{collapse, collapse_in_order, find_lf, lf_of_divide, search_lf, Class};
use divide_shadow::linalg::IntPolynomial;
use divide_shadow::shadow::{build_polyhedron, CONVENTION};

const DIVIDES: [&str; 6] = [
    "trefoil.div",
    "snake-5.div",
    "snake-7.div",
    "snake-9.div",
    "chebyshev-3-5.div",
    "free-ex.div",
];

fn load(name: &str) -> Divide {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn charpoly(d: &Divide) -> IntPolynomial {
    monodromy(&lf_of_divide(d, None).unwrap()).unwrap().charpoly
}

#[test]
fn fixtures_round_trip() {
    for name in DIVIDES.iter().chain(&["two-circles.div", "neither.div"]) {
        let d = load(name);
        assert_eq!(parse(&emit(&d)).unwrap(), d, "{name}");
    }
}

#[test]
fn swapped_colors_give_the_mirror() {
    for name in &DIVIDES[..5] {
        let d = load(name);
        let swapped = double_colored(&d, &checkerboard(&d).unwrap().swapped()).unwrap();
        let lf = find_lf(&build_polyhedron(&swapped, CONVENTION)).unwrap();
        let p = monodromy(&lf).unwrap().charpoly;
        let mirror = IntPolynomial::new(charpoly(&d).coeffs.into_iter().rev().collect());
        assert!(p.equivalent(&mirror).unwrap(), "{name}");
    }
}

#[test]
fn collapse_is_confluent() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for name in DIVIDES {
        let sp = lf_of_divide(&load(name), None).unwrap().sp;
        let canonical = collapse(&sp);
        let mut order: Vec<usize> = (0..sp.regions.len()).collect();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            assert_eq!(
                collapse_in_order(&sp, order.iter().copied()),
                canonical,
                "{name}"
            );
        }
    }
}

#[test]
fn same_class_disks_are_disjoint() {
    for name in DIVIDES {
        let lf = lf_of_divide(&load(name), None).unwrap();
        let od = &lf.sp.od;
        let map = od.map();
        for class in Class::ALL {
            let mut seen = vec![false; map.num_vertices()];
            for d in lf.disks.iter().filter(|d| d.class == class) {
                let mut here: Vec<usize> = od.faces.walks[d.face]
                    .iter()
                    .map(|&x| map.vertex(x))
                    .collect();
                here.sort();
                here.dedup();
                for v in here {
                    assert!(!seen[v], "{name}: two {} disks meet", class.name());
                    seen[v] = true;
                }
            }
        }
    }
}

#[test]
fn search_contains_the_fast_path() {
    for name in ["trefoil.div", "snake-5.div"] {
        let sp = build_polyhedron(&double(&load(name)).unwrap(), CONVENTION);
        let fast = find_lf(&sp).unwrap();
        let all = search_lf(&sp, 0).unwrap();
        assert!(all.iter().any(|lf| lf.disks == fast.disks), "{name}");
    }
}

#[test]
fn twists_within_a_class_commute() {
    let lf = lf_of_divide(&load("chebyshev-3-5.div"), None).unwrap();
    let m = monodromy(&lf).unwrap();
    let mut ordered = lf.clone();
    // reverse the order inside every class
    ordered
        .disks
        .sort_by(|a, b| a.class.cmp(&b.class).then(b.face.cmp(&a.face)));
    let sigma: Vec<usize> = ordered
        .disks
        .iter()
        .map(|d| lf.disks.iter().position(|e| e.face == d.face).unwrap())
        .collect();
    let n = sigma.len();
    let permuted: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| m.matrix.rows[sigma[i]][sigma[j]]).collect())
        .collect();
    assert_eq!(monodromy(&ordered).unwrap().matrix.rows, permuted);
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn chebyshev_divides_have_palindromic_monodromy(p in 2u32..5, q in 3u32..8) {
        prop_assume!(p < q && gcd(p, q) == 1);
        let d = chebyshev(p, q);
        let lf = lf_of_divide(&d, None).unwrap();
        let m = monodromy(&lf).unwrap();
        let mu = ((p - 1) * (q - 1)) as usize;
        prop_assert_eq!(lf.disks.len(), mu);
        prop_assert_eq!(m.charpoly.degree(), mu);
        prop_assert!(m.charpoly.is_palindromic());
        prop_assert_eq!(m.charpoly.coeffs.iter().sum::<i64>().abs(), 1);
    }
}
