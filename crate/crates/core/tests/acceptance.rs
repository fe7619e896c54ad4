//! End-to-end criteria A1 to A7. Runs without the test harness and prints
//! one line per criterion.

use std::path::PathBuf;
use std::process::ExitCode;

use divide_shadow::catalog::fibered_free_divides;
use divide_shadow::cli;
use divide_shadow::divide::{Divide, FreeCase};
use divide_shadow::doubling::{double_free, FaceTag};
use divide_shadow::fibration::{monodromy, Basis, Monodromy};
use divide_shadow::io::parse;
use divide_shadow::lf::{collapse, find_lf_free, lf_of_divide, verify, LfStructure};
use divide_shadow::linalg::{IntMatrix, IntPolynomial};
use divide_shadow::shadow::{build_polyhedron, recipe_gleam, Gleam, CONVENTION};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn load(name: &str) -> Divide {
    parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

/// Exact division of integer polynomials, ascending coefficients.
fn divide_exact(mut num: Vec<i64>, den: &[i64]) -> Vec<i64> {
    let (dn, lead) = (den.len() - 1, *den.last().unwrap());
    let mut q = vec![0; num.len() - dn];
    for k in (0..q.len()).rev() {
        let c = num[k + dn] / lead;
        assert_eq!(c * lead, num[k + dn]);
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            num[k + i] -= c * d;
        }
    }
    assert!(num.iter().all(|&x| x == 0), "inexact division");
    q
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `t^k - 1`.
fn power_minus_one(k: usize) -> Vec<i64> {
    let mut v = vec![0; k + 1];
    v[0] = -1;
    v[k] = 1;
    v
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
fn torus_alexander(p: usize, q: usize) -> IntPolynomial {
    let num = mul(&power_minus_one(p * q), &power_minus_one(1));
    let den = mul(&power_minus_one(p), &power_minus_one(q));
    IntPolynomial::new(divide_exact(num, &den))
}

struct Run {
    lf: LfStructure,
    m: Monodromy,
}

fn run(d: &Divide) -> Result<Run, String> {
    let lf = lf_of_divide(d, None).map_err(|e| e.to_string())?;
    let m = monodromy(&lf).map_err(|e| e.to_string())?;
    Ok(Run { lf, m })
}

/// Checks a torus knot divide against the oracle; `None` when all is well.
fn torus_case(name: &str, p: usize, q: usize, n: usize) -> Option<String> {
    let d = load(name);
    let r = match run(&d) {
        Ok(r) => r,
        Err(e) => return Some(format!("{name}: {e}")),
    };
    let want = torus_alexander(p, q);
    let found = r.lf.disks.len();
    if found != n || r.m.surface.betti1() != n || r.m.surface.boundary_components != 1 {
        return Some(format!(
            "{name}: {found} cycles, b1={}, boundary={}",
            r.m.surface.betti1(),
            r.m.surface.boundary_components
        ));
    }
    if r.m.charpoly.normalized() != want.normalized() {
        return Some(format!("{name}: charpoly {} expected {want}", r.m.charpoly));
    }
    None
}

fn a1() -> Result<String, String> {
    let d = load("trefoil.div");
    if !d.check_admissibility().unwrap().admissible() {
        return Err("trefoil not admissible".into());
    }
    match torus_case("trefoil.div", 2, 3, 2) {
        None => Ok(format!("charpoly {}", torus_alexander(2, 3))),
        Some(e) => Err(e),
    }
}

fn a2() -> Result<String, String> {
    for m in 1..=4 {
        let alternating: Vec<i64> = (0..=2 * m)
            .map(|k| if k % 2 == 0 { 1 } else { -1 })
            .collect();
        assert_eq!(torus_alexander(2, 2 * m + 1).coeffs, alternating);
        if let Some(e) = torus_case(&format!("snake-{}.div", 2 * m + 1), 2, 2 * m + 1, 2 * m) {
            return Err(e);
        }
    }
    Ok("m = 1..4".into())
}

fn a3() -> Result<String, String> {
    let d = load("chebyshev-3-5.div");
    let inside = d.regions().unwrap().num_inside();
    if d.double_points() != 4 || inside != 4 {
        return Err(format!(
            "{} double points, {inside} inside regions",
            d.double_points()
        ));
    }
    match torus_case("chebyshev-3-5.div", 3, 5, 8) {
        None => Ok(format!("charpoly {}", torus_alexander(3, 5))),
        Some(e) => Err(e),
    }
}

fn displayed_twists() -> Vec<IntMatrix> {
    let m = |r: [[i64; 4]; 4]| IntMatrix::new(r.iter().map(|x| x.to_vec()).collect());
    vec![
        m([[1, -1, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
        m([[1, 0, 0, 0], [1, 1, 0, -1], [0, 0, 1, 0], [0, 0, 0, 1]]),
        m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]]),
        m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-1, 1, 1, 1]]),
    ]
}

fn displayed_product() -> IntMatrix {
    IntMatrix::new(vec![
        vec![1, -1, 0, 1],
        vec![1, 0, 0, 0],
        vec![0, 0, 1, -1],
        vec![0, 1, 1, -1],
    ])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Signed permutation matrices `S` with `S T_i = M_i S` for every `i`.
fn conjugators(ours: &[IntMatrix], theirs: &[IntMatrix]) -> Vec<IntMatrix> {
    let n = ours[0].size();
    let mut out = Vec::new();
    for p in permutations(n) {
        for signs in 0..(1u32 << n) {
            let mut s = IntMatrix::zero(n);
            for (r, &c) in p.iter().enumerate() {
                s.rows[r][c] = if signs >> r & 1 == 1 { -1 } else { 1 };
            }
            if ours.iter().zip(theirs).all(|(t, m)| s.mul(t) == m.mul(&s)) {
                out.push(s);
            }
        }
    }
    out
}

fn a4() -> Result<String, String> {
    let theirs = displayed_twists();
    let target = IntPolynomial::new(vec![1, -1, 1, -1, 1]);
    let mut tried = 0;
    let mut hits = 0;
    for n in 0..=2 {
        for (d, fc) in fibered_free_divides(n) {
            let Ok(od) = double_free(&d, &fc) else {
                continue;
            };
            let Ok(lf) = find_lf_free(&build_polyhedron(&od, CONVENTION), &fc) else {
                continue;
            };
            let Ok(m) = monodromy(&lf) else { continue };
            tried += 1;
            if m.cycles.len() != 4 || m.basis != Basis::Vanishing || m.charpoly != target {
                continue;
            }
            let ss = conjugators(&m.twists, &theirs);
            if ss
                .iter()
                .any(|s| s.mul(&m.matrix) == displayed_product().mul(s))
            {
                hits += 1;
            }
        }
    }
    if hits == 0 {
        return Err(format!("no match among {tried} fibered free divides"));
    }
    Ok(format!("{hits} of {tried} fibered free divides match"))
}

fn a5() -> Result<String, String> {
    let mut names: Vec<String> = (1..=4)
        .map(|m| format!("snake-{}.div", 2 * m + 1))
        .collect();
    names.extend(["trefoil.div", "chebyshev-3-5.div", "free-ex.div"].map(String::from));
    let mut compared = 0;
    for name in &names {
        let r = run(&load(name))?;
        for reg in &r.lf.sp.regions {
            let Some(recipe) = recipe_gleam(&reg.tag) else {
                continue;
            };
            if recipe != reg.gleam {
                return Err(format!(
                    "{name}: region {} recipe {recipe:?} formula {:?}",
                    reg.face, reg.gleam
                ));
            }
            compared += 1;
        }
    }
    Ok(format!("{compared} regions on {} fixtures", names.len()))
}

fn properties(name: &str, r: &Run) -> Result<(), String> {
    let m = &r.m;
    let j = &m.form;
    let fail = |what: &str| Err(format!("{name}: {what}"));
    for t in m.twists.iter().chain([&m.matrix]) {
        if t.transpose().mul(j).mul(t) != *j {
            return fail("not symplectic");
        }
    }
    if m.twists.iter().any(|t| t.det() != 1) {
        return fail("twist with determinant other than 1");
    }
    let pair = |a: &[i64], b: &[i64]| -> i64 {
        (0..a.len())
            .map(|i| {
                (0..b.len())
                    .map(|k| a[i] * j.rows[i][k] * b[k])
                    .sum::<i64>()
            })
            .sum()
    };
    let disks = &r.lf.disks;
    for a in 0..disks.len() {
        for b in a + 1..disks.len() {
            if disks[a].class != disks[b].class {
                continue;
            }
            if pair(&m.coords[a], &m.coords[b]) != 0 {
                return fail("same-class cycles intersect");
            }
            if m.twists[a].mul(&m.twists[b]) != m.twists[b].mul(&m.twists[a]) {
                return fail("same-class twists do not commute");
            }
        }
    }
    if !r.lf.sp.integrality_failures().is_empty() {
        return fail("gleam integrality");
    }
    if !m.charpoly.is_palindromic() {
        return fail("charpoly not palindromic");
    }
    Ok(())
}

fn a6() -> Result<String, String> {
    let names = [
        "trefoil.div",
        "snake-5.div",
        "snake-7.div",
        "snake-9.div",
        "chebyshev-3-5.div",
        "free-ex.div",
    ];
    for name in names {
        let d = load(name);
        let r = run(&d)?;
        properties(name, &r)?;
        if d.classify_free().is_err() {
            let n = d.double_points() + d.regions().unwrap().num_inside();
            if r.lf.disks.len() != n {
                return Err(format!(
                    "{name}: {} cycles, count identity gives {n}",
                    r.lf.disks.len()
                ));
            }
        }
    }
    Ok(format!("{} fixtures", names.len()))
}

fn a7() -> Result<String, String> {
    let path = |n: &str| fixture(n).to_string_lossy().into_owned();
    let o = cli::run(["divide", "admissible", &path("two-circles.div")]);
    if o.code != cli::EXIT_REFUSED || !o.stdout.contains("connectivity fail") {
        return Err(format!("two circles: exit {}", o.code));
    }

    let r = run(&load("chebyshev-3-5.div"))?;
    let mut sp = r.lf.sp.clone();
    let c = collapse(&sp);
    let f = (0..sp.regions.len())
        .find(|&f| c.internal[f] && matches!(sp.regions[f].tag, FaceTag::Triangle { .. }))
        .or_else(|| {
            (0..sp.regions.len())
                .find(|&f| c.internal[f] && !r.lf.disks.iter().any(|d| d.face == f))
        })
        .ok_or("no internal region to corrupt")?;
    sp.regions[f].gleam = sp.regions[f].gleam.map(|g| g + Gleam::HALF);
    let (checks, eps) = verify(&sp, &c, &r.lf.disks);
    let iv = checks.iter().find(|k| k.name == "iv").unwrap();
    let named = iv
        .detail
        .trim_start_matches("regions=")
        .split(',')
        .any(|x| x == f.to_string());
    if eps.is_some() || iv.passed || !named {
        return Err(format!("corrupted region {f}: condition iv {}", iv.detail));
    }

    let d = load("neither.div");
    if !matches!(d.classify_free(), Ok(FreeCase::Neither { .. })) {
        return Err("neither fixture classified as fibered".into());
    }
    let o = cli::run(["divide", "lf", &path("neither.div")]);
    if o.code != cli::EXIT_REFUSED || !o.stdout.contains("free-case neither") {
        return Err(format!("neither: exit {}", o.code));
    }
    Ok(format!("connectivity, region {f} named, neither refused"))
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("A1", a1),
        ("A2", a2),
        ("A3", a3),
        ("A4", a4),
        ("A5", a5),
        ("A6", a6),
        ("A7", a7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(msg) => println!("{name} pass {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{name} fail {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
