use divide_shadow::cli::{run, Outcome, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_REFUSED};
use divide_shadow::error::Error;
use divide_shadow::io::parse;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn divide(args: &[&str]) -> Outcome {
    run(std::iter::once("divide").chain(args.iter().copied()))
}

#[test]
fn monodromy_of_the_trefoil() {
    let o = divide(&["monodromy", &fixture("trefoil.div")]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o
        .stdout
        .starts_with("# convention crossing=out-positive twist=+1"));
    assert!(o.stdout.lines().any(|l| l == "charpoly 1 -1 1"));
}

#[test]
fn two_circles_are_refused() {
    let o = divide(&["admissible", &fixture("two-circles.div")]);
    assert_eq!(o.code, EXIT_REFUSED);
    assert!(o.stdout.contains("check connectivity fail"));
    assert_eq!(
        divide(&["lf", &fixture("two-circles.div")]).code,
        EXIT_REFUSED
    );
}

#[test]
fn alexander_of_the_free_example() {
    let ok = divide(&[
        "alexander",
        &fixture("free-ex.div"),
        "--expect",
        "1 -1 1 -1 1",
    ]);
    assert_eq!(ok.code, EXIT_OK, "{}{}", ok.stdout, ok.stderr);
    let wrong = divide(&[
        "alexander",
        &fixture("free-ex.div"),
        "--expect",
        "1 -3 1 -3 1",
    ]);
    assert_eq!(wrong.code, EXIT_MISMATCH);
    let degree = divide(&[
        "alexander",
        &fixture("trefoil.div"),
        "--expect",
        "1 -1 1 -1 1",
    ]);
    assert_eq!(degree.code, EXIT_MISMATCH);
}

#[test]
fn free_case_can_be_forced() {
    let one = divide(&["lf", &fixture("free-ex.div"), "--free-case", "1"]);
    assert_eq!(one.code, EXIT_OK);
    assert!(one.stdout.contains("free-case case1"));
    let two = divide(&["lf", &fixture("free-ex.div"), "--free-case", "2"]);
    assert_eq!(two.code, EXIT_OK);
    assert!(two.stdout.contains("free-case case2"));
    let neither = divide(&["lf", &fixture("neither.div")]);
    assert_eq!(neither.code, EXIT_REFUSED);
    assert!(neither.stdout.contains("free-case neither"));
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(divide(&["validate", "/nonexistent.div"]).code, EXIT_INVALID);
    assert_eq!(divide(&["frobnicate"]).code, EXIT_INVALID);
    let dir = std::env::temp_dir().join(format!("divide-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.div");
    std::fs::write(
        &bad,
        "surface planar n=1\nvertex c crossing\nedge a c.0 c.1\n",
    )
    .unwrap();
    let o = divide(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains("dangling slot"));
}

#[test]
fn parser_examples() {
    let trefoil = std::fs::read_to_string(fixture("trefoil.div")).unwrap();
    let d = parse(&trefoil).unwrap();
    assert_eq!((d.vertices().len(), d.edges().len()), (3, 3));
    let empty = parse("surface planar n=1\n").unwrap();
    assert_eq!(empty.regions().unwrap().regions.len(), 1);
    let three = "surface planar n=1\nvertex c crossing\nvertex b endpoint b=0@0\nedge a c.0 c.1\nedge x c.2 b.0\n";
    assert!(matches!(parse(three), Err(Error::DanglingSlot { .. })));
}

#[test]
fn every_stage_reports_deterministically() {
    for cmd in [
        "validate",
        "regions",
        "admissible",
        "double",
        "shadow",
        "lf",
        "monodromy",
        "alexander",
    ] {
        for name in ["trefoil.div", "chebyshev-3-5.div", "free-ex.div"] {
            let a = divide(&[cmd, &fixture(name)]);
            assert_eq!(a.code, EXIT_OK, "{cmd} {name}: {}", a.stderr);
            assert_eq!(a, divide(&[cmd, &fixture(name)]));
        }
    }
}

#[test]
fn render_writes_svg() {
    let dir = std::env::temp_dir().join(format!("divide-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for stage in ["divide", "doubled", "shadow"] {
        let out = dir.join(format!("{stage}.svg"));
        let o = divide(&[
            "render",
            &fixture("free-ex.div"),
            "--stage",
            stage,
            "-o",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        let svg = std::fs::read_to_string(&out).unwrap();
        assert!(svg.contains("<svg") && svg.ends_with("</svg>\n"));
        if stage == "shadow" {
            assert!(svg.contains("1/2"));
        }
    }
}
