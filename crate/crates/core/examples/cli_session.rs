//! Drives the command line front end in process, as the `divide` binary would.

use divide_shadow::cli::run;

fn main() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/free-ex.div");
    for args in [
        vec!["admissible", file],
        vec!["shadow", file],
        vec!["alexander", file, "--expect", "1 -1 1 -1 1"],
    ] {
        let out = run(std::iter::once("divide").chain(args.iter().copied()));
        println!("$ divide {}  (exit {})", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
