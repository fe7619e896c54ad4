use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let o = divide_shadow::cli::run(std::env::args_os());
    std::io::stdout().write_all(o.stdout.as_bytes()).ok();
    std::io::stderr().write_all(o.stderr.as_bytes()).ok();
    ExitCode::from(o.code as u8)
}
