use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = bhdual::cli::run(std::env::args());
    print!("{out}");
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
