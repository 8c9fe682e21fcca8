use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = qconnect_cli::run_args(std::env::args_os());
    if !out.stdout.is_empty() {
        let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    }
    if !out.stderr.is_empty() {
        let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    }
    ExitCode::from(out.code)
}
