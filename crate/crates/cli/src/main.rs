use std::io::Write;
use std::process::ExitCode;

use central_cli::oeis::HttpTransport;

fn main() -> ExitCode {
    let mut transport = HttpTransport::new();
    let outcome = central_cli::run(std::env::args_os(), &mut transport);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(u8::try_from(outcome.code).unwrap_or(1))
}
