use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let mut status = fejer_core::cli::run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() {
        status = fejer_core::cli::EXIT_FAILURE;
    }
    ExitCode::from(status as u8)
}
