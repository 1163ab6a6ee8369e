use std::process::ExitCode;

fn main() -> ExitCode {
    forcelab::cli::run()
}
