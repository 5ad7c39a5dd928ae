use std::process::ExitCode;

fn main() -> ExitCode {
    apery3::cli::run()
}
