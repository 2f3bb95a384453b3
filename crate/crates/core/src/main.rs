use std::process::ExitCode;

fn main() -> ExitCode {
    blochball::cli::run()
}
