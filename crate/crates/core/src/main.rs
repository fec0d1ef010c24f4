use std::process::ExitCode;

fn main() -> ExitCode {
    eggshape::cli::run()
}
