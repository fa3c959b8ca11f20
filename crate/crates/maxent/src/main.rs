use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(maxent::run(std::env::args_os()))
}
