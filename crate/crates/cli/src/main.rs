use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = standardize_cli::run(std::env::args_os());
    if outcome.code == standardize_cli::EXIT_OK {
        println!("{}", outcome.output);
    } else {
        eprintln!("{}", outcome.output);
    }
    ExitCode::from(outcome.code as u8)
}
