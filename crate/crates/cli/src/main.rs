use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = gsp4_bessel_cli::run(std::env::args());
    if outcome.code == 0 {
        println!("{}", outcome.stdout);
        ExitCode::SUCCESS
    } else {
        eprintln!("{}", outcome.stdout);
        ExitCode::from(outcome.code as u8)
    }
}
