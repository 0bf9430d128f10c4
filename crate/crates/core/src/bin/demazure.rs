use std::io::Write;

use demazure_crystals::cli::{run_args, CAP_ENV};

fn main() {
    let env_cap = std::env::var(CAP_ENV).ok();
    let outcome = run_args(std::env::args_os(), env_cap.as_deref());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.output.as_bytes());
    let _ = stdout.flush();
    std::process::exit(outcome.code);
}
