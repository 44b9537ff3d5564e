use std::io::{self, IsTerminal, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut input = String::new();
    let needs_stdin = args.iter().any(|a| a == "bij");
    if needs_stdin && !io::stdin().is_terminal() {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("error: cannot read stdin: {e}");
            return ExitCode::from(ramanujan_cli::EXIT_USAGE as u8);
        }
    }
    let outcome = ramanujan_cli::run(&args, &input);
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status as u8)
}
