use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = raag_cli::dispatch(std::env::args_os());
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(result.code as u8)
}
