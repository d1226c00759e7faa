use std::io::Write;

fn main() {
    let run = qpbw_cli::execute(std::env::args_os());
    let _ = std::io::stdout().write_all(run.stdout.as_bytes());
    let _ = std::io::stderr().write_all(run.stderr.as_bytes());
    std::process::exit(run.code);
}
