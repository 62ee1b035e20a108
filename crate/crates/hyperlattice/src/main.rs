use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code =
        hyperlattice::cli::run_cli(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = stdout.lock().flush();
    std::process::exit(code);
}
