use std::io::Write;

fn main() {
    let exec = domtie_cli::run(std::env::args_os());
    print!("{}", exec.stdout);
    eprint!("{}", exec.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(exec.code);
}
