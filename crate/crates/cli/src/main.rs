use std::io::Write;

fn main() {
    let out = relcalc_cli::run(std::env::args_os());
    std::io::stdout().write_all(&out.stdout).ok();
    std::io::stderr().write_all(&out.stderr).ok();
    std::process::exit(out.code);
}
