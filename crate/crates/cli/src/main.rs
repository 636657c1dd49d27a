use std::io::Write;
use std::path::PathBuf;

fn main() {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = bfpower_cli::run_with(
        std::env::args_os(),
        std::env::var_os("BFPOWER_CONFIG").map(PathBuf::from),
        &mut out,
        &mut err,
    );
    let _ = out.flush();
    let _ = err.flush();
    std::process::exit(code);
}
