use std::io::Write;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("DEGENCOUNT_LOG")).init();
    let out = degencount::cli::run(std::env::args().skip(1));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
