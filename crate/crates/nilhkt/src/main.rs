fn main() {
    let outcome = nilhkt::cli::run_from_env();
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
