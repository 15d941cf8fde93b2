fn main() {
    std::process::exit(brieskorn_invariants::cli::run());
}
