fn main() {
    std::process::exit(fps::cli::run_from_args());
}
