fn main() {
    std::process::exit(morpholattice::cli::run(std::env::args()));
}
