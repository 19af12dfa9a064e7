fn main() {
    std::process::exit(indpoly_harness::cli::main());
}
