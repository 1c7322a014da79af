fn main() {
    std::process::exit(tkplex::cli::main());
}
