fn main() {
    std::process::exit(kn_toolkit::cli::main());
}
