fn main() {
    std::process::exit(p2pack::cli::main_with_std());
}
