fn main() {
    std::process::exit(falk::cli::main());
}
