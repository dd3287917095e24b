fn main() {
    std::process::exit(morphocast_cli::run_with_stdio());
}
