fn main() {
    std::process::exit(specgap::cli::main_with(std::env::args_os()));
}
