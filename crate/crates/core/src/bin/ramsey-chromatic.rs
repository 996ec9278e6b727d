fn main() {
    std::process::exit(ramsey_chromatic::cli::main_with_args(std::env::args_os()));
}
