fn main() {
    std::process::exit(arclab::cli::main_with_args(std::env::args_os()));
}
