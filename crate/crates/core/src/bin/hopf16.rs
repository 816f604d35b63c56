fn main() {
    std::process::exit(hopf16::cli::main_with_args(std::env::args_os()));
}
