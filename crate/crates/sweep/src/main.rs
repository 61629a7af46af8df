fn main() {
    std::process::exit(kerr_sweep::cli::main_with_args(std::env::args_os()));
}
