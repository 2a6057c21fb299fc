fn main() {
    std::process::exit(twovsb::cli::main_with_args(std::env::args_os()));
}
