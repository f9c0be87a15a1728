fn main() {
    std::process::exit(iyang::cli::run_cli(std::env::args_os()));
}
