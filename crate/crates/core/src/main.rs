fn main() {
    std::process::exit(starcomm::cli::run_cli(std::env::args_os()));
}
