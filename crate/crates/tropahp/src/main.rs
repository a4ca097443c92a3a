fn main() {
    std::process::exit(tropahp::cli::run(std::env::args_os()));
}
