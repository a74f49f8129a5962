fn main() {
    std::process::exit(disct::cli::run(std::env::args_os()));
}
