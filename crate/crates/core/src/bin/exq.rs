fn main() {
    std::process::exit(exq::cli::run(std::env::args_os()));
}
