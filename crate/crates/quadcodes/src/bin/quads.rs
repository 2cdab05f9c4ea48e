fn main() {
    std::process::exit(quadcodes::cli::run(std::env::args_os()));
}
