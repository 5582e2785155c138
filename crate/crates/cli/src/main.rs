fn main() {
    std::process::exit(tropleg_cli::run(std::env::args_os()));
}
