fn main() {
    std::process::exit(funident_cli::run(std::env::args_os()));
}
