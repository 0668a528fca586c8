fn main() {
    std::process::exit(kleinian::cli::run(std::env::args_os()));
}
