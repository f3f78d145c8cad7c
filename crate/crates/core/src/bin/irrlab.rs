fn main() {
    std::process::exit(irrlab::cli::run(std::env::args_os()));
}
