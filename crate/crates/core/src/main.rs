fn main() {
    std::process::exit(coxpoly::cli::run(std::env::args_os()));
}
