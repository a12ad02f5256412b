fn main() {
    std::process::exit(trhull::cli::run(std::env::args_os()));
}
