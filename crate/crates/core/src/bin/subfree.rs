fn main() {
    std::process::exit(subfree::cli::run(std::env::args_os()));
}
