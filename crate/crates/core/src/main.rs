fn main() {
    std::process::exit(equitree::cli::run(std::env::args_os()));
}
