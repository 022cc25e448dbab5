fn main() {
    std::process::exit(interval_induction::cli::run(std::env::args_os()));
}
