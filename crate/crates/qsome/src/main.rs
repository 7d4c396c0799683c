fn main() {
    std::process::exit(qsome::cli::run());
}
