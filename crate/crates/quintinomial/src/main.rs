fn main() {
    std::process::exit(quintinomial::cli::run());
}
