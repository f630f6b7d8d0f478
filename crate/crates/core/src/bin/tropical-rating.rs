fn main() {
    std::process::exit(tropical_rating::cli::run());
}
