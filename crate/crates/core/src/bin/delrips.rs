fn main() {
    std::process::exit(delrips::cli::run());
}
