fn main() {
    std::process::exit(fcword::cli::run());
}
