fn main() {
    std::process::exit(hypersf::cli::run());
}
