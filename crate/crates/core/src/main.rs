fn main() {
    std::process::exit(domdim::cli::cli_main());
}
