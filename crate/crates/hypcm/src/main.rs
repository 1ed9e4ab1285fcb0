fn main() {
    std::process::exit(hypcm::cli::run(std::env::args_os()));
}
