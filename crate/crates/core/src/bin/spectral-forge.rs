fn main() {
    std::process::exit(spectral_forge::cli::run(std::env::args_os()));
}
