fn main() {
    std::process::exit(lg_wigner::cli::run(std::env::args_os()));
}
