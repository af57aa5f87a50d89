fn main() {
    std::process::exit(poisson_forge::cli::cli_main(std::env::args_os()));
}
