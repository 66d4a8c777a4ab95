fn main() {
    std::process::exit(tdrefine::cli::cli_main(std::env::args_os()));
}
