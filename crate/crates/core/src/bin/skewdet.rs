fn main() {
    std::process::exit(skewdet::cli::main_with(std::env::args_os()));
}
