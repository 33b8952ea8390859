fn main() {
    std::process::exit(sievelab_cli::run(std::env::args_os()));
}
