fn main() {
    std::process::exit(plotforge_cli::run(std::env::args_os()));
}
