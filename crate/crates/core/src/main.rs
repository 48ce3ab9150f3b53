fn main() {
    std::process::exit(dicritique::cli::run(std::env::args_os()));
}
