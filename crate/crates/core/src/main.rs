fn main() {
    std::process::exit(mackey::cli::run(std::env::args_os()));
}
