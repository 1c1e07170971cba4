fn main() {
    std::process::exit(learnlab_cli::main_entry(std::env::args_os()));
}
