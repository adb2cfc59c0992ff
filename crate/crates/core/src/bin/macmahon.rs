fn main() {
    std::process::exit(macmahon::cli::main_with_args(std::env::args_os()));
}
