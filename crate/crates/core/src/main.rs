fn main() {
    std::process::exit(cpcm::cli_io::main_with_args(std::env::args_os()));
}
