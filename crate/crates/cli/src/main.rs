fn main() {
    std::process::exit(twothree_cli::run(std::env::args_os()));
}
