fn main() {
    std::process::exit(mycielski::cli::run(std::env::args_os()));
}
