fn main() {
    std::process::exit(torus_skein::cli::run(std::env::args_os()));
}
