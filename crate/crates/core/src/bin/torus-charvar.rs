fn main() {
    std::process::exit(torus_charvar::tool::cli_main(std::env::args_os()));
}
