fn main() {
    std::process::exit(gradelie_harness::cli::run_cli(std::env::args_os()));
}
