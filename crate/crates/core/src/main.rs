fn main() -> std::process::ExitCode {
    sumsetlab::cli::run(std::env::args_os())
}
