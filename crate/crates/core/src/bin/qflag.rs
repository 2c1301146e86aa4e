fn main() -> std::process::ExitCode {
    qflag::cli::main()
}
