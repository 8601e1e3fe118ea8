fn main() -> std::process::ExitCode {
    icn_lab::cli::main()
}
