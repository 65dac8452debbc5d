fn main() -> std::process::ExitCode {
    dnacyclic::cli::main()
}
