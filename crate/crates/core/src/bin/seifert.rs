fn main() -> std::process::ExitCode {
    seifert_covers::cli::run()
}
