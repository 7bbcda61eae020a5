fn main() {
    std::process::exit(qcongruence_cli::main_entry());
}
