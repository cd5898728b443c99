fn main() {
    std::process::exit(fourtangle::cli::main_entry());
}
