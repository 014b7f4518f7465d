//! Binary entry point; everything lives in the library for testability.

fn main() {
    std::process::exit(fivevertex_cli::run());
}
