use std::process::ExitCode;

fn main() -> ExitCode {
    qpod::cli::main_entry()
}
