use std::process::ExitCode;

use pcat::cli;

fn main() -> ExitCode {
    let out = cli::run(std::env::args_os());
    if let Some(help) = out.payload.get("help").and_then(|h| h.as_str()) {
        print!("{help}");
        return ExitCode::SUCCESS;
    }
    if let Some(err) = out.payload.get("error") {
        if let Some(msg) = err.get("message").and_then(|m| m.as_str()) {
            eprintln!("pcat: {}", msg.trim_end());
        }
    }
    println!("{}", out.to_json());
    ExitCode::from(out.code() as u8)
}
