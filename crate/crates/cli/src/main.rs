use std::process::ExitCode;

fn main() -> ExitCode {
    match fincat_cli::run(std::env::args_os()) {
        Ok(inv) => {
            print!("{}", inv.render());
            ExitCode::from(inv.report.exit_code as u8)
        }
        Err(e) => e.exit(),
    }
}
