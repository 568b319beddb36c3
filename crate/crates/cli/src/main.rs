use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let threads = match monoscope_cli::threads_from_env() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    ExitCode::from(monoscope_cli::run(std::env::args_os(), threads, &mut stdout, &mut stderr))
}
