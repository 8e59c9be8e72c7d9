use clap::Parser;

fn main() {
    let cli = match cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match cli::run(&cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            if let cli::CliError::Verification { output, .. } = &e {
                print!("{output}");
            }
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
