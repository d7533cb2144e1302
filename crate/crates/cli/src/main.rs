use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use typeseq_cli::{run, Cli, Failure, EXIT_PARSE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    let result = match &cli.command.output().out {
        Some(path) => File::create(path).map_err(Failure::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = run(&cli.command, &mut w)?;
            w.flush()?;
            Ok(code)
        }),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            run(&cli.command, &mut w)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
