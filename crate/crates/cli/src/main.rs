mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use cellrim::Guard;
use commands::{Ctx, Failure};

const EXIT_USAGE: u8 = 1;
const EXIT_GUARD: u8 = 2;
const EXIT_ASSERTION: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let mut guard = Guard::from_env();
    if let Some(n) = cli.max_group_n {
        guard = Guard::with_max_n(n);
    }
    let ctx = Ctx { guard, plain: cli.plain_x };
    let result = match &cli.command {
        Command::Rim(a) => commands::rim(a, &ctx),
        Command::Cell(a) => commands::cell(a, &ctx),
        Command::Diagram(c) => commands::diagram(c, &ctx),
        Command::Verify(c) => commands::verify(c, &ctx),
        Command::Oracle(a) => commands::oracle(a, &ctx),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = match cli.format {
                Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Ascii => write!(stdout, "{}", out.text),
            };
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}; raise it with --max-group-n or CELLRIM_MAX_N");
            ExitCode::from(EXIT_GUARD)
        }
    }
}
