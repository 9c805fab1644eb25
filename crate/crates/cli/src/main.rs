mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format, LinesCmd, SkewCmd};
use commands::Failure;

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Lines(LinesCmd::Separable { .. }) => "lines separable",
        Command::Lines(LinesCmd::Plucker { .. }) => "lines plucker",
        Command::Covering { .. } => "covering",
        Command::Skew(SkewCmd::Rams { .. }) => "skew rams",
        Command::Bounds { .. } => "bounds",
        Command::Construct { .. } => "construct",
        Command::Catalog => "catalog",
    }
}

fn run(cli: &Cli) -> commands::Body {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol < 1e-2) {
        return Err(Failure::User(format!("--tol must lie in (0, 1e-2), got {}", g.tol)));
    }
    if g.budget == 0 {
        return Err(Failure::User("--budget must be positive".into()));
    }
    match &cli.command {
        Command::Lines(cmd) => commands::lines_cmd(g, cmd),
        Command::Covering { curve, emit } => commands::covering(g, curve, *emit),
        Command::Skew(cmd) => commands::skew(g, cmd),
        Command::Bounds { d } => commands::bounds(*d),
        Command::Construct { degree, group } => commands::construct(g, *degree, group),
        Command::Catalog => commands::list_catalog(g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let command = name(&cli.command);
    match run(&cli) {
        Ok(body) => {
            let text = match cli.global.format {
                Format::Json => output::render_json(command, body) + "\n",
                Format::Table => output::render_table(command, &body),
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
