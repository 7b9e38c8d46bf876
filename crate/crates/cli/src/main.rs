use std::process::ExitCode;

use cherednik_cli::{exit_code_for, run, Cli, RunConfig, EXIT_USAGE};
use clap::Parser;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CHEREDNIK_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE as u8) } else { ExitCode::SUCCESS };
        }
    };
    let (command, args) = cli.command.split();
    let result = RunConfig::from_args(command, args).and_then(|cfg| run(&cfg).map(|r| (cfg, r)));
    match result {
        Ok((cfg, report)) => {
            if cfg.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
