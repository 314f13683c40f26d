use std::process::ExitCode;

use clap::Parser;

use frame_align::cli::{
    cmd_coeffs, cmd_design, cmd_simulate, cmd_table, cmd_verify, render_checks, Cli, Command,
};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> frame_align::Result<ExitCode> {
    match cli.command {
        Command::Table { n_max, format } => {
            print!("{}", cmd_table(n_max, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeffs { n_spins } => {
            print!("{}", cmd_coeffs(n_spins)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Design { n_spins, out } => {
            let (points, residual) = cmd_design(n_spins, &out)?;
            println!("points: {points}");
            println!("residual: {residual:.3e}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate { n_spins, trials, seed, design, format } => {
            let (summary, rendered) = cmd_simulate(n_spins, trials, seed, design.as_deref(), format)?;
            print!("{rendered}");
            let within_three_sigma = summary.z_score.map_or(true, |z| z.abs() <= 3.0);
            Ok(if within_three_sigma { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { n_spins } => {
            let checks = cmd_verify(n_spins)?;
            let (rendered, all_passed) = render_checks(n_spins, &checks);
            print!("{rendered}");
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
