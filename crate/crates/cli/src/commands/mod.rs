mod boas;
mod coeffs;
mod diag;
mod irregular;
mod recon;
mod schrodinger;
mod sweep;

use std::time::Instant;

use crate::cli::{Cli, Command};
use crate::error::CliResult;
use crate::output::Output;

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Coeffs(a) => coeffs::run(a),
        Command::Boas(a) => boas::run(a, cli.seed),
        Command::Recon(a) => recon::run(a, cli.seed),
        Command::Irregular(a) => irregular::run(a, cli.seed),
        Command::Diag(a) => diag::run(a, cli.seed),
        Command::Schrodinger(a) => schrodinger::run(a, cli.seed),
        Command::Sweep(a) => sweep::run(a, cli.seed),
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}
