use std::time::Instant;

use serde::Serialize;

use group_sampler::schrodinger::{invert, CauchyProblem, InversionOptions, InversionReport, Via};
use group_sampler::GroupVector;

use super::elapsed_ms;
use crate::cli::SchrodingerArgs;
use crate::error::CliResult;
use crate::input::{load_nodes, spectral_or_random};
use crate::output::{num, Format, Output, Table};

#[derive(Serialize)]
struct Report<'a> {
    #[serde(rename = "N")]
    half_width: usize,
    nodes: String,
    sigma: f64,
    delta: f64,
    tau: f64,
    #[serde(flatten)]
    inversion: &'a InversionReport,
    max_relative_error: f64,
    wall_time_ms: f64,
}

pub fn run(args: &SchrodingerArgs, seed: u64) -> CliResult<Output> {
    let start = Instant::now();
    let via: Via = args.via.parse()?;
    let f = spectral_or_random(args.spectrum.as_deref(), seed, 0.75 * std::f64::consts::PI)?;
    let sigma = args.sigma.unwrap_or_else(|| f.spectral_type());
    let problem = CauchyProblem::new(f, sigma)?;
    let nodes = load_nodes(
        &args.nodes,
        args.nodes_file.as_deref(),
        args.half_width,
        seed,
    )?;
    let options = InversionOptions {
        via,
        delta: args.delta,
        tau: args.tau,
    };
    let inversion = invert(&problem, &nodes, options)?;
    let report = Report {
        half_width: args.half_width,
        nodes: nodes.rule().to_string(),
        sigma,
        delta: args.delta,
        tau: args.tau,
        inversion: &inversion,
        max_relative_error: inversion.max_relative_error(),
        wall_time_ms: elapsed_ms(start),
    };
    let mut table = Table::new(&[
        "index",
        "true_re",
        "true_im",
        "recovered_re",
        "recovered_im",
        "error",
    ]);
    for (j, ((t, r), e)) in inversion
        .true_coeffs
        .iter()
        .zip(&inversion.recovered_coeffs)
        .zip(&inversion.per_coeff_error)
        .enumerate()
    {
        table.push(vec![
            j.to_string(),
            num(t.re),
            num(t.im),
            num(r.re),
            num(r.im),
            num(*e),
        ]);
    }
    Output::new(&report, table, Format::Json)
}
