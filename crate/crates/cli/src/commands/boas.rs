use std::time::Instant;

use serde::Serialize;

use group_sampler::boas::{boas_apply, boas_sigma_invariance, BoasConfig, SigmaInvarianceReport};
use group_sampler::{GroupVector, Linear};

use super::elapsed_ms;
use crate::cli::BoasArgs;
use crate::error::CliResult;
use crate::input::{state_or_random, with_state};
use crate::output::{num, Format, Output, Table};

#[derive(Serialize)]
struct BoasReport {
    order: u32,
    sigma: f64,
    terms: usize,
    norm: f64,
    error: f64,
    tail_bound: f64,
    in_bernstein: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    invariance: Option<SigmaInvarianceReport>,
    wall_time_ms: f64,
}

pub fn run(args: &BoasArgs, seed: u64) -> CliResult<Output> {
    let start = Instant::now();
    let cfg = BoasConfig::new(args.sigma, args.order, args.terms)?;
    let state = state_or_random(args.state.as_deref(), seed, args.sigma)?;
    let mut report = with_state!(&state, f => {
        let out = boas_apply(f, &cfg);
        let invariance = match args.compare_sigma {
            Some(s2) => Some(boas_sigma_invariance(f, args.sigma, s2, args.order, args.terms)?),
            None => None,
        };
        BoasReport {
            order: args.order,
            sigma: args.sigma,
            terms: args.terms,
            norm: f.norm(),
            error: out.value.minus(&f.apply_generator(args.order)).norm(),
            tail_bound: out.tail_bound,
            in_bernstein: out.in_bernstein,
            invariance,
            wall_time_ms: 0.0,
        }
    });
    report.wall_time_ms = elapsed_ms(start);
    let mut table = Table::new(&[
        "order",
        "sigma",
        "terms",
        "error",
        "tail_bound",
        "in_bernstein",
    ]);
    table.push(vec![
        report.order.to_string(),
        num(report.sigma),
        report.terms.to_string(),
        num(report.error),
        num(report.tail_bound),
        report.in_bernstein.to_string(),
    ]);
    Output::new(&report, table, Format::Json)
}
