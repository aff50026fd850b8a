use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use group_sampler::irregular::{
    irregular_recon_vector, make_nodes, recover_from_state, CanonicalProduct,
};
use group_sampler::regular::{
    derivative_sampling, q_operator, recon_trajectory, recover_state, s1_tail_bound,
    valiron_tschakaloff, ShiftedSamples,
};
use group_sampler::report::sweep_rows;
use group_sampler::trajectory::StateTrajectory;
use group_sampler::GroupVector;

use crate::cli::{SweepArgs, SweepFormula};
use crate::error::{usage, CliResult};
use crate::input::{parse_complex, parse_list, parse_rule, state_or_random, with_state};
use crate::output::{num, opt, Format, Output, Table};

/// Grid on which the irregular vector series is compared.
const S4_GRID: (f64, f64, usize) = (-3.0, 3.0, 301);

pub fn run(args: &SweepArgs, seed: u64) -> CliResult<Output> {
    let mut values: Vec<usize> = parse_list(&args.values, "--values")?;
    values.sort_unstable();
    values.dedup();
    if values[0] == 0 {
        return Err(usage("--values must be positive"));
    }
    let band = match args.formula {
        SweepFormula::S4 | SweepFormula::L2 => 0.75 * PI,
        _ => args.sigma,
    };
    let state = state_or_random(args.state.as_deref(), seed, band)?;
    let results: Vec<(f64, Option<f64>)> = with_state!(&state, f => values
        .par_iter()
        .map(|&v| error_at(f, args, v, seed))
        .collect::<CliResult<Vec<_>>>()?);
    let params: Vec<f64> = values.iter().map(|&v| v as f64).collect();
    let errors: Vec<f64> = results.iter().map(|r| r.0).collect();
    let tails: Vec<Option<f64>> = results.iter().map(|r| r.1).collect();
    let rows = sweep_rows(&params, &errors, &tails);
    let mut table = Table::new(&["parameter", "error", "tail", "ratio"]);
    for r in &rows {
        table.push(vec![
            num(r.parameter),
            num(r.error),
            opt(r.tail),
            opt(r.ratio),
        ]);
    }
    Output::new(&rows, table, Format::Csv)
}

fn error_at<S: GroupVector>(
    f: &S,
    args: &SweepArgs,
    v: usize,
    seed: u64,
) -> CliResult<(f64, Option<f64>)> {
    let (sigma, t) = (args.sigma, args.t);
    Ok(match args.formula {
        SweepFormula::S1 => (
            recon_trajectory(f, sigma, t, v)?
                .value
                .minus(&f.evolve(t))
                .norm(),
            Some(s1_tail_bound(f.norm(), sigma, t, v)),
        ),
        SweepFormula::L0 => {
            let samples = ShiftedSamples::from_trajectory(&StateTrajectory(f), sigma, t, v)?;
            (recover_state(&samples, v)?.minus(f).norm(), None)
        }
        SweepFormula::Vt => {
            let z = parse_complex(&args.z)?;
            (
                valiron_tschakaloff(f, sigma, z, v)?
                    .value
                    .minus(&f.evolve_complex(z)?)
                    .norm(),
                None,
            )
        }
        SweepFormula::S2 => (
            derivative_sampling(f, sigma, args.n, t, v)?
                .value
                .minus(&f.apply_generator(args.n).evolve(t))
                .norm(),
            None,
        ),
        SweepFormula::Q => (
            q_operator(f, sigma, args.n, v)?
                .value
                .minus(&f.apply_generator(args.n))
                .norm(),
            None,
        ),
        SweepFormula::S4 | SweepFormula::L2 => {
            let default = if args.formula == SweepFormula::L2 {
                "const:0.1"
            } else {
                "sin:0.2"
            };
            let rule = parse_rule(args.nodes.as_deref().unwrap_or(default), seed)?;
            let product = CanonicalProduct::new(make_nodes(v, rule)?);
            if args.formula == SweepFormula::L2 {
                (
                    recover_from_state(f, &product, args.delta)?
                        .value
                        .minus(f)
                        .norm(),
                    None,
                )
            } else {
                let (a, b, n) = S4_GRID;
                let mut worst = 0.0f64;
                for i in 0..n {
                    let z = Complex64::new(a + (b - a) * i as f64 / (n - 1) as f64, 0.0);
                    let r = irregular_recon_vector(f, &product, z, args.delta)?;
                    worst = worst.max(r.value.minus(&f.evolve(z.re)).norm());
                }
                (worst, None)
            }
        }
    })
}
