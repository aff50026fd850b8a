use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use group_sampler::regular::{
    derivative_sampling, q_operator, recon_trajectory, recover_state, s1_tail_bound,
    valiron_tschakaloff, Flagged, ShiftedSamples,
};
use group_sampler::report::ReconstructionReport;
use group_sampler::trajectory::StateTrajectory;
use group_sampler::{ExpSumSignal, GroupVector, SpectralState};

use super::elapsed_ms;
use crate::cli::{ReconArgs, ReconFormula};
use crate::error::{usage, CliResult};
use crate::input::{parse_complex, parse_range, read_json, state_or_random, AnyState};
use crate::output::{num, opt, Format, Output, Table};

fn name(f: ReconFormula) -> &'static str {
    match f {
        ReconFormula::S1 => "s1",
        ReconFormula::L0 => "l0",
        ReconFormula::Vt => "vt",
        ReconFormula::S2 => "s2",
        ReconFormula::Q => "q",
    }
}

fn points(args: &ReconArgs) -> CliResult<Vec<Complex64>> {
    let real = |v: Vec<f64>| v.into_iter().map(|t| Complex64::new(t, 0.0)).collect();
    if let Some(r) = &args.sweep {
        return Ok(real(parse_range(r)?));
    }
    match args.formula {
        ReconFormula::Q => Ok(vec![Complex64::new(0.0, 0.0)]),
        ReconFormula::Vt => match (&args.z, args.t) {
            (Some(z), _) => Ok(vec![parse_complex(z)?]),
            (None, Some(t)) => Ok(real(vec![t])),
            (None, None) => Err(usage("vt needs --z, --t or --sweep")),
        },
        f => match args.t {
            Some(t) => Ok(real(vec![t])),
            None => Err(usage(format!("{} needs --t or --sweep", name(f)))),
        },
    }
}

pub fn run(args: &ReconArgs, seed: u64) -> CliResult<Output> {
    let samples = args.samples.as_deref().map(read_json).transpose()?;
    if samples.is_some() && (args.formula != ReconFormula::L0 || args.sweep.is_some()) {
        return Err(usage("--samples applies to a single l0 recovery"));
    }
    let state = match (&args.state, &samples) {
        (None, Some(_)) => None,
        _ => Some(state_or_random(args.state.as_deref(), seed, args.sigma)?),
    };
    match (state, samples) {
        (Some(AnyState::Spectral(f)), s) => evaluate(Some(&f), s, args),
        (Some(AnyState::ExpSum(f)), s) => evaluate(Some(&f), s, args),
        (None, Some(s)) => {
            if s.pointer("/derivative/spectrum").is_some() {
                evaluate::<SpectralState>(None, Some(s), args)
            } else {
                evaluate::<ExpSumSignal>(None, Some(s), args)
            }
        }
        (None, None) => unreachable!("a state is loaded unless samples are given"),
    }
}

struct Point<S> {
    value: S,
    error: f64,
    tail: Option<f64>,
    in_bernstein: bool,
}

fn at_point<S: GroupVector>(f: &S, args: &ReconArgs, p: Complex64) -> CliResult<Point<S>> {
    let (sigma, k, t) = (args.sigma, args.terms, p.re);
    let (out, oracle, tail): (Flagged<S>, S, Option<f64>) = match args.formula {
        ReconFormula::S1 => (
            recon_trajectory(f, sigma, t, k)?,
            f.evolve(t),
            Some(s1_tail_bound(f.norm(), sigma, t, k)),
        ),
        ReconFormula::L0 => {
            let samples = ShiftedSamples::from_trajectory(&StateTrajectory(f), sigma, t, k)?;
            let value = recover_state(&samples, k)?;
            (
                Flagged {
                    value,
                    in_bernstein: f.bernstein_membership(sigma),
                },
                f.clone(),
                None,
            )
        }
        ReconFormula::Vt => (
            valiron_tschakaloff(f, sigma, p, k)?,
            f.evolve_complex(p)?,
            None,
        ),
        ReconFormula::S2 => (
            derivative_sampling(f, sigma, args.n, t, k)?,
            f.apply_generator(args.n).evolve(t),
            None,
        ),
        ReconFormula::Q => (
            q_operator(f, sigma, args.n, k)?,
            f.apply_generator(args.n),
            None,
        ),
    };
    Ok(Point {
        error: out.value.minus(&oracle).norm(),
        value: out.value,
        tail,
        in_bernstein: out.in_bernstein,
    })
}

fn evaluate<S>(f: Option<&S>, samples: Option<Value>, args: &ReconArgs) -> CliResult<Output>
where
    S: GroupVector + Serialize + DeserializeOwned,
{
    let start = Instant::now();
    let (pts, results): (Vec<Complex64>, Vec<Point<S>>) = match samples {
        Some(v) => {
            let samples: ShiftedSamples<S> = serde_json::from_value(v)?;
            let value = recover_state(&samples, args.terms)?;
            let (error, in_bernstein) = match f {
                Some(f) => (value.minus(f).norm(), f.bernstein_membership(samples.sigma)),
                None => (f64::NAN, value.bernstein_membership(samples.sigma)),
            };
            let p = Complex64::new(samples.shift, 0.0);
            (
                vec![p],
                vec![Point {
                    value,
                    error,
                    tail: None,
                    in_bernstein,
                }],
            )
        }
        None => {
            let f = f.expect("state present without samples");
            let pts = points(args)?;
            let results = pts
                .par_iter()
                .map(|&p| at_point(f, args, p))
                .collect::<CliResult<Vec<_>>>()?;
            (pts, results)
        }
    };
    let in_bernstein = results.iter().all(|r| r.in_bernstein);
    let mut report = ReconstructionReport::new(name(args.formula), args.terms, in_bernstein);
    for (p, r) in pts.iter().zip(&results) {
        report.push(*p, r.error, r.tail);
    }
    report.wall_time_ms = elapsed_ms(start);

    let complex = pts.iter().any(|p| p.im != 0.0);
    let mut table = if complex {
        Table::new(&["re", "im", "error", "tail"])
    } else {
        Table::new(&["t", "error", "tail"])
    };
    for (p, r) in pts.iter().zip(&results) {
        let mut row = vec![num(p.re)];
        if complex {
            row.push(num(p.im));
        }
        row.extend([num(r.error), opt(r.tail)]);
        table.push(row);
    }

    let mut json = serde_json::to_value(&report)?;
    let default_format = if args.sweep.is_some() {
        Format::Csv
    } else {
        json["result"] = serde_json::to_value(&results[0].value)?;
        Format::Json
    };
    Ok(Output {
        json,
        table,
        default_format,
    })
}
