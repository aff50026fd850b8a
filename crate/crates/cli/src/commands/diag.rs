use std::f64::consts::PI;

use group_sampler::coefficients::FavardTable;
use group_sampler::diagnostics::{jackson_ratio, kolmogorov_check, modulus_profile, spectral_type};

use crate::cli::{Check, DiagArgs};
use crate::error::{usage, CliResult};
use crate::input::{parse_list, spectral_or_random, state_or_random, with_state};
use crate::output::{num, Format, Output, Table};

pub fn run(args: &DiagArgs, seed: u64) -> CliResult<Output> {
    match args.check {
        Check::Type => {
            let f = spectral_or_random(args.state.as_deref(), seed, PI)?;
            let r = spectral_type(&f, args.kmax)?;
            let mut table = Table::new(&["k", "norm_root"]);
            for (i, v) in r.sequence.iter().enumerate() {
                table.push(vec![(i + 1).to_string(), num(*v)]);
            }
            table.push(vec!["d_f".into(), num(r.extrapolated)]);
            table.push(vec!["sigma_f".into(), num(r.sigma_f)]);
            Output::new(&r, table, Format::Csv)
        }
        Check::Ks => {
            let f = spectral_or_random(args.state.as_deref(), seed, PI)?;
            let pairs: Vec<(u32, u32)> = match (args.k, args.n) {
                (Some(k), Some(n)) => vec![(k, n)],
                (None, None) => (0..=args.nmax)
                    .flat_map(|n| (0..=n).map(move |k| (k, n)))
                    .collect(),
                _ => return Err(usage("--k and --n go together")),
            };
            let n_max = pairs.iter().map(|p| p.1).max().unwrap_or(0);
            let favard = FavardTable::new(n_max);
            let rows = pairs
                .iter()
                .map(|&(k, n)| kolmogorov_check(&f, k, n, &favard))
                .collect::<Result<Vec<_>, _>>()?;
            let mut table = Table::new(&["k", "n", "constant", "lhs", "rhs", "holds"]);
            for r in &rows {
                table.push(vec![
                    r.k.to_string(),
                    r.n.to_string(),
                    num(r.constant),
                    num(r.lhs),
                    num(r.rhs),
                    r.holds.to_string(),
                ]);
            }
            Output::new(&rows, table, Format::Csv)
        }
        Check::Modulus => {
            let s: Vec<f64> = parse_list(&args.s, "--s")?;
            let state = state_or_random(args.state.as_deref(), seed, PI)?;
            let omega = with_state!(&state, f => modulus_profile(f, args.m, &s, args.resolution)?);
            let mut table = Table::new(&["s", "omega"]);
            let rows: Vec<[f64; 2]> = s.iter().zip(&omega).map(|(a, b)| [*a, *b]).collect();
            for [a, b] in &rows {
                table.push(vec![num(*a), num(*b)]);
            }
            Output::new(&rows, table, Format::Csv)
        }
        Check::Jackson => {
            let sigmas: Vec<f64> = parse_list(&args.sigmas, "--sigmas")?;
            let f = spectral_or_random(args.state.as_deref(), seed, PI)?;
            let k = args.k.unwrap_or(0);
            let t = jackson_ratio(&f, k, args.m, &sigmas, args.resolution)?;
            let mut table = Table::new(&["sigma", "best_error", "bound", "ratio"]);
            for r in &t.rows {
                table.push(vec![
                    num(r.sigma),
                    num(r.best_error),
                    num(r.bound),
                    num(r.ratio),
                ]);
            }
            Output::new(&t, table, Format::Csv)
        }
    }
}
