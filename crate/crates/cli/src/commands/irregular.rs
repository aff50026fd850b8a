use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use group_sampler::irregular::{
    irregular_recon_vector, recover_from_state, s3_series, sample_trajectory, shifted_recovery,
    CanonicalProduct,
};
use group_sampler::report::pair;
use group_sampler::trajectory::{ProjectedTrajectory, Trajectory};
use group_sampler::{DualFunctional, GroupVector};

use super::elapsed_ms;
use crate::cli::{IrregularArgs, IrregularFormula};
use crate::error::{usage, CliError, CliResult};
use crate::input::{load_nodes, parse_complex, state_or_random, with_state};
use crate::output::{num, Format, Output, Table};

#[derive(Serialize)]
struct IrregularReport {
    formula: &'static str,
    #[serde(rename = "N")]
    half_width: usize,
    nodes: String,
    deviation: f64,
    point: [f64; 2],
    value: Value,
    error: f64,
    in_band: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    functional: Option<DualFunctional>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis: Option<&'static str>,
    wall_time_ms: f64,
}

fn name(f: IrregularFormula) -> &'static str {
    match f {
        IrregularFormula::S3 => "s3",
        IrregularFormula::L3000 => "l3000",
        IrregularFormula::S4 => "s4",
        IrregularFormula::L2 => "l2",
    }
}

const S3_HYPOTHESIS: &str =
    "the difference quotient F1 must lie in the L2 Paley-Wiener space of type pi; \
only the checkable part (spectral type at most pi) is verified";

pub fn run(args: &IrregularArgs, seed: u64) -> CliResult<Output> {
    let start = Instant::now();
    let default = match args.formula {
        IrregularFormula::S4 => "sin:0.2",
        _ => "const:0.1",
    };
    let nodes = load_nodes(
        args.nodes.as_deref().unwrap_or(default),
        args.nodes_file.as_deref(),
        args.half_width,
        seed,
    )?;
    let product = CanonicalProduct::new(nodes);
    let state = state_or_random(args.state.as_deref(), seed, 0.75 * PI)?;
    let mut report = with_state!(&state, f => evaluate(f, &product, args)?);
    report.wall_time_ms = elapsed_ms(start);
    let mut table = Table::new(&["formula", "N", "re", "im", "error", "in_band"]);
    table.push(vec![
        report.formula.to_string(),
        report.half_width.to_string(),
        num(report.point[0]),
        num(report.point[1]),
        num(report.error),
        report.in_band.to_string(),
    ]);
    Output::new(&report, table, Format::Json)
}

fn functional<S: GroupVector>(args: &IrregularArgs) -> CliResult<DualFunctional> {
    match &args.functional {
        Some(json) => {
            serde_json::from_str(json).map_err(|e| CliError::Parse(format!("--functional: {e}")))
        }
        None if S::BACKEND == "spectral" => Ok(DualFunctional::CoefficientProjection { index: 0 }),
        None => Ok(DualFunctional::PointEvaluation { x0: 0.0 }),
    }
}

fn evaluate<S: GroupVector + Serialize>(
    f: &S,
    product: &CanonicalProduct,
    args: &IrregularArgs,
) -> CliResult<IrregularReport> {
    let nodes = product.nodes();
    let mut report = IrregularReport {
        formula: name(args.formula),
        half_width: nodes.half_width(),
        nodes: nodes.rule().to_string(),
        deviation: nodes.deviation(),
        point: [0.0, 0.0],
        value: Value::Null,
        error: 0.0,
        in_band: false,
        functional: None,
        hypothesis: None,
        wall_time_ms: 0.0,
    };
    match args.formula {
        IrregularFormula::S4 => {
            let z = match (&args.z, args.t) {
                (Some(z), _) => parse_complex(z)?,
                (None, Some(t)) => Complex64::new(t, 0.0),
                (None, None) => return Err(usage("s4 needs --z or --t")),
            };
            let r = irregular_recon_vector(f, product, z, args.delta)?;
            report.point = pair(z);
            report.error = r.value.minus(&f.evolve_complex(z)?).norm();
            report.value = serde_json::to_value(&r.value)?;
            report.in_band = r.in_bernstein;
        }
        IrregularFormula::L2 => {
            let r = recover_from_state(f, product, args.delta)?;
            report.error = r.value.minus(f).norm();
            report.value = serde_json::to_value(&r.value)?;
            report.in_band = r.in_bernstein;
        }
        IrregularFormula::S3 | IrregularFormula::L3000 => {
            let g = functional::<S>(args)?;
            let tr = ProjectedTrajectory::new(f, &g)?;
            let (value, oracle, point) = if args.formula == IrregularFormula::S3 {
                let t = args.t.ok_or_else(|| usage("s3 needs --t"))?;
                let samples = sample_trajectory(&tr, nodes, 0.0);
                (s3_series(product, &samples, &tr.at(0.0), t)?, tr.at(t), t)
            } else {
                let tau = args.t.unwrap_or(0.37);
                let shifted = sample_trajectory(&tr, nodes, tau);
                (
                    shifted_recovery(product, &shifted, &tr.at(tau), tau)?,
                    tr.at(0.0),
                    tau,
                )
            };
            report.point = [point, 0.0];
            report.error = (value - oracle).norm();
            report.value = serde_json::to_value(pair(value))?;
            report.in_band = f.bernstein_membership(PI);
            report.functional = Some(g);
            report.hypothesis = Some(S3_HYPOTHESIS);
        }
    }
    Ok(report)
}
