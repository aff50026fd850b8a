use serde::Serialize;

use group_sampler::coefficients::{favard_in_range, CoefficientTable, Family, FavardTable};

use crate::cli::{CoeffFamily, CoeffsArgs};
use crate::error::{usage, CliResult};
use crate::output::{num, Format, Output, Table};

#[derive(Serialize)]
struct Row {
    family: &'static str,
    m: u32,
    k: Option<i64>,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_range: Option<bool>,
}

pub fn run(args: &CoeffsArgs) -> CliResult<Output> {
    let rows: Vec<Row> = match args.family {
        CoeffFamily::Favard => FavardTable::new(args.jmax)
            .entries()
            .iter()
            .map(|v| Row {
                family: "favard",
                m: v.j,
                k: None,
                value: v.value,
                tail_bound: Some(v.tail_bound),
                in_range: Some(favard_in_range(v)),
            })
            .collect(),
        family => {
            if args.m == 0 {
                return Err(usage("--m must be at least 1"));
            }
            let family = if family == CoeffFamily::A {
                Family::Odd
            } else {
                Family::Even
            };
            CoefficientTable::new(family, args.m, args.terms)
                .entries()
                .map(|(k, value)| Row {
                    family: family.name(),
                    m: args.m,
                    k: Some(k),
                    value,
                    tail_bound: None,
                    in_range: None,
                })
                .collect()
        }
    };
    let mut table = Table::new(&["family", "m", "k", "value"]);
    for r in &rows {
        table.push(vec![
            r.family.to_string(),
            r.m.to_string(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            num(r.value),
        ]);
    }
    Output::new(&rows, table, Format::Csv)
}
