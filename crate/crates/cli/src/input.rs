use std::path::Path;

use num_complex::Complex64;
use serde_json::Value;

use group_sampler::irregular::{make_nodes, NodeEntry, NodeRule, SamplingNodes};
use group_sampler::models::{ExpSumSignalFile, SpectralStateFile};
use group_sampler::{random, ExpSumSignal, SpectralState};

use crate::error::{usage, CliError, CliResult};

/// A state of either backend, as read from a state file.
#[derive(Debug, Clone)]
pub enum AnyState {
    Spectral(SpectralState),
    ExpSum(ExpSumSignal),
}

/// Runs `$body` with `$f` bound to the concrete state.
macro_rules! with_state {
    ($state:expr, $f:ident => $body:expr) => {
        match $state {
            $crate::input::AnyState::Spectral($f) => $body,
            $crate::input::AnyState::ExpSum($f) => $body,
        }
    };
}
pub(crate) use with_state;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Spectral files carry `spectrum`, exponential-sum files carry `freqs`.
pub fn state_from_value(v: Value) -> CliResult<AnyState> {
    if v.get("spectrum").is_some() {
        let file: SpectralStateFile = serde_json::from_value(v)?;
        Ok(AnyState::Spectral(SpectralState::try_from(file)?))
    } else if v.get("freqs").is_some() {
        let file: ExpSumSignalFile = serde_json::from_value(v)?;
        Ok(AnyState::ExpSum(ExpSumSignal::try_from(file)?))
    } else {
        Err(CliError::Parse(
            "state file needs either `spectrum` (spectral) or `freqs` (exponential sum)".into(),
        ))
    }
}

pub fn load_state(path: &Path) -> CliResult<AnyState> {
    state_from_value(read_json(path)?)
}

pub fn load_spectral(path: &Path) -> CliResult<SpectralState> {
    match load_state(path)? {
        AnyState::Spectral(s) => Ok(s),
        AnyState::ExpSum(_) => Err(group_sampler::Error::BackendMismatch {
            functional: "spectral-only operation",
            backend: "translation",
        }
        .into()),
    }
}

/// The given state, or a seeded random spectral state with 8 frequencies in
/// `[-band, band]`.
pub fn state_or_random(path: Option<&Path>, seed: u64, band: f64) -> CliResult<AnyState> {
    match path {
        Some(p) => load_state(p),
        None => Ok(AnyState::Spectral(spectral_or_random(None, seed, band)?)),
    }
}

pub fn spectral_or_random(path: Option<&Path>, seed: u64, band: f64) -> CliResult<SpectralState> {
    match path {
        Some(p) => load_spectral(p),
        None => Ok(random::spectral_state(
            &mut random::rng(seed),
            8,
            band,
            false,
        )),
    }
}

/// `re,im` or a bare real number.
pub fn parse_complex(s: &str) -> CliResult<Complex64> {
    let bad = || CliError::Parse(format!("bad complex number `{s}` (expected re,im)"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.parse().map_err(|_| bad())?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.parse().map_err(|_| bad())?,
            im.parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

/// Comma-separated list; empty input is a usage error.
pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    let items: Vec<&str> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if items.is_empty() {
        return Err(usage(format!("{what}: empty list")));
    }
    items
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::Parse(format!("{what}: bad value `{p}`")))
        })
        .collect()
}

/// `t0:t1:steps` with `steps ≥ 1` evenly spaced points.
pub fn parse_range(s: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts.as_slice() else {
        return Err(usage(format!("bad range `{s}` (expected t0:t1:steps)")));
    };
    let bad = || CliError::Parse(format!("bad range `{s}`"));
    let a: f64 = a.parse().map_err(|_| bad())?;
    let b: f64 = b.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    match n {
        0 => Err(usage(format!("range `{s}` is empty"))),
        1 => Ok(vec![a]),
        _ => Ok((0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect()),
    }
}

/// Node rule from a string; `rand:d` without a seed takes the global seed.
pub fn parse_rule(s: &str, seed: u64) -> CliResult<NodeRule> {
    let text = if s.starts_with("rand:") && s.matches(':').count() == 1 {
        format!("{s}:{seed}")
    } else {
        s.to_string()
    };
    Ok(text.parse()?)
}

pub fn load_nodes(
    rule: &str,
    file: Option<&Path>,
    half_width: usize,
    seed: u64,
) -> CliResult<SamplingNodes> {
    let rule = match file {
        Some(p) => {
            let nodes: Vec<NodeEntry> = serde_json::from_value(read_json(p)?)?;
            NodeRule::Explicit { nodes }
        }
        None => parse_rule(rule, seed)?,
    };
    Ok(make_nodes(half_width, rule)?)
}
