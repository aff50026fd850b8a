//! Perturbed integer nodes `t_n = n + δ_n`, `|n| ≤ N`, with `sup|δ_n| < 1/4`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible deviation (exclusive).
pub const KADEC_BOUND: f64 = 0.25;

/// One explicit node `t_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub n: i64,
    pub t_n: f64,
}

/// How the deviations `δ_n` are produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum NodeRule {
    /// `δ_n = 0`.
    Zero,
    /// `δ_n = d·sin(n)`.
    Sinusoidal {
        amplitude: f64,
    },
    /// `δ_n = d`.
    Constant {
        offset: f64,
    },
    /// `δ_n` uniform in `[-d, d]`, drawn per index so that node sets for
    /// different `N` are nested.
    Uniform {
        amplitude: f64,
        seed: u64,
    },
    Explicit {
        nodes: Vec<NodeEntry>,
    },
}

impl NodeRule {
    /// The cap `d` a rule promises, checked against `1/4` before any node is drawn.
    fn declared_bound(&self) -> Option<f64> {
        match self {
            NodeRule::Sinusoidal { amplitude } | NodeRule::Uniform { amplitude, .. } => {
                Some(amplitude.abs())
            }
            NodeRule::Constant { offset } => Some(offset.abs()),
            NodeRule::Zero | NodeRule::Explicit { .. } => None,
        }
    }

    fn deviation(&self, n: i64) -> Result<f64> {
        Ok(match self {
            NodeRule::Zero => 0.0,
            NodeRule::Sinusoidal { amplitude } => amplitude * (n as f64).sin(),
            NodeRule::Constant { offset } => *offset,
            NodeRule::Uniform { amplitude, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                // zigzag keeps streams distinct for ±n
                rng.set_stream(((n << 1) ^ (n >> 63)) as u64);
                if *amplitude == 0.0 {
                    0.0
                } else {
                    rng.gen_range(-amplitude..=*amplitude)
                }
            }
            NodeRule::Explicit { nodes } => {
                let entry = nodes
                    .iter()
                    .find(|e| e.n == n)
                    .ok_or(Error::MissingSample { index: n })?;
                entry.t_n - n as f64
            }
        })
    }
}

impl fmt::Display for NodeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRule::Zero => write!(f, "zero"),
            NodeRule::Sinusoidal { amplitude } => write!(f, "sin:{amplitude}"),
            NodeRule::Constant { offset } => write!(f, "const:{offset}"),
            NodeRule::Uniform { amplitude, seed } => write!(f, "rand:{amplitude}:{seed}"),
            NodeRule::Explicit { nodes } => write!(f, "explicit[{}]", nodes.len()),
        }
    }
}

/// Parses `zero`, `sin:d`, `const:d` and `rand:d:seed`.
impl FromStr for NodeRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad number `{p}` in node rule `{s}`")))
        };
        match parts.as_slice() {
            ["zero"] => Ok(NodeRule::Zero),
            ["sin", d] => Ok(NodeRule::Sinusoidal { amplitude: num(d)? }),
            ["const", d] => Ok(NodeRule::Constant { offset: num(d)? }),
            ["rand", d, seed] => Ok(NodeRule::Uniform {
                amplitude: num(d)?,
                seed: seed
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad seed `{seed}` in node rule `{s}`")))?,
            }),
            _ => Err(Error::Parse(format!(
                "unknown node rule `{s}` (expected zero, sin:d, const:d or rand:d:seed)"
            ))),
        }
    }
}

/// A validated node set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplingNodes {
    half_width: usize,
    nodes: Vec<f64>,
    deviation: f64,
    rule: NodeRule,
}

impl SamplingNodes {
    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// `sup_n |t_n - n|`.
    pub fn deviation(&self) -> f64 {
        self.deviation
    }

    pub fn rule(&self) -> &NodeRule {
        &self.rule
    }

    /// Nodes in index order `-N..=N`.
    pub fn as_slice(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, n: i64) -> f64 {
        self.nodes[self.slot(n)]
    }

    /// Position of index `n` in [`as_slice`](Self::as_slice).
    pub fn slot(&self, n: i64) -> usize {
        let k = self.half_width as i64;
        assert!(n.abs() <= k, "node index {n} outside |n| <= {k}");
        (n + k) as usize
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        let k = self.half_width as i64;
        -k..=k
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.indices().zip(self.nodes.iter().copied())
    }

    /// Recovery formulas divide by `t_0`.
    pub fn require_nonzero_anchor(&self) -> Result<()> {
        if self.node(0) == 0.0 {
            Err(Error::ZeroAnchorNode)
        } else {
            Ok(())
        }
    }

    /// Whether every node of `self` is also a node of `other` at the same index.
    pub fn is_prefix_of(&self, other: &SamplingNodes) -> bool {
        self.half_width <= other.half_width && self.iter().all(|(n, t)| other.node(n) == t)
    }
}

/// Builds and validates the nodes `t_n`, `|n| ≤ N`.
pub fn make_nodes(half_width: usize, rule: NodeRule) -> Result<SamplingNodes> {
    if half_width == 0 {
        return Err(Error::param("N", "must be at least 1"));
    }
    if let Some(d) = rule.declared_bound() {
        if !(d < KADEC_BOUND) {
            return Err(Error::DeviationCap { cap: d });
        }
    }
    let k = half_width as i64;
    let mut nodes = Vec::with_capacity(2 * half_width + 1);
    let mut deviation = 0.0f64;
    for n in -k..=k {
        let d = rule.deviation(n)?;
        if !(d.abs() < KADEC_BOUND) {
            return Err(Error::NodeDeviation {
                index: n,
                deviation: d,
            });
        }
        deviation = deviation.max(d.abs());
        let t = n as f64 + d;
        if let Some(&prev) = nodes.last() {
            if !(t > prev) {
                return Err(Error::NodesNotIncreasing { index: n });
            }
        }
        nodes.push(t);
    }
    Ok(SamplingNodes {
        half_width,
        nodes,
        deviation,
        rule,
    })
}
