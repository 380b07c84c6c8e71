//! Run parameters and their per-entry schemas.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact;
use crate::partitions::Partition;

/// Parameters shared by every verification: the primes used by exact
/// checks (the first one also drives the numeric reading), an optional
/// truncation degree, and named entry-specific values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub primes: Vec<u64>,
    pub degree: Option<usize>,
    pub values: BTreeMap<String, String>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_degree(mut self, n: usize) -> Self {
        self.degree = Some(n);
        self
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.primes = vec![p];
        self
    }

    pub fn with_primes(mut self, primes: &[u64]) -> Self {
        self.primes = primes.to_vec();
        self
    }

    pub fn with(mut self, name: &str, value: impl ToString) -> Self {
        self.values.insert(name.to_string(), value.to_string());
        self
    }

    /// Parses `name=value`.
    pub fn set_pair(&mut self, pair: &str) -> Result<()> {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected name=value, got `{pair}`")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::InvalidParameter(format!("empty parameter name in `{pair}`")));
        }
        self.values.insert(name.to_string(), value.trim().to_string());
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamKind {
    /// An integer in `min..=max`; when omitted the entry sweeps `sweep`.
    Int { min: usize, max: usize, sweep: (usize, usize) },
    /// A partition such as `2,1,1` with weight at most `max_weight`; when
    /// omitted the entry sweeps all partitions of weight up to `sweep`.
    Partition { max_weight: usize, sweep: usize },
    /// One of a fixed list of names; when omitted every choice is run.
    Choice { options: &'static [&'static str] },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    #[serde(flatten)]
    pub kind: ParamKind,
    pub help: &'static str,
}

impl ParamSpec {
    pub const fn int(name: &'static str, min: usize, max: usize, sweep: (usize, usize), help: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::Int { min, max, sweep },
            help,
        }
    }

    pub const fn partition(name: &'static str, max_weight: usize, sweep: usize, help: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::Partition { max_weight, sweep },
            help,
        }
    }

    pub const fn choice(name: &'static str, options: &'static [&'static str], help: &'static str) -> Self {
        ParamSpec {
            name,
            kind: ParamKind::Choice { options },
            help,
        }
    }

    fn check(&self, raw: &str) -> Result<()> {
        let bad = |why: String| Error::InvalidParameter(format!("{} = `{raw}`: {why}", self.name));
        match self.kind {
            ParamKind::Int { min, max, .. } => {
                let v: usize = raw.parse().map_err(|_| bad("not a nonnegative integer".into()))?;
                if v < min || v > max {
                    return Err(bad(format!("outside {min}..={max}")));
                }
            }
            ParamKind::Partition { max_weight, .. } => {
                let lambda = parse_partition(raw).map_err(|e| bad(e.to_string()))?;
                if lambda.weight() > max_weight {
                    return Err(bad(format!("weight exceeds {max_weight}")));
                }
            }
            ParamKind::Choice { options } => {
                if !options.contains(&raw) {
                    return Err(bad(format!("expected one of {}", options.join(", "))));
                }
            }
        }
        Ok(())
    }
}

/// Parses `3,1,1`; the empty string is the empty partition.
pub fn parse_partition(raw: &str) -> Result<Partition> {
    let raw = raw.trim();
    if raw.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = raw
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition part `{s}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Validated view of the parameters handed to an entry builder.
pub(crate) struct Ctx<'a> {
    pub n: usize,
    primes: Vec<u64>,
    specs: &'static [ParamSpec],
    values: &'a BTreeMap<String, String>,
}

impl<'a> Ctx<'a> {
    pub(crate) fn new(
        id: &str,
        specs: &'static [ParamSpec],
        default_primes: &[u64],
        max_degree: usize,
        default_degree: usize,
        params: &'a Params,
    ) -> Result<Self> {
        for (name, raw) in &params.values {
            let spec = specs.iter().find(|s| s.name == name).ok_or_else(|| {
                Error::InvalidParameter(format!("`{id}` has no parameter `{name}`"))
            })?;
            spec.check(raw)?;
        }
        for &p in &params.primes {
            if !exact::is_prime(p) {
                return Err(Error::InvalidParameter(format!("{p} is not prime")));
            }
        }
        let n = params.degree.unwrap_or(default_degree);
        if n == 0 || n > max_degree {
            return Err(Error::InvalidParameter(format!(
                "degree {n} outside 1..={max_degree} for `{id}`"
            )));
        }
        let primes = if params.primes.is_empty() {
            default_primes.to_vec()
        } else {
            params.primes.clone()
        };
        Ok(Ctx {
            n,
            primes,
            specs,
            values: &params.values,
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn spec(&self, name: &str) -> &ParamSpec {
        self.specs
            .iter()
            .find(|s| s.name == name)
            .unwrap_or_else(|| panic!("entry does not declare parameter `{name}`"))
    }

    /// The given value, or the declared sweep.
    pub fn ints(&self, name: &str) -> Vec<usize> {
        let ParamKind::Int { sweep, .. } = self.spec(name).kind else {
            panic!("`{name}` is not an integer parameter");
        };
        match self.values.get(name) {
            Some(raw) => vec![raw.parse().expect("validated")],
            None => (sweep.0..=sweep.1).collect(),
        }
    }

    pub fn ints_within(&self, name: &str, range: RangeInclusive<usize>) -> Vec<usize> {
        self.ints(name).into_iter().filter(|v| range.contains(v)).collect()
    }

    /// The given partition, or every partition of weight up to the sweep.
    pub fn partitions(&self, name: &str) -> Vec<Partition> {
        let ParamKind::Partition { sweep, .. } = self.spec(name).kind else {
            panic!("`{name}` is not a partition parameter");
        };
        match self.values.get(name) {
            Some(raw) => vec![parse_partition(raw).expect("validated")],
            None => (0..=sweep)
                .flat_map(crate::partitions::enumerate_partitions)
                .collect(),
        }
    }

    pub fn choices(&self, name: &str) -> Vec<&'static str> {
        let ParamKind::Choice { options } = self.spec(name).kind else {
            panic!("`{name}` is not a choice parameter");
        };
        match self.values.get(name) {
            Some(raw) => options.iter().copied().filter(|o| o == raw).collect(),
            None => options.to_vec(),
        }
    }
}
