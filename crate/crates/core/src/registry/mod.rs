//! Named, checkable identities.
//!
//! Each entry builds both sides of an identity and compares them either
//! coefficient by coefficient as truncated series in `x = 1/p`, or as exact
//! rationals and rational functions of `p`. Diagnostic entries measure
//! stated forms under several conventions instead of passing or failing.
//!
//! Infinite sums over groups or indices are swept only over the terms whose
//! lowest power of `x` is at most the truncation degree, so every compared
//! coefficient is exact.

mod catalogue;
mod classical;
mod groups;
mod hall;
mod isoclinism;
mod lattice;
mod params;
mod qident;
mod report;
mod sums;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::qseries::{evaluate_at_inverse_prime, RationalFunction, TruncatedSeries};

pub use params::{parse_partition, ParamKind, ParamSpec, Params};
pub use report::{Finding, IdentityReport, Mismatch, Mode, NumericReading, Status, SCHEMA_VERSION};

pub(crate) use params::Ctx;

/// A registered identity.
pub struct IdentityEntry {
    pub id: &'static str,
    pub mode: Mode,
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    /// Whether exact checks read [`Params::primes`].
    pub uses_primes: bool,
    pub default_primes: &'static [u64],
    pub default_degree: usize,
    pub max_degree: usize,
    /// Whether the report carries a numeric reading at `x = 1/p`.
    pub numeric: bool,
    pub(crate) build: fn(&Ctx) -> Result<Outcome>,
}

#[derive(Clone, Debug)]
pub(crate) enum Value {
    Series(TruncatedSeries),
    Exact(Rational),
    Symbolic(RationalFunction),
    Holds(bool),
}

impl Value {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Series(s) => serde_json::to_value(s.to_json()).expect("plain data"),
            Value::Exact(q) => exact::to_string(q).into(),
            Value::Symbolic(f) => f.to_string().into(),
            Value::Holds(b) => (*b).into(),
        }
    }

    fn brief(&self) -> Option<String> {
        match self {
            Value::Series(_) => None,
            Value::Exact(q) => Some(exact::to_string(q)),
            Value::Symbolic(f) => Some(f.to_string()),
            Value::Holds(b) => Some(b.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Comparison {
    label: String,
    lhs: Value,
    rhs: Value,
}

impl Comparison {
    fn mismatch(&self) -> Option<Mismatch> {
        let found = |degree, lhs: String, rhs: String| {
            Some(Mismatch {
                label: self.label.clone(),
                degree,
                lhs,
                rhs,
            })
        };
        match (&self.lhs, &self.rhs) {
            (Value::Series(a), Value::Series(b)) => a
                .first_difference(b)
                .and_then(|d| found(Some(d), exact::to_string(&a.coeff(d)), exact::to_string(&b.coeff(d)))),
            (Value::Exact(a), Value::Exact(b)) if a == b => None,
            (Value::Symbolic(a), Value::Symbolic(b)) if a.equals(b) => None,
            (Value::Holds(a), Value::Holds(b)) if a == b => None,
            (a, b) => found(
                None,
                a.brief().unwrap_or_default(),
                b.brief().unwrap_or_default(),
            ),
        }
    }

    /// Both sides vanish through the compared degree.
    fn is_vacuous(&self) -> bool {
        match (&self.lhs, &self.rhs) {
            (Value::Series(a), Value::Series(b)) => {
                let n = a.truncation().min(b.truncation());
                a.truncate(n).is_zero() && b.truncate(n).is_zero()
            }
            _ => false,
        }
    }

    fn swapped(self) -> Self {
        Comparison {
            label: self.label,
            lhs: self.rhs,
            rhs: self.lhs,
        }
    }
}

/// What an entry builder produces.
#[derive(Default)]
pub(crate) struct Outcome {
    comparisons: Vec<Comparison>,
    findings: Vec<Finding>,
    notes: Vec<String>,
    numeric: Option<(TruncatedSeries, TruncatedSeries)>,
}

impl Outcome {
    fn push(&mut self, label: impl Into<String>, lhs: Value, rhs: Value) {
        self.comparisons.push(Comparison {
            label: label.into(),
            lhs,
            rhs,
        });
    }

    pub fn series(&mut self, label: impl Into<String>, lhs: TruncatedSeries, rhs: TruncatedSeries) {
        self.push(label, Value::Series(lhs), Value::Series(rhs));
    }

    pub fn exact(&mut self, label: impl Into<String>, lhs: Rational, rhs: Rational) {
        self.push(label, Value::Exact(lhs), Value::Exact(rhs));
    }

    pub fn symbolic(&mut self, label: impl Into<String>, lhs: RationalFunction, rhs: RationalFunction) {
        self.push(label, Value::Symbolic(lhs), Value::Symbolic(rhs));
    }

    pub fn holds(&mut self, label: impl Into<String>, holds: bool) {
        self.push(label, Value::Holds(holds), Value::Holds(true));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Main series pair for the numeric reading.
    pub fn numeric(&mut self, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
        if self.numeric.is_none() {
            self.numeric = Some((lhs.clone(), rhs.clone()));
        }
    }

    pub(crate) fn finding(&mut self, convention: &str, label: impl Into<String>, lhs: Value, rhs: Value, detail: impl Into<String>) {
        let cmp = Comparison {
            label: label.into(),
            lhs,
            rhs,
        };
        let mismatch = cmp.mismatch();
        let mut detail = detail.into();
        if let Some(m) = &mismatch {
            if let Some(d) = m.degree {
                let sep = if detail.is_empty() { "" } else { "; " };
                detail = format!("{detail}{sep}first difference at x^{d}: {} vs {}", m.lhs, m.rhs);
            }
        }
        self.findings.push(Finding {
            convention: convention.to_string(),
            label: cmp.label,
            agrees: mismatch.is_none(),
            detail,
            lhs: cmp.lhs.brief(),
            rhs: cmp.rhs.brief(),
        });
    }

    pub fn finding_series(&mut self, convention: &str, label: impl Into<String>, lhs: TruncatedSeries, rhs: TruncatedSeries, detail: impl Into<String>) {
        self.finding(convention, label, Value::Series(lhs), Value::Series(rhs), detail);
    }

    pub fn finding_exact(&mut self, convention: &str, label: impl Into<String>, lhs: Rational, rhs: Rational, detail: impl Into<String>) {
        self.finding(convention, label, Value::Exact(lhs), Value::Exact(rhs), detail);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Build the right-hand side as the left and vice versa.
    pub swap_sides: bool,
    /// Attach both sides of the first comparison (of the failing one when
    /// the entry fails) even on success.
    pub include_sides: bool,
    /// Record wall time in `millis`. Off for canonical, byte-stable output.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            swap_sides: false,
            include_sides: false,
            timing: true,
        }
    }
}

impl VerifyOptions {
    pub fn canonical() -> Self {
        VerifyOptions {
            timing: false,
            ..Self::default()
        }
    }
}

/// Every registered entry, sorted by id.
pub fn entries() -> &'static [IdentityEntry] {
    catalogue::ENTRIES
}

pub fn entry(id: &str) -> Result<&'static IdentityEntry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn verify(id: &str, params: &Params) -> Result<IdentityReport> {
    verify_with(id, params, VerifyOptions::default())
}

pub fn verify_with(id: &str, params: &Params, opts: VerifyOptions) -> Result<IdentityReport> {
    let entry = entry(id)?;
    let ctx = Ctx::new(
        entry.id,
        entry.params,
        entry.default_primes,
        entry.max_degree,
        entry.default_degree,
        params,
    )?;
    let start = Instant::now();
    let mut outcome = (entry.build)(&ctx)?;
    if outcome.comparisons.is_empty() && outcome.findings.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "`{}` has nothing to check for the given parameters",
            entry.id
        )));
    }
    if opts.swap_sides {
        outcome.comparisons = outcome.comparisons.into_iter().map(Comparison::swapped).collect();
        outcome.numeric = outcome.numeric.map(|(l, r)| (r, l));
    }
    if let Some(c) = outcome.comparisons.iter().find(|c| c.is_vacuous()) {
        return Err(Error::TruncationTooSmall {
            id: entry.id.to_string(),
            degree: ctx.n,
            detail: format!("both sides of `{}` vanish through the truncation", c.label),
        });
    }
    let failing = outcome
        .comparisons
        .iter()
        .find_map(|c| c.mismatch().map(|m| (c, m)));
    let status = match (entry.mode, &failing) {
        (Mode::Diagnostic, _) => Status::Diagnostic,
        (_, Some(_)) => Status::Fail,
        (_, None) => Status::Pass,
    };
    let shown = match &failing {
        Some((c, _)) => Some(*c),
        None if opts.include_sides => outcome.comparisons.first(),
        None => None,
    };
    let numeric = if entry.numeric {
        outcome
            .numeric
            .as_ref()
            .map(|(l, r)| numeric_reading(l, r, ctx.primes().first().copied().unwrap_or(2)))
    } else {
        None
    };
    let mut report_params = params
        .values
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect::<std::collections::BTreeMap<_, _>>();
    if entry.uses_primes {
        let primes: Vec<String> = ctx.primes().iter().map(u64::to_string).collect();
        report_params.insert("primes".into(), primes.join(","));
    }
    let millis = opts.timing.then(|| start.elapsed().as_millis() as u64);
    Ok(IdentityReport {
        id: entry.id.to_string(),
        params: report_params,
        mode: entry.mode,
        status,
        degree: entry.mode.has_formal_part().then_some(ctx.n),
        checks: outcome.comparisons.len() + outcome.findings.len(),
        first_mismatch: failing.map(|(_, m)| m),
        lhs: shown.map(|c| c.lhs.to_json()),
        rhs: shown.map(|c| c.rhs.to_json()),
        notes: outcome.notes,
        diagnostics: outcome.findings,
        numeric,
        millis,
    })
}

/// Cumulative sums `Σ_{k ≤ m} c_k p^{−k}` for `m = 0..=N`.
pub fn partial_sums(s: &TruncatedSeries, p: u64) -> Vec<Rational> {
    let x = exact::ratio(1, p as i64);
    let mut pow = exact::one();
    let mut acc = Rational::from_integer(0.into());
    s.coeffs()
        .iter()
        .map(|c| {
            acc += c * &pow;
            pow *= &x;
            acc.clone()
        })
        .collect()
}

fn numeric_reading(lhs: &TruncatedSeries, rhs: &TruncatedSeries, p: u64) -> NumericReading {
    let reading = evaluate_at_inverse_prime(lhs, p);
    let monotone = lhs.is_nonnegative().then(|| {
        partial_sums(lhs, p).windows(2).all(|w| w[0] <= w[1])
    });
    NumericReading {
        prime: p,
        truncation: reading.truncation,
        lhs_value: exact::to_string(&reading.value),
        rhs_value: exact::to_string(&rhs.evaluate_partial(&exact::ratio(1, p as i64))),
        tail: reading.note(),
        monotone,
    }
}

/// Partial sums at `x = 1/p` of the main series of a numeric entry, for
/// tables.
pub fn entry_partial_sums(id: &str, params: &Params) -> Result<(u64, Vec<Rational>)> {
    let entry = entry(id)?;
    if !entry.numeric {
        return Err(Error::InvalidParameter(format!("`{id}` has no numeric reading")));
    }
    let ctx = Ctx::new(
        entry.id,
        entry.params,
        entry.default_primes,
        entry.max_degree,
        entry.default_degree,
        params,
    )?;
    let p = ctx.primes().first().copied().unwrap_or(2);
    let outcome = (entry.build)(&ctx)?;
    let (lhs, _) = outcome
        .numeric
        .ok_or_else(|| Error::InvalidParameter(format!("`{id}` produced no series")))?;
    Ok((p, partial_sums(&lhs, p)))
}

/// Shell-style pattern over entry ids (`*`, `?`, `[...]`).
pub fn matches_filter(filter: &str, id: &str) -> Result<bool> {
    let pattern = glob::Pattern::new(filter)
        .map_err(|e| Error::InvalidParameter(format!("bad filter `{filter}`: {e}")))?;
    Ok(pattern.matches(id))
}

pub type EntryResult = (&'static str, Result<IdentityReport>);

/// Runs every entry whose id matches `filter`, in id order. Named values
/// that an entry does not declare are not passed to it.
pub fn verify_all(filter: &str, params: &Params) -> Result<Vec<EntryResult>> {
    verify_all_with(filter, params, VerifyOptions::default(), 1)
}

/// [`verify_all`] fanned out over `jobs` threads; the result order does not
/// depend on `jobs`.
pub fn verify_all_with(filter: &str, params: &Params, opts: VerifyOptions, jobs: usize) -> Result<Vec<EntryResult>> {
    let mut selected = Vec::new();
    for e in entries() {
        if matches_filter(filter, e.id)? {
            selected.push(e);
        }
    }
    let run = |e: &IdentityEntry| -> Result<IdentityReport> {
        let mut own = params.clone();
        own.values.retain(|k, _| e.params.iter().any(|s| s.name == k));
        verify_with(e.id, &own, opts)
    };
    let jobs = jobs.clamp(1, selected.len().max(1));
    if jobs == 1 {
        return Ok(selected.iter().map(|e| (e.id, run(e))).collect());
    }
    let slots: Vec<Mutex<Option<Result<IdentityReport>>>> = selected.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(e) = selected.get(i) else { break };
                *slots[i].lock().expect("no panics while held") = Some(run(e));
            });
        }
    });
    Ok(selected
        .iter()
        .zip(slots)
        .map(|(e, slot)| (e.id, slot.into_inner().expect("no panics while held").expect("every slot filled")))
        .collect())
}

/// A run fails iff some entry errs or some non-diagnostic entry fails.
pub fn aggregate_pass(results: &[EntryResult]) -> bool {
    results
        .iter()
        .all(|(_, r)| matches!(r, Ok(rep) if !rep.is_failure()))
}
