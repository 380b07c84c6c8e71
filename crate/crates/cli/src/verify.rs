use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Args;
use massform::registry::{self, IdentityReport, Params, VerifyOptions, SCHEMA_VERSION};
use serde::Serialize;

use crate::output::{emit, Table};
use crate::{Format, OutputArgs, EXIT_FAILED, EXIT_USAGE};

#[derive(Args, Clone, Debug)]
pub struct ParamArgs {
    /// Prime(s) for exact and numeric readings; repeatable or comma-separated.
    #[arg(long = "prime", value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Truncation degree N of formal series.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Entry parameter `name=value`; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Result<Params> {
        let mut params = Params::new().with_primes(&self.primes);
        params.degree = self.degree;
        for pair in &self.params {
            params.set_pair(pair)?;
        }
        Ok(params)
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A single entry id.
    #[arg(long, conflicts_with = "filter")]
    pub id: Option<String>,
    /// Glob over entry ids, e.g. `hall_*`; defaults to every entry.
    #[arg(long)]
    pub filter: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Omit timings so that reports compare byte for byte.
    #[arg(long)]
    pub canonical: bool,
    /// Include both sides of the first comparison even when it passes.
    #[arg(long)]
    pub sides: bool,
    /// Worker threads for filter runs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode> {
    let params = args.params.to_params()?;
    let opts = VerifyOptions {
        include_sides: args.sides,
        ..if args.canonical { VerifyOptions::canonical() } else { VerifyOptions::default() }
    };
    let results: Vec<(String, Result<IdentityReport, String>)> = match &args.id {
        Some(id) => vec![(id.clone(), Ok(registry::verify_with(id, &params, opts)?))],
        None => {
            let filter = args.filter.as_deref().unwrap_or("*");
            check_names(filter, &params)?;
            registry::verify_all_with(filter, &params, opts, args.jobs)?
                .into_iter()
                .map(|(id, r)| (id.to_string(), r.map_err(|e| e.to_string())))
                .collect()
        }
    };
    let bytes = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => render_json(&results)?,
        Format::Csv => render_csv(&results)?.render(Format::Csv)?,
    };
    emit(args.output.out.as_ref(), &bytes)?;
    let code = if results.iter().any(|(_, r)| r.is_err()) {
        EXIT_USAGE
    } else if results.iter().any(|(_, r)| matches!(r, Ok(rep) if rep.is_failure())) {
        EXIT_FAILED
    } else {
        0
    };
    Ok(ExitCode::from(code))
}

/// Every `--param` name must be declared by at least one selected entry.
fn check_names(filter: &str, params: &Params) -> Result<()> {
    let mut selected = Vec::new();
    for e in registry::entries() {
        if registry::matches_filter(filter, e.id)? {
            selected.push(e);
        }
    }
    for name in params.values.keys() {
        if !selected.iter().any(|e| e.params.iter().any(|s| s.name == name)) {
            bail!("no entry matching `{filter}` has a parameter `{name}`");
        }
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(untagged)]
enum EntryOut<'a> {
    Report(&'a IdentityReport),
    Error { id: &'a str, status: &'static str, error: &'a str },
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    entries: Vec<EntryOut<'a>>,
}

fn render_json(results: &[(String, Result<IdentityReport, String>)]) -> Result<Vec<u8>> {
    let entries = results
        .iter()
        .map(|(id, r)| match r {
            Ok(rep) => EntryOut::Report(rep),
            Err(e) => EntryOut::Error { id, status: "error", error: e },
        })
        .collect();
    let doc = Document { schema_version: SCHEMA_VERSION, entries };
    let mut bytes = serde_json::to_vec_pretty(&doc)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn render_csv(results: &[(String, Result<IdentityReport, String>)]) -> Result<Table> {
    let mut t = Table::new(&["id", "mode", "status", "degree", "checks", "params", "first_mismatch", "millis", "error"]);
    for (id, r) in results {
        match r {
            Ok(rep) => {
                let params: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                t.push(vec![
                    rep.id.clone(),
                    rep.mode.name().into(),
                    rep.status.name().into(),
                    rep.degree.map(|d| d.to_string()).unwrap_or_default(),
                    rep.checks.to_string(),
                    params.join(";"),
                    rep.first_mismatch.as_ref().map(|m| m.label.clone()).unwrap_or_default(),
                    rep.millis.map(|m| m.to_string()).unwrap_or_default(),
                    String::new(),
                ]);
            }
            Err(e) => {
                let mut row = vec![String::new(); 9];
                row[0] = id.clone();
                row[2] = "error".into();
                row[8] = e.clone();
                t.push(row);
            }
        }
    }
    Ok(t)
}
