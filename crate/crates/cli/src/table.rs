use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use massform::exact;
use massform::orders::{Family, GroupOrderSpec};
use massform::partitions::enumerate_partitions;
use massform::registry::{self, ParamKind};
use massform::AbelianPGroup;

use crate::output::{emit, Table};
use crate::verify::ParamArgs;
use crate::{Format, OutputArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// `|G|`, `|Aut(G)|` and `|Hol(G)|` by partition.
    AutOrders,
    /// Partial sums at `x = 1/p` of an entry's series.
    PartialSums,
    /// Orders of the classical groups.
    ClassicalOrders,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub what: What,
    /// Entry id for partial sums.
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub min_weight: usize,
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
    /// Largest dimension parameter for classical orders.
    #[arg(long, default_value_t = 4)]
    pub max_dim: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run(args: &TableArgs) -> Result<()> {
    let table = match args.what {
        What::AutOrders => aut_orders(args)?,
        What::PartialSums => partial_sums(args)?,
        What::ClassicalOrders => classical_orders(args)?,
    };
    let bytes = table.render(args.output.format.unwrap_or(Format::Csv))?;
    emit(args.output.out.as_ref(), &bytes)
}

fn single_prime(args: &TableArgs) -> Result<u64> {
    match args.params.primes.as_slice() {
        [] => Ok(2),
        [p] if exact::is_prime(*p) => Ok(*p),
        [p] => bail!("{p} is not prime"),
        _ => bail!("tables take a single --prime"),
    }
}

fn aut_orders(args: &TableArgs) -> Result<Table> {
    let p = single_prime(args)?;
    let mut t = Table::new(&["partition", "order", "aut", "hol"]);
    for w in args.min_weight..=args.max_weight {
        for lambda in enumerate_partitions(w) {
            let g = AbelianPGroup::new(p, lambda.clone())?;
            t.push(vec![lambda.to_string(), g.order().to_string(), g.aut_order().to_string(), g.hol_order().to_string()]);
        }
    }
    Ok(t)
}

fn partial_sums(args: &TableArgs) -> Result<Table> {
    let id = args.id.as_deref().context("--what partial-sums needs --id")?;
    let params = args.params.to_params()?;
    let (_, sums) = registry::entry_partial_sums(id, &params)?;
    let mut t = Table::new(&["degree", "partial_sum"]);
    for (m, s) in sums.iter().enumerate() {
        t.push(vec![m.to_string(), exact::to_string(s)]);
    }
    Ok(t)
}

fn classical_orders(args: &TableArgs) -> Result<Table> {
    let q = match args.params.primes.as_slice() {
        [] => 2,
        [q] => *q,
        _ => bail!("tables take a single --prime"),
    };
    let mut t = Table::new(&["group", "family", "dim", "q", "order", "reciprocal"]);
    for family in Family::ALL {
        for dim in 1..=args.max_dim {
            let Ok(spec) = GroupOrderSpec::new(family, dim, q) else { continue };
            let order = spec.order()?;
            t.push(vec![
                spec.to_string(),
                family.name().into(),
                dim.to_string(),
                q.to_string(),
                order.to_string(),
                exact::to_string(&exact::from_biguint(&order).recip()),
            ]);
        }
    }
    Ok(t)
}

fn describe(kind: &ParamKind) -> String {
    match kind {
        ParamKind::Int { min, max, sweep } => format!("int {min}..={max}, default sweep {}..={}", sweep.0, sweep.1),
        ParamKind::Partition { max_weight, sweep } => {
            format!("partition of weight ≤ {max_weight}, default all of weight ≤ {sweep}")
        }
        ParamKind::Choice { options } => format!("one of {}", options.join("|")),
    }
}

pub fn list(output: &OutputArgs) -> Result<()> {
    let mut t = Table::new(&["id", "mode", "params", "primes", "degree", "max_degree", "statement"]);
    for e in registry::entries() {
        let params: Vec<String> = e.params.iter().map(|s| format!("{} ({})", s.name, describe(&s.kind))).collect();
        let primes: Vec<String> = e.default_primes.iter().map(u64::to_string).collect();
        t.push(vec![
            e.id.into(),
            e.mode.name().into(),
            params.join("; "),
            primes.join(","),
            if e.mode.has_formal_part() { e.default_degree.to_string() } else { String::new() },
            if e.mode.has_formal_part() { e.max_degree.to_string() } else { String::new() },
            e.statement.into(),
        ]);
    }
    emit(output.out.as_ref(), &t.render(output.format.unwrap_or(Format::Csv))?)
}
