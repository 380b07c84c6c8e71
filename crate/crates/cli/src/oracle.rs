use anyhow::{bail, Result};
use clap::{Args, Subcommand};
use massform::oracles::{
    covering_registry, oracle_aut_order_abelian, oracle_aut_order_abelian_direct, oracle_cayley_aut_count,
    oracle_hnf_sublattice_count, oracle_invertible_matrix_count, oracle_partition_counts, oracle_subspace_count,
};
use massform::registry::parse_partition;
use massform::AbelianPGroup;

use crate::output::{emit, Table};
use crate::{Format, OutputArgs};

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(subcommand)]
    pub which: Which,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Subcommand, Debug)]
pub enum Which {
    /// `|Aut(G)|` of the abelian p-group of type λ by counting endomorphisms.
    Aut {
        #[arg(long)]
        prime: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Enumerate generator images instead of counting by blocks.
        #[arg(long)]
        direct: bool,
    },
    /// Sublattices of index p^k in Z^d by Hermite normal forms.
    Hnf {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        k: usize,
    },
    /// Subspaces of F_p^n.
    Subspace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prime: u64,
    },
    /// Invertible k×k matrices over F_p.
    Matrices {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        prime: u64,
    },
    /// π(0), …, π(n) by enumeration.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Automorphism counts of the shipped covering cases from their tables.
    Cayley {
        /// Case name; all cases when omitted.
        #[arg(long)]
        case: Option<String>,
    },
}

pub fn run(args: &OracleArgs) -> Result<()> {
    let table = match &args.which {
        Which::Aut { prime, lambda, direct } => {
            let g = AbelianPGroup::new(*prime, parse_partition(lambda)?)?;
            let value = if *direct {
                oracle_aut_order_abelian_direct(&g)?.to_string()
            } else {
                oracle_aut_order_abelian(&g)?.to_string()
            };
            row(&["prime", "lambda", "aut"], vec![prime.to_string(), lambda.clone(), value])
        }
        Which::Hnf { d, prime, k } => {
            let v = oracle_hnf_sublattice_count(*d, *prime, *k)?;
            row(&["d", "prime", "k", "count"], vec![d.to_string(), prime.to_string(), k.to_string(), v.to_string()])
        }
        Which::Subspace { n, prime } => {
            let v = oracle_subspace_count(*n, *prime)?;
            row(&["n", "prime", "count"], vec![n.to_string(), prime.to_string(), v.to_string()])
        }
        Which::Matrices { k, prime } => {
            let v = oracle_invertible_matrix_count(*k, *prime)?;
            row(&["k", "prime", "count"], vec![k.to_string(), prime.to_string(), v.to_string()])
        }
        Which::Partitions { n } => {
            let mut t = Table::new(&["n", "count"]);
            for (m, c) in oracle_partition_counts(*n)?.iter().enumerate() {
                t.push(vec![m.to_string(), c.to_string()]);
            }
            t
        }
        Which::Cayley { case } => cayley(case.as_deref())?,
    };
    emit(args.output.out.as_ref(), &table.render(args.output.format.unwrap_or(Format::Csv))?)
}

fn row(columns: &[&'static str], values: Vec<String>) -> Table {
    let mut t = Table::new(columns);
    t.push(values);
    t
}

fn cayley(wanted: Option<&str>) -> Result<Table> {
    let cases = covering_registry()?;
    if let Some(name) = wanted {
        if !cases.iter().any(|c| c.name == name) {
            let names: Vec<_> = cases.iter().map(|c| c.name).collect();
            bail!("unknown case `{name}`; known: {}", names.join(", "));
        }
    }
    let mut t = Table::new(&["case", "group", "role", "order", "aut"]);
    for case in cases.iter().filter(|c| wanted.is_none_or(|w| w == c.name)) {
        let base = &case.base;
        t.push(vec![
            case.name.into(),
            case.base_name.into(),
            "base".into(),
            base.order().to_string(),
            oracle_cayley_aut_count(base)?.to_string(),
        ]);
        for cover in &case.covers {
            t.push(vec![
                case.name.into(),
                cover.name.into(),
                "cover".into(),
                cover.group.order().to_string(),
                oracle_cayley_aut_count(&cover.group)?.to_string(),
            ]);
        }
    }
    Ok(t)
}
