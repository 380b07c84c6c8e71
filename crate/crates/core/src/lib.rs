//! Exact verification of mass formulae for finite abelian p-groups.
//!
//! Everything is computed over `BigRational`: formal power series in
//! `x = 1/p`, closed-form group orders, subgroup counts and lattice zeta
//! functions. The [`registry`] ties these together into named, checkable
//! identities.

pub mod abelian;
pub mod counting;
pub mod error;
pub mod exact;
pub mod oracles;
pub mod orders;
pub mod partitions;
pub mod qseries;
pub mod registry;

pub use abelian::AbelianPGroup;
pub use error::{Error, Result};
pub use exact::Rational;
pub use partitions::{Orientation, Partition};
pub use qseries::{PartialSum, Polynomial, RationalFunction, SeriesForm, TruncatedSeries};
