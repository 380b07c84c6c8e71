//! Exact truncated power series, polynomials and rational functions over the
//! rationals. Every identity in the registry is checked in this arithmetic.

mod form;
mod poly;
mod product;
mod ratfunc;
mod series;

pub use form::{PochhammerFactor, SeriesForm};
pub use poly::Polynomial;
pub use product::{
    divide_by_pochhammer, evaluate_at_inverse_prime, inverse_pochhammer_f, partition_series,
    pochhammer_f, product_over_exponents, residue_stream, PartialSum,
};
pub use ratfunc::RationalFunction;
pub use series::{SeriesJson, TruncatedSeries};
