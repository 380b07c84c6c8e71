//! Brute-force ground truth for the closed forms: automorphism counts,
//! subspace and sublattice counts, and partition enumeration.

pub mod abelian;
pub mod cayley;
pub mod covers;
pub mod linear;
pub mod partitions;

pub use abelian::{oracle_aut_order_abelian, oracle_aut_order_abelian_direct};
pub use cayley::{aut_count_with_generators, find_isomorphism, oracle_cayley_aut_count, CayleyGroup};
pub use covers::{check_cover, covering_registry, Cover, CoverCheck, CoveringCase};
pub use linear::{oracle_hnf_sublattice_count, oracle_invertible_matrix_count, oracle_subspace_count};
pub use partitions::{oracle_partition_counts, oracle_partitions};
