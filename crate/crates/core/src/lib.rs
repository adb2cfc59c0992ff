//! Exact generating functions for plane partitions.
//!
//! The series `sum_pi q^{volume(pi)} = prod_{n>=1} (1 - q^n)^(-n)` is computed
//! three independent ways:
//!
//! * a brute-force census of plane partitions ([`plane::count_plane_partitions`]),
//! * interlacing transfer operators acting on the span of Young diagrams
//!   ([`fock::transfer_partition_function`]),
//! * the closed-form product ([`qseries::macmahon_product`]).
//!
//! Alongside sit the pieces that connect them: diagonal slicing of plane
//! partitions into interlacing chains, an exact check of the commutation
//! relation between the raising and lowering operators, and matrix elements
//! of products of raising operators compared against semistandard tableaux.
//!
//! ```
//! use macmahon::{fock, qseries};
//!
//! let by_operators = fock::transfer_partition_function(6, None, fock::Prune::Plain);
//! assert_eq!(by_operators, qseries::macmahon_product(6));
//! assert_eq!(by_operators.to_decimal_strings(), ["1", "1", "3", "6", "13", "24"]);
//! ```

pub mod cli;
pub mod commutation;
pub mod error;
pub mod fock;
pub mod partition;
pub mod plane;
pub mod qseries;
pub mod rational;
pub mod tableaux;

pub use commutation::{commutation_check_exact, CommutationReport};
pub use error::{Error, Result};
pub use fock::{gamma_chain_matrix_element, transfer_partition_function, FockState, Prune};
pub use partition::{enumerate_partitions, interlaces, Partition};
pub use plane::{count_plane_partitions, enumerate_plane_partitions, PlanePartition, SliceSequence};
pub use qseries::{finite_grid_product, macmahon_product, QSeries};
pub use rational::Rational;
pub use tableaux::count_skew_ssyt_weighted;
