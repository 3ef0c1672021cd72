//! Exact computer algebra for the higher-spin six-vertex model with
//! domain-wall boundary conditions.
//!
//! The crate builds the partition function both by enumerating lattice
//! configurations and from the fused block determinant, and compares it at
//! `q^(2l+1) = 1` with the Macdonald polynomial of the staircase diagram.
//! Every computation is exact: coefficients live in cyclotomic fields.

pub mod exactnum;
pub mod partitions;
pub mod polyring;
pub mod ring;
pub mod symfun;
pub mod vertex;
pub mod wheelcheck;

pub use exactnum::{CyclotomicNumber, ExactError, Rational};
pub use partitions::Partition;
pub use polyring::{MultiPoly, PolyError, PolyMatrix, RationalFunction, UniPoly};
