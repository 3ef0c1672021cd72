//! The six-vertex model with domain-wall boundary and its fused higher-spin
//! version: weights, fusion, enumeration, the determinant formula for the
//! normalised partition function, and higher-spin alternating sign matrices.

mod determinant;
mod fusion;
mod lattice;

pub use determinant::{
    coefficient_extract, enumeration_determinant_ratio, extend_spectral, fused_determinant, fused_determinant_at,
    fused_determinant_with, gamma_const, normalised_enumeration, q_factorial, recursion_check, resolve_gamma,
    staircase_exponents, DetMethod, GammaResolution, GammaVariant, RecursionReport, ELIMINATION_LIMIT,
};
pub use fusion::{
    annihilation_rmatrix, apply_two_site, fused_apply, fused_r, mat_mul, on_three_sites, r_matrix,
    scalar_multiple_of_identity, symmetric_state, weight_abc, yang_baxter_sides, WeightTensor, Weights,
};
pub use lattice::{
    config_to_hsasm, enumerate_configs, enumerate_hsasm, hsasm_to_config, partition_function, row_transfer_matrix,
    verify_bijection, BijectionReport, GridConfig, HigherSpinAsm,
};

use thiserror::Error;

use crate::exactnum::ExactError;
use crate::polyring::PolyError;

#[derive(Debug, Error, Clone)]
pub enum VertexError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("fused R-matrix left the symmetric subspace: {0}")]
    FusionInvariance(String),
    #[error("polynomiality violated: {0}")]
    Polynomiality(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
