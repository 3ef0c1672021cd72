//! Sparse multivariate Laurent polynomials, dense univariate polynomials and
//! rational functions over cyclotomic fields, with exact division,
//! determinants and interpolation.

mod gcd;
mod interp;
mod matrix;
mod multipoly;
mod ratfunc;
mod unipoly;

pub use gcd::bivariate_gcd;
pub use interp::{interpolate_homogeneous, interpolate_tensor};
pub use matrix::{det_fraction_free, PolyMatrix};
pub use multipoly::{Exponents, MultiPoly};
pub use ratfunc::{univariate_pole_order, RationalFunction};
pub use unipoly::UniPoly;

use thiserror::Error;

use crate::exactnum::{CyclotomicNumber, ExactError};

#[derive(Debug, Error, Clone)]
pub enum PolyError {
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("division is not exact; remainder {0}")]
    NotDivisible(Box<MultiPoly>),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    VarCount(usize, usize),
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("order of vanishing is undefined for the zero function")]
    UndefinedOrder,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Field(#[from] ExactError),
}

/// `prod_{i<j} (v_j - v_i)`; equal to 1 for fewer than two entries.
pub fn vandermonde_product(vars: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
    let Some(first) = vars.first() else {
        return Err(PolyError::InvalidInput("empty variable list".into()));
    };
    let mut acc = MultiPoly::one(first.nvars(), first.order());
    for j in 0..vars.len() {
        for i in 0..j {
            acc = acc.checked_mul(&vars[j].checked_sub(&vars[i])?)?;
        }
    }
    Ok(acc)
}

/// The linear factors `v_j - v_i` (i < j) of the Vandermonde product.
pub fn vandermonde_factors(vars: &[MultiPoly]) -> Result<Vec<MultiPoly>, PolyError> {
    let mut out = Vec::new();
    for j in 0..vars.len() {
        for i in 0..j {
            out.push(vars[j].checked_sub(&vars[i])?);
        }
    }
    Ok(out)
}

/// Numeric Vandermonde product of field elements.
pub fn vandermonde_value(vals: &[CyclotomicNumber]) -> CyclotomicNumber {
    let order = vals.first().map_or(1, |v| v.order());
    let mut acc = CyclotomicNumber::one(order);
    for j in 0..vals.len() {
        for i in 0..j {
            acc = &acc * &(&vals[j] - &vals[i]);
        }
    }
    acc
}
