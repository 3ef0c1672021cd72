//! Symmetric polynomials: monomial and power-sum bases, the two-parameter
//! scalar product, Macdonald polynomials by Gram-Schmidt, Schur polynomials,
//! and the renormalised Macdonald polynomial at the combinatorial point.

mod branch;
mod macdonald;
mod operator;
mod series;

pub use branch::{
    branch_params, macdonald_at_combinatorial_point, macdonald_at_combinatorial_point_via, BranchParametrization,
    CombinatorialPoint, Route,
};
pub use macdonald::{gram_matrix_pt, macdonald, macdonald_with_params, pt_inner_product, pt_pairing, Params};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{CyclotomicNumber as Cyclo, ExactError, Rational};
use crate::partitions::{partitions_of, Partition, PartitionError};
use crate::polyring::{vandermonde_factors, MultiPoly, PolyError};

#[derive(Debug, Error, Clone)]
pub enum SymError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the monomial and power-sum bases are dependent with {nvars} variables in degree {degree}")]
    Rank { degree: usize, nvars: usize },
    #[error("singular system: {0}")]
    Singular(String),
    #[error("degenerate diagram: every renormalised coefficient vanishes")]
    Degenerate,
    #[error("branch parametrisation check failed: {0}")]
    Branch(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A symmetric polynomial in `nvars` variables written in the monomial basis.
/// Keys are partitions of `degree` padded with zeros to `nvars` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunExpansion<C> {
    pub nvars: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<Partition, C>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr<C> {
    partition: Partition,
    value: C,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr<C> {
    degree: usize,
    nvars: usize,
    coeffs: Vec<EntryRepr<C>>,
}

impl<C: Serialize + Clone> Serialize for SymFunExpansion<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExpansionRepr {
            degree: self.degree,
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .rev()
                .map(|(p, v)| EntryRepr {
                    partition: p.clone(),
                    value: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Deserialize<'de>> Deserialize<'de> for SymFunExpansion<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = ExpansionRepr::<C>::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for e in r.coeffs {
            if e.partition.size() != r.degree {
                return Err(D::Error::custom(format!("{} is not a partition of {}", e.partition, r.degree)));
            }
            let key = e.partition.padded(r.nvars).map_err(D::Error::custom)?;
            if coeffs.insert(key, e.value).is_some() {
                return Err(D::Error::custom("repeated partition"));
            }
        }
        Ok(SymFunExpansion {
            nvars: r.nvars,
            degree: r.degree,
            coeffs,
        })
    }
}

impl SymFunExpansion<Cyclo> {
    /// Expands `sum c_mu m_mu` into a polynomial.
    pub fn to_multipoly(&self, order: u32) -> Result<MultiPoly, SymError> {
        let mut acc = MultiPoly::zero(self.nvars, order);
        for (mu, c) in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let m = monomial_sym(mu, self.nvars, order)?;
            acc = acc.checked_add(&m.scale(&c.embed_into(order)?))?;
        }
        Ok(acc)
    }

    /// Reads a symmetric polynomial in the monomial basis, checking that it
    /// is homogeneous and symmetric.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self, SymError> {
        let n = p.nvars();
        let degree = match p.homogeneous_degree() {
            Some(d) if d >= 0 && !p.has_negative_exponents() => d as usize,
            _ => return Err(SymError::NotSymmetric),
        };
        let mut coeffs = BTreeMap::new();
        for (e, c) in p.terms() {
            if e.0.windows(2).all(|w| w[0] >= w[1]) {
                let part = Partition::new(e.0.iter().map(|&x| x as usize).collect())?;
                coeffs.insert(part, c.clone());
            }
        }
        let out = SymFunExpansion {
            nvars: n,
            degree,
            coeffs,
        };
        if &out.to_multipoly(p.order())? != p {
            return Err(SymError::NotSymmetric);
        }
        Ok(out)
    }
}

/// All distinct rearrangements of `v`, in lexicographic order.
pub(crate) fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// `m_lambda` in `nvars` variables: each distinct rearrangement of the
/// exponents appears once with coefficient 1.
pub fn monomial_sym(lambda: &Partition, nvars: usize, order: u32) -> Result<MultiPoly, SymError> {
    let padded = lambda
        .padded(nvars)
        .map_err(|_| SymError::InvalidInput(format!("{lambda} has more than {nvars} nonzero parts")))?;
    Ok(MultiPoly::from_terms(
        nvars,
        order,
        distinct_permutations(padded.parts())
            .into_iter()
            .map(|e| (e.into_iter().map(|x| x as i32).collect(), Cyclo::one(order))),
    ))
}

/// `p_lambda = prod_i (sum_j x_j^lambda_i)`.
pub fn power_sum(lambda: &Partition, nvars: usize, order: u32) -> MultiPoly {
    let mut acc = MultiPoly::one(nvars, order);
    for &k in lambda.parts().iter().filter(|&&k| k > 0) {
        let pk = MultiPoly::from_terms(
            nvars,
            order,
            (0..nvars).map(|j| {
                let mut e = vec![0; nvars];
                e[j] = k as i32;
                (e, Cyclo::one(order))
            }),
        );
        acc = acc.checked_mul(&pk).expect("same ring");
    }
    acc
}

/// Number of ways to distribute the parts of `rho` into the rows of `mu`
/// so that row `j` receives total `mu_j`; this is the coefficient of `m_mu`
/// in `p_rho`.
fn power_to_monomial_coeff(rho: &[usize], mu: &[usize]) -> u64 {
    fn rec(i: usize, rho: &[usize], rem: &mut [usize]) -> u64 {
        if i == rho.len() {
            return u64::from(rem.iter().all(|&r| r == 0));
        }
        let mut total = 0;
        for j in 0..rem.len() {
            if rem[j] >= rho[i] {
                rem[j] -= rho[i];
                total += rec(i + 1, rho, rem);
                rem[j] += rho[i];
            }
        }
        total
    }
    let mut rem = mu.to_vec();
    rec(0, rho, &mut rem)
}

/// Transition matrices between monomial and power-sum bases of degree `d`.
#[derive(Clone, Debug)]
pub struct BasisChange {
    /// Partitions of `d` (no padding), in increasing lexicographic order.
    pub partitions: Vec<Partition>,
    /// `p_in_m[r][m]`: coefficient of `m_(partitions[m])` in `p_(partitions[r])`.
    pub p_in_m: Vec<Vec<Rational>>,
    /// `m_in_p[m][r]`: coefficient of `p_(partitions[r])` in `m_(partitions[m])`.
    pub m_in_p: Vec<Vec<Rational>>,
}

/// Both transition matrices in degree `d`. The bases are independent only
/// when `nvars >= d`; otherwise a rank error is returned.
pub fn basis_change_monomial_powersum(d: usize, nvars: usize) -> Result<BasisChange, SymError> {
    if nvars < d {
        return Err(SymError::Rank { degree: d, nvars });
    }
    Ok(stable_basis_change(d))
}

pub(crate) fn stable_basis_change(d: usize) -> BasisChange {
    let parts = partitions_of(d, d.max(1));
    let n = parts.len();
    let p_in_m: Vec<Vec<Rational>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| {
                    Rational::from_integer(BigInt::from(power_to_monomial_coeff(rho.parts(), mu.parts())))
                })
                .collect()
        })
        .collect();
    // p_in_m is upper triangular in lexicographic order: invert by back
    // substitution.
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for col in 0..n {
        for row in (0..=col).rev() {
            let mut s = if row == col { Rational::one() } else { Rational::zero() };
            for k in row + 1..=col {
                if !p_in_m[row][k].is_zero() {
                    s -= &p_in_m[row][k] * &inv[k][col];
                }
            }
            inv[row][col] = s / &p_in_m[row][row];
        }
    }
    BasisChange {
        partitions: parts,
        p_in_m,
        m_in_p: inv,
    }
}

/// Schur polynomial by the bialternant formula: the alternant
/// `det(x_i^(lambda_j + N - j))` divided exactly by the Vandermonde product.
pub fn schur(lambda: &Partition, nvars: usize, order: u32) -> Result<MultiPoly, SymError> {
    let lam = lambda
        .padded(nvars)
        .map_err(|_| SymError::InvalidInput(format!("{lambda} has more than {nvars} nonzero parts")))?;
    let n = nvars;
    let shifted: Vec<i32> = (0..n).map(|j| (lam.parts()[j] + n - 1 - j) as i32).collect();
    let mut terms = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm tracks the sign through single swaps
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let mut push = |perm: &[usize], sign: i64| {
        let mut e = vec![0; n];
        for (j, &i) in perm.iter().enumerate() {
            e[i] = shifted[j];
        }
        terms.push((e, Cyclo::from_int(order, sign)));
    };
    push(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            push(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let alt = MultiPoly::from_terms(n, order, terms);
    let vars: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, order, i)).collect();
    // det(x_i^(N-j)) = prod_{i<j} (x_i - x_j)
    let factors: Vec<MultiPoly> = vandermonde_factors(&vars)?.iter().map(|f| -f).collect();
    Ok(alt.div_exact_product(&factors)?)
}

/// `s_lambda(1, ..., 1)` with `n` ones, from the limit of the bialternant:
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn schur_at_ones(lambda: &Partition, n: usize) -> Result<Rational, SymError> {
    let lam = lambda.padded(n)?;
    let l = lam.parts();
    let mut acc = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = l[i] as i64 - l[j] as i64 + (j - i) as i64;
            acc *= Rational::new(BigInt::from(num), BigInt::from((j - i) as i64));
        }
    }
    Ok(acc)
}
