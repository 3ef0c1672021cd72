//! Wheel-condition substitutions and the membership tests for the space of
//! symmetric polynomials singled out by degree bounds and the wheel
//! condition.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{CyclotomicNumber as Cyclo, ExactError, Rational};
use crate::polyring::{MultiPoly, PolyError};

#[derive(Debug, Error, Clone)]
pub enum WheelError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition p^(r-1) t^(k+1) = 1 fails")]
    Precondition,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Variables `z_(i_1), ..., z_(i_(k+1))` (1-based, increasing) tied by
/// `z_(i_(a+1)) = t p^(s_a) z_(i_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelChain {
    pub indices: Vec<usize>,
    pub shifts: Vec<u32>,
    pub r: usize,
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WheelFailure {
    pub chain: WheelChain,
    /// Full evaluation point for randomized checks; absent for symbolic ones.
    pub witness: Option<Vec<Cyclo>>,
    /// Nonzero value at the witness, or the restricted polynomial.
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WheelReport {
    pub total_chains: usize,
    pub failures: Vec<WheelFailure>,
}

impl WheelReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WheelMode {
    /// Restrict symbolically and test for the zero polynomial.
    Symbolic,
    /// Evaluate at seeded random rational points of the free variables.
    Random { trials: usize, seed: u64 },
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn shift_patterns(len: usize, budget: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in 0..=budget {
        for mut rest in shift_patterns(len - 1, budget - s) {
            rest.insert(0, s);
            out.push(rest);
        }
    }
    out
}

/// Every chain of `k + 1` increasing indices in `1..=nvars` with shifts
/// summing to at most `r - 1`. With fewer than `k + 1` variables there are
/// none and the condition holds vacuously.
pub fn wheel_chains(r: usize, k: usize, nvars: usize) -> Result<Vec<WheelChain>, WheelError> {
    if r == 0 || k == 0 {
        return Err(WheelError::InvalidInput(format!("r={r}, k={k}")));
    }
    let patterns = shift_patterns(k, (r - 1) as u32);
    let mut out = Vec::new();
    for idx in combinations(nvars, k + 1) {
        for s in &patterns {
            out.push(WheelChain {
                indices: idx.clone(),
                shifts: s.clone(),
                r,
                k,
            });
        }
    }
    Ok(out)
}

fn ratios(chain: &WheelChain, p: &Cyclo, t: &Cyclo) -> Result<Vec<Cyclo>, WheelError> {
    chain
        .shifts
        .iter()
        .map(|&s| Ok(t.checked_mul(&p.pow(s as i64)?)?))
        .collect()
}

/// Applies the chain substitution, eliminating `z_(i_2), ..., z_(i_(k+1))`.
pub fn restrict(poly: &MultiPoly, chain: &WheelChain, p: &Cyclo, t: &Cyclo) -> Result<MultiPoly, WheelError> {
    let f = ratios(chain, p, t)?;
    let mut out = poly.clone();
    for a in (0..chain.k).rev() {
        out = out.substitute_scaled(chain.indices[a + 1] - 1, chain.indices[a] - 1, &f[a].embed_into(poly.order())?)?;
    }
    Ok(out)
}

/// Seeded random nonzero rationals with numerator and denominator bounded
/// by `10^6` in absolute value.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub const BOUND: i64 = 1_000_000;

    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next(&mut self) -> Rational {
        loop {
            let n: i64 = self.rng.gen_range(-Self::BOUND..=Self::BOUND);
            let d: i64 = self.rng.gen_range(1..=Self::BOUND);
            if n != 0 {
                return Rational::new(BigInt::from(n), BigInt::from(d));
            }
        }
    }
}

fn precondition(r: usize, k: usize, p: &Cyclo, t: &Cyclo) -> Result<bool, WheelError> {
    let v = p.pow(r as i64 - 1)?.checked_mul(&t.pow(k as i64 + 1)?)?;
    Ok(v == Cyclo::one(v.order()))
}

/// Tests the wheel condition on every chain. With `forced` the parameter
/// relation is not required, which is how negative controls are run.
pub fn check_wheel(
    poly: &MultiPoly,
    r: usize,
    k: usize,
    p: &Cyclo,
    t: &Cyclo,
    mode: WheelMode,
    forced: bool,
) -> Result<WheelReport, WheelError> {
    if p.order() != t.order() {
        return Err(WheelError::InvalidInput("p and t must lie in the same field".into()));
    }
    if !forced && !precondition(r, k, p, t)? {
        return Err(WheelError::Precondition);
    }
    let order = poly.order().max(p.order());
    let poly = if poly.order() == order { poly.clone() } else { poly.embed_into(order)? };
    let (p, t) = (p.embed_into(order)?, t.embed_into(order)?);
    let chains = wheel_chains(r, k, poly.nvars())?;
    let mut failures = Vec::new();
    let mut sampler = match mode {
        WheelMode::Random { seed, .. } => Some(RationalSampler::new(seed)),
        WheelMode::Symbolic => None,
    };
    for chain in &chains {
        match mode {
            WheelMode::Symbolic => {
                let res = restrict(&poly, chain, &p, &t)?;
                if !res.is_zero() {
                    failures.push(WheelFailure {
                        chain: chain.clone(),
                        witness: None,
                        value: res.to_string(),
                    });
                }
            }
            WheelMode::Random { trials, .. } => {
                let f = ratios(chain, &p, &t)?;
                let s = sampler.as_mut().expect("random mode");
                for _ in 0..trials {
                    let mut pt: Vec<Cyclo> = (0..poly.nvars()).map(|_| Cyclo::from_rational(order, &s.next())).collect();
                    for a in 0..chain.k {
                        pt[chain.indices[a + 1] - 1] = &f[a] * &pt[chain.indices[a] - 1];
                    }
                    let v = poly.eval(&pt)?;
                    if !v.is_zero() {
                        failures.push(WheelFailure {
                            chain: chain.clone(),
                            witness: Some(pt),
                            value: v.to_string(),
                        });
                        break;
                    }
                }
            }
        }
    }
    Ok(WheelReport {
        total_chains: chains.len(),
        failures,
    })
}

/// Invariance under the permutation `perm` of the variables.
pub fn is_invariant(poly: &MultiPoly, perm: &[usize]) -> bool {
    poly.permute(perm) == *poly
}

fn transposition(nvars: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..nvars).collect();
    p.swap(a, b);
    p
}

/// Symmetry under all permutations of the variables in `block`, tested on
/// adjacent transpositions.
pub fn is_symmetric_in(poly: &MultiPoly, block: &[usize]) -> bool {
    block
        .windows(2)
        .all(|w| is_invariant(poly, &transposition(poly.nvars(), w[0], w[1])))
}

pub fn is_fully_symmetric(poly: &MultiPoly) -> bool {
    let all: Vec<usize> = (0..poly.nvars()).collect();
    is_symmetric_in(poly, &all)
}

/// Per-condition outcome of the membership test in variables
/// `(x_1..x_n, y_1..y_n)`.
#[derive(Clone, Debug, Serialize)]
pub struct VnReport {
    pub homogeneous: bool,
    pub total_degree: bool,
    pub partial_degree: bool,
    pub x_symmetric: bool,
    pub y_symmetric: bool,
    pub swap_xy: bool,
    pub wheel: bool,
}

impl VnReport {
    pub fn all(&self) -> bool {
        self.homogeneous
            && self.total_degree
            && self.partial_degree
            && self.x_symmetric
            && self.y_symmetric
            && self.swap_xy
            && self.wheel
    }
}

/// Homogeneous of degree `l n (n-1)`, degree at most `l (n-1)` in each
/// variable, symmetric in `x` and in `y`, stable under `x <-> y`, and
/// satisfying the `(l, 2)` wheel condition at `p = q^2`, `t = q`.
pub fn check_vn_membership(poly: &MultiPoly, n: usize, ell: usize, q: &Cyclo) -> Result<VnReport, WheelError> {
    if poly.nvars() != 2 * n {
        return Err(WheelError::InvalidInput(format!("expected {} variables", 2 * n)));
    }
    let deg = (ell * n * (n - 1)) as i64;
    let zero = poly.is_zero();
    let homogeneous = zero || poly.homogeneous_degree().is_some();
    let total_degree = zero || poly.is_homogeneous_of_degree(deg);
    let bound = (ell * (n - 1)) as i32;
    let partial_degree = !poly.has_negative_exponents()
        && (0..2 * n).all(|v| poly.degree_in(v).is_none_or(|d| d <= bound));
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let swap: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
    let p = q.pow(2)?;
    let wheel = check_wheel(poly, ell, 2, &p, q, WheelMode::Symbolic, false)?.passed();
    Ok(VnReport {
        homogeneous,
        total_degree,
        partial_degree,
        x_symmetric: is_symmetric_in(poly, &xs),
        y_symmetric: is_symmetric_in(poly, &ys),
        swap_xy: is_invariant(poly, &swap),
        wheel,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub a_member: bool,
    pub b_member: bool,
    /// `A * B(w) - B * A(w) == 0` for a random point `w`.
    pub proportional: bool,
}

/// Operational form of one-dimensionality: two members of the space must
/// be proportional.
pub fn uniqueness_check(
    a: &MultiPoly,
    b: &MultiPoly,
    n: usize,
    ell: usize,
    q: &Cyclo,
    seed: u64,
) -> Result<UniquenessReport, WheelError> {
    let mut s = RationalSampler::new(seed);
    let w: Vec<Cyclo> = (0..a.nvars()).map(|_| Cyclo::from_rational(a.order(), &s.next())).collect();
    let lhs = a.scale(&b.eval(&w)?).checked_sub(&b.scale(&a.eval(&w)?))?;
    Ok(UniquenessReport {
        a_member: check_vn_membership(a, n, ell, q)?.all(),
        b_member: check_vn_membership(b, n, ell, q)?.all(),
        proportional: lhs.is_zero(),
    })
}
