use serde::Serialize;

use super::fusion::fused_r;
use super::lattice::partition_function;
use super::VertexError;
use crate::exactnum::{CyclotomicNumber as Cyclo, Rational};
use crate::polyring::{interpolate_homogeneous, MultiPoly, PolyError};
use crate::ring::{det_bareiss, det_gauss, Ring};

/// Replaces each `v` by `v, q^2 v, ..., q^(2l-2) v`.
pub fn extend_spectral<R: Ring>(vars: &[R], ell: usize, q: &R) -> Vec<R> {
    let q2 = q.mul_ref(q);
    vars.iter()
        .flat_map(|v| {
            let mut cur = v.clone();
            let q2 = q2.clone();
            (0..ell).map(move |_| {
                let out = cur.clone();
                cur = cur.mul_ref(&q2);
                out
            })
        })
        .collect()
}

/// `q^e` for every integer `e`, lifted into the ring of the caller.
struct QPowers<R> {
    lo: i64,
    vals: Vec<R>,
}

impl<R: Ring> QPowers<R> {
    fn new(q: &Cyclo, lo: i64, hi: i64, lift: impl Fn(Cyclo) -> R) -> Result<Self, VertexError> {
        let vals = (lo..=hi).map(|e| Ok(lift(q.pow(e)?))).collect::<Result<_, VertexError>>()?;
        Ok(QPowers { lo, vals })
    }

    fn get(&self, e: i64) -> &R {
        &self.vals[(e - self.lo) as usize]
    }
}

/// The block matrix with its rows cleared of denominators. Row `(i, k)`
/// belongs to `q^(2k) x_i`, column `(j, p)` to `q^(2p) y_j`; the entry is
/// the product of `q^(2k) x_i - q^(2p'-1) y_j'` over all `j'` and
/// `p' = 0..=l`, leaving out `(j, p)` and `(j, p + 1)`. The product of the
/// row multipliers is exactly the numerator prefactor of the normalised
/// partition function.
fn cleared_matrix<R: Ring>(ell: usize, xs: &[R], ys: &[R], qp: &QPowers<R>) -> Vec<Vec<R>> {
    let n = xs.len();
    let mut rows = Vec::with_capacity(ell * n);
    for x in xs {
        for k in 0..ell {
            let xk = qp.get(2 * k as i64).mul_ref(x);
            let f: Vec<Vec<R>> = ys
                .iter()
                .map(|y| {
                    (0..=ell)
                        .map(|pp| xk.sub_ref(&qp.get(2 * pp as i64 - 1).mul_ref(y)))
                        .collect()
                })
                .collect();
            let mut row = Vec::with_capacity(ell * n);
            for j in 0..n {
                for p in 0..ell {
                    let mut acc = x.one_like();
                    for (jj, fj) in f.iter().enumerate() {
                        for (pp, v) in fj.iter().enumerate() {
                            if jj == j && (pp == p || pp == p + 1) {
                                continue;
                            }
                            acc = acc.mul_ref(v);
                        }
                    }
                    row.push(acc);
                }
            }
            rows.push(row);
        }
    }
    rows
}

fn vandermonde_factor_list<R: Ring>(vals: &[R]) -> Vec<R> {
    let mut out = Vec::new();
    for b in 0..vals.len() {
        for a in 0..b {
            out.push(vals[b].sub_ref(&vals[a]));
        }
    }
    out
}

fn check_sizes(n: usize, ell: usize) -> Result<(), VertexError> {
    if n == 0 || ell == 0 {
        return Err(VertexError::InvalidInput("n and l must be positive".into()));
    }
    Ok(())
}

/// The normalised partition function at a point, from the determinant.
pub fn fused_determinant_at(n: usize, ell: usize, q: &Cyclo, x: &[Cyclo], y: &[Cyclo]) -> Result<Cyclo, VertexError> {
    check_sizes(n, ell)?;
    if x.len() != n || y.len() != n {
        return Err(VertexError::InvalidInput(format!("expected {n} values per family")));
    }
    let order = q.order();
    let emb = |v: &[Cyclo]| v.iter().map(|c| c.embed_into(order)).collect::<Result<Vec<_>, _>>();
    let (x, y) = (emb(x)?, emb(y)?);
    let qp = QPowers::new(q, -1, 2 * ell as i64, |c| c)?;
    let m = cleared_matrix(ell, &x, &y, &qp);
    let det = det_gauss(m).expect("square matrix");
    let qc = q.clone();
    let mut den = Cyclo::one(order);
    for v in [extend_spectral(&x, ell, &qc), extend_spectral(&y, ell, &qc)] {
        for f in vandermonde_factor_list(&v) {
            den = &den * &f;
        }
    }
    if den.is_zero() {
        return Err(VertexError::InvalidInput(
            "extended spectral parameters coincide; the determinant formula is 0/0".into(),
        ));
    }
    Ok(&det * &den.invert()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DetMethod {
    /// Fraction-free elimination on the cleared matrix, then exact division
    /// by both Vandermonde products.
    Elimination,
    /// Evaluation at a tensor grid and interpolation, using homogeneity of
    /// degree `l n (n-1)` and partial degree at most `l (n-1)`.
    Interpolation,
}

/// Largest `l n` handled by elimination when the method is chosen
/// automatically.
pub const ELIMINATION_LIMIT: usize = 4;

/// Symbolic normalised partition function in the variables
/// `(x_1..x_n, y_1..y_n)` over `Q(zeta)` for the order of `q`.
pub fn fused_determinant(n: usize, ell: usize, q: &Cyclo) -> Result<MultiPoly, VertexError> {
    let method = if ell * n <= ELIMINATION_LIMIT {
        DetMethod::Elimination
    } else {
        DetMethod::Interpolation
    };
    fused_determinant_with(n, ell, q, method)
}

pub fn fused_determinant_with(n: usize, ell: usize, q: &Cyclo, method: DetMethod) -> Result<MultiPoly, VertexError> {
    check_sizes(n, ell)?;
    let order = q.order();
    let nv = 2 * n;
    match method {
        DetMethod::Elimination => {
            let xs: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(nv, order, i)).collect();
            let ys: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(nv, order, n + i)).collect();
            let qp = QPowers::new(q, -1, 2 * ell as i64, |c| MultiPoly::constant(nv, c))?;
            let det = det_bareiss(cleared_matrix(ell, &xs, &ys, &qp)).expect("square matrix");
            let qm = MultiPoly::constant(nv, q.clone());
            let mut factors = vandermonde_factor_list(&extend_spectral(&xs, ell, &qm));
            factors.extend(vandermonde_factor_list(&extend_spectral(&ys, ell, &qm)));
            det.div_exact_product(&factors).map_err(|e| match e {
                PolyError::NotDivisible(_) => {
                    VertexError::Polynomiality(format!("determinant for ({n},{ell}) is not divisible by the Vandermonde products"))
                }
                other => other.into(),
            })
        }
        DetMethod::Interpolation => {
            let bound = ell * (n - 1);
            let nodes: Vec<Vec<Rational>> = (0..nv - 1)
                .map(|v| {
                    (0..=bound)
                        .map(|t| Rational::from_integer((2 + v * (bound + 1) + t).into()))
                        .collect()
                })
                .collect();
            let degree = (ell * n * (n - 1)) as i64;
            let poly = interpolate_homogeneous(order, degree, &nodes, |pt| {
                fused_determinant_at(n, ell, q, &pt[..n], &pt[n..]).map_err(|e| PolyError::Eval(e.to_string()))
            })?;
            Ok(poly)
        }
    }
}

/// `[l]! = prod_{a=1..l} (q^a - q^-a)/(q - q^-1)`.
pub fn q_factorial(ell: usize, q: &Cyclo) -> Result<Cyclo, VertexError> {
    let one = Cyclo::one(q.order());
    let base = q - &q.invert()?;
    let base_inv = base.invert()?;
    let mut acc = one;
    for a in 1..=ell as i64 {
        let qa = q.pow(a)?;
        let num = &qa - &qa.invert()?;
        acc = &(&acc * &num) * &base_inv;
    }
    Ok(acc)
}

/// The two candidate exponents of `q` in the proportionality constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GammaVariant {
    /// `q^(2(n-1) l (l-1))`
    LinearInN,
    /// `q^(n(n-1) l (l-1))`
    QuadraticInN,
}

impl GammaVariant {
    pub fn q_exponent(self, n: usize, ell: usize) -> i64 {
        let base = (ell * ell.saturating_sub(1)) as i64;
        match self {
            GammaVariant::LinearInN => 2 * (n as i64 - 1) * base,
            GammaVariant::QuadraticInN => (n * (n - 1)) as i64 * base,
        }
    }
}

/// `(-1)^(n C(l,2)) q^e ([l]!)^n` with `e` from the chosen variant.
pub fn gamma_const(n: usize, ell: usize, q: &Cyclo, variant: GammaVariant) -> Result<Cyclo, VertexError> {
    let sign = if (n * ell * ell.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
    let f = q_factorial(ell, q)?.pow(n as i64)?;
    Ok(&(&f * &q.pow(variant.q_exponent(n, ell))?) * &Cyclo::from_int(q.order(), sign))
}

/// Exponent vector of the staircase monomial `z^Y` in `(x_1..x_n, y_1..y_n)`.
pub fn staircase_exponents(n: usize, ell: usize) -> Vec<i32> {
    let mut e = vec![0; 2 * n];
    for k in 0..n {
        let v = (ell * (n - 1 - k)) as i32;
        e[2 * k] = v;
        e[2 * k + 1] = v;
    }
    e
}

/// Coefficient of one monomial.
pub fn coefficient_extract(p: &MultiPoly, exps: &[i32]) -> Cyclo {
    p.coefficient(exps)
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaResolution {
    pub n: usize,
    pub ell: usize,
    pub coefficient: Cyclo,
    pub linear: Cyclo,
    pub quadratic: Cyclo,
    pub linear_matches: bool,
    pub quadratic_matches: bool,
    /// The unique matching variant, if exactly one matches.
    pub matching: Option<GammaVariant>,
}

/// Compares the staircase coefficient of `z` (the normalised partition
/// function, whose Macdonald expansion has leading coefficient 1) with both
/// candidate constants.
pub fn resolve_gamma(n: usize, ell: usize, z: &MultiPoly, q: &Cyclo) -> Result<GammaResolution, VertexError> {
    let coefficient = coefficient_extract(z, &staircase_exponents(n, ell));
    let linear = gamma_const(n, ell, q, GammaVariant::LinearInN)?;
    let quadratic = gamma_const(n, ell, q, GammaVariant::QuadraticInN)?;
    let (lm, qm) = (coefficient == linear, coefficient == quadratic);
    let matching = match (lm, qm) {
        (true, false) => Some(GammaVariant::LinearInN),
        (false, true) => Some(GammaVariant::QuadraticInN),
        _ => None,
    };
    Ok(GammaResolution {
        n,
        ell,
        coefficient,
        linear,
        quadratic,
        linear_matches: lm,
        quadratic_matches: qm,
        matching,
    })
}

#[derive(Clone, Debug)]
pub struct RecursionReport {
    pub holds: bool,
    /// Left side minus right side; zero when the identity holds.
    pub difference: MultiPoly,
}

/// Checks `Z_n(x, y)|_{x_1 = y_1 = 0} = (-1)^C(l,2) q^(2(n-1)l(l-1)) [l]!
/// prod_{i>=2} (x_i y_i)^l Z_{n-1}(x_2.., y_2..)`.
pub fn recursion_check(n: usize, ell: usize, q: &Cyclo) -> Result<RecursionReport, VertexError> {
    if n < 2 {
        return Err(VertexError::InvalidInput("the recursion needs n >= 2".into()));
    }
    let order = q.order();
    let zn = fused_determinant(n, ell, q)?;
    let zero = Cyclo::zero(order);
    let lhs = zn.substitute(0, &zero)?.substitute(n, &zero)?;
    let zm = fused_determinant(n - 1, ell, q)?;
    let positions: Vec<usize> = (0..n - 1).map(|i| i + 1).chain((0..n - 1).map(|j| n + 1 + j)).collect();
    let lifted = zm.lift(2 * n, &positions);
    let mut exps = vec![ell as i32; 2 * n];
    exps[0] = 0;
    exps[n] = 0;
    let sign = if (ell * ell.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
    let c = &(&q.pow(GammaVariant::LinearInN.q_exponent(n, ell))? * &q_factorial(ell, q)?) * &Cyclo::from_int(order, sign);
    let rhs = lifted.shift(&exps).scale(&c);
    let difference = lhs.checked_sub(&rhs)?;
    Ok(RecursionReport {
        holds: difference.is_zero(),
        difference,
    })
}

/// The enumerated partition function, normalised to compare with the
/// determinant. Rows carry `x_i = X_i^2`; columns carry square roots
/// `Y_j = q S_j`, so that the determinant sees `y_j = q S_j^2`.
/// The normalisation divides by `prod_i (X_i Y_i)^l` and by
/// `prod_{i,j} prod_{k<l} prod_{p<l-1} (q^(2k) x_i - q^(2p+1) y_j)`.
pub fn normalised_enumeration(
    n: usize,
    ell: usize,
    q: &Cyclo,
    x_roots: &[Rational],
    s: &[Rational],
    max_states: usize,
) -> Result<(Cyclo, Vec<Cyclo>, Vec<Cyclo>), VertexError> {
    check_sizes(n, ell)?;
    if x_roots.len() != n || s.len() != n {
        return Err(VertexError::InvalidInput(format!("expected {n} values per family")));
    }
    let order = q.order();
    let qinv = q.invert()?;
    let xr: Vec<Cyclo> = x_roots.iter().map(|r| Cyclo::from_rational(order, r)).collect();
    let yr: Vec<Cyclo> = s.iter().map(|r| q * &Cyclo::from_rational(order, r)).collect();
    let tensors = xr
        .iter()
        .map(|x| yr.iter().map(|y| fused_r(ell, x, y, q, &qinv)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let z = partition_function(&tensors, max_states)?;
    let xs: Vec<Cyclo> = xr.iter().map(|v| v * v).collect();
    let yd: Vec<Cyclo> = s
        .iter()
        .map(|r| q * &Cyclo::from_rational(order, &(r * r)))
        .collect();
    let mut den = Cyclo::one(order);
    for i in 0..n {
        den = &den * &(&xr[i] * &yr[i]).pow(ell as i64)?;
        for y in &yd {
            for k in 0..ell as i64 {
                for p in 0..ell as i64 - 1 {
                    den = &den * &(&(&q.pow(2 * k)? * &xs[i]) - &(&q.pow(2 * p + 1)? * y));
                }
            }
        }
    }
    if den.is_zero() {
        return Err(VertexError::InvalidInput("normalising factor vanishes at this point".into()));
    }
    Ok((&z * &den.invert()?, xs, yd))
}

/// Determinant divided by normalised enumeration at one point.
pub fn enumeration_determinant_ratio(
    n: usize,
    ell: usize,
    q: &Cyclo,
    x_roots: &[Rational],
    s: &[Rational],
    max_states: usize,
) -> Result<Cyclo, VertexError> {
    let (norm, xs, yd) = normalised_enumeration(n, ell, q, x_roots, s, max_states)?;
    let det = fused_determinant_at(n, ell, q, &xs, &yd)?;
    if norm.is_zero() {
        return Err(VertexError::InvalidInput("enumeration vanishes at this point".into()));
    }
    Ok(&det * &norm.invert()?)
}
