use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{stable_basis_change, BasisChange, SymError, SymFunExpansion};
use crate::exactnum::{cyclotomic_polynomial, CyclotomicNumber as Cyclo};
use crate::partitions::{dominance_lt, Partition};
use crate::polyring::{MultiPoly, RationalFunction};
use crate::ring::solve_linear;

/// The images of `p` and `t` in some Laurent polynomial ring. The symbolic
/// case uses two independent variables; the branch at the combinatorial
/// point uses monomials in a single variable `u`.
#[derive(Clone, Debug)]
pub struct Params {
    pub p: MultiPoly,
    pub t: MultiPoly,
}

impl Params {
    /// `p = var 0`, `t = var 1` over the rationals.
    pub fn symbolic() -> Self {
        Params {
            p: MultiPoly::var(2, 1, 0),
            t: MultiPoly::var(2, 1, 1),
        }
    }

    pub(crate) fn nvars(&self) -> usize {
        self.p.nvars()
    }

    fn order(&self) -> u32 {
        self.p.order()
    }
}

fn eval_int_poly(coeffs: &[BigInt], x: &MultiPoly) -> MultiPoly {
    let order = x.order();
    let mut acc = MultiPoly::zero(x.nvars(), order);
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + &MultiPoly::constant(x.nvars(), Cyclo::from_rational(order, &c.clone().into()));
    }
    acc
}

/// Power-sum weights multiplied by a common denominator `D`.
///
/// With `1 - t^k = -prod_{e | k} Phi_e(t)`, the choice
/// `D = prod_e Phi_e(t)^floor(d/e)` is divisible by every
/// `prod_i (1 - t^rho_i)`, so `w_rho * D` is a Laurent polynomial.
fn scaled_weights(bc: &BasisChange, d: usize, params: &Params) -> (Vec<MultiPoly>, MultiPoly) {
    let (nv, order) = (params.nvars(), params.order());
    let one = MultiPoly::one(nv, order);
    let phi: Vec<MultiPoly> = (0..=d)
        .map(|e| if e == 0 { one.clone() } else { eval_int_poly(&cyclotomic_polynomial(e as u32), &params.t) })
        .collect();
    let mut den = one.clone();
    for e in 1..=d {
        den = &den * &phi[e].pow((d / e) as u32);
    }
    let weights = bc
        .partitions
        .iter()
        .map(|rho| {
            let mut w = MultiPoly::constant(nv, Cyclo::from_rational(order, &rho.z_lambda().into()));
            for &k in rho.parts() {
                w = &w * &(&one - &params.p.pow(k as u32));
            }
            for e in 1..=d {
                let used = rho.parts().iter().filter(|&&k| k % e == 0).count();
                w = &w * &phi[e].pow((d / e - used) as u32);
            }
            if rho.length() % 2 == 1 {
                w = -&w;
            }
            w
        })
        .collect();
    (weights, den)
}

/// Gram matrix of the monomial basis restricted to the rows in `idx`,
/// scaled by the common denominator.
fn scaled_gram(bc: &BasisChange, weights: &[MultiPoly], idx: &[usize]) -> Vec<Vec<MultiPoly>> {
    let zero = weights[0].zero_like_poly();
    let mut g = vec![vec![zero; idx.len()]; idx.len()];
    for a in 0..idx.len() {
        for b in a..idx.len() {
            let mut acc = weights[0].zero_like_poly();
            for (r, w) in weights.iter().enumerate() {
                let c = &bc.m_in_p[idx[a]][r] * &bc.m_in_p[idx[b]][r];
                if !c.is_zero() {
                    acc = &acc + &w.scale(&Cyclo::from_rational(w.order(), &c));
                }
            }
            g[b][a] = acc.clone();
            g[a][b] = acc;
        }
    }
    g
}

trait ZeroLike {
    fn zero_like_poly(&self) -> MultiPoly;
}

impl ZeroLike for MultiPoly {
    fn zero_like_poly(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars(), self.order())
    }
}

/// Macdonald polynomial `P_lambda` in `nvars` variables with `p`, `t`
/// specialised to `params`. The Gram-Schmidt step runs in the stable
/// monomial basis of degree `|lambda|`; monomials with more than `nvars`
/// parts are dropped at the end.
pub fn macdonald_with_params(
    lambda: &Partition,
    nvars: usize,
    params: &Params,
) -> Result<SymFunExpansion<RationalFunction>, SymError> {
    if lambda.length() > nvars {
        return Err(SymError::InvalidInput(format!("{lambda} does not fit in {nvars} variables")));
    }
    let d = lambda.size();
    let lam = lambda.trimmed();
    let bc = stable_basis_change(d);
    let li = bc.partitions.iter().position(|p| *p == lam).expect("partition of d");
    let below: Vec<usize> = (0..bc.partitions.len())
        .filter(|&i| dominance_lt(&bc.partitions[i], &lam))
        .collect();
    let pnv = params.nvars();
    let order = params.order();
    let to_rf = |m: &MultiPoly| RationalFunction::from_poly(m.clone());

    let mut coeffs = BTreeMap::new();
    coeffs.insert(lambda.padded(nvars)?, RationalFunction::constant(pnv, Cyclo::one(order)));
    if !below.is_empty() {
        let (weights, _) = scaled_weights(&bc, d, params);
        let mut idx = below.clone();
        idx.push(li);
        let g = scaled_gram(&bc, &weights, &idx);
        let k = below.len();
        let a: Vec<Vec<RationalFunction>> = (0..k).map(|nu| (0..k).map(|mu| to_rf(&g[mu][nu])).collect()).collect();
        let b: Vec<RationalFunction> = (0..k).map(|nu| to_rf(&-&g[k][nu])).collect();
        let sol = solve_linear(a, b).ok_or_else(|| {
            SymError::Singular(format!("Gram system for {lam} is singular at this specialisation"))
        })?;
        for (i, c) in below.iter().zip(sol) {
            let mu = &bc.partitions[*i];
            if mu.length() <= nvars && !c.is_zero() {
                coeffs.insert(mu.padded(nvars)?, c);
            }
        }
    }
    Ok(SymFunExpansion {
        nvars,
        degree: d,
        coeffs,
    })
}

/// `P_lambda(x; p, t)` with coefficients in `Q(p, t)` (variable 0 is `p`,
/// variable 1 is `t`).
pub fn macdonald(lambda: &Partition, nvars: usize) -> Result<SymFunExpansion<RationalFunction>, SymError> {
    macdonald_with_params(lambda, nvars, &Params::symbolic())
}

/// `<p_lambda, p_mu> = delta z_lambda prod_i (1 - p^lambda_i)/(1 - t^lambda_i)`.
pub fn pt_inner_product(lambda: &Partition, mu: &Partition) -> RationalFunction {
    if lambda.trimmed() != mu.trimmed() {
        return RationalFunction::zero(2, 1);
    }
    let (p, t) = (MultiPoly::var(2, 1, 0), MultiPoly::var(2, 1, 1));
    let one = MultiPoly::one(2, 1);
    let mut num = MultiPoly::constant(2, Cyclo::from_rational(1, &lambda.z_lambda().into()));
    let mut den = one.clone();
    for &k in lambda.parts().iter().filter(|&&k| k > 0) {
        num = &num * &(&one - &p.pow(k as u32));
        den = &den * &(&one - &t.pow(k as u32));
    }
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Gram matrix `<m_mu, m_nu>` in the stable monomial basis of degree `d`,
/// indexed by `partitions_of(d, d)`.
pub fn gram_matrix_pt(d: usize) -> (Vec<Partition>, Vec<Vec<RationalFunction>>) {
    let bc = stable_basis_change(d);
    let params = Params::symbolic();
    let (weights, den) = scaled_weights(&bc, d, &params);
    let idx: Vec<usize> = (0..bc.partitions.len()).collect();
    let g = scaled_gram(&bc, &weights, &idx)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| RationalFunction::new(e, den.clone()).expect("nonzero denominator"))
                .collect()
        })
        .collect();
    (bc.partitions, g)
}

/// `<f, g>_{p,t}` for two expansions of the same degree. The pairing is only
/// meaningful when no monomial has been truncated, so `nvars >= degree` is
/// required.
pub fn pt_pairing(
    f: &SymFunExpansion<RationalFunction>,
    g: &SymFunExpansion<RationalFunction>,
) -> Result<RationalFunction, SymError> {
    if f.degree != g.degree {
        return Ok(RationalFunction::zero(2, 1));
    }
    let d = f.degree;
    for e in [f, g] {
        if e.nvars < d {
            return Err(SymError::Rank { degree: d, nvars: e.nvars });
        }
    }
    let bc = stable_basis_change(d);
    let (weights, den) = scaled_weights(&bc, d, &Params::symbolic());
    let idx: Vec<usize> = (0..bc.partitions.len()).collect();
    let gram = scaled_gram(&bc, &weights, &idx);
    let pos = |key: &Partition| {
        bc.partitions
            .iter()
            .position(|p| *p == key.trimmed())
            .expect("partition of d")
    };
    // Summing rational functions one term at a time pays a gcd per term, so
    // each side is brought to a common denominator first.
    let (fv, fd) = common_denominator(f)?;
    let (gv, gd) = common_denominator(g)?;
    let mut acc = MultiPoly::zero(2, 1);
    for (a, na) in &fv {
        let mut inner = MultiPoly::zero(2, 1);
        for (b, nb) in &gv {
            inner = &inner + &gram[pos(a)][pos(b)].checked_mul(nb)?;
        }
        acc = &acc + &na.checked_mul(&inner)?;
    }
    Ok(RationalFunction::new(acc, fd.checked_mul(&gd)?.checked_mul(&den)?)?)
}

/// Numerators over the product of the distinct denominators.
fn common_denominator(
    e: &SymFunExpansion<RationalFunction>,
) -> Result<(Vec<(Partition, MultiPoly)>, MultiPoly), SymError> {
    let mut dens: Vec<&MultiPoly> = Vec::new();
    for c in e.coeffs.values() {
        if !dens.contains(&c.den()) {
            dens.push(c.den());
        }
    }
    let mut prod = MultiPoly::one(2, 1);
    for d in &dens {
        prod = prod.checked_mul(d)?;
    }
    let nums = e
        .coeffs
        .iter()
        .map(|(k, c)| Ok((k.clone(), c.num().checked_mul(&prod.div_exact(c.den())?)?)))
        .collect::<Result<Vec<_>, SymError>>()?;
    Ok((nums, prod))
}
