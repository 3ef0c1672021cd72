use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use super::macdonald::{macdonald, macdonald_with_params, Params};
use super::operator::macdonald_operator_limit;
use super::{SymError, SymFunExpansion};
use crate::exactnum::CyclotomicNumber as Cyclo;
use crate::partitions::Partition;
use crate::polyring::{univariate_pole_order, MultiPoly, RationalFunction, UniPoly};

/// The curve `p = u^a`, `t = omega * u^b` through the point `p = q^2`,
/// `t = q` with `q = zeta_(2l+1)`, along which `p^(l-1) t^3 = 1`.
#[derive(Clone, Debug, Serialize)]
pub struct BranchParametrization {
    pub ell: usize,
    pub r: usize,
    pub k: usize,
    pub m: usize,
    /// `(k+1)/m`; always an integer.
    pub p_exponent: i32,
    /// `-(r-1)/m`; always an integer.
    pub t_exponent: i32,
    pub omega: Cyclo,
    pub u0: Cyclo,
    /// `zeta_(2l+1)` embedded in the field of `u0`.
    pub q: Cyclo,
}

impl BranchParametrization {
    /// Order of the cyclotomic field holding `u0`: `3(2l+1)`.
    pub fn order(&self) -> u32 {
        self.u0.order()
    }

    pub fn p_at(&self, u: &Cyclo) -> Result<Cyclo, SymError> {
        Ok(u.pow(self.p_exponent as i64)?)
    }

    pub fn t_at(&self, u: &Cyclo) -> Result<Cyclo, SymError> {
        Ok(self.omega.checked_mul(&u.pow(self.t_exponent as i64)?)?)
    }

    fn params(&self) -> Params {
        let order = self.order();
        Params {
            p: MultiPoly::monomial(1, order, vec![self.p_exponent], Cyclo::one(order)),
            t: MultiPoly::monomial(1, order, vec![self.t_exponent], self.omega.clone()),
        }
    }
}

/// Branch data for the `(l, 2)` wheel condition (`r = l`, `k = 2`). Both
/// defining identities are checked exactly before returning.
pub fn branch_params(ell: usize) -> Result<BranchParametrization, SymError> {
    if ell == 0 {
        return Err(SymError::InvalidInput("l must be positive".into()));
    }
    let (r, k) = (ell, 2usize);
    let m = (k + 1).gcd(&(r - 1));
    let odd = 2 * ell as i64 + 1;
    let order = 3 * odd as u32;
    let z = |e: i64| Cyclo::zeta(order, e);
    let omega = if m == 3 { z(odd)? } else { Cyclo::one(order) };
    // e^{4 pi i/(3(2l+1))} times a cube root of unity, or e^{4 pi i/(2l+1)}
    let u0 = match ell % 3 {
        0 => z(2 + odd)?,
        1 => z(6)?,
        _ => z(2 - odd)?,
    };
    let b = BranchParametrization {
        ell,
        r,
        k,
        m,
        p_exponent: ((k + 1) / m) as i32,
        t_exponent: -(((r - 1) / m) as i32),
        omega,
        u0,
        q: z(3)?,
    };
    if (r as i32 - 1) * b.p_exponent + (k as i32 + 1) * b.t_exponent != 0 || !b.omega.pow(3)?.is_one_value() {
        return Err(SymError::Branch(format!("p^(r-1) t^(k+1) is not identically 1 for l = {ell}")));
    }
    if b.p_at(&b.u0)? != b.q.pow(2)? {
        return Err(SymError::Branch(format!("p(u0) != q^2 for l = {ell}")));
    }
    if b.t_at(&b.u0)? != b.q {
        return Err(SymError::Branch(format!("t(u0) != q for l = {ell}")));
    }
    Ok(b)
}

trait IsOne {
    fn is_one_value(&self) -> bool;
}

impl IsOne for Cyclo {
    fn is_one_value(&self) -> bool {
        *self == Cyclo::one(self.order())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// Gram-Schmidt directly over `Q(zeta)(u)`.
    Branch,
    /// `t(u)` is constant: Gram-Schmidt in `Q(p, t)`, then `p = u`,
    /// `t = omega`.
    SymbolicThenSubstitute,
    /// Eigenvector recursion for the `n`-variable Macdonald operator, in
    /// Laurent series at `u0`.
    LaurentSeries,
}

#[derive(Clone, Debug)]
pub struct CombinatorialPoint {
    pub expansion: SymFunExpansion<Cyclo>,
    /// Largest pole order at `u0` among the coefficients.
    pub pole_order: u32,
    pub route: Route,
    pub branch: BranchParametrization,
}

/// Value at `u0` of `(u - u0)^n f(u)`, assuming the pole order of `f` at
/// `u0` is at most `n`.
fn renormalised_value(f: &RationalFunction, u0: &Cyclo, n: u32) -> Result<Cyclo, SymError> {
    let (a, num) = UniPoly::from_multipoly(f.num())?.root_multiplicity(u0)?;
    let (b, den) = UniPoly::from_multipoly(f.den())?.root_multiplicity(u0)?;
    let ord = a as i64 - b as i64 + n as i64;
    debug_assert!(ord >= 0);
    if ord > 0 {
        return Ok(Cyclo::zero(u0.order()));
    }
    Ok(num.eval(u0).checked_mul(&den.eval(u0).invert()?)?)
}

/// Renormalised Macdonald polynomial `lim (u - u0)^N P_lambda(x; p(u), t(u))`
/// with `N` the largest pole order of any coefficient at `u0`.
/// The route is [`Route::SymbolicThenSubstitute`] when `t(u)` is constant
/// and [`Route::LaurentSeries`] otherwise.
pub fn macdonald_at_combinatorial_point(
    lambda: &Partition,
    ell: usize,
    nvars: usize,
) -> Result<CombinatorialPoint, SymError> {
    let route = if branch_params(ell)?.t_exponent == 0 {
        Route::SymbolicThenSubstitute
    } else {
        Route::LaurentSeries
    };
    macdonald_at_combinatorial_point_via(lambda, ell, nvars, route)
}

/// Same limit along a chosen route, so that routes can be cross-checked.
/// [`Route::SymbolicThenSubstitute`] needs a constant `t(u)`.
pub fn macdonald_at_combinatorial_point_via(
    lambda: &Partition,
    ell: usize,
    nvars: usize,
    route: Route,
) -> Result<CombinatorialPoint, SymError> {
    let branch = branch_params(ell)?;
    let order = branch.order();
    if route == Route::LaurentSeries {
        let (expansion, pole_order) = macdonald_operator_limit(lambda, nvars, &branch.params(), &branch.u0)?;
        return Ok(CombinatorialPoint {
            expansion,
            pole_order,
            route,
            branch,
        });
    }
    let along = if route == Route::SymbolicThenSubstitute {
        if branch.t_exponent != 0 {
            return Err(SymError::InvalidInput(format!("t(u) is not constant for l = {ell}")));
        }
        let sym = macdonald(lambda, nvars)?;
        let images = [
            (Cyclo::one(order), vec![branch.p_exponent]),
            (branch.omega.clone(), vec![0]),
        ];
        let mut coeffs = BTreeMap::new();
        for (mu, c) in sym.coeffs {
            let c = c.substitute_monomials(1, order, &images).map_err(|_| {
                SymError::Singular(format!("coefficient of {mu} has a pole along t = omega"))
            })?;
            coeffs.insert(mu, c);
        }
        let e = SymFunExpansion {
            nvars,
            degree: sym.degree,
            coeffs,
        };
        e
    } else {
        macdonald_with_params(lambda, nvars, &branch.params())?
    };
    let mut orders = Vec::new();
    for c in along.coeffs.values() {
        if !c.is_zero() {
            orders.push(univariate_pole_order(c, &branch.u0)?);
        }
    }
    let pole_order = (-orders.iter().copied().min().unwrap_or(0)).max(0) as u32;
    let mut coeffs = BTreeMap::new();
    for (mu, c) in &along.coeffs {
        if c.is_zero() {
            continue;
        }
        let v = renormalised_value(c, &branch.u0, pole_order)?;
        if !v.is_zero() {
            coeffs.insert(mu.clone(), v);
        }
    }
    if coeffs.is_empty() {
        return Err(SymError::Degenerate);
    }
    Ok(CombinatorialPoint {
        expansion: SymFunExpansion {
            nvars,
            degree: along.degree,
            coeffs,
        },
        pole_order,
        route,
        branch,
    })
}
