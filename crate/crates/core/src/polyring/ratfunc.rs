use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bivariate_gcd, MultiPoly, PolyError, UniPoly};
use crate::exactnum::CyclotomicNumber as Cyclo;
use crate::ring::{Domain, Field, Ring};

/// Quotient of two polynomials.
///
/// Normal form: numerator and denominator are true polynomials without a
/// common monomial factor, and the denominator has leading coefficient 1.
/// With one or two variables the common gcd is also cancelled, so the
/// representation is canonical there. Equality is decided by
/// cross-multiplication in every case.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr")]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(PolyError::VarCount(num.nvars(), den.nvars()));
        }
        let mut r = RationalFunction { num, den };
        r.normalize()?;
        Ok(r)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.nvars(), p.order());
        let mut r = RationalFunction { num: p, den };
        r.normalize().expect("polynomial normalisation cannot fail");
        r
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn zero(nvars: usize, order: u32) -> Self {
        Self::from_poly(MultiPoly::zero(nvars, order))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the polynomial if the denominator divides the numerator.
    pub fn as_polynomial(&self) -> Option<MultiPoly> {
        self.num.div_exact(&self.den).ok()
    }

    fn normalize(&mut self) -> Result<(), PolyError> {
        let n = self.num.nvars();
        if self.num.is_zero() {
            self.den = MultiPoly::one(n, self.den.order());
            return Ok(());
        }
        let shift: Vec<i32> = (0..n)
            .map(|v| {
                let a = self.num.min_degree_in(v).unwrap_or(0);
                let b = self.den.min_degree_in(v).unwrap_or(0);
                -a.min(b)
            })
            .collect();
        if shift.iter().any(|&s| s != 0) {
            self.num = self.num.shift(&shift);
            self.den = self.den.shift(&shift);
        }
        if !self.den.is_constant() {
            let g = match n {
                1 => Some(
                    UniPoly::from_multipoly(&self.num)?
                        .gcd(&UniPoly::from_multipoly(&self.den)?)
                        .to_multipoly(),
                ),
                2 => Some(bivariate_gcd(&self.num, &self.den)?),
                _ => None,
            };
            if let Some(g) = g.filter(|g| !g.is_constant()) {
                self.num = self.num.div_exact(&g)?;
                self.den = self.den.div_exact(&g)?;
            }
        }
        let lc = self.den.leading_term().expect("nonzero denominator").1.clone();
        if !Ring::is_one(&lc) {
            let inv = lc.invert()?;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.den == o.den {
            return Self::new(self.num.checked_add(&o.num)?, self.den.clone());
        }
        let n = self
            .num
            .checked_mul(&o.den)?
            .checked_add(&o.num.checked_mul(&self.den)?)?;
        Self::new(n, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, PolyError> {
        Self::new(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, PolyError> {
        if o.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(self.num.checked_mul(&o.den)?, self.den.checked_mul(&o.num)?)
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self, PolyError> {
        let b = if e < 0 { self.recip()? } else { self.clone() };
        Ok(Ring::pow_u(&b, e.unsigned_abs()))
    }

    pub fn eval(&self, point: &[Cyclo]) -> Result<Cyclo, PolyError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(PolyError::Eval("denominator vanishes at the point".into()));
        }
        Ok(&self.num.eval(point)? * &d.invert()?)
    }

    /// Applies a monomial substitution to numerator and denominator.
    pub fn substitute_monomials(
        &self,
        new_nvars: usize,
        order: u32,
        images: &[(Cyclo, Vec<i32>)],
    ) -> Result<Self, PolyError> {
        Self::new(
            self.num.substitute_monomials(new_nvars, order, images)?,
            self.den.substitute_monomials(new_nvars, order, images)?,
        )
    }

    pub fn embed_into(&self, order: u32) -> Result<Self, PolyError> {
        Self::new(self.num.embed_into(order)?, self.den.embed_into(order)?)
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.den.is_constant() && Ring::is_one(&self.den.constant_term()) {
            self.num.display_with(names)
        } else {
            format!("({}) / ({})", self.num.display_with(names), self.den.display_with(names))
        }
    }
}

#[derive(Deserialize)]
struct RationalRepr {
    num: MultiPoly,
    den: MultiPoly,
}

impl TryFrom<RationalRepr> for RationalFunction {
    type Error = PolyError;
    fn try_from(r: RationalRepr) -> Result<Self, PolyError> {
        if r.num.order() != r.den.order() {
            return Err(PolyError::InvalidInput("numerator and denominator fields differ".into()));
        }
        Self::new(r.num, r.den)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        if self.num.nvars() != o.num.nvars() || self.order() != o.order() {
            return false;
        }
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul_ref(&o.den) == o.num.mul_ref(&self.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = MultiPoly::default_names(self.nvars());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars(), self.order())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.nvars(), Cyclo::one(self.order()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.checked_add(o).expect("incompatible rational functions")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.checked_add(&o.neg_ref()).expect("incompatible rational functions")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("incompatible rational functions")
    }
    fn neg_ref(&self) -> Self {
        RationalFunction {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::constant(self.nvars(), Cyclo::from_int(self.order(), n))
    }
}

impl Domain for RationalFunction {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d).ok()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

/// Order of vanishing (positive) or pole (negative) of a univariate
/// rational function at `at`, by repeated exact division by `u - at`.
pub fn univariate_pole_order(f: &RationalFunction, at: &Cyclo) -> Result<i64, PolyError> {
    if f.nvars() != 1 {
        return Err(PolyError::VarCount(1, f.nvars()));
    }
    if f.is_zero() {
        return Err(PolyError::UndefinedOrder);
    }
    let at = if at.order() == f.order() {
        at.clone()
    } else {
        at.embed_into(f.order())?
    };
    let (a, _) = UniPoly::from_multipoly(f.num())?.root_multiplicity(&at)?;
    let (b, _) = UniPoly::from_multipoly(f.den())?.root_multiplicity(&at)?;
    Ok(a as i64 - b as i64)
}
