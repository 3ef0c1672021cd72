use std::fmt;

use super::{MultiPoly, PolyError};
use crate::exactnum::CyclotomicNumber as Cyclo;
use crate::ring::Ring;

/// Dense univariate polynomial over Q(zeta_M), lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    order: u32,
    coeffs: Vec<Cyclo>,
}

impl UniPoly {
    pub fn new(order: u32, mut coeffs: Vec<Cyclo>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { order, coeffs }
    }

    pub fn zero(order: u32) -> Self {
        UniPoly { order, coeffs: Vec::new() }
    }

    pub fn constant(c: Cyclo) -> Self {
        let order = c.order();
        Self::new(order, vec![c])
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Cyclo::one(order))
    }

    /// `u - a`.
    pub fn linear_root(a: &Cyclo) -> Self {
        Self::new(a.order(), vec![-a, Cyclo::one(a.order())])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Cyclo::zero(self.order);
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&z);
                let b = o.coeffs.get(i).unwrap_or(&z);
                a + b
            })
            .collect();
        Self::new(self.order, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.order);
        }
        let mut c = vec![Cyclo::zero(self.order); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = &c[i + j] + &(a * b);
                }
            }
        }
        Self::new(self.order, c)
    }

    pub fn scale(&self, s: &Cyclo) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let Some(dd) = d.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let inv = d.coeffs[dd].invert()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.order), self.clone()));
        }
        let mut q = vec![Cyclo::zero(self.order); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(self.order, q), Self::new(self.order, r)))
    }

    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible(Box::new(r.to_multipoly())))
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !Ring::is_one(lc) => self.scale(&lc.invert().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Multiplicity of `a` as a root (0 if not a root). The zero polynomial
    /// has no defined multiplicity.
    pub fn root_multiplicity(&self, a: &Cyclo) -> Result<(usize, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::UndefinedOrder);
        }
        let lin = Self::linear_root(a);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin)?;
            if !r.is_zero() {
                return Ok((k, p));
            }
            p = q;
            k += 1;
        }
    }

    /// Converts a one-variable polynomial with non-negative exponents.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self, PolyError> {
        if p.nvars() != 1 {
            return Err(PolyError::VarCount(1, p.nvars()));
        }
        let deg = p.degree_in(0).unwrap_or(0);
        if p.min_degree_in(0).unwrap_or(0) < 0 {
            return Err(PolyError::InvalidInput("negative exponent in univariate conversion".into()));
        }
        let mut c = vec![Cyclo::zero(p.order()); deg as usize + 1];
        for (e, v) in p.terms() {
            c[e.0[0] as usize] = v.clone();
        }
        Ok(Self::new(p.order(), c))
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            1,
            self.order,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as i32], c.clone())),
        )
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_multipoly().display_with(&["u"]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(1, cs.iter().map(|&c| Cyclo::from_int(1, c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (u-1)(u+2) and (u-1)(u-3)
        let a = up(&[-2, 1, 1]);
        let b = up(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        assert_eq!(a.gcd(&UniPoly::zero(1)), a.monic());
    }

    #[test]
    fn root_multiplicity_counts() {
        // (u-2)^2 (u+1)
        let p = up(&[4, 0, -3, 1]);
        let (k, rest) = p.root_multiplicity(&Cyclo::from_int(1, 2)).unwrap();
        assert_eq!(k, 2);
        assert_eq!(rest, up(&[1, 1]));
        assert!(UniPoly::zero(1).root_multiplicity(&Cyclo::from_int(1, 0)).is_err());
    }

    #[test]
    fn division_identity() {
        let a = up(&[5, -1, 0, 3, 2]);
        let d = up(&[1, 7, 2]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), a);
    }
}
