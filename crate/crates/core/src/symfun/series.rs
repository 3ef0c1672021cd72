//! Truncated Laurent series in `eps = u - u0` over a cyclotomic field, with
//! the absolute precision of every value tracked through arithmetic.

use std::collections::HashMap;

use crate::exactnum::{CyclotomicNumber as Cyclo, Rational};
use crate::polyring::MultiPoly;

/// `sum_k c_k eps^k`, known modulo `eps^prec`. `coeffs[i]` belongs to
/// `eps^(start + i)`; `coeffs[0]` is nonzero unless the value is zero to
/// the known precision, in which case `coeffs` is empty and `start == prec`.
#[derive(Clone, Debug)]
pub(crate) struct Series {
    start: i64,
    coeffs: Vec<Cyclo>,
    prec: i64,
    order: u32,
}

impl Series {
    fn build(order: u32, start: i64, mut coeffs: Vec<Cyclo>, prec: i64) -> Self {
        let keep = (prec - start).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        let start = if coeffs.is_empty() { prec } else { start + lead as i64 };
        Series {
            start,
            coeffs,
            prec,
            order,
        }
    }

    /// A constant known modulo `eps^prec`.
    pub(crate) fn build_constant(c: Cyclo, prec: i64) -> Self {
        Series::build(c.order(), 0, vec![c], prec)
    }

    /// Zero known modulo `eps^prec`.
    pub(crate) fn zero(order: u32, prec: i64) -> Self {
        Series::build(order, prec, Vec::new(), prec)
    }

    pub(crate) fn prec(&self) -> i64 {
        self.prec
    }

    /// Valuation, or `None` when the value vanishes to the known precision.
    pub(crate) fn val(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `eps^k`; `k` must be below the precision.
    pub(crate) fn coeff(&self, k: i64) -> Cyclo {
        debug_assert!(k < self.prec);
        if k < self.start {
            return Cyclo::zero(self.order);
        }
        self.coeffs.get((k - self.start) as usize).cloned().unwrap_or_else(|| Cyclo::zero(self.order))
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let start = self.start.min(other.start).min(prec);
        let coeffs = (start..prec)
            .map(|k| &self.coeff(k) + &other.coeff(k))
            .collect();
        Series::build(self.order, start, coeffs, prec)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let prec = (self.prec + other.start).min(other.prec + self.start);
        let start = self.start + other.start;
        if self.is_zero() || other.is_zero() {
            return Series::build(self.order, prec, Vec::new(), prec);
        }
        let len = (prec - start).max(0) as usize;
        let mut coeffs = vec![Cyclo::zero(self.order); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Series::build(self.order, start, coeffs, prec)
    }

    /// Reciprocal; `None` when the value vanishes to the known precision.
    pub(crate) fn inv(&self) -> Option<Self> {
        let v = self.val()?;
        let rel = (self.prec - v) as usize;
        let a0inv = self.coeffs[0].invert().ok()?;
        let mut b: Vec<Cyclo> = Vec::with_capacity(rel);
        b.push(a0inv.clone());
        for k in 1..rel {
            let mut acc = Cyclo::zero(self.order);
            for i in 1..=k.min(self.coeffs.len() - 1) {
                acc = &acc + &(&self.coeffs[i] * &b[k - i]);
            }
            b.push(-&(&acc * &a0inv));
        }
        Some(Series::build(self.order, -v, b, self.prec - 2 * v))
    }
}

/// Taylor expansions of Laurent polynomials in one variable `u` at `u0`.
pub(crate) struct TaylorAt {
    u0: Cyclo,
    u0inv: Cyclo,
    prec: i64,
    powers: HashMap<i32, Vec<Cyclo>>,
}

impl TaylorAt {
    pub(crate) fn new(u0: &Cyclo, prec: i64) -> Self {
        TaylorAt {
            u0: u0.clone(),
            u0inv: u0.invert().expect("u0 is a root of unity"),
            prec,
            powers: HashMap::new(),
        }
    }

    /// `(u0 + eps)^n = sum_j C(n, j) u0^(n - j) eps^j`, with the generalised
    /// binomial coefficient for negative `n`.
    fn power(&mut self, n: i32) -> &[Cyclo] {
        let (u0, u0inv, prec) = (&self.u0, &self.u0inv, self.prec);
        self.powers.entry(n).or_insert_with(|| {
            let order = u0.order();
            let mut out = Vec::with_capacity(prec as usize);
            let mut binom = Rational::from_integer(1.into());
            let mut upow = u0.pow(n as i64).expect("u0 is invertible");
            for j in 0..prec {
                out.push(&Cyclo::from_rational(order, &binom) * &upow);
                binom = binom * Rational::new((n as i64 - j).into(), (j + 1).into());
                upow = &upow * u0inv;
            }
            out
        })
    }

    /// Expansion of a polynomial in one variable.
    pub(crate) fn expand(&mut self, p: &MultiPoly) -> Series {
        let order = self.u0.order();
        let mut coeffs = vec![Cyclo::zero(order); self.prec as usize];
        for (e, c) in p.terms() {
            let c = if c.order() == order { c.clone() } else { c.embed_into(order).expect("field embeds") };
            for (slot, t) in coeffs.iter_mut().zip(self.power(e.0[0])) {
                *slot = &*slot + &(&c * t);
            }
        }
        Series::build(order, 0, coeffs, self.prec)
    }
}
