//! Exact arithmetic in cyclotomic fields Q(zeta_M).
//!
//! An element is stored in the power basis `1, z, ..., z^(phi(M)-1)` reduced
//! modulo the M-th cyclotomic polynomial, with a single common positive
//! denominator. The representation is canonical, so equality and zero tests
//! are coefficient comparisons.
//!
//! Order 1 (and 2) give the rational field itself; rational parameter values
//! such as a generic `q = 5/2` live there.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::ring::{Domain, Field, Ring};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Precomputed data for Q(zeta_M).
#[derive(Debug)]
pub struct FieldCtx {
    order: u32,
    degree: usize,
    /// Coefficients of Phi_M, lowest degree first; monic.
    phi: Vec<BigInt>,
    /// `reduce[k]` is z^k reduced mod Phi_M for `deg <= k < 2 deg - 1`.
    reduce: Vec<Vec<BigInt>>,
}

impl FieldCtx {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_poly(&self) -> &[BigInt] {
        &self.phi
    }

    /// Reduces an integer polynomial (lowest degree first) modulo Phi_M.
    fn reduce_poly(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for i in 0..d {
                p[shift + i] -= &top * &self.phi[i];
            }
        }
        p.resize(d, BigInt::zero());
        p
    }
}

fn poly_divexact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Phi_M via Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::from(-1);
    p[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            p = poly_divexact_int(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

fn build_ctx(order: u32) -> FieldCtx {
    let phi = cyclotomic_polynomial(order);
    let degree = phi.len() - 1;
    let mut ctx = FieldCtx {
        order,
        degree,
        phi,
        reduce: Vec::new(),
    };
    let mut table = Vec::new();
    for k in degree..(2 * degree).saturating_sub(1) {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        table.push(ctx.reduce_poly(v));
    }
    ctx.reduce = table;
    ctx
}

/// Shared, lazily built field contexts. Entries are immutable once inserted.
pub fn field_ctx(order: u32) -> Arc<FieldCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&order) {
        return c.clone();
    }
    let built = Arc::new(build_ctx(order));
    cache
        .lock()
        .unwrap()
        .entry(order)
        .or_insert(built)
        .clone()
}

/// Element of Q(zeta_M).
#[derive(Clone)]
pub struct CyclotomicNumber {
    ctx: Arc<FieldCtx>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl std::hash::Hash for CyclotomicNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl CyclotomicNumber {
    fn from_parts(ctx: Arc<FieldCtx>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut c = CyclotomicNumber { ctx, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(order: u32) -> Self {
        let ctx = field_ctx(order.max(1));
        let d = ctx.degree;
        CyclotomicNumber {
            ctx,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(order: u32, r: &Rational) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    pub fn from_frac(order: u32, n: i64, d: i64) -> Self {
        Self::from_rational(order, &Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Builds `sum coeffs[i] z^i`, reducing modulo Phi_M. `coeffs` may be
    /// longer than phi(M).
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidInput("order must be positive".into()));
        }
        let ctx = field_ctx(order);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let num = ctx.reduce_poly(num);
        Ok(Self::from_parts(ctx, num, den))
    }

    /// zeta_order^power.
    pub fn zeta(order: u32, power: i64) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidInput("order must be positive".into()));
        }
        let ctx = field_ctx(order);
        let e = power.rem_euclid(order as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        let num = ctx.reduce_poly(v);
        Ok(Self::from_parts(ctx, num, BigInt::one()))
    }

    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    pub fn degree(&self) -> usize {
        self.ctx.degree
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Power-basis coefficients as reduced rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    fn check_order(&self, other: &Self) -> Result<(), ExactError> {
        if self.ctx.order != other.ctx.order {
            return Err(ExactError::OrderMismatch(self.ctx.order, other.ctx.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.negate() } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let g = self.den.gcd(&other.den);
            let fa = &other.den / &g;
            let fb = &self.den / &g;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &fa, b * &fb);
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, &self.den * &fa)
        };
        Self::from_parts(self.ctx.clone(), num, den)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx.order);
        }
        let d = self.ctx.degree;
        if d == 1 {
            return Self::from_parts(
                self.ctx.clone(),
                vec![&self.num[0] * &other.num[0]],
                &self.den * &other.den,
            );
        }
        let mut conv = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigInt> = conv[..d].to_vec();
        for (k, c) in conv[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.ctx.reduce[k]) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        Self::from_parts(self.ctx.clone(), out, &self.den * &other.den)
    }

    fn negate(&self) -> Self {
        CyclotomicNumber {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// against Phi_M.
    pub fn invert(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_rational() {
            let r = self.to_rational().unwrap();
            return Ok(Self::from_rational(self.ctx.order, &r.recip()));
        }
        let to_q = |v: &[BigInt]| -> Vec<Rational> {
            v.iter().map(|c| Rational::from_integer(c.clone())).collect()
        };
        let a = trim(to_q(&self.num));
        let m = trim(to_q(&self.ctx.phi));
        // invariant: s * a == r (mod m)
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !(r1.len() == 1) {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                return Err(ExactError::DivisionByZero);
            }
        }
        let c = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        let mut res = Self::from_coeffs(self.ctx.order, &inv)?;
        // keep original scale: self = num/den, we inverted num only
        res = res.mul_unchecked(&Self::from_rational(
            self.ctx.order,
            &Rational::from_integer(self.den.clone()),
        ));
        Ok(res)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        Ok(Ring::pow_u(&base, e.unsigned_abs() as u32))
    }

    /// Embeds Q(zeta_M) into Q(zeta_{kM}) via zeta_M -> zeta_{kM}^k.
    pub fn embed(&self, k: u32) -> Result<Self, ExactError> {
        if k == 0 {
            return Err(ExactError::InvalidInput("embedding factor must be positive".into()));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let target = field_ctx(self.ctx.order * k);
        let mut v = vec![BigInt::zero(); (self.ctx.degree - 1) * k as usize + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * k as usize] = c.clone();
        }
        let num = target.reduce_poly(v);
        Ok(Self::from_parts(target, num, self.den.clone()))
    }

    /// Embeds into the field of the given order, which must be a multiple.
    pub fn embed_into(&self, order: u32) -> Result<Self, ExactError> {
        if order % self.ctx.order != 0 {
            return Err(ExactError::OrderMismatch(self.ctx.order, order));
        }
        self.embed(order / self.ctx.order)
    }

    /// Complex floating-point value, for display and diagnostics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let den = bigint_f64(&self.den);
        let mut re = 0.0;
        let mut im = 0.0;
        let theta = 2.0 * std::f64::consts::PI / self.ctx.order as f64;
        for (i, c) in self.num.iter().enumerate() {
            let v = bigint_f64(c) / den;
            re += v * (theta * i as f64).cos();
            im += v * (theta * i as f64).sin();
        }
        (re, im)
    }
}

fn bigint_f64(b: &BigInt) -> f64 {
    b.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lc = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lc;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

impl Ring for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        Self::zero(self.ctx.order)
    }
    fn one_like(&self) -> Self {
        Self::one(self.ctx.order)
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("cyclotomic order mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("cyclotomic order mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("cyclotomic order mismatch")
    }
    fn neg_ref(&self) -> Self {
        self.negate()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(self.ctx.order, n)
    }
}

impl Domain for CyclotomicNumber {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        d.invert().ok().map(|i| self.mul_ref(&i))
    }
}

impl Field for CyclotomicNumber {
    fn inv(&self) -> Option<Self> {
        self.invert().ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                Ring::$inner(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a CyclotomicNumber> for &'a CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
                Ring::$inner(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.negate()
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.negate()
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let z = match i {
                0 => String::new(),
                1 => format!("z{}", self.ctx.order),
                _ => format!("z{}^{}", self.ctx.order, i),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.ctx.order, self)
    }
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl CyclotomicNumber {
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(format_rational).collect()
    }

    pub fn from_coeff_strings(order: u32, coeffs: &[String]) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidInput("order must be positive".into()));
        }
        let expected = euler_phi(order);
        if coeffs.len() != expected {
            return Err(ExactError::Parse(format!(
                "expected {expected} coefficients for order {order}, got {}",
                coeffs.len()
            )));
        }
        let qs = coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(order, &qs)
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.ctx.order,
            coeffs: self.coeff_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CycloRepr::deserialize(d)?;
        CyclotomicNumber::from_coeff_strings(r.order, &r.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::zeta(m, k).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i = |v: Vec<BigInt>| v.iter().map(|c| c.to_string().parse::<i64>().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i(cyclotomic_polynomial(15)), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m));
        }
    }

    #[test]
    fn make_reduces() {
        // zeta_3^2 = -1 - zeta_3
        let e = z(3, 2);
        assert_eq!(e.coeffs(), vec![q(-1, 1), q(-1, 1)]);
        assert!(z(5, 5).is_one());
        assert_eq!(z(5, -1), z(5, 4));
        assert!(CyclotomicNumber::zeta(0, 1).is_err());
    }

    #[test]
    fn zeta15_seventh_power_has_order_15() {
        let a = z(15, 7);
        let mut acc = CyclotomicNumber::one(15);
        for i in 1..=15 {
            acc = &acc * &a;
            assert_eq!(acc.is_one(), i == 15);
        }
    }

    #[test]
    fn small_identities() {
        assert_eq!(&z(3, 1) + &z(3, 2), CyclotomicNumber::from_int(3, -1));
        assert!((&z(5, 1) * &z(5, 4)).is_one());
        let qq = z(5, 1);
        let qi = z(5, -1);
        let lhs = &(&qq - &qi) * &(&qq + &qi);
        assert_eq!(lhs, &z(5, 2) - &z(5, -2));
        let s = &(&CyclotomicNumber::one(3) + &z(3, 1)) + &z(3, 2);
        assert!(s.is_zero());
        assert!(!(&z(5, 1) - &z(5, 2)).is_zero());
        let l = 3;
        assert!((&z(2 * l + 1, 2 * l as i64 + 1) - &CyclotomicNumber::one(2 * l + 1)).is_zero());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(
            z(3, 1).checked_add(&z(5, 1)),
            Err(ExactError::OrderMismatch(3, 5))
        );
        assert!(z(3, 1).checked_mul(&z(5, 1)).is_err());
    }

    #[test]
    fn inversion() {
        assert!(CyclotomicNumber::one(7).invert().unwrap().is_one());
        assert_eq!(z(5, 1).invert().unwrap(), z(5, 4));
        let a = &z(5, 1) - &z(5, -1);
        let inv = a.invert().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(CyclotomicNumber::zero(5).invert(), Err(ExactError::DivisionByZero));
        let b = CyclotomicNumber::from_coeffs(7, &[q(3, 2), q(-1, 5), q(0, 1), q(7, 3)]).unwrap();
        assert!((&b * &b.invert().unwrap()).is_one());
    }

    #[test]
    fn embedding() {
        let q5 = z(5, 1);
        let e = q5.embed(3).unwrap();
        assert_eq!(e, z(15, 3));
        let s = &z(5, 2) + &CyclotomicNumber::from_int(5, 4);
        assert_eq!(s.embed(3).unwrap(), &z(15, 6) + &CyclotomicNumber::from_int(15, 4));
        assert!(q5.embed_into(7).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let a = CyclotomicNumber::from_coeffs(5, &[q(1, 2), q(-3, 1), q(0, 1), q(2, 7)]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"order":5,"coeffs":["1/2","-3/1","0/1","2/7"]}"#);
        let b: CyclotomicNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"order":5,"coeffs":["1"]}"#).is_err());
    }
}
