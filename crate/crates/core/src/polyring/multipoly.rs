use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolyError;
use crate::exactnum::CyclotomicNumber as Cyclo;
use crate::ring::{Domain, Ring};

/// Exponent vector ordered by graded lexicographic order (total degree
/// first, then `x1 > x2 > ...`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub Vec<i32>);

impl Exponents {
    pub fn zeros(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn divides(&self, other: &Exponents) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial over Q(zeta_M).
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Exponents, Cyclo>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, order: u32) -> Self {
        MultiPoly {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        let order = c.order();
        Self::monomial(nvars, order, vec![0; nvars], c)
    }

    pub fn from_int(nvars: usize, order: u32, n: i64) -> Self {
        Self::constant(nvars, Cyclo::from_int(order, n))
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::from_int(nvars, order, 1)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, order, e, Cyclo::one(order))
    }

    pub fn monomial(nvars: usize, order: u32, exps: Vec<i32>, coef: Cyclo) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        assert_eq!(coef.order(), order, "coefficient field order");
        let mut p = Self::zero(nvars, order);
        if !coef.is_zero() {
            p.terms.insert(Exponents(exps), coef);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(
        nvars: usize,
        order: u32,
        terms: impl IntoIterator<Item = (Vec<i32>, Cyclo)>,
    ) -> Self {
        let mut p = Self::zero(nvars, order);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Exponents(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Cyclo)> {
        self.terms.iter()
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Cyclo)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().0.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> Cyclo {
        self.coefficient(&vec![0; self.nvars])
    }

    fn add_term(&mut self, e: Exponents, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = Ring::add_ref(&*existing, &c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VarCount(self.nvars, other.nvars));
        }
        if self.order != other.order {
            return Err(PolyError::Field(crate::exactnum::ExactError::OrderMismatch(
                self.order,
                other.order,
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.nvars, self.order);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^exps` (exponents may be negative).
    pub fn shift(&self, exps: &[i32]) -> Self {
        let s = Exponents(exps.to_vec());
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.add(&s), c.clone())).collect(),
        }
    }

    pub fn coefficient(&self, exps: &[i32]) -> Cyclo {
        self.terms
            .get(&Exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| Cyclo::zero(self.order))
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.0.iter().any(|&x| x < 0))
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Exponents::degree).max()
    }

    /// The common total degree of every term, or `None` if the polynomial is
    /// not homogeneous. The zero polynomial is homogeneous of every degree
    /// and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Exponents::degree);
        let Some(d) = it.next() else {
            return Some(0);
        };
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        self.terms.keys().all(|e| e.degree() == d)
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[var]).min()
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn eval(&self, point: &[Cyclo]) -> Result<Cyclo, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::VarCount(self.nvars, point.len()));
        }
        if let Some(p) = point.iter().find(|p| p.order() != self.order) {
            return Err(PolyError::Field(crate::exactnum::ExactError::OrderMismatch(
                self.order,
                p.order(),
            )));
        }
        let mut powers = PowerCache::new(point);
        let mut acc = Cyclo::zero(self.order);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.0.iter().enumerate() {
                if k != 0 {
                    t = &t * &powers.get(v, k)?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Replaces `x_var` by a constant; the variable count is kept.
    pub fn substitute(&self, var: usize, value: &Cyclo) -> Result<Self, PolyError> {
        let mut cache = PowerCache::single(value.clone());
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            let k = e.0[var];
            let mut ne = e.clone();
            ne.0[var] = 0;
            let f = if k == 0 { c.clone() } else { c * &cache.get(0, k)? };
            out.add_term(ne, f);
        }
        Ok(out)
    }

    /// Replaces `x_target` by `factor * x_source`.
    pub fn substitute_scaled(&self, target: usize, source: usize, factor: &Cyclo) -> Result<Self, PolyError> {
        let mut cache = PowerCache::single(factor.clone());
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            let k = e.0[target];
            let mut ne = e.clone();
            ne.0[target] = 0;
            ne.0[source] += k;
            let f = if k == 0 { c.clone() } else { c * &cache.get(0, k)? };
            out.add_term(ne, f);
        }
        Ok(out)
    }

    /// Renames variables: old variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.0.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.terms.insert(Exponents(ne), c.clone());
        }
        out
    }

    /// Maps each variable `x_i` to the monomial `images[i].0 * y^images[i].1`
    /// in a ring with `new_nvars` variables and field order `order`.
    /// Coefficients are embedded into the target field.
    pub fn substitute_monomials(
        &self,
        new_nvars: usize,
        order: u32,
        images: &[(Cyclo, Vec<i32>)],
    ) -> Result<Self, PolyError> {
        assert_eq!(images.len(), self.nvars);
        let mut caches: Vec<PowerCache> = images
            .iter()
            .map(|(c, _)| PowerCache::single(c.clone()))
            .collect();
        let mut out = Self::zero(new_nvars, order);
        for (e, c) in &self.terms {
            let mut coef = c.embed_into(order)?;
            let mut ne = vec![0; new_nvars];
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                coef = &coef * &caches[i].get(0, k)?;
                for (slot, &d) in ne.iter_mut().zip(&images[i].1) {
                    *slot += d * k;
                }
            }
            out.add_term(Exponents(ne), coef);
        }
        Ok(out)
    }

    /// Embeds every coefficient into Q(zeta_order).
    pub fn embed_into(&self, order: u32) -> Result<Self, PolyError> {
        let mut out = Self::zero(self.nvars, order);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.embed_into(order)?);
        }
        Ok(out)
    }

    /// Inserts fresh variables: the result has `new_nvars` variables and old
    /// variable `i` is placed at `positions[i]`.
    pub fn lift(&self, new_nvars: usize, positions: &[usize]) -> Self {
        let mut out = Self::zero(new_nvars, self.order);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_nvars];
            for (i, &k) in e.0.iter().enumerate() {
                ne[positions[i]] = k;
            }
            out.terms.insert(Exponents(ne), c.clone());
        }
        out
    }

    /// Multivariate division with remainder in graded lexicographic order.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.check_compat(d)?;
        let Some((lead_e, lead_c)) = d.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        let lead_inv = lead_c.invert()?;
        let mut p = self.clone();
        let mut q = Self::zero(self.nvars, self.order);
        let mut r = Self::zero(self.nvars, self.order);
        while let Some((e, c)) = p.terms.pop_last() {
            if lead_e.divides(&e) {
                let qe = e.sub(lead_e);
                let qc = &c * &lead_inv;
                for (de, dc) in d.terms.iter().rev().skip(1) {
                    p.add_term(de.add(&qe), -(&qc * dc));
                }
                q.terms.insert(qe, qc);
            } else {
                r.terms.insert(e, c);
            }
        }
        Ok((q, r))
    }

    /// Exact quotient `self / d`, or a divisibility error carrying the
    /// nonzero remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible(Box::new(r)))
        }
    }

    /// Divides exactly by each factor in turn.
    pub fn div_exact_product(&self, factors: &[Self]) -> Result<Self, PolyError> {
        factors.iter().try_fold(self.clone(), |acc, f| acc.div_exact(f))
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow_u(self, e)
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let cs = if c.is_rational() {
                c.to_string()
            } else {
                format!("({c})")
            };
            parts.push(match (mono.is_empty(), Ring::is_one(c)) {
                (true, _) => cs,
                (false, true) => mono.join("*"),
                (false, false) => format!("{cs}*{}", mono.join("*")),
            });
        }
        parts.join(" + ")
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

/// Caches powers of evaluation points, including inverses for Laurent terms.
struct PowerCache {
    base: Vec<Cyclo>,
    pos: Vec<Vec<Cyclo>>,
    neg: Vec<Vec<Cyclo>>,
}

impl PowerCache {
    fn new(point: &[Cyclo]) -> Self {
        PowerCache {
            base: point.to_vec(),
            pos: vec![Vec::new(); point.len()],
            neg: vec![Vec::new(); point.len()],
        }
    }

    fn single(v: Cyclo) -> Self {
        Self::new(std::slice::from_ref(&v))
    }

    fn get(&mut self, v: usize, k: i32) -> Result<Cyclo, PolyError> {
        if k == 0 {
            return Ok(Cyclo::one(self.base[v].order()));
        }
        let table = if k > 0 {
            if self.pos[v].is_empty() {
                self.pos[v].push(self.base[v].clone());
            }
            &mut self.pos[v]
        } else {
            if self.neg[v].is_empty() {
                let i = self.base[v].invert().map_err(|_| {
                    PolyError::Eval("zero coordinate raised to a negative power".into())
                })?;
                self.neg[v].push(i);
            }
            &mut self.neg[v]
        };
        let k = k.unsigned_abs() as usize;
        while table.len() < k {
            let next = &table[table.len() - 1] * &table[0];
            table.push(next);
        }
        Ok(table[k - 1].clone())
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars, self.order)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars, self.order)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("incompatible polynomials")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("incompatible polynomials")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("incompatible polynomials")
    }
    fn neg_ref(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(self.nvars, self.order, n)
    }
}

impl Domain for MultiPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, d).ok()
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.sub_ref(rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{} vars, Q(z{})]({})", self.nvars, self.order, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i32>,
    coef: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    order: u32,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    exp: e.0.clone(),
                    coef: c.coeff_strings(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = PolyRepr::deserialize(d)?;
        if r.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let mut p = MultiPoly::zero(r.nvars, r.order);
        for t in r.terms {
            if t.exp.len() != r.nvars {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    t.exp.len(),
                    r.nvars
                )));
            }
            let c = Cyclo::from_coeff_strings(r.order, &t.coef).map_err(D::Error::custom)?;
            p.add_term(Exponents(t.exp), c);
        }
        Ok(p)
    }
}
