//! Minimal algebraic traits shared by the scalar, polynomial and
//! rational-function types.
//!
//! Elements carry their own context (field order, number of variables), so
//! constants are produced from an existing element via `zero_like` /
//! `one_like` instead of a global constructor.

use std::fmt::Debug;

pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64_like(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// An integral domain with exact division.
pub trait Domain: Ring {
    /// Returns `Some(q)` with `q * d == self` when `d` divides `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so the routine only needs a
/// [`Domain`]. Rows are swapped when a pivot vanishes.
pub fn det_bareiss<R: Domain>(mut m: Vec<Vec<R>>) -> Option<R> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    if m.iter().any(|row| row.len() != n) {
        return None;
    }
    let one = m[0][0].one_like();
    let mut sign_flip = false;
    let mut prev = one.clone();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Some(one.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = one.zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if sign_flip { d.neg_ref() } else { d })
}

/// Determinant over a field by Gaussian elimination.
pub fn det_gauss<F: Field>(mut m: Vec<Vec<F>>) -> Option<F> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut det = m[0][0].one_like();
    for k in 0..n {
        let piv = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(p) = piv else {
            return Some(det.zero_like());
        };
        if p != k {
            m.swap(p, k);
            det = det.neg_ref();
        }
        det = det.mul_ref(&m[k][k]);
        let inv = m[k][k].inv().expect("nonzero pivot is invertible");
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].mul_ref(&inv);
            for j in k + 1..n {
                let t = m[i][j].sub_ref(&f.mul_ref(&m[k][j]));
                m[i][j] = t;
            }
        }
    }
    Some(det)
}

/// Solves `a * x = b` over a field. Returns `None` when `a` is singular.
pub fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(p, k);
        b.swap(p, k);
        let inv = a[k][k].inv()?;
        for j in k..n {
            a[k][j] = a[k][j].mul_ref(&inv);
        }
        b[k] = b[k].mul_ref(&inv);
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..n {
                let t = a[i][j].sub_ref(&f.mul_ref(&a[k][j]));
                a[i][j] = t;
            }
            b[i] = b[i].sub_ref(&f.mul_ref(&b[k]));
        }
    }
    Some(b)
}
