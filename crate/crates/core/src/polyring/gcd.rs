//! Greatest common divisors of bivariate polynomials by the primitive
//! polynomial remainder sequence in K[y][x].

use super::{MultiPoly, PolyError, UniPoly};
use crate::exactnum::CyclotomicNumber as Cyclo;

/// Coefficients in the main variable (index 0), each a polynomial in the
/// second variable. No trailing zero entries.
type Bi = Vec<UniPoly>;

fn trim(mut f: Bi) -> Bi {
    while f.last().is_some_and(UniPoly::is_zero) {
        f.pop();
    }
    f
}

fn to_bi(p: &MultiPoly) -> Bi {
    let order = p.order();
    let dx = p.degree_in(0).unwrap_or(0).max(0) as usize;
    let dy = p.degree_in(1).unwrap_or(0).max(0) as usize;
    let mut grid = vec![vec![Cyclo::zero(order); dy + 1]; dx + 1];
    for (e, c) in p.terms() {
        grid[e.0[0] as usize][e.0[1] as usize] = c.clone();
    }
    trim(grid.into_iter().map(|row| UniPoly::new(order, row)).collect())
}

fn from_bi(f: &Bi, order: u32) -> MultiPoly {
    let mut terms = Vec::new();
    for (i, c) in f.iter().enumerate() {
        for (j, v) in c.coeffs().iter().enumerate() {
            terms.push((vec![i as i32, j as i32], v.clone()));
        }
    }
    MultiPoly::from_terms(2, order, terms)
}

fn content(f: &Bi) -> UniPoly {
    let mut g = f[0].clone();
    for c in &f[1..] {
        g = g.gcd(c);
        if g.degree() == Some(0) {
            break;
        }
    }
    g.monic()
}

fn primitive(f: &Bi) -> Bi {
    let c = content(f);
    if c.degree() == Some(0) {
        return f.clone();
    }
    f.iter()
        .map(|x| x.div_exact(&c).expect("content divides every coefficient"))
        .collect()
}

fn prem(f: &Bi, g: &Bi) -> Bi {
    let mut r = f.clone();
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        let mut next: Bi = r.iter().map(|c| c.mul(&lg)).collect();
        for (j, gj) in g.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&gj.mul(&lr));
        }
        r = trim(next);
    }
    r
}

/// Greatest common divisor of two polynomials in two variables with
/// non-negative exponents, normalised to have leading coefficient 1 in
/// graded lexicographic order.
pub fn bivariate_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if a.nvars() != 2 || b.nvars() != 2 {
        return Err(PolyError::VarCount(2, a.nvars().max(b.nvars())));
    }
    if a.has_negative_exponents() || b.has_negative_exponents() {
        return Err(PolyError::InvalidInput("gcd needs polynomial operands".into()));
    }
    let order = a.order();
    if a.is_zero() {
        return Ok(normalize(b));
    }
    if b.is_zero() {
        return Ok(normalize(a));
    }
    let (fa, fb) = (to_bi(a), to_bi(b));
    let c = content(&fa).gcd(&content(&fb));
    let (mut f, mut g) = (primitive(&fa), primitive(&fb));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = prem(&f, &g);
        f = g;
        g = if r.is_empty() { r } else { primitive(&r) };
    }
    let f: Bi = primitive(&f).iter().map(|x| x.mul(&c)).collect();
    Ok(normalize(&from_bi(&f, order)))
}

fn normalize(p: &MultiPoly) -> MultiPoly {
    match p.leading_term() {
        Some((_, lc)) => p.scale(&lc.invert().expect("nonzero")),
        None => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> MultiPoly {
        MultiPoly::var(2, 1, i)
    }

    fn k(n: i64) -> MultiPoly {
        MultiPoly::from_int(2, 1, n)
    }

    #[test]
    fn common_factor_is_found() {
        let (p, t) = (v(0), v(1));
        let common = &(&k(1) - &(&p * &t)) * &(&p + &k(2));
        let a = &common * &(&t - &k(3));
        let b = &common * &(&(&p * &p) + &t);
        let g = bivariate_gcd(&a, &b).unwrap();
        assert_eq!(g, normalize(&common));
    }

    #[test]
    fn coprime_gives_one() {
        let (p, t) = (v(0), v(1));
        let g = bivariate_gcd(&(&p - &t), &(&p + &t)).unwrap();
        assert_eq!(g, k(1));
    }

    #[test]
    fn content_only_factor() {
        let (p, t) = (v(0), v(1));
        let a = &(&t - &k(1)) * &p;
        let b = &(&t - &k(1)) * &(&p + &k(1));
        assert_eq!(bivariate_gcd(&a, &b).unwrap(), &t - &k(1));
    }
}
