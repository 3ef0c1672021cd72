//! Tensor-grid interpolation, used as an independent route to polynomials
//! that are only cheap to evaluate pointwise.

use super::{MultiPoly, PolyError};
use crate::exactnum::{CyclotomicNumber as Cyclo, Rational};
use crate::ring::solve_linear;

fn vandermonde_inverse(nodes: &[Rational]) -> Result<Vec<Vec<Cyclo>>, PolyError> {
    let n = nodes.len();
    let row = |x: &Rational| -> Vec<Cyclo> {
        let mut p = Rational::from_integer(1.into());
        (0..n)
            .map(|_| {
                let c = Cyclo::from_rational(1, &p);
                p = &p * x;
                c
            })
            .collect()
    };
    let v: Vec<Vec<Cyclo>> = nodes.iter().map(row).collect();
    // column k of the inverse solves V c = e_k
    let mut inv = vec![vec![Cyclo::zero(1); n]; n];
    for k in 0..n {
        let mut e = vec![Cyclo::zero(1); n];
        e[k] = Cyclo::one(1);
        let col = solve_linear(v.clone(), e)
            .ok_or_else(|| PolyError::InvalidInput("interpolation nodes must be distinct".into()))?;
        for (i, c) in col.into_iter().enumerate() {
            inv[i][k] = c;
        }
    }
    Ok(inv)
}

/// Recovers the polynomial with per-variable degree below `nodes[v].len()`
/// from its values on the grid `nodes[0] x nodes[1] x ...`.
pub fn interpolate_tensor(
    order: u32,
    nodes: &[Vec<Rational>],
    mut f: impl FnMut(&[Cyclo]) -> Result<Cyclo, PolyError>,
) -> Result<MultiPoly, PolyError> {
    let nvars = nodes.len();
    let sizes: Vec<usize> = nodes.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    let mut strides = vec![1usize; nvars];
    for v in (0..nvars.saturating_sub(1)).rev() {
        strides[v] = strides[v + 1] * sizes[v + 1];
    }
    let node_vals: Vec<Vec<Cyclo>> = nodes
        .iter()
        .map(|ns| ns.iter().map(|r| Cyclo::from_rational(order, r)).collect())
        .collect();
    let mut vals = Vec::with_capacity(total);
    let mut idx = vec![0usize; nvars];
    for _ in 0..total {
        let point: Vec<Cyclo> = idx.iter().enumerate().map(|(v, &i)| node_vals[v][i].clone()).collect();
        vals.push(f(&point)?);
        for v in (0..nvars).rev() {
            idx[v] += 1;
            if idx[v] < sizes[v] {
                break;
            }
            idx[v] = 0;
        }
    }
    for v in 0..nvars {
        let inv: Vec<Vec<Cyclo>> = vandermonde_inverse(&nodes[v])?
            .into_iter()
            .map(|row| row.iter().map(|c| c.embed_into(order)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let s = sizes[v];
        for base in 0..total {
            if (base / strides[v]) % s != 0 {
                continue;
            }
            let fiber: Vec<Cyclo> = (0..s).map(|i| vals[base + i * strides[v]].clone()).collect();
            for (k, row) in inv.iter().enumerate() {
                let mut acc = Cyclo::zero(order);
                for (a, b) in row.iter().zip(&fiber) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                vals[base + k * strides[v]] = acc;
            }
        }
    }
    let mut terms = Vec::new();
    for (flat, c) in vals.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e: Vec<i32> = (0..nvars).map(|v| ((flat / strides[v]) % sizes[v]) as i32).collect();
        terms.push((e, c));
    }
    Ok(MultiPoly::from_terms(nvars, order, terms))
}

/// Interpolates a homogeneous polynomial of total degree `degree` in
/// `nodes.len() + 1` variables, each of partial degree at most
/// `nodes[v].len() - 1`, by setting the last variable to 1 and
/// re-homogenising.
pub fn interpolate_homogeneous(
    order: u32,
    degree: i64,
    nodes: &[Vec<Rational>],
    mut f: impl FnMut(&[Cyclo]) -> Result<Cyclo, PolyError>,
) -> Result<MultiPoly, PolyError> {
    let n = nodes.len() + 1;
    let bound = nodes.iter().map(|ns| ns.len() as i64 - 1).max().unwrap_or(degree);
    let one = Cyclo::one(order);
    let de = interpolate_tensor(order, nodes, |pt| {
        let mut full = pt.to_vec();
        full.push(one.clone());
        f(&full)
    })?;
    let mut terms = Vec::new();
    for (e, c) in de.terms() {
        let rest = degree - e.degree();
        if rest < 0 || rest > bound {
            return Err(PolyError::InvalidInput(format!(
                "interpolated data is not homogeneous of degree {degree} with partial degree {bound}"
            )));
        }
        let mut full = e.0.clone();
        full.push(rest as i32);
        terms.push((full, c.clone()));
    }
    Ok(MultiPoly::from_terms(n, order, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn recovers_a_known_polynomial() {
        let x = MultiPoly::var(2, 5, 0);
        let y = MultiPoly::var(2, 5, 1);
        let q = Cyclo::zeta(5, 1).unwrap();
        let p = &(&(&x * &x).scale(&q) * &y) - &MultiPoly::from_int(2, 5, 3);
        let nodes = vec![vec![r(0), r(1), r(2)], vec![r(1), r(3)]];
        let got = interpolate_tensor(5, &nodes, |pt| p.eval(pt)).unwrap();
        assert_eq!(got, p);
    }

    #[test]
    fn homogeneous_recovery() {
        let v = |i| MultiPoly::var(3, 1, i);
        let p = &(&v(0) * &v(1)) + &(&v(2) * &v(2)).from_i64_like(0).add_ref(&(&v(2) * &v(0)));
        let nodes = vec![vec![r(1), r(2), r(3)], vec![r(4), r(5), r(6)]];
        let got = interpolate_homogeneous(1, 2, &nodes, |pt| p.eval(pt)).unwrap();
        assert_eq!(got, p);
    }
}
