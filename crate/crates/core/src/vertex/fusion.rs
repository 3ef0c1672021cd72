//! Six-vertex weights, the spin-1/2 R-matrix and its fusion to spin l/2.
//!
//! Every routine takes square roots of the spectral parameters (`x = X^2`)
//! so that the `c` weight `(q - 1/q) sqrt(xy)` stays polynomial. All code is
//! generic over [`Ring`], so the same functions build symbolic tensors over
//! `MultiPoly` and numeric ones over `CyclotomicNumber`.

use crate::ring::Ring;

use super::VertexError;

#[derive(Clone, Debug, PartialEq)]
pub struct Weights<R> {
    pub a: R,
    pub b: R,
    pub c: R,
}

/// `a = q x - y/q`, `b = x - y`, `c = (q - 1/q) X Y` with `x = X^2`,
/// `y = Y^2`.
pub fn weight_abc<R: Ring>(xr: &R, yr: &R, q: &R, qinv: &R) -> Weights<R> {
    let x = xr.mul_ref(xr);
    let y = yr.mul_ref(yr);
    Weights {
        a: q.mul_ref(&x).sub_ref(&qinv.mul_ref(&y)),
        b: x.sub_ref(&y),
        c: q.sub_ref(qinv).mul_ref(&xr.mul_ref(yr)),
    }
}

/// `R(x, y)` in the basis `++, +-, -+, --`.
pub fn r_matrix<R: Ring>(xr: &R, yr: &R, q: &R, qinv: &R) -> Vec<Vec<R>> {
    let w = weight_abc(xr, yr, q, qinv);
    let z = w.a.zero_like();
    vec![
        vec![w.a.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), w.b.clone(), w.c.clone(), z.clone()],
        vec![z.clone(), w.c.clone(), w.b.clone(), z.clone()],
        vec![z.clone(), z.clone(), z, w.a],
    ]
}

/// `R(q^(2i-2) x, q^(2i) x)`: the R-matrix whose kernel on a pair of
/// neighbouring sites is the symmetric part.
pub fn annihilation_rmatrix<R: Ring>(i: u32, xr: &R, q: &R, qinv: &R) -> Vec<Vec<R>> {
    let qi = q.pow_u(i);
    let u = qi.mul_ref(qinv).mul_ref(xr);
    let v = qi.mul_ref(xr);
    r_matrix(&u, &v, q, qinv)
}

/// The 0/1 vector on `V^(x l)` (bit `s` of the index set means a minus on
/// site `s`) with coefficient 1 on every word with exactly `minus` minus
/// signs.
pub fn symmetric_state(ell: usize, minus: usize) -> Result<Vec<i64>, VertexError> {
    if minus > ell {
        return Err(VertexError::InvalidInput(format!("{minus} minus signs on {ell} sites")));
    }
    Ok((0..1usize << ell)
        .map(|w| i64::from(w.count_ones() as usize == minus))
        .collect())
}

/// Applies a 4x4 matrix to sites `i` and `j` of a state on `2^k` words.
pub fn apply_two_site<R: Ring>(state: &[R], i: usize, j: usize, m: &[Vec<R>]) -> Vec<R> {
    let (bi, bj) = (1usize << i, 1usize << j);
    let mut out = vec![state[0].zero_like(); state.len()];
    for w in 0..state.len() {
        if w & bi != 0 || w & bj != 0 {
            continue;
        }
        // local basis index: 2 * (site i is minus) + (site j is minus)
        let words = [w, w | bj, w | bi, w | bi | bj];
        for (r, &wr) in words.iter().enumerate() {
            let mut acc = out[wr].clone();
            for (c, &wc) in words.iter().enumerate() {
                if !m[r][c].is_zero() && !state[wc].is_zero() {
                    acc = acc.add_ref(&m[r][c].mul_ref(&state[wc]));
                }
            }
            out[wr] = acc;
        }
    }
    out
}

/// Fused weights `R^(l)_{alpha,beta}^{gamma,eta}`, labels counting plus
/// signs. `alpha`/`gamma` live on the horizontal (first) factor and
/// `beta`/`eta` on the vertical one.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTensor<R> {
    pub ell: usize,
    entries: Vec<R>,
}

impl<R: Ring> WeightTensor<R> {
    fn index(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        let s = self.ell + 1;
        ((a * s + b) * s + c) * s + d
    }

    pub fn get(&self, alpha: usize, beta: usize, gamma: usize, eta: usize) -> &R {
        &self.entries[self.index(alpha, beta, gamma, eta)]
    }

    /// Matrix on `V^(l) (x) V^(l)` with row `(gamma, eta)` and column
    /// `(alpha, beta)`, pairs flattened as `first * (l+1) + second`.
    pub fn as_matrix(&self) -> Vec<Vec<R>> {
        let s = self.ell + 1;
        (0..s * s)
            .map(|row| {
                (0..s * s)
                    .map(|col| self.get(col / s, col % s, row / s, row % s).clone())
                    .collect()
            })
            .collect()
    }
}

/// Horizontal word with `plus` plus signs, written as a bit mask of minus
/// signs; `front` puts the plus signs on the lowest sites.
fn word(ell: usize, plus: usize, front: bool) -> usize {
    let minus_mask = (1usize << (ell - plus)) - 1;
    if front {
        minus_mask << plus
    } else {
        minus_mask
    }
}

/// `R^(l)(x, y)` applied to `|l;alpha> (x) |l;beta>` on `V^(x 2l)`, with
/// the normalising constant set to 1. Sites `0..l` carry `X q^(a)` and sites
/// `l..2l` carry `Y q^(b)` (square roots of `q^(2a) x`, `q^(2b) y`).
pub fn fused_apply<R: Ring>(
    ell: usize,
    xr: &R,
    yr: &R,
    q: &R,
    qinv: &R,
    alpha: usize,
    beta: usize,
) -> Result<Vec<R>, VertexError> {
    let h = symmetric_state(ell, ell - alpha)?;
    let v = symmetric_state(ell, ell - beta)?;
    let one = xr.one_like();
    let zero = xr.zero_like();
    let mut state: Vec<R> = (0..1usize << (2 * ell))
        .map(|w| {
            if h[w & ((1 << ell) - 1)] == 1 && v[w >> ell] == 1 {
                one.clone()
            } else {
                zero.clone()
            }
        })
        .collect();
    let xs: Vec<R> = (0..ell).map(|a| q.pow_u(a as u32).mul_ref(xr)).collect();
    let ys: Vec<R> = (0..ell).map(|b| q.pow_u(b as u32).mul_ref(yr)).collect();
    // The rightmost factor R_{l,l+1} acts first.
    for a in (0..ell).rev() {
        for b in 0..ell {
            let m = r_matrix(&xs[a], &ys[b], q, qinv);
            state = apply_two_site(&state, a, ell + b, &m);
        }
    }
    Ok(state)
}

/// Fused weight tensor. Each output coefficient is read from the word with
/// all plus signs first and checked against every other word of the same
/// type; a mismatch means the output left the symmetric subspace.
pub fn fused_r<R: Ring>(ell: usize, xr: &R, yr: &R, q: &R, qinv: &R) -> Result<WeightTensor<R>, VertexError> {
    if ell == 0 {
        return Err(VertexError::InvalidInput("l must be positive".into()));
    }
    let s = ell + 1;
    let mut entries = vec![xr.zero_like(); s * s * s * s];
    let low = (1usize << ell) - 1;
    for alpha in 0..s {
        for beta in 0..s {
            let out = fused_apply(ell, xr, yr, q, qinv, alpha, beta)?;
            for gamma in 0..s {
                for eta in 0..s {
                    let rep = word(ell, gamma, true) | (word(ell, eta, true) << ell);
                    let alt = word(ell, gamma, false) | (word(ell, eta, false) << ell);
                    let val = out[rep].clone();
                    if out[alt] != val {
                        return Err(VertexError::FusionInvariance(format!(
                            "entry ({alpha},{beta}) -> ({gamma},{eta}) depends on the representative word"
                        )));
                    }
                    entries[((alpha * s + beta) * s + gamma) * s + eta] = val;
                }
            }
            for (w, c) in out.iter().enumerate() {
                let g = ell - (w & low).count_ones() as usize;
                let e = ell - (w >> ell).count_ones() as usize;
                if *c != entries[((alpha * s + beta) * s + g) * s + e] {
                    return Err(VertexError::FusionInvariance(format!(
                        "output of ({alpha},{beta}) is not symmetric on word {w:b}"
                    )));
                }
            }
        }
    }
    Ok(WeightTensor { ell, entries })
}

/// Dense matrix product.
pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = a.len();
    let m = b[0].len();
    let zero = a[0][0].zero_like();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = zero.clone();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            acc = acc.add_ref(&a[i][k].mul_ref(&bk[j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Returns `Some(c)` when `m = c * Id`.
pub fn scalar_multiple_of_identity<R: Ring>(m: &[Vec<R>]) -> Option<R> {
    let c = m[0][0].clone();
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if (i == j && *e != c) || (i != j && !e.is_zero()) {
                return None;
            }
        }
    }
    Some(c)
}

/// Embeds a two-site operator (row `(c, d)`, column `(a, b)`, local
/// dimension `s`) on sites `i < j` of three sites.
pub fn on_three_sites<R: Ring>(m: &[Vec<R>], s: usize, i: usize, j: usize) -> Vec<Vec<R>> {
    let n = s * s * s;
    let zero = m[0][0].zero_like();
    let digits = |x: usize| [x / (s * s), (x / s) % s, x % s];
    let k = 3 - i - j;
    (0..n)
        .map(|row| {
            let r = digits(row);
            (0..n)
                .map(|col| {
                    let c = digits(col);
                    if r[k] != c[k] {
                        return zero.clone();
                    }
                    m[r[i] * s + r[j]][c[i] * s + c[j]].clone()
                })
                .collect()
        })
        .collect()
}

/// Both sides of the Yang-Baxter equation
/// `R23(y2,y3) R13(y1,y3) R12(y1,y2) = R12(y1,y2) R13(y1,y3) R23(y2,y3)`
/// for the fused R-matrix, with `ys` the square roots of the spectral
/// parameters.
pub fn yang_baxter_sides<R: Ring>(
    ell: usize,
    ys: [&R; 3],
    q: &R,
    qinv: &R,
) -> Result<(Vec<Vec<R>>, Vec<Vec<R>>), VertexError> {
    let s = ell + 1;
    let r = |a: usize, b: usize| -> Result<Vec<Vec<R>>, VertexError> {
        Ok(on_three_sites(&fused_r(ell, ys[a], ys[b], q, qinv)?.as_matrix(), s, a, b))
    };
    let (r12, r13, r23) = (r(0, 1)?, r(0, 2)?, r(1, 2)?);
    let lhs = mat_mul(&r23, &mat_mul(&r13, &r12));
    let rhs = mat_mul(&r12, &mat_mul(&r13, &r23));
    Ok((lhs, rhs))
}
