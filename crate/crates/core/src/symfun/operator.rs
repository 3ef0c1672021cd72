//! The first Macdonald operator in `n` variables,
//! `D = a_delta^-1 sum_i (T_(t,x_i) a_delta) T_(p,x_i)`, on the monomial basis.
//!
//! `P_lambda` is its eigenvector with leading term `m_lambda`, which gives a
//! triangular recursion for the coefficients with no linear solve. Unlike
//! Gram-Schmidt in the stable basis, nothing outside `n` variables enters, so
//! the recursion stays regular where only the `n`-variable polynomial is.

use std::collections::{BTreeMap, HashMap};

use super::distinct_permutations;
use super::macdonald::Params;
use super::series::{Series, TaylorAt};
use super::{SymError, SymFunExpansion};
use crate::exactnum::CyclotomicNumber as Cyclo;
use crate::partitions::{dominance_leq, partitions_of, Partition};
use crate::polyring::MultiPoly;

/// `sum c p^a t^b`, keyed by `(a, b)`.
type PtPoly = BTreeMap<(u32, u32), i64>;

fn add_into(acc: &mut PtPoly, other: &PtPoly, times: i64) {
    for (k, v) in other {
        let e = acc.entry(*k).or_insert(0);
        *e += v * times;
        if *e == 0 {
            acc.remove(k);
        }
    }
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub(crate) fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    fn go(shape: Vec<usize>, content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.iter().all(|&x| x == 0));
        };
        if let Some(&v) = memo.get(&(shape.clone(), content.len())) {
            return v;
        }
        // strip of `last` boxes: inner[i] in [shape[i+1], shape[i]]
        let mut total = 0;
        let mut inner = shape.clone();
        fn strips(
            i: usize,
            left: usize,
            shape: &[usize],
            inner: &mut Vec<usize>,
            rest: &[usize],
            memo: &mut HashMap<(Vec<usize>, usize), u64>,
            total: &mut u64,
        ) {
            if i == shape.len() {
                if left == 0 {
                    *total += go(inner.clone(), rest, memo);
                }
                return;
            }
            let floor = shape.get(i + 1).copied().unwrap_or(0);
            for take in 0..=(shape[i] - floor).min(left) {
                inner[i] = shape[i] - take;
                strips(i + 1, left - take, shape, inner, rest, memo, total);
            }
            inner[i] = shape[i];
        }
        strips(0, last, &shape, &mut inner, rest, memo, &mut total);
        memo.insert((shape, content.len()), total);
        total
    }
    go(shape.to_vec(), content, &mut HashMap::new())
}

fn sign(perm: &[usize]) -> i64 {
    let inv = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Rows `nu` of the matrix `D m_nu = sum_kappa d[nu][kappa] m_kappa`, for
/// each `nu` in `parts` (all padded to `n` entries), restricted to columns
/// in `parts`.
pub(crate) fn operator_matrix(parts: &[Partition], n: usize) -> Vec<BTreeMap<usize, PtPoly>> {
    let delta: Vec<usize> = (0..n).rev().collect();
    let perms: Vec<(Vec<usize>, i64)> = distinct_permutations(&delta)
        .into_iter()
        .map(|w| {
            let s = sign(&w.iter().map(|&x| n - 1 - x).collect::<Vec<_>>());
            (w, s)
        })
        .collect();
    parts
        .iter()
        .map(|nu| {
            // Schur coefficients: [x^(mu + delta)] a_delta D m_nu
            let mut schur: BTreeMap<Vec<usize>, PtPoly> = BTreeMap::new();
            for alpha in distinct_permutations(nu.parts()) {
                for (w, s) in &perms {
                    let beta: Vec<usize> = w.iter().zip(&alpha).map(|(a, b)| a + b).collect();
                    if !beta.windows(2).all(|x| x[0] > x[1]) {
                        continue;
                    }
                    let mu: Vec<usize> = beta.iter().zip(&delta).map(|(b, d)| b - d).collect();
                    let entry = schur.entry(mu).or_default();
                    for (a, t) in alpha.iter().zip(w) {
                        add_into(entry, &PtPoly::from([((*a as u32, *t as u32), 1)]), *s);
                    }
                }
            }
            let mut row = BTreeMap::new();
            for (j, kappa) in parts.iter().enumerate() {
                let mut acc = PtPoly::new();
                for (mu, c) in &schur {
                    let k = kostka(mu, kappa.parts()) as i64;
                    if k != 0 {
                        add_into(&mut acc, c, k);
                    }
                }
                if !acc.is_empty() {
                    row.insert(j, acc);
                }
            }
            row
        })
        .collect()
}

/// Cap on the number of Laurent terms tried by [`macdonald_operator_limit`].
const SERIES_PRECISION_LIMIT: i64 = 256;

/// Leading Laurent coefficient at `u0` of the `nvars`-variable `P_lambda`
/// along a one-parameter family `p(u), t(u)`, with the pole order `N` it
/// sits at: `lim (u - u0)^N P_lambda`.
pub(crate) fn macdonald_operator_limit(
    lambda: &Partition,
    nvars: usize,
    params: &Params,
    u0: &Cyclo,
) -> Result<(SymFunExpansion<Cyclo>, u32), SymError> {
    if lambda.length() > nvars {
        return Err(SymError::InvalidInput(format!("{lambda} does not fit in {nvars} variables")));
    }
    if params.nvars() != 1 {
        return Err(SymError::InvalidInput("the series route needs a one-parameter family".into()));
    }
    let d = lambda.size();
    let lam = lambda.trimmed();
    let order = u0.order();
    // lexicographically decreasing, so every nu > mu comes before mu
    let mut set: Vec<Partition> = partitions_of(d, nvars)
        .into_iter()
        .filter(|mu| dominance_leq(&mu.trimmed(), &lam))
        .map(|mu| mu.padded(nvars))
        .collect::<Result<_, _>>()?;
    set.sort_by(|a, b| b.parts().cmp(a.parts()));
    debug_assert_eq!(set[0].trimmed(), lam);
    let matrix = operator_matrix(&set, nvars);
    let pmax = set.iter().flat_map(|m| m.parts()).copied().max().unwrap_or(0) as u32;
    let ppow: Vec<MultiPoly> = (0..=pmax).map(|a| params.p.pow(a)).collect();
    let tpow: Vec<MultiPoly> = (0..nvars as u32).map(|b| params.t.pow(b)).collect();
    let to_poly = |c: &PtPoly| {
        c.iter().fold(MultiPoly::zero(1, order), |acc, (&(a, b), &k)| {
            &acc + &(&ppow[a as usize] * &tpow[b as usize]).scale(&Cyclo::from_int(order, k))
        })
    };
    let eigen: Vec<PtPoly> = (0..set.len()).map(|i| matrix[i].get(&i).cloned().unwrap_or_default()).collect();
    let gaps: Vec<MultiPoly> = eigen
        .iter()
        .map(|e| {
            let mut g = eigen[0].clone();
            add_into(&mut g, e, -1);
            to_poly(&g)
        })
        .collect();
    if let Some(i) = (1..set.len()).find(|&i| gaps[i].is_zero()) {
        return Err(SymError::Singular(format!(
            "eigenvalues of {lam} and {} coincide along the family",
            set[i].trimmed()
        )));
    }
    let entries: Vec<BTreeMap<usize, MultiPoly>> =
        matrix.iter().map(|row| row.iter().map(|(&j, c)| (j, to_poly(c))).collect()).collect();
    let mut prec = 8;
    let sol = 'outer: loop {
        let mut taylor = TaylorAt::new(u0, prec);
        let mut c = vec![Series::build_constant(Cyclo::one(order), prec)];
        for m in 1..set.len() {
            let mut acc = Series::zero(order, prec);
            for (nu, cn) in c.iter().enumerate() {
                if let Some(e) = entries[nu].get(&m) {
                    acc = acc.add(&cn.mul(&taylor.expand(e)));
                }
            }
            let Some(inv) = taylor.expand(&gaps[m]).inv() else {
                prec *= 2;
                if prec > SERIES_PRECISION_LIMIT {
                    break 'outer None;
                }
                continue 'outer;
            };
            c.push(acc.mul(&inv));
        }
        if c.iter().all(|s| s.prec() >= 1) {
            break Some(c);
        }
        prec *= 2;
        if prec > SERIES_PRECISION_LIMIT {
            break None;
        }
    };
    let sol = sol.ok_or_else(|| {
        SymError::Singular(format!("Laurent expansion for {lam} needs more than {SERIES_PRECISION_LIMIT} terms"))
    })?;
    let pole = sol.iter().filter_map(|s| s.val()).map(|v| -v).max().unwrap_or(0).max(0);
    let mut coeffs = BTreeMap::new();
    for (mu, c) in set.iter().zip(&sol) {
        let v = c.coeff(-pole);
        if !v.is_zero() {
            coeffs.insert(mu.clone(), v);
        }
    }
    if coeffs.is_empty() {
        return Err(SymError::Degenerate);
    }
    Ok((SymFunExpansion { nvars, degree: d, coeffs }, pole as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::macdonald::macdonald;
    use crate::polyring::RationalFunction;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[3, 2, 1], &[1, 1, 1, 1, 1, 1]), 16);
        assert_eq!(kostka(&[2, 2], &[2, 1, 1]), 1);
        assert_eq!(kostka(&[2, 1, 1], &[3, 1]), 0);
        assert_eq!(kostka(&[3, 0], &[1, 1, 1]), 1);
    }

    #[test]
    fn diagonal_is_the_eigenvalue() {
        let parts: Vec<Partition> = [[2, 1, 0], [1, 1, 1]].iter().map(|v| p(v)).collect();
        let m = operator_matrix(&parts, 3);
        // p^2 t^2 + p t + 1 and p t^2 + p t + p
        assert_eq!(m[0][&0], PtPoly::from([((2, 2), 1), ((1, 1), 1), ((0, 0), 1)]));
        assert_eq!(m[1][&1], PtPoly::from([((1, 2), 1), ((1, 1), 1), ((1, 0), 1)]));
        assert!(!m[1].contains_key(&0));
    }

    #[test]
    fn eigenvector_is_the_macdonald_polynomial() {
        // P_lambda from Gram-Schmidt satisfies D P = e_lambda P.
        for (lam, n) in [(p(&[2, 1, 0]), 3), (p(&[2, 2, 0]), 3), (p(&[3, 1, 0]), 3)] {
            let sym = macdonald(&lam, n).unwrap();
            let mut set: Vec<Partition> = sym.coeffs.keys().cloned().collect();
            set.sort_by(|a, b| b.parts().cmp(a.parts()));
            let m = operator_matrix(&set, n);
            let pt = |c: &PtPoly| {
                let poly = c.iter().fold(MultiPoly::zero(2, 1), |acc, (&(a, b), &k)| {
                    let mono = MultiPoly::monomial(2, 1, vec![a as i32, b as i32], Cyclo::from_int(1, k));
                    &acc + &mono
                });
                RationalFunction::from_poly(poly)
            };
            let c: Vec<RationalFunction> = set.iter().map(|mu| sym.coeffs[mu].clone()).collect();
            for kappa in 0..set.len() {
                let mut lhs = RationalFunction::zero(2, 1);
                for nu in 0..set.len() {
                    if let Some(e) = m[nu].get(&kappa) {
                        lhs = lhs.checked_add(&c[nu].checked_mul(&pt(e)).unwrap()).unwrap();
                    }
                }
                assert_eq!(lhs, c[kappa].checked_mul(&pt(&m[0][&0])).unwrap(), "{lam} at {}", set[kappa]);
            }
        }
    }
}
