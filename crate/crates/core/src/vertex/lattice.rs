//! Configurations of the fused model on the n x n grid with domain-wall
//! boundary, their partition function by row transfer, and higher-spin
//! alternating sign matrices.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::fusion::WeightTensor;
use super::VertexError;
use crate::ring::Ring;

/// Edge labels of one configuration.
///
/// `h_edges[i][j]` is the horizontal edge of row `i` to the left of column
/// `j` (`j = 0` is the left boundary, `j = n` the right one).
/// `v_edges[i][j]` is the vertical edge of column `j` above row `i`
/// (`i = 0` is the top boundary, `i = n` the bottom one). Rows are numbered
/// from the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridConfig {
    pub n: usize,
    pub ell: usize,
    pub h_edges: Vec<Vec<usize>>,
    pub v_edges: Vec<Vec<usize>>,
}

impl GridConfig {
    /// Checks shapes, label range, boundary labels and conservation
    /// `left + bottom = right + top` at every vertex.
    pub fn validate(&self) -> Result<(), VertexError> {
        let (n, l) = (self.n, self.ell);
        let bad = |m: &str| Err(VertexError::Invariant(m.to_string()));
        if self.h_edges.len() != n || self.h_edges.iter().any(|r| r.len() != n + 1) {
            return bad("h_edges must be n x (n+1)");
        }
        if self.v_edges.len() != n + 1 || self.v_edges.iter().any(|r| r.len() != n) {
            return bad("v_edges must be (n+1) x n");
        }
        if self.h_edges.iter().chain(&self.v_edges).flatten().any(|&e| e > l) {
            return bad("edge label out of range");
        }
        for i in 0..n {
            if self.h_edges[i][0] != l || self.h_edges[i][n] != 0 {
                return bad("horizontal boundary must be l on the left and 0 on the right");
            }
            if self.v_edges[0][i] != l || self.v_edges[n][i] != 0 {
                return bad("vertical boundary must be l on top and 0 at the bottom");
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.h_edges[i][j] + self.v_edges[i + 1][j] != self.h_edges[i][j + 1] + self.v_edges[i][j] {
                    return bad("conservation fails");
                }
            }
        }
        Ok(())
    }

    /// Product of vertex weights; `weights[i][j]` is the tensor at row `i`,
    /// column `j`.
    pub fn weight<R: Ring>(&self, weights: &[Vec<WeightTensor<R>>]) -> R {
        let mut acc = weights[0][0].get(0, 0, 0, 0).one_like();
        for i in 0..self.n {
            for j in 0..self.n {
                let w = weights[i][j].get(
                    self.h_edges[i][j],
                    self.v_edges[i + 1][j],
                    self.h_edges[i][j + 1],
                    self.v_edges[i][j],
                );
                acc = acc.mul_ref(w);
            }
        }
        acc
    }
}

/// An n x n matrix with entries in `-l..=l`, line sums `l` and every partial
/// line sum in `0..=l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HigherSpinAsm(pub Vec<Vec<i64>>);

impl HigherSpinAsm {
    pub fn is_valid(&self, ell: usize) -> bool {
        let m = &self.0;
        let n = m.len();
        let l = ell as i64;
        if m.iter().any(|r| r.len() != n) {
            return false;
        }
        let line_ok = |it: &mut dyn Iterator<Item = i64>| {
            let mut s = 0;
            for v in it {
                s += v;
                if !(0..=l).contains(&s) {
                    return false;
                }
            }
            s == l
        };
        (0..n).all(|i| line_ok(&mut m[i].iter().copied())) && (0..n).all(|j| line_ok(&mut (0..n).map(|i| m[i][j])))
    }
}

/// Entry `(i, j)` is the label above vertex `(i, j)` minus the label below.
pub fn config_to_hsasm(c: &GridConfig) -> Result<HigherSpinAsm, VertexError> {
    c.validate()?;
    Ok(HigherSpinAsm(
        (0..c.n)
            .map(|i| {
                (0..c.n)
                    .map(|j| c.v_edges[i][j] as i64 - c.v_edges[i + 1][j] as i64)
                    .collect()
            })
            .collect(),
    ))
}

/// Inverse of [`config_to_hsasm`]: vertical labels are `l` minus column
/// partial sums, horizontal labels `l` minus row partial sums.
pub fn hsasm_to_config(a: &HigherSpinAsm, ell: usize) -> Result<GridConfig, VertexError> {
    if !a.is_valid(ell) {
        return Err(VertexError::Invariant("not a higher-spin ASM".into()));
    }
    let n = a.0.len();
    let l = ell as i64;
    let mut v = vec![vec![ell; n]; n + 1];
    let mut h = vec![vec![ell; n + 1]; n];
    for i in 0..n {
        for j in 0..n {
            v[i + 1][j] = (v[i][j] as i64 - a.0[i][j]) as usize;
        }
    }
    for (i, row) in h.iter_mut().enumerate() {
        let mut s = 0;
        for j in 0..n {
            s += a.0[i][j];
            row[j + 1] = (l - s) as usize;
        }
    }
    let c = GridConfig {
        n,
        ell,
        h_edges: h,
        v_edges: v,
    };
    c.validate()?;
    Ok(c)
}

fn check_states(n: usize, ell: usize, max_states: usize) -> Result<(), VertexError> {
    let states = (ell as f64 + 1.0).powi(n as i32);
    if states > max_states as f64 {
        return Err(VertexError::Resource(format!(
            "{states} transfer states exceed the cap of {max_states}"
        )));
    }
    Ok(())
}

/// One row of the lattice: from the labels below the row (`below`) and the
/// left boundary label, all admissible label rows above with their weight.
/// When `right` is `Some(r)` the final horizontal label must equal `r`;
/// otherwise it must equal the left label (periodic row).
fn row_step<R: Ring>(
    tensors: &[WeightTensor<R>],
    below: &[usize],
    left: usize,
    right: Option<usize>,
    out: &mut BTreeMap<Vec<usize>, R>,
    weight: R,
) {
    let ell = tensors[0].ell;
    #[allow(clippy::too_many_arguments)]
    fn rec<R: Ring>(
        j: usize,
        alpha: usize,
        tensors: &[WeightTensor<R>],
        below: &[usize],
        end: usize,
        ell: usize,
        cur: &mut Vec<usize>,
        w: R,
        out: &mut BTreeMap<Vec<usize>, R>,
    ) {
        if j == below.len() {
            if alpha == end {
                let e = out.entry(cur.clone()).or_insert_with(|| w.zero_like());
                *e = e.add_ref(&w);
            }
            return;
        }
        let beta = below[j];
        for eta in 0..=ell.min(alpha + beta) {
            let gamma = alpha + beta - eta;
            if gamma > ell {
                continue;
            }
            let vw = tensors[j].get(alpha, beta, gamma, eta);
            if vw.is_zero() {
                continue;
            }
            cur.push(eta);
            rec(j + 1, gamma, tensors, below, end, ell, cur, w.mul_ref(vw), out);
            cur.pop();
        }
    }
    let end = right.unwrap_or(left);
    rec(0, left, tensors, below, end, ell, &mut Vec::new(), weight, out);
}

/// Partition function with domain-wall boundary by row transfer from the
/// bottom. `weights[i][j]` is the fused tensor at row `i` (from the top),
/// column `j`.
pub fn partition_function<R: Ring>(weights: &[Vec<WeightTensor<R>>], max_states: usize) -> Result<R, VertexError> {
    let n = weights.len();
    if n == 0 || weights.iter().any(|r| r.len() != n) {
        return Err(VertexError::InvalidInput("weights must be a nonempty n x n grid".into()));
    }
    let ell = weights[0][0].ell;
    check_states(n, ell, max_states)?;
    let one = weights[0][0].get(0, 0, 0, 0).one_like();
    let mut states: BTreeMap<Vec<usize>, R> = BTreeMap::new();
    states.insert(vec![0; n], one.clone());
    for i in (0..n).rev() {
        let mut next = BTreeMap::new();
        for (below, w) in &states {
            row_step(&weights[i], below, ell, Some(0), &mut next, w.clone());
        }
        states = next;
    }
    Ok(states.remove(&vec![ell; n]).unwrap_or_else(|| one.zero_like()))
}

/// Periodic row transfer matrix on the `(l+1)^n` vertical states, indexed
/// in base `l+1` with the first column as the most significant digit.
/// Entry `[top][bottom]` sums over the horizontal label closing the row.
pub fn row_transfer_matrix<R: Ring>(tensors: &[WeightTensor<R>], max_states: usize) -> Result<Vec<Vec<R>>, VertexError> {
    let n = tensors.len();
    let ell = tensors[0].ell;
    check_states(n, ell, max_states)?;
    let s = ell + 1;
    let total = s.pow(n as u32);
    let decode = |mut x: usize| {
        let mut v = vec![0; n];
        for j in (0..n).rev() {
            v[j] = x % s;
            x /= s;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |a, &d| a * s + d);
    let one = tensors[0].get(0, 0, 0, 0).one_like();
    let mut m = vec![vec![one.zero_like(); total]; total];
    for b in 0..total {
        let below = decode(b);
        let mut out = BTreeMap::new();
        for left in 0..=ell {
            row_step(tensors, &below, left, None, &mut out, one.clone());
        }
        for (top, w) in out {
            m[encode(&top)][b] = w;
        }
    }
    Ok(m)
}

/// Every domain-wall configuration, by depth-first search row by row.
pub fn enumerate_configs(n: usize, ell: usize, max_configs: usize) -> Result<Vec<GridConfig>, VertexError> {
    if n == 0 || ell == 0 {
        return Err(VertexError::InvalidInput("n and l must be positive".into()));
    }
    struct Search {
        n: usize,
        ell: usize,
        h: Vec<Vec<usize>>,
        v: Vec<Vec<usize>>,
        out: Vec<GridConfig>,
        cap: usize,
    }
    impl Search {
        fn cell(&mut self, i: usize, j: usize) -> Result<(), VertexError> {
            let (n, l) = (self.n, self.ell);
            if i == n {
                if self.v[n].iter().all(|&b| b == 0) {
                    if self.out.len() == self.cap {
                        return Err(VertexError::Resource(format!("more than {} configurations", self.cap)));
                    }
                    self.out.push(GridConfig {
                        n,
                        ell: l,
                        h_edges: self.h.clone(),
                        v_edges: self.v.clone(),
                    });
                }
                return Ok(());
            }
            if j == n {
                return if self.h[i][n] == 0 { self.cell(i + 1, 0) } else { Ok(()) };
            }
            let (alpha, eta) = (self.h[i][j], self.v[i][j]);
            for beta in 0..=l {
                if alpha + beta < eta || alpha + beta - eta > l {
                    continue;
                }
                self.v[i + 1][j] = beta;
                self.h[i][j + 1] = alpha + beta - eta;
                self.cell(i, j + 1)?;
            }
            Ok(())
        }
    }
    let mut s = Search {
        n,
        ell,
        h: vec![vec![ell; n + 1]; n],
        v: vec![vec![ell; n]; n + 1],
        out: Vec::new(),
        cap: max_configs,
    };
    s.cell(0, 0)?;
    Ok(s.out)
}

/// Brute-force list of higher-spin ASMs: rows with valid partial sums,
/// combined under the column partial-sum constraints.
pub fn enumerate_hsasm(n: usize, ell: usize) -> Vec<HigherSpinAsm> {
    let l = ell as i64;
    let mut rows = Vec::new();
    fn gen_rows(n: usize, l: i64, cur: &mut Vec<i64>, s: i64, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            if s == l {
                out.push(cur.clone());
            }
            return;
        }
        for v in -l..=l {
            if (0..=l).contains(&(s + v)) {
                cur.push(v);
                gen_rows(n, l, cur, s + v, out);
                cur.pop();
            }
        }
    }
    gen_rows(n, l, &mut Vec::new(), 0, &mut rows);
    let mut out = Vec::new();
    fn stack(
        rows: &[Vec<i64>],
        n: usize,
        l: i64,
        col: &mut Vec<i64>,
        cur: &mut Vec<Vec<i64>>,
        out: &mut Vec<HigherSpinAsm>,
    ) {
        if cur.len() == n {
            if col.iter().all(|&c| c == l) {
                out.push(HigherSpinAsm(cur.clone()));
            }
            return;
        }
        for r in rows {
            if col.iter().zip(r).all(|(c, v)| (0..=l).contains(&(c + v))) {
                for (c, v) in col.iter_mut().zip(r) {
                    *c += v;
                }
                cur.push(r.clone());
                stack(rows, n, l, col, cur, out);
                cur.pop();
                for (c, v) in col.iter_mut().zip(r) {
                    *c -= v;
                }
            }
        }
    }
    stack(&rows, n, l, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

/// Outcome of checking that [`config_to_hsasm`] is a bijection.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub configs: usize,
    pub matrices: usize,
    pub injective: bool,
    pub images_valid: bool,
    pub round_trip: bool,
    pub bijective: bool,
}

pub fn verify_bijection(n: usize, ell: usize, max_configs: usize) -> Result<BijectionReport, VertexError> {
    let configs = enumerate_configs(n, ell, max_configs)?;
    let matrices: BTreeSet<HigherSpinAsm> = enumerate_hsasm(n, ell).into_iter().collect();
    let mut images = BTreeSet::new();
    let mut images_valid = true;
    let mut round_trip = true;
    for c in &configs {
        let a = config_to_hsasm(c)?;
        images_valid &= matrices.contains(&a);
        round_trip &= hsasm_to_config(&a, ell)? == *c;
        images.insert(a);
    }
    let injective = images.len() == configs.len();
    Ok(BijectionReport {
        configs: configs.len(),
        matrices: matrices.len(),
        injective,
        images_valid,
        round_trip,
        bijective: injective && images_valid && round_trip && images.len() == matrices.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CyclotomicNumber as Cyclo;
    use crate::vertex::fusion::fused_r;

    #[test]
    fn asm_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_hsasm(n, 1).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42]);
    }

    #[test]
    fn forced_single_vertex() {
        let cs = enumerate_configs(1, 2, 10).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(config_to_hsasm(&cs[0]).unwrap(), HigherSpinAsm(vec![vec![2]]));
    }

    #[test]
    fn two_by_two_spin_half() {
        let cs = enumerate_configs(2, 1, 10).unwrap();
        let mut asms: Vec<_> = cs.iter().map(|c| config_to_hsasm(c).unwrap().0).collect();
        asms.sort();
        assert_eq!(asms, vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, 1]]]);
    }

    #[test]
    fn bijections() {
        for (n, l) in [(2, 1), (3, 1), (2, 2)] {
            let r = verify_bijection(n, l, 100_000).unwrap();
            assert!(r.bijective, "{n} {l}: {r:?}");
        }
    }

    #[test]
    fn transfer_matches_configuration_sum() {
        let (q, qi) = (Cyclo::from_frac(1, 5, 2), Cyclo::from_frac(1, 2, 5));
        let xs = [Cyclo::from_int(1, 2), Cyclo::from_frac(1, 3, 7)];
        let ys = [Cyclo::from_int(1, -3), Cyclo::from_frac(1, 5, 4)];
        for ell in 1..=2 {
            let w: Vec<Vec<_>> = xs
                .iter()
                .map(|x| ys.iter().map(|y| fused_r(ell, x, y, &q, &qi).unwrap()).collect())
                .collect();
            let direct = enumerate_configs(2, ell, 1000)
                .unwrap()
                .iter()
                .fold(Cyclo::zero(1), |a, c| &a + &c.weight(&w));
            assert_eq!(partition_function(&w, 1000).unwrap(), direct);
        }
    }

    #[test]
    fn single_c_vertex() {
        let (q, qi) = (Cyclo::from_frac(1, 5, 2), Cyclo::from_frac(1, 2, 5));
        let (x, y) = (Cyclo::from_int(1, 3), Cyclo::from_int(1, 7));
        let w = vec![vec![fused_r(1, &x, &y, &q, &qi).unwrap()]];
        let z = partition_function(&w, 10).unwrap();
        assert_eq!(z, &(&q - &qi) * &(&x * &y));
        assert!(matches!(partition_function(&w, 1), Err(VertexError::Resource(_))));
    }
}
