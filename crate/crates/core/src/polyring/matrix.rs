use super::{MultiPoly, PolyError, RationalFunction};
use crate::ring::det_bareiss;

/// Dense matrix of rational functions, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }
}

/// Determinant: each row is scaled by the product of its distinct
/// denominators, the resulting polynomial matrix goes through Bareiss
/// elimination, and the scale is divided back out.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<RationalFunction, PolyError> {
    if m.rows != m.cols {
        return Err(PolyError::Shape(format!("{}x{} is not square", m.rows, m.cols)));
    }
    if m.rows == 0 {
        return Err(PolyError::Shape("empty matrix".into()));
    }
    let first = m.get(0, 0);
    let mut scale = MultiPoly::one(first.nvars(), first.order());
    let mut lifted = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut dens: Vec<&MultiPoly> = Vec::new();
        for j in 0..m.cols {
            let d = m.get(i, j).den();
            if !d.is_constant() && !dens.contains(&d) {
                dens.push(d);
            }
        }
        let row_den = dens
            .iter()
            .try_fold(MultiPoly::one(first.nvars(), first.order()), |a, d| a.checked_mul(d))?;
        let row = (0..m.cols)
            .map(|j| {
                let e = m.get(i, j);
                let cof = row_den.div_exact(e.den())?;
                e.num().checked_mul(&cof)
            })
            .collect::<Result<Vec<_>, _>>()?;
        scale = scale.checked_mul(&row_den)?;
        lifted.push(row);
    }
    let det = det_bareiss(lifted).expect("square nonempty matrix");
    if det.is_zero() {
        return Ok(RationalFunction::zero(first.nvars(), first.order()));
    }
    RationalFunction::new(det, scale)
}
