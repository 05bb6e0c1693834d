//! Exact rank and null-space computation over cyclotomic fields.

use rayon::prelude::*;

use crate::scalar::CycloScalar;

/// Rows below this count are eliminated sequentially.
const PARALLEL_ROWS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<CycloScalar>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![vec![CycloScalar::zero(1); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = CycloScalar::one(1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<CycloScalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| CycloScalar::from_int(1, v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloScalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloScalar) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycloScalar] {
        &self.data[r]
    }

    pub fn push_row(&mut self, row: Vec<CycloScalar>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.push(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.data[r][c].clone()).collect())
            .collect();
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(CycloScalar::zero(1), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&mut work, self.cols, false).len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut work = self.data.clone();
        let pivots = eliminate(&mut work, self.cols, true);
        (
            ExactMatrix {
                rows: self.rows,
                cols: self.cols,
                data: work,
            },
            pivots,
        )
    }

    /// Basis of the right null space.
    ///
    /// One vector per free column, in increasing column order; each has a 1
    /// in its own free column and 0 in every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<CycloScalar>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![CycloScalar::zero(1); self.cols];
                v[free] = CycloScalar::one(1);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.data[row][free].clone();
                }
                v
            })
            .collect()
    }
}

/// A growing set of linearly independent vectors kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct IncrementalBasis {
    rows: Vec<(usize, Vec<CycloScalar>)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `v` minus its projection onto the current span along the pivots.
    pub fn reduce(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        v
    }

    /// Add `v` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, v: &[CycloScalar]) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        let v: Vec<CycloScalar> = v.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &(&c * r);
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    /// The reduced echelon rows, sorted by pivot column.
    pub fn echelon_rows(&self) -> Vec<Vec<CycloScalar>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// In-place elimination; returns pivot columns. Pivot rows end up at the top.
/// With `reduce`, pivots are scaled to 1 and cleared above as well.
fn eliminate(rows: &mut [Vec<CycloScalar>], cols: usize, reduce: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        // smallest nonzero entry as pivot
        let candidate = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].height());
        let Some(pr) = candidate else { continue };
        rows.swap(top, pr);
        let inv = rows[top][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<CycloScalar> = rows[top]
            .iter()
            .enumerate()
            .map(|(c, v)| {
                if c < col {
                    v.clone()
                } else if c == col {
                    CycloScalar::one(1)
                } else if v.is_zero() {
                    v.clone()
                } else {
                    v * &inv
                }
            })
            .collect();
        let support: Vec<usize> = (col + 1..cols).filter(|&c| !pivot_row[c].is_zero()).collect();
        rows[top] = pivot_row.clone();
        let update = |r: usize, row: &mut Vec<CycloScalar>| {
            if r == top || (!reduce && r < top) {
                return;
            }
            if row[col].is_zero() {
                return;
            }
            let factor = row[col].clone();
            for &c in &support {
                let delta = &factor * &pivot_row[c];
                row[c] -= &delta;
            }
            row[col] = CycloScalar::zero(1);
        };
        if rows.len() - top >= PARALLEL_ROWS {
            rows.par_iter_mut()
                .enumerate()
                .for_each(|(r, row)| update(r, row));
        } else {
            for (r, row) in rows.iter_mut().enumerate() {
                update(r, row);
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        let m = ExactMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert!(m.rank() < 3);
        assert_eq!(m.rank(), 2);
        assert_eq!(ExactMatrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let z = ExactMatrix::zeros(2, 2);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 2);
        assert!(k[0][0].is_one() && k[0][1].is_zero());
        assert!(k[1][1].is_one() && k[1][0].is_zero());
        let m = ExactMatrix::from_ints(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![CycloScalar::from_int(1, -1), CycloScalar::one(1)]]);
    }

    #[test]
    fn incremental_basis_detects_dependence() {
        let v = |a: &[i64]| a.iter().map(|&x| CycloScalar::from_int(1, x)).collect::<Vec<_>>();
        let mut b = IncrementalBasis::new();
        assert!(b.insert(&v(&[1, 2, 3])));
        assert!(b.insert(&v(&[0, 1, 1])));
        assert!(!b.insert(&v(&[2, 5, 7])));
        assert!(b.insert(&v(&[0, 0, 5])));
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn kernel_over_gaussian_integers() {
        let i = CycloScalar::root_of_unity(4);
        let one = CycloScalar::one(4);
        // [1 i; i -1] has rank 1
        let m = ExactMatrix::from_rows(2, vec![vec![one.clone(), i.clone()], vec![i.clone(), -one]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(CycloScalar::is_zero));
    }
}
