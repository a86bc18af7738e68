//! Incremental row reduction, for kernels of systems with many more rows
//! than unknowns.

use super::{Matrix, Scalar, SubspaceBasis};

/// A row space kept in reduced row echelon form as rows are pushed.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    /// `(pivot, row)` sorted by pivot; each row is 1 at its pivot and 0 at
    /// every other pivot.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Add a row; returns whether it increased the rank.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        for (p, r) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = row[p].inv().expect("pivot is nonzero");
        for x in row.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, r) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, row));
        true
    }

    pub fn to_matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            return Matrix::zeros(0, self.cols);
        }
        Matrix::from_rows(self.rows.iter().map(|(_, r)| r.clone()).collect()).expect("rows have equal length")
    }

    /// Kernel of the accumulated system, in the same parametric form as
    /// [`Matrix::kernel_basis`].
    pub fn kernel(&self) -> SubspaceBasis {
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        let vectors = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); n];
                v[f] = Scalar::one();
                for (p, r) in &self.rows {
                    v[*p] = -&r[f];
                }
                v
            })
            .collect();
        SubspaceBasis {
            ambient_dim: n,
            vectors,
        }
    }
}
