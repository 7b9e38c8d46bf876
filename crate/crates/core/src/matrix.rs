//! Dense matrices whose rows and columns are labelled by module basis
//! vectors `v_{i,j}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

/// Basis label `(i, j)` of `v_{i,j}`.
pub type Label = (usize, usize);

/// Matrix of a linear map: column `c` holds the image of the basis vector
/// `cols[c]`, expanded in the basis `rows`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradedMatrix<S> {
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Vec<S>>,
}

impl<S: Scalar> GradedMatrix<S> {
    pub fn zeros(rows: Vec<Label>, cols: Vec<Label>, n: usize) -> Self {
        let entries = vec![vec![S::zero(n); cols.len()]; rows.len()];
        GradedMatrix { rows, cols, entries }
    }

    pub fn from_entries(rows: Vec<Label>, cols: Vec<Label>, entries: Vec<Vec<S>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Structural(format!(
                "matrix entries do not match a {}×{} label set",
                rows.len(),
                cols.len()
            )));
        }
        Ok(GradedMatrix { rows, cols, entries })
    }

    /// Square matrix with unlabelled (positional) basis.
    pub fn square(entries: Vec<Vec<S>>) -> Result<Self> {
        let labels: Vec<Label> = (0..entries.len()).map(|k| (k, 0)).collect();
        Self::from_entries(labels.clone(), labels, entries)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<S>] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r][c] = v;
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GradedMatrix<T> {
        GradedMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn diagonal(&self) -> Vec<S> {
        (0..self.nrows().min(self.ncols())).map(|k| self.entries[k][k].clone()).collect()
    }

    /// Entrywise equality in the field the scalars map to.
    pub fn field_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.minus(y).vanishes(tol)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().take(r).all(Scalar::is_exact_zero))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().skip(r + 1).all(Scalar::is_exact_zero))
    }

    /// `self · other`; the column labels of `self` must equal the row labels
    /// of `other`.
    pub fn compose(&self, other: &Self, n: usize) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Structural("composed matrices have mismatched bases".into()));
        }
        let mut out = Self::zeros(self.rows.clone(), other.cols.clone(), n);
        for r in 0..self.nrows() {
            for c in 0..other.ncols() {
                let mut acc = S::zero(n);
                for k in 0..self.ncols() {
                    let a = &self.entries[r][k];
                    let b = &other.entries[k][c];
                    if !a.is_exact_zero() && !b.is_exact_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        Ok(out)
    }
}

impl<S: Field> GradedMatrix<S> {
    /// Row echelon form by exact Gaussian elimination; returns the reduced
    /// matrix, pivot columns and the sign of the row permutation.
    fn echelon(&self) -> (Vec<Vec<S>>, Vec<usize>, bool) {
        let mut a = self.entries.clone();
        let rows = self.nrows();
        let cols = self.ncols();
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&k| !a[k][c].is_exact_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                flipped = !flipped;
            }
            let inv = a[r][c].inverse().expect("nonzero pivot");
            for k in 0..rows {
                if k == r || a[k][c].is_exact_zero() {
                    continue;
                }
                let f = a[k][c].times(&inv);
                for j in c..cols {
                    if !a[r][j].is_exact_zero() {
                        let d = f.times(&a[r][j]);
                        a[k][j] = a[k][j].minus(&d);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots, flipped)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols() - self.rank()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.nrows()
    }

    pub fn det(&self, n: usize) -> Result<S> {
        if !self.is_square() {
            return Err(Error::Structural("determinant of a non-square matrix".into()));
        }
        let (a, pivots, flipped) = self.echelon();
        if pivots.len() < self.nrows() {
            return Ok(S::zero(n));
        }
        let mut d = S::one(n);
        for (k, row) in a.iter().enumerate() {
            d = d.times(&row[k]);
        }
        Ok(if flipped { d.negate() } else { d })
    }

    /// A basis of the right kernel, one vector per free column.
    pub fn kernel(&self, n: usize) -> Vec<Vec<S>> {
        let (a, pivots, _) = self.echelon();
        let cols = self.ncols();
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(n); cols];
                v[f] = S::one(n);
                for (r, &p) in pivots.iter().enumerate() {
                    // a[r][p] x_p + a[r][f] x_f = 0
                    let val = a[r][f].negate().divide(&a[r][p]).expect("nonzero pivot");
                    v[p] = val;
                }
                v
            })
            .collect()
    }

    pub fn apply(&self, v: &[S], n: usize) -> Vec<S> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(S::zero(n), |acc, (a, b)| acc.plus(&a.times(b))))
            .collect()
    }
}
