//! Dense matrices of exact integers and row Hermite normal form.

use std::fmt;

use crate::scalar::Scalar;

/// Row-major matrix of exact integers; each row is one tensor or lattice
/// vector in a fixed coordinate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "rows must have equal length");
            data.extend(row);
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        if self.rows == 0 && self.cols == 0 {
            self.cols = row.len();
        }
        assert_eq!(row.len(), self.cols, "row length must match column count");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = std::mem::replace(&mut self.data[r * self.cols + c], T::zero());
            self.data[r * self.cols + c] = -v;
        }
    }

    /// row[dst] -= q * row[src]
    pub fn sub_scaled_row(&mut self, dst: usize, src: usize, q: &T) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q.clone() * self.get(src, c).clone();
            let v = std::mem::replace(&mut self.data[dst * self.cols + c], T::zero());
            self.data[dst * self.cols + c] = v - delta;
        }
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(T::is_zero)
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.cols);
        self.rows = rows;
    }

    /// Canonical row Hermite normal form of the row span: pivots positive and
    /// strictly right-descending, entries above each pivot reduced into
    /// [0, pivot). Zero rows are dropped, so the result has full row rank.
    pub fn hermite_normal_form(&self) -> IntMatrix<T> {
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            loop {
                // row with smallest nonzero |entry| in this column, at or below pivot_row
                let mut best: Option<usize> = None;
                for r in pivot_row..m.rows {
                    if !m.get(r, col).is_zero()
                        && best.is_none_or(|b| m.get(r, col).abs() < m.get(b, col).abs())
                    {
                        best = Some(r);
                    }
                }
                let Some(best) = best else { break };
                m.swap_rows(pivot_row, best);
                if m.get(pivot_row, col).is_negative() {
                    m.negate_row(pivot_row);
                }
                let pivot = m.get(pivot_row, col).clone();
                let mut cleared = true;
                for r in pivot_row + 1..m.rows {
                    if !m.get(r, col).is_zero() {
                        let q = m.get(r, col).div_floor(&pivot);
                        m.sub_scaled_row(r, pivot_row, &q);
                        if !m.get(r, col).is_zero() {
                            cleared = false;
                        }
                    }
                }
                if cleared {
                    for r in 0..pivot_row {
                        let q = m.get(r, col).div_floor(&pivot);
                        m.sub_scaled_row(r, pivot_row, &q);
                    }
                    pivot_row += 1;
                    break;
                }
            }
        }
        m.truncate_rows(pivot_row);
        m
    }

    /// Column of the leading nonzero entry of each row. Meaningful on a
    /// matrix in Hermite normal form.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .find(|&c| !self.get(r, c).is_zero())
                    .expect("no zero rows in an HNF basis")
            })
            .collect()
    }
}

impl<T: Scalar> fmt::Display for IntMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
