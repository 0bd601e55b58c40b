use std::fmt;

use super::Rational;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of row reduction: the reduced row-echelon form, its rank and the
/// pivot columns (strictly increasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: QMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        QMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let cols = columns.len();
        let mut m = QMatrix::zero(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "row length mismatch");
            entries.extend(row.iter().cloned());
        }
        QMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        let mut m = QMatrix::zero(self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                *m.at_mut(i, jj) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> QMatrix {
        let mut m = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn mat_mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut m = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for t in 0..self.cols {
                    acc += &(self.at(i, t) * other.at(t, j));
                }
                *m.at_mut(i, j) = acc;
            }
        }
        m
    }

    /// Reduced row-echelon form by exact Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // find a nonzero entry in this column at or below pivot_row
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.at(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.row_axpy(r, pivot_row, &-factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            reduced: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel, in RREF order, each vector normalized so
    /// its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = -reduced.at(*row, free).clone();
                }
            }
            // normalize first nonzero entry to 1
            if let Some(first) = vec.iter().position(|v| !v.is_zero()) {
                let inv = vec[first].recip();
                for v in vec.iter_mut() {
                    *v = &*v * &inv;
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = QMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rational::one();
        }
        let r = aug.rref();
        if r.rank < n || r.pivots.iter().take(n).ne((0..n).collect::<Vec<_>>().iter()) {
            return None;
        }
        let mut inv = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = r.reduced.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let ia = a * self.cols + j;
            let ib = b * self.cols + j;
            self.entries.swap(ia, ib);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Rational) {
        for j in 0..self.cols {
            let idx = row * self.cols + j;
            if !self.entries[idx].is_zero() {
                self.entries[idx] *= factor;
            }
        }
    }

    /// row_target += factor * row_source
    fn row_axpy(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let s = self.at(source, j).clone();
            if !s.is_zero() {
                *self.at_mut(target, j) += &(&s * factor);
            }
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
