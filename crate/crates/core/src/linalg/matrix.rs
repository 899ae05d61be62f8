//! Dense matrices over an exact field.
//!
//! Shapes and fields are part of the call contract: operations panic on a
//! mismatch instead of returning errors, because a mismatch is a bug in the
//! caller rather than a property of the input data. Data-dependent outcomes
//! (rank, solvability, invertibility) are returned as values.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::field::{FieldScalar, FieldSpec};

use super::subspace::Subspace;

/// A row-major dense matrix with entries in a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldScalar>,
}

impl Matrix {
    /// Builds a matrix from rows; all rows must have equal length >= 1 and all
    /// entries must share one field.
    pub fn from_rows(rows: Vec<Vec<FieldScalar>>) -> Matrix {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        let field = rows[0][0].field();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged rows");
            for e in row {
                assert_eq!(e.field(), field, "mixed fields in one matrix");
            }
            entries.extend(row.iter().cloned());
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldScalar,
    ) -> Matrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.field(), field, "mixed fields in one matrix");
                entries.push(e);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        Matrix::from_fn(
            field,
            n,
            n,
            |i, j| if i == j { field.one() } else { field.zero() },
        )
    }

    /// Diagonal matrix from a nonempty list of diagonal entries.
    pub fn diagonal(entries: &[FieldScalar]) -> Matrix {
        assert!(!entries.is_empty(), "empty diagonal");
        let field = entries[0].field();
        Matrix::from_fn(field, entries.len(), entries.len(), |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                field.zero()
            }
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldScalar::is_zero)
    }

    pub fn row(&self, i: usize) -> &[FieldScalar] {
        assert!(i < self.rows, "row index out of range");
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn scalar_mul(&self, s: &FieldScalar) -> Matrix {
        assert_eq!(s.field(), self.field, "scalar from a different field");
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    pub fn trace(&self) -> FieldScalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(self.field.zero(), |acc, i| &acc + &self[(i, i)])
    }

    /// Applies the matrix to a column vector.
    pub fn mul_vector(&self, v: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// The reduced row-echelon form together with the rank.
    ///
    /// The RREF is canonical: pivots are 1, pivot columns are strictly
    /// increasing, and every pivot column is zero elsewhere. Two row spaces
    /// are equal exactly when their RREFs have identical nonzero rows.
    // Row elimination touches two rows at once, so index loops stay.
    #[allow(clippy::needless_range_loop)]
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.row_vectors();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(r) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, r);
            let inv = m[pivot_row][col].inv().expect("pivot is nonzero");
            for j in col..self.cols {
                m[pivot_row][j] = &m[pivot_row][j] * &inv;
            }
            for r2 in 0..self.rows {
                if r2 != pivot_row && !m[r2][col].is_zero() {
                    let factor = m[r2][col].clone();
                    for j in col..self.cols {
                        m[r2][j] = &m[r2][j] - &(&factor * &m[pivot_row][j]);
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        (Matrix::from_rows(m), pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The right kernel: all v with M v = 0, as a canonical subspace of the
    /// column-index space.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        for i in 0..rank {
            let col = (0..self.cols)
                .find(|&c| !r[(i, c)].is_zero())
                .expect("nonzero row above the rank");
            pivot_cols.push(col);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivot_cols.iter().enumerate() {
                v[p] = -&r[(i, free)];
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field, self.cols, basis)
    }

    /// The column space as a canonical subspace of the row-index space.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_rows(self.field, self.rows, self.transpose().row_vectors())
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let augmented = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        // [A | I] always has row rank n, so the rank of the augmented matrix
        // says nothing; A is invertible exactly when its block reduces to I.
        let (r, _) = augmented.rref();
        for i in 0..n {
            for j in 0..n {
                let expect_one = i == j;
                if r[(i, j)].is_one() != expect_one || (!expect_one && !r[(i, j)].is_zero()) {
                    return None;
                }
            }
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| {
            r[(i, j + n)].clone()
        }))
    }

    /// One solution x of `self * x = rhs`, or `None` when inconsistent. Free
    /// variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, rhs: &[FieldScalar]) -> Option<Vec<FieldScalar>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let augmented = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, rank) = augmented.rref();
        let mut solution = vec![self.field.zero(); self.cols];
        for i in 0..rank {
            let col = (0..=self.cols)
                .find(|&c| !r[(i, c)].is_zero())
                .expect("nonzero row above the rank");
            if col == self.cols {
                return None;
            }
            solution[col] = r[(i, self.cols)].clone();
        }
        Some(solution)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldScalar;

    fn index(&self, (i, j): (usize, usize)) -> &FieldScalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in addition"
        );
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            &self[(i, j)] + &rhs[(i, j)]
        })
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in subtraction"
        );
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            &self[(i, j)] - &rhs[(i, j)]
        })
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in multiplication");
        Matrix::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(self.field.zero(), |acc, k| {
                &acc + &(&self[(i, k)] * &rhs[(k, j)])
            })
        })
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(FieldScalar::to_string).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| rendered.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in rendered.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
