//! Dense matrices over GF(q) with exact row reduction.

use std::fmt;

use thiserror::Error;

use crate::field::{Elem, Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrices are over different fields ({left:?} and {right:?})")]
    FieldMismatch { left: Field, right: Field },
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A generator matrix brought to the shape `(Id | A)` after a column
/// permutation. Systematic position `i` holds original column
/// `permutation[i]`; the first `k` positions are the pivot columns of the
/// RREF in increasing order, the rest are the remaining columns in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    pub k: usize,
    pub a_part: Matrix,
    pub permutation: Vec<usize>,
}

impl SystematicForm {
    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    /// `(Id | A)` in systematic coordinates.
    pub fn matrix(&self) -> Matrix {
        Matrix::identity(self.a_part.field(), self.k)
            .hstack(&self.a_part)
            .unwrap()
    }

    /// `(Id | A)` with every column moved back to its original position.
    pub fn to_original(&self) -> Matrix {
        let sys = self.matrix();
        let mut out = Matrix::zeros(sys.field(), self.k, self.len());
        for (pos, &orig) in self.permutation.iter().enumerate() {
            for r in 0..self.k {
                out.set(r, orig, sys.get(r, pos));
            }
        }
        out
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of elements; all rows must have `cols` entries.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Elem>>) -> Result<Matrix, MatrixError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from canonical integer encodings.
    pub fn from_values<R: AsRef<[u32]>>(field: &Field, rows: &[R]) -> Result<Matrix, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&v| field.elem(v as u64))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_values(&self) -> Vec<Vec<u32>> {
        self.iter_rows()
            .map(|r| r.iter().map(|e| e.value()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn push_row(&mut self, row: &[Elem]) {
        assert_eq!(row.len(), self.cols, "row length");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn check_field(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch {
                left: self.field.clone(),
                right: other.field.clone(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `M · Mᵀ`, the Gram matrix of the rows.
    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(&self.field, self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.field.dot(self.row(i), self.row(j));
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(MatrixError::ShapeMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let rows = (0..self.rows).map(|r| [self.row(r), other.row(r)].concat()).collect();
        Matrix::from_rows(&self.field, self.cols + other.cols, rows)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn block_diagonal(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        let mut out = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// The submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows = self
            .iter_rows()
            .map(|row| cols.iter().map(|&c| row[c]).collect())
            .collect();
        Matrix::from_rows(&self.field, cols.len(), rows).unwrap()
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let rows = rows.iter().map(|&r| self.row(r).to_vec()).collect();
        Matrix::from_rows(&self.field, self.cols, rows).unwrap()
    }

    /// Reduced row echelon form. Pivots are taken column by column from the
    /// left, using the topmost remaining row with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, rank);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            m.scale_row(rank, inv);
            for r in 0..m.rows {
                if r != rank {
                    let c = m.get(r, col);
                    if !c.is_zero() {
                        m.axpy_row(r, rank, f.neg(c));
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { matrix, rank, .. } = self.rref();
        Matrix {
            data: matrix.data[..rank * self.cols].to_vec(),
            rows: rank,
            ..matrix
        }
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per row,
    /// ordered by the free column that carries its leading 1.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Matrix::zeros(f, 0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            out.push_row(&v);
        }
        out
    }

    pub fn systematic_form(&self) -> Result<SystematicForm, MatrixError> {
        let Rref { matrix, pivots, rank } = self.rref();
        if rank < self.rows {
            return Err(MatrixError::RankDeficient { rank, rows: self.rows });
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rest: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let a_part = matrix.select_columns(&rest);
        let mut permutation = pivots;
        permutation.extend(rest);
        Ok(SystematicForm {
            k: rank,
            a_part,
            permutation,
        })
    }

    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch(format!(
                "row spaces in lengths {} and {}",
                self.cols, other.cols
            )));
        }
        Ok(self.row_space_basis() == other.row_space_basis())
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> Result<bool, MatrixError> {
        let stacked = self.vstack(other)?;
        Ok(stacked.rank() == self.rank())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn scale_row(&mut self, r: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// `row[dst] += s · row[src]`.
    pub fn axpy_row(&mut self, dst: usize, src: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    pub fn scale_column(&mut self, c: usize, s: Elem) {
        for r in 0..self.rows {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// Column `i` of the result is column `perm[i]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        self.select_columns(perm)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for row in self.iter_rows() {
            let vals: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", vals.join(" "))?;
        }
        Ok(())
    }
}
