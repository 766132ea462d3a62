//! Dense matrices over a [`Field`] and the elimination routines built on them.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use super::vector::{self, Vector};

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vector::zeros(field, rows * cols) }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(field: Field, rows: Vec<Vector>) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows_with_cols(field, rows, cols)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when `rows` is empty.
    pub fn from_rows_with_cols(field: Field, rows: Vec<Vector>, cols: usize) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { field, rows: n, cols, data }
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in vector::support(self.row(i)) {
                let src = rhs.row(k);
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                vector::axpy(dst, a, src);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| vector::dot(self.row(i), v, self.field))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &rhs.data),
        }
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Two-sided inverse, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let (r, e, pivots) = rref_with_transform(self);
        if pivots.len() != self.rows {
            return None;
        }
        debug_assert!(r.is_identity());
        Some(e)
    }

    /// Column space as a canonical subspace.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, &self.columns())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn eliminate(m: &mut Matrix, mut companion: Option<&mut Matrix>) -> Vec<usize> {
    let field = m.field;
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..m.cols {
        if prow == m.rows {
            break;
        }
        let Some(found) = (prow..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        if found != prow {
            swap_rows(m, found, prow);
            if let Some(e) = companion.as_deref_mut() {
                swap_rows(e, found, prow);
            }
        }
        let inv = m[(prow, col)].inverse().expect("nonzero pivot");
        scale_row(m, prow, &inv);
        if let Some(e) = companion.as_deref_mut() {
            scale_row(e, prow, &inv);
        }
        for r in 0..m.rows {
            if r == prow || m[(r, col)].is_zero() {
                continue;
            }
            let factor = -&m[(r, col)];
            add_row_multiple(m, r, prow, &factor);
            if let Some(e) = companion.as_deref_mut() {
                add_row_multiple(e, r, prow, &factor);
            }
        }
        debug_assert!(m[(prow, col)] == field.one());
        pivots.push(col);
        prow += 1;
    }
    pivots
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for j in 0..m.cols {
        m.data.swap(a * m.cols + j, b * m.cols + j);
    }
}

fn scale_row(m: &mut Matrix, r: usize, c: &Scalar) {
    for x in &mut m.data[r * m.cols..(r + 1) * m.cols] {
        *x *= c;
    }
}

fn add_row_multiple(m: &mut Matrix, dst: usize, src: usize, c: &Scalar) {
    let cols = m.cols;
    let src_row: Vector = m.row(src).to_vec();
    vector::axpy(&mut m.data[dst * cols..(dst + 1) * cols], c, &src_row);
}

/// Reduced row echelon form and its pivot columns.
///
/// Pivots are found by scanning columns left to right and taking the first
/// row at or below the current position with a nonzero entry, so the result
/// depends only on the input.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut r = m.clone();
    let pivots = eliminate(&mut r, None);
    (r, pivots)
}

/// Like [`rref`], also returning the accumulated invertible row-operation
/// matrix `E` with `E * m = R`.
pub fn rref_with_transform(m: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
    let mut r = m.clone();
    let mut e = Matrix::identity(m.field, m.rows);
    let pivots = eliminate(&mut r, Some(&mut e));
    (r, e, pivots)
}

/// Canonical basis of the null space of `m`.
pub fn kernel(m: &Matrix) -> Subspace {
    let field = m.field;
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vector::unit(field, m.cols, free);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            v
        })
        .collect();
    Subspace::span(field, m.cols, &vectors)
}

/// One solution of `m x = b` with free variables set to zero, or `None` when
/// the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(m.rows, b.len(), "right-hand side length mismatch");
    let field = m.field;
    let mut aug = Matrix::zeros(field, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vector::zeros(field, m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    Some(x)
}

/// Kronecker product: `(a ⊗ b)[(i*rb + k, j*cb + l)] = a[i,j] * b[k,l]`,
/// so `(a ⊗ b)(v ⊗ w) = a v ⊗ b w` under [`vector::outer`].
pub fn tensor_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.field, a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * b.rows + k, j * b.cols + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::from_rows(
            f,
            rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect(),
        )
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Matrix::identity(Field::Rationals, 2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let (r, p) = rref(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_small_cases() {
        assert!(kernel(&Matrix::identity(Field::Rationals, 3)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(Field::Rationals, 3, 3)).dim(), 3);
        let m = q(&[&[1, 1, 0]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn solve_cases() {
        let f = Field::Rationals;
        let b = vec![f.from_i64(3), f.from_i64(-5)];
        assert_eq!(solve(&Matrix::identity(f, 2), &b), Some(b.clone()));
        assert_eq!(solve(&q(&[&[1, 2], &[2, 4]]), &[f.from_i64(1), f.from_i64(3)]), None);
        let m = q(&[&[1, 2, 3], &[0, 1, 1]]);
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // free variable is zero
        assert!(x[2].is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kronecker_shapes_and_identity() {
        let f = Field::Rationals;
        let k = tensor_matrix(&Matrix::identity(f, 2), &Matrix::identity(f, 3));
        assert_eq!(k, Matrix::identity(f, 6));
        let a = Matrix::zeros(f, 2, 3);
        let b = Matrix::zeros(f, 4, 5);
        let k = tensor_matrix(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn kronecker_on_basis_tensors() {
        let f = Field::Rationals;
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 5, -1], &[2, 2, 7], &[1, 0, 0]]);
        let k = tensor_matrix(&a, &b);
        for i in 0..2 {
            for j in 0..3 {
                let lhs = k.mul_vec(&vector::outer(
                    &vector::unit(f, 2, i),
                    &vector::unit(f, 3, j),
                    f,
                ));
                let rhs = vector::outer(&a.column(i), &b.column(j), f);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn prime_field_elimination() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_rows(f, vec![vec![f.from_i64(2), f.from_i64(4)], vec![f.from_i64(1), f.from_i64(2)]]);
        assert_eq!(m.rank(), 1);
    }
}
