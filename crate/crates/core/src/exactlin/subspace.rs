//! Canonical subspaces and quotients.

use super::matrix::{rref, Matrix};
use super::scalar::{Field, Scalar};
use super::vector::{self, Vector};

/// A subspace of `field^ambient_dim`, stored by its reduced echelon basis.
///
/// Two subspaces are equal iff their basis lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vector::unit(field, ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of `vectors`, each of length `ambient_dim`.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vector]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient_dim);
        }
        let m = Matrix::from_rows_with_cols(field, vectors.to_vec(), ambient_dim);
        let (r, pivots) = rref(&m);
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field, ambient_dim, basis, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, `None` when `v` lies outside.
    ///
    /// Because each basis vector has a one at its own pivot and zeros at the
    /// others, the coordinates are the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim, "vector outside ambient space");
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combination(&coords) == v).then_some(coords)
    }

    /// `Σ coords[i] * basis[i]`.
    pub fn combination(&self, coords: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut out, c, b);
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Matrix whose columns are the basis vectors (ambient × dim).
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis)
    }
}

/// A quotient `field^n / span(relations)` with chosen coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// The relation span.
    pub relations: Subspace,
    /// Ambient → quotient coordinates (`q × n`).
    pub projection: Matrix,
    /// Quotient coordinates → ambient representatives (`n × q`).
    pub section: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        self.section.mul_vec(coords)
    }
}

/// Builds the quotient of `field^ambient_dim` by `relations`.
///
/// The quotient coordinates are the non-pivot columns of the echelon form of
/// the relation span: the section sends quotient basis vector `j` to the
/// standard basis vector at the `j`-th non-pivot column, and the projection
/// reduces a vector modulo the span and reads off those columns.
pub fn quotient_basis(field: Field, ambient_dim: usize, relations: &[Vector]) -> Quotient {
    let span = Subspace::span(field, ambient_dim, relations);
    let mut is_pivot = vec![false; ambient_dim];
    for &p in span.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();

    let mut section = Matrix::zeros(field, ambient_dim, free.len());
    for (j, &c) in free.iter().enumerate() {
        section[(c, j)] = field.one();
    }

    let mut projection = Matrix::zeros(field, free.len(), ambient_dim);
    for (j, &c) in free.iter().enumerate() {
        projection[(j, c)] = field.one();
    }
    // e_p ≡ e_p - r for the relation r with pivot p, which vanishes on all pivots.
    for (r, &p) in span.basis().iter().zip(span.pivots()) {
        for (j, &c) in free.iter().enumerate() {
            projection[(j, p)] = -&r[c];
        }
    }

    Quotient { relations: span, projection, section }
}
