//! Structure-constant presentations of algebras, coalgebras and weak Hopf
//! algebras on a fixed basis `e_0, …, e_{n-1}`.
//!
//! Tensor powers use row-major coordinates: `e_i ⊗ e_j` is index `i*n + j`
//! and `e_i ⊗ e_j ⊗ e_k` is `(i*n + j)*n + k`.

use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Vector};
use crate::report::{tuples, Check};

fn expect_len(what: &str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { what: what.to_string(), expected, found });
    }
    Ok(())
}

fn check_field(what: &str, field: Field, values: &[Scalar]) -> Result<()> {
    if let Some(x) = values.iter().find(|x| x.field() != field) {
        return Err(Error::InvalidInput(format!(
            "{what} has an entry over {} in a presentation over {field}",
            x.field()
        )));
    }
    Ok(())
}

/// An algebra given by `e_i e_j = Σ_k mult[i][j][k] e_k` and a unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vector,
    // nonzero entries of each product e_i e_j, indexed by i*dim + j
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl AlgebraPresentation {
    /// `mult` is the flattened tensor, index `(i*dim + j)*dim + k`.
    pub fn new(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vector) -> Result<Self> {
        expect_len("multiplication tensor", dim * dim * dim, mult.len())?;
        expect_len("unit vector", dim, unit.len())?;
        check_field("multiplication tensor", field, &mult)?;
        check_field("unit vector", field, &unit)?;
        let sparse = mult
            .chunks(dim.max(1))
            .take(dim * dim)
            .map(|row| vector::support(row).map(|(k, x)| (k, x.clone())).collect())
            .collect();
        Ok(AlgebraPresentation { field, dim, mult, unit, sparse })
    }

    /// Builds the tensor from a closure giving the coordinates of `e_i e_j`.
    pub fn from_products<F>(field: Field, dim: usize, unit: Vector, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                expect_len("basis product", dim, p.len())?;
                mult.extend(p);
            }
        }
        AlgebraPresentation::new(field, dim, mult, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mult_tensor(&self) -> &[Scalar] {
        &self.mult
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.mult[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Nonzero coordinates of `e_i e_j`.
    pub fn sparse_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn zero_vector(&self) -> Vector {
        vector::zeros(self.field, self.dim)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim, i)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (i, a) in vector::support(u) {
            for (j, b) in vector::support(v) {
                let ab = a * b;
                for (k, c) in self.sparse_product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ u v`.
    pub fn left_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(u, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `v ↦ v u`.
    pub fn right_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), u)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Product in `A ⊗ A` (componentwise).
    pub fn mul2(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = vector::zeros(self.field, n * n);
        for (p, a) in vector::support(u) {
            let (i, j) = (p / n, p % n);
            for (q, b) in vector::support(v) {
                let (k, l) = (q / n, q % n);
                let ab = a * b;
                for (x, c) in self.sparse_product(i, k) {
                    let abc = &ab * c;
                    for (y, d) in self.sparse_product(j, l) {
                        out[x * n + y] += &(&abc * d);
                    }
                }
            }
        }
        out
    }

    pub fn check_associativity(&self) -> Check {
        let n = self.dim;
        Check::exhaustive("associativity", tuples(&[n, n, n]), |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let left = self.mul(self.basis_product(i, j), &self.basis_vector(k));
            let right = self.mul(&self.basis_vector(i), self.basis_product(j, k));
            (left, right)
        })
    }

    pub fn check_unit(&self) -> Check {
        let n = self.dim;
        Check::exhaustive("unit_law", tuples(&[n, 2]), |t| {
            let e = self.basis_vector(t[0]);
            let prod = if t[1] == 0 { self.mul(&self.unit, &e) } else { self.mul(&e, &self.unit) };
            (prod, e)
        })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        AlgebraPresentation::new(field, 1, vec![field.one()], vec![field.one()]).expect("well-formed")
    }

    /// `k[x]/(x^degree)` on the monomial basis `1, x, …, x^(degree-1)`.
    pub fn truncated_polynomial(field: Field, degree: usize) -> Self {
        let unit = vector::unit(field, degree, 0);
        AlgebraPresentation::from_products(field, degree, unit, |i, j| {
            let mut v = vector::zeros(field, degree);
            if i + j < degree {
                v[i + j] = field.one();
            }
            v
        })
        .expect("well-formed")
    }

    /// Whether `e_i e_j = e_j e_i` for all basis pairs.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}

/// A coalgebra given by `Δ(e_k) = Σ_{i,j} comult[k][i][j] e_i ⊗ e_j` and a
/// counit covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraPresentation {
    field: Field,
    dim: usize,
    comult: Vec<Scalar>,
    counit: Vector,
}

impl CoalgebraPresentation {
    /// `comult` is flattened with index `(k*dim + i)*dim + j`.
    pub fn new(field: Field, dim: usize, comult: Vec<Scalar>, counit: Vector) -> Result<Self> {
        expect_len("comultiplication tensor", dim * dim * dim, comult.len())?;
        expect_len("counit covector", dim, counit.len())?;
        check_field("comultiplication tensor", field, &comult)?;
        check_field("counit covector", field, &counit)?;
        Ok(CoalgebraPresentation { field, dim, comult, counit })
    }

    pub fn from_coproducts<F>(field: Field, dim: usize, counit: Vector, mut coproduct: F) -> Result<Self>
    where
        F: FnMut(usize) -> Vector,
    {
        let mut comult = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            let d = coproduct(k);
            expect_len("basis coproduct", dim * dim, d.len())?;
            comult.extend(d);
        }
        CoalgebraPresentation::new(field, dim, comult, counit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn comult_tensor(&self) -> &[Scalar] {
        &self.comult
    }

    pub fn coeff(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.comult[(k * self.dim + i) * self.dim + j]
    }

    /// Coordinates of `Δ(e_k)` in `H ⊗ H`.
    pub fn basis_coproduct(&self, k: usize) -> &[Scalar] {
        let n2 = self.dim * self.dim;
        &self.comult[k * n2..(k + 1) * n2]
    }

    pub fn delta(&self, v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.dim * self.dim);
        for (k, c) in vector::support(v) {
            vector::axpy(&mut out, c, self.basis_coproduct(k));
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, v, self.field)
    }

    /// `(Δ ⊗ id)Δ(v)` in `H ⊗ H ⊗ H`.
    pub fn delta2(&self, v: &[Scalar]) -> Vector {
        let n = self.dim;
        let d = self.delta(v);
        let mut out = vector::zeros(self.field, n * n * n);
        for (p, c) in vector::support(&d) {
            let (a, b) = (p / n, p % n);
            for (q, x) in vector::support(self.basis_coproduct(a)) {
                out[q * n + b] += &(c * x);
            }
        }
        out
    }

    /// `(id ⊗ Δ)Δ(v)` in `H ⊗ H ⊗ H`.
    pub fn delta2_right(&self, v: &[Scalar]) -> Vector {
        let n = self.dim;
        let d = self.delta(v);
        let mut out = vector::zeros(self.field, n * n * n);
        for (p, c) in vector::support(&d) {
            let (a, b) = (p / n, p % n);
            for (q, x) in vector::support(self.basis_coproduct(b)) {
                out[a * n * n + q] += &(c * x);
            }
        }
        out
    }

    pub fn check_coassociativity(&self) -> Check {
        Check::exhaustive("coassociativity", tuples(&[self.dim]), |t| {
            let e = vector::unit(self.field, self.dim, t[0]);
            (self.delta2(&e), self.delta2_right(&e))
        })
    }

    pub fn check_counit(&self) -> Check {
        let n = self.dim;
        Check::exhaustive("counit_law", tuples(&[n, 2]), |t| {
            let d = self.basis_coproduct(t[0]);
            let mut out = vector::zeros(self.field, n);
            for (p, c) in vector::support(d) {
                let (a, b) = (p / n, p % n);
                // side 0: (ε ⊗ id), side 1: (id ⊗ ε)
                let (eps_idx, keep) = if t[1] == 0 { (a, b) } else { (b, a) };
                out[keep] += &(c * &self.counit[eps_idx]);
            }
            (out, vector::unit(self.field, n, t[0]))
        })
    }
}

/// Algebra, coalgebra and antipode on one basis: a candidate weak Hopf
/// algebra. The antipode matrix has `S(e_j)` as its `j`-th column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfPresentation {
    pub algebra: AlgebraPresentation,
    pub coalgebra: CoalgebraPresentation,
    pub antipode: Matrix,
}

impl WeakHopfPresentation {
    pub fn new(
        algebra: AlgebraPresentation,
        coalgebra: CoalgebraPresentation,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        expect_len("coalgebra dimension", n, coalgebra.dim())?;
        expect_len("antipode rows", n, antipode.rows())?;
        expect_len("antipode columns", n, antipode.cols())?;
        if coalgebra.field() != algebra.field() || antipode.field() != algebra.field() {
            return Err(Error::InvalidInput("parts of the presentation use different fields".into()));
        }
        Ok(WeakHopfPresentation { algebra, coalgebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalgebra.counit()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.algebra.mul(u, v)
    }

    pub fn delta(&self, v: &[Scalar]) -> Vector {
        self.coalgebra.delta(v)
    }

    pub fn antipode_of(&self, v: &[Scalar]) -> Vector {
        self.antipode.mul_vec(v)
    }

    /// `Δ(1)`.
    pub fn delta_unit(&self) -> Vector {
        self.coalgebra.delta(self.algebra.unit())
    }

    /// Table of `ε(e_i e_j)`, row-major.
    pub fn counit_pairing(&self) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.coalgebra.counit_of(self.algebra.basis_product(i, j)));
            }
        }
        out
    }

    /// Splits a vector of `H ⊗ H` into its nonzero terms `(c, a, b)` for
    /// `c · e_a ⊗ e_b`.
    pub fn terms2<'a>(&self, v: &'a [Scalar]) -> impl Iterator<Item = (&'a Scalar, usize, usize)> {
        let n = self.dim();
        vector::support(v).map(move |(p, c)| (c, p / n, p % n))
    }

    pub fn tensor(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        vector::outer(a, b, self.field())
    }
}
