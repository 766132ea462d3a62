//! Module algebras and smash products.
//!
//! For a left `H`-module algebra `A`, the smash product `A#H` lives on the
//! relative tensor product `A ⊗_{H_t} H`: the quotient of `A ⊗ H` by
//! `(x·z) ⊗ h − x ⊗ zh` for `z ∈ H_t`, where `x·z = x(z·1)`. Ambient
//! coordinates of `A ⊗ H` are `x * dim H + h`.

use crate::error::{Error, Result};
use crate::exactlin::{quotient_basis, vector, Field, Matrix, Quotient, Scalar, Vector};
use crate::report::{tuples, AxiomReport, Check, Witness};
use crate::wha::{
    counital_data, dualize, into_error, require, target_counital_matrix, AlgebraPresentation,
    WeakHopfPresentation,
};

/// A candidate `H`-module algebra: `e_i · x_j = Σ_k action[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionPresentation {
    pub hopf: WeakHopfPresentation,
    pub algebra: AlgebraPresentation,
    matrices: Vec<Matrix>,
}

impl ActionPresentation {
    /// `action` is flattened with index `(i * dim A + j) * dim A + k`.
    pub fn new(hopf: WeakHopfPresentation, algebra: AlgebraPresentation, action: Vec<Scalar>) -> Result<Self> {
        let (dh, da) = (hopf.dim(), algebra.dim());
        if action.len() != dh * da * da {
            return Err(Error::DimensionMismatch {
                what: "action tensor".into(),
                expected: dh * da * da,
                found: action.len(),
            });
        }
        if hopf.field() != algebra.field() || action.iter().any(|x| x.field() != hopf.field()) {
            return Err(Error::InvalidInput("action data uses a different field".into()));
        }
        let matrices = (0..dh)
            .map(|i| {
                let mut m = Matrix::zeros(hopf.field(), da, da);
                for j in 0..da {
                    for k in 0..da {
                        m[(k, j)] = action[(i * da + j) * da + k].clone();
                    }
                }
                m
            })
            .collect();
        Ok(ActionPresentation { hopf, algebra, matrices })
    }

    /// One `dim A × dim A` matrix per basis element of `H`.
    pub fn from_matrices(hopf: WeakHopfPresentation, algebra: AlgebraPresentation, matrices: Vec<Matrix>) -> Result<Self> {
        let (dh, da) = (hopf.dim(), algebra.dim());
        if matrices.len() != dh || matrices.iter().any(|m| m.rows() != da || m.cols() != da) {
            return Err(Error::DimensionMismatch { what: "action matrices".into(), expected: dh, found: matrices.len() });
        }
        Ok(ActionPresentation { hopf, algebra, matrices })
    }

    /// Matrix of `x ↦ e_i · x`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn act_basis(&self, i: usize, x: &[Scalar]) -> Vector {
        self.matrices[i].mul_vec(x)
    }

    pub fn act(&self, h: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = self.algebra.zero_vector();
        for (i, c) in vector::support(h) {
            vector::axpy(&mut out, c, &self.act_basis(i, x));
        }
        out
    }

    /// Flattened tensor, index `(i * dim A + j) * dim A + k`.
    pub fn action_tensor(&self) -> Vec<Scalar> {
        let da = self.algebra.dim();
        let mut out = Vec::with_capacity(self.matrices.len() * da * da);
        for m in &self.matrices {
            for j in 0..da {
                for k in 0..da {
                    out.push(m[(k, j)].clone());
                }
            }
        }
        out
    }

    /// `x · z = x (z · 1_A)`.
    pub fn right_target_action(&self, x: &[Scalar], z: &[Scalar]) -> Vector {
        self.algebra.mul(x, &self.act(z, self.algebra.unit()))
    }
}

/// Checks that `A` is an algebra, a unital left `H`-module, and that
/// `h·(xy) = (h₁·x)(h₂·y)`, `h·1 = ε_t(h)·1`, and `x(z·1) = S(z)·x` for `z`
/// in a basis of `H_t`.
pub fn verify_module_algebra(a: &ActionPresentation) -> AxiomReport {
    let h = &a.hopf;
    let alg = &a.algebra;
    let (dh, da) = (h.dim(), alg.dim());
    let mut report = AxiomReport::new();
    let mut assoc = alg.check_associativity();
    assoc.name = "algebra_associativity".into();
    let mut unit = alg.check_unit();
    unit.name = "algebra_unit_law".into();
    report.push(assoc);
    report.push(unit);

    report.push(Check::exhaustive("module_associativity", tuples(&[dh, dh, da]), |t| {
        let x = alg.basis_vector(t[2]);
        let lhs = a.act(h.algebra.basis_product(t[0], t[1]), &x);
        let rhs = a.act_basis(t[0], &a.act_basis(t[1], &x));
        (lhs, rhs)
    }));
    report.push(Check::exhaustive("module_unit", tuples(&[da]), |t| {
        let x = alg.basis_vector(t[0]);
        (a.act(h.unit(), &x), x)
    }));
    report.push(Check::exhaustive("action_multiplicative", tuples(&[dh, da, da]), |t| {
        let (x, y) = (alg.basis_vector(t[1]), alg.basis_vector(t[2]));
        let lhs = a.act_basis(t[0], alg.basis_product(t[1], t[2]));
        let mut rhs = alg.zero_vector();
        for (c, p, q) in h.terms2(h.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut rhs, c, &alg.mul(&a.act_basis(p, &x), &a.act_basis(q, &y)));
        }
        (lhs, rhs)
    }));
    let eps_t = target_counital_matrix(h);
    report.push(Check::exhaustive("action_unit", tuples(&[dh]), |t| {
        let one = alg.unit();
        (a.act_basis(t[0], one), a.act(&eps_t.column(t[0]), one))
    }));
    let target = eps_t.image();
    let zb = target.basis();
    report.push(Check::exhaustive("right_target_action", tuples(&[zb.len(), da]), |t| {
        let x = alg.basis_vector(t[1]);
        let z = &zb[t[0]];
        (a.right_target_action(&x, z), a.act(&h.antipode_of(z), &x))
    }));
    report
}

pub(crate) fn checked_action(a: ActionPresentation) -> Result<ActionPresentation> {
    for c in verify_module_algebra(&a).checks {
        into_error(c)?;
    }
    Ok(a)
}

/// `H_t` as an `H`-module algebra via `h·z = ε_t(hz)`, on the echelon basis
/// of `H_t`.
pub fn trivial_action(h: &WeakHopfPresentation) -> Result<ActionPresentation> {
    let counital = counital_data(h)?;
    let target = &counital.target;
    let basis = target.basis();
    let coords = |v: &[Scalar]| {
        target.coordinates(v).ok_or_else(|| Error::Inconsistency {
            check: "target_subalgebra".into(),
            witness: Witness::new(vec![], v.to_vec(), vec![]),
        })
    };
    let unit = coords(h.unit())?;
    let mut products = Vec::with_capacity(basis.len() * basis.len());
    for a in basis {
        for b in basis {
            products.push(coords(&h.mul(a, b))?);
        }
    }
    let d = basis.len();
    let algebra = AlgebraPresentation::from_products(h.field(), d, unit, |i, j| products[i * d + j].clone())?;
    let mut matrices = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let cols = basis
            .iter()
            .map(|z| coords(&counital.eps_t.mul_vec(&h.mul(&h.basis_vector(i), z))))
            .collect::<Result<Vec<_>>>()?;
        matrices.push(Matrix::from_columns(h.field(), d, &cols));
    }
    checked_action(ActionPresentation::from_matrices(h.clone(), algebra, matrices)?)
}

/// `H*` as an `H`-module algebra via `h ⇀ φ = φ₁⟨φ₂, h⟩`.
pub fn dual_action(h: &WeakHopfPresentation) -> Result<ActionPresentation> {
    let dual = dualize(h)?;
    let n = h.dim();
    // e_i ⇀ ψ_j = Σ_a ⟨ψ_j, e_a e_i⟩ ψ_a
    let matrices = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(h.field(), n, n);
            for j in 0..n {
                for a in 0..n {
                    m[(a, j)] = h.algebra.coeff(a, i, j).clone();
                }
            }
            m
        })
        .collect();
    checked_action(ActionPresentation::from_matrices(h.clone(), dual.algebra, matrices)?)
}

/// Sparse product table of a bilinear product on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    field: Field,
    dim: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl ProductTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, a) in vector::support(u) {
            for (j, b) in vector::support(v) {
                let ab = a * b;
                for (k, c) in &self.rows[i * self.dim + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }
}

/// `A#H` with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra {
    pub action: ActionPresentation,
    /// The relative tensor product `A ⊗_{H_t} H` as a quotient of `A ⊗ H`.
    pub quotient: Quotient,
    /// `(x ⊗ h)(y ⊗ g) = x(h₁·y) ⊗ h₂g` on `A ⊗ H`.
    pub ambient: ProductTable,
    /// `A#H` in quotient coordinates.
    pub algebra: AlgebraPresentation,
    /// `x ↦ x#1`.
    pub embed_a: Matrix,
    /// `h ↦ 1#h`.
    pub embed_h: Matrix,
    /// Echelon basis of `H_t`, as elements of `H`.
    pub target_basis: Vec<Vector>,
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn projection(&self) -> &Matrix {
        &self.quotient.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.quotient.section
    }

    pub fn hopf(&self) -> &WeakHopfPresentation {
        &self.action.hopf
    }

    /// The class of `x ⊗ h`.
    pub fn class_of(&self, x: &[Scalar], h: &[Scalar]) -> Vector {
        self.quotient.project(&vector::outer(x, h, self.algebra.field()))
    }
}

/// Builds `A#H`, checking that the product is well defined on the quotient
/// and that the result is an associative unital algebra.
pub fn smash_product(a: &ActionPresentation) -> Result<SmashAlgebra> {
    require("smash_product", &verify_module_algebra(a))?;
    let h = &a.hopf;
    let alg = &a.algebra;
    let field = h.field();
    let (dh, da) = (h.dim(), alg.dim());
    let n = da * dh;
    let target_basis = counital_data(h)?.target.basis().to_vec();

    let mut relations = Vec::new();
    for x in 0..da {
        let ex = alg.basis_vector(x);
        for z in &target_basis {
            let xz = a.right_target_action(&ex, z);
            for g in 0..dh {
                let eg = h.basis_vector(g);
                let r = vector::sub(&vector::outer(&xz, &eg, field), &vector::outer(&ex, &h.mul(z, &eg), field));
                if !vector::is_zero(&r) {
                    relations.push(r);
                }
            }
        }
    }
    let quotient = quotient_basis(field, n, &relations);

    let mut rows = Vec::with_capacity(n * n);
    for p in 0..n {
        let (x, hh) = (p / dh, p % dh);
        for q in 0..n {
            let (y, g) = (q / dh, q % dh);
            let mut out = vector::zeros(field, n);
            for (c, left, right) in h.terms2(h.coalgebra.basis_coproduct(hh)) {
                let moved = a.act_basis(left, &alg.basis_vector(y));
                let xa = alg.mul(&alg.basis_vector(x), &moved);
                let hg = h.algebra.basis_product(right, g);
                vector::axpy(&mut out, c, &vector::outer(&xa, hg, field));
            }
            rows.push(vector::support(&out).map(|(k, v)| (k, v.clone())).collect());
        }
    }
    let ambient = ProductTable { field, dim: n, rows };

    for (r_idx, r) in quotient.relations.basis().iter().enumerate() {
        for w in 0..n {
            let ew = vector::unit(field, n, w);
            for (side, prod) in [(0, ambient.mul(r, &ew)), (1, ambient.mul(&ew, r))] {
                let class = quotient.project(&prod);
                if !vector::is_zero(&class) {
                    return Err(Error::Inconsistency {
                        check: "smash_well_defined".into(),
                        witness: Witness::new(vec![r_idx, w, side], class, vector::zeros(field, quotient.dim())),
                    });
                }
            }
        }
    }

    let q = quotient.dim();
    let reps = quotient.section.columns();
    let unit = quotient.project(&vector::outer(alg.unit(), h.unit(), field));
    let algebra = AlgebraPresentation::from_products(field, q, unit, |i, j| {
        quotient.project(&ambient.mul(&reps[i], &reps[j]))
    })?;
    into_error(algebra.check_associativity())?;
    into_error(algebra.check_unit())?;

    let embed_a = Matrix::from_columns(
        field,
        q,
        &(0..da).map(|x| quotient.project(&vector::outer(&alg.basis_vector(x), h.unit(), field))).collect::<Vec<_>>(),
    );
    let embed_h = Matrix::from_columns(
        field,
        q,
        &(0..dh).map(|g| quotient.project(&vector::outer(alg.unit(), &h.basis_vector(g), field))).collect::<Vec<_>>(),
    );
    Ok(SmashAlgebra { action: a.clone(), quotient, ambient, algebra, embed_a, embed_h, target_basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{groupoid_algebra, FiniteGroupoid};

    const Q: Field = Field::Rationals;

    #[test]
    fn zeroed_action_fails_unit_axiom() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2), Q).unwrap();
        let good = trivial_action(&h).unwrap();
        let zero = vec![Q.zero(); h.dim() * good.algebra.dim() * good.algebra.dim()];
        let bad = ActionPresentation::new(h, good.algebra.clone(), zero).unwrap();
        let report = verify_module_algebra(&bad);
        let check = report.get("module_unit").unwrap();
        assert!(!check.passed);
        assert_eq!(check.witness.as_ref().unwrap().indices, vec![0]);
        assert!(smash_product(&bad).is_err());
    }

    #[test]
    fn ordinary_hopf_smash_is_full_tensor_product() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(3), Q).unwrap();
        let a = dual_action(&h).unwrap();
        let s = smash_product(&a).unwrap();
        assert_eq!(s.dim(), 9);
        assert!(s.quotient.relations.is_zero());
    }

    #[test]
    fn action_tensor_roundtrip() {
        let h = groupoid_algebra(&FiniteGroupoid::pair(2), Q).unwrap();
        let a = dual_action(&h).unwrap();
        let b = ActionPresentation::new(a.hopf.clone(), a.algebra.clone(), a.action_tensor()).unwrap();
        assert_eq!(a, b);
    }
}
