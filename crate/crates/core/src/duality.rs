//! The duality `(A#H)#H* ≅ End(A#H)_A` and its semisimplicity consequences.
//!
//! `H*` acts on `A#H` through the coregular action on the `H` factor. The
//! map `α(w#φ) = (v ↦ w(φ·v))` lands in the right `A`-linear endomorphisms of
//! `A#H`, and `β(T) = Σ_i T(1#f_{i2})(1#S⁻¹f_{i1}) ⊗ ψ_i` inverts it for any
//! pair of dual bases `{f_i}`, `{ψ_i}`.

use crate::error::{Error, Result};
use crate::exactlin::{kernel, tensor_matrix, vector, Field, Matrix, Scalar, Subspace, Vector};
use crate::report::{tuples, AxiomReport, Check, Witness};
use crate::smash::{checked_action, smash_product, trivial_action, ActionPresentation, SmashAlgebra};
use crate::wha::{dualize, verify_algebra_map, AlgebraPresentation, WeakHopfPresentation};

/// How `φ ∈ H*` moves `h ∈ H` in the action on `A#H`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoregularConvention {
    /// `φ ⇀ h = h₁⟨φ, h₂⟩`.
    #[default]
    Right,
    /// `φ ⇀ h = ⟨φ, h₁⟩h₂`. Only a left action when `H*` is commutative.
    Left,
}

/// Matrix of `h ↦ ψ_i ⇀ h` on `H`.
pub fn coregular_matrix(h: &WeakHopfPresentation, i: usize, convention: CoregularConvention) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n, n);
    for g in 0..n {
        for a in 0..n {
            m[(a, g)] = match convention {
                CoregularConvention::Right => h.coalgebra.coeff(g, a, i).clone(),
                CoregularConvention::Left => h.coalgebra.coeff(g, i, a).clone(),
            };
        }
    }
    m
}

/// `H*` acting on `A#H` by `φ·(x#h) = x#(φ ⇀ h)`.
pub fn dual_action_on_smash(s: &SmashAlgebra) -> Result<ActionPresentation> {
    dual_action_on_smash_with(s, CoregularConvention::default())
}

pub fn dual_action_on_smash_with(s: &SmashAlgebra, convention: CoregularConvention) -> Result<ActionPresentation> {
    let h = s.hopf();
    let field = h.field();
    let dual = dualize(h)?;
    let id_a = Matrix::identity(field, s.action.algebra.dim());
    let mut matrices = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let ambient = tensor_matrix(&id_a, &coregular_matrix(h, i, convention));
        for (r_idx, r) in s.quotient.relations.basis().iter().enumerate() {
            let class = s.quotient.project(&ambient.mul_vec(r));
            if !vector::is_zero(&class) {
                return Err(Error::Inconsistency {
                    check: "dual_action_well_defined".into(),
                    witness: Witness::new(vec![i, r_idx], class, vector::zeros(field, s.dim())),
                });
            }
        }
        matrices.push(s.projection().mul(&ambient).mul(s.section()));
    }
    checked_action(ActionPresentation::from_matrices(dual, s.algebra.clone(), matrices)?)
}

/// `(A#H)#H*`.
pub fn iterated_smash(s: &SmashAlgebra) -> Result<SmashAlgebra> {
    smash_product(&dual_action_on_smash(s)?)
}

/// Row-major flattening of an `n × n` matrix.
pub fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

pub fn unflatten(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_rows(field, v.chunks(n).map(<[Scalar]>::to_vec).collect())
}

/// `End(A#H)_A`: endomorphisms commuting with right multiplication by `A`,
/// stored as a subspace of flattened `n × n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantAlgebra {
    pub n: usize,
    pub subspace: Subspace,
    /// Composition product in the echelon basis of `subspace`.
    pub algebra: AlgebraPresentation,
}

impl CommutantAlgebra {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn element(&self, k: usize) -> Matrix {
        unflatten(self.subspace.field(), self.n, &self.subspace.basis()[k])
    }

    pub fn coordinates(&self, t: &Matrix) -> Option<Vector> {
        self.subspace.coordinates(&flatten(t))
    }
}

pub fn commutant(s: &SmashAlgebra) -> Result<CommutantAlgebra> {
    let field = s.algebra.field();
    let n = s.dim();
    let rights: Vec<Matrix> = s.embed_a.columns().iter().map(|x| s.algebra.right_mult_matrix(x)).collect();
    // (TR − RT)_{ij} = Σ_k T_ik R_kj − R_ik T_kj
    let mut rows = Vec::with_capacity(rights.len() * n * n);
    for r in &rights {
        for i in 0..n {
            for j in 0..n {
                let mut row = vector::zeros(field, n * n);
                for k in 0..n {
                    row[i * n + k] += &r[(k, j)];
                    row[k * n + j] -= &r[(i, k)];
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let subspace = if rows.is_empty() {
        Subspace::full(field, n * n)
    } else {
        kernel(&Matrix::from_rows_with_cols(field, rows, n * n))
    };
    let elems: Vec<Matrix> = subspace.basis().iter().map(|v| unflatten(field, n, v)).collect();
    let coords = |m: &Matrix| {
        subspace.coordinates(&flatten(m)).ok_or_else(|| Error::Inconsistency {
            check: "commutant_closed".into(),
            witness: Witness::new(vec![], flatten(m), vec![]),
        })
    };
    let unit = coords(&Matrix::identity(field, n))?;
    let d = elems.len();
    let mut products = Vec::with_capacity(d * d);
    for a in &elems {
        for b in &elems {
            products.push(coords(&a.mul(b))?);
        }
    }
    let algebra = AlgebraPresentation::from_products(field, d, unit, |i, j| products[i * d + j].clone())?;
    Ok(CommutantAlgebra { n, subspace, algebra })
}

/// A basis `{f_i}` of `H` with its dual basis `{ψ_i}` of `H*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair {
    /// Column `i` is `f_i`.
    pub basis: Matrix,
    /// Row `i` is `ψ_i` in the standard dual basis.
    pub dual: Matrix,
}

impl DualBasisPair {
    pub fn standard(field: Field, n: usize) -> DualBasisPair {
        DualBasisPair { basis: Matrix::identity(field, n), dual: Matrix::identity(field, n) }
    }

    /// `None` when the columns of `p` are not a basis.
    pub fn from_basis(p: Matrix) -> Option<DualBasisPair> {
        let dual = p.inverse()?;
        Some(DualBasisPair { basis: p, dual })
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ_i f_i ⊗ ψ_i` in `H ⊗ H*`, index `h * n + j`.
    pub fn canonical_element(&self) -> Vector {
        let field = self.basis.field();
        let n = self.len();
        let mut out = vector::zeros(field, n * n);
        for i in 0..n {
            vector::axpy(&mut out, &field.one(), &vector::outer(&self.basis.column(i), self.dual.row(i), field));
        }
        out
    }
}

/// Everything needed to compare `(A#H)#H*` with `End(A#H)_A`.
#[derive(Clone, Debug)]
pub struct Duality {
    pub smash: SmashAlgebra,
    pub iterated: SmashAlgebra,
    pub commutant: CommutantAlgebra,
    /// `α` on ambient basis vectors `w ⊗ ψ_j` of `(A#H) ⊗ H*`.
    ambient_alpha: Vec<Matrix>,
}

impl Duality {
    pub fn new(s: &SmashAlgebra) -> Result<Duality> {
        let iterated = iterated_smash(s)?;
        let commutant = commutant(s)?;
        let acts: Vec<&Matrix> = (0..s.hopf().dim()).map(|j| iterated.action.matrix(j)).collect();
        let mut ambient_alpha = Vec::with_capacity(s.dim() * acts.len());
        for w in 0..s.dim() {
            let left = s.algebra.left_mult_matrix(&s.algebra.basis_vector(w));
            for act in &acts {
                ambient_alpha.push(left.mul(act));
            }
        }
        Ok(Duality { smash: s.clone(), iterated, commutant, ambient_alpha })
    }

    fn field(&self) -> Field {
        self.smash.algebra.field()
    }

    /// `α` of an element of `(A#H) ⊗ H*` in ambient coordinates.
    pub fn alpha_ambient(&self, u: &[Scalar]) -> Matrix {
        let n = self.smash.dim();
        let mut out = vector::zeros(self.field(), n * n);
        for (k, c) in vector::support(u) {
            vector::axpy(&mut out, c, self.ambient_alpha[k].entries());
        }
        unflatten(self.field(), n, &out)
    }

    /// `α(u_k)` for the basis of `(A#H)#H*`.
    pub fn alpha_endomorphisms(&self) -> Vec<Matrix> {
        self.iterated.section().columns().iter().map(|u| self.alpha_ambient(u)).collect()
    }

    /// `α` as an `n² × dim (A#H)#H*` matrix of flattened endomorphisms.
    pub fn alpha_flat(&self) -> Matrix {
        let cols: Vec<Vector> = self.alpha_endomorphisms().iter().map(flatten).collect();
        let n = self.smash.dim();
        Matrix::from_columns(self.field(), n * n, &cols)
    }

    fn alpha_checks(&self, images: &[Matrix]) -> (Vec<Check>, Option<Matrix>) {
        let field = self.field();
        let n = self.smash.dim();
        let rels = self.iterated.quotient.relations.basis();
        let mut checks = vec![Check::exhaustive("alpha_well_defined", tuples(&[rels.len()]), |t| {
            (flatten(&self.alpha_ambient(&rels[t[0]])), vector::zeros(field, n * n))
        })];

        let coords: Vec<Option<Vector>> = images.iter().map(|m| self.commutant.coordinates(m)).collect();
        let missing = coords.iter().position(Option::is_none);
        checks.push(Check::from_bool("alpha_image_in_commutant", missing.is_none(), || {
            Witness::new(vec![missing.unwrap_or(0)], flatten(&images[missing.unwrap_or(0)]), vec![])
        }));

        let d = images.len();
        let alg = &self.iterated.algebra;
        let combine = |v: &[Scalar]| {
            let mut out = vector::zeros(field, n * n);
            for (k, c) in vector::support(v) {
                vector::axpy(&mut out, c, images[k].entries());
            }
            out
        };
        checks.push(Check::exhaustive("alpha_multiplicative", tuples(&[d, d]), |t| {
            (combine(alg.basis_product(t[0], t[1])), flatten(&images[t[0]].mul(&images[t[1]])))
        }));
        checks.push(Check::exhaustive("alpha_unital", tuples(&[1]), |_| {
            (combine(alg.unit()), flatten(&Matrix::identity(field, n)))
        }));

        let in_commutant = missing.is_none();
        let matrix = in_commutant.then(|| {
            let cols: Vec<Vector> = coords.into_iter().flatten().collect();
            Matrix::from_columns(field, self.commutant.dim(), &cols)
        });
        let rank = matrix.as_ref().map(Matrix::rank).unwrap_or(0);
        checks.push(Check::from_bool(
            "alpha_image_equals_commutant",
            in_commutant && rank == self.commutant.dim(),
            || Witness::at(vec![rank, self.commutant.dim()]),
        ));
        (checks, matrix)
    }

    /// `α` in commutant coordinates, `dim End(A#H)_A × dim (A#H)#H*`.
    /// Fails with the first violated property.
    pub fn alpha(&self) -> Result<Matrix> {
        let (checks, matrix) = self.alpha_checks(&self.alpha_endomorphisms());
        for c in checks {
            crate::wha::into_error(c)?;
        }
        Ok(matrix.expect("checked above"))
    }

    /// `β(T)` in ambient coordinates of `(A#H) ⊗ H*`.
    pub fn beta_ambient(&self, t: &Matrix, pair: &DualBasisPair) -> Vector {
        let s = &self.smash;
        let h = s.hopf();
        let field = self.field();
        let s_inv = s.hopf().antipode.inverse().expect("antipode of a weak Hopf algebra is invertible");
        let lift = |v: &[Scalar]| s.embed_h.mul_vec(v);
        let mut out = vector::zeros(field, s.dim() * h.dim());
        for i in 0..pair.len() {
            let mut y = vector::zeros(field, s.dim());
            for (c, a, b) in h.terms2(&h.delta(&pair.basis.column(i))) {
                let left = t.mul_vec(&s.embed_h.column(b));
                let right = lift(&s_inv.column(a));
                vector::axpy(&mut y, c, &s.algebra.mul(&left, &right));
            }
            vector::axpy(&mut out, &field.one(), &vector::outer(&y, pair.dual.row(i), field));
        }
        out
    }

    /// `β` with respect to the dual basis pair, `dim (A#H)#H* × dim End(A#H)_A`.
    pub fn beta_with(&self, pair: &DualBasisPair) -> Result<Matrix> {
        let n = self.smash.hopf().dim();
        if pair.len() != n || pair.basis.rows() != n {
            return Err(Error::DimensionMismatch { what: "dual basis pair".into(), expected: n, found: pair.len() });
        }
        let cols: Vec<Vector> = (0..self.commutant.dim())
            .map(|k| self.iterated.quotient.project(&self.beta_ambient(&self.commutant.element(k), pair)))
            .collect();
        Ok(Matrix::from_columns(self.field(), self.iterated.dim(), &cols))
    }

    pub fn beta(&self) -> Result<Matrix> {
        self.beta_with(&DualBasisPair::standard(self.field(), self.smash.hopf().dim()))
    }

    pub fn certify(&self) -> IsomorphismCertificate {
        let mut cert = IsomorphismCertificate::new(Some(self.smash.dim()));
        cert.iterated_dim = Some(self.iterated.dim());
        cert.commutant_dim = Some(self.commutant.dim());
        let (checks, alpha) = self.alpha_checks(&self.alpha_endomorphisms());
        for c in checks {
            cert.report.push(c);
        }
        let beta = match self.beta() {
            Ok(b) => Some(b),
            Err(e) => {
                cert.fail("beta", e);
                None
            }
        };
        let (d, c) = (self.iterated.dim(), self.commutant.dim());
        match (&alpha, &beta) {
            (Some(a), Some(b)) => {
                cert.report.push(identity_check("beta_alpha_id", &b.mul(a)));
                cert.report.push(identity_check("alpha_beta_id", &a.mul(b)));
            }
            _ => {
                cert.report.push(Check::fail("beta_alpha_id", Witness::at(vec![])));
                cert.report.push(Check::fail("alpha_beta_id", Witness::at(vec![])));
            }
        }
        cert.report.push(Check::from_bool("dimensions_equal", d == c, || Witness::at(vec![d, c])));
        cert.alpha = alpha;
        cert.beta = beta;
        cert
    }
}

fn identity_check(name: &str, m: &Matrix) -> Check {
    let id = Matrix::identity(m.field(), m.rows());
    Check::exhaustive(name, tuples(&[m.cols()]), |t| (m.column(t[0]), id.column(t[0])))
}

/// Outcome of comparing `(A#H)#H*` with `End(A#H)_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismCertificate {
    pub smash_dim: Option<usize>,
    pub iterated_dim: Option<usize>,
    pub commutant_dim: Option<usize>,
    /// `α` in commutant coordinates.
    pub alpha: Option<Matrix>,
    pub beta: Option<Matrix>,
    pub report: AxiomReport,
    /// Messages of upstream errors, keyed by the failed stage.
    pub errors: Vec<(String, String)>,
}

impl IsomorphismCertificate {
    /// A certificate with no checks yet.
    pub fn new(smash_dim: Option<usize>) -> Self {
        IsomorphismCertificate {
            smash_dim,
            iterated_dim: None,
            commutant_dim: None,
            alpha: None,
            beta: None,
            report: AxiomReport::new(),
            errors: Vec::new(),
        }
    }

    fn fail(&mut self, stage: &str, e: Error) {
        let witness = match &e {
            Error::Inconsistency { witness, .. } => witness.clone(),
            _ => Witness::at(vec![]),
        };
        self.report.push(Check::fail(stage, witness));
        self.errors.push((stage.to_string(), e.to_string()));
    }

    pub fn is_valid(&self) -> bool {
        self.report.passed() && self.errors.is_empty() && self.alpha.is_some() && self.beta.is_some()
    }
}

/// Builds `A#H` and certifies the duality isomorphism. Errors along the way
/// are recorded as failed checks instead of being returned.
pub fn certify_duality(a: &ActionPresentation) -> IsomorphismCertificate {
    let s = match smash_product(a) {
        Ok(s) => s,
        Err(e) => {
            let mut cert = IsomorphismCertificate::new(None);
            cert.fail("smash_product", e);
            return cert;
        }
    };
    certify_smash(&s)
}

pub fn certify_smash(s: &SmashAlgebra) -> IsomorphismCertificate {
    match Duality::new(s) {
        Ok(d) => d.certify(),
        Err(e) => {
            let mut cert = IsomorphismCertificate::new(Some(s.dim()));
            cert.fail("iterated_smash", e);
            cert
        }
    }
}

/// Radical of the trace form `(x, y) ↦ tr(L_{xy})`. Over a field of
/// characteristic zero this is the Jacobson radical.
pub fn semisimplicity_radical(a: &AlgebraPresentation) -> Result<Subspace> {
    if a.field() != Field::Rationals {
        return Err(Error::Unsupported(format!(
            "trace-form radical over {} (only characteristic zero is supported)",
            a.field()
        )));
    }
    let n = a.dim();
    let field = a.field();
    let traces: Vec<Scalar> = (0..n)
        .map(|k| (0..n).fold(field.zero(), |acc, l| acc + a.coeff(k, l, l)))
        .collect();
    let rows: Vec<Vector> = (0..n)
        .map(|i| (0..n).map(|j| vector::dot(a.basis_product(i, j), &traces, field)).collect())
        .collect();
    Ok(kernel(&Matrix::from_rows_with_cols(field, rows, n)))
}

/// For `A = H_t`: `1#h` identifies `H` with `H_t#H`, and `(H_t#H)#H*` has
/// zero radical.
pub fn verify_target_smash(h: &WeakHopfPresentation) -> Result<AxiomReport> {
    let s = smash_product(&trivial_action(h)?)?;
    let mut report = AxiomReport::new();
    let iso = verify_algebra_map(&h.algebra, &s.algebra, &s.embed_h);
    report.push(Check::from_bool("target_smash_isomorphism", iso.passed(), || {
        iso.failures().next().and_then(|c| c.witness.clone()).unwrap_or_else(|| Witness::at(vec![]))
    }));
    let iterated = iterated_smash(&s)?;
    let radical = semisimplicity_radical(&iterated.algebra)?;
    report.push(Check::from_bool("iterated_semisimple", radical.is_zero(), || {
        Witness::new(vec![radical.dim()], radical.basis()[0].clone(), vec![])
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{groupoid_algebra, FiniteGroupoid};

    const Q: Field = Field::Rationals;

    #[test]
    fn dual_numbers_have_one_dimensional_radical() {
        let a = AlgebraPresentation::truncated_polynomial(Q, 2);
        let r = semisimplicity_radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.basis()[0], vec![Q.zero(), Q.one()]);
    }

    #[test]
    fn radical_rejects_prime_fields() {
        let a = AlgebraPresentation::truncated_polynomial(Field::prime(5).unwrap(), 2);
        assert!(matches!(semisimplicity_radical(&a), Err(Error::Unsupported(_))));
    }

    #[test]
    fn canonical_element_is_basis_independent() {
        let rows = vec![vec![Q.one(), Q.from_i64(2)], vec![Q.zero(), Q.from_i64(3)]];
        let pair = DualBasisPair::from_basis(Matrix::from_rows(Q, rows)).unwrap();
        assert_eq!(pair.canonical_element(), DualBasisPair::standard(Q, 2).canonical_element());
    }

    #[test]
    fn pair_groupoid_duality_with_target_algebra() {
        let h = groupoid_algebra(&FiniteGroupoid::pair(2), Q).unwrap();
        let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
        assert_eq!(s.dim(), 4);
        let cert = certify_smash(&s);
        assert!(cert.is_valid(), "{:?}", cert.report.failed_names());
    }
}
