//! Counital maps `ε_t`, `ε_s` and the counital subalgebras `H_t`, `H_s`.

use crate::error::{Error, Result};
use crate::exactlin::{kernel, vector, Matrix, Subspace, Vector};
use crate::report::{tuples, AxiomReport, Check, Witness};

use super::presentation::WeakHopfPresentation;
use super::verify::verify_weak_hopf;

/// `ε_t(h) = ε(1₁h) 1₂` as a matrix (column `h` is `ε_t(e_h)`).
pub fn target_counital_matrix(p: &WeakHopfPresentation) -> Matrix {
    let n = p.dim();
    let pairing = p.counit_pairing();
    let delta_one = p.delta_unit();
    let mut m = Matrix::zeros(p.field(), n, n);
    for h in 0..n {
        for (c, a, b) in p.terms2(&delta_one) {
            let e = &pairing[a * n + h];
            if !e.is_zero() {
                m[(b, h)] += &(c * e);
            }
        }
    }
    m
}

/// `ε_s(h) = 1₁ ε(h1₂)` as a matrix.
pub fn source_counital_matrix(p: &WeakHopfPresentation) -> Matrix {
    let n = p.dim();
    let pairing = p.counit_pairing();
    let delta_one = p.delta_unit();
    let mut m = Matrix::zeros(p.field(), n, n);
    for h in 0..n {
        for (c, a, b) in p.terms2(&delta_one) {
            let e = &pairing[h * n + b];
            if !e.is_zero() {
                m[(a, h)] += &(c * e);
            }
        }
    }
    m
}

/// Counital maps, their images and the inverse antipode of a verified
/// presentation, materialized once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitalData {
    pub eps_t: Matrix,
    pub eps_s: Matrix,
    /// `H_t`, the image of `ε_t`.
    pub target: Subspace,
    /// `H_s`, the image of `ε_s`.
    pub source: Subspace,
    pub antipode_inverse: Matrix,
}

impl CounitalData {
    pub fn target_basis(&self) -> &[Vector] {
        self.target.basis()
    }

    pub fn source_basis(&self) -> &[Vector] {
        self.source.basis()
    }
}

pub(crate) fn require(operation: &'static str, report: &AxiomReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition { operation, failed: report.failed_names() })
    }
}

pub(crate) fn into_error(check: Check) -> Result<()> {
    if check.passed {
        Ok(())
    } else {
        Err(Error::Inconsistency {
            check: check.name,
            witness: check.witness.unwrap_or_else(|| Witness::at(vec![])),
        })
    }
}

/// Compares two subspaces; the witness is a basis vector of one side that
/// is missing from the other.
pub(crate) fn subspace_check(name: &str, a: &Subspace, b: &Subspace) -> Check {
    if let Some(v) = a.basis().iter().find(|v| !b.contains(v)) {
        return Check::fail(name, Witness::new(vec![0], v.clone(), vec![]));
    }
    if let Some(v) = b.basis().iter().find(|v| !a.contains(v)) {
        return Check::fail(name, Witness::new(vec![1], vec![], v.clone()));
    }
    Check::pass(name)
}

pub(crate) fn subalgebra_check(name: &str, p: &WeakHopfPresentation, s: &Subspace) -> Check {
    if !s.contains(p.unit()) {
        return Check::fail(name, Witness::new(vec![], p.unit().to_vec(), vec![]));
    }
    let basis = s.basis();
    Check::exhaustive(name, tuples(&[basis.len(), basis.len()]), |t| {
        let prod = p.mul(&basis[t[0]], &basis[t[1]]);
        let proj = s.coordinates(&prod).map(|c| s.combination(&c)).unwrap_or_default();
        (prod, proj)
    })
}

/// Computes `ε_t`, `ε_s`, `H_t`, `H_s` and `S⁻¹`, and confirms idempotency,
/// that `H_t` is both the fixed-point set of `ε_t` and
/// `{h : Δ(h) = 1₁h ⊗ 1₂ = h1₁ ⊗ 1₂}` (dually for `H_s`), and that both are
/// unital subalgebras.
pub fn counital_data(p: &WeakHopfPresentation) -> Result<CounitalData> {
    require("counital_data", &verify_weak_hopf(p))?;
    let field = p.field();
    let n = p.dim();
    let eps_t = target_counital_matrix(p);
    let eps_s = source_counital_matrix(p);
    let target = eps_t.image();
    let source = eps_s.image();

    for (name, m) in [("target_counital_idempotent", &eps_t), ("source_counital_idempotent", &eps_s)] {
        let sq = m.mul(m);
        into_error(Check::from_bool(name, &sq == m, || {
            Witness::new(vec![], sq.entries().to_vec(), m.entries().to_vec())
        }))?;
    }

    let id = Matrix::identity(field, n);
    into_error(subspace_check("target_fixed_points", &kernel(&eps_t.sub(&id)), &target))?;
    into_error(subspace_check("source_fixed_points", &kernel(&eps_s.sub(&id)), &source))?;

    // Δ(h) - 1₁h⊗1₂ and Δ(h) - h1₁⊗1₂ stacked; kernel must be H_t. Dually
    // Δ(h) - 1₁⊗h1₂ and Δ(h) - 1₁⊗1₂h for H_s.
    let delta_one = p.delta_unit();
    let coideal = |target_side: bool| -> Subspace {
        let cols: Vec<Vector> = (0..n)
            .map(|h| {
                let d = p.coalgebra.basis_coproduct(h).to_vec();
                let (mut first, mut second) = (d.clone(), d);
                let eh = p.basis_vector(h);
                for (c, a, b) in p.terms2(&delta_one) {
                    let (ea, eb) = (p.basis_vector(a), p.basis_vector(b));
                    let (x, y) = if target_side {
                        (p.tensor(&p.mul(&ea, &eh), &eb), p.tensor(&p.mul(&eh, &ea), &eb))
                    } else {
                        (p.tensor(&ea, &p.mul(&eh, &eb)), p.tensor(&ea, &p.mul(&eb, &eh)))
                    };
                    vector::axpy(&mut first, &-c, &x);
                    vector::axpy(&mut second, &-c, &y);
                }
                first.extend(second);
                first
            })
            .collect();
        kernel(&Matrix::from_columns(field, 2 * n * n, &cols))
    };
    into_error(subspace_check("target_coideal_characterization", &coideal(true), &target))?;
    into_error(subspace_check("source_coideal_characterization", &coideal(false), &source))?;

    into_error(subalgebra_check("target_subalgebra", p, &target))?;
    into_error(subalgebra_check("source_subalgebra", p, &source))?;

    let antipode_inverse = p.antipode.inverse().ok_or_else(|| Error::Inconsistency {
        check: "antipode_invertible".into(),
        witness: Witness::new(vec![], p.antipode.entries().to_vec(), vec![]),
    })?;

    Ok(CounitalData { eps_t, eps_s, target, source, antipode_inverse })
}
