//! The dual quantum groupoid and the ordinary-Hopf classifier.

use crate::error::{Error, Result};
use crate::report::Witness;

use super::counital::{counital_data, require};
use super::presentation::{AlgebraPresentation, CoalgebraPresentation, WeakHopfPresentation};
use super::verify::verify_weak_hopf;

/// Transposes every structure tensor through the pairing `⟨ψ_i, e_j⟩ = δ_ij`
/// without any verification.
pub fn transpose_structure(p: &WeakHopfPresentation) -> Result<WeakHopfPresentation> {
    let n = p.dim();
    let field = p.field();
    // ⟨ψ_i ψ_j, e_k⟩ = ⟨ψ_i ⊗ ψ_j, Δ(e_k)⟩
    let algebra = AlgebraPresentation::from_products(field, n, p.counit().to_vec(), |i, j| {
        (0..n).map(|k| p.coalgebra.coeff(k, i, j).clone()).collect()
    })?;
    // ⟨Δ(ψ_k), e_i ⊗ e_j⟩ = ⟨ψ_k, e_i e_j⟩
    let coalgebra = CoalgebraPresentation::from_coproducts(field, n, p.unit().to_vec(), |k| {
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(p.algebra.coeff(i, j, k).clone());
            }
        }
        d
    })?;
    WeakHopfPresentation::new(algebra, coalgebra, p.antipode.transpose())
}

/// The dual `H*` on the dual basis: multiplication and comultiplication are
/// swapped and transposed, the unit is `ε`, the counit is evaluation at `1`
/// and the antipode is `Sᵀ`.
pub fn dualize(p: &WeakHopfPresentation) -> Result<WeakHopfPresentation> {
    require("dualize", &verify_weak_hopf(p))?;
    let dual = transpose_structure(p)?;
    let report = verify_weak_hopf(&dual);
    if let Some(c) = report.failures().next() {
        return Err(Error::Inconsistency {
            check: format!("dual {}", c.name),
            witness: c.witness.clone().unwrap_or_else(|| Witness::at(vec![])),
        });
    }
    Ok(dual)
}

/// The three equivalent criteria for an ordinary Hopf algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HopfClassification {
    pub ordinary: bool,
    /// `Δ(1) = 1 ⊗ 1`.
    pub unit_coproduct_trivial: bool,
    /// `ε(e_i e_j) = ε(e_i) ε(e_j)` for all basis pairs.
    pub counit_multiplicative: bool,
    /// `dim H_t = dim H_s = 1`.
    pub counital_subalgebras_trivial: bool,
}

/// Evaluates all three criteria; disagreement means the presentation or this
/// library is broken and is reported as an inconsistency.
pub fn classify_ordinary_hopf(p: &WeakHopfPresentation) -> Result<HopfClassification> {
    let counital = counital_data(p)?;
    let unit = p.unit();
    let unit_coproduct_trivial = p.delta_unit() == p.tensor(unit, unit);
    let n = p.dim();
    let pairing = p.counit_pairing();
    let eps = p.counit();
    let counit_multiplicative =
        (0..n).all(|i| (0..n).all(|j| pairing[i * n + j] == &eps[i] * &eps[j]));
    let counital_subalgebras_trivial = counital.target.dim() == 1 && counital.source.dim() == 1;

    let flags = [unit_coproduct_trivial, counit_multiplicative, counital_subalgebras_trivial];
    if flags.iter().any(|&f| f != flags[0]) {
        return Err(Error::Inconsistency {
            check: "hopf_classification".into(),
            witness: Witness::at(flags.iter().map(|&f| f as usize).collect()),
        });
    }
    Ok(HopfClassification {
        ordinary: flags[0],
        unit_coproduct_trivial,
        counit_multiplicative,
        counital_subalgebras_trivial,
    })
}
