//! Exhaustive check of the weak Hopf algebra axioms on basis tuples.

use crate::exactlin::{vector, Scalar, Vector};
use crate::report::{tuples, AxiomReport, Check, Witness};

use super::counital::{source_counital_matrix, target_counital_matrix};
use super::presentation::WeakHopfPresentation;

/// Checks the algebra and coalgebra laws, then the three groups of weak Hopf
/// axioms: multiplicativity of `Δ`, the weak counit and unit identities,
/// and the antipode identities.
///
/// The third antipode identity is checked in the form `S(h₁)h₂S(h₃) = S(h)`.
/// When a prerequisite (associativity, unit, coassociativity, counit) fails,
/// the report contains only the prerequisite checks. The flag `weak` records
/// whether `Δ(1) ≠ 1 ⊗ 1`.
pub fn verify_weak_hopf(p: &WeakHopfPresentation) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.push(p.algebra.check_associativity());
    report.push(p.algebra.check_unit());
    report.push(p.coalgebra.check_coassociativity());
    report.push(p.coalgebra.check_counit());
    if !report.passed() {
        return report;
    }

    let n = p.dim();
    let field = p.field();
    let delta_one = p.delta_unit();
    let unit = p.unit();
    report.flag("weak", delta_one != p.tensor(unit, unit));

    report.push(Check::exhaustive("comultiplicativity", tuples(&[n, n]), |t| {
        let lhs = p.delta(p.algebra.basis_product(t[0], t[1]));
        let rhs = p.algebra.mul2(p.coalgebra.basis_coproduct(t[0]), p.coalgebra.basis_coproduct(t[1]));
        (lhs, rhs)
    }));

    let pairing = p.counit_pairing();
    let eps2 = |i: usize, j: usize| &pairing[i * n + j];
    let triple = |h: usize, g: usize, f: usize| -> Scalar {
        let mut acc = field.zero();
        for (k, c) in p.algebra.sparse_product(h, g) {
            acc += &(c * eps2(*k, f));
        }
        acc
    };
    for (name, swap) in [("counit_multiplicativity_left", false), ("counit_multiplicativity_right", true)] {
        report.push(Check::exhaustive(name, tuples(&[n, n, n]), |t| {
            let (h, g, f) = (t[0], t[1], t[2]);
            let mut rhs = field.zero();
            for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(g)) {
                let (first, second) = if swap { (b, a) } else { (a, b) };
                rhs += &(c * &(eps2(h, first) * eps2(second, f)));
            }
            (vec![triple(h, g, f)], vec![rhs])
        }));
    }

    let lhs = p.coalgebra.delta2(unit);
    let (mut inner_left, mut inner_right) = (vector::zeros(field, n * n * n), vector::zeros(field, n * n * n));
    for (x, a, b) in p.terms2(&delta_one) {
        for (y, c, d) in p.terms2(&delta_one) {
            let xy = x * y;
            // (Δ(1) ⊗ 1)(1 ⊗ Δ(1)) = a ⊗ bc ⊗ d and (1 ⊗ Δ(1))(Δ(1) ⊗ 1) = a ⊗ cb ⊗ d
            for (k, z) in p.algebra.sparse_product(b, c) {
                inner_left[(a * n + k) * n + d] += &(&xy * z);
            }
            for (k, z) in p.algebra.sparse_product(c, b) {
                inner_right[(a * n + k) * n + d] += &(&xy * z);
            }
        }
    }
    report.push(Check::from_bool("unit_coproduct_left", lhs == inner_left, || {
        Witness::new(vec![], lhs.clone(), inner_left.clone())
    }));
    report.push(Check::from_bool("unit_coproduct_right", lhs == inner_right, || {
        Witness::new(vec![], lhs.clone(), inner_right.clone())
    }));

    let s_cols = p.antipode.columns();
    let eps_t = target_counital_matrix(p);
    let eps_s = source_counital_matrix(p);
    report.push(Check::exhaustive("antipode_target", tuples(&[n]), |t| {
        let mut acc = vector::zeros(field, n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut acc, c, &p.mul(&p.basis_vector(a), &s_cols[b]));
        }
        (acc, eps_t.column(t[0]))
    }));
    report.push(Check::exhaustive("antipode_source", tuples(&[n]), |t| {
        let mut acc = vector::zeros(field, n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut acc, c, &p.mul(&s_cols[a], &p.basis_vector(b)));
        }
        (acc, eps_s.column(t[0]))
    }));
    report.push(Check::exhaustive("antipode_convolution", tuples(&[n]), |t| {
        (convolve_antipode(p, &s_cols, t[0]), s_cols[t[0]].clone())
    }));
    report
}

/// `S(h₁) h₂ S(h₃)` for `h = e_k`.
fn convolve_antipode(p: &WeakHopfPresentation, s_cols: &[Vector], k: usize) -> Vector {
    let n = p.dim();
    let d2 = p.coalgebra.delta2(&p.basis_vector(k));
    let mut acc = p.algebra.zero_vector();
    for (idx, c) in vector::support(&d2) {
        let (a, b, d) = (idx / (n * n), (idx / n) % n, idx % n);
        let left = p.mul(&s_cols[a], &p.basis_vector(b));
        vector::axpy(&mut acc, c, &p.mul(&left, &s_cols[d]));
    }
    acc
}
