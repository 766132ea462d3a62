//! Consequences of the weak Hopf axioms: antipode properties and the
//! counital identities used by the duality construction.
//!
//! Both suites evaluate their formulas directly from the presentation, so
//! they still produce a meaningful report on presentations that fail
//! [`verify_weak_hopf`](super::verify_weak_hopf).

use crate::exactlin::{tensor_matrix, vector, Matrix, Scalar, Subspace, Vector};
use crate::report::{tuples, AxiomReport, Check, Witness};

use super::counital::{source_counital_matrix, subspace_check, target_counital_matrix};
use super::presentation::WeakHopfPresentation;

struct Derived {
    eps_t: Matrix,
    eps_s: Matrix,
    target: Subspace,
    source: Subspace,
    s_cols: Vec<Vector>,
    s_inv: Option<Matrix>,
}

impl Derived {
    fn of(p: &WeakHopfPresentation) -> Derived {
        let eps_t = target_counital_matrix(p);
        let eps_s = source_counital_matrix(p);
        Derived {
            target: eps_t.image(),
            source: eps_s.image(),
            eps_t,
            eps_s,
            s_cols: p.antipode.columns(),
            s_inv: p.antipode.inverse(),
        }
    }
}

fn matrix_check(name: &str, lhs: &Matrix, rhs: &Matrix) -> Check {
    Check::exhaustive(name, tuples(&[lhs.cols()]), |t| (lhs.column(t[0]), rhs.column(t[0])))
}

fn flip(p: &WeakHopfPresentation, v: &[Scalar]) -> Vector {
    let n = p.dim();
    let mut out = vector::zeros(p.field(), n * n);
    for (c, a, b) in p.terms2(v) {
        out[b * n + a] = c.clone();
    }
    out
}

/// The separability idempotent `S(1₁) ⊗ 1₂` of `H_t`.
pub fn separability_element(p: &WeakHopfPresentation) -> Vector {
    let n = p.dim();
    let mut e = vector::zeros(p.field(), n * n);
    for (c, a, b) in p.terms2(&p.delta_unit()) {
        let sa = p.antipode.column(a);
        vector::axpy(&mut e, c, &p.tensor(&sa, &p.basis_vector(b)));
    }
    e
}

/// Anti-(co)multiplicativity and invertibility of `S`, its interaction with
/// the counital maps and subalgebras, and the separability idempotent.
pub fn verify_antipode_properties(p: &WeakHopfPresentation) -> AxiomReport {
    let n = p.dim();
    let field = p.field();
    let d = Derived::of(p);
    let s = &p.antipode;
    let mut report = AxiomReport::new();

    report.push(Check::exhaustive("antipode_anti_multiplicative", tuples(&[n, n]), |t| {
        let lhs = p.antipode_of(p.algebra.basis_product(t[0], t[1]));
        let rhs = p.mul(&d.s_cols[t[1]], &d.s_cols[t[0]]);
        (lhs, rhs)
    }));
    report.push(Check::exhaustive("antipode_anti_comultiplicative", tuples(&[n]), |t| {
        let mut lhs = vector::zeros(field, n * n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut lhs, c, &p.tensor(&d.s_cols[a], &d.s_cols[b]));
        }
        let rhs = flip(p, &p.delta(&d.s_cols[t[0]]));
        (lhs, rhs)
    }));
    report.push(Check::from_bool("antipode_invertible", d.s_inv.is_some(), || {
        Witness::new(vec![], s.entries().to_vec(), vec![])
    }));
    report.push(matrix_check("antipode_target_to_source", &s.mul(&d.eps_t), &d.eps_s.mul(s)));
    report.push(matrix_check("antipode_source_to_target", &s.mul(&d.eps_s), &d.eps_t.mul(s)));

    let s2 = s.mul(s);
    for (name, sub) in [("antipode_square_on_target", &d.target), ("antipode_square_on_source", &d.source)] {
        let basis = sub.basis();
        report.push(Check::exhaustive(name, tuples(&[basis.len()]), |t| {
            (s2.mul_vec(&basis[t[0]]), basis[t[0]].clone())
        }));
    }

    let s_of_target: Vec<Vector> = d.target.basis().iter().map(|z| s.mul_vec(z)).collect();
    let image = Subspace::span(field, n, &s_of_target);
    let mut onto = subspace_check("antipode_target_onto_source", &image, &d.source);
    if onto.passed && image.dim() != d.target.dim() {
        onto = Check::fail(onto.name, Witness::at(vec![d.target.dim(), image.dim()]));
    }
    report.push(onto);

    let (zt, ws) = (d.target.basis(), d.source.basis());
    report.push(Check::exhaustive("counital_subalgebras_commute", tuples(&[zt.len(), ws.len()]), |t| {
        (p.mul(&zt[t[0]], &ws[t[1]]), p.mul(&ws[t[1]], &zt[t[0]]))
    }));

    let e = separability_element(p);
    let proj = tensor_matrix(&d.eps_t, &d.eps_t);
    report.push(Check::from_bool("separability_idempotent_in_target", proj.mul_vec(&e) == e, || {
        Witness::new(vec![], e.clone(), proj.mul_vec(&e))
    }));
    let mut m_e = p.algebra.zero_vector();
    for (c, a, b) in p.terms2(&e) {
        vector::axpy(&mut m_e, c, p.algebra.basis_product(a, b));
    }
    report.push(Check::from_bool("separability_idempotent_multiplication", m_e == p.unit(), || {
        Witness::new(vec![], m_e.clone(), p.unit().to_vec())
    }));
    let one = p.unit().to_vec();
    report.push(Check::exhaustive("separability_idempotent_balanced", tuples(&[zt.len()]), |t| {
        let z = &zt[t[0]];
        (p.algebra.mul2(&p.tensor(z, &one), &e), p.algebra.mul2(&e, &p.tensor(&one, z)))
    }));
    report
}

/// `Σ c·(e_a ⊗ e_b)` terms of `Δ(1)` mapped through `f(a, b)`.
fn over_delta_one<F>(p: &WeakHopfPresentation, delta_one: &[Scalar], mut f: F) -> Vector
where
    F: FnMut(usize, usize) -> Vector,
{
    let n = p.dim();
    let mut out = vector::zeros(p.field(), n * n);
    for (c, a, b) in p.terms2(delta_one) {
        vector::axpy(&mut out, c, &f(a, b));
    }
    out
}

/// The counital identities:
///
/// * `h₁ ⊗ ε_t(h₂) = 1₁h ⊗ 1₂` and `ε_s(h₁) ⊗ h₂ = 1₁ ⊗ h1₂`,
/// * `1₁S(z) ⊗ 1₂ = 1₁ ⊗ 1₂z` for `z ∈ H_t`,
/// * `h₂S⁻¹(h₁) ⊗ h₃ = S(ε_t(h₁)) ⊗ h₂ = 1₁ ⊗ 1₂h`,
/// * `ε_t(hg) = ε_t(h ε_t(g))`.
pub fn verify_counital_identities(p: &WeakHopfPresentation) -> AxiomReport {
    let n = p.dim();
    let field = p.field();
    let d = Derived::of(p);
    let delta_one = p.delta_unit();
    let e = |i: usize| p.basis_vector(i);
    let mut report = AxiomReport::new();

    report.push(Check::exhaustive("target_counital_split", tuples(&[n]), |t| {
        let h = e(t[0]);
        let mut lhs = vector::zeros(field, n * n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut lhs, c, &p.tensor(&e(a), &d.eps_t.column(b)));
        }
        let rhs = over_delta_one(p, &delta_one, |a, b| p.tensor(&p.mul(&e(a), &h), &e(b)));
        (lhs, rhs)
    }));
    report.push(Check::exhaustive("source_counital_split", tuples(&[n]), |t| {
        let h = e(t[0]);
        let mut lhs = vector::zeros(field, n * n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            vector::axpy(&mut lhs, c, &p.tensor(&d.eps_s.column(a), &e(b)));
        }
        let rhs = over_delta_one(p, &delta_one, |a, b| p.tensor(&e(a), &p.mul(&h, &e(b))));
        (lhs, rhs)
    }));

    let zt = d.target.basis();
    report.push(Check::exhaustive("target_antipode_exchange", tuples(&[zt.len()]), |t| {
        let z = &zt[t[0]];
        let sz = p.antipode_of(z);
        let lhs = over_delta_one(p, &delta_one, |a, b| p.tensor(&p.mul(&e(a), &sz), &e(b)));
        let rhs = over_delta_one(p, &delta_one, |a, b| p.tensor(&e(a), &p.mul(&e(b), z)));
        (lhs, rhs)
    }));

    match &d.s_inv {
        Some(s_inv) => {
            let s_inv_cols = s_inv.columns();
            report.push(Check::exhaustive("inverse_antipode_split", tuples(&[n]), |t| {
                let d2 = p.coalgebra.delta2(&e(t[0]));
                let mut lhs = vector::zeros(field, n * n);
                for (idx, c) in vector::support(&d2) {
                    let (a, b, f) = (idx / (n * n), (idx / n) % n, idx % n);
                    vector::axpy(&mut lhs, c, &p.tensor(&p.mul(&e(b), &s_inv_cols[a]), &e(f)));
                }
                (lhs, unit_split(p, &delta_one, t[0]))
            }));
        }
        None => report.push(Check::fail(
            "inverse_antipode_split",
            Witness::new(vec![], p.antipode.entries().to_vec(), vec![]),
        )),
    }
    report.push(Check::exhaustive("antipode_target_split", tuples(&[n]), |t| {
        let mut lhs = vector::zeros(field, n * n);
        for (c, a, b) in p.terms2(p.coalgebra.basis_coproduct(t[0])) {
            let left = p.antipode_of(&d.eps_t.column(a));
            vector::axpy(&mut lhs, c, &p.tensor(&left, &e(b)));
        }
        (lhs, unit_split(p, &delta_one, t[0]))
    }));

    report.push(Check::exhaustive("target_counital_absorbs", tuples(&[n, n]), |t| {
        let lhs = d.eps_t.mul_vec(p.algebra.basis_product(t[0], t[1]));
        let rhs = d.eps_t.mul_vec(&p.mul(&e(t[0]), &d.eps_t.column(t[1])));
        (lhs, rhs)
    }));
    report
}

/// `1₁ ⊗ 1₂ e_h`.
fn unit_split(p: &WeakHopfPresentation, delta_one: &[Scalar], h: usize) -> Vector {
    let eh = p.basis_vector(h);
    over_delta_one(p, delta_one, |a, b| p.tensor(&p.basis_vector(a), &p.mul(&p.basis_vector(b), &eh)))
}
