use proptest::prelude::*;
use weakhopf::duality::{
    certify_smash, coregular_matrix, dual_action_on_smash_with, semisimplicity_radical, verify_target_smash,
    CoregularConvention, DualBasisPair, Duality,
};
use weakhopf::exactlin::{vector, Field, Matrix};
use weakhopf::groupoid::{groupoid_algebra, FiniteGroupoid};
use weakhopf::smash::{dual_action, smash_product, trivial_action, verify_module_algebra, ActionPresentation};
use weakhopf::wha::{verify_algebra_map, WeakHopfPresentation};

const Q: Field = Field::Rationals;

fn c2_point() -> FiniteGroupoid {
    FiniteGroupoid::disjoint_union(&FiniteGroupoid::cyclic(2), &FiniteGroupoid::point())
}

fn groupoids() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![("C2", FiniteGroupoid::cyclic(2)), ("pair2", FiniteGroupoid::pair(2)), ("C2+point", c2_point())]
}

fn composable_pairs(g: &FiniteGroupoid) -> usize {
    (0..g.len()).flat_map(|a| (0..g.len()).map(move |b| (a, b))).filter(|&(a, b)| g.source(a) == g.target(b)).count()
}

/// `Σ_x n_x²` with `n_x` the number of morphisms leaving `x`.
fn right_target_endomorphism_dim(g: &FiniteGroupoid) -> usize {
    (0..g.objects().len())
        .map(|x| (0..g.len()).filter(|&m| g.source(m) == x).count().pow(2))
        .sum()
}

fn actions(h: &WeakHopfPresentation) -> Vec<(&'static str, ActionPresentation)> {
    vec![("H_t", trivial_action(h).unwrap()), ("H*", dual_action(h).unwrap())]
}

#[test]
fn module_algebra_axioms_hold_for_both_actions() {
    for (name, g) in groupoids() {
        let h = groupoid_algebra(&g, Q).unwrap();
        for (kind, a) in actions(&h) {
            let report = verify_module_algebra(&a);
            assert!(report.passed(), "{name} {kind}: {:?}", report.failed_names());
        }
    }
}

#[test]
fn smash_dimensions_match_groupoid_counts() {
    for (name, g) in groupoids() {
        let h = groupoid_algebra(&g, Q).unwrap();
        let target = smash_product(&trivial_action(&h).unwrap()).unwrap();
        assert_eq!(target.dim(), g.len(), "{name}");
        let dual = smash_product(&dual_action(&h).unwrap()).unwrap();
        assert_eq!(dual.dim(), composable_pairs(&g), "{name}");
    }
}

#[test]
fn target_smash_is_isomorphic_to_h() {
    for (name, g) in groupoids() {
        let h = groupoid_algebra(&g, Q).unwrap();
        let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
        let report = verify_algebra_map(&h.algebra, &s.algebra, &s.embed_h);
        assert!(report.passed(), "{name}: {:?}", report.failed_names());
    }
}

#[test]
fn coregular_action_on_groupoid_algebra_is_diagonal() {
    // p_u ⇀ g = δ_{u,g} g in both conventions for kG.
    let g = FiniteGroupoid::pair(2);
    let h = groupoid_algebra(&g, Q).unwrap();
    for conv in [CoregularConvention::Right, CoregularConvention::Left] {
        for i in 0..g.len() {
            let m = coregular_matrix(&h, i, conv);
            for r in 0..g.len() {
                for c in 0..g.len() {
                    let expected = if r == i && c == i { Q.one() } else { Q.zero() };
                    assert_eq!(m[(r, c)], expected);
                }
            }
        }
    }
}

#[test]
fn left_convention_is_not_a_module_on_dual_of_pair_groupoid() {
    // On H = (k pair2)* the dual H* = k pair2 is noncommutative.
    let g = FiniteGroupoid::pair(2);
    let h = weakhopf::wha::dualize(&groupoid_algebra(&g, Q).unwrap()).unwrap();
    let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
    assert!(dual_action_on_smash_with(&s, CoregularConvention::Right).is_ok());
    assert!(dual_action_on_smash_with(&s, CoregularConvention::Left).is_err());
}

#[test]
fn duality_certificates_for_all_pairs() {
    for (name, g) in groupoids() {
        let h = groupoid_algebra(&g, Q).unwrap();
        for (kind, a) in actions(&h) {
            let s = smash_product(&a).unwrap();
            let cert = certify_smash(&s);
            assert!(cert.is_valid(), "{name} {kind}: {:?} {:?}", cert.report.failed_names(), cert.errors);
            assert_eq!(cert.iterated_dim, cert.commutant_dim);
            if kind == "H_t" {
                assert_eq!(cert.commutant_dim, Some(right_target_endomorphism_dim(&g)), "{name}");
            }
        }
    }
}

#[test]
fn dual_side_certificates() {
    // H = (kG)* exercises the duality with a commutative dual algebra.
    for (name, g) in groupoids() {
        let h = weakhopf::wha::dualize(&groupoid_algebra(&g, Q).unwrap()).unwrap();
        let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
        let cert = certify_smash(&s);
        assert!(cert.is_valid(), "{name}*: {:?} {:?}", cert.report.failed_names(), cert.errors);
    }
}

#[test]
fn target_smash_holds_over_q() {
    for (name, g) in groupoids() {
        let h = groupoid_algebra(&g, Q).unwrap();
        let report = verify_target_smash(&h).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.failed_names());
    }
}

#[test]
fn truncated_polynomial_radical() {
    for degree in 1..5 {
        let a = weakhopf::wha::AlgebraPresentation::truncated_polynomial(Q, degree);
        assert_eq!(semisimplicity_radical(&a).unwrap().dim(), degree - 1);
    }
}

#[test]
fn prime_field_duality() {
    let f = Field::prime(7).unwrap();
    let h = groupoid_algebra(&FiniteGroupoid::pair(2), f).unwrap();
    let s = smash_product(&dual_action(&h).unwrap()).unwrap();
    assert!(certify_smash(&s).is_valid());
}

#[test]
fn zero_action_is_reported_as_upstream_failure() {
    // The zero map is not a module action; the certificate records where
    // the construction stopped.
    let h = groupoid_algebra(&FiniteGroupoid::cyclic(2), Q).unwrap();
    let a = dual_action(&h).unwrap();
    let zero = vec![Q.zero(); a.action_tensor().len()];
    let bad = ActionPresentation::new(a.hopf.clone(), a.algebra.clone(), zero).unwrap();
    let cert = weakhopf::duality::certify_duality(&bad);
    assert!(!cert.is_valid());
    assert_eq!(cert.report.failed_names(), vec!["smash_product".to_string()]);
}

fn small_matrix(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n * n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn beta_is_independent_of_dual_basis(entries in small_matrix(4)) {
        let rows = entries.chunks(4).map(|r| r.iter().map(|&x| Q.from_i64(x)).collect()).collect();
        let p = Matrix::from_rows(Q, rows);
        let pair = DualBasisPair::from_basis(p);
        prop_assume!(pair.is_some());
        let pair = pair.unwrap();
        prop_assert_eq!(pair.canonical_element(), DualBasisPair::standard(Q, 4).canonical_element());

        let h = groupoid_algebra(&FiniteGroupoid::pair(2), Q).unwrap();
        let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
        let d = Duality::new(&s).unwrap();
        prop_assert_eq!(d.beta_with(&pair).unwrap(), d.beta().unwrap());
    }

    #[test]
    fn alpha_is_multiplicative_on_random_elements(
        u in prop::collection::vec(-2i64..=2, 8),
        v in prop::collection::vec(-2i64..=2, 8),
    ) {
        let h = groupoid_algebra(&FiniteGroupoid::pair(2), Q).unwrap();
        let s = smash_product(&trivial_action(&h).unwrap()).unwrap();
        let d = Duality::new(&s).unwrap();
        let alpha = d.alpha_flat();
        let n = s.dim();
        let to = |w: &[i64]| w.iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>();
        let (u, v) = (to(&u[..d.iterated.dim()]), to(&v[..d.iterated.dim()]));
        let uv = d.iterated.algebra.mul(&u, &v);
        let mat = |w: &[_]| weakhopf::duality::unflatten(Q, n, &alpha.mul_vec(w));
        prop_assert_eq!(mat(&uv), mat(&u).mul(&mat(&v)));
        prop_assert_eq!(vector::is_zero(&u), mat(&u).is_zero());
    }
}
