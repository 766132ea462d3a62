use proptest::prelude::*;
use weakhopf::exactlin::{kernel, quotient_basis, rref, rref_with_transform, solve, tensor_matrix, vector, Field, Matrix};

const Q: Field = Field::Rationals;

fn matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-4i64..=4, r * c).prop_map(move |e| {
            Matrix::from_rows(field, e.chunks(c).map(|row| row.iter().map(|&x| field.from_i64(x)).collect()).collect())
        })
    })
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Q), Just(Field::prime(5).unwrap()), Just(Field::prime(101).unwrap())]
}

proptest! {
    #[test]
    fn rank_plus_nullity_any_field(m in fields().prop_flat_map(matrix)) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
    }

    #[test]
    fn rank_plus_nullity_q(m in matrix(Q)) {
        let k = kernel(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn rref_transform_reproduces_echelon_form(m in matrix(Field::prime(7).unwrap())) {
        let (r, e, pivots) = rref_with_transform(&m);
        prop_assert_eq!(e.mul(&m), r.clone());
        prop_assert!(e.inverse().is_some());
        prop_assert_eq!(rref(&m), (r, pivots));
    }

    #[test]
    fn solve_multiplies_back(m in matrix(Q), x in prop::collection::vec(-3i64..=3, 4)) {
        let x: Vec<_> = x[..m.cols()].iter().map(|&v| Q.from_i64(v)).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn quotient_invariants(m in matrix(Q)) {
        let rels = m.to_rows();
        let q = quotient_basis(Q, m.cols(), &rels);
        prop_assert_eq!(q.dim() + q.relations.dim(), m.cols());
        prop_assert!(q.projection.mul(&q.section).is_identity());
        for r in &rels {
            prop_assert!(vector::is_zero(&q.project(r)));
        }
    }

    #[test]
    fn kronecker_mixed_product(a in matrix(Q), b in matrix(Q)) {
        let (c, d) = (a.transpose(), b.transpose());
        let lhs = tensor_matrix(&a, &b).mul(&tensor_matrix(&c, &d));
        let rhs = tensor_matrix(&a.mul(&c), &b.mul(&d));
        prop_assert_eq!(lhs, rhs);
    }
}
