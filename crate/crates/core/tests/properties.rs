use proptest::prelude::*;

use llvkit::clifford::CliffordAlgebra;
use llvkit::graded::exterior_action;
use llvkit::groupalg::{lefschetz_identity, wedge_traces};
use llvkit::involution::adjoint_involution;
use llvkit::linalg::{det, inverse};
use llvkit::quadform::{is_similitude, reflection_matrix, witt_cancel_equivariant, QuadraticSpace};
use llvkit::spinor::{spinor_rep, SpinorContext};
use llvkit::{qi, Mat, Rational};

fn small_mat(n: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| Mat::from_i64(n, n, &v))
}

fn nonzero_diag(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], n).prop_map(|v| v.into_iter().map(qi).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exterior_action_is_multiplicative(a in small_mat(3), b in small_mat(3)) {
        prop_assert_eq!(exterior_action(&a.mul(&b)), exterior_action(&a).mul(&exterior_action(&b)));
    }

    #[test]
    fn alternating_wedge_trace_is_det_of_one_minus_g(g in small_mat(4)) {
        let (alt, d) = lefschetz_identity(&g);
        prop_assert_eq!(&alt, &d);
        prop_assert_eq!(d, det(&Mat::identity(4).sub(&g)));
        prop_assert_eq!(wedge_traces(&g)[4].clone(), det(&g));
    }

    #[test]
    fn reflections_are_involutive_isometries(d in nonzero_diag(4), u in proptest::collection::vec(-3i64..=3, 4)) {
        let q = QuadraticSpace::diagonal(&d);
        let u: Vec<Rational> = u.into_iter().map(qi).collect();
        prop_assume!(!q.q(&u).is_zero());
        let r = reflection_matrix(&u, &q).unwrap();
        prop_assert!(q.is_isometry(&r));
        prop_assert_eq!(r.mul(&r), Mat::identity(4));
        prop_assert_eq!(det(&r), qi(-1));
    }

    #[test]
    fn witt_map_is_equivariant_isometry(d in nonzero_diag(3), p in 0usize..3) {
        // Send e₀ to the basis vector e_p when q agrees there; the sign flip
        // of every other coordinate fixes both.
        prop_assume!(d[0] == d[p]);
        let q = QuadraticSpace::diagonal(&d);
        let e = Mat::identity(3);
        let mut cols: Vec<Vec<Rational>> = (0..3).map(|i| e.column(i)).collect();
        cols.swap(0, p);
        let f = Mat::from_columns(&cols, 3);
        let mut flip = Mat::identity(3);
        for i in 0..3 {
            if i != 0 && i != p {
                flip[(i, i)] = qi(-1);
            }
        }
        let action = vec![Mat::identity(3), flip];
        let w = witt_cancel_equivariant(&q, &e, &f, 1, &action).unwrap();
        prop_assert!(q.is_isometry(&w.map));
        prop_assert_eq!(w.map.mul_vec(&e.column(0)), f.column(0));
        for g in &action {
            prop_assert_eq!(g.mul(&w.map), w.map.mul(g));
        }
        prop_assert_eq!(w.replay(&q).unwrap(), w.map);
    }

    #[test]
    fn clifford_star_reverses_products(d in nonzero_diag(3),
                                       x in proptest::collection::vec(-2i64..=2, 8),
                                       y in proptest::collection::vec(-2i64..=2, 8)) {
        let c = CliffordAlgebra::diagonal(&d);
        let x = c.element(x.into_iter().map(qi).collect()).unwrap();
        let y = c.element(y.into_iter().map(qi).collect()).unwrap();
        let lhs = c.star(&c.cmul(&x, &y).unwrap());
        let rhs = c.cmul(&c.star(&y), &c.star(&x)).unwrap();
        prop_assert_eq!(lhs.coeffs().to_vec(), rhs.coeffs().to_vec());
        let back = c.star(&c.star(&x));
        prop_assert_eq!(back.coeffs(), x.coeffs());
    }

    #[test]
    fn products_of_two_vectors_act_by_similitudes(d in nonzero_diag(3),
                                                  u in proptest::collection::vec(-2i64..=2, 3),
                                                  v in proptest::collection::vec(-2i64..=2, 3)) {
        let c = CliffordAlgebra::diagonal(&d);
        let q = QuadraticSpace::diagonal(&d);
        let u: Vec<Rational> = u.into_iter().map(qi).collect();
        let v: Vec<Rational> = v.into_iter().map(qi).collect();
        prop_assume!(!q.q(&u).is_zero() && !q.q(&v).is_zero());
        let x = c.cmul(&c.vector(&u), &c.vector(&v)).unwrap();
        prop_assert!(c.is_gspin(&x));
        let m = c.vector_rep(&x).unwrap();
        prop_assert!(is_similitude(&m, &q).is_some());
        let n = c.norm(&x).unwrap().as_scalar().unwrap();
        prop_assert_eq!(n.clone(), q.q(&u) * q.q(&v));
        let rot = m.scale(&n.recip());
        prop_assert!(q.is_isometry(&rot));
        prop_assert_eq!(det(&rot), qi(1));
    }

    #[test]
    fn spinor_rep_is_bracket_preserving(i in 0usize..15, j in 0usize..15) {
        let ctx = SpinorContext::new(3);
        let basis = ctx.so_basis();
        let (x, y) = (&basis[i], &basis[j]);
        let lhs = spinor_rep(&x.bracket(y), &ctx).unwrap();
        let rhs = spinor_rep(x, &ctx).unwrap().bracket(&spinor_rep(y, &ctx).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_involution_respects_products(a in small_mat(2), b in small_mat(2), s in small_mat(2)) {
        let form = s.add(&s.transpose());
        prop_assume!(!det(&form).is_zero());
        let alg = adjoint_involution(&form).unwrap();
        prop_assert_eq!(alg.apply(&a.mul(&b)), alg.apply(&b).mul(&alg.apply(&a)));
        let inv = inverse(&form).unwrap();
        prop_assert_eq!(alg.apply(&a), inv.mul(&a.transpose()).mul(&form));
    }
}
