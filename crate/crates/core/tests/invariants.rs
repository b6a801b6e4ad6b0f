use num_traits::Zero;
use proptest::prelude::*;
use symlie_core::exterior::{operator_matrix, OperatorKind};
use symlie_core::lie::{is_lie_element, lie_basis, solve_constraints};
use symlie_core::perm::enumerate_group;
use symlie_core::{GroupAlgebraElement, Permutation, Rational, RationalMatrix};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    let count = symlie_core::factorial(n);
    (0..count).prop_map(move |r| Permutation::from_lex_rank(n, r).unwrap())
}

fn element(n: usize) -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec((perm(n), -3i64..=3), 0..5).prop_map(move |terms| {
        GroupAlgebraElement::from_terms(
            n,
            terms
                .into_iter()
                .map(|(p, c)| (p, Rational::from_integer(c.into()))),
        )
        .unwrap()
    })
}

fn degree_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    f: impl Fn(usize) -> S + Clone + 'static,
) -> impl Strategy<Value = (usize, T)> {
    (2usize..=5).prop_flat_map(move |n| f(n).prop_map(move |v| (n, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_is_multiplicative((_, (p, q)) in degree_and(|n| (perm(n), perm(n)))) {
        prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
    }

    #[test]
    fn cycle_type_is_conjugation_invariant((_, (p, g)) in degree_and(|n| (perm(n), perm(n)))) {
        prop_assert_eq!(p.conjugate_by(&g).unwrap().cycle_type(), p.cycle_type());
    }

    #[test]
    fn cycle_text_round_trips((n, p) in degree_and(perm)) {
        let text = p.format_cycles();
        prop_assert_eq!(Permutation::parse_cycles(&text, n).unwrap(), p);
    }

    #[test]
    fn embedding_is_a_homomorphism((_, (x, y)) in degree_and(|n| (element(n), element(n)))) {
        let lhs = x.multiply(&y).unwrap().embed();
        prop_assert_eq!(lhs, x.embed().multiply(&y.embed()).unwrap());
    }

    #[test]
    fn multiplication_is_associative_and_distributive(
        (_, (x, y, z)) in degree_and(|n| (element(n), element(n), element(n)))
    ) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        prop_assert_eq!(&left, &x.multiply(&y.multiply(&z).unwrap()).unwrap());
        let dist = x.multiply(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(dist, x.multiply(&y).unwrap().add(&x.multiply(&z).unwrap()).unwrap());
    }

    #[test]
    fn jacobi_identity((_, (x, y, z)) in degree_and(|n| (element(n), element(n), element(n)))) {
        let a = x.bracket(&y.bracket(&z).unwrap()).unwrap();
        let b = y.bracket(&z.bracket(&x).unwrap()).unwrap();
        let c = z.bracket(&x.bracket(&y).unwrap()).unwrap();
        prop_assert!(a.add(&b).unwrap().add(&c).unwrap().is_zero());
    }

    #[test]
    fn conjugation_is_an_automorphism((_, (x, y, g)) in degree_and(|n| (element(n), element(n), perm(n)))) {
        let lhs = x.multiply(&y).unwrap().conjugate(&g).unwrap();
        let rhs = x.conjugate(&g).unwrap().multiply(&y.conjugate(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_sum_is_a_character((_, (x, y)) in degree_and(|n| (element(n), element(n)))) {
        let prod = x.multiply(&y).unwrap().coefficient_sum();
        prop_assert_eq!(prod, x.coefficient_sum() * y.coefficient_sum());
        prop_assert!(x.bracket(&y).unwrap().coefficient_sum().is_zero());
    }

    #[test]
    fn diagonal_action_is_multiplicative(
        (_, (x, y, m)) in degree_and(|n| (element(n), element(n), 0..=n))
    ) {
        let lhs = operator_matrix(&x.multiply(&y).unwrap(), m, OperatorKind::Diagonal).unwrap();
        let ax = operator_matrix(&x, m, OperatorKind::Diagonal).unwrap();
        let ay = operator_matrix(&y, m, OperatorKind::Diagonal).unwrap();
        prop_assert_eq!(lhs, ax.mul(&ay).unwrap());
    }

    #[test]
    fn derivation_action_preserves_brackets(
        (_, (x, y, m)) in degree_and(|n| (element(n), element(n), 0..=n))
    ) {
        let lhs = operator_matrix(&x.bracket(&y).unwrap(), m, OperatorKind::Derivation).unwrap();
        let bx = operator_matrix(&x, m, OperatorKind::Derivation).unwrap();
        let by = operator_matrix(&y, m, OperatorKind::Derivation).unwrap();
        prop_assert_eq!(lhs, RationalMatrix::commutator(&bx, &by).unwrap());
    }

    #[test]
    fn actions_agree_on_degree_one((_, x) in degree_and(element)) {
        prop_assert_eq!(
            operator_matrix(&x, 1, OperatorKind::Diagonal).unwrap(),
            operator_matrix(&x, 1, OperatorKind::Derivation).unwrap()
        );
    }

    #[test]
    fn operators_are_conjugation_equivariant(
        (_, (x, g, m)) in degree_and(|n| (element(n), perm(n), 0..=n))
    ) {
        let pg = operator_matrix(&GroupAlgebraElement::from_perm(g.clone()), m, OperatorKind::Diagonal).unwrap();
        let pinv = operator_matrix(&GroupAlgebraElement::from_perm(g.inverse()), m, OperatorKind::Diagonal).unwrap();
        for kind in [OperatorKind::Diagonal, OperatorKind::Derivation] {
            let lhs = operator_matrix(&x.conjugate(&g).unwrap(), m, kind).unwrap();
            let rhs = pg.mul(&operator_matrix(&x, m, kind).unwrap()).unwrap().mul(&pinv).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn lie_basis_is_closed_and_stable() {
    for n in 1..=4 {
        let lie = lie_basis(n).unwrap();
        let basis = lie.basis_elements();
        for u in &basis {
            assert!(is_lie_element(u).unwrap());
            assert!(u.coefficient_sum().is_zero());
            for v in &basis {
                assert!(lie.contains(&u.bracket(v).unwrap()).unwrap());
            }
            for g in enumerate_group(n).unwrap() {
                assert!(lie.contains(&u.conjugate(&g).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn degree_one_block_is_redundant() {
    for n in 1..=4 {
        let without: Vec<usize> = (0..=n).filter(|&m| m != 1).collect();
        assert_eq!(
            solve_constraints(n, &without).unwrap(),
            lie_basis(n).unwrap()
        );
    }
}

#[test]
fn lie_basis_is_idempotent_under_respan() {
    for n in 1..=4 {
        let lie = lie_basis(n).unwrap();
        let again = symlie_core::Subspace::span(n, &lie.basis_elements()).unwrap();
        assert_eq!(again, lie);
        assert!(lie.basis().is_rref() || lie.dim() == 0);
    }
}
