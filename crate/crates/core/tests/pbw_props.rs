use ospzhu_core::exactmath::Rational;
use ospzhu_core::pbw::*;
use ospzhu_core::q;
use proptest::prelude::*;

const GENS: [Gen; 5] = [Gen::F, Gen::Y, Gen::H, Gen::X, Gen::E];

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(Algebra::G), Just(Algebra::L0)]
}

fn word() -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(prop::sample::select(GENS.to_vec()), 0..5)
}

fn element(alg: Algebra) -> impl Strategy<Value = UEElement> {
    prop::collection::vec((word(), -3i64..=3), 1..3).prop_map(move |ts| {
        ts.into_iter().fold(UEElement::zero(alg), |acc, (w, c)| &acc + &UEElement::from_word(alg, &w).scale(&q!(c)))
    })
}

fn triple() -> impl Strategy<Value = (UEElement, UEElement, UEElement)> {
    algebra().prop_flat_map(|alg| (element(alg), element(alg), element(alg)))
}

proptest! {
    #[test]
    fn multiplication_is_associative((a, b, c) in triple()) {
        prop_assert_eq!(nf_mul(&nf_mul(&a, &b), &c), nf_mul(&a, &nf_mul(&b, &c)));
        prop_assert_eq!(nf_mul(&a, &(&b + &c)), &nf_mul(&a, &b) + &nf_mul(&a, &c));
    }

    #[test]
    fn sigma_is_a_super_anti_automorphism(alg in algebra(), u in word(), v in word()) {
        let a = UEElement::from_word(alg, &u);
        let b = UEElement::from_word(alg, &v);
        let odd = |w: &[Gen]| w.iter().filter(|g| g.is_odd()).count() % 2 == 1;
        let sign = if odd(&u) && odd(&v) { q!(-1) } else { q!(1) };
        prop_assert_eq!(sigma(&nf_mul(&a, &b)), nf_mul(&sigma(&b), &sigma(&a)).scale(&sign));
    }

    #[test]
    fn words_multiply_by_concatenation(alg in algebra(), u in word(), v in word()) {
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(
            UEElement::from_word(alg, &uv),
            nf_mul(&UEElement::from_word(alg, &u), &UEElement::from_word(alg, &v))
        );
    }

    #[test]
    fn super_jacobi(alg in algebra(), a in 0usize..5, b in 0usize..5, c in 0usize..5) {
        let [a, b, c] = [a, b, c].map(|i| UEElement::gen(alg, GENS[i]));
        let sign = |x: &UEElement, y: &UEElement| {
            if x.parity() == Some(1) && y.parity() == Some(1) { -1 } else { 1 }
        };
        let lhs = a.supercommutator(&b.supercommutator(&c));
        let rhs = &a.supercommutator(&b).supercommutator(&c)
            + &b.supercommutator(&a.supercommutator(&c)).scale(&q!(sign(&a, &b)));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn odd_squares_collapse() {
    let g = |x| UEElement::gen(Algebra::G, x);
    assert_eq!(g(Gen::X).pow(2), g(Gen::E));
    assert_eq!(g(Gen::Y).pow(2), g(Gen::F).scale(&q!(-1)));
    let l = |x| UEElement::gen(Algebra::L0, x);
    assert_eq!(l(Gen::X).pow(2), l(Gen::E).scale(&q!(-1)));
}

#[test]
fn identity_suites_hold() {
    let gammas: Vec<u32> = (0..=6).collect();
    let grid = default_alpha_grid();
    assert_eq!(grid.len(), 10);
    for alg in [Algebra::G, Algebra::L0] {
        let r = verify_pq_identities(alg, &gammas, &grid);
        assert!(r.passed(), "{:?}", r.asserted_failures().next());
    }
    for a in 1..=8 {
        assert!(xy_power_factorization(a).holds);
    }
}

#[test]
fn sigma_is_an_involution() {
    let e = UEElement::from_word(Algebra::G, &[Gen::X, Gen::Y, Gen::E]).scale(&Rational::new(3, 2));
    assert_eq!(sigma(&sigma(&e)), e);
    assert_ne!(pq(&q!(0), PqKind::P, Algebra::G), pq(&q!(0), PqKind::Q, Algebra::G));
}
