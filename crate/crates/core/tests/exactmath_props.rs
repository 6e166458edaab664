use ospzhu_core::exactmath::{BiPoly, Rational, UniPoly};
use ospzhu_core::q;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rat(), 0..6).prop_map(|c| UniPoly::from_dense(&c))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..4, 0u32..4, rat()), 0..6).prop_map(|ts| {
        let mut b = BiPoly::zero();
        for (a, n, c) in ts {
            b.add_term(a, n, c);
        }
        b
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn rational_parse_round_trip(a in rat()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn divmod_round_trip(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        if let Some(d) = rem.degree() {
            prop_assert!(d < b.degree().unwrap());
        }
    }

    #[test]
    fn eval_is_a_ring_map(a in poly(), b in poly(), x in rat()) {
        prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), &a.eval(&x) + &b.eval(&x));
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn gcd_of_root_products(
        common in prop::collection::vec(rat(), 0..4),
        left in prop::collection::vec(rat(), 0..4),
        right in prop::collection::vec(rat(), 0..4),
    ) {
        let mut l: Vec<Rational> = common.clone();
        l.extend(left.clone());
        let mut r: Vec<Rational> = common.clone();
        r.extend(right.clone());
        let g = UniPoly::from_roots(&l).gcd(&UniPoly::from_roots(&r));
        let mut shared = Vec::new();
        let mut rest = right.clone();
        for x in &left {
            if let Some(i) = rest.iter().position(|y| y == x) {
                shared.push(rest.remove(i));
            }
        }
        let mut all = common.clone();
        all.extend(shared);
        prop_assert_eq!(g, UniPoly::from_roots(&all));
    }

    #[test]
    fn squarefree_iff_distinct_roots(roots in prop::collection::vec(rat(), 1..6)) {
        let f = UniPoly::from_roots(&roots);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(f.is_squarefree(), distinct.len() == roots.len());
        prop_assert!(f.has_root_multiset(&roots));
        prop_assert_eq!(f.degree(), Some(roots.len() as u32));
    }

    #[test]
    fn bipoly_derivations(a in bipoly(), b in bipoly(), x in rat(), y in rat()) {
        prop_assert_eq!((&a * &b).d_dt2(), &(&a.d_dt2() * &b) + &(&a * &b.d_dt2()));
        prop_assert_eq!(a.euler_t2(), &BiPoly::t2() * &a.d_dt2());
        prop_assert_eq!((&a * &b).eval(&x, &y), &a.eval(&x, &y) * &b.eval(&x, &y));
        let mut rebuilt = BiPoly::zero();
        for (n, s) in a.strata() {
            rebuilt = &rebuilt + &BiPoly::from_stratum(&s, n);
        }
        prop_assert_eq!(rebuilt, a);
    }
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(UniPoly::t().divmod(&UniPoly::zero()).is_err());
    assert!(q!(0).recip().is_err());
}
