//! Property-based tests for the scalar field and the normalizers.

use proptest::prelude::*;
use uaw::algebra::{AlgebraElement, CentralMono, Generator, Word};
use uaw::normalform::normalize_pre;
use uaw::qfield::{rat, LaurentPolyQ, RatFuncQ};

fn arb_poly() -> impl Strategy<Value = LaurentPolyQ> {
    prop::collection::vec((-4i64..=4, -6i64..=6, 1i64..=4), 0..4).prop_map(|terms| {
        LaurentPolyQ::from_terms(
            terms
                .into_iter()
                .map(|(e, p, r)| (e, rat(p, r)))
                .collect::<Vec<_>>(),
        )
    })
}

fn arb_scalar() -> impl Strategy<Value = RatFuncQ> {
    (arb_poly(), arb_poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFuncQ::from_poly(n)
        } else {
            RatFuncQ::new(n, d).unwrap()
        }
    })
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, 0..4).prop_map(|ls| {
        Word(
            ls.into_iter()
                .map(|l| match l {
                    0 => Generator::A,
                    1 => Generator::B,
                    _ => Generator::C,
                })
                .collect(),
        )
    })
}

fn arb_element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((arb_word(), 0u32..2, 0u32..2, arb_scalar()), 1..3).prop_map(
        |terms| {
            AlgebraElement::from_terms(terms.into_iter().map(|(w, a, g, c)| {
                (
                    w,
                    CentralMono {
                        omega: 0,
                        alpha: a,
                        beta: 0,
                        gamma: g,
                    },
                    c,
                )
            }))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn multiplicative_inverse(a in arb_scalar()) {
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), RatFuncQ::one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in arb_scalar(), m in arb_poly()) {
        // Multiplying numerator and denominator by the same nonzero
        // polynomial must not change the representation.
        if !m.is_zero() && !a.is_zero() {
            let blown = RatFuncQ::new(
                a.numerator().mul(&m),
                a.denominator().mul(&m),
            ).unwrap();
            prop_assert_eq!(blown, a);
        }
    }

    #[test]
    fn specialize_is_ring_homomorphism(a in arb_scalar(), b in arb_scalar()) {
        let q0 = rat(3, 2);
        let (sa, sb) = (a.specialize(&q0), b.specialize(&q0));
        if let (Ok(sa), Ok(sb)) = (sa, sb) {
            prop_assert_eq!(a.add(&b).specialize(&q0).unwrap(), sa.clone() + sb.clone());
            prop_assert_eq!(a.mul(&b).specialize(&q0).unwrap(), sa * sb);
        }
    }

    #[test]
    fn normalizer_is_idempotent_and_linear(x in arb_element(), y in arb_element()) {
        let nx = normalize_pre(&x).unwrap();
        let ny = normalize_pre(&y).unwrap();
        prop_assert_eq!(normalize_pre(&nx).unwrap(), nx.clone());
        prop_assert_eq!(normalize_pre(&x.add(&y)).unwrap(), nx.add(&ny));
    }

    #[test]
    fn free_multiplication_is_associative(
        x in arb_element(),
        y in arb_element(),
        z in arb_element(),
    ) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}
