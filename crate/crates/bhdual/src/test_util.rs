//! Shared proptest strategies for the test suites of several modules.

use num_traits::One;
use proptest::prelude::*;

use crate::invertible::{Perm, TypeTag, TypedForm};
use crate::poly::Coeff;

/// Canonical parameter triples for each normal-form type, kept small so
/// property tests stay fast.
pub fn arb_canonical_params() -> impl Strategy<Value = (TypeTag, [u64; 3])> {
    prop_oneof![
        (2u64..=6, 2u64..=6, 2u64..=6).prop_map(|(a, b, c)| {
            let mut p = [a, b, c];
            p.sort_unstable();
            (TypeTag::I, p)
        }),
        (2u64..=6, 2u64..=6, 2u64..=5).prop_map(|(p1, p2, m)| (TypeTag::II, [p1, p2, p2 * m])),
        (2u64..=6, 1u64..=4, 1u64..=4)
            .prop_map(|(p1, a, b)| (TypeTag::III, [p1, a.min(b), a.max(b)])),
        (2u64..=4, 2u64..=4, 2u64..=4)
            .prop_map(|(p1, a, b)| (TypeTag::IV, [p1, p1 * a, p1 * a * b])),
        (1u64..=4, 1u64..=4, 1u64..=4).prop_map(|(a, b, c)| {
            let rots = [[a, b, c], [b, c, a], [c, a, b]];
            (TypeTag::V, rots.into_iter().min().unwrap())
        }),
    ]
}

/// A classified form with random permutation and small nonzero rational
/// coefficients.
pub fn arb_form() -> impl Strategy<Value = TypedForm> {
    let coeff = || {
        (1i64..=4, proptest::bool::ANY)
            .prop_map(|(n, neg)| Coeff::from_integer(if neg { -n } else { n }.into()))
    };
    (arb_canonical_params(), 0usize..6, coeff(), coeff(), coeff()).prop_map(
        |((tag, params), perm_idx, c1, c2, c3)| {
            TypedForm::try_new(tag, params, Perm::ALL[perm_idx], [c1, c2, c3])
                .expect("generated parameters are valid")
        },
    )
}

/// A normal form (identity permutation, unit coefficients).
pub fn arb_normal_form() -> impl Strategy<Value = TypedForm> {
    arb_canonical_params().prop_map(|(tag, params)| {
        TypedForm::try_new(
            tag,
            params,
            Perm::identity(),
            [Coeff::one(), Coeff::one(), Coeff::one()],
        )
        .expect("generated parameters are valid")
    })
}
