//! Property tests for the exact-arithmetic layer.

use charsheaf::exactalg::cyclo::{rat, CycLaurent};
use charsheaf::exactalg::Partition;
use proptest::prelude::*;

fn arb_partition(max_total: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=8, 0..8).prop_map(move |mut parts| {
        // trim to the size budget
        let mut total = 0u32;
        parts.retain(|&p| {
            if total + p <= max_total {
                total += p;
                true
            } else {
                false
            }
        });
        Partition::new(parts).unwrap()
    })
}

fn arb_unit() -> impl Strategy<Value = CycLaurent> {
    (1u32..=12, 0i64..12, -3i64..=3).prop_map(|(n, k, e)| {
        CycLaurent::root_of_unity(n, k).mul(&CycLaurent::u_pow(e))
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in arb_partition(30)) {
        prop_assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn dual_swaps_b_invariant_roles(p in arb_partition(20)) {
        // n(lambda*) = sum binom(lambda_i, 2)
        let direct: u64 = p.parts().iter().map(|&x| (x as u64) * (x as u64 - 1) / 2).sum();
        prop_assert_eq!(p.dual().b_invariant(), direct);
    }

    #[test]
    fn units_have_monomial_norms(x in arb_unit(), y in arb_unit()) {
        // for z a root of unity times u^e, z conj(z) = u^{2e} exactly
        let z = x.mul(&y);
        let e = z.min_degree().unwrap();
        prop_assert_eq!(z.abs_sq(), CycLaurent::u_pow(2 * e));
        // and the inverse inverts
        let inv = z.try_inverse().unwrap();
        prop_assert_eq!(z.mul(&inv), CycLaurent::one());
    }

    #[test]
    fn laurent_ring_axioms(a in arb_unit(), b in arb_unit(), c in arb_unit()) {
        let ab = a.add(&b);
        prop_assert_eq!(ab.mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), CycLaurent::zero());
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in arb_unit(), b in arb_unit()) {
        let s = a.add(&b.scale(&rat(3, 7)));
        prop_assert_eq!(s.conj().conj(), s.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }
}
