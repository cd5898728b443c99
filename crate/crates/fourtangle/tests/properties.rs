//! Property-based checks of the exterior-algebra layer and the
//! invariants' scaling behavior over randomized inputs.

use fourtangle::geometry::{bracket, hodge_dual, wedge2, Bivector, Vector4};
use fourtangle::invariants::full_invariant_set;
use fourtangle::state::FourQubitState;
use num_complex::Complex64;
use proptest::prelude::*;

fn amp() -> impl Strategy<Value = Complex64> + Clone {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn vector() -> impl Strategy<Value = Vector4<Complex64>> {
    prop::array::uniform4(amp()).prop_map(Vector4)
}

fn bivector() -> impl Strategy<Value = Bivector<Complex64>> {
    prop::array::uniform6(amp()).prop_map(|c| Bivector { c })
}

fn state() -> impl Strategy<Value = FourQubitState<Complex64>> {
    prop::array::uniform16(amp())
        .prop_filter("state must not be tiny", |amps| {
            amps.iter().map(|a| a.norm_sqr()).sum::<f64>() >= 1e-2
        })
        .prop_map(|amps| FourQubitState::from_amplitudes(amps).unwrap())
}

proptest! {
    #[test]
    fn wedge_is_antisymmetric(x in vector(), y in vector()) {
        let xy = wedge2(&x, &y);
        let yx = wedge2(&y, &x);
        for j in 0..6 {
            prop_assert_eq!(xy.c[j], -yx.c[j]);
        }
    }

    #[test]
    fn hodge_duality_squares_to_the_identity(p in bivector()) {
        let pss = hodge_dual(&hodge_dual(&p));
        for j in 0..6 {
            prop_assert_eq!(pss.c[j], p.c[j]);
        }
    }

    #[test]
    fn bracket_is_symmetric(p in bivector(), q in bivector()) {
        let pq = bracket(&p, &q);
        let qp = bracket(&q, &p);
        let scale = 1.0 + pq.norm().max(qp.norm());
        prop_assert!((pq - qp).norm() <= 1e-12 * scale);
    }

    #[test]
    fn duality_preserves_the_bracket(p in bivector(), q in bivector()) {
        let plain = bracket(&p, &q);
        let starred = bracket(&hodge_dual(&p), &hodge_dual(&q));
        let scale = 1.0 + plain.norm();
        prop_assert!((plain - starred).norm() <= 1e-12 * scale);
    }

    #[test]
    fn invariants_scale_by_their_degree(s in state()) {
        // Doubling every amplitude multiplies a degree-2d invariant by
        // 2^(2d); powers of two are exact in floating point, so the
        // comparison is bitwise.
        let inv = full_invariant_set(&s).unwrap();
        let doubled = full_invariant_set(&s.scaled(&Complex64::new(2.0, 0.0))).unwrap();
        prop_assert_eq!(doubled.i1, inv.i1 * 4.0);
        prop_assert_eq!(doubled.i2, inv.i2 * 16.0);
        prop_assert_eq!(doubled.i3, inv.i3 * 64.0);
        prop_assert_eq!(doubled.i4, inv.i4 * 16.0);
        prop_assert_eq!(doubled.d(), inv.d() * 64.0);
    }
}
