//! Anchor tests against two fixed reference states whose invariants were
//! computed independently in exact arithmetic. Every value below is pinned
//! as a literal: these tests fail if any convention in the crate (index
//! order, metric signs, normalization of the invariants) drifts.

use fourtangle::canonical::{g_state, orbit_invariants, vandermonde_d4};
use fourtangle::hyperdet::{
    hyperdeterminant_report, quartic_discriminant, st_invariants, QuarticPolynomial, ROUTE_RTOL,
};
use fourtangle::invariants::full_invariant_set;
use fourtangle::scalar::GaussianRational;
use fourtangle::state::FourQubitState;
use num_complex::Complex64;
use num_rational::BigRational;

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

fn gr(re: &str, im: &str) -> GaussianRational {
    GaussianRational::new(rat(re), rat(im))
}

fn int(n: i64) -> GaussianRational {
    gr(&n.to_string(), "0")
}

#[test]
fn canonical_1234_state_invariants_are_exact() {
    let params = [int(1), int(2), int(3), int(4)];
    let state = g_state(&params);

    // The state itself: amplitudes (a±d)/2 and (b±c)/2 on the pattern
    // spanned by |0000>, |0011>, |0101>, |0110> and their complements.
    assert_eq!(*state.amplitude(0), gr("5/2", "0"));
    assert_eq!(*state.amplitude(3), gr("-3/2", "0"));
    assert_eq!(*state.amplitude(5), gr("5/2", "0"));
    assert_eq!(*state.amplitude(6), gr("-1/2", "0"));
    assert_eq!(*state.amplitude(9), gr("-1/2", "0"));
    assert_eq!(*state.amplitude(10), gr("5/2", "0"));
    assert_eq!(*state.amplitude(12), gr("-3/2", "0"));
    assert_eq!(*state.amplitude(15), gr("5/2", "0"));

    let inv = full_invariant_set(&state).unwrap();
    assert_eq!(inv.h, gr("15", "0"));
    assert_eq!(inv.l, gr("24", "0"));
    assert_eq!(inv.m, gr("0", "0"));
    assert_eq!(inv.n, gr("-24", "0"));
    assert_eq!(inv.i1, gr("15/2", "0"));
    assert_eq!(inv.i2, gr("91/2", "0"));
    assert_eq!(inv.i3, gr("205", "0"));
    assert_eq!(inv.i4, gr("24", "0"));
    assert_eq!(inv.u, gr("129", "0"));
    assert_eq!(inv.d_xy, gr("25", "0"));
    assert_eq!(inv.d_zt, gr("25", "0"));
    assert_eq!(inv.d_xz, gr("385", "0"));
    assert_eq!(inv.d_yt, gr("385", "0"));
    assert_eq!(inv.d_xt, gr("25", "0"));
    assert_eq!(inv.d_yz, gr("25", "0"));

    let (s, t) = st_invariants(&inv);
    assert_eq!(s, gr("2547/4", "0"));
    assert_eq!(t, gr("20007/8", "0"));

    // Resolvent-quartic discriminant and the hyperdeterminant routes.
    let disc = quartic_discriminant(&QuarticPolynomial::from_invariants(&inv));
    assert_eq!(disc, gr("22861440000", "0"));

    let report = hyperdeterminant_report(&state, ROUTE_RTOL).unwrap();
    assert_eq!(report.consensus, Some(gr("89302500", "0")));
    assert_eq!(report.d4_st, gr("89302500", "0"));
    assert_eq!(report.d4_quartic, gr("89302500", "0"));
    assert_eq!(report.d4_schlaefli, gr("89302500", "0"));

    // The orbit shortcuts agree with the state-level computation.
    let (o1, o2, o3, o4) = orbit_invariants(&params);
    assert_eq!(o1, inv.i1);
    assert_eq!(o2, inv.i2);
    assert_eq!(o3, inv.i3);
    assert_eq!(o4, inv.i4);
    assert_eq!(vandermonde_d4(&params), gr("89302500", "0"));
}

#[test]
fn canonical_1234_state_matches_in_float_mode() {
    let params = [1.0, 2.0, 3.0, 4.0].map(|x| Complex64::new(x, 0.0));
    let state = g_state(&params);
    let inv = full_invariant_set(&state).unwrap();

    let expect = [
        (inv.i1, 7.5),
        (inv.i2, 45.5),
        (inv.i3, 205.0),
        (inv.i4, 24.0),
        (inv.h, 15.0),
        (inv.l, 24.0),
        (inv.m, 0.0),
        (inv.n, -24.0),
        (inv.u, 129.0),
        (inv.d_xy, 25.0),
        (inv.d_xz, 385.0),
        (inv.d_xt, 25.0),
    ];
    for (got, want) in expect {
        assert!(
            (got - Complex64::new(want, 0.0)).norm() <= 1e-9 * want.abs().max(1.0),
            "got {got}, want {want}"
        );
    }

    let report = hyperdeterminant_report(&state, ROUTE_RTOL).unwrap();
    let d4 = report.consensus.unwrap();
    assert!((d4.re - 89302500.0).abs() <= 1e-4);
    assert!(d4.im.abs() <= 1e-4);
}

/// A dense Gaussian-rational state with no special structure; all sixteen
/// amplitudes nonzero, complex, and of mixed denominators.
fn dense_rational_state() -> FourQubitState<GaussianRational> {
    let raw: [(&str, &str); 16] = [
        ("-1/2", "5/3"),
        ("3", "1"),
        ("5/4", "0"),
        ("-6", "1"),
        ("-3", "0"),
        ("-3", "0"),
        ("4", "1"),
        ("9", "8/3"),
        ("6", "2"),
        ("-4", "5/3"),
        ("-3/4", "-7/4"),
        ("-1", "-7/4"),
        ("8/3", "0"),
        ("-3", "-6"),
        ("-9/4", "3"),
        ("-1", "-4"),
    ];
    FourQubitState::from_amplitudes(raw.map(|(re, im)| gr(re, im))).unwrap()
}

#[test]
fn dense_rational_state_invariants_are_exact() {
    let state = dense_rational_state();
    let inv = full_invariant_set(&state).unwrap();

    assert_eq!(inv.h, gr("-749/12", "-331/12"));
    assert_eq!(inv.l, gr("234335/216", "-27497/32"));
    assert_eq!(inv.m, gr("353077/432", "561049/432"));
    assert_eq!(inv.n, gr("-38531/144", "1864517/864"));
    assert_eq!(inv.i1, gr("-749/24", "-331/24"));
    assert_eq!(inv.i2, gr("109919/324", "-1499101/2592"));
    assert_eq!(inv.i3, gr("-153352927/6912", "7285833419/62208"));
    assert_eq!(inv.i4, gr("234335/216", "-27497/32"));
    assert_eq!(inv.u, gr("-483167/108", "182039/108"));
    assert_eq!(inv.d_xy, gr("2399441/288", "51633145/31104"));
    assert_eq!(inv.d_zt, gr("2399441/288", "51633145/31104"));
    assert_eq!(inv.d_xz, gr("-703933565/10368", "2005817573/15552"));
    assert_eq!(inv.d_yt, gr("-703933565/10368", "2005817573/15552"));
    assert_eq!(inv.d_xt, gr("7621087/324", "3274198273/31104"));
    assert_eq!(inv.d_yz, gr("7621087/324", "3274198273/31104"));

    let (s, t) = st_invariants(&inv);
    assert_eq!(s, gr("-195962598257/20736", "5797409022481/559872"));
    assert_eq!(
        t,
        gr(
            "-72616787191952051905/8707129344",
            "-249752633075223547/544195584"
        )
    );

    let report = hyperdeterminant_report(&state, ROUTE_RTOL).unwrap();
    let d4 = gr(
        "100966925809628134163204566097319879463/311992186885373952",
        "7104581482852270934928077371569149797/4874877920083968",
    );
    assert_eq!(report.consensus, Some(d4.clone()));
    assert_eq!(report.d4_st, d4.clone());
    assert_eq!(report.d4_quartic, d4.clone());
    assert_eq!(report.d4_schlaefli, d4);
}
