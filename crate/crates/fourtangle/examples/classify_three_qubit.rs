//! Classifies three-qubit states by where their projective line sits
//! relative to the invariant quadric: crossing it in two points (GHZ
//! class), tangent to it (W class), lying inside it (biseparable with
//! the first qubit entangled), or degenerating to a point (the first
//! qubit is separable).
//!
//! Run with: cargo run --example classify_three_qubit

use fourtangle::hyperdet::{concurrence, three_qubit_report, three_tangle};
use fourtangle::state::ThreeQubitState;
use num_complex::Complex64;

fn state(amps: [f64; 8]) -> ThreeQubitState<Complex64> {
    ThreeQubitState::from_amplitudes(amps.map(|x| Complex64::new(x, 0.0))).unwrap()
}

fn show(label: &str, s: &ThreeQubitState<Complex64>) {
    let report = three_qubit_report(s, 1e-9);
    println!("{label}:");
    println!("  class        = {}", report.class);
    println!("  D3           = {:.6}", report.d3);
    println!("  three-tangle = {:.6}", three_tangle(s));
    println!("  consistent   = {}", report.consistent);
    println!();
}

fn main() {
    let h = 0.5f64.sqrt();
    let t = (1.0f64 / 3.0).sqrt();

    // GHZ: maximal three-way entanglement, the line meets the quadric in
    // two distinct points and the three-tangle is 1.
    show("GHZ  (|000> + |111>)/sqrt(2)", &state([h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, h]));

    // W: the line is tangent — three-way tangle vanishes even though the
    // state is fully entangled.
    show(
        "W    (|001> + |010> + |100>)/sqrt(3)",
        &state([0.0, t, t, 0.0, t, 0.0, 0.0, 0.0]),
    );

    // First qubit separable: the two line points coincide.
    show("|0> x (|00> + |11>)/sqrt(2)", &state([h, 0.0, 0.0, h, 0.0, 0.0, 0.0, 0.0]));

    // Last qubit separable: the line lies entirely inside the quadric.
    show("(|00> + |11>)/sqrt(2) x |0>", &state([h, 0.0, 0.0, 0.0, 0.0, 0.0, h, 0.0]));

    // For comparison, a two-qubit quantity: the concurrence of a Bell
    // pair embedded in the first two qubits.
    let bell = [h, 0.0, 0.0, h];
    let c = concurrence(&bell.map(|x| Complex64::new(x, 0.0)));
    println!("Bell pair concurrence = {c:.6} (maximally entangled: 1)");
}
