//! Computes the full invariant set of a four-qubit state.
//!
//! Run with: cargo run --example invariants

use fourtangle::canonical::g_state;
use fourtangle::invariants::full_invariant_set;
use fourtangle::state::random_state;
use num_complex::Complex64;

fn main() {
    // The canonical state with parameters (1, 2, 3, 4): every invariant
    // is a small rational number, handy for eyeballing conventions.
    let params = [1.0, 2.0, 3.0, 4.0].map(|x| Complex64::new(x, 0.0));
    let reference = g_state(&params);
    let inv = full_invariant_set(&reference).expect("internal relations hold");

    println!("canonical state with parameters (1, 2, 3, 4):");
    for (name, value) in inv.fields() {
        println!("  {name:>5} = {value}");
    }
    println!();
    println!("degrees: I1 is quadratic, I2/I4 quartic, I3 sextic in the amplitudes.");
    println!("expected: I1 = 15/2, I2 = 91/2, I3 = 205, I4 = 24.");
    println!();

    // A seeded random unit-norm state: the invariants are generic complex
    // numbers, but the internal consistency relations (H = 2 I1,
    // M = L + N, the sextic pairings, ...) still hold to rounding error.
    let state = random_state(42, true);
    let inv = full_invariant_set(&state).expect("internal relations hold");
    println!("seeded random unit-norm state (seed 42):");
    for (name, value) in inv.fields() {
        println!("  {name:>5} = {value:.6}");
    }
}
