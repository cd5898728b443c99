//! The tetrahedron picture: a four-qubit state is four points in complex
//! projective 3-space. Generic states span a full tetrahedron; entangled
//! degenerations collapse it — the point rank drops, Plücker lines
//! vanish, and edges become mutually incident.
//!
//! Run with: cargo run --example tetrahedron

use fourtangle::canonical::g_state;
use fourtangle::geometry::LineLabel;
use fourtangle::state::{random_state, FourQubitState};
use fourtangle::tetrahedron::{tetrahedron_report, TetrahedronReport, TETRAHEDRON_RTOL};
use num_complex::Complex64;

fn describe(label: &str, report: &TetrahedronReport<Complex64>) {
    println!("{label}:");
    println!("  point rank  = {}", report.point_rank);
    println!("  I4          = {:.6}", report.i4);
    println!("  degenerate  = {}", report.degenerate);
    let lines: Vec<String> = report.vanishing_lines.iter().map(|l| l.to_string()).collect();
    println!(
        "  vanishing lines: {}",
        if lines.is_empty() { "(none)".into() } else { lines.join(" ") }
    );
    println!("  incidence (x = edges meet):");
    print!("      ");
    for l in LineLabel::ALL {
        print!("{l:>4}");
    }
    println!();
    for (i, l) in LineLabel::ALL.iter().enumerate() {
        print!("  {l:>4}");
        for j in 0..6 {
            print!("{:>4}", if report.incidence[i][j] { "x" } else { "." });
        }
        println!();
    }
    println!();
}

fn main() {
    // A generic state: full tetrahedron. Adjacent edges (sharing a
    // vertex, like AB and AC) always meet; opposite edges (AB and CD)
    // only meet when the state degenerates.
    let state = random_state(7, true);
    describe("generic random state", &tetrahedron_report(&state, TETRAHEDRON_RTOL));

    // The canonical state with two vanishing parameters: rank drops to 2
    // and all but one line vanish.
    let params = [1.0, 0.0, 0.0, 1.0].map(|x| Complex64::new(x, 0.0));
    describe(
        "GHZ-type canonical state (b = c = 0)",
        &tetrahedron_report(&g_state(&params), TETRAHEDRON_RTOL),
    );

    // A product basis state: all four points coincide projectively.
    let basis: FourQubitState<Complex64> = FourQubitState::basis(0);
    describe("product basis state |0000>", &tetrahedron_report(&basis, TETRAHEDRON_RTOL));
}
