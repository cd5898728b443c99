//! Runs the built-in verification suites: every algebraic identity the
//! crate relies on, checked over seeded random states, plus SLOCC
//! invariance and permutation symmetry. The same machinery backs the
//! `fourtangle verify` subcommand.
//!
//! Run with: cargo run --example verify_identities

use fourtangle::suite::{
    identity_suite_exact, identity_suite_float, permutation_suite, slocc_suite_float,
    SuiteReport, SuiteTolerances,
};

fn print_suite(report: &SuiteReport) {
    println!("== {} ({} trials) ==", report.label, report.trials);
    for check in &report.checks {
        println!(
            "  [{}] {:<58} worst residual {:.3e}",
            if check.failures == 0 { "PASS" } else { "FAIL" },
            check.name,
            check.max_residual
        );
    }
    println!(
        "  => {} ({} checks)",
        if report.passed { "all passed" } else { "FAILURES" },
        report.checks.len()
    );
    println!();
}

fn main() {
    let tols = SuiteTolerances::default();

    // Floating point: residuals sit at rounding level, far below the
    // acceptance thresholds.
    print_suite(&identity_suite_float(1, 100, &tols));

    // Exact arithmetic: the same identities with literally zero residual.
    print_suite(&identity_suite_exact(2, 10));

    // Invariance under random unit-determinant local operations and
    // under all 24 qubit permutations (for I1).
    print_suite(&slocc_suite_float(3, 50, 1e-8));
    print_suite(&permutation_suite(4, 50, 1e-12));
}
