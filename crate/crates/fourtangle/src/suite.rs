//! The seeded verification suite: a battery of algebraic identities
//! evaluated per state, plus SLOCC-invariance and permutation-invariance
//! suites, each aggregated into a pass/fail report with worst-case
//! residuals.
//!
//! Residuals are scaled by `ns^(d/2)` where `ns` is the squared state norm
//! and `d` the homogeneity degree of the identity, so tolerances are
//! meaningful on states of any size. In exact mode a residual is `0.0`
//! exactly when the identity holds exactly; any nonzero residual fails.

use crate::geometry::{
    bivector_dot, bracket, dot, dual_points, hodge_dual, pluecker_set, trivector_dot, Bivector,
    BIVECTOR_PAIRS, EXTERIOR_METRIC, METRIC_PART, METRIC_SIGN, PlaneLabel,
};
use crate::hyperdet::{
    d4_from_st, det3, pencil_coefficients, quartic_discriminant, st_invariants, v_invariant,
    QuarticPolynomial,
};
use crate::invariants::{full_invariant_set, invariant_i1, IDENTITY_RTOL};
use crate::scalar::{scaled_residual, times, GaussianRational, Scalar};
use crate::state::{
    apply_slocc, permute_qubits, random_local_operation_with,
    random_rational_local_operation_with, random_rational_state_with, random_state_with,
    FourQubitState, QubitPermutation, ThreeQubitState,
};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pass thresholds for the three groups of identity checks (float mode;
/// exact mode demands exact zeros everywhere).
#[derive(Clone, Copy, Debug)]
pub struct SuiteTolerances {
    /// Identities of degree at most 12 built directly from the invariants.
    pub core: f64,
    /// Degree-24 route-agreement identities (discriminants, `S³ - 27 T²`).
    pub routes: f64,
    /// Degree-24 homogeneity of `D4` under amplitude scaling.
    pub d4_homogeneity: f64,
}

impl SuiteTolerances {
    /// Scales the default profile to a caller-chosen core tolerance,
    /// keeping the standard ratios between groups.
    pub fn from_core(core: f64) -> Self {
        SuiteTolerances {
            core,
            routes: core * 1e3,
            d4_homogeneity: core * 10.0,
        }
    }
}

impl Default for SuiteTolerances {
    fn default() -> Self {
        SuiteTolerances::from_core(IDENTITY_RTOL)
    }
}

/// One identity evaluated on one state.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Scale-normalized residual; `0.0` means exact.
    pub residual: f64,
    pub pass: bool,
}

fn check<T: Scalar>(name: &'static str, diff: T, scale: f64, tol: f64) -> IdentityCheck {
    let residual = scaled_residual(&diff, scale);
    IdentityCheck {
        name,
        residual,
        pass: if T::EXACT { residual == 0.0 } else { residual <= tol },
    }
}

fn check_many<T: Scalar>(
    name: &'static str,
    diffs: Vec<T>,
    scale: f64,
    tol: f64,
) -> IdentityCheck {
    let residual = diffs
        .iter()
        .map(|d| scaled_residual(d, scale))
        .fold(0.0f64, f64::max);
    IdentityCheck {
        name,
        residual,
        pass: if T::EXACT { residual == 0.0 } else { residual <= tol },
    }
}

/// Evaluates the whole identity battery on one state.
pub fn state_identity_checks<T: Scalar>(
    state: &FourQubitState<T>,
    tols: &SuiteTolerances,
) -> Vec<IdentityCheck> {
    let inv = match full_invariant_set(state) {
        Ok(inv) => inv,
        Err(crate::error::Error::RelationViolation { name, residual }) => {
            return vec![IdentityCheck {
                name,
                residual,
                pass: false,
            }]
        }
        Err(_) => {
            return vec![IdentityCheck {
                name: "invariant construction",
                residual: f64::INFINITY,
                pass: false,
            }]
        }
    };
    let ns = state.norm_sqr().max(f64::MIN_POSITIVE);
    let sc = |deg_half: i32| ns.powi(deg_half);
    let core = tols.core;
    let mut out: Vec<IdentityCheck> = Vec::with_capacity(40);

    let two = |v: T| times(2, v);
    let cols = state.columns();
    let pl = pluecker_set(state);
    let lines = &pl.lines;
    let planes = &pl.planes;
    let star: [Bivector<T>; 6] = std::array::from_fn(|i| hodge_dual(&lines[i]));
    let duals = dual_points(&cols);

    // --- invariant-relation identities -----------------------------------
    out.push(check(
        "H expansion equals twice I1",
        inv.h.clone() - two(inv.i1.clone()),
        sc(1),
        core,
    ));
    out.push(check(
        "M equals L plus N",
        inv.m.clone() - (inv.l.clone() + inv.n.clone()),
        sc(2),
        core,
    ));
    out.push(check(
        "six I2 equals H squared plus 2L minus 4M",
        times(6, inv.i2.clone())
            - (inv.h.clone() * inv.h.clone() + times(2, inv.l.clone()) - times(4, inv.m.clone())),
        sc(2),
        core,
    ));
    out.push(check(
        "U equals six times the I2 minus I4 difference",
        inv.u.clone() - times(6, inv.i2.clone() - inv.i4.clone()),
        sc(2),
        core,
    ));

    // --- line (bivector) identities ---------------------------------------
    out.push(check(
        "wedge pairing of opposite column pairs expands in dots",
        bivector_dot(&lines[0], &lines[5])
            - two(dot(&cols[0], &cols[2]) * dot(&cols[1], &cols[3])
                - dot(&cols[0], &cols[3]) * dot(&cols[1], &cols[2])),
        sc(2),
        core,
    ));
    {
        let mut contraction = T::zero();
        for i in 0..6 {
            for j in 0..6 {
                let g = EXTERIOR_METRIC[i][j];
                if g != 0 {
                    contraction = contraction + times(g, bivector_dot(&lines[i], &lines[j]));
                }
            }
        }
        out.push(check(
            "metric-contracted line pairing gives twelve I2",
            contraction - times(12, inv.i2.clone()),
            sc(2),
            core,
        ));
    }
    {
        // Fully ordered double contraction over the antisymmetric matrix of
        // edge lines, indices raised by the quadric form: 24 I2.
        let line_at = |mu: usize, nu: usize| -> Option<(usize, i64)> {
            if mu == nu {
                return None;
            }
            let (a, b, sign) = if mu < nu { (mu, nu, 1) } else { (nu, mu, -1) };
            let idx = BIVECTOR_PAIRS.iter().position(|&p| p == (a, b)).unwrap();
            Some((idx, sign))
        };
        let mut total = T::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                let Some((lo, s1)) = line_at(mu, nu) else { continue };
                let Some((hi, s2)) = line_at(METRIC_PART[mu], METRIC_PART[nu]) else {
                    continue;
                };
                let coeff = s1 * s2 * METRIC_SIGN[mu] * METRIC_SIGN[nu];
                total = total + times(coeff, bivector_dot(&lines[hi], &lines[lo]));
            }
        }
        out.push(check(
            "ordered line matrix self-contraction gives 24 I2",
            total - times(24, inv.i2.clone()),
            sc(2),
            core,
        ));
    }

    // --- dual points and planes --------------------------------------------
    {
        let mut diffs = Vec::with_capacity(12);
        for (i, dual) in duals.iter().enumerate() {
            for (j, point) in cols.iter().enumerate() {
                if i != j {
                    diffs.push(dot(dual, point));
                }
            }
        }
        out.push(check_many(
            "dual points annihilate their defining points",
            diffs,
            sc(2),
            core,
        ));
    }
    out.push(check(
        "dual-point pairing gives twice I3",
        (dot(&duals[0], &duals[3]) - dot(&duals[1], &duals[2])) - two(inv.i3.clone()),
        sc(3),
        core,
    ));
    {
        // Plane order: planes[0] = BCD, planes[1] = ACD, planes[2] = ABD,
        // planes[3] = ABC.
        out.push(check(
            "face-plane contraction gives twelve I3",
            (trivector_dot(&planes[1], &planes[2]) - trivector_dot(&planes[0], &planes[3]))
                - times(12, inv.i3.clone()),
            sc(3),
            core,
        ));
    }
    {
        // Fully ordered triple contraction over the antisymmetric array of
        // face planes: 144 I3.
        let plane_at = |m: usize, n: usize, r: usize| -> Option<(usize, i64)> {
            if m == n || n == r || m == r {
                return None;
            }
            let mut v = [m, n, r];
            let mut sign = 1i64;
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if v[i] > v[j] {
                        v.swap(i, j);
                        sign = -sign;
                    }
                }
            }
            let idx = PlaneLabel::ALL
                .iter()
                .position(|p| p.points() == (v[0], v[1], v[2]))
                .unwrap();
            Some((idx, sign))
        };
        let mut total = T::zero();
        for m in 0..4 {
            for n in 0..4 {
                for r in 0..4 {
                    let Some((lo, s1)) = plane_at(m, n, r) else { continue };
                    let Some((hi, s2)) =
                        plane_at(METRIC_PART[m], METRIC_PART[n], METRIC_PART[r])
                    else {
                        continue;
                    };
                    let coeff =
                        s1 * s2 * METRIC_SIGN[m] * METRIC_SIGN[n] * METRIC_SIGN[r];
                    total = total + times(coeff, trivector_dot(&planes[hi], &planes[lo]));
                }
            }
        }
        out.push(check(
            "ordered plane self-contraction gives 144 I3",
            total - times(144, inv.i3.clone()),
            sc(3),
            core,
        ));
    }

    // --- bracket and duality identities -------------------------------------
    out.push(check(
        "bracket of opposite edges AB,CD gives I4",
        bracket(&lines[0], &lines[5]) - inv.i4.clone(),
        sc(2),
        core,
    ));
    out.push(check(
        "bracket of opposite edges AC,BD gives minus I4",
        bracket(&lines[1], &lines[4]) + inv.i4.clone(),
        sc(2),
        core,
    ));
    out.push(check(
        "bracket of opposite edges AD,BC gives I4",
        bracket(&lines[2], &lines[3]) - inv.i4.clone(),
        sc(2),
        core,
    ));
    out.push(check_many(
        "starred opposite-edge brackets reproduce I4",
        vec![
            bracket(&star[0], &star[5]) - inv.i4.clone(),
            bracket(&star[1], &star[4]) + inv.i4.clone(),
            bracket(&star[2], &star[3]) - inv.i4.clone(),
        ],
        sc(2),
        core,
    ));
    out.push(check(
        "duality preserves the bracket",
        bracket(&star[1], &star[3]) - bracket(&lines[1], &lines[3]),
        sc(2),
        core,
    ));
    out.push(check(
        "mixed bracket halves the line pairing",
        bracket(&lines[0], &star[5]) - bivector_dot(&lines[0], &lines[5]) * T::ratio(1, 2),
        sc(2),
        core,
    ));
    out.push(check(
        "mixed bracket is symmetric in the star",
        bracket(&lines[0], &star[5]) - bracket(&star[0], &lines[5]),
        sc(2),
        core,
    ));
    out.push(check(
        "mixed-bracket combination gives six I2",
        bracket(&lines[0], &star[5]) + bracket(&star[0], &lines[5])
            + bracket(&lines[1], &star[4])
            + bracket(&star[1], &lines[4])
            - bracket(&lines[2], &star[2])
            - bracket(&lines[3], &star[3])
            - times(6, inv.i2.clone()),
        sc(2),
        core,
    ));
    {
        let p31 = -lines[4].clone();
        let sp31 = hodge_dual(&p31);
        let plus = |p: &Bivector<T>, q: &Bivector<T>| p.clone() + q.clone();
        let minus = |p: &Bivector<T>, q: &Bivector<T>| p.clone() - q.clone();
        let top = bracket(&plus(&lines[0], &star[0]), &plus(&lines[5], &star[5]))
            + bracket(&minus(&lines[1], &star[1]), &minus(&p31, &sp31))
            - bracket(&minus(&lines[3], &star[2]), &minus(&star[3], &lines[2]));
        let bot = -bracket(&minus(&lines[0], &star[0]), &minus(&lines[5], &star[5]))
            - bracket(&plus(&lines[1], &star[1]), &plus(&p31, &sp31))
            - bracket(&plus(&lines[3], &star[2]), &plus(&star[3], &lines[2]));
        out.push(check(
            "self-dual bracket combination gives six times I2 plus I4",
            top - times(6, inv.i2.clone() + inv.i4.clone()),
            sc(2),
            core,
        ));
        out.push(check(
            "anti-self-dual bracket combination gives six times I2 minus I4",
            bot - times(6, inv.i2.clone() - inv.i4.clone()),
            sc(2),
            core,
        ));
    }

    // --- sextic identities ----------------------------------------------------
    out.push(check(
        "sextic pair XY matches ZT",
        inv.d_xy.clone() - inv.d_zt.clone(),
        sc(3),
        core,
    ));
    out.push(check(
        "sextic pair XZ matches YT",
        inv.d_xz.clone() - inv.d_yt.clone(),
        sc(3),
        core,
    ));
    out.push(check(
        "sextic pair XT matches YZ",
        inv.d_xt.clone() - inv.d_yz.clone(),
        sc(3),
        core,
    ));
    out.push(check(
        "sextic difference equals H times L",
        (inv.d_xz.clone() - inv.d_xt.clone()) - inv.h.clone() * inv.l.clone(),
        sc(3),
        core,
    ));
    out.push(check(
        "twice I3 equals the sum of complementary sextics",
        two(inv.i3.clone()) - (inv.d_xz.clone() + inv.d_xt.clone()),
        sc(3),
        core,
    ));
    out.push(check(
        "I3 equals D plus half H times L",
        inv.i3.clone() - (inv.d_xt.clone() + inv.h.clone() * inv.l.clone() * T::ratio(1, 2)),
        sc(3),
        core,
    ));

    // --- S, T and the hyperdeterminant routes ----------------------------------
    let (s, t) = st_invariants(&inv);
    let v = v_invariant(&inv);
    let d4 = d4_from_st(&inv);
    out.push(check(
        "twelve S equals U squared minus twice V",
        times(12, s.clone()) - (inv.u.clone() * inv.u.clone() - times(2, v.clone())),
        sc(4),
        tols.routes,
    ));
    out.push(check(
        "216 T closes on U, V and the sextic D",
        times(216, t.clone())
            - (inv.u.clone() * inv.u.clone() * inv.u.clone() - times(3, inv.u.clone() * v)
                + times(216, inv.d() * inv.d())),
        sc(6),
        tols.routes,
    ));
    let resolvent = QuarticPolynomial::from_invariants(&inv);
    let disc_p = quartic_discriminant(&resolvent);
    out.push(check(
        "resolvent discriminant equals 256 times S cubed minus 27 T squared",
        disc_p.clone() - times(256, d4.clone()),
        sc(12),
        tols.routes,
    ));
    match pencil_coefficients(state) {
        Ok(pencil) => {
            out.push(check(
                "pencil discriminant matches the resolvent discriminant",
                quartic_discriminant(&pencil) - disc_p,
                sc(12),
                tols.routes,
            ));
            let amps = state.amplitudes();
            let xs: [T; 8] = std::array::from_fn(|i| amps[i].clone());
            let ys: [T; 8] = std::array::from_fn(|i| amps[8 + i].clone());
            let x3 = ThreeQubitState::from_amplitudes(xs).expect("finite");
            let y3 = ThreeQubitState::from_amplitudes(ys).expect("finite");
            out.push(check_many(
                "pencil endpoints match the half-state hyperdeterminants",
                vec![
                    pencil.c[0].clone() - det3(&x3),
                    pencil.c[4].clone() - det3(&y3),
                ],
                sc(2),
                core,
            ));
        }
        Err(err) => out.push(IdentityCheck {
            name: "pencil coefficient interpolation is well conditioned",
            residual: match err {
                crate::error::Error::IllConditionedPencil { residual } => residual,
                _ => f64::INFINITY,
            },
            pass: false,
        }),
    }

    // --- homogeneity under amplitude doubling ----------------------------------
    {
        let doubled = state.scaled(&T::from_int(2));
        let inv2 = match full_invariant_set(&doubled) {
            Ok(inv2) => inv2,
            Err(_) => {
                out.push(IdentityCheck {
                    name: "invariant construction on the doubled state",
                    residual: f64::INFINITY,
                    pass: false,
                });
                return out;
            }
        };
        let ns2 = doubled.norm_sqr().max(f64::MIN_POSITIVE);
        let sc2 = |deg_half: i32| ns2.powi(deg_half);
        out.push(check(
            "I1 is homogeneous of degree two",
            inv2.i1.clone() - times(4, inv.i1.clone()),
            sc2(1),
            core,
        ));
        out.push(check(
            "I2 is homogeneous of degree four",
            inv2.i2.clone() - times(16, inv.i2.clone()),
            sc2(2),
            core,
        ));
        out.push(check(
            "I3 is homogeneous of degree six",
            inv2.i3.clone() - times(64, inv.i3.clone()),
            sc2(3),
            core,
        ));
        out.push(check(
            "I4 is homogeneous of degree four",
            inv2.i4.clone() - times(16, inv.i4.clone()),
            sc2(2),
            core,
        ));
        out.push(check(
            "the sextic D is homogeneous of degree six",
            inv2.d() - times(64, inv.d()),
            sc2(3),
            core,
        ));
        out.push(check(
            "D4 is homogeneous of degree twenty-four",
            d4_from_st(&inv2) - times(1 << 24, d4),
            sc2(12),
            tols.d4_homogeneity,
        ));
    }

    out
}

/// Worst case of one named check across all trials.
#[derive(Clone, Debug)]
pub struct CheckSummary {
    pub name: &'static str,
    pub max_residual: f64,
    pub failures: usize,
}

/// Aggregated result of a suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub label: &'static str,
    pub trials: usize,
    pub checks: Vec<CheckSummary>,
    pub passed: bool,
}

impl SuiteReport {
    fn from_runs(label: &'static str, trials: usize, runs: Vec<Vec<IdentityCheck>>) -> Self {
        let mut checks: Vec<CheckSummary> = Vec::new();
        for run in &runs {
            for item in run {
                match checks.iter_mut().find(|c| c.name == item.name) {
                    Some(existing) => {
                        existing.max_residual = existing.max_residual.max(item.residual);
                        existing.failures += usize::from(!item.pass);
                    }
                    None => checks.push(CheckSummary {
                        name: item.name,
                        max_residual: item.residual,
                        failures: usize::from(!item.pass),
                    }),
                }
            }
        }
        let passed = checks.iter().all(|c| c.failures == 0);
        SuiteReport {
            label,
            trials,
            checks,
            passed,
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0f64, f64::max)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.label,
            "trials": self.trials,
            "passed": self.passed,
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "max_residual": c.max_residual,
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Identity battery over seeded random unit-norm float states.
pub fn identity_suite_float(seed: u64, trials: usize, tols: &SuiteTolerances) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let runs = (0..trials)
        .map(|_| state_identity_checks(&random_state_with(&mut rng, true), tols))
        .collect();
    SuiteReport::from_runs("identities (float)", trials, runs)
}

/// Identity battery over seeded random Gaussian-rational states; every
/// residual must be exactly zero.
pub fn identity_suite_exact(seed: u64, trials: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tols = SuiteTolerances::default();
    let runs = (0..trials)
        .map(|_| state_identity_checks(&random_rational_state_with(&mut rng), &tols))
        .collect();
    SuiteReport::from_runs("identities (exact)", trials, runs)
}

/// Homogeneity degree of each named invariant field, halved (the power of
/// the squared norm that scales it).
fn field_degree_half(name: &str) -> i32 {
    match name {
        "I1" | "H" => 1,
        "I3" | "D_xy" | "D_zt" | "D_xz" | "D_yt" | "D_xt" | "D_yz" => 3,
        _ => 2,
    }
}

fn slocc_checks<T: Scalar>(
    state: &FourQubitState<T>,
    ops: &[crate::state::LocalOperation<T>; 4],
    rtol: f64,
) -> Vec<IdentityCheck> {
    static NAMES: [&str; 15] = [
        "SLOCC invariance of I1",
        "SLOCC invariance of I2",
        "SLOCC invariance of I3",
        "SLOCC invariance of I4",
        "SLOCC invariance of H",
        "SLOCC invariance of L",
        "SLOCC invariance of M",
        "SLOCC invariance of N",
        "SLOCC invariance of U",
        "SLOCC invariance of D_xy",
        "SLOCC invariance of D_zt",
        "SLOCC invariance of D_xz",
        "SLOCC invariance of D_yt",
        "SLOCC invariance of D_xt",
        "SLOCC invariance of D_yz",
    ];
    let transformed = apply_slocc(state, ops);
    let before = match full_invariant_set(state) {
        Ok(v) => v,
        Err(_) => {
            return vec![IdentityCheck {
                name: "invariant construction",
                residual: f64::INFINITY,
                pass: false,
            }]
        }
    };
    let after = match full_invariant_set(&transformed) {
        Ok(v) => v,
        Err(_) => {
            return vec![IdentityCheck {
                name: "invariant construction on the transformed state",
                residual: f64::INFINITY,
                pass: false,
            }]
        }
    };
    let ns = state
        .norm_sqr()
        .max(transformed.norm_sqr())
        .max(f64::MIN_POSITIVE);
    let before_fields = before.fields();
    let after_fields = after.fields();
    before_fields
        .into_iter()
        .zip(after_fields)
        .zip(NAMES)
        .map(|(((name, b), (_, a)), check_name)| {
            let scale = b.magnitude().max(ns.powi(field_degree_half(name)));
            check(check_name, a.clone() - b.clone(), scale, rtol)
        })
        .collect()
}

/// SLOCC invariance of every invariant field over seeded
/// (state, operation-quadruple) pairs, float mode.
pub fn slocc_suite_float(seed: u64, trials: usize, rtol: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let runs = (0..trials)
        .map(|_| {
            let state = random_state_with(&mut rng, true);
            let ops = std::array::from_fn(|_| random_local_operation_with(&mut rng));
            slocc_checks(&state, &ops, rtol)
        })
        .collect();
    SuiteReport::from_runs("SLOCC invariance (float)", trials, runs)
}

/// SLOCC invariance in exact arithmetic: all fields must be exactly equal.
pub fn slocc_suite_exact(seed: u64, trials: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let runs = (0..trials)
        .map(|_| {
            let state = random_rational_state_with(&mut rng);
            let ops: [crate::state::LocalOperation<GaussianRational>; 4] =
                std::array::from_fn(|_| random_rational_local_operation_with(&mut rng));
            slocc_checks(&state, &ops, 0.0)
        })
        .collect();
    SuiteReport::from_runs("SLOCC invariance (exact)", trials, runs)
}

/// `I1` agreement across all 24 qubit permutations of seeded states.
pub fn permutation_suite(seed: u64, trials: usize, rtol: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms = QubitPermutation::all();
    let runs = (0..trials)
        .map(|_| {
            let state = random_state_with(&mut rng, true);
            let reference = invariant_i1(&state);
            let ns = state.norm_sqr().max(f64::MIN_POSITIVE);
            let diffs: Vec<Complex64> = perms
                .iter()
                .map(|perm| invariant_i1(&permute_qubits(&state, perm)) - reference)
                .collect();
            vec![check_many(
                "I1 is invariant under all 24 qubit permutations",
                diffs,
                reference.magnitude().max(ns),
                rtol,
            )]
        })
        .collect();
    SuiteReport::from_runs("permutation invariance of I1", trials, runs)
}
