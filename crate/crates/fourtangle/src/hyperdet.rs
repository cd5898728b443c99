//! The 2x2x2x2 hyperdeterminant `D4` by three independent routes, the
//! lower-rank determinants `D2` (concurrence) and `D3` (three-tangle), and
//! the three-qubit line-versus-quadric classifier.
//!
//! The three routes:
//! 1. `S`/`T` combination: `D4 = S³ - 27 T²` from the closed forms of `S`
//!    and `T` in the invariants.
//! 2. Quartic discriminant: `D4 = disc(p) / 256` for the resolvent quartic
//!    `p(w) = w⁴ - 4 I1 w³ + 6 I2 w² - 4 I3 w + I4²`.
//! 3. Determinant pencil: `D4 = disc_λ(det3(x + λ y)) / 256` where `x, y`
//!    are the two three-qubit halves of the state.

use crate::error::{Error, Result};
use crate::geometry::{dot, line_quadric_classify, LineQuadricClass};
use crate::invariants::{full_invariant_set, InvariantSet};
use crate::scalar::{times, Scalar};
use crate::state::{FourQubitState, ThreeQubitState};
use std::ops::{Add, Mul, Sub};

/// Relative tolerance for declaring the three routes in agreement.
pub const ROUTE_RTOL: f64 = 1e-6;

/// Relative tolerance for the pencil interpolation consistency check.
pub const PENCIL_RTOL: f64 = 1e-6;

/// A quartic `c[4] w⁴ + c[3] w³ + c[2] w² + c[1] w + c[0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticPolynomial<T: Scalar> {
    pub c: [T; 5],
}

impl<T: Scalar> QuarticPolynomial<T> {
    /// The resolvent quartic `w⁴ - 4 I1 w³ + 6 I2 w² - 4 I3 w + I4²`,
    /// whose roots are the squared canonical parameters.
    pub fn from_invariants(inv: &InvariantSet<T>) -> Self {
        QuarticPolynomial {
            c: [
                inv.i4.clone() * inv.i4.clone(),
                times(-4, inv.i3.clone()),
                times(6, inv.i2.clone()),
                times(-4, inv.i1.clone()),
                T::one(),
            ],
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, w: &T) -> T {
        let mut acc = self.c[4].clone();
        for k in (0..4).rev() {
            acc = acc * w.clone() + self.c[k].clone();
        }
        acc
    }

    /// Horner evaluation of the derivative.
    pub fn derivative_eval(&self, w: &T) -> T {
        let mut acc = times(4, self.c[4].clone());
        for k in (1..4).rev() {
            acc = acc * w.clone() + times(k as i64, self.c[k].clone());
        }
        acc
    }
}

/// The standard 16-term discriminant of a quartic in plain coefficients.
/// Degree 6 in the coefficients; `disc = a₄⁶ Π_{i<j} (x_i - x_j)²` over the
/// roots `x_i`.
pub fn quartic_discriminant<T: Scalar>(p: &QuarticPolynomial<T>) -> T {
    let e0 = &p.c[0];
    let e1 = &p.c[1];
    let e2 = &p.c[2];
    let e3 = &p.c[3];
    let e4 = &p.c[4];
    let pw = |b: &T, k: u32| -> T {
        let mut acc = T::one();
        for _ in 0..k {
            acc = acc * b.clone();
        }
        acc
    };
    times(256, pw(e4, 3) * pw(e0, 3))
        - times(192, pw(e4, 2) * e3.clone() * e1.clone() * pw(e0, 2))
        - times(128, pw(e4, 2) * pw(e2, 2) * pw(e0, 2))
        + times(144, pw(e4, 2) * e2.clone() * pw(e1, 2) * e0.clone())
        - times(27, pw(e4, 2) * pw(e1, 4))
        + times(144, e4.clone() * pw(e3, 2) * e2.clone() * pw(e0, 2))
        - times(6, e4.clone() * pw(e3, 2) * pw(e1, 2) * e0.clone())
        - times(80, e4.clone() * e3.clone() * pw(e2, 2) * e1.clone() * e0.clone())
        + times(18, e4.clone() * e3.clone() * e2.clone() * pw(e1, 3))
        + times(16, e4.clone() * pw(e2, 4) * e0.clone())
        - times(4, e4.clone() * pw(e2, 3) * pw(e1, 2))
        - times(27, pw(e3, 4) * pw(e0, 2))
        + times(18, pw(e3, 3) * e2.clone() * e1.clone() * e0.clone())
        - times(4, pw(e3, 3) * pw(e1, 3))
        - times(4, pw(e3, 2) * pw(e2, 3) * e0.clone())
        + pw(e3, 2) * pw(e2, 2) * pw(e1, 2)
}

/// Two-qubit determinant `D2 = Z00 Z11 - Z01 Z10` (amplitude order
/// `Z00, Z01, Z10, Z11`). The concurrence of a normalized state is `2 |D2|`.
pub fn det2<T: Scalar>(z: &[T; 4]) -> T {
    z[0].clone() * z[3].clone() - z[1].clone() * z[2].clone()
}

/// Concurrence `2 |D2|` for a normalized two-qubit state.
pub fn concurrence<T: Scalar>(z: &[T; 4]) -> f64 {
    2.0 * det2(z).magnitude()
}

/// The 2x2x2 hyperdeterminant, written for any commutative ring.
fn det3_generic<R>(z: &[R; 8]) -> R
where
    R: Clone + Add<Output = R> + Sub<Output = R> + Mul<Output = R>,
{
    let quad = |a: usize, b: usize, c: usize, d: usize| {
        z[a].clone() * z[b].clone() * z[c].clone() * z[d].clone()
    };
    let squares = quad(0, 0, 7, 7) + quad(1, 1, 6, 6) + quad(2, 2, 5, 5) + quad(3, 3, 4, 4);
    let pairs = quad(0, 1, 6, 7)
        + quad(0, 2, 5, 7)
        + quad(0, 3, 4, 7)
        + quad(1, 2, 5, 6)
        + quad(1, 3, 4, 6)
        + quad(2, 3, 4, 5);
    let cross = quad(0, 3, 5, 6) + quad(1, 2, 4, 7);
    let two_pairs = pairs.clone() + pairs;
    let four_cross = {
        let twice = cross.clone() + cross;
        twice.clone() + twice
    };
    squares - two_pairs + four_cross
}

/// The 2x2x2 hyperdeterminant `D3` of a three-qubit state. The
/// three-tangle of a normalized state is `4 |D3|`.
pub fn det3<T: Scalar>(state: &ThreeQubitState<T>) -> T {
    det3_generic(state.amplitudes())
}

/// Three-tangle `4 |D3|` for a normalized three-qubit state.
pub fn three_tangle<T: Scalar>(state: &ThreeQubitState<T>) -> f64 {
    4.0 * det3(state).magnitude()
}

/// `S = (I4² - I2²) + 4 (I2² - I1 I3)`.
pub fn st_invariants<T: Scalar>(inv: &InvariantSet<T>) -> (T, T) {
    let i1 = inv.i1.clone();
    let i2 = inv.i2.clone();
    let i3 = inv.i3.clone();
    let i4 = inv.i4.clone();
    let i2sq = i2.clone() * i2.clone();
    let i4sq = i4.clone() * i4;
    let s = (i4sq.clone() - i2sq.clone()) + times(4, i2sq.clone() - i1.clone() * i3.clone());
    let t = (i4sq - i2sq) * (i1.clone() * i1.clone() - i2.clone())
        + {
            let r = i3 - i1 * i2;
            r.clone() * r
        };
    (s, t)
}

/// `V = 12 (H D + 2 L M)` with `D = D_xt`.
pub fn v_invariant<T: Scalar>(inv: &InvariantSet<T>) -> T {
    times(
        12,
        inv.h.clone() * inv.d() + times(2, inv.l.clone() * inv.m.clone()),
    )
}

/// `S` and `T` through the alternative route
/// `12 S = U² - 2 V` and `216 T = U³ - 3 U V + 216 D²`;
/// agrees with [`st_invariants`] identically.
pub fn st_from_uvd<T: Scalar>(inv: &InvariantSet<T>) -> (T, T) {
    let u = inv.u.clone();
    let v = v_invariant(inv);
    let d = inv.d();
    let s = (u.clone() * u.clone() - times(2, v.clone())) * T::ratio(1, 12);
    let t = (u.clone() * u.clone() * u.clone() - times(3, u * v) + times(216, d.clone() * d))
        * T::ratio(1, 216);
    (s, t)
}

/// Route 1: `D4 = S³ - 27 T²`.
pub fn d4_from_st<T: Scalar>(inv: &InvariantSet<T>) -> T {
    let (s, t) = st_invariants(inv);
    s.clone() * s.clone() * s - times(27, t.clone() * t)
}

/// Route 2: `D4 = disc(p) / 256` for the resolvent quartic `p`.
pub fn d4_from_quartic<T: Scalar>(inv: &InvariantSet<T>) -> T {
    quartic_discriminant(&QuarticPolynomial::from_invariants(inv)) * T::ratio(1, 256)
}

/// Dense univariate polynomial with the ring operations needed by
/// [`det3_generic`]; used for the exact symbolic pencil expansion.
#[derive(Clone, Debug)]
struct Poly<T: Scalar>(Vec<T>);

impl<T: Scalar> Poly<T> {
    fn linear(c0: T, c1: T) -> Self {
        Poly(vec![c0, c1])
    }

    fn coeff(&self, k: usize) -> T {
        self.0.get(k).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = vec![T::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly(out)
    }
}

/// Lagrange weights turning values of a quartic at `λ = 0, 1, -1, 2, -2`
/// into its coefficients: `h_j = Σ_i NODE_WEIGHTS[i][j] · value_i`, with
/// each weight the exact rational `(num, den)`.
const NODE_LAMBDAS: [i64; 5] = [0, 1, -1, 2, -2];
const NODE_WEIGHTS: [[(i64, i64); 5]; 5] = [
    [(1, 1), (0, 1), (-5, 4), (0, 1), (1, 4)],
    [(0, 1), (2, 3), (2, 3), (-1, 6), (-1, 6)],
    [(0, 1), (-2, 3), (2, 3), (1, 6), (-1, 6)],
    [(0, 1), (-1, 12), (-1, 24), (1, 12), (1, 24)],
    [(0, 1), (1, 12), (-1, 24), (-1, 12), (1, 24)],
];

/// Coefficients of the determinant pencil `h(λ) = det3(x + λ y)`, where
/// `x, y` are the first-qubit halves of the state.
///
/// Exact mode expands `det3` symbolically over linear polynomials; float
/// mode interpolates through five integer nodes and cross-checks the
/// result at a sixth node, failing with
/// [`Error::IllConditionedPencil`] if the consistency residual exceeds
/// [`PENCIL_RTOL`].
pub fn pencil_coefficients<T: Scalar>(state: &FourQubitState<T>) -> Result<QuarticPolynomial<T>> {
    let amps = state.amplitudes();
    let x: [T; 8] = std::array::from_fn(|s| amps[s].clone());
    let y: [T; 8] = std::array::from_fn(|s| amps[8 + s].clone());

    if T::EXACT {
        let entries: [Poly<T>; 8] =
            std::array::from_fn(|s| Poly::linear(x[s].clone(), y[s].clone()));
        let h = det3_generic(&entries);
        return Ok(QuarticPolynomial {
            c: std::array::from_fn(|k| h.coeff(k)),
        });
    }

    let value_at = |lam: i64| -> T {
        let z: [T; 8] =
            std::array::from_fn(|s| x[s].clone() + times(lam, y[s].clone()));
        det3_generic(&z)
    };
    let values: [T; 5] = std::array::from_fn(|i| value_at(NODE_LAMBDAS[i]));
    let c: [T; 5] = std::array::from_fn(|j| {
        let mut acc = T::zero();
        for i in 0..5 {
            let (num, den) = NODE_WEIGHTS[i][j];
            if num != 0 {
                acc = acc + T::ratio(num, den) * values[i].clone();
            }
        }
        acc
    });
    let pencil = QuarticPolynomial { c };

    // Consistency check at a sixth node.
    let direct = value_at(3);
    let interpolated = pencil.eval(&T::from_int(3));
    let scale = direct
        .magnitude()
        .max(pencil.c.iter().enumerate().map(|(j, h)| h.magnitude() * 3f64.powi(j as i32)).sum())
        .max(f64::MIN_POSITIVE);
    let residual = (interpolated - direct).magnitude() / scale;
    if residual > PENCIL_RTOL {
        return Err(Error::IllConditionedPencil { residual });
    }
    Ok(pencil)
}

/// Route 3: `D4 = disc_λ(det3(x + λ y)) / 256`.
pub fn d4_schlaefli<T: Scalar>(state: &FourQubitState<T>) -> Result<T> {
    let pencil = pencil_coefficients(state)?;
    Ok(quartic_discriminant(&pencil) * T::ratio(1, 256))
}

/// The three `D4` routes side by side, with the auxiliary combinations.
#[derive(Clone, Debug)]
pub struct HyperdetReport<T: Scalar> {
    pub d4_st: T,
    pub d4_quartic: T,
    pub d4_schlaefli: T,
    /// Set when the relative spread of the three routes is below tolerance.
    pub consensus: Option<T>,
    pub max_relative_spread: f64,
    pub s: T,
    pub t: T,
    pub u: T,
    pub v: T,
}

impl<T: Scalar> HyperdetReport<T> {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("d4_from_st".into(), self.d4_st.to_json());
        map.insert("d4_from_quartic".into(), self.d4_quartic.to_json());
        map.insert("d4_schlaefli".into(), self.d4_schlaefli.to_json());
        map.insert(
            "consensus".into(),
            self.consensus
                .as_ref()
                .map_or(serde_json::Value::Null, |c| c.to_json()),
        );
        map.insert(
            "max_relative_spread".into(),
            serde_json::json!(self.max_relative_spread),
        );
        map.insert("S".into(), self.s.to_json());
        map.insert("T".into(), self.t.to_json());
        map.insert("U".into(), self.u.to_json());
        map.insert("V".into(), self.v.to_json());
        serde_json::Value::Object(map)
    }
}

/// Computes all three routes and their spread. Fails with
/// [`Error::RouteDisagreement`] (carrying all three values) when the
/// relative spread exceeds `tol`.
///
/// The spread is the largest pairwise difference relative to the largest
/// route magnitude, floored by the state-scale term `ns¹² · 1e-12`
/// (`D4` has degree 24) so that states with `D4 ≈ 0` do not produce
/// spurious 0/0 disagreements.
pub fn hyperdeterminant_report<T: Scalar>(
    state: &FourQubitState<T>,
    tol: f64,
) -> Result<HyperdetReport<T>> {
    let inv = full_invariant_set(state)?;
    let (s, t) = st_invariants(&inv);
    let v = v_invariant(&inv);
    let d4_st = d4_from_st(&inv);
    let d4_quartic = d4_from_quartic(&inv);
    let d4_schl = d4_schlaefli(state)?;

    let values = [&d4_st, &d4_quartic, &d4_schl];
    let spread = if T::EXACT {
        let equal = d4_st == d4_quartic && d4_quartic == d4_schl;
        if equal {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        let mags: Vec<f64> = values.iter().map(|x| x.magnitude()).collect();
        let floor = state.norm_sqr().powi(12) * 1e-12;
        let scale = mags.iter().cloned().fold(floor, f64::max).max(f64::MIN_POSITIVE);
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let diff = (values[i].clone().clone() - values[j].clone().clone()).magnitude();
                worst = worst.max(diff / scale);
            }
        }
        worst
    };

    let report = HyperdetReport {
        consensus: (spread <= tol).then(|| d4_st.clone()),
        d4_st,
        d4_quartic,
        d4_schlaefli: d4_schl,
        max_relative_spread: spread,
        s,
        t,
        u: inv.u.clone(),
        v,
    };
    if report.consensus.is_none() {
        return Err(Error::RouteDisagreement {
            spread,
            details: format!(
                "st={} quartic={} schlaefli={}",
                report.d4_st, report.d4_quartic, report.d4_schlaefli
            ),
        });
    }
    Ok(report)
}

/// Line-versus-quadric diagnosis of a three-qubit state.
#[derive(Clone, Debug)]
pub struct ThreeQubitReport<T: Scalar> {
    pub class: LineQuadricClass,
    pub d3: T,
    /// `(x·y)² - (x·x)(y·y)`, equal to `D3` identically.
    pub disc_line: T,
    pub three_tangle: f64,
    /// Whether `D3` and the line discriminant agree within tolerance.
    pub consistent: bool,
}

impl<T: Scalar> ThreeQubitReport<T> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "class": self.class.to_string(),
            "D3": self.d3.to_json(),
            "disc_line": self.disc_line.to_json(),
            "three_tangle": self.three_tangle,
            "consistent": self.consistent,
        })
    }
}

/// Classifies the state's line against the quadric and cross-checks `D3`
/// against the line discriminant (an exact identity).
pub fn three_qubit_report<T: Scalar>(
    state: &ThreeQubitState<T>,
    tol: f64,
) -> ThreeQubitReport<T> {
    let (x, y) = state.line_pair();
    let class = line_quadric_classify(&x, &y, tol);
    let d3 = det3(state);
    let xx = dot(&x, &x);
    let xy = dot(&x, &y);
    let yy = dot(&y, &y);
    let disc_line = xy.clone() * xy - xx * yy;
    let ns = state.norm_sqr();
    let residual = crate::scalar::scaled_residual(
        &(d3.clone() - disc_line.clone()),
        ns.powi(2).max(f64::MIN_POSITIVE),
    );
    ThreeQubitReport {
        class,
        three_tangle: 4.0 * d3.magnitude(),
        d3,
        disc_line,
        consistent: residual <= if T::EXACT { 0.0 } else { tol },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use num_complex::Complex64;
    use num_traits::{One, Zero};
    use rand::SeedableRng;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn quartic_discriminant_reference_values() {
        // disc(w^4 - 1) = -256
        let p = QuarticPolynomial {
            c: [q(-1), q(0), q(0), q(0), q(1)],
        };
        assert_eq!(quartic_discriminant(&p), q(-256));
        // roots 1, 4, 9, 16: disc = 151200^2
        let p = QuarticPolynomial {
            c: [q(576), q(-820), q(273), q(-30), q(1)],
        };
        assert_eq!(quartic_discriminant(&p), q(151200) * q(151200));
    }

    #[test]
    fn quartic_eval_and_derivative() {
        let p = QuarticPolynomial {
            c: [q(576), q(-820), q(273), q(-30), q(1)],
        };
        assert!(p.eval(&q(4)).is_zero());
        assert!(p.eval(&q(9)).is_zero());
        // p'(w) = 4w^3 - 90w^2 + 546w - 820; p'(1) = 4 - 90 + 546 - 820 = -360
        assert_eq!(p.derivative_eval(&q(1)), q(-360));
    }

    #[test]
    fn det3_on_ghz_and_w() {
        let mut ghz: [GaussianRational; 8] = std::array::from_fn(|_| GaussianRational::zero());
        ghz[0] = GaussianRational::one();
        ghz[7] = GaussianRational::one();
        let ghz = ThreeQubitState::from_amplitudes(ghz).unwrap();
        assert_eq!(det3(&ghz), q(1));

        let mut w: [GaussianRational; 8] = std::array::from_fn(|_| GaussianRational::zero());
        w[1] = GaussianRational::one();
        w[2] = GaussianRational::one();
        w[4] = GaussianRational::one();
        let w = ThreeQubitState::from_amplitudes(w).unwrap();
        assert!(det3(&w).is_zero());
    }

    #[test]
    fn det2_and_concurrence_on_bell_pair() {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let bell = [h, Complex64::zero(), Complex64::zero(), h];
        assert!((concurrence(&bell) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pencil_matches_direct_evaluation_in_both_modes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let exact = crate::state::random_rational_state_with(&mut rng);
        let pencil = pencil_coefficients(&exact).unwrap();
        // h(5) must equal det3 of x + 5y exactly.
        let amps = exact.amplitudes();
        let z: [GaussianRational; 8] =
            std::array::from_fn(|s| amps[s].clone() + q(5) * amps[8 + s].clone());
        let direct = det3_generic(&z);
        assert_eq!(pencil.eval(&q(5)), direct);

        let float = crate::state::random_state(17, true);
        let pencil = pencil_coefficients(&float).unwrap();
        let amps = float.amplitudes();
        let lam = Complex64::new(5.0, 0.0);
        let z: [Complex64; 8] = std::array::from_fn(|s| amps[s] + lam * amps[8 + s]);
        let direct = det3_generic(&z);
        assert!((pencil.eval(&lam) - direct).norm() < 1e-9 * direct.norm().max(1.0));
    }

    #[test]
    fn report_consensus_on_a_random_state() {
        let state = crate::state::random_state(23, true);
        let report = hyperdeterminant_report(&state, ROUTE_RTOL).unwrap();
        assert!(report.consensus.is_some());
        assert!(report.max_relative_spread <= ROUTE_RTOL);
    }
}
