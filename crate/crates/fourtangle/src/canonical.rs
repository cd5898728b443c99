//! The generic canonical family `G_{abcd}`, its orbit invariants, and the
//! inverse problem: recovering the parameters `(a, b, c, d)` from the
//! invariants by solving the resolvent quartic and resolving the
//! square-root sign ambiguity through `I4`.

use crate::error::{Error, Result};
use crate::hyperdet::QuarticPolynomial;
use crate::invariants::{full_invariant_set, InvariantSet};
use crate::scalar::{GaussianRational, Scalar};
use crate::state::FourQubitState;
use nalgebra::Matrix4;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Roots closer than `CLUSTER_RTOL · (1 + max |root|)` are treated as a
/// single multiple root.
pub const CLUSTER_RTOL: f64 = 1e-7;

/// Relative accuracy demanded when reading a float root back as an exact
/// rational in exact-mode recovery.
const RECONSTRUCT_RTOL: f64 = 1e-9;

/// Largest denominator attempted by the continued-fraction reconstruction.
const RECONSTRUCT_MAX_DEN: u64 = 1_000_000_000;

/// Builds the canonical state
/// `Z0 = Z15 = (a+d)/2`, `Z3 = Z12 = (a-d)/2`,
/// `Z5 = Z10 = (b+c)/2`, `Z6 = Z9 = (b-c)/2`, all others zero.
pub fn g_state<T: Scalar>(params: &[T; 4]) -> FourQubitState<T> {
    let [a, b, c, d] = params.clone();
    let half = T::ratio(1, 2);
    let mut amps: [T; 16] = std::array::from_fn(|_| T::zero());
    let put = (a.clone() + d.clone()) * half.clone();
    let minus = (a - d) * half.clone();
    let plus_bc = (b.clone() + c.clone()) * half.clone();
    let minus_bc = (b - c) * half;
    amps[0] = put.clone();
    amps[15] = put;
    amps[3] = minus.clone();
    amps[12] = minus;
    amps[5] = plus_bc.clone();
    amps[10] = plus_bc;
    amps[6] = minus_bc.clone();
    amps[9] = minus_bc;
    FourQubitState::from_amplitudes(amps).expect("finite parameters")
}

/// The invariant values on `G_{abcd}`:
/// `(4 I1, 6 I2, 4 I3, I4²)` are the elementary symmetric polynomials of
/// the squared parameters, and `I4 = abcd`.
pub fn orbit_invariants<T: Scalar>(params: &[T; 4]) -> (T, T, T, T) {
    let sq: [T; 4] = std::array::from_fn(|i| params[i].clone() * params[i].clone());
    let e1 = sq[0].clone() + sq[1].clone() + sq[2].clone() + sq[3].clone();
    let mut e2 = T::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            e2 = e2 + sq[i].clone() * sq[j].clone();
        }
    }
    let mut e3 = T::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                e3 = e3 + sq[i].clone() * sq[j].clone() * sq[k].clone();
            }
        }
    }
    let i4 = params[0].clone() * params[1].clone() * params[2].clone() * params[3].clone();
    (
        e1 * T::ratio(1, 4),
        e2 * T::ratio(1, 6),
        e3 * T::ratio(1, 4),
        i4,
    )
}

/// `D4` on the generic orbit: `(1/256) Π_{i<j} (x_i - x_j)²` over the
/// squared parameters `x_i`.
pub fn vandermonde_d4<T: Scalar>(params: &[T; 4]) -> T {
    let sq: [T; 4] = std::array::from_fn(|i| params[i].clone() * params[i].clone());
    let mut prod = T::one();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let diff = sq[i].clone() - sq[j].clone();
            prod = prod * diff.clone() * diff;
        }
    }
    prod * T::ratio(1, 256)
}

/// Roots of a quartic with complex float coefficients: companion-matrix
/// eigenvalues polished by Newton steps, with a Durand-Kerner fallback if
/// the eigenvalue iteration does not converge.
pub fn quartic_roots(p: &QuarticPolynomial<Complex64>) -> Result<[Complex64; 4]> {
    let lead = p.c[4];
    let coeff_scale = p.c.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if lead.norm() <= 1e-14 * coeff_scale.max(f64::MIN_POSITIVE) {
        return Err(Error::RootFindingFailed);
    }
    let b: [Complex64; 4] = std::array::from_fn(|k| p.c[k] / lead);
    let monic = QuarticPolynomial {
        c: [b[0], b[1], b[2], b[3], Complex64::one()],
    };
    let zero = Complex64::zero();
    let one = Complex64::one();
    let companion = Matrix4::new(
        zero, zero, zero, -b[0], //
        one, zero, zero, -b[1], //
        zero, one, zero, -b[2], //
        zero, zero, one, -b[3],
    );
    let mut roots: [Complex64; 4] = match companion.eigenvalues() {
        Some(ev) => std::array::from_fn(|i| ev[i]),
        None => durand_kerner(&monic)?,
    };
    for r in roots.iter_mut() {
        *r = newton_polish(&monic, *r);
        if !r.re.is_finite() || !r.im.is_finite() {
            return Err(Error::RootFindingFailed);
        }
    }
    Ok(roots)
}

fn newton_polish(p: &QuarticPolynomial<Complex64>, mut root: Complex64) -> Complex64 {
    for _ in 0..3 {
        let dp = p.derivative_eval(&root);
        if dp.norm() <= f64::MIN_POSITIVE {
            break;
        }
        let step = p.eval(&root) / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        root -= step;
    }
    root
}

fn durand_kerner(monic: &QuarticPolynomial<Complex64>) -> Result<[Complex64; 4]> {
    let radius = 1.0 + monic.c.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: [Complex64; 4] = std::array::from_fn(|k| seed.powu(k as u32 + 1) * radius);
    for _ in 0..200 {
        let mut shift = 0.0f64;
        for i in 0..4 {
            let mut denom = Complex64::one();
            for j in 0..4 {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() <= f64::MIN_POSITIVE {
                denom = Complex64::new(f64::MIN_POSITIVE.sqrt(), 0.0);
            }
            let step = monic.eval(&roots[i]) / denom;
            roots[i] -= step;
            if !roots[i].re.is_finite() || !roots[i].im.is_finite() {
                return Err(Error::RootFindingFailed);
            }
            shift = shift.max(step.norm() / (1.0 + roots[i].norm()));
        }
        if shift < 1e-14 {
            break;
        }
    }
    Ok(roots)
}

/// Safety factor on the multiple-root perturbation scale `eps^(1/m)`.
const CLUSTER_MULTIPLICITY_FACTOR: f64 = 50.0;

/// A cluster of `m` computed roots is plausibly an `m`-fold root only if
/// its diameter is within the perturbation scale of an `m`-fold root:
/// an `m`-fold root of a polynomial with relative coefficient error
/// `eps` scatters by `O(eps^(1/m))`.
fn cluster_tolerance(m: usize, rtol: f64, scale: f64) -> f64 {
    let eps_scatter = CLUSTER_MULTIPLICITY_FACTOR * f64::EPSILON.powf(1.0 / m as f64);
    rtol.max(eps_scatter) * scale
}

/// Clusters the four roots into multiple-root groups. Builds the
/// single-linkage merge tree and returns the coarsest partition in which
/// every cluster's diameter is within [`cluster_tolerance`] for its size,
/// so a triple root scattered by `~eps^(1/3)` is still recognized while
/// well-separated roots never merge. Returns `(center, multiplicity)`
/// pairs sorted by multiplicity (descending), then magnitude
/// (descending); `rtol` is the floor of the pairwise threshold.
pub fn cluster_roots(roots: &[Complex64; 4], rtol: f64) -> Vec<(Complex64, usize)> {
    let scale = 1.0 + roots.iter().map(|r| r.norm()).fold(0.0f64, f64::max);

    // Single-linkage agglomeration: record the partition after each merge.
    let mut partitions: Vec<Vec<Vec<usize>>> = Vec::with_capacity(4);
    let mut current: Vec<Vec<usize>> = (0..4).map(|i| vec![i]).collect();
    partitions.push(current.clone());
    while current.len() > 1 {
        let mut best = (0usize, 1usize, f64::INFINITY);
        for a in 0..current.len() {
            for b in (a + 1)..current.len() {
                let d = current[a]
                    .iter()
                    .flat_map(|&i| current[b].iter().map(move |&j| (roots[i] - roots[j]).norm()))
                    .fold(f64::INFINITY, f64::min);
                if d < best.2 {
                    best = (a, b, d);
                }
            }
        }
        let merged = current.remove(best.1);
        current[best.0].extend(merged);
        partitions.push(current.clone());
    }

    let diameter = |cluster: &[usize]| -> f64 {
        let mut d = 0.0f64;
        for (k, &i) in cluster.iter().enumerate() {
            for &j in &cluster[k + 1..] {
                d = d.max((roots[i] - roots[j]).norm());
            }
        }
        d
    };
    // Coarsest plausible partition: every cluster must be tight enough to
    // be a genuine multiple root of its size.
    let chosen = partitions
        .iter()
        .rev()
        .find(|p| {
            p.iter()
                .all(|c| diameter(c) <= cluster_tolerance(c.len(), rtol, scale))
        })
        .expect("the all-singletons partition is always plausible");

    let mut clusters: Vec<(Complex64, usize)> = chosen
        .iter()
        .map(|members| {
            let sum: Complex64 = members.iter().map(|&i| roots[i]).sum();
            (sum / members.len() as f64, members.len())
        })
        .collect();
    clusters.sort_by(|a, b| {
        b.1.cmp(&a.1)
            .then_with(|| b.0.norm().total_cmp(&a.0.norm()))
    });
    clusters
}

/// What parameter recovery produced.
#[derive(Clone, Debug)]
pub enum RecoveryOutcome<T: Scalar> {
    /// Distinct squared parameters: each candidate is a full `(a,b,c,d)`
    /// quadruple, deduplicated under even sign flips and sorted by
    /// `(magnitude, argument)`.
    Candidates {
        /// The four roots of the resolvent quartic (the squared
        /// parameters), sorted by `(magnitude, argument)`.
        roots: [T; 4],
        candidates: Vec<[T; 4]>,
    },
    /// The resolvent quartic has multiple roots; refined parameters are
    /// not well conditioned, so only the multiplicity structure is
    /// reported.
    Degenerate {
        /// Root multiplicities, largest first (e.g. `[2, 1, 1]`).
        pattern: Vec<usize>,
        /// Cluster centers with their multiplicities.
        clusters: Vec<(T, usize)>,
    },
}

impl<T: Scalar> RecoveryOutcome<T> {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            RecoveryOutcome::Candidates { roots, candidates } => serde_json::json!({
                "kind": "candidates",
                "squared_roots": roots.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "candidates": candidates
                    .iter()
                    .map(|c| c.iter().map(|p| p.to_json()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
            RecoveryOutcome::Degenerate { pattern, clusters } => serde_json::json!({
                "kind": "degenerate",
                "pattern": pattern,
                "clusters": clusters
                    .iter()
                    .map(|(c, m)| serde_json::json!({"root": c.to_json(), "multiplicity": m}))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

fn sort_key<T: Scalar>(v: &T) -> (f64, f64) {
    (v.magnitude(), v.im_f64().atan2(v.re_f64()))
}

fn sort_values<T: Scalar>(values: &mut [T]) {
    values.sort_by(|a, b| {
        let (ma, aa) = sort_key(a);
        let (mb, ab) = sort_key(b);
        ma.total_cmp(&mb).then_with(|| aa.total_cmp(&ab))
    });
}

/// Bitmasks with an even number of set bits: the residual symmetry group
/// of the sign choice (flipping an even number of parameter signs fixes
/// all four invariants).
const EVEN_FLIPS: [u8; 8] = [
    0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111,
];

fn canonical_mask(mask: u8) -> u8 {
    EVEN_FLIPS.iter().map(|e| mask ^ e).min().unwrap()
}

/// Shared tail of recovery once the four square roots `s_i` of the
/// distinct quartic roots are known: enumerate sign patterns, keep those
/// whose product reproduces `I4`, deduplicate under even flips, and verify
/// every surviving candidate against all four invariants.
fn candidates_from_square_roots<T: Scalar>(
    sqrts: &[T; 4],
    inv: &InvariantSet<T>,
    rtol: f64,
) -> Result<Vec<[T; 4]>> {
    let prod_scale = sqrts
        .iter()
        .map(|s| s.magnitude())
        .product::<f64>()
        .max(inv.i4.magnitude());
    let mut kept: Vec<[T; 4]> = Vec::new();
    for mask in 0u8..16 {
        if canonical_mask(mask) != mask {
            continue;
        }
        let params: [T; 4] = std::array::from_fn(|i| {
            if mask & (1 << i) != 0 {
                -sqrts[i].clone()
            } else {
                sqrts[i].clone()
            }
        });
        let prod = params
            .iter()
            .fold(T::one(), |acc, p| acc * p.clone());
        if !crate::scalar::is_negligible(&(prod - inv.i4.clone()), rtol, prod_scale) {
            continue;
        }
        let (c1, c2, c3, c4) = orbit_invariants(&params);
        let targets = [
            (c1 - inv.i1.clone(), inv.i1.magnitude()),
            (c2 - inv.i2.clone(), inv.i2.magnitude()),
            (c3 - inv.i3.clone(), inv.i3.magnitude()),
            (c4 - inv.i4.clone(), inv.i4.magnitude()),
        ];
        let scale = sqrts
            .iter()
            .map(|s| s.magnitude())
            .fold(1.0f64, f64::max)
            .powi(6);
        if targets
            .iter()
            .all(|(diff, mag)| crate::scalar::is_negligible(diff, rtol, mag.max(scale)))
        {
            let mut sorted = params;
            sort_values(&mut sorted);
            kept.push(sorted);
        }
    }
    if kept.is_empty() {
        return Err(Error::NoVerifiedCandidate);
    }
    Ok(kept)
}

/// Recovers canonical parameters from a float invariant set.
///
/// Solves the resolvent quartic
/// `w⁴ - 4 I1 w³ + 6 I2 w² - 4 I3 w + I4² = 0`, whose roots are the
/// squared parameters. Multiple roots (clustered at [`CLUSTER_RTOL`])
/// yield a [`RecoveryOutcome::Degenerate`] multiplicity report; distinct
/// roots yield sign-resolved candidates.
pub fn recover_parameters(
    inv: &InvariantSet<Complex64>,
    rtol: f64,
) -> Result<RecoveryOutcome<Complex64>> {
    let quartic = QuarticPolynomial::from_invariants(inv);
    let roots = quartic_roots(&quartic)?;
    let clusters = cluster_roots(&roots, CLUSTER_RTOL);
    if clusters.len() < 4 {
        return Ok(RecoveryOutcome::Degenerate {
            pattern: clusters.iter().map(|&(_, m)| m).collect(),
            clusters,
        });
    }
    let mut sorted_roots = roots;
    sort_values(&mut sorted_roots);
    let sqrts: [Complex64; 4] = std::array::from_fn(|i| sorted_roots[i].sqrt());
    let candidates = candidates_from_square_roots(&sqrts, inv, rtol)?;
    Ok(RecoveryOutcome::Candidates {
        roots: sorted_roots,
        candidates,
    })
}

/// Floor square root check: `Some(√r)` when `r` is the square of a
/// rational, else `None`.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    (&sn * &sn == *num && &sd * &sd == *den).then(|| BigRational::new(sn, sd))
}

/// Exact complex square root within the Gaussian rationals:
/// for `z = a + b i` with `b ≠ 0`, requires `q = √(a² + b²)` and
/// `u = √((a + q)/2)` to be rational, then `v = b / (2u)`. Returns `None`
/// when no Gaussian-rational square root exists.
pub fn gaussian_sqrt_exact(z: &GaussianRational) -> Option<GaussianRational> {
    if z.im.is_zero() {
        return if z.re.is_negative() {
            rational_sqrt(&(-z.re.clone())).map(|v| GaussianRational::new(BigRational::zero(), v))
        } else {
            rational_sqrt(&z.re).map(|u| GaussianRational::new(u, BigRational::zero()))
        };
    }
    let norm = &z.re * &z.re + &z.im * &z.im;
    let q = rational_sqrt(&norm)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let u = rational_sqrt(&((&z.re + &q) * &half))?;
    if u.is_zero() {
        return None;
    }
    let v = &z.im / (&u * BigRational::from_integer(BigInt::from(2)));
    let root = GaussianRational::new(u, v);
    (root.clone() * root.clone() == *z).then_some(root)
}

/// Reads `x` back as a rational with denominator at most
/// [`RECONSTRUCT_MAX_DEN`] using continued fractions; `None` when no such
/// rational reproduces `x` to the relative tolerance `rtol`.
fn rationalize(x: f64, rtol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let limit = BigInt::from(RECONSTRUCT_MAX_DEN);
    let a0 = x.floor();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from_f64(a0)?, BigInt::one());
    let mut frac = x - a0;
    for _ in 0..64 {
        let approx = BigRational::new(p1.clone(), q1.clone()).to_f64()?;
        if (approx - x).abs() <= rtol * (1.0 + x.abs()) {
            break;
        }
        if frac.abs() < f64::EPSILON {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let ai = BigInt::from_f64(a)?;
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > limit {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let cand = BigRational::new(p1, q1);
    let back = cand.to_f64()?;
    ((back - x).abs() <= rtol * (1.0 + x.abs())).then_some(cand)
}

fn rationalize_complex(z: Complex64, rtol: f64) -> Option<GaussianRational> {
    Some(GaussianRational::new(
        rationalize(z.re, rtol)?,
        rationalize(z.im, rtol)?,
    ))
}

/// An `m`-fold cluster center carries error `O(eps^(2/m))` (the mean
/// cancels the leading scatter), so reconstruction must tolerate more
/// for higher multiplicities. The exact factorization check downstream
/// rejects any wrong guess.
fn reconstruct_tolerance(m: usize) -> f64 {
    let center_error = CLUSTER_MULTIPLICITY_FACTOR * f64::EPSILON.powf(2.0 / m as f64);
    RECONSTRUCT_RTOL.max(center_error)
}

fn float_shadow(inv: &InvariantSet<GaussianRational>) -> Result<InvariantSet<Complex64>> {
    let cast = |v: &GaussianRational| -> Result<Complex64> {
        let re = v.re_f64();
        let im = v.im_f64();
        if re.is_finite() && im.is_finite() {
            Ok(Complex64::new(re, im))
        } else {
            Err(Error::NonFiniteEmbedding(if re.is_finite() { im } else { re }))
        }
    };
    Ok(InvariantSet {
        i1: cast(&inv.i1)?,
        i2: cast(&inv.i2)?,
        i3: cast(&inv.i3)?,
        i4: cast(&inv.i4)?,
        h: cast(&inv.h)?,
        l: cast(&inv.l)?,
        m: cast(&inv.m)?,
        n: cast(&inv.n)?,
        u: cast(&inv.u)?,
        d_xy: cast(&inv.d_xy)?,
        d_zt: cast(&inv.d_zt)?,
        d_xz: cast(&inv.d_xz)?,
        d_yt: cast(&inv.d_yt)?,
        d_xt: cast(&inv.d_xt)?,
        d_yz: cast(&inv.d_yz)?,
    })
}

/// Multiplies out `Π (w - r_i)^{m_i}` over the clustered exact roots.
fn expand_monic(roots: &[(GaussianRational, usize)]) -> Vec<GaussianRational> {
    let mut coeffs = vec![GaussianRational::one()];
    for (root, mult) in roots {
        for _ in 0..*mult {
            let mut next = vec![GaussianRational::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + c.clone();
                next[k] = next[k].clone() - root.clone() * c.clone();
            }
            coeffs = next;
        }
    }
    coeffs
}

/// Exact-mode recovery: float root finding proposes Gaussian-rational
/// roots via continued-fraction reconstruction; the proposal is accepted
/// only if the reconstructed factorization reproduces the resolvent
/// quartic coefficient-for-coefficient, and the square roots are then
/// taken exactly. Fails with [`Error::ExactRecoveryUnavailable`] whenever
/// the roots or their square roots leave the Gaussian rationals.
pub fn recover_parameters_exact(
    inv: &InvariantSet<GaussianRational>,
) -> Result<RecoveryOutcome<GaussianRational>> {
    let quartic = QuarticPolynomial::from_invariants(inv);
    let shadow = float_shadow(inv)?;
    let float_roots = quartic_roots(&QuarticPolynomial::from_invariants(&shadow))?;
    let clusters = cluster_roots(&float_roots, CLUSTER_RTOL);

    let exact_clusters: Vec<(GaussianRational, usize)> = clusters
        .iter()
        .map(|&(center, mult)| {
            rationalize_complex(center, reconstruct_tolerance(mult))
                .map(|r| (r, mult))
                .ok_or_else(|| Error::ExactRecoveryUnavailable {
                    reason: format!(
                        "root near {center} is not a small-denominator Gaussian rational"
                    ),
                })
        })
        .collect::<Result<_>>()?;

    let expanded = expand_monic(&exact_clusters);
    let matches = expanded.len() == 5
        && (0..5).all(|k| expanded[k] == quartic.c[k]);
    if !matches {
        return Err(Error::ExactRecoveryUnavailable {
            reason: "reconstructed rational roots do not factor the resolvent quartic".into(),
        });
    }

    if exact_clusters.len() < 4 {
        return Ok(RecoveryOutcome::Degenerate {
            pattern: exact_clusters.iter().map(|&(_, m)| m).collect(),
            clusters: exact_clusters,
        });
    }

    let mut sorted_roots: [GaussianRational; 4] =
        std::array::from_fn(|i| exact_clusters[i].0.clone());
    sort_values(&mut sorted_roots);
    let sqrts: [GaussianRational; 4] = {
        let mut out: [GaussianRational; 4] = std::array::from_fn(|_| GaussianRational::zero());
        for (i, root) in sorted_roots.iter().enumerate() {
            out[i] = gaussian_sqrt_exact(root).ok_or_else(|| Error::ExactRecoveryUnavailable {
                reason: format!("no Gaussian-rational square root of {root}"),
            })?;
        }
        out
    };
    let candidates = candidates_from_square_roots(&sqrts, inv, 0.0)?;
    Ok(RecoveryOutcome::Candidates {
        roots: sorted_roots,
        candidates,
    })
}

/// Invariants, resolvent quartic, and recovery outcome for one state.
#[derive(Clone, Debug)]
pub struct CanonicalReport<T: Scalar> {
    pub invariants: InvariantSet<T>,
    pub resolvent: QuarticPolynomial<T>,
    pub outcome: RecoveryOutcome<T>,
}

impl<T: Scalar> CanonicalReport<T> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "invariants": self.invariants.to_json(),
            "resolvent_coefficients": self.resolvent.c.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "recovery": self.outcome.to_json(),
        })
    }
}

/// End-to-end float recovery for a state.
pub fn canonical_report(
    state: &FourQubitState<Complex64>,
    rtol: f64,
) -> Result<CanonicalReport<Complex64>> {
    let invariants = full_invariant_set(state)?;
    let outcome = recover_parameters(&invariants, rtol)?;
    Ok(CanonicalReport {
        resolvent: QuarticPolynomial::from_invariants(&invariants),
        invariants,
        outcome,
    })
}

/// End-to-end exact recovery for a state.
pub fn canonical_report_exact(
    state: &FourQubitState<GaussianRational>,
) -> Result<CanonicalReport<GaussianRational>> {
    let invariants = full_invariant_set(state)?;
    let outcome = recover_parameters_exact(&invariants)?;
    Ok(CanonicalReport {
        resolvent: QuarticPolynomial::from_invariants(&invariants),
        invariants,
        outcome,
    })
}

/// Checks that a candidate's squared entries are a permutation of the
/// reference squared parameters within relative `rtol` (exact equality in
/// exact mode). Both sides are compared after `(magnitude, argument)`
/// sorting of the squares.
pub fn squares_match<T: Scalar>(candidate: &[T; 4], reference: &[T; 4], rtol: f64) -> bool {
    let mut cs: [T; 4] = std::array::from_fn(|i| candidate[i].clone() * candidate[i].clone());
    let mut rs: [T; 4] = std::array::from_fn(|i| reference[i].clone() * reference[i].clone());
    sort_values(&mut cs);
    sort_values(&mut rs);
    let scale = rs.iter().map(|r| r.magnitude()).fold(1.0f64, f64::max);
    (0..4).all(|i| {
        crate::scalar::is_negligible(&(cs[i].clone() - rs[i].clone()), rtol, scale)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperdet::{d4_from_st, hyperdeterminant_report, ROUTE_RTOL};

    fn qi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn cf(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn reference_orbit_values() {
        let params = [qi(1), qi(2), qi(3), qi(4)];
        let (i1, i2, i3, i4) = orbit_invariants(&params);
        assert_eq!(i1, GaussianRational::ratio(30, 4));
        assert_eq!(i2, GaussianRational::ratio(273, 6));
        assert_eq!(i3, GaussianRational::ratio(820, 4));
        assert_eq!(i4, qi(24));
        assert_eq!(vandermonde_d4(&params), qi(89302500));

        let state = g_state(&params);
        assert_eq!(*state.amplitude(0), GaussianRational::ratio(5, 2));
        assert_eq!(*state.amplitude(3), GaussianRational::ratio(-3, 2));
        assert_eq!(*state.amplitude(5), GaussianRational::ratio(5, 2));
        assert_eq!(*state.amplitude(6), GaussianRational::ratio(-1, 2));
        let inv = full_invariant_set(&state).unwrap();
        assert_eq!(inv.i4, qi(24));
        assert_eq!(d4_from_st(&inv), qi(89302500));
    }

    #[test]
    fn orbit_invariants_match_state_invariants_exactly() {
        let params = [
            GaussianRational::ratio(1, 2),
            GaussianRational::new(BigRational::from_integer(BigInt::from(1)), BigRational::from_integer(BigInt::from(2))),
            qi(-3),
            GaussianRational::ratio(5, 4),
        ];
        let inv = full_invariant_set(&g_state(&params)).unwrap();
        let (i1, i2, i3, i4) = orbit_invariants(&params);
        assert_eq!(inv.i1, i1);
        assert_eq!(inv.i2, i2);
        assert_eq!(inv.i3, i3);
        assert_eq!(inv.i4, i4);
    }

    #[test]
    fn float_recovery_roundtrip() {
        let params = [cf(1.0), cf(2.0), cf(3.0), cf(4.0)];
        let report = canonical_report(&g_state(&params), 1e-8).unwrap();
        match report.outcome {
            RecoveryOutcome::Candidates { roots, candidates } => {
                let mut mags: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
                mags.sort_by(f64::total_cmp);
                for (got, want) in mags.iter().zip([1.0, 4.0, 9.0, 16.0]) {
                    assert!((got - want).abs() < 1e-9, "root {got} vs {want}");
                }
                assert!(candidates
                    .iter()
                    .any(|c| squares_match(c, &params, 1e-8)));
            }
            other => panic!("expected candidates, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_pattern_detected() {
        // a = d, b = c gives two double roots.
        let params = [cf(1.0), cf(2.0), cf(2.0), cf(1.0)];
        let report = canonical_report(&g_state(&params), 1e-8).unwrap();
        match report.outcome {
            RecoveryOutcome::Degenerate { pattern, .. } => assert_eq!(pattern, vec![2, 2]),
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn exact_recovery_with_complex_parameters() {
        // (1+2i)^2 = -3+4i exercises the exact complex square root.
        let params = [
            GaussianRational::new(
                BigRational::from_integer(BigInt::from(1)),
                BigRational::from_integer(BigInt::from(2)),
            ),
            qi(2),
            qi(3),
            GaussianRational::ratio(-5, 2),
        ];
        let report = canonical_report_exact(&g_state(&params)).unwrap();
        match report.outcome {
            RecoveryOutcome::Candidates { candidates, .. } => {
                assert!(candidates.iter().any(|c| squares_match(c, &params, 0.0)));
            }
            other => panic!("expected candidates, got {other:?}"),
        }
    }

    #[test]
    fn exact_sqrt_reference_values() {
        let z = GaussianRational::new(
            BigRational::from_integer(BigInt::from(-3)),
            BigRational::from_integer(BigInt::from(4)),
        );
        let r = gaussian_sqrt_exact(&z).unwrap();
        assert_eq!(
            r,
            GaussianRational::new(
                BigRational::from_integer(BigInt::from(1)),
                BigRational::from_integer(BigInt::from(2)),
            )
        );
        assert_eq!(
            gaussian_sqrt_exact(&GaussianRational::ratio(9, 4)).unwrap(),
            GaussianRational::ratio(3, 2)
        );
        assert!(gaussian_sqrt_exact(&qi(2)).is_none());
        assert_eq!(
            gaussian_sqrt_exact(&qi(-9)).unwrap(),
            GaussianRational::new(BigRational::zero(), BigRational::from_integer(BigInt::from(3)))
        );
    }

    #[test]
    fn vandermonde_matches_route_consensus() {
        let params = [cf(0.7), cf(1.3), cf(-2.1), cf(0.4)];
        let state = g_state(&params);
        let report = hyperdeterminant_report(&state, ROUTE_RTOL).unwrap();
        let direct = vandermonde_d4(&params);
        let consensus = report.consensus.unwrap();
        assert!((consensus - direct).norm() <= 1e-8 * direct.norm().max(1.0));
    }
}
