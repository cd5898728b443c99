//! Pure-state containers, local (SLOCC) operations, qubit permutations,
//! and seeded random generators for both arithmetic modes.
//!
//! Four-qubit amplitudes are indexed `r = 8i + 4j + 2k + l` for the basis
//! ket `|ijkl>`, so qubit 1 owns the most significant bit.

use crate::error::{Error, Result};
use crate::geometry::Vector4;
use crate::scalar::{GaussianRational, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// A four-qubit pure state (not necessarily normalized; every invariant
/// here is homogeneous, so normalization is a choice, not a requirement).
#[derive(Clone, Debug, PartialEq)]
pub struct FourQubitState<T: Scalar> {
    amps: [T; 16],
}

impl<T: Scalar> FourQubitState<T> {
    /// Builds a state from the 16 amplitudes `Z_0 .. Z_15`; float amplitudes
    /// must be finite.
    pub fn from_amplitudes(amps: [T; 16]) -> Result<Self> {
        for (index, a) in amps.iter().enumerate() {
            if !T::EXACT && !a.magnitude().is_finite() {
                return Err(Error::NonFiniteAmplitude { index });
            }
        }
        Ok(FourQubitState { amps })
    }

    /// The computational basis ket `|r>`.
    pub fn basis(r: usize) -> Self {
        assert!(r < 16, "basis index out of range");
        let mut amps: [T; 16] = std::array::from_fn(|_| T::zero());
        amps[r] = T::one();
        FourQubitState { amps }
    }

    pub fn amplitude(&self, r: usize) -> &T {
        &self.amps[r]
    }

    pub fn amplitudes(&self) -> &[T; 16] {
        &self.amps
    }

    /// `Σ |Z_r|²` as a float (exact mode: approximate, for scaling only).
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.magnitude().powi(2)).sum()
    }

    pub fn scaled(&self, k: &T) -> Self {
        FourQubitState {
            amps: std::array::from_fn(|r| self.amps[r].clone() * k.clone()),
        }
    }

    /// The four points `A, B, C, D`: columns of the 4x4 amplitude matrix,
    /// `A = (Z_0..Z_3)`, `B = (Z_4..Z_7)`, `C = (Z_8..Z_11)`, `D = (Z_12..Z_15)`.
    pub fn columns(&self) -> [Vector4<T>; 4] {
        std::array::from_fn(|c| Vector4(std::array::from_fn(|i| self.amps[4 * c + i].clone())))
    }

    /// The 4x4 matrix whose columns are `A, B, C, D` (rows indexed by the
    /// last two qubits, columns by the first two).
    pub fn matrix_l(&self) -> [[T; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|c| self.amps[4 * c + i].clone()))
    }

    /// The second slicing of the amplitudes used for the companion
    /// determinant `M`: rows `(Z0,Z2,Z8,Z10), (Z1,Z3,Z9,Z11),
    /// (Z4,Z6,Z12,Z14), (Z5,Z7,Z13,Z15)`.
    pub fn matrix_m(&self) -> [[T; 4]; 4] {
        const IDX: [[usize; 4]; 4] = [
            [0, 2, 8, 10],
            [1, 3, 9, 11],
            [4, 6, 12, 14],
            [5, 7, 13, 15],
        ];
        std::array::from_fn(|i| std::array::from_fn(|j| self.amps[IDX[i][j]].clone()))
    }

    /// The third slicing, for the companion determinant `N`: rows
    /// `(Z0,Z1,Z8,Z9), (Z2,Z3,Z10,Z11), (Z4,Z5,Z12,Z13), (Z6,Z7,Z14,Z15)`.
    pub fn matrix_n(&self) -> [[T; 4]; 4] {
        const IDX: [[usize; 4]; 4] = [
            [0, 1, 8, 9],
            [2, 3, 10, 11],
            [4, 5, 12, 13],
            [6, 7, 14, 15],
        ];
        std::array::from_fn(|i| std::array::from_fn(|j| self.amps[IDX[i][j]].clone()))
    }
}

impl FourQubitState<Complex64> {
    /// Builds a state rescaled to `Σ |Z_r|² = 1`; fails on the zero vector.
    pub fn normalized(amps: [Complex64; 16]) -> Result<Self> {
        let state = Self::from_amplitudes(amps)?;
        let n = state.norm_sqr().sqrt();
        if n == 0.0 {
            return Err(Error::InvalidStateFile("zero state cannot be normalized".into()));
        }
        Ok(state.scaled(&Complex64::new(1.0 / n, 0.0)))
    }
}

/// A three-qubit pure state, amplitudes indexed `s = 4i + 2j + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeQubitState<T: Scalar> {
    amps: [T; 8],
}

impl<T: Scalar> ThreeQubitState<T> {
    pub fn from_amplitudes(amps: [T; 8]) -> Result<Self> {
        for (index, a) in amps.iter().enumerate() {
            if !T::EXACT && !a.magnitude().is_finite() {
                return Err(Error::NonFiniteAmplitude { index });
            }
        }
        Ok(ThreeQubitState { amps })
    }

    pub fn basis(s: usize) -> Self {
        assert!(s < 8, "basis index out of range");
        let mut amps: [T; 8] = std::array::from_fn(|_| T::zero());
        amps[s] = T::one();
        ThreeQubitState { amps }
    }

    pub fn amplitude(&self, s: usize) -> &T {
        &self.amps[s]
    }

    pub fn amplitudes(&self) -> &[T; 8] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.magnitude().powi(2)).sum()
    }

    pub fn scaled(&self, k: &T) -> Self {
        ThreeQubitState {
            amps: std::array::from_fn(|s| self.amps[s].clone() * k.clone()),
        }
    }

    /// The two points `x = (Z_0..Z_3)`, `y = (Z_4..Z_7)` whose span is the
    /// state's line in `CP^3` (split along the first qubit).
    pub fn line_pair(&self) -> (Vector4<T>, Vector4<T>) {
        (
            Vector4(std::array::from_fn(|s| self.amps[s].clone())),
            Vector4(std::array::from_fn(|s| self.amps[4 + s].clone())),
        )
    }
}

impl ThreeQubitState<Complex64> {
    pub fn normalized(amps: [Complex64; 8]) -> Result<Self> {
        let state = Self::from_amplitudes(amps)?;
        let n = state.norm_sqr().sqrt();
        if n == 0.0 {
            return Err(Error::InvalidStateFile("zero state cannot be normalized".into()));
        }
        Ok(state.scaled(&Complex64::new(1.0 / n, 0.0)))
    }
}

/// One factor of a SLOCC operation: an invertible 2x2 matrix normalized to
/// determinant 1 (validated at construction).
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperation<T: Scalar> {
    m: [[T; 2]; 2],
}

/// Tolerance for the determinant-1 check on float local operations.
pub const DET_RTOL: f64 = 1e-9;

impl<T: Scalar> LocalOperation<T> {
    /// Validates `det = 1` (exactly in exact mode, to within [`DET_RTOL`]
    /// otherwise).
    pub fn new(m: [[T; 2]; 2]) -> Result<Self> {
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        let deviation = det.clone() - T::one();
        let bad = if T::EXACT {
            !deviation.is_zero()
        } else {
            !(deviation.magnitude() <= DET_RTOL) // also rejects NaN
        };
        if bad {
            return Err(Error::NotSpecialLinear {
                det: det.to_string(),
                deviation: deviation.magnitude(),
            });
        }
        Ok(LocalOperation { m })
    }

    pub fn identity() -> Self {
        LocalOperation {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.m[i][j]
    }

    pub fn det(&self) -> T {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    /// Matrix product `self · other` (still determinant 1).
    pub fn compose(&self, other: &Self) -> Self {
        let p = |i: usize, j: usize| {
            self.m[i][0].clone() * other.m[0][j].clone()
                + self.m[i][1].clone() * other.m[1][j].clone()
        };
        LocalOperation {
            m: [[p(0, 0), p(0, 1)], [p(1, 0), p(1, 1)]],
        }
    }
}

/// Applies one determinant-1 matrix per qubit:
/// `Z'_{ijkl} = Σ (s1)_{ii'} (s2)_{jj'} (s3)_{kk'} (s4)_{ll'} Z_{i'j'k'l'}`.
pub fn apply_slocc<T: Scalar>(
    state: &FourQubitState<T>,
    ops: &[LocalOperation<T>; 4],
) -> FourQubitState<T> {
    let amps = std::array::from_fn(|r| {
        let bits = [(r >> 3) & 1, (r >> 2) & 1, (r >> 1) & 1, r & 1];
        let mut acc = T::zero();
        for rp in 0..16usize {
            let bp = [(rp >> 3) & 1, (rp >> 2) & 1, (rp >> 1) & 1, rp & 1];
            let mut term = state.amps[rp].clone();
            for q in 0..4 {
                term = term * ops[q].m[bits[q]][bp[q]].clone();
            }
            acc = acc + term;
        }
        acc
    });
    FourQubitState { amps }
}

/// Three-qubit version of [`apply_slocc`].
pub fn apply_slocc3<T: Scalar>(
    state: &ThreeQubitState<T>,
    ops: &[LocalOperation<T>; 3],
) -> ThreeQubitState<T> {
    let amps = std::array::from_fn(|s| {
        let bits = [(s >> 2) & 1, (s >> 1) & 1, s & 1];
        let mut acc = T::zero();
        for sp in 0..8usize {
            let bp = [(sp >> 2) & 1, (sp >> 1) & 1, sp & 1];
            let mut term = state.amps[sp].clone();
            for q in 0..3 {
                term = term * ops[q].m[bits[q]][bp[q]].clone();
            }
            acc = acc + term;
        }
        acc
    });
    ThreeQubitState { amps }
}

/// A relabeling of the four qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitPermutation {
    /// `map[m]` is the zero-based image of zero-based qubit `m`.
    map: [usize; 4],
}

impl QubitPermutation {
    /// Builds from one-based images: `images[m-1]` is where qubit `m` goes.
    pub fn new(images: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &img in &images {
            if !(1..=4).contains(&img) || seen[img - 1] {
                return Err(Error::NotAPermutation(images));
            }
            seen[img - 1] = true;
        }
        Ok(QubitPermutation {
            map: std::array::from_fn(|m| images[m] - 1),
        })
    }

    pub fn identity() -> Self {
        QubitPermutation { map: [0, 1, 2, 3] }
    }

    /// The swap of one-based qubits `a` and `b`.
    pub fn transposition(a: usize, b: usize) -> Result<Self> {
        if !(1..=4).contains(&a) || !(1..=4).contains(&b) || a == b {
            return Err(Error::NotAPermutation([a, b, 0, 0]));
        }
        let mut images = [1, 2, 3, 4];
        images.swap(a - 1, b - 1);
        Self::new(images)
    }

    /// One-based image of a one-based qubit.
    pub fn image_of(&self, qubit: usize) -> usize {
        self.map[qubit - 1] + 1
    }

    /// All 24 permutations, in lexicographic order of their image tuples.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(24);
        for a in 1..=4usize {
            for b in 1..=4usize {
                for c in 1..=4usize {
                    for d in 1..=4usize {
                        if let Ok(p) = Self::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Moves each qubit to its image: `new_bits[σ(m)] = old_bits[m]`, so
/// swapping qubits 3 and 4 maps `|0001>` to `|0010>`.
pub fn permute_qubits<T: Scalar>(
    state: &FourQubitState<T>,
    perm: &QubitPermutation,
) -> FourQubitState<T> {
    let mut amps: [T; 16] = std::array::from_fn(|_| T::zero());
    for r in 0..16usize {
        let bits = [(r >> 3) & 1, (r >> 2) & 1, (r >> 1) & 1, r & 1];
        let mut nb = [0usize; 4];
        for m in 0..4 {
            nb[perm.map[m]] = bits[m];
        }
        let rp = 8 * nb[0] + 4 * nb[1] + 2 * nb[2] + nb[3];
        amps[rp] = state.amps[r].clone();
    }
    FourQubitState { amps }
}

fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A random complex-Gaussian four-qubit state, optionally normalized.
pub fn random_state_with<R: Rng + ?Sized>(rng: &mut R, normalized: bool) -> FourQubitState<Complex64> {
    let mut amps: [Complex64; 16] = std::array::from_fn(|_| random_complex(rng));
    if normalized {
        let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= n;
        }
    }
    FourQubitState { amps }
}

/// Seeded convenience wrapper around [`random_state_with`].
pub fn random_state(seed: u64, normalized: bool) -> FourQubitState<Complex64> {
    random_state_with(&mut ChaCha8Rng::seed_from_u64(seed), normalized)
}

/// A random complex-Gaussian three-qubit state, optionally normalized.
pub fn random_three_qubit_state_with<R: Rng + ?Sized>(
    rng: &mut R,
    normalized: bool,
) -> ThreeQubitState<Complex64> {
    let mut amps: [Complex64; 8] = std::array::from_fn(|_| random_complex(rng));
    if normalized {
        let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= n;
        }
    }
    ThreeQubitState { amps }
}

/// A random determinant-1 local operation: four standard-normal complex
/// entries, rejected while `|det| < 1e-6`, then rescaled by `det^{-1/2}`.
pub fn random_local_operation_with<R: Rng + ?Sized>(rng: &mut R) -> LocalOperation<Complex64> {
    loop {
        let m = [
            [random_complex(rng), random_complex(rng)],
            [random_complex(rng), random_complex(rng)],
        ];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.norm() >= 1e-6 {
            let s = Complex64::new(1.0, 0.0) / det.sqrt();
            return LocalOperation {
                m: [[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]],
            };
        }
    }
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-9i64..=9)),
        BigInt::from(rng.random_range(1i64..=4)),
    )
}

fn random_gaussian_rational<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    GaussianRational::new(random_rational(rng), random_rational(rng))
}

/// A random exact state with small rational real and imaginary parts.
pub fn random_rational_state_with<R: Rng + ?Sized>(rng: &mut R) -> FourQubitState<GaussianRational> {
    FourQubitState {
        amps: std::array::from_fn(|_| random_gaussian_rational(rng)),
    }
}

/// Three-qubit version of [`random_rational_state_with`].
pub fn random_rational_three_qubit_state_with<R: Rng + ?Sized>(
    rng: &mut R,
) -> ThreeQubitState<GaussianRational> {
    ThreeQubitState {
        amps: std::array::from_fn(|_| random_gaussian_rational(rng)),
    }
}

/// A random exact determinant-1 operation: rational `a, b, c` with `a ≠ 0`
/// and `d = (1 + b c) / a`.
pub fn random_rational_local_operation_with<R: Rng + ?Sized>(
    rng: &mut R,
) -> LocalOperation<GaussianRational> {
    loop {
        let a = random_gaussian_rational(rng);
        if a.is_zero() {
            continue;
        }
        let b = random_gaussian_rational(rng);
        let c = random_gaussian_rational(rng);
        let d = (GaussianRational::from_int(1) + b.clone() * c.clone()) / a.clone();
        return LocalOperation { m: [[a, b], [c, d]] };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn swap_of_qubits_3_and_4_moves_0001_to_0010() {
        let state = FourQubitState::<Complex64>::basis(1);
        let perm = QubitPermutation::transposition(3, 4).unwrap();
        let moved = permute_qubits(&state, &perm);
        assert_eq!(moved, FourQubitState::basis(2));
    }

    #[test]
    fn permutation_validation_rejects_repeats() {
        assert!(QubitPermutation::new([1, 1, 3, 4]).is_err());
        assert!(QubitPermutation::new([0, 1, 2, 3]).is_err());
        assert_eq!(QubitPermutation::all().len(), 24);
    }

    #[test]
    fn local_operation_must_have_unit_determinant() {
        let two = Complex64::new(2.0, 0.0);
        assert!(LocalOperation::new([[two, Complex64::zero()], [Complex64::zero(), two]]).is_err());
        let op = LocalOperation::new([
            [two, Complex64::zero()],
            [Complex64::zero(), Complex64::new(0.5, 0.0)],
        ])
        .unwrap();
        assert!((op.det() - Complex64::one()).norm() < 1e-12);
    }

    #[test]
    fn random_local_operations_have_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let op = random_local_operation_with(&mut rng);
            assert!((op.det() - Complex64::one()).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_random_operations_have_exactly_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let op = random_rational_local_operation_with(&mut rng);
            assert!((op.det() - GaussianRational::one()).is_zero());
        }
    }

    #[test]
    fn slocc_composition_matches_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let state = random_state_with(&mut rng, true);
        let first: [LocalOperation<Complex64>; 4] =
            std::array::from_fn(|_| random_local_operation_with(&mut rng));
        let second: [LocalOperation<Complex64>; 4] =
            std::array::from_fn(|_| random_local_operation_with(&mut rng));
        let sequential = apply_slocc(&apply_slocc(&state, &first), &second);
        let composed: [LocalOperation<Complex64>; 4] =
            std::array::from_fn(|q| second[q].compose(&first[q]));
        let at_once = apply_slocc(&state, &composed);
        for r in 0..16 {
            assert!((sequential.amplitude(r) - at_once.amplitude(r)).norm() < 1e-9);
        }
    }

    #[test]
    fn normalization_gives_unit_norm() {
        let state = random_state(42, true);
        assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn matrix_views_slice_the_right_amplitudes() {
        let amps: [Complex64; 16] = std::array::from_fn(|r| Complex64::new(r as f64, 0.0));
        let z = FourQubitState::from_amplitudes(amps).unwrap();
        assert_eq!(z.matrix_l()[0], [amps[0], amps[4], amps[8], amps[12]]);
        assert_eq!(z.matrix_m()[2], [amps[4], amps[6], amps[12], amps[14]]);
        assert_eq!(z.matrix_n()[1], [amps[2], amps[3], amps[10], amps[11]]);
        let cols = z.columns();
        assert_eq!(cols[1].0, [amps[4], amps[5], amps[6], amps[7]]);
    }
}
