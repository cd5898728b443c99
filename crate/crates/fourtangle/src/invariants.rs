//! The four polynomial SLOCC invariants `I1, I2, I3, I4`, the companion
//! determinants `H, L, M, N, U`, and the six sextic covariants `D_uv`.
//!
//! All quantities are polynomials in the amplitudes with rational
//! coefficients and are invariant under determinant-1 local operations.
//! [`full_invariant_set`] computes everything at once and cross-checks the
//! internal relations that tie the pieces together.

use crate::error::{Error, Result};
use crate::geometry::{bivector_dot, dot, dual_points, wedge2};
use crate::scalar::{scaled_residual, times, Scalar};
use crate::state::FourQubitState;

/// Relative tolerance for the internal consistency checks of
/// [`full_invariant_set`] (exact mode demands exact zeros instead).
pub const IDENTITY_RTOL: f64 = 1e-9;

/// Every invariant computed from one state.
///
/// Invariants maintained by construction (checked on the way out, exactly
/// in exact mode):
/// `H = 2 I1`, `M = L + N`, `6 I2 = H² + 2L - 4M`, `I4 = L`,
/// `D_xy = D_zt`, `D_xz = D_yt`, `D_xt = D_yz`, `D_xz - D_xt = H L`,
/// `2 I3 = D_xz + D_xt`, and `U = H² - 4(L + M) = 6 (I2 - I4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet<T: Scalar> {
    pub i1: T,
    pub i2: T,
    pub i3: T,
    pub i4: T,
    pub h: T,
    pub l: T,
    pub m: T,
    pub n: T,
    pub u: T,
    pub d_xy: T,
    pub d_zt: T,
    pub d_xz: T,
    pub d_yt: T,
    pub d_xt: T,
    pub d_yz: T,
}

impl<T: Scalar> InvariantSet<T> {
    /// The canonical sextic `D = D_xt`.
    pub fn d(&self) -> T {
        self.d_xt.clone()
    }

    /// All fields with stable display names (used by reports and tables).
    pub fn fields(&self) -> [(&'static str, &T); 15] {
        [
            ("I1", &self.i1),
            ("I2", &self.i2),
            ("I3", &self.i3),
            ("I4", &self.i4),
            ("H", &self.h),
            ("L", &self.l),
            ("M", &self.m),
            ("N", &self.n),
            ("U", &self.u),
            ("D_xy", &self.d_xy),
            ("D_zt", &self.d_zt),
            ("D_xz", &self.d_xz),
            ("D_yt", &self.d_yt),
            ("D_xt", &self.d_xt),
            ("D_yz", &self.d_yz),
        ]
    }

    /// JSON object with the same keys as [`InvariantSet::fields`], plus the
    /// canonical sextic alias `D`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (name, value) in self.fields() {
            map.insert(name.to_string(), value.to_json());
        }
        map.insert("D".into(), self.d().to_json());
        serde_json::Value::Object(map)
    }
}

/// Generic 4x4 determinant by cofactor expansion along the first row.
pub fn det4<T: Scalar>(m: &[[T; 4]; 4]) -> T {
    let det3 = |r: [usize; 3], c: [usize; 3]| {
        let e = |i: usize, j: usize| m[r[i]][c[j]].clone();
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    };
    let rows = [1, 2, 3];
    m[0][0].clone() * det3(rows, [1, 2, 3]) - m[0][1].clone() * det3(rows, [0, 2, 3])
        + m[0][2].clone() * det3(rows, [0, 1, 3])
        - m[0][3].clone() * det3(rows, [0, 1, 2])
}

/// The quadratic invariant `I1 = (A·D - B·C) / 2 = H / 2`.
pub fn invariant_i1<T: Scalar>(state: &FourQubitState<T>) -> T {
    let [a, b, c, d] = state.columns();
    (dot(&a, &d) - dot(&b, &c)) * T::ratio(1, 2)
}

/// The eight-term expansion of `H = A·D - B·C`.
pub fn h_expansion<T: Scalar>(state: &FourQubitState<T>) -> T {
    let z = |r: usize| state.amplitude(r).clone();
    z(0) * z(15) - z(1) * z(14) - z(2) * z(13) + z(3) * z(12) - z(4) * z(11) + z(5) * z(10)
        + z(6) * z(9)
        - z(7) * z(8)
}

/// The quartic invariant built from the six edge lines:
/// `I2 = [P_AB·P_CD + P_AC·P_BD - ½ P_AD·P_AD - ½ P_BC·P_BC] / 6`.
pub fn invariant_i2<T: Scalar>(state: &FourQubitState<T>) -> T {
    let [a, b, c, d] = state.columns();
    let ab_cd = bivector_dot(&wedge2(&a, &b), &wedge2(&c, &d));
    let ac_bd = bivector_dot(&wedge2(&a, &c), &wedge2(&b, &d));
    let ad = wedge2(&a, &d);
    let bc = wedge2(&b, &c);
    let self_terms = bivector_dot(&ad, &ad) + bivector_dot(&bc, &bc);
    (ab_cd + ac_bd - self_terms * T::ratio(1, 2)) * T::ratio(1, 6)
}

/// The sextic invariant from the dual tetrahedron:
/// `I3 = (a·d - b·c) / 2` for the dual points `(a, b, c, d)`.
pub fn invariant_i3<T: Scalar>(state: &FourQubitState<T>) -> T {
    let duals = dual_points(&state.columns());
    (dot(&duals[0], &duals[3]) - dot(&duals[1], &duals[2])) * T::ratio(1, 2)
}

/// The quartic invariant `I4 = L = det(A | B | C | D)`.
pub fn invariant_i4<T: Scalar>(state: &FourQubitState<T>) -> T {
    det4(&state.matrix_l())
}

/// One of the six qubit pairs labelling a sextic covariant. The letters
/// name the four qubits `x, y, z, t` with bit values `8, 4, 2, 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SexticPair {
    XY,
    ZT,
    XZ,
    YT,
    XT,
    YZ,
}

impl SexticPair {
    pub const ALL: [SexticPair; 6] = [
        SexticPair::XY,
        SexticPair::ZT,
        SexticPair::XZ,
        SexticPair::YT,
        SexticPair::XT,
        SexticPair::YZ,
    ];

    /// Bit values of the two distinguished qubits `(u, v)`.
    fn bits(self) -> (usize, usize) {
        match self {
            SexticPair::XY => (8, 4),
            SexticPair::ZT => (2, 1),
            SexticPair::XZ => (8, 2),
            SexticPair::YT => (4, 1),
            SexticPair::XT => (8, 1),
            SexticPair::YZ => (4, 2),
        }
    }

    /// Bit values of the complementary pair `(w1, w2)`.
    fn complement_bits(self) -> (usize, usize) {
        match self {
            SexticPair::XY => (2, 1),
            SexticPair::ZT => (8, 4),
            SexticPair::XZ => (4, 1),
            SexticPair::YT => (8, 2),
            SexticPair::XT => (4, 2),
            SexticPair::YZ => (8, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SexticPair::XY => "D_xy",
            SexticPair::ZT => "D_zt",
            SexticPair::XZ => "D_xz",
            SexticPair::YT => "D_yt",
            SexticPair::XT => "D_xt",
            SexticPair::YZ => "D_yz",
        }
    }
}

/// A polynomial of bidegree (2, 2): the determinant of the 2x2 matrix of
/// bilinear forms obtained by viewing the state as a 2x2 matrix (over the
/// complement qubits) of bilinear forms in the distinguished pair `(u, v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiquadraticForm<T: Scalar> {
    /// `coeffs[p][q]` multiplies `u^p v^q`.
    pub coeffs: [[T; 3]; 3],
}

impl<T: Scalar> BiquadraticForm<T> {
    /// Evaluates the biquadratic at `(u, v)`.
    pub fn eval(&self, u: &T, v: &T) -> T {
        let mut acc = T::zero();
        let mut up = T::one();
        for p in 0..3 {
            let mut vq = T::one();
            for q in 0..3 {
                acc = acc + self.coeffs[p][q].clone() * up.clone() * vq.clone();
                vq = vq * v.clone();
            }
            up = up * u.clone();
        }
        acc
    }

    /// Determinant of the 3x3 coefficient matrix — the sextic covariant.
    pub fn det(&self) -> T {
        let e = |i: usize, j: usize| self.coeffs[i][j].clone();
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    }
}

/// Builds the biquadratic for a distinguished pair: with the state read as
/// a 2x2 matrix `m[i][j]` of bilinear forms in `(u, v)` indexed by the
/// complement qubits, this is `det m = m00 m11 - m01 m10` expanded as a
/// polynomial of bidegree (2, 2).
pub fn biquadratic_form<T: Scalar>(
    state: &FourQubitState<T>,
    pair: SexticPair,
) -> BiquadraticForm<T> {
    let (u, v) = pair.bits();
    let (w1, w2) = pair.complement_bits();
    let z = |i: usize, j: usize, k: usize, l: usize| {
        state.amplitude(i * w1 + j * w2 + k * u + l * v).clone()
    };
    let mut coeffs: [[T; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
    for k in 0..2 {
        for l in 0..2 {
            for p in 0..2 {
                for q in 0..2 {
                    let term = z(0, 0, k, l) * z(1, 1, p, q) - z(0, 1, k, l) * z(1, 0, p, q);
                    coeffs[k + p][l + q] = coeffs[k + p][l + q].clone() + term;
                }
            }
        }
    }
    BiquadraticForm { coeffs }
}

/// One sextic covariant `D_uv`: the determinant of the biquadratic's
/// coefficient matrix.
pub fn sextic_covariant<T: Scalar>(state: &FourQubitState<T>, pair: SexticPair) -> T {
    biquadratic_form(state, pair).det()
}

/// The six sextics in the pair order of [`SexticPair::ALL`]:
/// `(D_xy, D_zt, D_xz, D_yt, D_xt, D_yz)`.
pub fn sextic_covariants<T: Scalar>(state: &FourQubitState<T>) -> [T; 6] {
    std::array::from_fn(|i| sextic_covariant(state, SexticPair::ALL[i]))
}

/// Computes every invariant and validates the internal relations listed on
/// [`InvariantSet`]; returns the first violated relation otherwise.
pub fn full_invariant_set<T: Scalar>(state: &FourQubitState<T>) -> Result<InvariantSet<T>> {
    let ns = state.norm_sqr();
    // Scale of a degree-2k polynomial in the amplitudes.
    let scale = |k: i32| ns.powi(k).max(f64::MIN_POSITIVE);

    let h = h_expansion(state);
    let i1 = invariant_i1(state);
    let l = det4(&state.matrix_l());
    let m = det4(&state.matrix_m());
    let n = det4(&state.matrix_n());
    let i2 = invariant_i2(state);
    let i3 = invariant_i3(state);
    let i4 = l.clone();
    let [d_xy, d_zt, d_xz, d_yt, d_xt, d_yz] = sextic_covariants(state);
    let u = h.clone() * h.clone() - times(4, l.clone() + m.clone());

    let check = |name: &'static str, diff: T, deg: i32| -> Result<()> {
        let residual = scaled_residual(&diff, scale(deg));
        if residual > if T::EXACT { 0.0 } else { IDENTITY_RTOL } {
            Err(Error::RelationViolation { name, residual })
        } else {
            Ok(())
        }
    };

    check("H = 2 I1", h.clone() - times(2, i1.clone()), 1)?;
    check("M = L + N", m.clone() - l.clone() - n.clone(), 2)?;
    check(
        "6 I2 = H^2 + 2 L - 4 M",
        times(6, i2.clone()) - (h.clone() * h.clone() + times(2, l.clone()) - times(4, m.clone())),
        2,
    )?;
    check("D_xy = D_zt", d_xy.clone() - d_zt.clone(), 3)?;
    check("D_xz = D_yt", d_xz.clone() - d_yt.clone(), 3)?;
    check("D_xt = D_yz", d_xt.clone() - d_yz.clone(), 3)?;
    check(
        "D_xz - D_xt = H L",
        d_xz.clone() - d_xt.clone() - h.clone() * l.clone(),
        3,
    )?;
    check(
        "2 I3 = D_xz + D_xt",
        times(2, i3.clone()) - d_xz.clone() - d_xt.clone(),
        3,
    )?;
    check(
        "U = 6 (I2 - I4)",
        u.clone() - times(6, i2.clone() - i4.clone()),
        2,
    )?;

    Ok(InvariantSet {
        i1,
        i2,
        i3,
        i4,
        h,
        l,
        m,
        n,
        u,
        d_xy,
        d_zt,
        d_xz,
        d_yt,
        d_xt,
        d_yz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use num_complex::Complex64;
    use num_traits::{One, Zero};
    use rand::SeedableRng;

    fn ghz4() -> FourQubitState<GaussianRational> {
        let mut amps: [GaussianRational; 16] = std::array::from_fn(|_| GaussianRational::zero());
        amps[0] = GaussianRational::one();
        amps[15] = GaussianRational::one();
        FourQubitState::from_amplitudes(amps).unwrap()
    }

    #[test]
    fn ghz_invariants_are_the_textbook_values() {
        let inv = full_invariant_set(&ghz4()).unwrap();
        assert_eq!(inv.i1, GaussianRational::ratio(1, 2));
        assert_eq!(inv.i2, GaussianRational::ratio(1, 6));
        assert!(inv.i3.is_zero());
        assert!(inv.i4.is_zero());
        assert_eq!(inv.h, GaussianRational::one());
        assert!(inv.l.is_zero() && inv.m.is_zero() && inv.n.is_zero());
    }

    #[test]
    fn product_state_has_vanishing_invariants() {
        let state = FourQubitState::<Complex64>::basis(5);
        let inv = full_invariant_set(&state).unwrap();
        for (name, value) in inv.fields() {
            assert!(value.norm() < 1e-15, "{name} should vanish on a product state");
        }
    }

    #[test]
    fn biquadratic_reconstructs_the_pair_determinant() {
        // Evaluating the biquadratic at (u, v) must equal the determinant of
        // the 2x2 matrix of bilinear forms evaluated there.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let state = crate::state::random_rational_state_with(&mut rng);
        for pair in SexticPair::ALL {
            let form = biquadratic_form(&state, pair);
            let (ub, vb) = pair.bits();
            let (w1, w2) = pair.complement_bits();
            for (us, vs) in [(2i64, 3i64), (-1, 2), (5, -4)] {
                let u = GaussianRational::ratio(us, 2);
                let v = GaussianRational::ratio(vs, 3);
                let bil = |i: usize, j: usize| {
                    let mut acc = GaussianRational::zero();
                    let mut upow = GaussianRational::one();
                    for k in 0..2 {
                        let mut vpow = GaussianRational::one();
                        for l in 0..2 {
                            let amp = state.amplitude(i * w1 + j * w2 + k * ub + l * vb).clone();
                            acc = acc + amp * upow.clone() * vpow.clone();
                            vpow = vpow * v.clone();
                        }
                        upow = upow * u.clone();
                    }
                    acc
                };
                let direct = bil(0, 0) * bil(1, 1) - bil(0, 1) * bil(1, 0);
                assert_eq!(form.eval(&u, &v), direct);
            }
        }
    }

    #[test]
    fn det4_matches_known_value() {
        let m: [[Complex64; 4]; 4] = [
            [1.0, 2.0, 3.0, 4.0],
            [5.0, 6.0, 7.0, 8.0],
            [2.0, 6.0, 4.0, 8.0],
            [3.0, 1.0, 1.0, 2.0],
        ]
        .map(|row| row.map(|x| Complex64::new(x, 0.0)));
        assert!((det4(&m) - Complex64::new(72.0, 0.0)).norm() < 1e-12);
    }
}
