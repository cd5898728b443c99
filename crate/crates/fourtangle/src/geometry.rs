//! Exterior algebra over the four-dimensional coefficient space.
//!
//! A four-qubit state is read as four points `A, B, C, D` in `CP^3` (the
//! columns of the 4x4 amplitude matrix). This module supplies the metric
//! that defines the invariant quadric, wedge products, Plücker (line)
//! coordinates, the bracket pairing, and the Hodge dual used throughout
//! the invariant formulas.

use crate::scalar::{is_negligible, times, Scalar};
use crate::state::FourQubitState;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The quadric metric: antidiagonal `(1, -1, -1, 1)`, unit determinant.
pub const METRIC: [[i64; 4]; 4] = [
    [0, 0, 0, 1],
    [0, 0, -1, 0],
    [0, -1, 0, 0],
    [1, 0, 0, 0],
];

/// Index raising: slot `a` maps to `METRIC_PART[a]` with sign `METRIC_SIGN[a]`.
pub(crate) const METRIC_PART: [usize; 4] = [3, 2, 1, 0];
pub(crate) const METRIC_SIGN: [i64; 4] = [1, -1, -1, 1];

/// Component order for bivectors (strictly increasing index pairs).
pub const BIVECTOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Component order for trivectors (strictly increasing index triples).
pub const TRIVECTOR_TRIPLES: [(usize, usize, usize); 4] =
    [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];

/// Sign of the squared Hodge dual on bivectors with this metric
/// (`** = +identity`, so the self-dual split uses eigenvalues ±1).
pub const DUALITY_SQUARE_SIGN: i64 = 1;

/// The induced metric on bivectors, `G_{IJ} = g_{ac} g_{bd} - g_{ad} g_{bc}`
/// for `I = (a, b)`, `J = (c, d)` in the order of [`BIVECTOR_PAIRS`].
pub const EXTERIOR_METRIC: [[i64; 6]; 6] = [
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, -1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
];

/// Computes the second exterior power of [`METRIC`] from first principles;
/// equals [`EXTERIOR_METRIC`] (asserted in tests).
pub fn exterior_square_metric() -> [[i64; 6]; 6] {
    let mut out = [[0i64; 6]; 6];
    for (i, &(a, b)) in BIVECTOR_PAIRS.iter().enumerate() {
        for (j, &(c, d)) in BIVECTOR_PAIRS.iter().enumerate() {
            out[i][j] = METRIC[a][c] * METRIC[b][d] - METRIC[a][d] * METRIC[b][c];
        }
    }
    out
}

/// Totally antisymmetric symbol with `eps(0,1,2,3) = +1`; zero on repeats.
pub fn levi_civita4(idx: [usize; 4]) -> i64 {
    perm_sign(&idx)
}

fn perm_sign(idx: &[usize]) -> i64 {
    let n = idx.len();
    let mut sign = 1i64;
    for i in 0..n {
        for j in (i + 1)..n {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// A point of `CP^3` (or any 4-component coefficient vector).
#[derive(Clone, Debug, PartialEq)]
pub struct Vector4<T>(pub [T; 4]);

impl<T: Scalar> Vector4<T> {
    pub fn zero() -> Self {
        Vector4(std::array::from_fn(|_| T::zero()))
    }

    /// Raises the index with the metric: `v^a = g^{ab} v_b`.
    pub fn raised(&self) -> Self {
        Vector4(std::array::from_fn(|a| {
            times(METRIC_SIGN[a], self.0[METRIC_PART[a]].clone())
        }))
    }

    pub fn scaled(&self, k: &T) -> Self {
        Vector4(std::array::from_fn(|a| self.0[a].clone() * k.clone()))
    }

    /// Euclidean size of the component vector (scale estimate only).
    pub fn euclid_norm(&self) -> f64 {
        self.0.iter().map(|c| c.magnitude().powi(2)).sum::<f64>().sqrt()
    }
}

/// Metric pairing `x · y = x_0 y_3 - x_1 y_2 - x_2 y_1 + x_3 y_0`.
pub fn dot<T: Scalar>(x: &Vector4<T>, y: &Vector4<T>) -> T {
    let (x, y) = (&x.0, &y.0);
    x[0].clone() * y[3].clone() - x[1].clone() * y[2].clone() - x[2].clone() * y[1].clone()
        + x[3].clone() * y[0].clone()
}

/// Plücker line coordinates of the span of two points.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivector<T> {
    /// Components on the strictly increasing pairs of [`BIVECTOR_PAIRS`].
    pub c: [T; 6],
}

impl<T: Scalar> Bivector<T> {
    pub fn zero() -> Self {
        Bivector {
            c: std::array::from_fn(|_| T::zero()),
        }
    }

    /// Signed component `p_{ab}` for arbitrary index order (0 on diagonal).
    pub fn get(&self, a: usize, b: usize) -> T {
        if a == b {
            return T::zero();
        }
        let pos = BIVECTOR_PAIRS
            .iter()
            .position(|&(u, v)| (u, v) == (a.min(b), a.max(b)))
            .expect("indices in 0..4");
        if a < b {
            self.c[pos].clone()
        } else {
            -self.c[pos].clone()
        }
    }

    /// Raises both indices with the metric.
    pub fn raised(&self) -> Self {
        Bivector {
            c: std::array::from_fn(|i| {
                let (a, b) = BIVECTOR_PAIRS[i];
                times(
                    METRIC_SIGN[a] * METRIC_SIGN[b],
                    self.get(METRIC_PART[a], METRIC_PART[b]),
                )
            }),
        }
    }

    pub fn scaled(&self, k: &T) -> Self {
        Bivector {
            c: std::array::from_fn(|i| self.c[i].clone() * k.clone()),
        }
    }

    /// The antisymmetric 4x4 component matrix.
    pub fn to_matrix(&self) -> [[T; 4]; 4] {
        std::array::from_fn(|a| std::array::from_fn(|b| self.get(a, b)))
    }

    /// Reads a bivector back from an antisymmetric matrix; the round trip
    /// through [`Bivector::to_matrix`] is lossless. Fails if the matrix is
    /// not antisymmetric (component-exact test).
    pub fn from_matrix(m: &[[T; 4]; 4]) -> crate::error::Result<Self> {
        for a in 0..4 {
            for b in 0..4 {
                if m[a][b] != -m[b][a].clone() {
                    return Err(crate::error::Error::InvalidStateFile(
                        "matrix is not antisymmetric".into(),
                    ));
                }
            }
        }
        Ok(Bivector {
            c: std::array::from_fn(|i| {
                let (a, b) = BIVECTOR_PAIRS[i];
                m[a][b].clone()
            }),
        })
    }

    /// Euclidean size of the component vector (scale estimate only).
    pub fn euclid_norm(&self) -> f64 {
        self.c.iter().map(|c| c.magnitude().powi(2)).sum::<f64>().sqrt()
    }
}

impl<T: Scalar> Add for Bivector<T> {
    type Output = Bivector<T>;
    fn add(self, rhs: Self) -> Self {
        Bivector {
            c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()),
        }
    }
}

impl<T: Scalar> Sub for Bivector<T> {
    type Output = Bivector<T>;
    fn sub(self, rhs: Self) -> Self {
        Bivector {
            c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()),
        }
    }
}

impl<T: Scalar> Neg for Bivector<T> {
    type Output = Bivector<T>;
    fn neg(self) -> Self {
        Bivector {
            c: std::array::from_fn(|i| -self.c[i].clone()),
        }
    }
}

/// Wedge of two points: `(x ∧ y)_{ab} = x_a y_b - x_b y_a`.
pub fn wedge2<T: Scalar>(x: &Vector4<T>, y: &Vector4<T>) -> Bivector<T> {
    Bivector {
        c: std::array::from_fn(|i| {
            let (a, b) = BIVECTOR_PAIRS[i];
            x.0[a].clone() * y.0[b].clone() - x.0[b].clone() * y.0[a].clone()
        }),
    }
}

/// Full metric contraction `p^{ab} q_{ab}` (the factor 2 accounts for both
/// index orders of each strictly increasing pair).
pub fn bivector_dot<T: Scalar>(p: &Bivector<T>, q: &Bivector<T>) -> T {
    let qu = q.raised();
    let mut acc = T::zero();
    for i in 0..6 {
        acc = acc + p.c[i].clone() * qu.c[i].clone();
    }
    times(2, acc)
}

/// Symmetric bracket pairing
/// `<p, q> = p01 q23 - p02 q13 + p03 q12 + p12 q03 - p13 q02 + p23 q01`.
pub fn bracket<T: Scalar>(p: &Bivector<T>, q: &Bivector<T>) -> T {
    let (p, q) = (&p.c, &q.c);
    p[0].clone() * q[5].clone() - p[1].clone() * q[4].clone() + p[2].clone() * q[3].clone()
        + p[3].clone() * q[2].clone()
        - p[4].clone() * q[1].clone()
        + p[5].clone() * q[0].clone()
}

/// Hodge dual `(*p)_{ab} = eps_{abcd} p^{cd}` (summed over the strictly
/// increasing complement pair; both index orders give the factor absorbed
/// into the component convention). Squares to `+identity`.
pub fn hodge_dual<T: Scalar>(p: &Bivector<T>) -> Bivector<T> {
    let up = p.raised();
    Bivector {
        c: std::array::from_fn(|i| {
            let (a, b) = BIVECTOR_PAIRS[i];
            let mut rest = (0..4).filter(|k| *k != a && *k != b);
            let c0 = rest.next().expect("two complement indices");
            let d0 = rest.next().expect("two complement indices");
            times(levi_civita4([a, b, c0, d0]), up.get(c0, d0))
        }),
    }
}

/// Splits into self-dual and anti-self-dual parts `(p ± *p) / 2`, the
/// eigenspaces of the Hodge dual for eigenvalues `+1` and `-1`.
pub fn selfdual_split<T: Scalar>(p: &Bivector<T>) -> (Bivector<T>, Bivector<T>) {
    let star = hodge_dual(p);
    let half = T::ratio(1, 2);
    (
        (p.clone() + star.clone()).scaled(&half),
        (p.clone() - star).scaled(&half),
    )
}

/// Plane (trivector) coordinates of the span of three points.
#[derive(Clone, Debug, PartialEq)]
pub struct Trivector<T> {
    /// Components on the strictly increasing triples of [`TRIVECTOR_TRIPLES`].
    pub c: [T; 4],
}

impl<T: Scalar> Trivector<T> {
    /// Signed component for arbitrary index order (0 on repeats).
    pub fn get(&self, a: usize, b: usize, c: usize) -> T {
        let sign = perm_sign(&[a, b, c]);
        if sign == 0 {
            return T::zero();
        }
        let mut key = [a, b, c];
        key.sort_unstable();
        let pos = TRIVECTOR_TRIPLES
            .iter()
            .position(|&t| t == (key[0], key[1], key[2]))
            .expect("indices in 0..4");
        times(sign, self.c[pos].clone())
    }

    /// Raises all three indices with the metric.
    pub fn raised(&self) -> Self {
        Trivector {
            c: std::array::from_fn(|i| {
                let (a, b, c) = TRIVECTOR_TRIPLES[i];
                times(
                    METRIC_SIGN[a] * METRIC_SIGN[b] * METRIC_SIGN[c],
                    self.get(METRIC_PART[a], METRIC_PART[b], METRIC_PART[c]),
                )
            }),
        }
    }

    /// Euclidean size of the component vector (scale estimate only).
    pub fn euclid_norm(&self) -> f64 {
        self.c.iter().map(|c| c.magnitude().powi(2)).sum::<f64>().sqrt()
    }
}

/// Wedge of three points.
pub fn wedge3<T: Scalar>(x: &Vector4<T>, y: &Vector4<T>, z: &Vector4<T>) -> Trivector<T> {
    let (x, y, z) = (&x.0, &y.0, &z.0);
    Trivector {
        c: std::array::from_fn(|i| {
            let (a, b, c) = TRIVECTOR_TRIPLES[i];
            x[a].clone() * y[b].clone() * z[c].clone()
                + x[c].clone() * y[a].clone() * z[b].clone()
                + x[b].clone() * y[c].clone() * z[a].clone()
                - x[b].clone() * y[a].clone() * z[c].clone()
                - x[c].clone() * y[b].clone() * z[a].clone()
                - x[a].clone() * y[c].clone() * z[b].clone()
        }),
    }
}

/// Full metric contraction `p^{abc} q_{abc}` (the factor 6 accounts for all
/// 3! index orders of each strictly increasing triple).
pub fn trivector_dot<T: Scalar>(p: &Trivector<T>, q: &Trivector<T>) -> T {
    let qu = q.raised();
    let mut acc = T::zero();
    for i in 0..4 {
        acc = acc + p.c[i].clone() * qu.c[i].clone();
    }
    times(6, acc)
}

/// The dual tetrahedron: given points `(A, B, C, D)`, returns `(a, b, c, d)`
/// where each dual point is the epsilon contraction of the raised other
/// three (`a_α = -ε_{αβγδ} B^β C^γ D^δ`, signs `-,+,+,-`). Each dual point
/// is metric-orthogonal to the three points that define it.
pub fn dual_points<T: Scalar>(points: &[Vector4<T>; 4]) -> [Vector4<T>; 4] {
    let raised: [Vector4<T>; 4] = std::array::from_fn(|i| points[i].raised());

    let eps3 = |p: &Vector4<T>, q: &Vector4<T>, r: &Vector4<T>, slot: usize, sign: i64| {
        Vector4(std::array::from_fn(|free| {
            let rest: Vec<usize> = (0..4).filter(|k| *k != slot).collect();
            let mut acc = T::zero();
            for x in 0..4 {
                for y in 0..4 {
                    for z in 0..4 {
                        let mut idx = [0usize; 4];
                        idx[slot] = free;
                        idx[rest[0]] = x;
                        idx[rest[1]] = y;
                        idx[rest[2]] = z;
                        let e = levi_civita4(idx);
                        if e != 0 {
                            acc = acc
                                + times(e, p.0[x].clone() * q.0[y].clone() * r.0[z].clone());
                        }
                    }
                }
            }
            times(sign, acc)
        }))
    };

    let [a, b, c, d] = &raised;
    [
        eps3(b, c, d, 0, -1),
        eps3(a, c, d, 1, 1),
        eps3(a, b, d, 2, 1),
        eps3(a, b, c, 3, -1),
    ]
}

/// Labels for the six tetrahedron edges in the order of [`BIVECTOR_PAIRS`]
/// applied to the points `(A, B, C, D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineLabel {
    AB,
    AC,
    AD,
    BC,
    BD,
    CD,
}

impl LineLabel {
    pub const ALL: [LineLabel; 6] = [
        LineLabel::AB,
        LineLabel::AC,
        LineLabel::AD,
        LineLabel::BC,
        LineLabel::BD,
        LineLabel::CD,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&l| l == self).expect("label")
    }

    /// The two point indices (into `A=0, B=1, C=2, D=3`) this edge joins.
    pub fn points(self) -> (usize, usize) {
        BIVECTOR_PAIRS[self.index()]
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

/// Labels for the four tetrahedron faces, named by the point indices they
/// span (`P123` spans `B, C, D` and so on).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneLabel {
    P123,
    P023,
    P013,
    P012,
}

impl PlaneLabel {
    pub const ALL: [PlaneLabel; 4] = [
        PlaneLabel::P123,
        PlaneLabel::P023,
        PlaneLabel::P013,
        PlaneLabel::P012,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&l| l == self).expect("label")
    }

    /// The three point indices this face spans.
    pub fn points(self) -> (usize, usize, usize) {
        match self {
            PlaneLabel::P123 => (1, 2, 3),
            PlaneLabel::P023 => (0, 2, 3),
            PlaneLabel::P013 => (0, 1, 3),
            PlaneLabel::P012 => (0, 1, 2),
        }
    }
}

impl fmt::Display for PlaneLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

/// The full Plücker data of a state's point tetrahedron: the six edge
/// lines and the four face planes.
#[derive(Clone, Debug)]
pub struct PlueckerSet<T> {
    /// Edge bivectors in the order of [`LineLabel::ALL`].
    pub lines: [Bivector<T>; 6],
    /// Face trivectors in the order of [`PlaneLabel::ALL`].
    pub planes: [Trivector<T>; 4],
}

impl<T: Scalar> PlueckerSet<T> {
    pub fn line(&self, label: LineLabel) -> &Bivector<T> {
        &self.lines[label.index()]
    }

    pub fn plane(&self, label: PlaneLabel) -> &Trivector<T> {
        &self.planes[label.index()]
    }
}

/// Computes all edge lines and face planes of the state's tetrahedron.
pub fn pluecker_set<T: Scalar>(state: &FourQubitState<T>) -> PlueckerSet<T> {
    let cols = state.columns();
    let lines = std::array::from_fn(|i| {
        let (a, b) = BIVECTOR_PAIRS[i];
        wedge2(&cols[a], &cols[b])
    });
    let planes = std::array::from_fn(|i| {
        let (a, b, c) = PlaneLabel::ALL[i].points();
        wedge3(&cols[a], &cols[b], &cols[c])
    });
    PlueckerSet { lines, planes }
}

/// How a projective line sits relative to the invariant quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineQuadricClass {
    /// Generic secant: meets the quadric in two distinct points.
    TwoPoints,
    /// Tangent: the restricted quadratic has a double root.
    Tangent,
    /// The whole line lies on the quadric.
    Isotropic,
    /// The two spanning vectors are proportional; no line is defined.
    DegenerateLine,
}

impl fmt::Display for LineQuadricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

/// Classifies the line spanned by `x` and `y` against the quadric.
///
/// The restriction of the quadric to the line `x + λ y` is the binary
/// quadratic `x·x + 2λ x·y + λ² y·y`; its discriminant
/// `(x·y)² - (x·x)(y·y)` separates secant from tangent lines, and the
/// vanishing of all three coefficients means the line is contained in the
/// quadric. Tolerances scale with the Euclidean sizes of `x` and `y`
/// (ignored in exact mode).
pub fn line_quadric_classify<T: Scalar>(
    x: &Vector4<T>,
    y: &Vector4<T>,
    tol: f64,
) -> LineQuadricClass {
    let nx = x.euclid_norm();
    let ny = y.euclid_norm();
    let span = wedge2(x, y);
    if span.c.iter().all(|c| is_negligible(c, tol, nx * ny)) {
        return LineQuadricClass::DegenerateLine;
    }
    let xx = dot(x, x);
    let xy = dot(x, y);
    let yy = dot(y, y);
    if is_negligible(&xx, tol, nx * nx)
        && is_negligible(&xy, tol, nx * ny)
        && is_negligible(&yy, tol, ny * ny)
    {
        return LineQuadricClass::Isotropic;
    }
    let disc = xy.clone() * xy - xx * yy;
    if is_negligible(&disc, tol, (nx * ny).powi(2)) {
        LineQuadricClass::Tangent
    } else {
        LineQuadricClass::TwoPoints
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn v(c: [f64; 4]) -> Vector4<Complex64> {
        Vector4(std::array::from_fn(|i| Complex64::new(c[i], 0.0)))
    }

    #[test]
    fn exterior_metric_matches_second_exterior_power() {
        assert_eq!(exterior_square_metric(), EXTERIOR_METRIC);
    }

    #[test]
    fn metric_and_raising_agree() {
        // dot(x, y) must equal sum_a x_a * (raised y)_a.
        let x = v([1.0, 2.0, 3.0, 4.0]);
        let y = v([-2.0, 5.0, 0.5, 7.0]);
        let yr = y.raised();
        let direct: Complex64 = (0..4).map(|a| x.0[a] * yr.0[a]).sum();
        assert_eq!(dot(&x, &y), direct);
        assert_eq!(dot(&x, &y), dot(&y, &x));
    }

    #[test]
    fn hodge_basis_images() {
        // *(e01, e02, e03, e12, e13, e23) = (e01, -e02, -e12, -e03, -e13, e23)
        let expected: [[f64; 6]; 6] = [
            [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        ];
        for i in 0..6 {
            let mut e = Bivector::<Complex64>::zero();
            e.c[i] = Complex64::new(1.0, 0.0);
            let star = hodge_dual(&e);
            for j in 0..6 {
                assert_eq!(star.c[j], Complex64::new(expected[i][j], 0.0), "*e{i} component {j}");
            }
        }
    }

    #[test]
    fn hodge_squares_to_identity() {
        let p = Bivector {
            c: std::array::from_fn(|i| Complex64::new(i as f64 - 2.5, 1.0 + i as f64)),
        };
        let pss = hodge_dual(&hodge_dual(&p));
        for j in 0..6 {
            let diff = pss.c[j] - p.c[j] * (DUALITY_SQUARE_SIGN as f64);
            assert!(diff.norm() < 1e-12);
        }
    }

    #[test]
    fn selfdual_split_reassembles() {
        let p = Bivector {
            c: std::array::from_fn(|i| Complex64::new(0.3 * i as f64 - 1.0, 0.7 - 0.2 * i as f64)),
        };
        let (plus, minus) = selfdual_split(&p);
        let together = plus.clone() + minus.clone();
        for j in 0..6 {
            assert!((together.c[j] - p.c[j]).norm() < 1e-12);
            assert!((hodge_dual(&plus).c[j] - plus.c[j]).norm() < 1e-12);
            assert!((hodge_dual(&minus).c[j] + minus.c[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn bracket_is_symmetric_and_matches_half_dot_on_duals() {
        let x = v([1.0, -2.0, 0.5, 3.0]);
        let y = v([2.0, 1.0, -1.0, 0.25]);
        let zq = v([0.5, 0.5, 4.0, -3.0]);
        let w = v([1.5, 2.5, -0.5, 1.0]);
        let p = wedge2(&x, &y);
        let q = wedge2(&zq, &w);
        assert!((bracket(&p, &q) - bracket(&q, &p)).norm() < 1e-12);
        // <p, *q> = (1/2) p·q and <*p, *q> = <p, q>
        let half_dot = bivector_dot(&p, &q) * Complex64::new(0.5, 0.0);
        assert!((bracket(&p, &hodge_dual(&q)) - half_dot).norm() < 1e-12);
        let lhs = bracket(&hodge_dual(&p), &hodge_dual(&q));
        assert!((lhs - bracket(&p, &q)).norm() < 1e-12);
    }

    #[test]
    fn pluecker_quadratic_relation_holds_for_decomposable_bivectors() {
        // <p, p> = 0 for p = x ∧ y.
        let x = v([1.0, 4.0, -2.0, 0.5]);
        let y = v([3.0, -1.0, 2.0, 2.0]);
        let p = wedge2(&x, &y);
        assert!(bracket(&p, &p).norm() < 1e-12);
    }

    #[test]
    fn matrix_round_trip_is_lossless() {
        let p = Bivector {
            c: std::array::from_fn(|i| Complex64::new(1.0 + i as f64, -0.5 * i as f64)),
        };
        let m = p.to_matrix();
        let q = Bivector::from_matrix(&m).unwrap();
        assert_eq!(p, q);
        let mut bad = m;
        bad[0][1] += Complex64::new(1e-3, 0.0);
        assert!(Bivector::from_matrix(&bad).is_err());
    }

    #[test]
    fn dual_points_annihilate_their_defining_points() {
        let pts = [
            v([1.0, 2.0, -1.0, 0.5]),
            v([0.0, 1.0, 3.0, -2.0]),
            v([2.0, -1.0, 1.0, 1.0]),
            v([-1.0, 0.5, 0.5, 2.0]),
        ];
        let duals = dual_points(&pts);
        for (i, dual) in duals.iter().enumerate() {
            for (j, point) in pts.iter().enumerate() {
                if i != j {
                    assert!(dot(dual, point).norm() < 1e-10, "dual {i} vs point {j}");
                }
            }
        }
    }

    #[test]
    fn line_classification_on_reference_lines() {
        let tol = 1e-10;
        // Secant: x, y both on the quadric, pairing nonzero.
        let x = v([1.0, 0.0, 0.0, 0.0]);
        let y = v([0.0, 0.0, 0.0, 1.0]);
        assert_eq!(line_quadric_classify(&x, &y, tol), LineQuadricClass::TwoPoints);
        // Tangent: (x·y)² = (x·x)(y·y) with x·x ≠ 0.
        let x = v([0.0, 1.0, 1.0, 0.0]);
        let y = v([1.0, 0.0, 0.0, 0.0]);
        assert_eq!(line_quadric_classify(&x, &y, tol), LineQuadricClass::Tangent);
        // Isotropic: all restricted coefficients vanish.
        let x = v([1.0, 0.0, 0.0, 0.0]);
        let y = v([0.0, 1.0, 0.0, 0.0]);
        assert_eq!(line_quadric_classify(&x, &y, tol), LineQuadricClass::Isotropic);
        // Degenerate: proportional spanning vectors.
        let x = v([1.0, 2.0, 3.0, 4.0]);
        let y = v([2.0, 4.0, 6.0, 8.0]);
        assert_eq!(line_quadric_classify(&x, &y, tol), LineQuadricClass::DegenerateLine);
    }
}
