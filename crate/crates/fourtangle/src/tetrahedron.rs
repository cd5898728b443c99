//! The tetrahedron picture in CP³: the four state columns as projective
//! points, ranks, vanishing edges/faces, pairwise line incidence, and the
//! `I4`-based degeneracy flag.

use crate::geometry::{bracket, dual_points, pluecker_set, LineLabel, PlaneLabel};
use crate::invariants::invariant_i4;
use crate::scalar::{is_negligible, Scalar};
use crate::state::FourQubitState;

/// Default relative tolerance for the tetrahedron diagnostics.
pub const TETRAHEDRON_RTOL: f64 = 1e-9;

/// Rank of the 4x4 column matrix by Gaussian elimination with full
/// pivoting: exact pivot tests in exact mode, `tol`-scaled magnitude
/// tests in float mode.
pub fn point_rank<T: Scalar>(state: &FourQubitState<T>, tol: f64) -> usize {
    let mut m = state.matrix_l();
    let scale = m
        .iter()
        .flatten()
        .map(|v| v.magnitude())
        .fold(0.0f64, f64::max);
    let mut rank = 0;
    for step in 0..4 {
        // Full pivot over the remaining minor.
        let mut best = (step, step, 0.0f64);
        for r in step..4 {
            for c in step..4 {
                let mag = m[r][c].magnitude();
                if mag > best.2 {
                    best = (r, c, mag);
                }
            }
        }
        let (pr, pc, _) = best;
        let negligible = if T::EXACT {
            m[pr][pc].is_zero()
        } else {
            m[pr][pc].magnitude() <= tol * scale.max(f64::MIN_POSITIVE)
        };
        if negligible {
            break;
        }
        m.swap(step, pr);
        for r in 0..4 {
            m[r].swap(step, pc);
        }
        rank += 1;
        for r in (step + 1)..4 {
            let factor = m[r][step].clone() / m[step][step].clone();
            for c in step..4 {
                m[r][c] = m[r][c].clone() - factor.clone() * m[step][c].clone();
            }
        }
    }
    rank
}

/// Full tetrahedron diagnosis of one state.
#[derive(Clone, Debug)]
pub struct TetrahedronReport<T: Scalar> {
    /// Rank of the point matrix (columns `A, B, C, D`).
    pub point_rank: usize,
    pub i4: T,
    /// `|I4|` below tolerance at the state's scale: the tetrahedron has
    /// collapsed (equivalently `point_rank <= 3`).
    pub degenerate: bool,
    /// Edge lines whose Plücker bivector vanishes.
    pub vanishing_lines: Vec<LineLabel>,
    /// Face planes whose dual point vanishes.
    pub vanishing_planes: Vec<PlaneLabel>,
    /// `incidence[i][j]`: edges `i` and `j` intersect (their bracket
    /// vanishes). Diagonal entries are always true.
    pub incidence: [[bool; 6]; 6],
}

impl<T: Scalar> TetrahedronReport<T> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "point_rank": self.point_rank,
            "I4": self.i4.to_json(),
            "degenerate": self.degenerate,
            "vanishing_lines": self.vanishing_lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "vanishing_planes": self.vanishing_planes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "incidence": self.incidence,
        })
    }
}

/// Computes the tetrahedron report at relative tolerance `tol`
/// (ignored in exact mode, where every test is an exact zero test).
pub fn tetrahedron_report<T: Scalar>(state: &FourQubitState<T>, tol: f64) -> TetrahedronReport<T> {
    let cols = state.columns();
    let col_norms: [f64; 4] = std::array::from_fn(|i| cols[i].euclid_norm());
    let pluecker = pluecker_set(state);
    let duals = dual_points(&cols);
    let ns = state.norm_sqr();

    let vanishing_lines: Vec<LineLabel> = LineLabel::ALL
        .iter()
        .copied()
        .filter(|label| {
            let (a, b) = label.points();
            let scale = col_norms[a] * col_norms[b];
            pluecker
                .line(*label)
                .c
                .iter()
                .all(|v| is_negligible(v, tol, scale))
        })
        .collect();

    let vanishing_planes: Vec<PlaneLabel> = PlaneLabel::ALL
        .iter()
        .copied()
        .filter(|label| {
            let (a, b, c) = label.points();
            let scale = col_norms[a] * col_norms[b] * col_norms[c];
            duals[label.index()]
                .0
                .iter()
                .all(|v| is_negligible(v, tol, scale))
        })
        .collect();

    let line_scales: [f64; 6] = std::array::from_fn(|i| {
        let (a, b) = LineLabel::ALL[i].points();
        col_norms[a] * col_norms[b]
    });
    let mut incidence = [[false; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let br = bracket(&pluecker.lines[i], &pluecker.lines[j]);
            incidence[i][j] = is_negligible(&br, tol, line_scales[i] * line_scales[j]);
        }
    }

    let i4 = invariant_i4(state);
    let degenerate = is_negligible(&i4, tol, ns * ns);
    TetrahedronReport {
        point_rank: point_rank(state, tol),
        i4,
        degenerate,
        vanishing_lines,
        vanishing_planes,
        incidence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::g_state;
    use crate::scalar::GaussianRational;
    use num_complex::Complex64;

    fn cf(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn product_state_collapses_to_a_point() {
        let state = FourQubitState::<Complex64>::basis(0);
        let report = tetrahedron_report(&state, TETRAHEDRON_RTOL);
        assert_eq!(report.point_rank, 1);
        assert!(report.degenerate);
        assert_eq!(report.vanishing_lines.len(), 6);
        assert_eq!(report.vanishing_planes.len(), 4);
    }

    #[test]
    fn generic_state_is_a_full_tetrahedron() {
        let state = g_state(&[cf(1.0), cf(2.0), cf(3.0), cf(4.0)]);
        let report = tetrahedron_report(&state, TETRAHEDRON_RTOL);
        assert_eq!(report.point_rank, 4);
        assert!(!report.degenerate);
        assert!(report.vanishing_lines.is_empty());
        assert!(report.vanishing_planes.is_empty());
        // Edges sharing a vertex always intersect; opposite edges of a
        // non-degenerate tetrahedron do not.
        assert!(report.incidence[LineLabel::AB.index()][LineLabel::AC.index()]);
        assert!(!report.incidence[LineLabel::AB.index()][LineLabel::CD.index()]);
        assert!(!report.incidence[LineLabel::AC.index()][LineLabel::BD.index()]);
        assert!(!report.incidence[LineLabel::AD.index()][LineLabel::BC.index()]);
    }

    #[test]
    fn ghz_type_state_keeps_only_the_ad_edge() {
        // a = d = 1, b = c = 0: columns B and C vanish.
        let state = g_state(&[cf(1.0), cf(0.0), cf(0.0), cf(1.0)]);
        let report = tetrahedron_report(&state, TETRAHEDRON_RTOL);
        assert_eq!(report.point_rank, 2);
        assert!(report.degenerate);
        let expected = [
            LineLabel::AB,
            LineLabel::AC,
            LineLabel::BC,
            LineLabel::BD,
            LineLabel::CD,
        ];
        assert_eq!(report.vanishing_lines, expected);
        assert!(!report.vanishing_lines.contains(&LineLabel::AD));
    }

    #[test]
    fn exact_mode_rank_and_degeneracy_agree() {
        let params = [
            GaussianRational::from_int(1),
            GaussianRational::from_int(2),
            GaussianRational::from_int(3),
            GaussianRational::from_int(4),
        ];
        let report = tetrahedron_report(&g_state(&params), 0.0);
        assert_eq!(report.point_rank, 4);
        assert!(!report.degenerate);

        // b = c collapses I4? No: I4 = abcd stays nonzero; instead kill a column.
        let degenerate = g_state(&[
            GaussianRational::from_int(1),
            GaussianRational::from_int(0),
            GaussianRational::from_int(0),
            GaussianRational::from_int(1),
        ]);
        let report = tetrahedron_report(&degenerate, 0.0);
        assert_eq!(report.point_rank, 2);
        assert!(report.degenerate);
    }

    #[test]
    fn degenerate_flag_tracks_rank_deficiency() {
        for seed in 0..20u64 {
            let state = crate::state::random_state(seed, true);
            let report = tetrahedron_report(&state, TETRAHEDRON_RTOL);
            assert_eq!(report.degenerate, report.point_rank <= 3, "seed {seed}");
        }
    }
}
