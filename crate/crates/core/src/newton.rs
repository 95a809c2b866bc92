//! Newton polygons over the p-adic valuations of the rationals, and the 2-adic
//! separability criterion for the critical-orbit polynomials `t_i`.
//!
//! Slope convention: a segment of slope `s` and horizontal length `L` accounts for
//! exactly `L` roots (with multiplicity) of p-adic valuation `-s`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{Rat, ValP};
use crate::dynamics::t_poly;
use crate::error::{check_range, Error, Result};
use crate::poly::{gcd_monic, QPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Segment {
    pub slope: Rat,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NewtonPolygon {
    /// Hull vertices `(i, v_p(a_i))`, left to right.
    pub vertices: Vec<(usize, ValP)>,
    /// Strictly increasing slopes.
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// `(slope, length)` pairs, mostly for comparisons in tests.
    pub fn profile(&self) -> Vec<(Rat, usize)> {
        self.segments.iter().map(|s| (s.slope.clone(), s.length)).collect()
    }

    /// Number of roots of valuation `v` certified by the polygon.
    pub fn roots_with_valuation(&self, v: &Rat) -> usize {
        let s = -v;
        self.segments.iter().find(|seg| seg.slope == s).map_or(0, |seg| seg.length)
    }
}

/// Lower convex hull of `{(i, v_p(a_i)) : a_i != 0}`.
pub fn newton_polygon(f: &QPoly, p: &BigInt) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut points: Vec<(i128, i128)> = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if let ValP::Finite(v) = c.vp(p)? {
            points.push((i as i128, v as i128));
        }
    }
    let mut hull: Vec<(i128, i128)> = Vec::with_capacity(points.len());
    for pt in points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // Drop b unless it lies strictly below the chord a -> pt.
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            Segment { slope: Rat::frac(dy as i64, dx as i64), length: dx as usize }
        })
        .collect();
    let vertices = hull.iter().map(|&(i, v)| (i as usize, ValP::Finite(v as i64))).collect();
    Ok(NewtonPolygon { vertices, segments })
}

/// Outcome of the 2-adic test on `gamma`: it fails exactly when
/// `v_2(gamma) = -e * 2^j` for some `j >= 1`, where `e = v_2(2) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriterionVerdict {
    pub gamma: Rat,
    pub e: u32,
    pub s: ValP,
    pub passes: bool,
    pub failing_j: Option<u32>,
}

/// When it passes, every `t_i` is separable over the rationals.
pub fn separability_criterion(gamma: &Rat) -> CriterionVerdict {
    let s = gamma.vp(&BigInt::from(2)).expect("2 is prime");
    let e = 1u32;
    let failing_j = match s {
        ValP::Finite(v) if v < 0 => {
            let k = v.unsigned_abs() / e as u64;
            let exact = v.unsigned_abs() % e as u64 == 0;
            (exact && k >= 2 && k.is_power_of_two()).then(|| k.trailing_zeros())
        }
        _ => None,
    };
    CriterionVerdict { gamma: gamma.clone(), e, s, passes: failing_j.is_none(), failing_j }
}

/// `(i, gcd(t_i, t_i') = 1)` for `i = 1..=i_max`, `i_max <= 8`.
pub fn separability_oracle(gamma: &Rat, i_max: usize) -> Result<Vec<(usize, bool)>> {
    check_range("i_max", i_max as u64, 1, 8)?;
    (1..=i_max)
        .map(|i| {
            let t = t_poly(gamma, i)?;
            let g = gcd_monic(&t, &t.derivative())?;
            Ok((i, g.deg() == 0))
        })
        .collect()
}

/// Newton polygon of `t_i'` at 2, for integral `gamma` and `2 <= i <= 7`.
/// Expected shape: slope `1/2^r` with length `2^r` for `r = i-2, ..., 0`.
pub fn derivative_slope_profile(gamma: &Rat, i: usize) -> Result<NewtonPolygon> {
    check_range("i", i as u64, 2, 7)?;
    if gamma.vp(&BigInt::from(2))? < ValP::Finite(0) {
        return Err(Error::Precondition("gamma must have nonnegative 2-adic valuation"));
    }
    newton_polygon(&t_poly(gamma, i)?.derivative(), &BigInt::from(2))
}

/// The profile `[(1/2^r, 2^r)]` for `r = i-2` down to `0`.
pub fn expected_derivative_profile(i: usize) -> Vec<(Rat, usize)> {
    (0..i.saturating_sub(1))
        .rev()
        .map(|r| (Rat::frac(1, 1i64 << r), 1usize << r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::q;
    use proptest::prelude::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn two() -> BigInt {
        BigInt::from(2)
    }

    /// Quadratic-time hull: a point is a vertex iff no chord between other
    /// points passes strictly below it, and endpoints always are.
    fn brute_vertices(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (k, &(x, y)) in points.iter().enumerate() {
            let mut keep = k == 0 || k + 1 == points.len();
            if !keep {
                keep = true;
                for &(x1, y1) in &points[..k] {
                    for &(x2, y2) in &points[k + 1..] {
                        // (x, y) on or above the chord => not a strict vertex.
                        if (y - y1) * (x2 - x1) >= (y2 - y1) * (x - x1) {
                            keep = false;
                        }
                    }
                }
            }
            if keep {
                out.push((x, y));
            }
        }
        out
    }

    #[test]
    fn polygon_examples() {
        let np = newton_polygon(&q("1,2,6,4"), &two()).unwrap();
        assert_eq!(np.profile(), alloc::vec![(r("1/2"), 2), (r("1"), 1)]);
        let np = newton_polygon(&q("4,1"), &two()).unwrap();
        assert_eq!(np.profile(), alloc::vec![(r("-2"), 1)]);
        assert_eq!(np.roots_with_valuation(&r("2")), 1);
        let np = newton_polygon(&q("1,2"), &two()).unwrap();
        assert_eq!(np.profile(), alloc::vec![(r("1"), 1)]);
        assert_eq!(newton_polygon(&QPoly::zero(), &two()), Err(Error::ZeroPolynomial));
        assert_eq!(newton_polygon(&q("1,1"), &BigInt::from(4)), Err(Error::NotPrime));
    }

    #[test]
    fn polygon_skips_zero_coefficients() {
        // x^4 + 8: single segment of slope -3/4.
        let np = newton_polygon(&q("8,0,0,0,1"), &two()).unwrap();
        assert_eq!(np.profile(), alloc::vec![(r("-3/4"), 4)]);
        assert_eq!(np.vertices, alloc::vec![(0, ValP::Finite(3)), (4, ValP::Finite(0))]);
        let np = newton_polygon(&q("0,0,3"), &BigInt::from(3)).unwrap();
        assert!(np.segments.is_empty());
    }

    #[test]
    fn criterion_examples() {
        let v = separability_criterion(&r("1/4"));
        assert_eq!((v.s, v.passes, v.failing_j), (ValP::Finite(-2), false, Some(1)));
        let v = separability_criterion(&r("1/2"));
        assert!(v.passes && v.failing_j.is_none());
        let v = separability_criterion(&r("0"));
        assert_eq!((v.s, v.passes), (ValP::Infinite, true));
        assert_eq!(separability_criterion(&r("3/256")).failing_j, Some(3));
        assert!(separability_criterion(&r("1/64")).passes);
        assert!(separability_criterion(&r("12")).passes);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(separability_oracle(&r("1/4"), 2).unwrap(), alloc::vec![(1, true), (2, false)]);
        assert!(separability_oracle(&r("0"), 4).unwrap().iter().all(|x| x.1));
        assert_eq!(separability_oracle(&r("1"), 1).unwrap(), alloc::vec![(1, true)]);
        assert!(separability_oracle(&r("1"), 9).is_err());
        assert!(separability_oracle(&r("1"), 0).is_err());
    }

    #[test]
    fn profile_examples() {
        assert_eq!(derivative_slope_profile(&r("0"), 3).unwrap().profile(), alloc::vec![(r("1/2"), 2), (r("1"), 1)]);
        assert_eq!(derivative_slope_profile(&r("0"), 2).unwrap().profile(), alloc::vec![(r("1"), 1)]);
        assert_eq!(
            derivative_slope_profile(&r("1"), 4).unwrap().profile(),
            alloc::vec![(r("1/4"), 4), (r("1/2"), 2), (r("1"), 1)]
        );
        assert!(derivative_slope_profile(&r("1/2"), 3).is_err());
        assert!(derivative_slope_profile(&r("0"), 8).is_err());
        assert!(derivative_slope_profile(&r("0"), 1).is_err());
    }

    #[test]
    fn slope_profile_law() {
        for gamma in ["0", "1", "2", "3"] {
            for i in 2..=6 {
                let np = derivative_slope_profile(&r(gamma), i).unwrap();
                assert_eq!(np.profile(), expected_derivative_profile(i), "gamma {gamma}, i {i}");
            }
        }
    }

    #[test]
    fn criterion_implies_separable_on_grid() {
        for k in -40i64..=40 {
            let gamma = Rat::frac(k, 4);
            if separability_criterion(&gamma).passes {
                let res = separability_oracle(&gamma, 6).unwrap();
                assert!(res.iter().all(|x| x.1), "gamma {gamma}");
            }
        }
    }

    #[test]
    fn single_segment_for_negative_valuation() {
        for gamma in ["1/2", "3/2", "-5/8", "7/32", "1/8"] {
            let gamma = r(gamma);
            let v = separability_criterion(&gamma);
            let s = v.s.finite().unwrap();
            if !v.passes {
                continue;
            }
            for i in 1..=6 {
                let np = newton_polygon(&t_poly(&gamma, i).unwrap(), &two()).unwrap();
                let top = 1usize << (i - 1);
                assert_eq!(np.vertices, alloc::vec![(0, ValP::Finite(s)), (top, ValP::Finite(0))]);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn hull_lies_below_points(coeffs in proptest::collection::vec(-64i64..64, 1..12), p in prop::sample::select(alloc::vec![2i64, 3, 5])) {
            let mut coeffs = coeffs;
            if coeffs.iter().all(|&c| c == 0) {
                coeffs.push(1);
            }
            let f = QPoly::from_i64s(&coeffs);
            prop_assume!(!f.is_zero());
            let p = BigInt::from(p);
            let np = newton_polygon(&f, &p).unwrap();
            let pts: Vec<(i64, i64)> = f.coeffs().iter().enumerate()
                .filter_map(|(i, c)| c.vp(&p).unwrap().finite().map(|v| (i as i64, v)))
                .collect();
            let verts: Vec<(i64, i64)> = np.vertices.iter().map(|(i, v)| (*i as i64, v.finite().unwrap())).collect();
            prop_assert_eq!(&verts, &brute_vertices(&pts));
            for w in np.segments.windows(2) {
                prop_assert!(w[0].slope < w[1].slope);
            }
            let total: usize = np.segments.iter().map(|s| s.length).sum();
            prop_assert_eq!(total as i64, pts.last().unwrap().0 - pts[0].0);
            for seg in verts.windows(2) {
                let ((x1, y1), (x2, y2)) = (seg[0], seg[1]);
                for &(x, y) in &pts {
                    prop_assert!((y - y1) * (x2 - x1) >= (y2 - y1) * (x - x1));
                }
            }
        }
    }
}
