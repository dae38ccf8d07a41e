//! Exact ranges of univariate polynomials of degree ≤ 3 over `[-r, r]`.
//!
//! Coefficients are centered: `c[k]` multiplies `X^k` with `X = x - m`, so
//! the domain is always the symmetric interval `[-r, r]`. The range of a
//! polynomial does not depend on the midpoint `m`, which therefore never
//! appears in these signatures.
//!
//! Each kernel hulls the two endpoint values (by Horner evaluation, so a
//! degenerate higher-degree input reproduces the lower-degree kernel
//! bit-for-bit) and then adds the values of stationary points that lie
//! *strictly* inside the interval. Strictness keeps endpoint extrema from
//! being counted twice with slightly different rounding.

use crate::interval::Interval;

/// Horner evaluation of ascending centered coefficients.
fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

/// Range of `c0 + c1 X` over `X in [-r, r]`: the hull of the endpoints.
pub fn range_uni_linear(c: [f64; 2], r: f64) -> Interval {
    Interval::spanning(horner(&c, -r), horner(&c, r))
}

/// Range of `c0 + c1 X + c2 X^2` over `[-r, r]`.
///
/// Endpoints plus, when the vertex `X* = -c1/(2 c2)` is strictly interior
/// (`|c1| < 2 |c2| r`), the closed-form vertex value `c0 - c1^2/(4 c2)`.
/// With `c2 = 0` the vertex test is vacuous and the result matches
/// [`range_uni_linear`] exactly.
pub fn range_uni_quadratic(c: [f64; 3], r: f64) -> Interval {
    let mut out = Interval::spanning(horner(&c, -r), horner(&c, r));
    if c[1].abs() < 2.0 * c[2].abs() * r {
        out = out.hull_point(c[0] - c[1] * c[1] / (4.0 * c[2]));
    }
    out
}

/// Range of `c0 + c1 X + c2 X^2 + c3 X^3` over `[-r, r]`.
///
/// A leading coefficient negligible relative to the largest coefficient
/// (relative threshold `1e-14`) dispatches to [`range_uni_quadratic`].
/// Otherwise the stationary points solve `3 c3 X^2 + 2 c2 X + c1 = 0`,
/// which has real solutions exactly when `D = c2^2 - 3 c1 c3 > 0`:
/// `X = -(c2 ± sqrt(D)) / (3 c3)`. Both stationary values are hulled when
/// strictly interior — no minimum/maximum classification is needed, since
/// hulling an attained value can only ever be exact, never unsound.
pub fn range_uni_cubic(c: [f64; 4], r: f64) -> Interval {
    let scale = c.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    if c[3].abs() <= 1e-14 * scale {
        return range_uni_quadratic([c[0], c[1], c[2]], r);
    }
    let mut out = Interval::spanning(horner(&c, -r), horner(&c, r));
    let d = c[2] * c[2] - 3.0 * c[1] * c[3];
    if d > 0.0 {
        let sq = d.sqrt();
        // Pair the roots to avoid cancellation: the larger-magnitude root
        // first, the other via Vieta (X+ X- = c1 / (3 c3)).
        let sgn = if c[2] >= 0.0 { 1.0 } else { -1.0 };
        let big = -(c[2] + sgn * sq) / (3.0 * c[3]);
        let other = if big != 0.0 {
            c[1] / (3.0 * c[3] * big)
        } else {
            // c2 = 0 and D = -3 c1 c3 > 0: symmetric pair.
            sq / (3.0 * c[3])
        };
        for x in [big, other] {
            if x.abs() < r {
                out = out.hull_point(horner(&c, x));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Box2;
    use crate::oracle::oracle_range;
    use crate::poly::Poly2;
    use proptest::prelude::*;

    /// Expands centered univariate coefficients into a `Poly2` in `x` around
    /// midpoint `m`, for oracle cross-checks on the box `[m-r, m+r] x {0}`.
    fn embed(c: &[f64], m: f64) -> Poly2 {
        let shift = Poly2::from_monomials(&[(1, 0, 1.0), (0, 0, -m)]);
        let mut pow = Poly2::constant(1.0);
        let mut out = Poly2::zero();
        for &ck in c {
            out = &out + &pow.scale(ck);
            pow = &pow * &shift;
        }
        out
    }

    fn oracle_interval(c: &[f64], m: f64, r: f64) -> Interval {
        let p = embed(c, m);
        let b = Box2::from_endpoints(m - r, m + r, 0.0, 0.0).unwrap();
        oracle_range(&p, &b, 1e-12).range
    }

    #[test]
    fn linear_is_exact() {
        let got = range_uni_linear([1.0, -2.0], 0.5);
        assert_eq!(got.lo(), 0.0);
        assert_eq!(got.hi(), 2.0);
    }

    #[test]
    fn quadratic_interior_vertex() {
        // X^2 - X on [-1, 1]: endpoints 2 and 0, vertex at 1/2 gives -1/4.
        let got = range_uni_quadratic([0.0, -1.0, 1.0], 1.0);
        assert_eq!(got.lo(), -0.25);
        assert_eq!(got.hi(), 2.0);
    }

    #[test]
    fn quadratic_vertex_outside_is_ignored() {
        // X^2 - 10 X on [-1, 1]: vertex at 5 lies outside, montone branch.
        let got = range_uni_quadratic([0.0, -10.0, 1.0], 1.0);
        assert_eq!(got.lo(), -9.0);
        assert_eq!(got.hi(), 11.0);
    }

    #[test]
    fn quadratic_boundary_vertex_matches_endpoint() {
        // Vertex exactly at an endpoint: |c1| == 2 |c2| r, strict test
        // excludes it, and the endpoint value already covers it.
        let got = range_uni_quadratic([0.0, 2.0, 1.0], 1.0);
        assert_eq!(got.lo(), -1.0);
        assert_eq!(got.hi(), 3.0);
    }

    #[test]
    fn cubic_classic_stationary_points() {
        // X^3 - 3 X on [-2, 2]: stationary at +-1 with values -+2;
        // endpoints give the same +-2, so the range is exactly [-2, 2].
        let got = range_uni_cubic([0.0, -3.0, 0.0, 1.0], 2.0);
        assert_eq!(got.lo(), -2.0);
        assert_eq!(got.hi(), 2.0);
        // On [-2, 0.5] the maximum is interior at X = -1.
        let p = embed(&[0.0, -3.0, 0.0, 1.0], 0.0);
        let b = Box2::from_endpoints(-2.0, 0.5, 0.0, 0.0).unwrap();
        let narrow = oracle_range(&p, &b, 1e-12).range;
        assert!((narrow.hi() - 2.0).abs() <= 1e-9);
    }

    #[test]
    fn cubic_monotone_when_discriminant_negative() {
        // X^3 + 3 X: D = 0 - 9 < 0, strictly increasing.
        let got = range_uni_cubic([0.0, 3.0, 0.0, 1.0], 1.0);
        assert_eq!(got.lo(), -4.0);
        assert_eq!(got.hi(), 4.0);
    }

    #[test]
    fn cubic_degenerate_dispatch_is_bit_identical() {
        let c2 = [0.7, -1.3, 0.9];
        let quad = range_uni_quadratic(c2, 1.25);
        let as_cubic = range_uni_cubic([0.7, -1.3, 0.9, 0.0], 1.25);
        assert_eq!(quad.lo().to_bits(), as_cubic.lo().to_bits());
        assert_eq!(quad.hi().to_bits(), as_cubic.hi().to_bits());
        // A relatively negligible c3 dispatches too.
        let fuzzy = range_uni_cubic([0.7, -1.3, 0.9, 1e-16], 1.25);
        assert_eq!(quad.lo().to_bits(), fuzzy.lo().to_bits());
    }

    #[test]
    fn quadratic_degenerate_dispatch_is_bit_identical() {
        let lin = range_uni_linear([0.3, -2.7], 0.8);
        let as_quad = range_uni_quadratic([0.3, -2.7, 0.0], 0.8);
        assert_eq!(lin.lo().to_bits(), as_quad.lo().to_bits());
        assert_eq!(lin.hi().to_bits(), as_quad.hi().to_bits());
    }

    #[test]
    fn zero_radius_gives_point_value() {
        let got = range_uni_cubic([2.5, 1.0, -3.0, 4.0], 0.0);
        assert_eq!(got.lo(), 2.5);
        assert_eq!(got.hi(), 2.5);
    }

    proptest! {
        /// Quadratic kernel vs the subdivision oracle: exact to ~1e-12
        /// relative on random coefficients.
        #[test]
        fn quadratic_matches_oracle(
            c in proptest::array::uniform3(-5.0f64..5.0),
            r in 0.1f64..3.0,
        ) {
            let got = range_uni_quadratic(c, r);
            let want = oracle_interval(&c, 0.0, r);
            let scale = 1.0 + got.magnitude();
            prop_assert!((got.lo() - want.lo()).abs() <= 1e-9 * scale,
                "{got} vs {want}");
            prop_assert!((got.hi() - want.hi()).abs() <= 1e-9 * scale,
                "{got} vs {want}");
        }

        /// Cubic kernel vs the subdivision oracle.
        #[test]
        fn cubic_matches_oracle(
            c in proptest::array::uniform4(-5.0f64..5.0),
            r in 0.1f64..3.0,
        ) {
            let got = range_uni_cubic(c, r);
            let want = oracle_interval(&c, 0.0, r);
            let scale = 1.0 + got.magnitude();
            prop_assert!((got.lo() - want.lo()).abs() <= 1e-9 * scale,
                "{got} vs {want}");
            prop_assert!((got.hi() - want.hi()).abs() <= 1e-9 * scale,
                "{got} vs {want}");
        }

        /// Sampling can never escape the computed range (soundness without
        /// reference to the oracle).
        #[test]
        fn cubic_encloses_samples(
            c in proptest::array::uniform4(-5.0f64..5.0),
            r in 0.01f64..3.0,
        ) {
            let got = range_uni_cubic(c, r);
            for k in 0..=64 {
                let x = -r + 2.0 * r * k as f64 / 64.0;
                let v = horner(&c, x);
                prop_assert!(v >= got.lo() - 1e-10 * (1.0 + v.abs()));
                prop_assert!(v <= got.hi() + 1e-10 * (1.0 + v.abs()));
            }
        }
    }
}
