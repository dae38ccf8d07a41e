//! Shared strategies and checks for the form tests.

use crate::interval::{Box2, Interval};
use crate::poly::{CachedPoly, Poly2};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Random sparse polynomials with powers up to 4 per variable.
pub(crate) fn poly_strategy() -> impl Strategy<Value = Poly2> {
    proptest::collection::vec((0u32..=4, 0u32..=4, -3.0..3.0f64), 1..=8)
        .prop_map(|ms| Poly2::from_monomials(&ms))
}

/// Random square boxes with centers in [-2, 2]^2 and radii in [0.05, 1.5].
pub(crate) fn square_box_strategy() -> impl Strategy<Value = Box2> {
    (-2.0..2.0f64, -2.0..2.0f64, 0.05..1.5f64)
        .prop_map(|(cx, cy, r)| Box2::square((cx, cy), r).unwrap())
}

/// Asserts that the enclosure contains `f` sampled on a dense grid over
/// `b`, up to a small relative slack for the plain floating-point
/// evaluation of the bound itself.
pub(crate) fn assert_contains_samples(
    enclosure: &Interval,
    f: &CachedPoly,
    b: &Box2,
) -> Result<(), TestCaseError> {
    let n = 12;
    let tol = 1e-9 * (1.0 + enclosure.magnitude());
    for i in 0..=n {
        for j in 0..=n {
            let x = b.x().lo() + b.x().width() * (i as f64) / (n as f64);
            let y = b.y().lo() + b.y().width() * (j as f64) / (n as f64);
            let v = f.base().eval(x, y);
            prop_assert!(
                v >= enclosure.lo() - tol && v <= enclosure.hi() + tol,
                "f({}, {}) = {} escapes {}",
                x,
                y,
                v,
                enclosure
            );
        }
    }
    Ok(())
}
