//! Exact ranges of low-degree polynomials over intervals and boxes.
//!
//! The centered forms in [`crate::forms`] owe their convergence orders to one
//! structural trick: the low-degree *principal part* of an expansion is not
//! enclosed by interval arithmetic but computed **exactly** (to rounding),
//! via closed-form calculus. This module implements those kernels, in local
//! centered coordinates `X = x - m_x`, `Y = y - m_y` over `[-r_x, r_x] x
//! [-r_y, r_y]`:
//!
//! | kernel | input | method |
//! |---|---|---|
//! | [`range_uni_linear`] | `c0 + c1 X` | endpoint evaluation |
//! | [`range_uni_quadratic`] | degree ≤ 2 | endpoints + interior vertex |
//! | [`range_uni_cubic`] | degree ≤ 3 | endpoints + stationary points of the derivative |
//! | [`range_biv_linear`] | total degree ≤ 1 | closed form `c00 ± (r_x\|c10\| + r_y\|c01\|)` |
//! | [`range_biv_quadratic`] | total degree ≤ 2 | corners + 4 edge quadratics + interior critical point |
//! | [`range_biv_cubic`] | total degree ≤ 3 | corners + 4 edge cubics + critical points via a resultant quartic |
//! | [`range_biquadratic`] | powers ≤ 2 per variable | split: quadratic part + residual (boundary-only) |
//! | [`range_bicubic`] | powers ≤ 3 per variable | split: cubic part + residual (boundary + factored resultant) |
//!
//! The biquadratic/bicubic kernels are *not* exact for the full polynomial:
//! they split it as `p = q + s` (total-degree part `q`, mixed-term residual
//! `s`) and return `range(q) + range(s)`, each part exact. This is precisely
//! what the recursive Lagrange/Hermite forms need; [`split_biquadratic`] and
//! [`split_bicubic`] expose the two parts separately.
//!
//! Everything ultimately rests on real root isolation for polynomials of
//! degree ≤ 4, provided by [`solve_quartic`] (Ferrari's method with a
//! resolvent cubic, Newton polishing, and residual filtering). Candidate
//! stationary points are only ever *added* to a hull of values actually
//! attained by the polynomial, so a spurious candidate can never make a
//! kernel unsound — only a missed one could, and the residual filter accepts
//! generously (see `roots`).
//!
//! `X`/`Y` grids are passed as a fixed `[[f64; 4]; 4]` ([`CoeffGrid`]);
//! coefficients outside a kernel's supported index set must be exactly zero
//! or the kernel reports [`KernelError::UnsupportedCoefficients`].

mod bivariate;
mod roots;
mod univariate;

pub use bivariate::{
    range_bicubic, range_biquadratic, range_biv_cubic, range_biv_linear, range_biv_quadratic,
    split_bicubic, split_biquadratic,
};
pub use roots::{solve_quartic, PolyRoots};
pub use univariate::{range_uni_cubic, range_uni_linear, range_uni_quadratic};

use crate::poly::Poly2;
use thiserror::Error;

/// Coefficient grid of a centered bivariate polynomial: `c[i][j]` multiplies
/// `X^i Y^j` where `X = x - m_x`, `Y = y - m_y`.
pub type CoeffGrid = [[f64; 4]; 4];

/// Error from a bivariate range kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    /// A coefficient outside the kernel's supported index set was nonzero.
    #[error("{kernel}: unsupported nonzero coefficient c[{i}][{j}] = {value}")]
    UnsupportedCoefficients {
        /// Kernel that rejected the grid.
        kernel: &'static str,
        /// X-power of the offending coefficient.
        i: usize,
        /// Y-power of the offending coefficient.
        j: usize,
        /// The nonzero value found.
        value: f64,
    },
    /// A coefficient was NaN or infinite.
    #[error("{kernel}: non-finite coefficient c[{i}][{j}] = {value}")]
    NonFiniteCoefficient {
        /// Kernel that rejected the grid.
        kernel: &'static str,
        /// X-power of the offending coefficient.
        i: usize,
        /// Y-power of the offending coefficient.
        j: usize,
        /// The non-finite value found.
        value: f64,
    },
    /// A box radius was zero, negative, or non-finite.
    #[error("invalid box radii ({rx}, {ry}): kernels require finite positive radii")]
    InvalidRadius {
        /// Radius in x.
        rx: f64,
        /// Radius in y.
        ry: f64,
    },
}

/// Evaluates a centered coefficient grid at local coordinates `(x, y)`
/// (Horner in `y` of Horner-in-`x` rows, matching [`Poly2::eval`]).
pub fn eval_centered(c: &CoeffGrid, x: f64, y: f64) -> f64 {
    let mut acc = 0.0;
    for j in (0..4).rev() {
        let mut row = 0.0;
        for i in (0..4).rev() {
            row = row * x + c[i][j];
        }
        acc = acc * y + row;
    }
    acc
}

/// Expands a centered grid into a power-basis [`Poly2`] around `center`.
///
/// The expansion multiplies out `(x - m_x)^i (y - m_y)^j` with polynomial
/// arithmetic, so it introduces the usual rounding of that route; it exists
/// so that kernels can be cross-checked against the subdivision oracle on
/// the same mathematical polynomial.
pub fn centered_to_poly2(c: &CoeffGrid, center: (f64, f64)) -> Poly2 {
    let (mx, my) = center;
    let x_shift = Poly2::from_monomials(&[(1, 0, 1.0), (0, 0, -mx)]);
    let y_shift = Poly2::from_monomials(&[(0, 1, 1.0), (0, 0, -my)]);
    let mut x_pows = vec![Poly2::constant(1.0)];
    let mut y_pows = vec![Poly2::constant(1.0)];
    for k in 1..4 {
        x_pows.push(&x_pows[k - 1] * &x_shift);
        y_pows.push(&y_pows[k - 1] * &y_shift);
    }
    let mut out = Poly2::zero();
    for i in 0..4 {
        for j in 0..4 {
            if c[i][j] != 0.0 {
                out = &out + &(&x_pows[i] * &y_pows[j]).scale(c[i][j]);
            }
        }
    }
    out
}

/// Largest coefficient magnitude of a grid (the scale for relative tests).
pub(crate) fn grid_scale(c: &CoeffGrid) -> f64 {
    let mut s = 0.0f64;
    for row in c {
        for &v in row {
            s = s.max(v.abs());
        }
    }
    s
}

/// Checks radii and coefficient support for a bivariate kernel.
pub(crate) fn validate(
    kernel: &'static str,
    c: &CoeffGrid,
    rx: f64,
    ry: f64,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<(), KernelError> {
    if !(rx > 0.0 && ry > 0.0 && rx.is_finite() && ry.is_finite()) {
        return Err(KernelError::InvalidRadius { rx, ry });
    }
    for (i, row) in c.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if !value.is_finite() {
                return Err(KernelError::NonFiniteCoefficient {
                    kernel,
                    i,
                    j,
                    value,
                });
            }
            if value != 0.0 && !allowed(i, j) {
                return Err(KernelError::UnsupportedCoefficients {
                    kernel,
                    i,
                    j,
                    value,
                });
            }
        }
    }
    Ok(())
}
