//! Centered forms: certified range enclosures with higher-order convergence.
//!
//! A *centered form* encloses the range of `f` over a square box `B` with
//! midpoint `m` and radius `r` as
//!
//! ```text
//! range(principal part over B)  +  [-1, 1] * (remainder bound)
//! ```
//!
//! where the principal part is a low-degree polynomial whose range the
//! kernels in [`crate::exact_range`] compute exactly, and the remainder
//! bound collects derivative magnitudes weighted by powers of `r`. As the
//! box shrinks, the enclosure's Hausdorff distance to the true range decays
//! like `r^m` — the *order* `m` of the form:
//!
//! | form | order | principal part | evaluations |
//! |---|---|---|---|
//! | [`taylor_form`] | 2–4 | Taylor polynomial `T_{m-1}` at `m` | derivatives at the midpoint |
//! | [`lagrange_form`] | 3 | biquadratic interpolants | derivatives at a 3 x 3 node grid |
//! | [`hermite_form`] | 4 | bicubic Hermite interpolants | derivative quadruples at the 4 corners |
//!
//! Each form takes a *level* `n` controlling how many cascade terms are
//! bounded through exact midpoint/node data before the final terms fall
//! back to interval evaluation of derivatives over `B`. The `*_maximal`
//! variants pick the level at which those interval-evaluated tails vanish
//! identically (every derivative involved is beyond the polynomial's
//! degree), so the enclosure uses no interval arithmetic at all — the
//! practically preferred configuration.
//!
//! The node-based forms accept an optional [`GridCache`] so that node
//! values shared between adjacent cells of a regular grid are computed
//! once; cached and uncached evaluation agree bit-for-bit.
//!
//! Boxes must be square to a relative tolerance
//! ([`crate::interval::SQUARE_RTOL`]): the theory ties all radii to one
//! scalar `r`. Rectangular domains are handled upstream by subdividing into
//! square cells.

mod cache;
mod delannoy;
mod hermite;
mod lagrange;
mod taylor;
#[cfg(test)]
pub(crate) mod testutil;

pub use cache::GridCache;
pub use delannoy::delannoy;
pub use hermite::{hermite_form, hermite_form_maximal};
pub use lagrange::{lagrange_form, lagrange_form_maximal};
pub use taylor::{taylor_form, taylor_form_maximal};

pub use crate::poly::CachedPoly;

use crate::exact_range::KernelError;
use crate::interval::{Box2, Interval};
use thiserror::Error;

/// Highest supported cascade level (residual weights and factorials stay
/// exactly representable far beyond any level that is useful in practice).
pub const MAX_LEVEL: u32 = 32;

/// Error from evaluating a centered form.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormError {
    /// The box's radii differ by more than the square tolerance.
    #[error("box is not square: radii ({rx}, {ry})")]
    NonSquareBox {
        /// Radius in x.
        rx: f64,
        /// Radius in y.
        ry: f64,
    },
    /// The box has zero width in some direction.
    #[error("box is degenerate: radii ({rx}, {ry})")]
    DegenerateBox {
        /// Radius in x.
        rx: f64,
        /// Radius in y.
        ry: f64,
    },
    /// Unsupported Taylor order (supported: 1 through 4).
    #[error("unsupported order {order}: Taylor forms support orders 1-4")]
    InvalidOrder {
        /// The requested order.
        order: u32,
    },
    /// The level is too low for the requested order (Taylor needs `n >= m`,
    /// the node forms need `n >= 1`).
    #[error("level {level} is too low for order {order}")]
    LevelTooLow {
        /// The requested order.
        order: u32,
        /// The requested level.
        level: u32,
    },
    /// The level exceeds [`MAX_LEVEL`].
    #[error("level {level} exceeds the supported maximum {max}")]
    LevelTooHigh {
        /// The requested level.
        level: u32,
        /// The supported maximum.
        max: u32,
    },
    /// A range kernel rejected its input.
    #[error("range kernel error: {0}")]
    Kernel(#[from] KernelError),
}

/// Which enclosure to evaluate — the dispatch used by benchmarks and the
/// command-line tool. `level: None` selects the maximal variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// Plain interval evaluation of `f` over the box.
    NaturalExtension,
    /// Taylor form of the given order (1-4).
    Taylor {
        /// Convergence order `m`.
        order: u32,
        /// Cascade level, or `None` for maximal.
        level: Option<u32>,
    },
    /// Recursive Lagrange form (order 3).
    Lagrange {
        /// Cascade level, or `None` for maximal.
        level: Option<u32>,
    },
    /// Recursive Hermite form (order 4).
    Hermite {
        /// Cascade level, or `None` for maximal.
        level: Option<u32>,
    },
}

/// Evaluates one enclosure of `f` over `b`.
///
/// The cache is consulted by the node-based forms only; passing one never
/// changes any output bit, it only avoids recomputing shared node values.
pub fn evaluate(
    kind: FormKind,
    f: &CachedPoly,
    b: &Box2,
    cache: Option<&GridCache>,
) -> Result<Interval, FormError> {
    match kind {
        FormKind::NaturalExtension => Ok(f.base().natural_extension(b)),
        FormKind::Taylor { order, level } => match level {
            Some(n) => taylor_form(f, b, order, n),
            None => taylor_form_maximal(f, b, order),
        },
        FormKind::Lagrange { level } => match level {
            Some(n) => lagrange_form(f, b, n, cache),
            None => lagrange_form_maximal(f, b, cache),
        },
        FormKind::Hermite { level } => match level {
            Some(n) => hermite_form(f, b, n, cache),
            None => hermite_form_maximal(f, b, cache),
        },
    }
}

/// A validated square box in the centered coordinates the forms work in.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SquareBox {
    /// Midpoint.
    pub mx: f64,
    pub my: f64,
    /// Per-axis enclosure radii: the larger side of the (floating-point)
    /// midpoint split, so `[mx - rx, mx + rx] x [my - ry, my + ry]` covers
    /// the box.
    pub rx: f64,
    pub ry: f64,
    /// Scalar radius for remainder powers: `max(rx, ry)`.
    pub r: f64,
}

impl SquareBox {
    /// The enclosing box `[mx - rx, mx + rx] x [my - ry, my + ry]`, used
    /// when a cascade tail falls back to interval evaluation.
    pub(crate) fn as_box(&self) -> Box2 {
        Box2::from_endpoints(
            self.mx - self.rx,
            self.mx + self.rx,
            self.my - self.ry,
            self.my + self.ry,
        )
        .expect("radii of a validated box are positive and finite")
    }
}

pub(crate) fn check_square(b: &Box2) -> Result<SquareBox, FormError> {
    let (rx0, ry0) = b.radii();
    if !(rx0 > 0.0 && ry0 > 0.0) {
        return Err(FormError::DegenerateBox { rx: rx0, ry: ry0 });
    }
    if !b.is_square() {
        return Err(FormError::NonSquareBox { rx: rx0, ry: ry0 });
    }
    let (mx, my) = b.midpoint();
    let rx = (mx - b.x().lo()).max(b.x().hi() - mx);
    let ry = (my - b.y().lo()).max(b.y().hi() - my);
    Ok(SquareBox {
        mx,
        my,
        rx,
        ry,
        r: rx.max(ry),
    })
}
