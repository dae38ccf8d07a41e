//! Certified range enclosures for bivariate polynomials over axis-aligned boxes.
//!
//! Given a polynomial `f(x, y)` with `f64` coefficients and a box
//! `B = [x_lo, x_hi] x [y_lo, y_hi]`, this crate computes intervals that are
//! guaranteed (up to floating-point rounding; see below) to contain the exact
//! range `f(B) = { f(x, y) : (x, y) in B }`, together with machinery to measure
//! how tight those enclosures are:
//!
//! * [`interval`] — closed-interval arithmetic on `f64` endpoints, plus the
//!   [`Box2`](interval::Box2) type for axis-aligned boxes and the Hausdorff
//!   distance used to quantify overestimation.
//! * [`poly`] — dense power-basis bivariate polynomials: evaluation, partial
//!   derivatives (with a thread-safe derivative cache), natural interval
//!   extension, a small corpus of benchmark curves, and a plain-text monomial
//!   file format.
//! * [`exact_range`] — closed-form *exact* range computations for low-degree
//!   polynomials over intervals and boxes (linear through cubic univariate,
//!   linear/quadratic/cubic and biquadratic/bicubic bivariate), built on a
//!   robust quartic solver.
//! * [`forms`] — the range enclosures themselves: Taylor forms of orders 2–4,
//!   and recursive Lagrange (order 3) / Hermite (order 4) interpolation forms,
//!   each in a fixed-level and a *maximal* (polynomial-exact tail) variant,
//!   with an evaluation cache that lets adjacent grid cells share node values.
//! * [`oracle`] — an adaptive branch-and-bound reference oracle that brackets
//!   the true range to a requested resolution, independently of the forms.
//! * [`bench`] — benchmark drivers: radius sweeps with empirical convergence
//!   orders, grid efficacy/timing runs, log-ratio heatmaps (CSV + PPM), and a
//!   verification report against frozen reference tables.
//!
//! # Orders of convergence
//!
//! For a form `F` and square boxes `B_r` of radius `r` shrinking onto a point,
//! the Hausdorff distance `q(f(B_r), F(B_r))` behaves like `O(r^p)`: the
//! natural extension has `p = 1`, the order-2 Taylor form `p = 2`, the order-3
//! Taylor and recursive Lagrange forms `p = 3`, and the order-4 Taylor and
//! recursive Hermite forms `p = 4`. The benchmark side of the crate exists to
//! demonstrate exactly these rates and the constant-factor trade-offs between
//! the forms.
//!
//! # Rounding model
//!
//! All arithmetic is plain `f64` in round-to-nearest. The enclosures are exact
//! in real arithmetic; no directed rounding is performed, so results carry the
//! usual few-ulp floating-point fuzz. Switching the primitive interval
//! operations to outward rounding would restore full rigor without changing
//! any of the algorithms; the operation set of [`interval::Interval`] is the
//! single extension point for that.
//!
//! # Example
//!
//! ```
//! use rangeforms::interval::Box2;
//! use rangeforms::poly::Poly2;
//! use rangeforms::forms::{taylor_form_maximal, CachedPoly};
//!
//! // f(x, y) = x^2 y - 2 x y + 3, over [0, 1] x [1, 2].
//! let f = Poly2::from_monomials(&[(2, 1, 1.0), (1, 1, -2.0), (0, 0, 3.0)]);
//! let b = Box2::from_endpoints(0.0, 1.0, 1.0, 2.0).unwrap();
//!
//! let cached = CachedPoly::new(f.clone());
//! let enclosure = taylor_form_maximal(&cached, &b, 4).unwrap();
//!
//! // The enclosure contains every sampled value.
//! for i in 0..=10 {
//!     for j in 0..=10 {
//!         let (x, y) = (i as f64 / 10.0, 1.0 + j as f64 / 10.0);
//!         assert!(enclosure.contains(f.eval(x, y)));
//!     }
//! }
//! ```

pub mod bench;
pub mod exact_range;
pub mod forms;
pub mod interval;
pub mod oracle;
pub mod poly;

#[cfg(doctest)]
mod book;
