//! Real roots of polynomials up to degree four.
//!
//! [`solve_quartic`] is the single entry point the range kernels build on.
//! Design constraints, in order of importance:
//!
//! 1. **Never miss a real root.** A missed root can make a range kernel
//!    unsound. Candidates are therefore generated liberally (degenerate
//!    discriminants are treated as double roots, clamps prefer producing a
//!    candidate over dropping one) and then polished and filtered.
//! 2. **Tolerate spurious candidates.** Callers hull polynomial values at
//!    candidate points, so an extra candidate costs a function evaluation,
//!    never correctness. The residual filter only discards candidates whose
//!    polished residual is far from zero relative to the coefficient scale.
//! 3. **Degrade by degree, not by luck.** A leading coefficient that is
//!    negligible relative to the largest coefficient (relative threshold
//!    `1e-14`) dispatches to the next lower degree instead of dividing by
//!    almost-zero.
//!
//! Coefficients are ascending: `c[k]` multiplies `x^k`.

/// Relative threshold below which a leading coefficient is treated as zero.
pub(crate) const DEGENERATE_REL: f64 = 1e-14;

/// Residual acceptance factor: a polished candidate `x` is kept when
/// `|q(x)| <= RESIDUAL_REL * scale * max(1, x^4)` with `scale = max|c_k|`.
const RESIDUAL_REL: f64 = 1e-8;

/// Real roots of a polynomial of degree at most four.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRoots {
    /// Distinct real roots in ascending order (multiplicities collapsed).
    pub roots: Vec<f64>,
    /// True when every coefficient was exactly zero, i.e. the polynomial is
    /// identically zero and "every real number" would be a root. The `roots`
    /// vector is empty in that case.
    pub identically_zero: bool,
}

/// Computes the real roots of `c[0] + c[1] x + c[2] x^2 + c[3] x^3 + c[4] x^4`.
///
/// Uses Ferrari's factorization into two quadratics via the largest real
/// root of the resolvent cubic, with degree-degenerate leading coefficients
/// dispatched to the cubic/quadratic/linear solvers. Every candidate gets
/// one Newton step and must pass a relative residual check.
pub fn solve_quartic(c: [f64; 5]) -> PolyRoots {
    let scale = c.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    if scale == 0.0 {
        return PolyRoots {
            roots: Vec::new(),
            identically_zero: true,
        };
    }
    // Normalize to unit scale: same roots, better-conditioned thresholds.
    let n: Vec<f64> = c.iter().map(|&v| v / scale).collect();
    let candidates = if n[4].abs() <= DEGENERATE_REL {
        if n[3].abs() <= DEGENERATE_REL {
            if n[2].abs() <= DEGENERATE_REL {
                if n[1].abs() <= DEGENERATE_REL {
                    Vec::new()
                } else {
                    vec![-n[0] / n[1]]
                }
            } else {
                quadratic_candidates(n[0], n[1], n[2])
            }
        } else {
            cubic_candidates(n[0], n[1], n[2], n[3])
        }
    } else {
        quartic_candidates(n[0], n[1], n[2], n[3], n[4])
    };

    let mut roots = Vec::with_capacity(candidates.len());
    for x0 in candidates {
        if !x0.is_finite() {
            continue;
        }
        let x = newton_step(&n, x0);
        let q = eval(&n, x);
        let tol = RESIDUAL_REL * x.powi(4).abs().max(1.0);
        if q.abs() <= tol {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs())));
    PolyRoots {
        roots,
        identically_zero: false,
    }
}

/// Real roots of the quadratic `c0 + c1 x + c2 x^2` (ascending).
pub(crate) fn real_roots_quadratic(c: [f64; 3]) -> Vec<f64> {
    solve_quartic([c[0], c[1], c[2], 0.0, 0.0]).roots
}

fn eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

fn eval_deriv(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for k in (1..c.len()).rev() {
        acc = acc * x + c[k] * k as f64;
    }
    acc
}

fn newton_step(c: &[f64], x: f64) -> f64 {
    let d = eval_deriv(c, x);
    if d.abs() <= f64::MIN_POSITIVE {
        return x;
    }
    let x1 = x - eval(c, x) / d;
    if x1.is_finite() {
        x1
    } else {
        x
    }
}

/// Candidate roots of `a x^2 + b x + c0` (degree exactly two), via the
/// cancellation-free quadratic formula. A slightly negative discriminant is
/// treated as a double root so borderline tangencies are not missed.
fn quadratic_candidates(c0: f64, b: f64, a: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * a * c0;
    let fuzz = 1e-12 * (b * b + (4.0 * a * c0).abs());
    if disc < -fuzz {
        return Vec::new();
    }
    if disc <= fuzz {
        return vec![-b / (2.0 * a)];
    }
    let sq = disc.sqrt();
    let sgn = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (b + sgn * sq);
    // |q| >= sq/2 > 0 here, so both divisions are safe.
    vec![q / a, c0 / q]
}

/// Candidate roots of a cubic with leading coefficient `c3` (nonzero).
fn cubic_candidates(c0: f64, c1: f64, c2: f64, c3: f64) -> Vec<f64> {
    // Depress: x = t - b2/3 turns the monic cubic into t^3 + p t + q.
    let b2 = c2 / c3;
    let b1 = c1 / c3;
    let b0 = c0 / c3;
    let shift = b2 / 3.0;
    let p = b1 - b2 * b2 / 3.0;
    let q = b0 + (2.0 * b2 * b2 * b2 - 9.0 * b2 * b1) / 27.0;
    let mut ts = Vec::with_capacity(3);
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    if disc >= 0.0 && p < 0.0 {
        // Three real roots: trigonometric form t_k = 2u cos((phi - 2 pi k)/3)
        // with cos(phi) = -q / (2 u^3), u = sqrt(-p/3).
        let u = (-p / 3.0).sqrt();
        let phi = (-q / (2.0 * u * u * u)).clamp(-1.0, 1.0).acos();
        for k in 0..3 {
            ts.push(2.0 * u * ((phi - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos());
        }
    } else if p == 0.0 && q == 0.0 {
        ts.push(0.0);
    } else {
        // One real root: Cardano, picking the larger cube root first and
        // recovering the other factor as -p/(3u) to avoid cancellation.
        let half_disc = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        let w = if q >= 0.0 {
            -q / 2.0 - half_disc
        } else {
            -q / 2.0 + half_disc
        };
        let u = w.cbrt();
        let t = if u == 0.0 { 0.0 } else { u - p / (3.0 * u) };
        ts.push(t);
    }
    ts.into_iter().map(|t| t - shift).collect()
}

/// Candidate roots of a quartic with leading coefficient `c4` (nonzero),
/// via Ferrari's factorization into two quadratics.
fn quartic_candidates(c0: f64, c1: f64, c2: f64, c3: f64, c4: f64) -> Vec<f64> {
    // Monic, then depressed: x = t - a3/4 gives t^4 + al t^2 + be t + ga.
    let a3 = c3 / c4;
    let a2 = c2 / c4;
    let a1 = c1 / c4;
    let a0 = c0 / c4;
    let shift = a3 / 4.0;
    let al = a2 - 3.0 * a3 * a3 / 8.0;
    let be = a1 - a3 * a2 / 2.0 + a3 * a3 * a3 / 8.0;
    let ga = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3 * a3 * a3 * a3 / 256.0;

    let mut ts = Vec::with_capacity(4);
    if be.abs() <= 1e-13 * (1.0 + al.abs() + ga.abs()) {
        // Biquadratic: z^2 + al z + ga with z = t^2.
        for z in quadratic_candidates(ga, al, 1.0) {
            if z >= 0.0 {
                let r = z.sqrt();
                ts.push(-r);
                ts.push(r);
            } else if z >= -1e-12 * (1.0 + al.abs()) {
                ts.push(0.0);
            }
        }
    } else {
        // Resolvent cubic 8 m^3 + 8 al m^2 + (2 al^2 - 8 ga) m - be^2 = 0.
        // Its value at m = 0 is -be^2 < 0, so a positive real root exists;
        // the largest real root is that one.
        let res = cubic_candidates(-be * be, 2.0 * al * al - 8.0 * ga, 8.0 * al, 8.0);
        let m = res.into_iter().fold(f64::NEG_INFINITY, f64::max);
        if m.is_finite() && m > 0.0 {
            let a = (2.0 * m).sqrt();
            let b = be / (2.0 * a);
            // (t^2 + A t + (al/2 + m - B)) (t^2 - A t + (al/2 + m + B))
            ts.extend(quadratic_candidates(al / 2.0 + m - b, a, 1.0));
            ts.extend(quadratic_candidates(al / 2.0 + m + b, -a, 1.0));
        }
        // Resolvent failure (m <= 0 numerically) leaves ts empty: for a
        // depressed quartic with be != 0 that cannot happen exactly, and the
        // residual filter copes with the near-degenerate fringe because the
        // biquadratic branch catches |be| ~ 0 first.
    }
    ts.into_iter().map(|t| t - shift).collect()
}
