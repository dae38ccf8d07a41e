//! Exact ranges of centered bivariate polynomials over `[-r_x, r_x] x
//! [-r_y, r_y]`.
//!
//! The extreme values of a polynomial over a box are attained at a corner,
//! on an edge, or at an interior stationary point. Corners are function
//! evaluations, edge restrictions are univariate polynomials handled by the
//! kernels in [`super::univariate`], and interior stationary points solve
//! `p_x = p_y = 0` — for total degree ≤ 3 a pair of bivariate quadratics,
//! eliminated to a quartic in `y` via the Sylvester resultant
//!
//! ```text
//! Res(A, B) = (a0 b2 - a2 b0)^2 - (a0 b1 - a1 b0)(a1 b2 - a2 b1)
//! ```
//!
//! for `A = a0 X^2 + a1 X + a2`, `B = b0 X^2 + b1 X + b2` with coefficients
//! polynomial in `Y`.
//!
//! Candidate stationary points are generated liberally (degenerate leading
//! coefficients, identically-vanishing resultants, and shared factors each
//! get a fallback enumeration), then polished with one Newton step on the
//! gradient and filtered by gradient residual. A candidate that survives is
//! *hulled*: its polynomial value joins the boundary hull. Hulling a point
//! of the box can only ever grow the result toward the true range, so
//! spurious candidates are harmless; certified saddles (Hessian determinant
//! clearly negative) are skipped, near-singular Hessians are hulled
//! conservatively.

use super::roots::{real_roots_quadratic, solve_quartic, DEGENERATE_REL};
use super::univariate::{range_uni_cubic, range_uni_quadratic};
use super::{eval_centered, grid_scale, validate, CoeffGrid, KernelError};
use crate::interval::Interval;

// --- small polynomials in Y (ascending coefficients, degree <= 4) ---

type P5 = [f64; 5];

fn pmul(a: &[f64], b: &[f64]) -> P5 {
    let mut out = [0.0; 5];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            debug_assert!(i + j <= 4 || bj == 0.0, "degree overflow in pmul");
            if i + j <= 4 {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn psub(a: P5, b: P5) -> P5 {
    let mut out = [0.0; 5];
    for k in 0..5 {
        out[k] = a[k] - b[k];
    }
    out
}

fn padd(a: P5, b: P5) -> P5 {
    let mut out = [0.0; 5];
    for k in 0..5 {
        out[k] = a[k] + b[k];
    }
    out
}

fn peval(p: &[f64], y: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * y + c)
}

// --- grid helpers ---

/// Coefficients in `X` of the restriction `p(X, y)`.
fn restrict_y(c: &CoeffGrid, y: f64) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = ((c[i][3] * y + c[i][2]) * y + c[i][1]) * y + c[i][0];
    }
    out
}

/// Coefficients in `Y` of the restriction `p(x, Y)`.
fn restrict_x(c: &CoeffGrid, x: f64) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (j, slot) in out.iter_mut().enumerate() {
        *slot = ((c[3][j] * x + c[2][j]) * x + c[1][j]) * x + c[0][j];
    }
    out
}

fn partial_x(c: &CoeffGrid) -> CoeffGrid {
    let mut out = [[0.0; 4]; 4];
    for i in 0..3 {
        for j in 0..4 {
            out[i][j] = (i + 1) as f64 * c[i + 1][j];
        }
    }
    out
}

fn partial_y(c: &CoeffGrid) -> CoeffGrid {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..3 {
            out[i][j] = (j + 1) as f64 * c[i][j + 1];
        }
    }
    out
}

fn corner_hull(c: &CoeffGrid, rx: f64, ry: f64) -> Interval {
    let mut out = Interval::point(eval_centered(c, -rx, -ry));
    out = out.hull_point(eval_centered(c, rx, -ry));
    out = out.hull_point(eval_centered(c, -rx, ry));
    out = out.hull_point(eval_centered(c, rx, ry));
    out
}

/// Polishes, filters, and hulls interior stationary-point candidates for the
/// polynomial `c`. Shared by the cubic kernel and the bicubic residual.
fn hull_stationary_values(
    c: &CoeffGrid,
    candidates: &[(f64, f64)],
    rx: f64,
    ry: f64,
    out: &mut Interval,
) {
    if candidates.is_empty() {
        return;
    }
    let px = partial_x(c);
    let py = partial_y(c);
    let pxx = partial_x(&px);
    let pxy = partial_y(&px);
    let pyy = partial_y(&py);
    let grad_tol = 1e-9 * (1.0 + grid_scale(c));
    for &(x0, y0) in candidates {
        if !(x0.is_finite() && y0.is_finite()) {
            continue;
        }
        let (mut x, mut y) = (x0, y0);
        // One Newton step on the gradient system; capped at box scale so a
        // far-off spurious candidate cannot be catapulted inside.
        let gx = eval_centered(&px, x, y);
        let gy = eval_centered(&py, x, y);
        let h11 = eval_centered(&pxx, x, y);
        let h12 = eval_centered(&pxy, x, y);
        let h22 = eval_centered(&pyy, x, y);
        let det = h11 * h22 - h12 * h12;
        if det != 0.0 {
            let dx = (h22 * gx - h12 * gy) / det;
            let dy = (h11 * gy - h12 * gx) / det;
            if dx.is_finite() && dy.is_finite() && dx.abs() <= rx && dy.abs() <= ry {
                x -= dx;
                y -= dy;
            }
        }
        if !(x.abs() < rx && y.abs() < ry) {
            continue;
        }
        if eval_centered(&px, x, y).abs() > grad_tol || eval_centered(&py, x, y).abs() > grad_tol {
            continue;
        }
        let h11 = eval_centered(&pxx, x, y);
        let h12 = eval_centered(&pxy, x, y);
        let h22 = eval_centered(&pyy, x, y);
        let det = h11 * h22 - h12 * h12;
        let hmag = h11.abs().max(h22.abs()).max(h12.abs());
        if det < -1e-10 * hmag * hmag {
            // Certified saddle: its value cannot extend the range beyond the
            // boundary hull. Anything less clear-cut is hulled.
            continue;
        }
        *out = out.hull_point(eval_centered(c, x, y));
    }
}

// --- kernels ---

/// Exact range of `c00 + c10 X + c01 Y`: `c00 ± (r_x |c10| + r_y |c01|)`.
pub fn range_biv_linear(c: &CoeffGrid, rx: f64, ry: f64) -> Result<Interval, KernelError> {
    validate("range_biv_linear", c, rx, ry, |i, j| i + j <= 1)?;
    let s = rx * c[1][0].abs() + ry * c[0][1].abs();
    Ok(Interval::new(c[0][0] - s, c[0][0] + s))
}

/// Exact range of a total-degree ≤ 2 polynomial: corners, four edge
/// quadratics, and the interior critical point in closed form.
pub fn range_biv_quadratic(c: &CoeffGrid, rx: f64, ry: f64) -> Result<Interval, KernelError> {
    validate("range_biv_quadratic", c, rx, ry, |i, j| i + j <= 2)?;
    Ok(quadratic_range_unchecked(c, rx, ry))
}

fn quadratic_range_unchecked(c: &CoeffGrid, rx: f64, ry: f64) -> Interval {
    let mut out = corner_hull(c, rx, ry);
    for s in [-ry, ry] {
        let e = restrict_y(c, s);
        out = out.hull(range_uni_quadratic([e[0], e[1], e[2]], rx));
    }
    for s in [-rx, rx] {
        let e = restrict_x(c, s);
        out = out.hull(range_uni_quadratic([e[0], e[1], e[2]], ry));
    }
    // Interior critical point: solve the linear gradient system. It is an
    // extremum only when the Hessian determinant d = 4 c20 c02 - c11^2 is
    // positive; d <= 0 means a saddle or a parabolic ridge whose extremes
    // lie on the boundary.
    let (c10, c01, c20, c11, c02) = (c[1][0], c[0][1], c[2][0], c[1][1], c[0][2]);
    let d = 4.0 * c20 * c02 - c11 * c11;
    if d > 0.0 {
        let nx = 2.0 * c10 * c02 - c01 * c11;
        let ny = 2.0 * c01 * c20 - c10 * c11;
        if nx.abs() < d * rx && ny.abs() < d * ry {
            let val = c[0][0] - (c10 * c10 * c02 - c10 * c01 * c11 + c01 * c01 * c20) / d;
            out = out.hull_point(val);
        }
    }
    out
}

/// Exact range of a total-degree ≤ 3 polynomial: corners, four edge cubics,
/// and interior stationary points via resultant elimination.
pub fn range_biv_cubic(c: &CoeffGrid, rx: f64, ry: f64) -> Result<Interval, KernelError> {
    validate("range_biv_cubic", c, rx, ry, |i, j| i + j <= 3)?;
    Ok(cubic_range_unchecked(c, rx, ry))
}

fn cubic_range_unchecked(c: &CoeffGrid, rx: f64, ry: f64) -> Interval {
    let mut out = corner_hull(c, rx, ry);
    for s in [-ry, ry] {
        out = out.hull(range_uni_cubic(restrict_y(c, s), rx));
    }
    for s in [-rx, rx] {
        out = out.hull(range_uni_cubic(restrict_x(c, s), ry));
    }
    let cands = cubic_interior_candidates(c);
    hull_stationary_values(c, &cands, rx, ry, &mut out);
    out
}

/// Interior stationary-point candidates for a total-degree ≤ 3 grid.
///
/// The gradient components, as quadratics in `X` with `Y`-polynomial
/// coefficients:
///
/// ```text
/// p_x = a0 X^2 + a1(Y) X + a2(Y)   a0 = 3 c30, a1 = 2 c20 + 2 c21 Y,
///                                  a2 = c10 + c11 Y + c12 Y^2
/// p_y = b0 X^2 + b1(Y) X + b2(Y)   b0 = c21, b1 = c11 + 2 c12 Y,
///                                  b2 = c01 + 2 c02 Y + 3 c03 Y^2
/// ```
fn cubic_interior_candidates(c: &CoeffGrid) -> Vec<(f64, f64)> {
    let scale = grid_scale(c);
    if scale == 0.0 {
        return Vec::new();
    }
    let tiny = DEGENERATE_REL * scale;
    let a0 = 3.0 * c[3][0];
    let a1 = [2.0 * c[2][0], 2.0 * c[2][1]];
    let a2 = [c[1][0], c[1][1], c[1][2]];
    let b0 = c[2][1];
    let b1 = [c[1][1], 2.0 * c[1][2]];
    let b2 = [c[0][1], 2.0 * c[0][2], 3.0 * c[0][3]];
    let mut cands = Vec::new();

    if a0.abs() <= tiny && b0.abs() <= tiny {
        // Both gradient components are linear in X; eliminate X directly.
        let cross = psub(pmul(&a1, &b2), pmul(&a2, &b1));
        let cr = solve_quartic(cross);
        if !cr.identically_zero {
            for y in cr.roots {
                let a1y = peval(&a1, y);
                let b1y = peval(&b1, y);
                if a1y.abs() > tiny {
                    cands.push((-peval(&a2, y) / a1y, y));
                } else if b1y.abs() > tiny {
                    cands.push((-peval(&b2, y) / b1y, y));
                }
            }
        } else if a1[0].abs() <= tiny && a1[1].abs() <= tiny {
            // p_x does not involve X at all: critical Y-lines at the roots
            // of a2, with X pinned by p_y.
            for y in real_roots_quadratic([a2[0], a2[1], a2[2]]) {
                let b1y = peval(&b1, y);
                if b1y.abs() > tiny {
                    cands.push((-peval(&b2, y) / b1y, y));
                }
            }
        }
        // cross == 0 with a genuine linear p_x: the critical set is a graph
        // over Y carrying a constant value, it exits the box through the
        // Y-edges, and the boundary hull already covers it.
        return cands;
    }

    let w2 = psub(pmul(&[a0], &b2), pmul(&a2, &[b0]));
    let w1 = psub(pmul(&[a0], &b1), pmul(&a1, &[b0]));
    let cross = psub(pmul(&a1, &b2), pmul(&a2, &b1));
    let res = psub(pmul(&w2, &w2), pmul(&w1, &cross));
    let qr = solve_quartic(res);
    if !qr.identically_zero {
        for y in qr.roots {
            push_x_candidates(&mut cands, y, a0, &a1, &a2, b0, &b1, &b2);
        }
        return cands;
    }

    // The resultant vanishes identically: the gradient components share an
    // X-factor for every Y. The shared curve carries boundary-covered
    // values; isolated extra stationary points can only sit where the
    // combination W = w1(Y) X + w2(Y) degenerates or where the reduced
    // resultant Res(A, W) vanishes. Enumerate all of these.
    let res2 = psub(
        padd(pmul(&[a0], &pmul(&w2, &w2)), pmul(&a2, &pmul(&w1, &w1))),
        pmul(&a1, &pmul(&w1, &w2)),
    );
    let mut ys = solve_quartic(res2).roots;
    if w1[1].abs() > tiny {
        ys.push(-w1[0] / w1[1]);
    }
    ys.extend(real_roots_quadratic([w2[0], w2[1], w2[2]]));
    for y in ys {
        push_x_candidates(&mut cands, y, a0, &a1, &a2, b0, &b1, &b2);
    }
    cands
}

/// Pushes the roots of both gradient components at fixed `y` (quadratics in
/// `X`, degenerate degrees handled by the solver) as candidates.
#[allow(clippy::too_many_arguments)]
fn push_x_candidates(
    cands: &mut Vec<(f64, f64)>,
    y: f64,
    a0: f64,
    a1: &[f64],
    a2: &[f64],
    b0: f64,
    b1: &[f64],
    b2: &[f64],
) {
    for x in real_roots_quadratic([peval(a2, y), peval(a1, y), a0]) {
        cands.push((x, y));
    }
    for x in real_roots_quadratic([peval(b2, y), peval(b1, y), b0]) {
        cands.push((x, y));
    }
}

/// Range enclosure of a biquadratic (powers ≤ 2 in each variable): the sum
/// of the exact ranges of its total-degree part and its residual. See
/// [`split_biquadratic`] for the two parts.
pub fn range_biquadratic(c: &CoeffGrid, rx: f64, ry: f64) -> Result<Interval, KernelError> {
    let (q, r) = split_biquadratic(c, rx, ry)?;
    Ok(q + r)
}

/// Exact ranges of the two parts of a biquadratic: the total-degree ≤ 2
/// part `q` and the residual `s = c21 X^2 Y + c12 X Y^2 + c22 X^2 Y^2`.
///
/// The residual's only interior stationary point off the axes is always a
/// saddle, and its value on the axes is zero — attained on the boundary —
/// so its exact range is the hull of its four edge restrictions.
pub fn split_biquadratic(
    c: &CoeffGrid,
    rx: f64,
    ry: f64,
) -> Result<(Interval, Interval), KernelError> {
    validate("range_biquadratic", c, rx, ry, |i, j| i <= 2 && j <= 2)?;
    let mut q = [[0.0; 4]; 4];
    for i in 0..3 {
        for j in 0..3 {
            if i + j <= 2 {
                q[i][j] = c[i][j];
            }
        }
    }
    let quad = quadratic_range_unchecked(&q, rx, ry);
    let (c21, c12, c22) = (c[2][1], c[1][2], c[2][2]);
    let mut resid = Interval::ZERO;
    for s in [-ry, ry] {
        // (c21 s + c22 s^2) X^2 + (c12 s^2) X
        resid = resid.hull(range_uni_quadratic(
            [0.0, c12 * s * s, c21 * s + c22 * s * s],
            rx,
        ));
    }
    for t in [-rx, rx] {
        resid = resid.hull(range_uni_quadratic(
            [0.0, c21 * t * t, c12 * t + c22 * t * t],
            ry,
        ));
    }
    Ok((quad, resid))
}

/// Range enclosure of a bicubic (powers ≤ 3 in each variable): the sum of
/// the exact ranges of its total-degree part and its residual. See
/// [`split_bicubic`] for the two parts.
pub fn range_bicubic(c: &CoeffGrid, rx: f64, ry: f64) -> Result<Interval, KernelError> {
    let (q, r) = split_bicubic(c, rx, ry)?;
    Ok(q + r)
}

/// Exact ranges of the two parts of a bicubic: the total-degree ≤ 3 part
/// and the residual
/// `s = c31 X^3 Y + c13 X Y^3 + c22 X^2 Y^2 + c32 X^3 Y^2 + c23 X^2 Y^3 + c33 X^3 Y^3`.
pub fn split_bicubic(c: &CoeffGrid, rx: f64, ry: f64) -> Result<(Interval, Interval), KernelError> {
    validate("range_bicubic", c, rx, ry, |_, _| true)?;
    let mut q = [[0.0; 4]; 4];
    let mut s = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i + j <= 3 {
                q[i][j] = c[i][j];
            } else {
                s[i][j] = c[i][j];
            }
        }
    }
    let cubic = cubic_range_unchecked(&q, rx, ry);
    Ok((cubic, bicubic_residual_range(&s, rx, ry)))
}

/// Exact range of the six-term bicubic residual: four edge cubics plus
/// interior stationary points from a structurally factored resultant.
///
/// The gradient factors as `s_x = Y * A(X; Y)` and `s_y = X * B(X; Y)` with
///
/// ```text
/// A: a0 = 3(c31 + c32 Y + c33 Y^2), a1 = 2 Y (c22 + c23 Y), a2 = c13 Y^2
/// B: b0 = c31 + 2 c32 Y + 3 c33 Y^2, b1 = 2 c22 Y + 3 c23 Y^2, b2 = 3 c13 Y^2
/// ```
///
/// On the axes the residual vanishes — a value attained on the boundary —
/// so only the common roots of `A` and `B` matter. Their Sylvester
/// resultant is `Y^4 * D(Y)` with the quartic `D = P1^2 - P2 P3` computed
/// from the exactly divided factors
///
/// ```text
/// P1 = c13 (8 c31 + 7 c32 Y + 6 c33 Y^2)         [(a0 b2 - a2 b0) / Y^2]
/// P2 = 4 c22 c31 + (7 c23 c31 + 2 c22 c32) Y
///      + 5 c23 c32 Y^2 + 3 c23 c33 Y^3           [(a0 b1 - a1 b0) / Y]
/// P3 = c13 (4 c22 + 3 c23 Y)                     [(a1 b2 - a2 b1) / Y^3]
/// ```
///
/// so no spurious `Y = 0` roots pollute the solve and the coefficients stay
/// well-scaled at small radii.
fn bicubic_residual_range(s: &CoeffGrid, rx: f64, ry: f64) -> Interval {
    let mut out = Interval::ZERO;
    for t in [-ry, ry] {
        out = out.hull(range_uni_cubic(restrict_y(s, t), rx));
    }
    for t in [-rx, rx] {
        out = out.hull(range_uni_cubic(restrict_x(s, t), ry));
    }
    let (c22, c31, c13) = (s[2][2], s[3][1], s[1][3]);
    let (c32, c23, c33) = (s[3][2], s[2][3], s[3][3]);
    let p1 = [8.0 * c31 * c13, 7.0 * c32 * c13, 6.0 * c33 * c13];
    let p2 = [
        4.0 * c22 * c31,
        7.0 * c23 * c31 + 2.0 * c22 * c32,
        5.0 * c23 * c32,
        3.0 * c23 * c33,
    ];
    let p3 = [4.0 * c22 * c13, 3.0 * c23 * c13];
    let d = psub(pmul(&p1, &p1), pmul(&p2, &p3));
    let dr = solve_quartic(d);
    let ys = if dr.identically_zero {
        // Structured residuals (e.g. c13 = 0, or c31 = c32 = c33 = 0) make
        // D vanish identically; the off-axis stationary Y-values then lie
        // among the roots of the individual factors.
        let mut ys = solve_quartic([p1[0], p1[1], p1[2], 0.0, 0.0]).roots;
        ys.extend(solve_quartic([p2[0], p2[1], p2[2], p2[3], 0.0]).roots);
        ys.extend(solve_quartic([p3[0], p3[1], 0.0, 0.0, 0.0]).roots);
        ys
    } else {
        dr.roots
    };
    let mut cands = Vec::new();
    for y in ys {
        let a0 = 3.0 * (c31 + c32 * y + c33 * y * y);
        let a1 = 2.0 * y * (c22 + c23 * y);
        let a2 = c13 * y * y;
        let b0 = c31 + 2.0 * c32 * y + 3.0 * c33 * y * y;
        let b1 = 2.0 * c22 * y + 3.0 * c23 * y * y;
        let b2 = 3.0 * c13 * y * y;
        for x in real_roots_quadratic([a2, a1, a0]) {
            cands.push((x, y));
        }
        for x in real_roots_quadratic([b2, b1, b0]) {
            cands.push((x, y));
        }
    }
    hull_stationary_values(s, &cands, rx, ry, &mut out);
    out
}
