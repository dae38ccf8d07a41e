//! Recursive Hermite form: fourth-order enclosures from corner data.
//!
//! This form samples, at each of the four box corners, a quadruple of
//! derivatives — the function, its two first partials, and the mixed
//! partial — and fits the unique bicubic matching all sixteen conditions.
//! The level-`n` enclosure is
//!
//! ```text
//! H(f, B) = range(H_00 over B) + [-1, 1] * V
//! V       = sum_{k=1}^{n+1} v_k * omega^k,      omega = r^4 / 24
//! v_k     = sum_{j=0}^{k} D(k, j) * mag(range(H_{k-j, j} over B))    (k < n)
//! v_n     = sum_{j=0}^{n} D(n, j) * mag(NE(f^(4(n-j), 4j), B))
//! v_{n+1} = sum_{j=1}^{n} D(n-1, j-1) * mag(NE(f^(4(n+1-j), 4j), B))
//! ```
//!
//! where `H_{i,j}` is the bicubic Hermite interpolant of `f^(4i, 4j)`
//! (whose corner quadruple consists of `f^(4i, 4j)`, `f^(4i+1, 4j)`,
//! `f^(4i, 4j+1)`, `f^(4i+1, 4j+1)`), its range split by [`split_bicubic`]
//! into an exact bicubic part plus a bounded residual, and `D(n, k)` are
//! the Delannoy weights. At level `n = floor(d/4) + 1` the interval tails
//! vanish identically — the maximal form.
//!
//! The bicubic is built as a tensor product of univariate cubic Hermite
//! solves: one solve per y-row recovers the x-dependence, then one solve
//! per x-coefficient recovers the y-dependence, using the y-derivative
//! rows as endpoint slopes. Corner values can be shared with neighboring
//! grid cells through a [`GridCache`].

use super::cache::GridCache;
use super::delannoy::delannoy;
use super::{check_square, FormError, SquareBox, MAX_LEVEL};
use crate::exact_range::{split_bicubic, CoeffGrid};
use crate::interval::{Box2, Interval};
use crate::poly::{CachedPoly, PartialIndex};

/// Evaluates the recursive Hermite form at level `n >= 1`.
pub fn hermite_form(
    f: &CachedPoly,
    b: &Box2,
    level: u32,
    cache: Option<&GridCache>,
) -> Result<Interval, FormError> {
    if level < 1 {
        return Err(FormError::LevelTooLow { order: 4, level });
    }
    if level > MAX_LEVEL {
        return Err(FormError::LevelTooHigh {
            level,
            max: MAX_LEVEL,
        });
    }
    let sq = check_square(b)?;
    hermite_core(f, b, &sq, level, cache, true)
}

/// Evaluates the maximal recursive Hermite form: level
/// `floor(degree / 4) + 1`, at which both interval tails are identically
/// zero.
pub fn hermite_form_maximal(
    f: &CachedPoly,
    b: &Box2,
    cache: Option<&GridCache>,
) -> Result<Interval, FormError> {
    let sq = check_square(b)?;
    let level = (f.base().degree() as u32 / 4 + 1).min(MAX_LEVEL);
    hermite_core(f, b, &sq, level, cache, false)
}

fn hermite_core(
    f: &CachedPoly,
    b: &Box2,
    sq: &SquareBox,
    n: u32,
    cache: Option<&GridCache>,
    interval_tail: bool,
) -> Result<Interval, FormError> {
    let xs = [b.x().lo(), b.x().hi()];
    let ys = [b.y().lo(), b.y().hi()];

    // Enclosures of the interpolants H_{i,j} for i + j <= n - 1.
    let size = n as usize;
    let mut enc = vec![vec![Interval::ZERO; size]; size];
    for i in 0..n {
        for j in 0..(n - i) {
            let corners = |dx: u32, dy: u32| -> [[f64; 2]; 2] {
                let idx = PartialIndex::new(4 * i + dx, 4 * j + dy);
                let p = f.partial(idx);
                match cache {
                    Some(c) => c.nodes2x2(&p, idx, &xs, &ys),
                    None => [
                        [p.eval(xs[0], ys[0]), p.eval(xs[0], ys[1])],
                        [p.eval(xs[1], ys[0]), p.eval(xs[1], ys[1])],
                    ],
                }
            };
            let g00 = corners(0, 0);
            let g10 = corners(1, 0);
            let g01 = corners(0, 1);
            let g11 = corners(1, 1);
            let c = bicubic_from_corners(&g00, &g10, &g01, &g11, sq.rx, sq.ry);
            let (cubic, residual) = split_bicubic(&c, sq.rx, sq.ry)?;
            enc[i as usize][j as usize] = cubic + residual;
        }
    }
    let base = enc[0][0];

    // Cascade weights v_1 .. v_{n+1}.
    let mut weights = vec![0.0f64; size + 2];
    for k in 1..n {
        let mut v = 0.0;
        for j in 0..=k {
            let mag = enc[(k - j) as usize][j as usize].magnitude();
            v += delannoy(k, j) as f64 * mag;
        }
        weights[k as usize] = v;
    }
    if interval_tail {
        let outer = sq.as_box();
        let mut v_n = 0.0;
        for j in 0..=n {
            let idx = PartialIndex::new(4 * (n - j), 4 * j);
            let mag = f.partial(idx).natural_extension(&outer).magnitude();
            v_n += delannoy(n, j) as f64 * mag;
        }
        weights[size] = v_n;
        let mut v_next = 0.0;
        for j in 1..=n {
            let idx = PartialIndex::new(4 * (n + 1 - j), 4 * j);
            let mag = f.partial(idx).natural_extension(&outer).magnitude();
            v_next += delannoy(n - 1, j - 1) as f64 * mag;
        }
        weights[size + 1] = v_next;
    }

    let omega = sq.r.powi(4) / 24.0;
    let mut total = 0.0;
    let mut om_pow = omega;
    for &w in weights.iter().skip(1) {
        total += w * om_pow;
        om_pow *= omega;
    }
    Ok(base + Interval::symmetric(total))
}

/// Coefficients of the cubic `a0 + a1 t + a2 t^2 + a3 t^3` on `[-r, r]`
/// with prescribed endpoint values `p0 = H(-r)`, `p1 = H(r)` and endpoint
/// slopes `d0 = H'(-r)`, `d1 = H'(r)`.
fn cubic_hermite(p0: f64, p1: f64, d0: f64, d1: f64, r: f64) -> [f64; 4] {
    let a0 = 0.5 * (p0 + p1) - r * (d1 - d0) / 4.0;
    let a1 = 3.0 * (p1 - p0) / (4.0 * r) - (d0 + d1) / 4.0;
    let a2 = (d1 - d0) / (4.0 * r);
    let a3 = (d0 + d1) / (4.0 * r * r) - (p1 - p0) / (4.0 * r * r * r);
    [a0, a1, a2, a3]
}

/// Coefficients (centered at the box midpoint) of the bicubic matching the
/// corner quadruples: `g00[k][l] = value`, `g10 = x-slope`, `g01 =
/// y-slope`, `g11 = mixed slope` at corner `(x_k, y_l)`, `k, l in {0, 1}`
/// for the low/high side.
fn bicubic_from_corners(
    g00: &[[f64; 2]; 2],
    g10: &[[f64; 2]; 2],
    g01: &[[f64; 2]; 2],
    g11: &[[f64; 2]; 2],
    rx: f64,
    ry: f64,
) -> CoeffGrid {
    // x-cubics along the two y-rows: values of f, then of f_y.
    let p_lo = cubic_hermite(g00[0][0], g00[1][0], g10[0][0], g10[1][0], rx);
    let p_hi = cubic_hermite(g00[0][1], g00[1][1], g10[0][1], g10[1][1], rx);
    let q_lo = cubic_hermite(g01[0][0], g01[1][0], g11[0][0], g11[1][0], rx);
    let q_hi = cubic_hermite(g01[0][1], g01[1][1], g11[0][1], g11[1][1], rx);
    // y-solve per x-coefficient, with the f_y rows as endpoint slopes.
    let mut c: CoeffGrid = [[0.0; 4]; 4];
    for i in 0..4 {
        c[i] = cubic_hermite(p_lo[i], p_hi[i], q_lo[i], q_hi[i], ry);
    }
    c
}
