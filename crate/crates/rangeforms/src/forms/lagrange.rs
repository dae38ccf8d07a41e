//! Recursive Lagrange form: third-order enclosures from node values.
//!
//! Instead of midpoint derivatives, this form samples derivatives on the
//! 3 x 3 node grid `{lo, mid, hi} x {lo, mid, hi}` of the box and fits each
//! a biquadratic interpolant. The level-`n` enclosure is
//!
//! ```text
//! L(f, B) = range(H_00 over B) + [-1, 1] * U
//! U       = sum_{k=1}^{n+1} u_k * omega^k,      omega = (sqrt(3)/27) * r^3
//! u_k     = sum_{j=0}^{k} D(k, j) * mag(range(H_{k-j, j} over B))    (k < n)
//! u_n     = sum_{j=0}^{n} D(n, j) * mag(NE(f^(3(n-j), 3j), B))
//! u_{n+1} = sum_{j=1}^{n} D(n-1, j-1) * mag(NE(f^(3(n+1-j), 3j), B))
//! ```
//!
//! where `H_{i,j}` is the biquadratic interpolating `f^(3i, 3j)` at the
//! nodes, its range split by [`split_biquadratic`] into an exact
//! biquadratic part plus a bounded residual, and `D(n, k)` are the
//! Delannoy weights counting how interpolation errors compound through the
//! recursion. Interval arithmetic appears only in the last two cascade
//! terms; at level `n = floor(d/3) + 1` those involve derivatives beyond
//! the degree `d` and vanish identically — the maximal form.
//!
//! Node values can be shared with neighboring grid cells through a
//! [`GridCache`]; cells built from one global array of grid lines hit the
//! cache bit-exactly.

use super::cache::GridCache;
use super::delannoy::delannoy;
use super::{check_square, FormError, SquareBox, MAX_LEVEL};
use crate::exact_range::{split_biquadratic, CoeffGrid};
use crate::interval::{Box2, Interval};
use crate::poly::{CachedPoly, PartialIndex};

/// Evaluates the recursive Lagrange form at level `n >= 1`.
pub fn lagrange_form(
    f: &CachedPoly,
    b: &Box2,
    level: u32,
    cache: Option<&GridCache>,
) -> Result<Interval, FormError> {
    if level < 1 {
        return Err(FormError::LevelTooLow { order: 3, level });
    }
    if level > MAX_LEVEL {
        return Err(FormError::LevelTooHigh {
            level,
            max: MAX_LEVEL,
        });
    }
    let sq = check_square(b)?;
    lagrange_core(f, b, &sq, level, cache, true)
}

/// Evaluates the maximal recursive Lagrange form: level
/// `floor(degree / 3) + 1`, at which both interval tails are identically
/// zero.
pub fn lagrange_form_maximal(
    f: &CachedPoly,
    b: &Box2,
    cache: Option<&GridCache>,
) -> Result<Interval, FormError> {
    let sq = check_square(b)?;
    let level = (f.base().degree() as u32 / 3 + 1).min(MAX_LEVEL);
    lagrange_core(f, b, &sq, level, cache, false)
}

fn lagrange_core(
    f: &CachedPoly,
    b: &Box2,
    sq: &SquareBox,
    n: u32,
    cache: Option<&GridCache>,
    interval_tail: bool,
) -> Result<Interval, FormError> {
    let xs = [b.x().lo(), sq.mx, b.x().hi()];
    let ys = [b.y().lo(), sq.my, b.y().hi()];

    // Enclosures of the interpolants H_{i,j} for i + j <= n - 1.
    let size = n as usize;
    let mut enc = vec![vec![Interval::ZERO; size]; size];
    for i in 0..n {
        for j in 0..(n - i) {
            let idx = PartialIndex::new(3 * i, 3 * j);
            let p = f.partial(idx);
            let v = match cache {
                Some(c) => c.nodes3x3(&p, idx, &xs, &ys),
                None => {
                    let mut v = [[0.0f64; 3]; 3];
                    for (k, &x) in xs.iter().enumerate() {
                        for (l, &y) in ys.iter().enumerate() {
                            v[k][l] = p.eval(x, y);
                        }
                    }
                    v
                }
            };
            let g = biquadratic_from_nodes(&v, sq.rx, sq.ry);
            let (quad, residual) = split_biquadratic(&g, sq.rx, sq.ry)?;
            enc[i as usize][j as usize] = quad + residual;
        }
    }
    let base = enc[0][0];

    // Cascade weights u_1 .. u_{n+1}.
    let mut weights = vec![0.0f64; size + 2];
    for k in 1..n {
        let mut u = 0.0;
        for j in 0..=k {
            let mag = enc[(k - j) as usize][j as usize].magnitude();
            u += delannoy(k, j) as f64 * mag;
        }
        weights[k as usize] = u;
    }
    if interval_tail {
        let outer = sq.as_box();
        let mut u_n = 0.0;
        for j in 0..=n {
            let idx = PartialIndex::new(3 * (n - j), 3 * j);
            let mag = f.partial(idx).natural_extension(&outer).magnitude();
            u_n += delannoy(n, j) as f64 * mag;
        }
        weights[size] = u_n;
        let mut u_next = 0.0;
        for j in 1..=n {
            let idx = PartialIndex::new(3 * (n + 1 - j), 3 * j);
            let mag = f.partial(idx).natural_extension(&outer).magnitude();
            u_next += delannoy(n - 1, j - 1) as f64 * mag;
        }
        weights[size + 1] = u_next;
    }

    let omega = (3.0f64.sqrt() / 27.0) * sq.r.powi(3);
    let mut total = 0.0;
    let mut om_pow = omega;
    for &w in weights.iter().skip(1) {
        total += w * om_pow;
        om_pow *= omega;
    }
    Ok(base + Interval::symmetric(total))
}

/// Coefficients (in coordinates centered at the middle node) of the
/// biquadratic interpolating the 3 x 3 node values `v[k][l]` at
/// `x = mid + {-rx, 0, rx}[k]`, `y = mid + {-ry, 0, ry}[l]`: central
/// differences per axis, tensored.
fn biquadratic_from_nodes(v: &[[f64; 3]; 3], rx: f64, ry: f64) -> CoeffGrid {
    let mut c: CoeffGrid = [[0.0; 4]; 4];
    c[0][0] = v[1][1];
    c[1][0] = (v[2][1] - v[0][1]) / (2.0 * rx);
    c[0][1] = (v[1][2] - v[1][0]) / (2.0 * ry);
    c[2][0] = (v[2][1] - 2.0 * v[1][1] + v[0][1]) / (2.0 * rx * rx);
    c[1][1] = (v[2][2] - v[0][2] - v[2][0] + v[0][0]) / (4.0 * rx * ry);
    c[0][2] = (v[1][2] - 2.0 * v[1][1] + v[1][0]) / (2.0 * ry * ry);
    c[2][1] = (v[2][2] - 2.0 * v[1][2] + v[0][2] - v[2][0] + 2.0 * v[1][0] - v[0][0])
        / (4.0 * rx * rx * ry);
    c[1][2] = (v[2][2] - 2.0 * v[2][1] + v[2][0] - v[0][2] + 2.0 * v[0][1] - v[0][0])
        / (4.0 * rx * ry * ry);
    c[2][2] = (v[2][2] - 2.0 * v[1][2] + v[0][2] - 2.0 * v[2][1] + 4.0 * v[1][1] - 2.0 * v[0][1]
        + v[2][0]
        - 2.0 * v[1][0]
        + v[0][0])
        / (4.0 * rx * rx * ry * ry);
    c
}
