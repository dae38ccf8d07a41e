//! Taylor centered forms of orders 1 through 4.
//!
//! The order-`m`, level-`n` Taylor form (with `n >= m`) encloses `f` over a
//! square box `B` with midpoint `c` and radius `r` as
//!
//! ```text
//! T(f, B) = range(T_{m-1} over B) + [-1, 1] * r^m * S
//! S       = sum_{k=m}^{n} s_k * r^{k-m}
//! s_k     = (1/k!) * sum_{j=0}^{k} C(k, j) * |f^(k-j, j)(c)|      (k < n)
//! s_n     = (1/n!) * sum_{j=0}^{n} C(n, j) * mag(NE(f^(n-j, j), B))
//! ```
//!
//! where `T_{m-1}` is the Taylor polynomial of degree `m - 1` at `c` (its
//! range computed exactly by the degree-matched kernel) and `NE` is interval
//! evaluation. Raising the level replaces interval-evaluated derivative
//! magnitudes with midpoint values one order at a time; at level
//! `n = max(degree + 1, m)` the interval tail vanishes identically because
//! every derivative of order `n` is zero — the *maximal* form.
//!
//! Order 1 with level `n >= 2` is definitionally identical to order 2 at the
//! same level: the remainder cascade is the same sum, and enclosing the
//! linear `T_1` exactly costs nothing more than enclosing `T_0`. The
//! implementation delegates, which makes the identity hold bit-for-bit.

use super::delannoy::{binomial, factorial};
use super::{check_square, FormError, SquareBox, MAX_LEVEL};
use crate::exact_range::{range_biv_cubic, range_biv_linear, range_biv_quadratic, CoeffGrid};
use crate::interval::{Box2, Interval};
use crate::poly::{CachedPoly, PartialIndex};

/// Evaluates the order-`m` Taylor form at level `n` (`1 <= m <= 4`,
/// `n >= m`).
pub fn taylor_form(
    f: &CachedPoly,
    b: &Box2,
    order: u32,
    level: u32,
) -> Result<Interval, FormError> {
    if !(1..=4).contains(&order) {
        return Err(FormError::InvalidOrder { order });
    }
    if level < order {
        return Err(FormError::LevelTooLow { order, level });
    }
    if level > MAX_LEVEL {
        return Err(FormError::LevelTooHigh {
            level,
            max: MAX_LEVEL,
        });
    }
    let sq = check_square(b)?;
    let order = if order == 1 && level >= 2 { 2 } else { order };
    taylor_core(f, &sq, order, level, true)
}

/// Evaluates the maximal order-`m` Taylor form: level
/// `max(degree + 1, m)`, at which the interval tail is identically zero.
pub fn taylor_form_maximal(f: &CachedPoly, b: &Box2, order: u32) -> Result<Interval, FormError> {
    if !(1..=4).contains(&order) {
        return Err(FormError::InvalidOrder { order });
    }
    let sq = check_square(b)?;
    let order = if order == 1 { 2 } else { order };
    let level = (f.base().degree() as u32 + 1).max(order).min(MAX_LEVEL);
    taylor_core(f, &sq, order, level, false)
}

/// Shared cascade. With `interval_tail` the level-`n` term is enclosed by
/// interval arithmetic; without it the term is known to be structurally
/// zero and is skipped.
fn taylor_core(
    f: &CachedPoly,
    sq: &SquareBox,
    m: u32,
    n: u32,
    interval_tail: bool,
) -> Result<Interval, FormError> {
    let mut g: CoeffGrid = [[0.0; 4]; 4];
    for i in 0..m {
        for j in 0..(m - i) {
            let df = f.partial(PartialIndex::new(i, j));
            let fact = (factorial(i) * factorial(j)) as f64;
            g[i as usize][j as usize] = df.eval(sq.mx, sq.my) / fact;
        }
    }
    let principal = match m {
        1 | 2 => range_biv_linear(&g, sq.rx, sq.ry)?,
        3 => range_biv_quadratic(&g, sq.rx, sq.ry)?,
        _ => range_biv_cubic(&g, sq.rx, sq.ry)?,
    };

    let outer = sq.as_box();
    let mut s_total = 0.0;
    let mut r_pow = 1.0;
    for k in m..=n {
        if k == n && !interval_tail {
            break;
        }
        let inv_fact = 1.0 / factorial(k) as f64;
        let mut s_k = 0.0;
        for j in 0..=k {
            let idx = PartialIndex::new(k - j, j);
            let weight = binomial(k, j) as f64;
            let mag = if k == n {
                f.partial(idx).natural_extension(&outer).magnitude()
            } else {
                f.partial(idx).eval(sq.mx, sq.my).abs()
            };
            s_k += weight * mag;
        }
        s_total += inv_fact * s_k * r_pow;
        r_pow *= sq.r;
    }
    let bound = sq.r.powi(m as i32) * s_total;
    Ok(principal + Interval::symmetric(bound))
}
