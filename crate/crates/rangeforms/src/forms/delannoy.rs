//! Weighted Delannoy numbers and small exact combinatorics.
//!
//! The remainder cascades of the recursive Lagrange and Hermite forms weight
//! the interpolant and derivative-enclosure magnitudes at (i, j) by the
//! weighted Delannoy number `D(i + j, j)`,
//!
//! ```text
//! D(n, k) = sum_i C(k, i) * C(n - k, i) * 2^i
//! ```
//!
//! the number of weighted lattice paths underlying the recursion (diagonal
//! steps count double). The first rows are
//!
//! ```text
//! n = 0:  1
//! n = 1:  1  1
//! n = 2:  1  3  1
//! n = 3:  1  5  5  1
//! n = 4:  1  7 13  7  1
//! n = 5:  1  9 25 25  9  1
//! ```
//!
//! All values are computed exactly in `u128`; the forms convert to `f64`
//! (exact for every value that occurs at supported levels).

/// Exact binomial coefficient `C(n, k)` (0 when `k > n`).
pub(crate) fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exact factorial `n!`; `n <= 33` fits in `u128` comfortably.
pub(crate) fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Weighted Delannoy number `D(n, k)`.
///
/// Symmetric (`D(n, k) = D(n, n - k)`), with `D(n, 0) = D(n, n) = 1`, and
/// satisfying `D(n, k) = D(n-1, k-1) + D(n-1, k) + D(n-2, k-1)`.
pub fn delannoy(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 0;
    for i in 0..=k.min(n - k) {
        acc += binomial(k, i) * binomial(n - k, i) * (1u128 << i);
    }
    acc
}
