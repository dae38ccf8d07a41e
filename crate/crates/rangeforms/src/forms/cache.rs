//! Sharing of derivative point-values between neighboring grid cells.
//!
//! The node-based forms (Lagrange, Hermite) evaluate partial derivatives at
//! box corners and edge midpoints. On a regular grid those points are shared
//! between adjacent cells: a corner by four cells, an edge node by two. A
//! [`GridCache`] memoizes the values so each point is computed once per
//! sweep.
//!
//! # Lattice keying
//!
//! A cache is built by [`GridCache::for_grid`] for one polynomial over one
//! `n x n` grid, before any form evaluation starts. Its keys are the grid's
//! half-grid lattice — the
//! [half-grid lines](crate::interval::Interval::half_grid_lines) per axis,
//! which carry every cell corner *and* cell center the grid's cells can
//! present — paired with the derivative index. A probed coordinate is mapped
//! back to its line index arithmetically and accepted only when the line's
//! bits equal the probe's bits exactly, so two nodes share a value only when
//! their coordinates are bit-identical. Cached and uncached evaluation run
//! the same evaluation routine, so enabling the cache never changes a single
//! bit of any form's output, only how often the routine runs. Off-lattice
//! probes — including boxes that do not belong to the grid at all — fall
//! back to direct evaluation and store nothing.
//!
//! # Cost model
//!
//! A lookup must be cheaper than the evaluation it saves, or sharing is a
//! pessimization: most high-order derivatives of a modest polynomial are a
//! handful of coefficients, and a dense Horner pass over those is faster
//! than any table probe. The per-cell block accessors therefore share only
//! derivatives with at least `MIN_SHARED_COEFFS` coefficients and evaluate
//! the rest directly — which affects who computes a value, never the value.
//!
//! # Concurrency
//!
//! Values live in per-derivative slabs of atomic bit patterns, so any number
//! of threads may probe and populate one cache concurrently through
//! `&GridCache`. A slot's value is a pure function of the polynomial and the
//! lattice point; racing writers store identical bits, and the usual
//! two-phase pattern — populate, then read from many threads — needs no
//! further synchronization.

use crate::interval::{Box2, Interval};
use crate::poly::{CachedPoly, PartialIndex, Poly2};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

/// Slot bit pattern meaning "not yet computed": a NaN with a payload no
/// arithmetic can fabricate. Hardware float operations produce canonical
/// quiet NaNs, and payloads only propagate from NaN *inputs*, which finite
/// lattice coordinates and finite coefficients never supply. Even a
/// collision would only cost a recompute per probe, never a wrong value.
const ABSENT: u64 = 0x7ffc_dead_beef_0001;

/// Per-axis derivative orders covered by the slab table. Orders through 32
/// cover every derivative the recursive forms route through the cache for
/// polynomials up to degree 32 (the level cap); anything beyond evaluates
/// directly.
const TABLE_SIDE: usize = 33;

/// Coefficient-count floor below which a derivative is evaluated directly
/// rather than shared: a dense Horner pass over fewer coefficients is
/// cheaper than a lattice probe, so storing those values would cost more
/// than it saves. Sharing above the floor and evaluating below it produce
/// identical bits either way.
const MIN_SHARED_COEFFS: usize = 16;

/// One derivative's values over the lattice, `ABSENT` until computed.
type Slab = Box<[AtomicU64]>;

/// Memoizes `f^(i,j)(x, y)` point values on a fixed grid lattice.
///
/// One cache serves one polynomial on one grid: the key does not identify
/// `f`, so reusing a cache across different polynomials would serve wrong
/// values. Probes from boxes off the grid miss harmlessly.
#[derive(Debug)]
pub struct GridCache {
    xs: Axis,
    ys: Axis,
    /// Lazily allocated slab per derivative, indexed `dx + dy * TABLE_SIDE`.
    slabs: Vec<OnceLock<Slab>>,
}

impl GridCache {
    /// Builds the empty cache keyed to the `n x n` uniform grid over
    /// `domain`: its lattice holds every cell corner and cell center, per
    /// [`Interval::half_grid_lines`]. Build one cache per polynomial per
    /// grid, before evaluation starts. A degenerate `domain` or `n = 0`
    /// yields a cache that shares nothing — every probe misses.
    pub fn for_grid(domain: &Box2, n: u32) -> GridCache {
        GridCache {
            xs: Axis::new(domain.x(), n),
            ys: Axis::new(domain.y(), n),
            slabs: (0..TABLE_SIDE * TABLE_SIDE)
                .map(|_| OnceLock::new())
                .collect(),
        }
    }

    /// Evaluates `f^(idx)` at `(x, y)`, through the lattice when the point
    /// is on it. Always bit-identical to `f.partial(idx).eval(x, y)`.
    pub fn eval(&self, f: &CachedPoly, idx: PartialIndex, x: f64, y: f64) -> f64 {
        if let (Some(kx), Some(ky)) = (self.xs.index_of(x), self.ys.index_of(y)) {
            if let Some(slab) = self.slab(idx) {
                let slot = &slab[kx + self.xs.lines.len() * ky];
                let bits = slot.load(Ordering::Relaxed);
                if bits != ABSENT {
                    return f64::from_bits(bits);
                }
                let v = f.partial(idx).eval(x, y);
                slot.store(v.to_bits(), Ordering::Relaxed);
                return v;
            }
        }
        f.partial(idx).eval(x, y)
    }

    /// The values of `p = f^(idx)` on the 3 x 3 node grid `xs x ys`
    /// (`v[k][l]` belongs to `(xs[k], ys[l])`), shared through the lattice
    /// when `p` is worth sharing and every node lies on it, evaluated
    /// directly otherwise. The caller resolves the derivative once per cell
    /// instead of once per node.
    pub(crate) fn nodes3x3(
        &self,
        p: &Poly2,
        idx: PartialIndex,
        xs: &[f64; 3],
        ys: &[f64; 3],
    ) -> [[f64; 3]; 3] {
        // A corners-and-center triple occupies consecutive lattice lines.
        if worth_sharing(p) {
            if let Some((slab, kx0, ky0, w)) = self.block(idx, xs, ys, 1) {
                let mut v = [[0.0f64; 3]; 3];
                for (l, &y) in ys.iter().enumerate() {
                    let row = (ky0 + l) * w + kx0;
                    for (k, &x) in xs.iter().enumerate() {
                        v[k][l] = load_or_eval(&slab[row + k], p, x, y);
                    }
                }
                return v;
            }
        }
        let mut v = [[0.0f64; 3]; 3];
        for k in 0..3 {
            for l in 0..3 {
                v[k][l] = p.eval(xs[k], ys[l]);
            }
        }
        v
    }

    /// The 2 x 2 corner analogue of [`nodes3x3`](Self::nodes3x3).
    pub(crate) fn nodes2x2(
        &self,
        p: &Poly2,
        idx: PartialIndex,
        xs: &[f64; 2],
        ys: &[f64; 2],
    ) -> [[f64; 2]; 2] {
        // A corner pair skips its cell's center line: stride 2.
        if worth_sharing(p) {
            if let Some((slab, kx0, ky0, w)) = self.block(idx, xs, ys, 2) {
                let mut v = [[0.0f64; 2]; 2];
                for (l, &y) in ys.iter().enumerate() {
                    let row = (ky0 + 2 * l) * w + kx0;
                    for (k, &x) in xs.iter().enumerate() {
                        v[k][l] = load_or_eval(&slab[row + 2 * k], p, x, y);
                    }
                }
                return v;
            }
        }
        [
            [p.eval(xs[0], ys[0]), p.eval(xs[0], ys[1])],
            [p.eval(xs[1], ys[0]), p.eval(xs[1], ys[1])],
        ]
    }

    /// Number of node values stored so far. Scans the allocated slabs —
    /// for diagnostics and tests, not hot paths.
    pub fn len(&self) -> usize {
        self.slabs
            .iter()
            .filter_map(OnceLock::get)
            .map(|slab| {
                slab.iter()
                    .filter(|s| s.load(Ordering::Relaxed) != ABSENT)
                    .count()
            })
            .sum()
    }

    /// True when nothing has been stored yet.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The shared-path preamble of the block accessors: node runs resolved
    /// on both axes plus the slab for `idx`, as
    /// `(slab, first x index, first y index, lattice width)`.
    fn block<const N: usize>(
        &self,
        idx: PartialIndex,
        xs: &[f64; N],
        ys: &[f64; N],
        stride: usize,
    ) -> Option<(&Slab, usize, usize, usize)> {
        let kx0 = self.xs.run_of(xs, stride)?;
        let ky0 = self.ys.run_of(ys, stride)?;
        let slab = self.slab(idx)?;
        Some((slab, kx0, ky0, self.xs.lines.len()))
    }

    /// The slab for `idx`, allocated on first use; `None` when the
    /// derivative is beyond the table or the lattice is empty.
    fn slab(&self, idx: PartialIndex) -> Option<&Slab> {
        let (dx, dy) = (idx.dx as usize, idx.dy as usize);
        if dx >= TABLE_SIDE || dy >= TABLE_SIDE {
            return None;
        }
        let size = self.xs.lines.len() * self.ys.lines.len();
        if size == 0 {
            return None;
        }
        let slot = &self.slabs[dx + dy * TABLE_SIDE];
        Some(slot.get_or_init(|| (0..size).map(|_| AtomicU64::new(ABSENT)).collect()))
    }
}

/// One axis of the lattice: its half-grid lines plus the arithmetic that
/// maps a coordinate back to a line index.
#[derive(Debug)]
struct Axis {
    lines: Vec<f64>,
    /// `lines[0]`, or 0 for an empty lattice.
    origin: f64,
    /// `2n / width`: scales a coordinate offset back to its index.
    inv_step: f64,
}

impl Axis {
    fn new(iv: Interval, n: u32) -> Axis {
        let lines = iv.half_grid_lines(n);
        let (origin, inv_step) = match lines.first() {
            Some(&first) => (first, (lines.len() - 1) as f64 / iv.width()),
            None => (0.0, 0.0),
        };
        Axis {
            lines,
            origin,
            inv_step,
        }
    }

    /// The index of the lattice line bit-equal to `v`, if any. The
    /// arithmetic guess is exact for every line the constructor laid down;
    /// the ±1 neighbors absorb any conceivable rounding of the guess, and
    /// the final bit comparison decides — an off-lattice `v` (NaN included)
    /// can never alias onto a line.
    #[inline]
    fn index_of(&self, v: f64) -> Option<usize> {
        let guess = ((v - self.origin) * self.inv_step).round() as i64;
        for k in [guess, guess - 1, guess + 1] {
            if let Ok(u) = usize::try_from(k) {
                if self
                    .lines
                    .get(u)
                    .is_some_and(|line| line.to_bits() == v.to_bits())
                {
                    return Some(u);
                }
            }
        }
        None
    }

    /// The lattice index of `vs[0]` when the whole tuple lies on lines
    /// `stride` apart — the layout of a cell's nodes on its grid. One
    /// arithmetic resolution covers the run; every other node is accepted
    /// only by exact bit comparison at its fixed offset, so an off-lattice
    /// tuple degrades to `None`, never to a wrong slot.
    fn run_of<const N: usize>(&self, vs: &[f64; N], stride: usize) -> Option<usize> {
        let k0 = self.index_of(vs[0])?;
        for (t, &v) in vs.iter().enumerate().skip(1) {
            if !self
                .lines
                .get(k0 + t * stride)
                .is_some_and(|line| line.to_bits() == v.to_bits())
            {
                return None;
            }
        }
        Some(k0)
    }
}

/// True when `p` has enough coefficients that a lattice probe beats
/// re-evaluation; see the cost model in the module docs.
fn worth_sharing(p: &Poly2) -> bool {
    (p.max_x_power() + 1) * (p.max_y_power() + 1) >= MIN_SHARED_COEFFS
}

/// The slot's value, computed and stored on first touch. Relaxed ordering
/// suffices: every writer derives the identical bits.
#[inline]
fn load_or_eval(slot: &AtomicU64, p: &Poly2, x: f64, y: f64) -> f64 {
    let bits = slot.load(Ordering::Relaxed);
    if bits != ABSENT {
        return f64::from_bits(bits);
    }
    let v = p.eval(x, y);
    slot.store(v.to_bits(), Ordering::Relaxed);
    v
}
