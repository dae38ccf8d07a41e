//! Cell-by-cell width comparison of two forms over a grid.
//!
//! For every cell of the [grid](crate::bench::grid) the driver computes the
//! log-ratio
//!
//! ```text
//! W = log10(width_A / width_B)
//! ```
//!
//! so `W < 0` exactly where form `A` is tighter than form `B`, with the
//! magnitude measuring by how many orders. A cell where either width is zero
//! (the enclosure is a point, e.g. for a locally constant polynomial) has no
//! meaningful ratio: it is recorded as NaN, counted, and rendered in the
//! sentinel color by the [PPM writer](crate::bench::ppm).

use std::io::{self, Write};

use crate::bench::grid::grid_cells;
use crate::bench::{fmt_f64, BenchError, FormSpec};
use crate::forms::{evaluate, CachedPoly, GridCache};
use crate::interval::Box2;

/// A grid of log-ratios comparing two forms.
#[derive(Debug, Clone)]
pub struct Heatmap {
    /// Grid size per axis.
    pub n: u32,
    /// `W` per cell in row-major order (`x` fastest, index `j * n + i`);
    /// NaN marks a zero-width cell.
    pub values: Vec<f64>,
    /// Smallest finite `W`, or 0 when every cell is a sentinel.
    pub min: f64,
    /// Largest finite `W`, or 0 when every cell is a sentinel.
    pub max: f64,
    /// Number of cells where either form produced a zero-width enclosure.
    pub zero_width_cells: usize,
}

/// Compares form `a` against form `b` on the `n x n` grid over `domain`.
pub fn run_heatmap(
    f: &CachedPoly,
    domain: &Box2,
    n: u32,
    a: FormSpec,
    b: FormSpec,
) -> Result<Heatmap, BenchError> {
    let cells = grid_cells(domain, n)?;
    let cache_a = a.shared.then(|| GridCache::for_grid(domain, n));
    let cache_b = b.shared.then(|| GridCache::for_grid(domain, n));
    let mut values = Vec::with_capacity(cells.len());
    let mut zero_width_cells = 0;
    for cell in &cells {
        let wa = evaluate(a.kind, f, cell, cache_a.as_ref())?.width();
        let wb = evaluate(b.kind, f, cell, cache_b.as_ref())?.width();
        if wa == 0.0 || wb == 0.0 {
            zero_width_cells += 1;
            values.push(f64::NAN);
        } else {
            values.push((wa / wb).log10());
        }
    }
    let finite = values.iter().copied().filter(|v| v.is_finite());
    let min = finite.clone().fold(f64::INFINITY, f64::min);
    let max = finite.fold(f64::NEG_INFINITY, f64::max);
    let (min, max) = if min.is_finite() {
        (min, max)
    } else {
        (0.0, 0.0)
    };
    Ok(Heatmap {
        n,
        values,
        min,
        max,
        zero_width_cells,
    })
}

/// Writes the heatmap as CSV: a `# min/max/zero_width_cells` comment line,
/// an `i,j,w` header, then one row per cell in row-major order.
pub fn write_csv<W: Write>(mut out: W, hm: &Heatmap) -> io::Result<()> {
    writeln!(
        out,
        "# min = {}, max = {}, zero_width_cells = {}",
        fmt_f64(hm.min),
        fmt_f64(hm.max),
        hm.zero_width_cells
    )?;
    writeln!(out, "i,j,w")?;
    let n = hm.n as usize;
    for j in 0..n {
        for i in 0..n {
            writeln!(out, "{i},{j},{}", fmt_f64(hm.values[j * n + i]))?;
        }
    }
    Ok(())
}
