//! Grid runs: total width, wall time, and ratios against the Taylor baseline.
//!
//! A square domain is tiled with an `n x n` grid of square cells and every
//! requested form is evaluated on every cell. Per form the driver reports
//! the summed enclosure width, the averaged wall time over `repeats` passes,
//! the peak-allocation figure (when the [counting
//! allocator](crate::bench::alloc) is installed), and two ratios against the
//! maximal order-2 Taylor form on the same grid:
//!
//! * `efficacy = total_width(baseline) / total_width(form)` — greater than 1
//!   exactly when the form is tighter than the baseline;
//! * `speedup = time(baseline) / time(form)`.
//!
//! The baseline is always measured internally (and reused, not re-measured,
//! when the form list itself contains the plain maximal `t2`), so requesting
//! `t2` yields ratios of exactly 1.
//!
//! # Cell construction
//!
//! Cells are cut along the *global*
//! [half-grid lines](crate::interval::Interval::half_grid_lines) of the
//! domain: cell `(i, j)` spans `[G[2i], G[2i+2]]` per axis, and the odd
//! lines are exactly the cell centers the forms compute. Adjacent cells
//! therefore share endpoint coordinates *bit for bit*, and every node a
//! form evaluates lies on the lattice a shared [`GridCache`] is keyed to —
//! which is what lets it reuse node evaluations across cells. Cells are
//! ordered row-major, `x` fastest: index `j * n + i`.
//!
//! Runs are single-threaded; widths and ratios are deterministic, wall
//! times and allocation figures are not (and nothing gates on them).

use std::io::{self, Write};
use std::time::{Duration, Instant};

use crate::bench::{alloc, fmt_f64, BenchError, FormSpec};
use crate::forms::{evaluate, CachedPoly, FormKind, GridCache};
use crate::interval::Box2;

/// One form's aggregate results over the grid.
#[derive(Debug, Clone, Copy)]
pub struct GridRow {
    /// The form that was evaluated.
    pub spec: FormSpec,
    /// Sum of enclosure widths over all cells, in row-major cell order.
    pub total_width: f64,
    /// Wall time for one pass over the grid, averaged over the repeats.
    pub total_time_ms: f64,
    /// Baseline time divided by this form's time.
    pub speedup: f64,
    /// Baseline total width divided by this form's total width.
    pub efficacy: f64,
    /// Peak growth in allocated bytes during one pass; 0 when the counting
    /// allocator is not installed.
    pub peak_alloc_bytes: usize,
}

/// The baseline every grid run is measured against.
pub fn baseline_spec() -> FormSpec {
    FormSpec {
        kind: FormKind::Taylor {
            order: 2,
            level: None,
        },
        shared: false,
    }
}

/// The row-major cells of the `n x n` grid covering `domain`.
///
/// See the [module docs](self) for the half-grid-line construction and the
/// bit-identity guarantee for shared edges.
pub fn grid_cells(domain: &Box2, n: u32) -> Result<Vec<Box2>, BenchError> {
    if n == 0 {
        return Err(BenchError::Invalid("grid size must be positive"));
    }
    let gx = domain.x().half_grid_lines(n);
    let gy = domain.y().half_grid_lines(n);
    if gx.is_empty() || gy.is_empty() {
        return Err(BenchError::Invalid("degenerate grid domain"));
    }
    let n = n as usize;
    let mut cells = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            cells.push(Box2::from_endpoints(
                gx[2 * i],
                gx[2 * i + 2],
                gy[2 * j],
                gy[2 * j + 2],
            )?);
        }
    }
    Ok(cells)
}

/// Runs every form over the grid and reports one [`GridRow`] each, in the
/// order requested.
pub fn run_grid(
    f: &CachedPoly,
    domain: &Box2,
    n: u32,
    forms: &[FormSpec],
    repeats: u32,
) -> Result<Vec<GridRow>, BenchError> {
    if forms.is_empty() {
        return Err(BenchError::Invalid("empty form list"));
    }
    if repeats == 0 {
        return Err(BenchError::Invalid("repeats must be positive"));
    }
    let cells = grid_cells(domain, n)?;
    let base = measure_form(f, domain, n, &cells, baseline_spec(), repeats)?;
    forms
        .iter()
        .map(|&spec| {
            let m = if spec == baseline_spec() {
                base
            } else {
                measure_form(f, domain, n, &cells, spec, repeats)?
            };
            Ok(GridRow {
                spec,
                total_width: m.width,
                total_time_ms: m.seconds * 1e3,
                speedup: base.seconds / m.seconds,
                efficacy: base.width / m.width,
                peak_alloc_bytes: m.peak,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
struct Measurement {
    width: f64,
    seconds: f64,
    peak: usize,
}

fn measure_form(
    f: &CachedPoly,
    domain: &Box2,
    n: u32,
    cells: &[Box2],
    spec: FormSpec,
    repeats: u32,
) -> Result<Measurement, BenchError> {
    let mut width = 0.0;
    let mut elapsed = Duration::ZERO;
    for rep in 0..repeats {
        // A fresh cache per pass: building it is part of the measured cost
        // of shared evaluation.
        let t0 = Instant::now();
        let cache = spec.shared.then(|| GridCache::for_grid(domain, n));
        let mut w = 0.0;
        for b in cells {
            w += evaluate(spec.kind, f, b, cache.as_ref())?.width();
        }
        elapsed += t0.elapsed();
        if rep == 0 {
            width = w;
        }
    }
    // One extra untimed pass for the best-effort peak-allocation figure, so
    // the accounting never perturbs the timings.
    let (pass, peak) = alloc::measure_peak(|| -> Result<(), BenchError> {
        let cache = spec.shared.then(|| GridCache::for_grid(domain, n));
        for b in cells {
            evaluate(spec.kind, f, b, cache.as_ref())?;
        }
        Ok(())
    });
    pass?;
    Ok(Measurement {
        width,
        seconds: elapsed.as_secs_f64() / repeats as f64,
        peak,
    })
}

/// Writes the rows as CSV: header
/// `function,form,sharing,repeats,total_time_ms,total_width,speedup,efficacy,peak_alloc_bytes`,
/// floats via [`fmt_f64`]. The `form` column carries the base token plus any
/// explicit level; sharing is split into its own column.
pub fn write_csv<W: Write>(
    mut out: W,
    function: &str,
    repeats: u32,
    rows: &[GridRow],
) -> io::Result<()> {
    writeln!(
        out,
        "function,form,sharing,repeats,total_time_ms,total_width,speedup,efficacy,peak_alloc_bytes"
    )?;
    for row in rows {
        let mut form = row.spec.base_token().to_string();
        if let Some(level) = row.spec.level() {
            form.push_str(&format!("@{level}"));
        }
        writeln!(
            out,
            "{function},{form},{},{repeats},{},{},{},{},{}",
            if row.spec.shared {
                "shared"
            } else {
                "unshared"
            },
            fmt_f64(row.total_time_ms),
            fmt_f64(row.total_width),
            fmt_f64(row.speedup),
            fmt_f64(row.efficacy),
            row.peak_alloc_bytes,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::corpus;

    fn specs(text: &str) -> Vec<FormSpec> {
        FormSpec::parse_list(text).unwrap()
    }

    fn flagship_domain() -> Box2 {
        Box2::from_endpoints(-1.2, 1.2, -1.2, 1.2).unwrap()
    }

    #[test]
    fn cells_share_edges_bit_exactly_and_cover_the_domain() {
        let domain = flagship_domain();
        let n = 8usize;
        let cells = grid_cells(&domain, n as u32).unwrap();
        assert_eq!(cells.len(), n * n);
        let at = |i: usize, j: usize| &cells[j * n + i];

        for j in 0..n {
            for i in 0..n {
                let c = at(i, j);
                assert!(c.is_square(), "cell ({i}, {j})");
                if i + 1 < n {
                    assert_eq!(c.x().hi().to_bits(), at(i + 1, j).x().lo().to_bits());
                    assert_eq!(c.y().lo().to_bits(), at(i + 1, j).y().lo().to_bits());
                }
                if j + 1 < n {
                    assert_eq!(c.y().hi().to_bits(), at(i, j + 1).y().lo().to_bits());
                }
            }
        }
        assert_eq!(at(0, 0).x().lo(), -1.2);
        assert_eq!(at(0, 0).y().lo(), -1.2);
        assert_eq!(at(n - 1, n - 1).x().hi(), 1.2);
        assert_eq!(at(n - 1, n - 1).y().hi(), 1.2);
    }

    #[test]
    fn total_width_matches_independent_reevaluation() {
        let f = CachedPoly::new(corpus("clover-4").unwrap());
        let domain = flagship_domain();
        let rows = run_grid(&f, &domain, 4, &specs("t3"), 1).unwrap();

        let mut manual = 0.0;
        for b in grid_cells(&domain, 4).unwrap() {
            manual += evaluate(rows[0].spec.kind, &f, &b, None).unwrap().width();
        }
        // Same summation order, same code path: identical bits, which is
        // well within the documented 1e-12 relative agreement.
        assert_eq!(rows[0].total_width.to_bits(), manual.to_bits());
    }

    #[test]
    fn sharing_never_changes_total_width() {
        let f = CachedPoly::new(corpus("grass").unwrap());
        let domain = flagship_domain();
        for (a, b) in [("l3", "l3+shared"), ("h4", "h4+shared")] {
            let rows = run_grid(&f, &domain, 4, &specs(&format!("{a},{b}")), 1).unwrap();
            assert_eq!(
                rows[0].total_width.to_bits(),
                rows[1].total_width.to_bits(),
                "{a} vs {b}"
            );
        }
    }

    #[test]
    fn baseline_row_reports_unit_ratios() {
        let f = CachedPoly::new(corpus("clover-4").unwrap());
        let rows = run_grid(&f, &flagship_domain(), 2, &specs("t2"), 2).unwrap();
        assert_eq!(rows[0].efficacy, 1.0);
        assert_eq!(rows[0].speedup, 1.0);
    }

    #[test]
    fn higher_order_forms_are_more_efficacious() {
        let f = CachedPoly::new(corpus("clover-4").unwrap());
        let rows = run_grid(&f, &flagship_domain(), 8, &specs("t2,t3,t4"), 1).unwrap();
        let eff: Vec<f64> = rows.iter().map(|r| r.efficacy).collect();
        assert_eq!(eff[0], 1.0);
        assert!(eff[1] > 1.02, "t3 efficacy {}", eff[1]);
        assert!(eff[2] > eff[1] - 0.01, "t4 efficacy {}", eff[2]);
    }

    #[test]
    fn csv_has_the_documented_columns() {
        let f = CachedPoly::new(corpus("grass").unwrap());
        let rows = run_grid(&f, &flagship_domain(), 2, &specs("t2,l3+shared"), 1).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, "grass", 1, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "function,form,sharing,repeats,total_time_ms,total_width,speedup,efficacy,peak_alloc_bytes"
        );
        let first = lines.next().unwrap();
        assert!(first.starts_with("grass,t2,unshared,1,"));
        assert_eq!(first.split(',').count(), 9);
        let second = lines.next().unwrap();
        assert!(second.starts_with("grass,l3,shared,1,"));
        assert!(lines.next().is_none());
    }

    #[test]
    fn rejects_degenerate_parameters() {
        let f = CachedPoly::new(corpus("grass").unwrap());
        let domain = flagship_domain();
        assert!(run_grid(&f, &domain, 0, &specs("t2"), 1).is_err());
        assert!(run_grid(&f, &domain, 2, &specs("t2"), 0).is_err());
        assert!(run_grid(&f, &domain, 2, &[], 1).is_err());
    }
}
