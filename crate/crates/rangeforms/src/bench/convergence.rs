//! Radius sweeps: enclosure quality on a nest of shrinking boxes.
//!
//! For each radius `r` the driver evaluates every requested form on the
//! square box of radius `r` around a fixed midpoint, brackets the true range
//! with the [oracle](crate::oracle), and records the Hausdorff distance
//! between each enclosure and the oracle range. On a log–log plot of
//! distance against radius each form traces a line whose slope is its
//! convergence order; [`fit_slope`] recovers that slope by least squares.

use std::io::{self, Write};

use crate::bench::{fmt_f64, BenchError, FormSpec};
use crate::forms::{evaluate, CachedPoly};
use crate::interval::{Box2, Interval};
use crate::oracle::{oracle_range, OracleRange};

/// One form's result on one box of the sweep.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceCell {
    /// The form that was evaluated.
    pub spec: FormSpec,
    /// Its enclosure of the range over the box.
    pub enclosure: Interval,
    /// Hausdorff distance from the enclosure to the oracle range.
    pub hausdorff: f64,
}

/// All results for one radius.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    /// Box radius.
    pub radius: f64,
    /// Certified reference range for the box.
    pub oracle: OracleRange,
    /// Per-form cells, in the order the forms were requested.
    pub cells: Vec<ConvergenceCell>,
}

/// `count` logarithmically spaced values from `start` to `stop` inclusive.
pub fn logspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let (a, b) = (start.log10(), stop.log10());
            (0..count)
                .map(|k| 10f64.powf(a + (b - a) * k as f64 / (count - 1) as f64))
                .collect()
        }
    }
}

/// Runs the sweep: one row per radius, one cell per form.
///
/// The oracle brackets each box's true range to `oracle_resolution` (subject
/// to its internal budget; the achieved resolution is recorded in the row).
/// Cells are evaluated without a node cache — each box stands alone, so
/// there is nothing to share — and a `+shared` marker on a form is ignored
/// here.
pub fn run_convergence(
    f: &CachedPoly,
    midpoint: (f64, f64),
    radii: &[f64],
    forms: &[FormSpec],
    oracle_resolution: f64,
) -> Result<Vec<ConvergenceRow>, BenchError> {
    if forms.is_empty() {
        return Err(BenchError::Invalid("empty form list"));
    }
    if radii.is_empty() {
        return Err(BenchError::Invalid("empty radius list"));
    }
    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        let b = Box2::square(midpoint, r)?;
        let oracle = oracle_range(f.base(), &b, oracle_resolution);
        let mut cells = Vec::with_capacity(forms.len());
        for spec in forms {
            let enclosure = evaluate(spec.kind, f, &b, None)?;
            cells.push(ConvergenceCell {
                spec: *spec,
                enclosure,
                hausdorff: crate::interval::hausdorff(enclosure, oracle.range),
            });
        }
        rows.push(ConvergenceRow {
            radius: r,
            oracle,
            cells,
        });
    }
    Ok(rows)
}

/// Least-squares slope of `ln hausdorff` against `ln radius` for the form at
/// `form_index`, the empirical convergence order.
///
/// Rows with a non-positive or non-finite distance are skipped (an exact
/// enclosure has nothing to fit); `None` when fewer than two usable rows
/// remain or the radii do not vary.
pub fn fit_slope(rows: &[ConvergenceRow], form_index: usize) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|row| {
            let q = row.cells.get(form_index)?.hausdorff;
            (row.radius > 0.0 && q > 0.0 && q.is_finite()).then(|| (row.radius.ln(), q.ln()))
        })
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Writes the sweep as CSV.
///
/// Header `radius,f_lo,f_hi,resolution` followed by `<form>_lo`,
/// `<form>_hi`, `<form>_q` triples per requested form; one data row per
/// radius; fitted slopes appended as `# slope <form> = ...` comment lines.
/// All floats use [`fmt_f64`], so equal runs produce byte-identical files.
pub fn write_csv<W: Write>(mut out: W, rows: &[ConvergenceRow]) -> io::Result<()> {
    let specs: Vec<FormSpec> = match rows.first() {
        Some(row) => row.cells.iter().map(|c| c.spec).collect(),
        None => Vec::new(),
    };
    write!(out, "radius,f_lo,f_hi,resolution")?;
    for spec in &specs {
        write!(out, ",{spec}_lo,{spec}_hi,{spec}_q")?;
    }
    writeln!(out)?;
    for row in rows {
        write!(
            out,
            "{},{},{},{}",
            fmt_f64(row.radius),
            fmt_f64(row.oracle.range.lo()),
            fmt_f64(row.oracle.range.hi()),
            fmt_f64(row.oracle.resolution),
        )?;
        for cell in &row.cells {
            write!(
                out,
                ",{},{},{}",
                fmt_f64(cell.enclosure.lo()),
                fmt_f64(cell.enclosure.hi()),
                fmt_f64(cell.hausdorff),
            )?;
        }
        writeln!(out)?;
    }
    for (i, spec) in specs.iter().enumerate() {
        match fit_slope(rows, i) {
            Some(s) => writeln!(out, "# slope {spec} = {}", fmt_f64(s))?,
            None => writeln!(out, "# slope {spec} = n/a")?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{corpus, Poly2};

    fn specs(text: &str) -> Vec<FormSpec> {
        FormSpec::parse_list(text).unwrap()
    }

    #[test]
    fn logspace_endpoints_and_spacing() {
        assert!(logspace(1e-3, 1e-1, 0).is_empty());
        assert_eq!(logspace(2.5, 9.0, 1), vec![2.5]);

        let v = logspace(1e-3, 1e-1, 5);
        assert_eq!(v.len(), 5);
        assert!((v[0] - 1e-3).abs() < 1e-15);
        assert!((v[4] - 1e-1).abs() < 1e-13);
        for w in v.windows(2) {
            let ratio = w[1] / w[0];
            assert!((ratio - 10f64.powf(0.5)).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_polynomial_is_enclosed_exactly() {
        let f = CachedPoly::new(Poly2::constant(3.0));
        let rows = run_convergence(
            &f,
            (0.5, -0.25),
            &logspace(1e-2, 1e-1, 3),
            &specs("t2,l3,h4"),
            1e-9,
        )
        .unwrap();
        for row in &rows {
            for cell in &row.cells {
                assert_eq!(cell.hausdorff, 0.0, "{}", cell.spec);
            }
        }
        for i in 0..3 {
            assert_eq!(fit_slope(&rows, i), None);
        }
    }

    #[test]
    fn flagship_cell_matches_published_value() {
        let f = CachedPoly::new(corpus("clover-4").unwrap());
        let rows = run_convergence(&f, (0.1, 0.2), &[0.1], &specs("t2"), 1e-6).unwrap();
        let cell = rows[0].cells[0];
        assert!((cell.enclosure.lo() - (-1.4303)).abs() < 2e-4);
        assert!((cell.enclosure.hi() - (-0.6978)).abs() < 2e-4);
        assert!((cell.hausdorff - 0.2667).abs() < 2e-4);
    }

    #[test]
    fn slopes_recover_convergence_orders() {
        // The cubic terms are chosen so the remainder bound is *not* attained
        // (a symmetric choice like x^2 y + x y^2 peaks at the same corners as
        // the principal part, making the order-3 form exact and leaving no
        // distance to fit).
        let f = CachedPoly::new(Poly2::from_monomials(&[
            (3, 0, 1.0),
            (2, 1, 1.0),
            (1, 2, -1.0),
            (0, 3, 2.0),
            (1, 0, 0.5),
            (0, 1, -1.0),
        ]));
        let rows = run_convergence(
            &f,
            (0.3, 0.4),
            &logspace(1e-3, 1e-2, 4),
            // Degree 3: the *maximal* order-3 form would be exact here and
            // leave nothing to fit, so pin its level to keep an interval
            // tail in play.
            &specs("t2,t3@3"),
            1e-10,
        )
        .unwrap();
        let s2 = fit_slope(&rows, 0).unwrap();
        assert!((1.7..2.6).contains(&s2), "t2 slope {s2}");
        let s3 = fit_slope(&rows, 1).unwrap();
        assert!((2.7..3.6).contains(&s3), "t3 slope {s3}");
    }

    #[test]
    fn csv_is_deterministic_with_slope_comments() {
        let f = CachedPoly::new(corpus("grass").unwrap());
        let rows = run_convergence(
            &f,
            (0.1, 0.1),
            &logspace(1e-3, 1e-2, 3),
            &specs("t2,h4"),
            1e-8,
        )
        .unwrap();
        let mut a = Vec::new();
        write_csv(&mut a, &rows).unwrap();
        let mut b = Vec::new();
        write_csv(&mut b, &rows).unwrap();
        assert_eq!(a, b);

        let text = String::from_utf8(a).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "radius,f_lo,f_hi,resolution,t2_lo,t2_hi,t2_q,h4_lo,h4_hi,h4_q"
        );
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
        assert!(text.contains("# slope t2 = "));
        assert!(text.contains("# slope h4 = "));
    }

    #[test]
    fn rejects_empty_inputs_and_bad_radii() {
        let f = CachedPoly::new(corpus("grass").unwrap());
        assert!(run_convergence(&f, (0.0, 0.0), &[0.1], &[], 1e-6).is_err());
        assert!(run_convergence(&f, (0.0, 0.0), &[], &specs("t2"), 1e-6).is_err());
        assert!(run_convergence(&f, (0.0, 0.0), &[-1.0], &specs("t2"), 1e-6).is_err());
    }
}
