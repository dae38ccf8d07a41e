//! End-to-end acceptance checks for the crate's headline claims.
//!
//! Each check re-runs one complete experiment — golden convergence cells,
//! empirical convergence orders, grid efficacy tables, node-sharing timing,
//! randomized soundness and kernel-exactness sweeps, heatmap sign structure,
//! and the Delannoy weight table — and prints exactly one
//! `acceptance <name>: PASS`/`FAIL` line.
//!
//! The target is a plain binary (`harness = false`) so the checks run
//! sequentially in a fixed order: two of them compare wall-clock timings or
//! gate on a runtime budget, and libtest's parallel scheduling would
//! contaminate those readings. Command-line arguments act as substring
//! filters on check names (flags are ignored), mirroring libtest filtering;
//! the process exits nonzero if any selected check fails.

use std::env;
use std::fmt::Display;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rangeforms::bench::convergence::{fit_slope, logspace, run_convergence};
use rangeforms::bench::golden::{
    run_verify, Section, VerifyReport, DELANNOY_ROWS, EFFICACY_CURVES, EFFICACY_DENSE,
};
use rangeforms::bench::grid::{grid_cells, run_grid};
use rangeforms::bench::heatmap::run_heatmap;
use rangeforms::bench::FormSpec;
use rangeforms::exact_range::{
    centered_to_poly2, range_biv_cubic, range_biv_linear, range_biv_quadratic, range_uni_cubic,
    range_uni_linear, range_uni_quadratic, split_bicubic, split_biquadratic, CoeffGrid,
    KernelError,
};
use rangeforms::forms::{delannoy, evaluate, CachedPoly, FormKind, GridCache};
use rangeforms::interval::{hausdorff, Box2, Interval};
use rangeforms::oracle::oracle_range;
use rangeforms::poly::{corpus, corpus_domain, Poly2, CORPUS_NAMES};

type CheckResult = Result<(), String>;

/// Fails the enclosing check with a formatted reason unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($why:tt)+) => {
        if !$cond {
            return Err(format!($($why)+));
        }
    };
}

fn main() -> ExitCode {
    let filters: Vec<String> = env::args()
        .skip(1)
        .filter(|arg| !arg.starts_with('-'))
        .collect();
    let checks: [(&str, fn() -> CheckResult); 11] = [
        (
            "golden_convergence_cells_clover",
            golden_convergence_cells_clover,
        ),
        (
            "golden_convergence_cells_grass",
            golden_convergence_cells_grass,
        ),
        ("convergence_slopes_meet_orders", convergence_slopes_meet_orders),
        ("golden_efficacy_dense_corpus", golden_efficacy_dense_corpus),
        ("golden_efficacy_curve_corpus", golden_efficacy_curve_corpus),
        (
            "shared_grid_no_slower_bit_identical",
            shared_grid_no_slower_bit_identical,
        ),
        (
            "random_subbox_enclosure_soundness",
            random_subbox_enclosure_soundness,
        ),
        ("random_kernels_match_oracle", random_kernels_match_oracle),
        (
            "taylor_order_one_delegates_bit_exact",
            taylor_order_one_delegates_bit_exact,
        ),
        ("heatmap_sign_structure", heatmap_sign_structure),
        ("delannoy_rows", delannoy_rows),
    ];

    let mut ran = 0usize;
    let mut failures = 0usize;
    for (name, check) in checks {
        if !filters.is_empty() && !filters.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        ran += 1;
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|payload| Err(panic_reason(payload.as_ref())));
        match outcome {
            Ok(()) => println!("acceptance {name}: PASS ({:.1?})", started.elapsed()),
            Err(why) => {
                failures += 1;
                println!(
                    "acceptance {name}: FAIL ({:.1?})\n    {why}",
                    started.elapsed()
                );
            }
        }
    }
    println!("acceptance: {ran} checks run, {failures} failures");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn panic_reason(payload: &(dyn std::any::Any + Send)) -> String {
    if let Some(text) = payload.downcast_ref::<&str>() {
        format!("panicked: {text}")
    } else if let Some(text) = payload.downcast_ref::<String>() {
        format!("panicked: {text}")
    } else {
        "panicked".to_string()
    }
}

fn fail(e: impl Display) -> String {
    e.to_string()
}

fn fun(name: &str) -> CachedPoly {
    CachedPoly::new(corpus(name).expect("corpus function"))
}

fn dom(name: &str) -> Box2 {
    corpus_domain(name).expect("corpus domain")
}

fn spec(token: &str) -> FormSpec {
    token.parse().expect("form token")
}

/// The non-passing lines of a verification report, joined for a FAIL reason.
fn report_problems(report: &VerifyReport) -> String {
    let mut buf = Vec::new();
    report
        .write_text(&mut buf)
        .expect("writing a report to memory cannot fail");
    String::from_utf8(buf)
        .expect("reports are ASCII")
        .lines()
        .filter(|line| !line.starts_with("PASS "))
        .collect::<Vec<_>>()
        .join("\n    ")
}

/// A random square sub-box of `domain`: radius log-uniform between `1e-3`
/// and 30% of the domain radius, center uniform over the positions that keep
/// the box inside the domain.
fn random_subbox(rng: &mut ChaCha8Rng, domain: &Box2) -> Box2 {
    let (dmx, dmy) = domain.midpoint();
    let (dr, _) = domain.radii();
    let (ln_lo, ln_hi) = ((1e-3f64).ln(), (0.3 * dr).ln());
    let r = (ln_lo + rng.gen::<f64>() * (ln_hi - ln_lo)).exp();
    let play = dr - r;
    let cx = dmx + rng.gen_range(-1.0..1.0) * play;
    let cy = dmy + rng.gen_range(-1.0..1.0) * play;
    Box2::square((cx, cy), r).expect("sub-box radius is positive and finite")
}

/// Golden radius-sweep cells for clover-4 around (0.1, 0.2): all ten
/// (range, distance) cells at both recorded radii, at the recorded
/// last-printed-digit tolerances.
fn golden_convergence_cells_clover() -> CheckResult {
    let report = run_verify(&[Section::Fig5], 1.0).map_err(fail)?;
    ensure!(
        report.cells.len() == 10,
        "expected 10 recorded cells, re-ran {}",
        report.cells.len()
    );
    ensure!(report.passed(), "{}", report_problems(&report));
    Ok(())
}

/// Golden radius-sweep cells for grass around (0.1, 0.1), as above.
fn golden_convergence_cells_grass() -> CheckResult {
    let report = run_verify(&[Section::Fig6], 1.0).map_err(fail)?;
    ensure!(
        report.cells.len() == 10,
        "expected 10 recorded cells, re-ran {}",
        report.cells.len()
    );
    ensure!(report.passed(), "{}", report_problems(&report));
    Ok(())
}

/// Empirical convergence orders: least-squares log-log slopes over eight
/// radii in [10^-3.5, 10^-1.5] at both sweep configurations must reach the
/// proven order of each form (minus fitting slack), with the whole
/// experiment — oracle references at resolution 1e-10 included — finishing
/// inside one minute.
fn convergence_slopes_meet_orders() -> CheckResult {
    let started = Instant::now();
    let radii = logspace(10f64.powf(-3.5), 10f64.powf(-1.5), 8);
    let forms = FormSpec::parse_list("t2,t3,t4,l3,h4").expect("form tokens");
    let floors = [1.75, 2.75, 3.75, 2.75, 3.75];
    for (name, midpoint) in [("clover-4", (0.1, 0.2)), ("grass", (0.1, 0.1))] {
        let f = fun(name);
        let rows = run_convergence(&f, midpoint, &radii, &forms, 1e-10).map_err(fail)?;
        for (index, (form, &floor)) in forms.iter().zip(&floors).enumerate() {
            let slope = fit_slope(&rows, index)
                .ok_or_else(|| format!("{name} {form}: slope fit is undefined"))?;
            ensure!(
                slope >= floor,
                "{name} {form}: empirical order {slope:.3} is below the required {floor}"
            );
        }
    }
    let elapsed = started.elapsed();
    ensure!(
        elapsed <= Duration::from_secs(60),
        "sweeps took {elapsed:.1?}, budget is 60 s"
    );
    Ok(())
}

/// Golden efficacy cells on the dense corpus (the clovers and grass), each
/// within the recorded +-0.003.
fn golden_efficacy_dense_corpus() -> CheckResult {
    let report = run_verify(&[Section::Table2], 1.0).map_err(fail)?;
    ensure!(
        report.cells.len() == EFFICACY_DENSE.len(),
        "expected {} recorded cells, re-ran {}",
        EFFICACY_DENSE.len(),
        report.cells.len()
    );
    ensure!(report.passed(), "{}", report_problems(&report));
    Ok(())
}

/// Golden efficacy cells on the curve corpus (cardioid, lemniscate,
/// octic-flower), each within the recorded +-0.003.
fn golden_efficacy_curve_corpus() -> CheckResult {
    let report = run_verify(&[Section::Table5], 1.0).map_err(fail)?;
    ensure!(
        report.cells.len() == EFFICACY_CURVES.len(),
        "expected {} recorded cells, re-ran {}",
        EFFICACY_CURVES.len(),
        report.cells.len()
    );
    ensure!(report.passed(), "{}", report_problems(&report));
    Ok(())
}

/// Node sharing pays for itself: on every corpus function the shared
/// recursive-Lagrange grid run is no slower than the unshared one (best of
/// up to three attempts of six timed passes each, the same treatment for
/// both arms), and sharing never changes an output bit — neither the grid
/// totals nor any individual cell enclosure, Hermite included.
fn shared_grid_no_slower_bit_identical() -> CheckResult {
    let specs = [spec("l3"), spec("l3+shared")];
    for name in CORPUS_NAMES {
        let f = fun(name);
        let domain = dom(name);
        let mut best = [f64::INFINITY; 2];
        let mut timing_ok = false;
        for _attempt in 0..3 {
            let rows = run_grid(&f, &domain, 32, &specs, 6).map_err(fail)?;
            ensure!(
                rows[0].total_width.to_bits() == rows[1].total_width.to_bits(),
                "{name}: sharing changed the total width: {} vs {}",
                rows[1].total_width,
                rows[0].total_width
            );
            for (slot, row) in best.iter_mut().zip(&rows) {
                *slot = slot.min(row.total_time_ms);
            }
            if best[1] <= best[0] {
                timing_ok = true;
                break;
            }
        }
        ensure!(
            timing_ok,
            "{name}: shared grid stayed slower over three attempts \
             ({:.3} ms vs {:.3} ms unshared)",
            best[1],
            best[0]
        );

        let cache = GridCache::for_grid(&domain, 32);
        let cells = grid_cells(&domain, 32).map_err(fail)?;
        for kind in [
            FormKind::Lagrange { level: None },
            FormKind::Hermite { level: None },
        ] {
            for cell in &cells {
                let with = evaluate(kind, &f, cell, Some(&cache)).map_err(fail)?;
                let without = evaluate(kind, &f, cell, None).map_err(fail)?;
                ensure!(
                    with.lo().to_bits() == without.lo().to_bits()
                        && with.hi().to_bits() == without.hi().to_bits(),
                    "{name} {kind:?}: cache changed bits on the cell centered at {:?}",
                    cell.midpoint()
                );
            }
        }
    }
    Ok(())
}

/// Soundness sweep: on 200 random square sub-boxes per corpus function, all
/// five maximal forms contain every value of an inclusive 60x60 sample grid
/// — zero violations.
fn random_subbox_enclosure_soundness() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let kinds = [
        FormKind::Taylor {
            order: 2,
            level: None,
        },
        FormKind::Taylor {
            order: 3,
            level: None,
        },
        FormKind::Taylor {
            order: 4,
            level: None,
        },
        FormKind::Lagrange { level: None },
        FormKind::Hermite { level: None },
    ];
    for name in CORPUS_NAMES {
        let p = corpus(name).expect("corpus function");
        let f = CachedPoly::new(p.clone());
        let domain = dom(name);
        for sample in 0..200 {
            let b = random_subbox(&mut rng, &domain);
            let mut enclosures = Vec::with_capacity(kinds.len());
            for kind in kinds {
                enclosures.push((kind, evaluate(kind, &f, &b, None).map_err(fail)?));
            }
            let (xl, xh) = (b.x().lo(), b.x().hi());
            let (yl, yh) = (b.y().lo(), b.y().hi());
            for i in 0..60 {
                let x = if i == 59 {
                    xh
                } else {
                    (xl + (xh - xl) * (i as f64 / 59.0)).clamp(xl, xh)
                };
                for j in 0..60 {
                    let y = if j == 59 {
                        yh
                    } else {
                        (yl + (yh - yl) * (j as f64 / 59.0)).clamp(yl, yh)
                    };
                    let v = p.eval(x, y);
                    for &(kind, enc) in &enclosures {
                        ensure!(
                            enc.contains(v),
                            "{name} sample {sample}: {kind:?} over the box centered at {:?} \
                             with radius {:.3e} misses f({x}, {y}) = {v} \
                             (enclosure [{}, {}])",
                            b.midpoint(),
                            b.x().radius(),
                            enc.lo(),
                            enc.hi()
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

const KERNEL_SAMPLES: usize = 500;
const ORACLE_RES: f64 = 1e-9;

fn coeff(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-2.0..2.0)
}

/// Univariate draws zero each coefficient with probability 1/8 so the
/// kernels' degenerate dispatch branches (vanishing leading coefficient,
/// guaranteed monotonicity) see traffic too. Bivariate draws stay dense:
/// a polynomial that is independent of one variable attains its extrema
/// along whole ridges, which the subdivision oracle resolves very slowly.
fn sparse_coeff(rng: &mut ChaCha8Rng) -> f64 {
    if rng.gen_range(0..8) == 0 {
        0.0
    } else {
        coeff(rng)
    }
}

fn kernel_radius(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.05..1.5)
}

/// Checks one univariate kernel result against the oracle on the thin box
/// `[-r, r] x {0}`.
fn check_univariate(kernel: &str, enclosure: Interval, p: &Poly2, r: f64, case: &str) -> CheckResult {
    let b = Box2::new(Interval::symmetric(r), Interval::point(0.0));
    let o = oracle_range(p, &b, ORACLE_RES);
    ensure!(
        o.resolution <= ORACLE_RES,
        "{kernel} {case}: oracle stalled at resolution {:.3e}",
        o.resolution
    );
    let scale = 1.0 + enclosure.magnitude();
    let d = hausdorff(enclosure, o.range);
    ensure!(
        d <= 2e-9 * scale,
        "{kernel} {case}: Hausdorff distance {d:.3e} to the oracle range exceeds {:.3e}",
        2e-9 * scale
    );
    Ok(())
}

/// 500 random samples of one univariate kernel class.
fn univariate_class(
    kernel: &str,
    degree: usize,
    eval: impl Fn(&[f64; 4], f64) -> Interval,
    seed: u64,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 0..KERNEL_SAMPLES {
        let mut c = [0.0f64; 4];
        for v in c.iter_mut().take(degree + 1) {
            *v = sparse_coeff(&mut rng);
        }
        let r = kernel_radius(&mut rng);
        let enclosure = eval(&c, r);
        let monomials: Vec<(u32, u32, f64)> =
            (0..=degree).map(|i| (i as u32, 0, c[i])).collect();
        let p = Poly2::from_monomials(&monomials);
        let case = format!("sample {sample} (c = {:?}, r = {r})", &c[..=degree]);
        check_univariate(kernel, enclosure, &p, r, &case)?;
    }
    Ok(())
}

/// 500 random samples of one exact bivariate kernel class. The coefficient
/// grid is expanded around the origin, so the oracle sees bit-identical
/// coefficients.
fn bivariate_class(
    kernel: &str,
    supported: impl Fn(usize, usize) -> bool,
    eval: impl Fn(&CoeffGrid, f64, f64) -> Result<Interval, KernelError>,
    seed: u64,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 0..KERNEL_SAMPLES {
        let mut g: CoeffGrid = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                if supported(i, j) {
                    g[i][j] = coeff(&mut rng);
                }
            }
        }
        let (rx, ry) = (kernel_radius(&mut rng), kernel_radius(&mut rng));
        let enclosure = eval(&g, rx, ry).map_err(fail)?;
        let case = format!("sample {sample} (rx = {rx}, ry = {ry})");
        let p = centered_to_poly2(&g, (0.0, 0.0));
        let b = Box2::new(Interval::symmetric(rx), Interval::symmetric(ry));
        let o = oracle_range(&p, &b, ORACLE_RES);
        ensure!(
            o.resolution <= ORACLE_RES,
            "{kernel} {case}: oracle stalled at resolution {:.3e}",
            o.resolution
        );
        let scale = 1.0 + enclosure.magnitude();
        let d = hausdorff(enclosure, o.range);
        ensure!(
            d <= 2e-9 * scale,
            "{kernel} {case}: Hausdorff distance {d:.3e} to the oracle range exceeds {:.3e}",
            2e-9 * scale
        );
    }
    Ok(())
}

/// 500 random samples of one split kernel class: the part-plus-residual sum
/// must enclose the full polynomial's range, each part must be the exact
/// range of its component, and the sum must stay within the certified sum
/// of the true component ranges.
fn split_class(
    kernel: &str,
    per_axis_power: usize,
    split: impl Fn(&CoeffGrid, f64, f64) -> Result<(Interval, Interval), KernelError>,
    seed: u64,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 0..KERNEL_SAMPLES {
        let mut g: CoeffGrid = [[0.0; 4]; 4];
        for i in 0..=per_axis_power {
            for j in 0..=per_axis_power {
                g[i][j] = coeff(&mut rng);
            }
        }
        let (rx, ry) = (kernel_radius(&mut rng), kernel_radius(&mut rng));
        let case = format!("sample {sample} (rx = {rx}, ry = {ry})");
        let (part, resid) = split(&g, rx, ry).map_err(fail)?;
        let enclosure = part + resid;
        let b = Box2::new(Interval::symmetric(rx), Interval::symmetric(ry));

        let p = centered_to_poly2(&g, (0.0, 0.0));
        let o = oracle_range(&p, &b, ORACLE_RES);
        ensure!(
            o.resolution <= ORACLE_RES,
            "{kernel} {case}: oracle stalled at resolution {:.3e}",
            o.resolution
        );
        let scale = 1.0 + enclosure.magnitude();
        let slack = 1e-12 * scale;
        ensure!(
            enclosure.lo() <= o.range.lo() + slack && enclosure.hi() >= o.range.hi() - slack,
            "{kernel} {case}: sum [{}, {}] fails to enclose the oracle range [{}, {}]",
            enclosure.lo(),
            enclosure.hi(),
            o.range.lo(),
            o.range.hi()
        );

        // Split the grid the same way the kernel does: total degree at most
        // `per_axis_power` versus everything above it.
        let mut part_grid: CoeffGrid = [[0.0; 4]; 4];
        let mut resid_grid: CoeffGrid = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                if i + j <= per_axis_power {
                    part_grid[i][j] = g[i][j];
                } else {
                    resid_grid[i][j] = g[i][j];
                }
            }
        }
        let mut certified_sum = Interval::ZERO;
        for (label, grid, got) in [
            ("total-degree part", &part_grid, part),
            ("residual", &resid_grid, resid),
        ] {
            let component = centered_to_poly2(grid, (0.0, 0.0));
            let oc = oracle_range(&component, &b, ORACLE_RES);
            ensure!(
                oc.resolution <= ORACLE_RES,
                "{kernel} {case}: {label} oracle stalled at resolution {:.3e}",
                oc.resolution
            );
            let comp_scale = 1.0 + got.magnitude();
            let d = hausdorff(got, oc.range);
            ensure!(
                d <= 2e-9 * comp_scale,
                "{kernel} {case}: {label} range is off by {d:.3e} (limit {:.3e})",
                2e-9 * comp_scale
            );
            certified_sum = certified_sum + oc.outer();
        }
        ensure!(
            enclosure.lo() >= certified_sum.lo() - slack
                && enclosure.hi() <= certified_sum.hi() + slack,
            "{kernel} {case}: sum [{}, {}] exceeds the certified component sum [{}, {}]",
            enclosure.lo(),
            enclosure.hi(),
            certified_sum.lo(),
            certified_sum.hi()
        );
    }
    Ok(())
}

/// Kernel-vs-oracle sweep: 500 random centered polynomials per kernel
/// class. Exact kernels must sit within `2e-9 * scale` of the oracle range
/// (oracle resolution 1e-9); split kernels must enclose and must not exceed
/// the certified sum of their components' true ranges.
fn random_kernels_match_oracle() -> CheckResult {
    univariate_class("range_uni_linear", 1, |c, r| range_uni_linear([c[0], c[1]], r), 801)?;
    univariate_class(
        "range_uni_quadratic",
        2,
        |c, r| range_uni_quadratic([c[0], c[1], c[2]], r),
        802,
    )?;
    univariate_class(
        "range_uni_cubic",
        3,
        |c, r| range_uni_cubic([c[0], c[1], c[2], c[3]], r),
        803,
    )?;
    bivariate_class("range_biv_linear", |i, j| i + j <= 1, range_biv_linear, 804)?;
    bivariate_class(
        "range_biv_quadratic",
        |i, j| i + j <= 2,
        range_biv_quadratic,
        805,
    )?;
    bivariate_class("range_biv_cubic", |i, j| i + j <= 3, range_biv_cubic, 806)?;
    split_class("split_biquadratic", 2, split_biquadratic, 807)?;
    split_class("split_bicubic", 3, split_bicubic, 808)?;
    Ok(())
}

/// The order-1 and order-2 Taylor forms agree bit for bit at every level:
/// both reduce to midpoint value plus first-derivative remainder terms, so
/// the order-1 form delegates to the order-2 code path.
fn taylor_order_one_delegates_bit_exact() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for name in CORPUS_NAMES {
        let f = fun(name);
        let domain = dom(name);
        let mut boxes = vec![domain];
        boxes.extend((0..50).map(|_| random_subbox(&mut rng, &domain)));
        for (index, b) in boxes.iter().enumerate() {
            for level in [Some(2), Some(3), Some(4), None] {
                let one = evaluate(FormKind::Taylor { order: 1, level }, &f, b, None)
                    .map_err(fail)?;
                let two = evaluate(FormKind::Taylor { order: 2, level }, &f, b, None)
                    .map_err(fail)?;
                ensure!(
                    one.lo().to_bits() == two.lo().to_bits()
                        && one.hi().to_bits() == two.hi().to_bits(),
                    "{name} box {index} level {level:?}: order 1 gave [{}, {}], \
                     order 2 gave [{}, {}]",
                    one.lo(),
                    one.hi(),
                    two.lo(),
                    two.hi()
                );
            }
        }
    }
    Ok(())
}

/// Heatmap sign structure on 32x32 grids: t3 beats t2 on at least 99% of
/// clover-4 cells; t4 never loses to t3 there by more than W = 0.02; and
/// both l3-vs-t3 and h4-vs-t4 split the corpus — some function has cells of
/// both signs, so neither form dominates.
fn heatmap_sign_structure() -> CheckResult {
    let clover = fun("clover-4");
    let domain = dom("clover-4");

    let tighter = run_heatmap(&clover, &domain, 32, spec("t3"), spec("t2")).map_err(fail)?;
    let negative = tighter.values.iter().filter(|w| **w < 0.0).count();
    let total = tighter.values.len();
    ensure!(
        negative * 100 >= total * 99,
        "t3 beat t2 on only {negative} of {total} clover-4 cells (99% required)"
    );

    let quartic = run_heatmap(&clover, &domain, 32, spec("t4"), spec("t3")).map_err(fail)?;
    ensure!(
        quartic.max <= 0.02,
        "t4-vs-t3 on clover-4 has a cell at W = {:.4} (limit 0.02)",
        quartic.max
    );

    let mut lagrange_mixed = None;
    let mut hermite_mixed = None;
    for name in CORPUS_NAMES {
        if lagrange_mixed.is_some() && hermite_mixed.is_some() {
            break;
        }
        let f = fun(name);
        let d = dom(name);
        if lagrange_mixed.is_none() {
            let hm = run_heatmap(&f, &d, 32, spec("l3"), spec("t3")).map_err(fail)?;
            if hm.min < 0.0 && hm.max > 0.0 {
                lagrange_mixed = Some(name);
            }
        }
        if hermite_mixed.is_none() {
            let hm = run_heatmap(&f, &d, 32, spec("h4"), spec("t4")).map_err(fail)?;
            if hm.min < 0.0 && hm.max > 0.0 {
                hermite_mixed = Some(name);
            }
        }
    }
    ensure!(
        lagrange_mixed.is_some(),
        "no corpus function where l3 and t3 each win cells"
    );
    ensure!(
        hermite_mixed.is_some(),
        "no corpus function where h4 and t4 each win cells"
    );
    Ok(())
}

/// The Delannoy weight table: rows 0-5 match the recorded integers exactly,
/// both through the closed recurrence and through the verification driver.
fn delannoy_rows() -> CheckResult {
    for (n, row) in DELANNOY_ROWS.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let got = delannoy(n as u32, k as u32);
            ensure!(got == want, "D({n}, {k}) = {got}, the recorded row says {want}");
        }
    }
    let report = run_verify(&[Section::Delannoy], 0.0).map_err(fail)?;
    ensure!(report.passed(), "{}", report_problems(&report));
    Ok(())
}
