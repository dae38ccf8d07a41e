//! `rangeforms` — benchmark and verification CLI for the rangeforms library.
//!
//! Four subcommands drive the library's benchmark layer:
//!
//! * `converge` — radius sweep around a midpoint, CSV with per-form
//!   enclosures, Hausdorff distances, and fitted convergence orders;
//! * `grid` — n x n grid run over a square domain, CSV with per-form total
//!   width, wall time, efficacy, and speedup against the Taylor baseline;
//! * `heatmap` — cell-by-cell log-ratio comparison of two forms, CSV plus a
//!   binary PPM (P6) image;
//! * `verify` — re-runs the recorded reference experiments and reports
//!   PASS/FAIL per cell, exiting nonzero on any failure.
//!
//! Functions are corpus names (`clover-4`, `grass`, ...) or paths to
//! monomial-list files (`i j coefficient` per line, `#` comments).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or runtime error.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use rangeforms::bench::alloc::CountingAlloc;
use rangeforms::bench::convergence::{self, logspace, run_convergence};
use rangeforms::bench::golden::{run_verify, Section};
use rangeforms::bench::grid::{self, run_grid};
use rangeforms::bench::heatmap::{self, run_heatmap};
use rangeforms::bench::ppm::write_ppm;
use rangeforms::bench::FormSpec;
use rangeforms::forms::CachedPoly;
use rangeforms::interval::Box2;
use rangeforms::poly::{corpus, Poly2, CORPUS_NAMES};

// Counting allocator so grid runs can report peak allocation; the library
// detects its presence and degrades to "unavailable" (0) without it.
#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

#[derive(Parser)]
#[command(
    name = "rangeforms",
    version,
    about = "Certified range enclosures for bivariate polynomials: benchmarks and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radius sweep: enclosures and Hausdorff distances on shrinking boxes.
    Converge {
        /// Corpus function name or path to a monomial-list file.
        #[arg(long)]
        function: String,
        /// Sweep midpoint as `x,y`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_midpoint)]
        midpoint: (f64, f64),
        /// Log-spaced radii as `start,stop,count`.
        #[arg(long, value_parser = parse_radii)]
        radii: Radii,
        /// Comma-separated forms (`ne`, `t1`-`t4`, `l3`, `h4`, with optional
        /// `@level`).
        #[arg(long, default_value = "t2,t3,t4,l3,h4", value_parser = parse_forms)]
        forms: Forms,
        /// Target resolution for the reference oracle.
        #[arg(long, default_value_t = 1e-9)]
        resolution: f64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Grid run: total width, timing, efficacy, and speedup per form.
    Grid {
        /// Corpus function name or path to a monomial-list file.
        #[arg(long)]
        function: String,
        /// Square domain as `x0,x1,y0,y1`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_domain)]
        domain: Box2,
        /// Cells per axis.
        #[arg(long = "grid", default_value_t = 32)]
        grid: u32,
        /// Comma-separated forms; append `+shared` to run a node form
        /// through a grid-wide shared cache.
        #[arg(
            long,
            default_value = "t2,t3,t4,l3,l3+shared,h4,h4+shared",
            value_parser = parse_forms
        )]
        forms: Forms,
        /// Timing passes to average over.
        #[arg(long, default_value_t = 1)]
        repeats: u32,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Heatmap: per-cell log10 width ratio of two forms, CSV + PPM.
    Heatmap {
        /// Corpus function name or path to a monomial-list file.
        #[arg(long)]
        function: String,
        /// Square domain as `x0,x1,y0,y1`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_domain)]
        domain: Box2,
        /// Cells per axis.
        #[arg(long = "grid", default_value_t = 32)]
        grid: u32,
        /// Numerator form (tighter shows green).
        #[arg(long = "form-a", value_parser = parse_form)]
        form_a: FormSpec,
        /// Denominator form.
        #[arg(long = "form-b", value_parser = parse_form)]
        form_b: FormSpec,
        /// Output CSV path.
        #[arg(long = "out-csv")]
        out_csv: PathBuf,
        /// Output PPM image path.
        #[arg(long = "out-ppm")]
        out_ppm: PathBuf,
    },
    /// Re-run the recorded reference experiments and check every cell.
    Verify {
        /// Tolerance factor applied to every recorded cell's base
        /// tolerance; 0 demands exact agreement (expected to fail on
        /// last-digit rounding).
        #[arg(long, default_value_t = 1.0)]
        tolerance: f64,
        /// Restrict to one dataset (`fig5`, `fig6`, `table2`, `table5`,
        /// `delannoy`); repeatable. Default: all.
        #[arg(long = "figure", value_parser = parse_section)]
        figure: Vec<Section>,
        /// Also write the report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Newtype so clap treats the parsed radius list as one value.
#[derive(Clone)]
struct Radii(Vec<f64>);

/// Newtype so clap treats the parsed form list as one value.
#[derive(Clone)]
struct Forms(Vec<FormSpec>);

fn parse_floats<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("bad number {part:?} in {s:?}"))?;
    }
    Ok(out)
}

fn parse_midpoint(s: &str) -> Result<(f64, f64), String> {
    let [x, y] = parse_floats::<2>(s)?;
    Ok((x, y))
}

fn parse_domain(s: &str) -> Result<Box2, String> {
    let [x0, x1, y0, y1] = parse_floats::<4>(s)?;
    Box2::from_endpoints(x0, x1, y0, y1).map_err(|e| e.to_string())
}

fn parse_radii(s: &str) -> Result<Radii, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected start,stop,count, got {s:?}"));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| format!("bad start radius {:?}", parts[0]))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| format!("bad stop radius {:?}", parts[1]))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| format!("bad count {:?}", parts[2]))?;
    if !(start > 0.0 && stop > 0.0) {
        return Err("radii must be positive".into());
    }
    if count == 0 {
        return Err("count must be positive".into());
    }
    Ok(Radii(logspace(start, stop, count)))
}

fn parse_forms(s: &str) -> Result<Forms, String> {
    let specs = FormSpec::parse_list(s).map_err(|e| e.to_string())?;
    if specs.is_empty() {
        return Err("empty form list".into());
    }
    Ok(Forms(specs))
}

fn parse_form(s: &str) -> Result<FormSpec, String> {
    s.parse()
        .map_err(|e: rangeforms::bench::FormSpecError| e.to_string())
}

fn parse_section(s: &str) -> Result<Section, String> {
    s.parse()
}

fn load_function(spec: &str) -> Result<CachedPoly> {
    if let Some(p) = corpus(spec) {
        return Ok(CachedPoly::new(p));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading polynomial file {}", path.display()))?;
        let p = Poly2::parse_monomial_list(&text)
            .with_context(|| format!("parsing polynomial file {}", path.display()))?;
        return Ok(CachedPoly::new(p));
    }
    bail!(
        "unknown function {spec:?}: not a corpus function ({}) and no such file",
        CORPUS_NAMES.join(", ")
    )
}

fn create_out(path: &Path) -> Result<BufWriter<File>> {
    let file =
        File::create(path).with_context(|| format!("creating output file {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Converge {
            function,
            midpoint,
            radii,
            forms,
            resolution,
            out,
        } => {
            let f = load_function(&function)?;
            let rows = run_convergence(&f, midpoint, &radii.0, &forms.0, resolution)?;
            let mut w = create_out(&out)?;
            convergence::write_csv(&mut w, &rows)?;
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Grid {
            function,
            domain,
            grid: n,
            forms,
            repeats,
            out,
        } => {
            let f = load_function(&function)?;
            let rows = run_grid(&f, &domain, n, &forms.0, repeats)?;
            let mut w = create_out(&out)?;
            grid::write_csv(&mut w, &function, repeats, &rows)?;
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Heatmap {
            function,
            domain,
            grid: n,
            form_a,
            form_b,
            out_csv,
            out_ppm,
        } => {
            let f = load_function(&function)?;
            let hm = run_heatmap(&f, &domain, n, form_a, form_b)?;
            let mut w = create_out(&out_csv)?;
            heatmap::write_csv(&mut w, &hm)?;
            w.flush()?;
            let mut w = create_out(&out_ppm)?;
            write_ppm(&mut w, &hm)?;
            w.flush()?;
            if hm.zero_width_cells > 0 {
                eprintln!(
                    "note: {} cells had a zero-width enclosure and were rendered as sentinels",
                    hm.zero_width_cells
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            tolerance,
            figure,
            out,
        } => {
            let sections = if figure.is_empty() {
                Section::ALL.to_vec()
            } else {
                figure
            };
            let report = run_verify(&sections, tolerance)?;
            let mut text = Vec::new();
            report.write_text(&mut text)?;
            io::stdout().write_all(&text)?;
            if let Some(path) = out {
                fs::write(&path, &text)
                    .with_context(|| format!("writing report to {}", path.display()))?;
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
