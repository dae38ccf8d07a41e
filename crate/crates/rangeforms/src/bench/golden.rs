//! Frozen reference tables and the verification engine behind `verify`.
//!
//! The crate ships a set of recorded reference outputs — convergence cells
//! for the two flagship radius sweeps, efficacy ratios for the 32x32 grid
//! runs over the corpus, and the Delannoy weight triangle used by the
//! recursive forms. [`run_verify`] re-runs the underlying experiments from
//! scratch and checks every cell, so a single command can confirm that the
//! whole pipeline still reproduces the recorded numbers on this machine.
//!
//! Sections are addressed by short dataset tokens — `fig5`, `fig6` (the
//! clover-4 and grass radius sweeps), `table2`, `table5` (the dense-corpus
//! and curve-corpus efficacy grids), and `delannoy` — which are also the
//! values the CLI's `--figure` filter accepts.
//!
//! Each recorded value carries its own base tolerance: two units in the
//! last recorded digit for sweep cells, 3e-3 for efficacy ratios, exact for
//! the integer triangle. The caller scales all float tolerances by a single
//! factor; a factor of 0 demands bit-level agreement and is expected to
//! fail on last-digit rounding — a deliberate way of documenting the
//! floating-point sensitivity boundary.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::bench::convergence::run_convergence;
use crate::bench::grid::run_grid;
use crate::bench::{fmt_f64, BenchError, FormSpec};
use crate::forms::{delannoy, CachedPoly};
use crate::poly::{corpus, corpus_domain};

/// One dataset of the verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    /// Radius sweep on clover-4 around (0.1, 0.2).
    Fig5,
    /// Radius sweep on grass around (0.1, 0.1).
    Fig6,
    /// Efficacy grid over the dense corpus (clovers and grass).
    Table2,
    /// Efficacy grid over the curve corpus (cardioid, lemniscate, octic-flower).
    Table5,
    /// The Delannoy weight triangle.
    Delannoy,
}

impl Section {
    /// All sections, in report order.
    pub const ALL: [Section; 5] = [
        Section::Fig5,
        Section::Fig6,
        Section::Table2,
        Section::Table5,
        Section::Delannoy,
    ];

    /// The token used by the CLI filter and in report lines.
    pub fn token(self) -> &'static str {
        match self {
            Section::Fig5 => "fig5",
            Section::Fig6 => "fig6",
            Section::Table2 => "table2",
            Section::Table5 => "table5",
            Section::Delannoy => "delannoy",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .into_iter()
            .find(|sec| sec.token() == s)
            .ok_or_else(|| {
                format!("unknown section {s:?} (expected fig5, fig6, table2, table5, or delannoy)")
            })
    }
}

/// One recorded sweep cell: a form's enclosure and Hausdorff distance.
#[derive(Debug, Clone, Copy)]
pub struct SweepCell {
    /// Form token (parseable as a [`FormSpec`]).
    pub form: &'static str,
    /// Recorded enclosure endpoints.
    pub lo: f64,
    pub hi: f64,
    /// Recorded Hausdorff distance to the reference range.
    pub q: f64,
}

/// All recorded cells for one radius of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    /// Box radius.
    pub radius: f64,
    /// Base tolerance for the endpoint checks: two units in the last
    /// recorded digit.
    pub range_tol: f64,
    /// Base tolerance for the distance checks.
    pub q_tol: f64,
    /// Recorded reference range (context; the sweep re-brackets it).
    pub exact_lo: f64,
    pub exact_hi: f64,
    /// One cell per form, in report order.
    pub cells: [SweepCell; 5],
}

/// A whole recorded radius sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepGolden {
    pub section: Section,
    /// Corpus function name.
    pub function: &'static str,
    /// Sweep midpoint.
    pub midpoint: (f64, f64),
    pub rows: [SweepRow; 2],
}

/// One recorded efficacy ratio from a 32x32 grid run.
#[derive(Debug, Clone, Copy)]
pub struct EfficacyGolden {
    /// Corpus function name (its benchmark domain comes from
    /// [`corpus_domain`]).
    pub function: &'static str,
    /// Base form token (`t2`, `t3`, `t4`, `l3`, `h4`).
    pub form: &'static str,
    /// Whether the run used a shared node cache. Sharing cannot change any
    /// width, so shared rows record the same ratio as their unshared twin —
    /// and the verifier checks that this actually holds.
    pub shared: bool,
    /// Recorded `total_width(t2) / total_width(form)`.
    pub efficacy: f64,
}

/// Radius sweep on clover-4 around (0.1, 0.2).
pub const SWEEP_CLOVER: SweepGolden = SweepGolden {
    section: Section::Fig5,
    function: "clover-4",
    midpoint: (0.1, 0.2),
    rows: [
        SweepRow {
            radius: 0.1,
            range_tol: 2e-4,
            q_tol: 2e-4,
            exact_lo: -1.3586,
            exact_hi: -0.9646,
            cells: [
                SweepCell {
                    form: "t2",
                    lo: -1.4303,
                    hi: -0.6978,
                    q: 0.2667,
                },
                SweepCell {
                    form: "t3",
                    lo: -1.3976,
                    hi: -0.8436,
                    q: 0.1209,
                },
                SweepCell {
                    form: "l3",
                    lo: -1.3688,
                    hi: -0.8688,
                    q: 0.0958,
                },
                SweepCell {
                    form: "t4",
                    lo: -1.3630,
                    hi: -0.9397,
                    q: 0.0249,
                },
                SweepCell {
                    form: "h4",
                    lo: -1.3621,
                    hi: -0.9508,
                    q: 0.0138,
                },
            ],
        },
        SweepRow {
            radius: 0.01,
            range_tol: 2e-8,
            q_tol: 2e-8,
            exact_lo: -1.07788547,
            exact_hi: -1.05241970,
            cells: [
                SweepCell {
                    form: "t2",
                    lo: -1.07824745,
                    hi: -1.04988220,
                    q: 0.00253750,
                },
                SweepCell {
                    form: "t3",
                    lo: -1.07792045,
                    hi: -1.05238265,
                    q: 0.00003705,
                },
                SweepCell {
                    form: "l3",
                    lo: -1.07789250,
                    hi: -1.05241267,
                    q: 0.00000703,
                },
                SweepCell {
                    form: "t4",
                    lo: -1.07788591,
                    hi: -1.05241719,
                    q: 0.00000252,
                },
                SweepCell {
                    form: "h4",
                    lo: -1.07788571,
                    hi: -1.05241821,
                    q: 0.00000149,
                },
            ],
        },
    ],
};

/// Radius sweep on grass around (0.1, 0.1).
pub const SWEEP_GRASS: SweepGolden = SweepGolden {
    section: Section::Fig6,
    function: "grass",
    midpoint: (0.1, 0.1),
    rows: [
        SweepRow {
            radius: 0.005,
            range_tol: 2e-3,
            q_tol: 2e-4,
            exact_lo: -61.874,
            exact_hi: -46.411,
            cells: [
                SweepCell {
                    form: "t2",
                    lo: -73.566,
                    hi: -46.367,
                    q: 11.6914,
                },
                SweepCell {
                    form: "t3",
                    lo: -62.737,
                    hi: -46.391,
                    q: 0.8625,
                },
                SweepCell {
                    form: "l3",
                    lo: -62.639,
                    hi: -45.980,
                    q: 0.7648,
                },
                SweepCell {
                    form: "t4",
                    lo: -61.926,
                    hi: -46.404,
                    q: 0.0516,
                },
                SweepCell {
                    form: "h4",
                    lo: -61.947,
                    hi: -46.360,
                    q: 0.0728,
                },
            ],
        },
        SweepRow {
            radius: 0.0005,
            range_tol: 2e-7,
            q_tol: 2e-8,
            exact_lo: -60.5351611,
            exact_hi: -59.2710915,
            cells: [
                SweepCell {
                    form: "t2",
                    lo: -60.6614110,
                    hi: -59.2708307,
                    q: 0.12624978,
                },
                SweepCell {
                    form: "t3",
                    lo: -60.5351831,
                    hi: -59.2710780,
                    q: 0.00002195,
                },
                SweepCell {
                    form: "l3",
                    lo: -60.5355311,
                    hi: -59.2707216,
                    q: 0.00036989,
                },
                SweepCell {
                    form: "t4",
                    lo: -60.5351702,
                    hi: -59.2710910,
                    q: 0.00000904,
                },
                SweepCell {
                    form: "h4",
                    lo: -60.5351657,
                    hi: -59.2710865,
                    q: 0.00000503,
                },
            ],
        },
    ],
};

/// Base tolerance for every efficacy check.
pub const EFFICACY_TOL: f64 = 3e-3;

/// Grid size for the efficacy datasets.
pub const EFFICACY_GRID: u32 = 32;

/// Recorded efficacy ratios for the dense corpus, seven rows per function:
/// the baseline itself, the three Taylor/Lagrange/Hermite upgrades, and the
/// shared twins of the node forms.
pub const EFFICACY_DENSE: &[EfficacyGolden] = &[
    EfficacyGolden {
        function: "clover-4",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "t3",
        shared: false,
        efficacy: 1.1978,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "t4",
        shared: false,
        efficacy: 1.1991,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "l3",
        shared: false,
        efficacy: 1.1950,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "l3",
        shared: true,
        efficacy: 1.1950,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "h4",
        shared: false,
        efficacy: 1.1997,
    },
    EfficacyGolden {
        function: "clover-4",
        form: "h4",
        shared: true,
        efficacy: 1.1997,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "t3",
        shared: false,
        efficacy: 1.2223,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "t4",
        shared: false,
        efficacy: 1.2229,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "l3",
        shared: false,
        efficacy: 1.2195,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "l3",
        shared: true,
        efficacy: 1.2195,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "h4",
        shared: false,
        efficacy: 1.2240,
    },
    EfficacyGolden {
        function: "clover-5",
        form: "h4",
        shared: true,
        efficacy: 1.2240,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "t3",
        shared: false,
        efficacy: 1.2986,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "t4",
        shared: false,
        efficacy: 1.2990,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "l3",
        shared: false,
        efficacy: 1.2941,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "l3",
        shared: true,
        efficacy: 1.2941,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "h4",
        shared: false,
        efficacy: 1.3014,
    },
    EfficacyGolden {
        function: "clover-8",
        form: "h4",
        shared: true,
        efficacy: 1.3014,
    },
    EfficacyGolden {
        function: "grass",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "grass",
        form: "t3",
        shared: false,
        efficacy: 1.1993,
    },
    EfficacyGolden {
        function: "grass",
        form: "t4",
        shared: false,
        efficacy: 1.2014,
    },
    EfficacyGolden {
        function: "grass",
        form: "l3",
        shared: false,
        efficacy: 1.1890,
    },
    EfficacyGolden {
        function: "grass",
        form: "l3",
        shared: true,
        efficacy: 1.1890,
    },
    EfficacyGolden {
        function: "grass",
        form: "h4",
        shared: false,
        efficacy: 1.2008,
    },
    EfficacyGolden {
        function: "grass",
        form: "h4",
        shared: true,
        efficacy: 1.2008,
    },
];

/// Recorded efficacy ratios for the curve corpus.
pub const EFFICACY_CURVES: &[EfficacyGolden] = &[
    EfficacyGolden {
        function: "cardioid",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "t3",
        shared: false,
        efficacy: 1.0710,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "t4",
        shared: false,
        efficacy: 1.0712,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "l3",
        shared: false,
        efficacy: 1.0703,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "l3",
        shared: true,
        efficacy: 1.0703,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "h4",
        shared: false,
        efficacy: 1.0713,
    },
    EfficacyGolden {
        function: "cardioid",
        form: "h4",
        shared: true,
        efficacy: 1.0713,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "t3",
        shared: false,
        efficacy: 1.0671,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "t4",
        shared: false,
        efficacy: 1.0676,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "l3",
        shared: false,
        efficacy: 1.0669,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "l3",
        shared: true,
        efficacy: 1.0669,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "h4",
        shared: false,
        efficacy: 1.0676,
    },
    EfficacyGolden {
        function: "lemniscate",
        form: "h4",
        shared: true,
        efficacy: 1.0676,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "t2",
        shared: false,
        efficacy: 1.0,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "t3",
        shared: false,
        efficacy: 1.1581,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "t4",
        shared: false,
        efficacy: 1.1604,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "l3",
        shared: false,
        efficacy: 1.1562,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "l3",
        shared: true,
        efficacy: 1.1562,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "h4",
        shared: false,
        efficacy: 1.1606,
    },
    EfficacyGolden {
        function: "octic-flower",
        form: "h4",
        shared: true,
        efficacy: 1.1606,
    },
];

/// Rows 0-5 of the Delannoy triangle used for the recursive forms' weights.
pub const DELANNOY_ROWS: [&[u128]; 6] = [
    &[1],
    &[1, 1],
    &[1, 3, 1],
    &[1, 5, 5, 1],
    &[1, 7, 13, 7, 1],
    &[1, 9, 25, 25, 9, 1],
];

/// One scalar comparison inside a verification cell.
#[derive(Debug, Clone, Copy)]
pub struct Check {
    /// What is being compared (`lo`, `hi`, `q`, `efficacy`, `D(n,k)`...).
    pub field: &'static str,
    pub got: f64,
    pub want: f64,
    /// Effective tolerance (base tolerance times the caller's factor).
    pub tol: f64,
}

impl Check {
    /// Whether the comparison is within tolerance.
    pub fn pass(&self) -> bool {
        (self.got - self.want).abs() <= self.tol
    }
}

/// One verification cell: a named group of scalar checks.
#[derive(Debug, Clone)]
pub struct VerifyCell {
    pub section: Section,
    /// Stable human-readable identifier, e.g. `fig5 clover-4 r=0.1 t2`.
    pub name: String,
    pub checks: Vec<Check>,
}

impl VerifyCell {
    /// Whether every check in the cell passes.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }
}

/// The outcome of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// All cells, in report order.
    pub cells: Vec<VerifyCell>,
    /// The tolerance factor the run was performed with.
    pub tolerance: f64,
}

impl VerifyReport {
    /// Whether every cell passed.
    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Number of failing cells.
    pub fn failures(&self) -> usize {
        self.cells.iter().filter(|c| !c.pass()).count()
    }

    /// Writes the plain-text report: one `PASS`/`FAIL` line per cell,
    /// failing fields detailed underneath, and a summary line.
    pub fn write_text<W: Write>(&self, mut out: W) -> io::Result<()> {
        for cell in &self.cells {
            if cell.pass() {
                writeln!(out, "PASS {}", cell.name)?;
            } else {
                writeln!(out, "FAIL {}", cell.name)?;
                for check in cell.checks.iter().filter(|c| !c.pass()) {
                    writeln!(
                        out,
                        "     {}: got {}, want {}, tol {:e}",
                        check.field,
                        fmt_f64(check.got),
                        check.want,
                        check.tol,
                    )?;
                }
            }
        }
        writeln!(
            out,
            "verify: {} cells, {} failures (tolerance factor {})",
            self.cells.len(),
            self.failures(),
            self.tolerance,
        )
    }
}

/// Re-runs the experiments behind the requested sections and checks every
/// recorded cell, scaling all float tolerances by `tolerance`.
pub fn run_verify(sections: &[Section], tolerance: f64) -> Result<VerifyReport, BenchError> {
    let mut cells = Vec::new();
    for &section in sections {
        match section {
            Section::Fig5 => verify_sweep(&SWEEP_CLOVER, tolerance, &mut cells)?,
            Section::Fig6 => verify_sweep(&SWEEP_GRASS, tolerance, &mut cells)?,
            Section::Table2 => {
                verify_efficacy(Section::Table2, EFFICACY_DENSE, tolerance, &mut cells)?
            }
            Section::Table5 => {
                verify_efficacy(Section::Table5, EFFICACY_CURVES, tolerance, &mut cells)?
            }
            Section::Delannoy => verify_delannoy(&mut cells),
        }
    }
    Ok(VerifyReport { cells, tolerance })
}

fn verify_sweep(
    golden: &SweepGolden,
    tolerance: f64,
    cells: &mut Vec<VerifyCell>,
) -> Result<(), BenchError> {
    let f = CachedPoly::new(corpus(golden.function).expect("corpus function"));
    for row in &golden.rows {
        // Bracket the reference range well below the cell tolerance so the
        // oracle's own error cannot tip a comparison.
        let resolution = (row.q_tol / 20.0).min(1e-6);
        let specs: Vec<FormSpec> = row
            .cells
            .iter()
            .map(|c| c.form.parse().expect("golden form token"))
            .collect();
        let run = run_convergence(&f, golden.midpoint, &[row.radius], &specs, resolution)?;
        for (got, want) in run[0].cells.iter().zip(&row.cells) {
            cells.push(VerifyCell {
                section: golden.section,
                name: format!(
                    "{} {} r={} {}",
                    golden.section, golden.function, row.radius, want.form
                ),
                checks: vec![
                    Check {
                        field: "lo",
                        got: got.enclosure.lo(),
                        want: want.lo,
                        tol: row.range_tol * tolerance,
                    },
                    Check {
                        field: "hi",
                        got: got.enclosure.hi(),
                        want: want.hi,
                        tol: row.range_tol * tolerance,
                    },
                    Check {
                        field: "q",
                        got: got.hausdorff,
                        want: want.q,
                        tol: row.q_tol * tolerance,
                    },
                ],
            });
        }
    }
    Ok(())
}

fn verify_efficacy(
    section: Section,
    golden: &[EfficacyGolden],
    tolerance: f64,
    cells: &mut Vec<VerifyCell>,
) -> Result<(), BenchError> {
    let mut index = 0;
    while index < golden.len() {
        let function = golden[index].function;
        let group_end = golden[index..]
            .iter()
            .position(|g| g.function != function)
            .map_or(golden.len(), |p| index + p);
        let group = &golden[index..group_end];
        index = group_end;

        let f = CachedPoly::new(corpus(function).expect("corpus function"));
        let domain = corpus_domain(function).expect("corpus domain");
        let specs: Vec<FormSpec> = group
            .iter()
            .map(|g| {
                let token = if g.shared {
                    format!("{}+shared", g.form)
                } else {
                    g.form.to_string()
                };
                token.parse().expect("golden form token")
            })
            .collect();
        let rows = run_grid(&f, &domain, EFFICACY_GRID, &specs, 1)?;
        for (row, want) in rows.iter().zip(group) {
            let suffix = if want.shared { "+shared" } else { "" };
            cells.push(VerifyCell {
                section,
                name: format!("{} {} {}{}", section, function, want.form, suffix),
                checks: vec![Check {
                    field: "efficacy",
                    got: row.efficacy,
                    want: want.efficacy,
                    tol: EFFICACY_TOL * tolerance,
                }],
            });
        }
    }
    Ok(())
}

fn verify_delannoy(cells: &mut Vec<VerifyCell>) {
    for (n, row) in DELANNOY_ROWS.iter().enumerate() {
        let checks = row
            .iter()
            .enumerate()
            .map(|(k, &want)| Check {
                field: "D(n,k)",
                got: delannoy(n as u32, k as u32) as f64,
                want: want as f64,
                // Integer identity: exact regardless of the tolerance factor.
                tol: 0.0,
            })
            .collect();
        cells.push(VerifyCell {
            section: Section::Delannoy,
            name: format!("delannoy row {n}"),
            checks,
        });
    }
}
