//! Benchmark drivers: convergence sweeps, grid runs, heatmaps, verification.
//!
//! This module turns the enclosure algorithms in [`crate::forms`] into the
//! experiments the crate exists to reproduce:
//!
//! * [`convergence`] — evaluate a set of forms on a nest of shrinking square
//!   boxes around a midpoint, record each enclosure and its Hausdorff
//!   distance to the reference oracle, and fit empirical convergence orders
//!   (log–log slopes).
//! * [`grid`] — tile a square domain with an `n x n` grid of square cells,
//!   evaluate each form on every cell, and report total width, wall time,
//!   and the efficacy/speedup ratios against the order-2 Taylor baseline.
//! * [`heatmap`] — compare two forms cell-by-cell on such a grid via the
//!   log-ratio `W = log10(width_A / width_B)`, written as CSV and as a
//!   diverging-colormap PPM image ([`ppm`]).
//! * [`golden`] — frozen reference tables (convergence cells, efficacy
//!   ratios, Delannoy rows) and a verification engine that re-runs the
//!   experiments and checks every cell, used by the `verify` subcommand.
//! * [`alloc`] — an optional counting global allocator so grid runs can
//!   report a best-effort peak-allocation figure.
//!
//! Everything here is deterministic: runs are single-threaded, cells are
//! visited in a fixed row-major order, and all floating-point CSV fields are
//! printed with [`fmt_f64`] (17 significant digits, round-trip exact). Wall
//! times and allocation counts are the only outputs that vary between runs,
//! and nothing downstream gates on them.

pub mod alloc;
pub mod convergence;
pub mod golden;
pub mod grid;
pub mod heatmap;
pub mod ppm;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::forms::{FormError, FormKind};
use crate::interval::IntervalError;

/// Error from a benchmark driver.
#[derive(Debug, Error)]
pub enum BenchError {
    /// A form evaluation failed.
    #[error(transparent)]
    Form(#[from] FormError),
    /// A box construction failed (bad radius, domain, or grid geometry).
    #[error(transparent)]
    Interval(#[from] IntervalError),
    /// A driver parameter was unusable.
    #[error("invalid input: {0}")]
    Invalid(&'static str),
}

/// Formats a float for CSV output: `{:.16e}`, 17 significant digits.
///
/// This is enough to round-trip any finite `f64` exactly, so re-parsing a
/// report reproduces the computed values bit for bit. Non-finite values
/// print as Rust renders them (`NaN`, `inf`, `-inf`).
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

/// Error from parsing a [`FormSpec`] token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormSpecError {
    /// The base token is not one of `ne`, `t1`–`t4`, `l3`, `h4`.
    #[error("unknown form {0:?} (expected ne, t1, t2, t3, t4, l3, or h4)")]
    UnknownForm(String),
    /// The `@level` suffix did not parse as a positive integer.
    #[error("bad level in form {0:?} (expected e.g. t3@2)")]
    BadLevel(String),
    /// `@level` on a form that has no level parameter.
    #[error("form `ne` does not take a level")]
    LevelUnsupported,
    /// `+shared` on a form that never consults the node cache.
    #[error("form {0:?} does not support +shared (only l3 and h4 do)")]
    SharingUnsupported(String),
}

/// One parsed form token: which enclosure to run, and whether node-based
/// forms share a [`GridCache`](crate::forms::GridCache) across grid cells.
///
/// The textual syntax is `base[@level][+shared]`:
///
/// * base — `ne` (natural extension), `t1`–`t4` (Taylor by order),
///   `l3` (recursive Lagrange), `h4` (recursive Hermite);
/// * `@level` — explicit cascade level; omitted means *maximal*;
/// * `+shared` — evaluate through a shared node cache (`l3`/`h4` only).
///
/// Sharing never changes any output bit, only how often node values are
/// recomputed, so specs differing only in `+shared` produce identical
/// enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormSpec {
    /// The enclosure to evaluate.
    pub kind: FormKind,
    /// Whether grid drivers route node evaluations through a shared cache.
    pub shared: bool,
}

impl FormSpec {
    /// Parses a comma-separated list of form tokens, e.g. `"t2,l3+shared"`.
    pub fn parse_list(text: &str) -> Result<Vec<FormSpec>, FormSpecError> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }

    /// The base token without level or sharing suffixes.
    pub fn base_token(&self) -> &'static str {
        match self.kind {
            FormKind::NaturalExtension => "ne",
            FormKind::Taylor { order: 1, .. } => "t1",
            FormKind::Taylor { order: 2, .. } => "t2",
            FormKind::Taylor { order: 3, .. } => "t3",
            FormKind::Taylor { order: 4, .. } => "t4",
            // `FormSpec` values are only built by the parser, which stays
            // within orders 1-4.
            FormKind::Taylor { .. } => unreachable!("unparseable Taylor order"),
            FormKind::Lagrange { .. } => "l3",
            FormKind::Hermite { .. } => "h4",
        }
    }

    /// The explicit cascade level, if one was given (`None` = maximal).
    pub fn level(&self) -> Option<u32> {
        match self.kind {
            FormKind::NaturalExtension => None,
            FormKind::Taylor { level, .. } => level,
            FormKind::Lagrange { level } => level,
            FormKind::Hermite { level } => level,
        }
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.base_token())?;
        if let Some(n) = self.level() {
            write!(f, "@{n}")?;
        }
        if self.shared {
            f.write_str("+shared")?;
        }
        Ok(())
    }
}

impl FromStr for FormSpec {
    type Err = FormSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (body, shared) = match s.strip_suffix("+shared") {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let (base, level) = match body.split_once('@') {
            Some((base, lvl)) => {
                let n: u32 = lvl
                    .parse()
                    .map_err(|_| FormSpecError::BadLevel(s.to_string()))?;
                if n == 0 {
                    return Err(FormSpecError::BadLevel(s.to_string()));
                }
                (base, Some(n))
            }
            None => (body, None),
        };
        let kind = match base {
            "ne" => {
                if level.is_some() {
                    return Err(FormSpecError::LevelUnsupported);
                }
                FormKind::NaturalExtension
            }
            "t1" => FormKind::Taylor { order: 1, level },
            "t2" => FormKind::Taylor { order: 2, level },
            "t3" => FormKind::Taylor { order: 3, level },
            "t4" => FormKind::Taylor { order: 4, level },
            "l3" => FormKind::Lagrange { level },
            "h4" => FormKind::Hermite { level },
            other => return Err(FormSpecError::UnknownForm(other.to_string())),
        };
        if shared && !matches!(kind, FormKind::Lagrange { .. } | FormKind::Hermite { .. }) {
            return Err(FormSpecError::SharingUnsupported(s.to_string()));
        }
        Ok(FormSpec { kind, shared })
    }
}
