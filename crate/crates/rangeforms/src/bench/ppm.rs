//! Binary PPM (P6) rendering of heatmaps with a diverging colormap.
//!
//! One pixel per grid cell. The colormap is anchored at `W = 0` (yellow) and
//! runs to dark green at the most negative `W` of the run and to dark red at
//! the most positive, so green always means "form A tighter" and red "form B
//! tighter" regardless of the data's dynamic range. Sentinel (zero-width)
//! cells render gray. Rows are written top-down with the *highest* `y` row
//! first, so the image is oriented like the underlying coordinate plane.

use std::io::{self, Write};

use crate::bench::heatmap::Heatmap;

/// `W = 0`: neither form tighter.
const YELLOW: [u8; 3] = [255, 255, 0];
/// Most negative `W`: form A tighter by the run's full dynamic range.
const DARK_GREEN: [u8; 3] = [0, 100, 0];
/// Most positive `W`: form B tighter by the run's full dynamic range.
const DARK_RED: [u8; 3] = [139, 0, 0];
/// Zero-width sentinel cells.
const GRAY: [u8; 3] = [128, 128, 128];

fn lerp(a: [u8; 3], b: [u8; 3], t: f64) -> [u8; 3] {
    let t = t.clamp(0.0, 1.0);
    let mix = |x: u8, y: u8| (x as f64 + (y as f64 - x as f64) * t).round() as u8;
    [mix(a[0], b[0]), mix(a[1], b[1]), mix(a[2], b[2])]
}

/// Maps one log-ratio to a color, given the run's finite extremes.
pub fn diverging_color(w: f64, min: f64, max: f64) -> [u8; 3] {
    if w.is_nan() {
        GRAY
    } else if w < 0.0 {
        // A value below zero implies min < 0, since min bounds it.
        lerp(YELLOW, DARK_GREEN, w / min)
    } else if w > 0.0 {
        lerp(YELLOW, DARK_RED, w / max)
    } else {
        YELLOW
    }
}

/// Writes the heatmap as a binary P6 PPM image, one pixel per cell.
pub fn write_ppm<W: Write>(mut out: W, hm: &Heatmap) -> io::Result<()> {
    let n = hm.n as usize;
    write!(out, "P6\n{n} {n}\n255\n")?;
    for j in (0..n).rev() {
        for i in 0..n {
            out.write_all(&diverging_color(hm.values[j * n + i], hm.min, hm.max))?;
        }
    }
    Ok(())
}
