//! CSV, PGM and points-file formats.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use num_complex::Complex64;

use crate::grid::Grid2D;
use crate::wigner::PhasePoint4;
use crate::{Error, Result};

pub const GRID_HEADER: &str = "x,y,re,im";
pub const POINTS_HEADER: &str = "x1,x2,xi1,xi2,re,im";

/// Shortest decimal that parses back to the same `f64`.
///
/// Plain notation inside `[1e-5, 1e16)`, exponent notation outside it.
pub fn format_number(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn push_row(line: &mut String, values: &[f64]) {
    line.clear();
    for (n, v) in values.iter().enumerate() {
        if n > 0 {
            line.push(',');
        }
        let _ = write!(line, "{}", format_number(*v));
    }
    line.push('\n');
}

/// Writes `x,y,re,im` rows, `x` varying fastest.
pub fn write_grid_csv<W: Write>(mut out: W, grid: &Grid2D) -> io::Result<()> {
    writeln!(out, "{GRID_HEADER}")?;
    let mut line = String::new();
    for (x, y, v) in grid.iter() {
        push_row(&mut line, &[x, y, v.re, v.im]);
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

pub fn write_points_csv<W: Write>(
    mut out: W,
    points: &[PhasePoint4],
    values: &[Complex64],
) -> io::Result<()> {
    writeln!(out, "{POINTS_HEADER}")?;
    let mut line = String::new();
    for (p, v) in points.iter().zip(values) {
        push_row(&mut line, &[p.x1, p.x2, p.xi1, p.xi2, v.re, v.im]);
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

/// Parses `x1,x2,xi1,xi2` lines. A non-numeric first line is a header;
/// blank lines are skipped. Line numbers in errors are 1-based.
pub fn parse_points<R: BufRead>(input: R) -> Result<Vec<PhasePoint4>> {
    let mut points = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> = fields.iter().map(|f| f.parse()).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if n == 0 && fields.iter().any(|f| f.chars().any(char::is_alphabetic)) => {
                continue
            }
            Err(e) => {
                return Err(Error::Parse {
                    line: n + 1,
                    message: format!("not a number ({e}) in `{text}`"),
                })
            }
        };
        if values.len() != 4 {
            return Err(Error::Parse {
                line: n + 1,
                message: format!("expected 4 fields x1,x2,xi1,xi2, found {}", values.len()),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Parse {
                line: n + 1,
                message: format!("non-finite coordinate {bad}"),
            });
        }
        points.push(PhasePoint4::new(values[0], values[1], values[2], values[3]));
    }
    Ok(points)
}

/// Binary greymap of `|value|`, scaled linearly from `[0, max]` to
/// `[0, 255]`. The first image row is the largest `y`.
pub fn write_pgm<W: Write>(mut out: W, grid: &Grid2D) -> io::Result<()> {
    let (nx, ny) = (grid.x_axis.count, grid.y_axis.count);
    let max = grid.max_abs();
    write!(out, "P5\n{nx} {ny}\n255\n")?;
    let mut row = vec![0u8; nx];
    for j in (0..ny).rev() {
        for (px, v) in row.iter_mut().zip(grid.row(j)) {
            *px = if max > 0.0 {
                (v.norm() / max * 255.0).round().clamp(0.0, 255.0) as u8
            } else {
                0
            };
        }
        out.write_all(&row)?;
    }
    out.flush()
}
