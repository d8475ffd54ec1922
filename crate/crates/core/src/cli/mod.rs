//! The `lg-wigner` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error,
//! 3 I/O error. Data goes to the `--out` file, a one-line summary to stdout,
//! diagnostics to stderr.

pub mod output;

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::beam::{beam_field_xy, BeamIndex, BeamParams, Normalization};
use crate::grid::{Axis, Grid2D};
use crate::modes::{hg_mode, lg_mode, ModeIndex};
use crate::verify::{run_suite, Budget, SuiteReport};
use crate::wigner::{
    wigner_hermite_closed, wigner_hg_closed, wigner_lg_closed, wigner_lg_diag, PhasePoint4,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest accepted node count per grid axis.
pub const MAX_GRID_NODES: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "lg-wigner",
    version,
    about = "LG/HG modes, Wigner transforms and LG beams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample an HG or LG mode on a grid.
    Modes(ModesArgs),
    /// Evaluate a closed-form Wigner transform on a grid or at listed points.
    Wigner(WignerArgs),
    /// Sample a transverse slice of an LG beam.
    Beam(BeamArgs),
    /// Run a verification suite and write its JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridRequest {
    #[arg(long, default_value_t = -4.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 4.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 128)]
    pub nx: usize,
    #[arg(long, default_value_t = -4.0)]
    pub ymin: f64,
    #[arg(long, default_value_t = 4.0)]
    pub ymax: f64,
    #[arg(long, default_value_t = 128)]
    pub ny: usize,
}

impl GridRequest {
    pub fn axes(&self) -> Result<(Axis, Axis)> {
        for n in [self.nx, self.ny] {
            if n > MAX_GRID_NODES {
                return Err(Error::InvalidGrid(format!(
                    "at most {MAX_GRID_NODES} nodes per axis, got {n}"
                )));
            }
        }
        Ok((
            Axis::new(self.xmin, self.xmax, self.nx)?,
            Axis::new(self.ymin, self.ymax, self.ny)?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeKind {
    Hg,
    Lg,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ModesArgs {
    #[arg(long, value_enum)]
    pub kind: ModeKind,
    /// Two indices `J,K`.
    #[arg(long, value_parser = parse_indices)]
    pub index: Indices,
    #[command(flatten)]
    pub grid: GridRequest,
    #[arg(long)]
    pub out: PathBuf,
    /// Also write a PGM magnitude image.
    #[arg(long)]
    pub image: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WignerKind {
    /// `W(h_j, h_k)(x, y)` on a grid.
    Hermite,
    /// Diagonal LG Wigner function on a 2D slice or at listed points.
    LgDiag,
    /// `W_2` of two LG modes at listed points.
    LgGeneral,
    /// `W_2` of two HG modes at listed points.
    HgGeneral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coord {
    X1,
    X2,
    Xi1,
    Xi2,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct WignerArgs {
    #[arg(long, value_enum)]
    pub kind: WignerKind,
    /// `J,K` for hermite and lg-diag, `J,K,M,N` for the general kinds.
    #[arg(long, value_parser = parse_indices)]
    pub index: Indices,
    #[command(flatten)]
    pub grid: GridRequest,
    /// Phase-space coordinates spanned by the grid's x and y axes (lg-diag).
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Coord::X1, Coord::Xi1])]
    pub plane: Vec<Coord>,
    /// Fixed coordinates off the slice plane.
    #[arg(long, default_value_t = 0.0)]
    pub x1: f64,
    #[arg(long, default_value_t = 0.0)]
    pub x2: f64,
    #[arg(long, default_value_t = 0.0)]
    pub xi1: f64,
    #[arg(long, default_value_t = 0.0)]
    pub xi2: f64,
    /// CSV of `x1,x2,xi1,xi2` rows; required for the general kinds.
    #[arg(long)]
    pub points: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub image: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BeamArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub ell: i64,
    #[arg(long)]
    pub w0: f64,
    #[arg(long)]
    pub k: f64,
    #[arg(long, default_value_t = 0.0)]
    pub z: f64,
    /// Drop the normalization constant.
    #[arg(long)]
    pub proportional: bool,
    #[command(flatten)]
    pub grid: GridRequest,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub image: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value = "quick", value_parser = parse_budget)]
    pub budget: Budget,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indices(pub Vec<usize>);

fn parse_indices(s: &str) -> std::result::Result<Indices, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad index `{t}`: {e}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Indices)
}

fn parse_budget(s: &str) -> std::result::Result<Budget, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

pub fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Modes(a) => cmd_modes(&a),
        Command::Wigner(a) => cmd_wigner(&a),
        Command::Beam(a) => cmd_beam(&a),
        Command::Verify(a) => cmd_verify(&a),
    }
}

fn expect_indices<const N: usize>(indices: &Indices) -> Result<[usize; N]> {
    indices.0.as_slice().try_into().map_err(|_| {
        Error::InvalidArgument(format!(
            "expected {N} comma-separated indices, got {}",
            indices.0.len()
        ))
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn write_grid_outputs(grid: &Grid2D, out: &Path, image: Option<&Path>) -> Result<()> {
    output::write_grid_csv(create(out)?, grid)?;
    if let Some(path) = image {
        output::write_pgm(create(path)?, grid)?;
    }
    Ok(())
}

pub fn cmd_modes(a: &ModesArgs) -> Result<i32> {
    let [j, k] = expect_indices(&a.index)?;
    let (xa, ya) = a.grid.axes()?;
    let grid = match a.kind {
        ModeKind::Hg => {
            let idx = ModeIndex::hg(j, k)?;
            Grid2D::try_sample(xa, ya, |x, y| Ok(Complex64::new(hg_mode(idx, x, y)?, 0.0)))?
        }
        ModeKind::Lg => {
            let idx = ModeIndex::lg(j, k)?;
            Grid2D::try_sample(xa, ya, |x, y| lg_mode(idx, x, y))?
        }
    };
    write_grid_outputs(&grid, &a.out, a.image.as_deref())?;
    println!(
        "modes {} ({j},{k}): {}x{} samples to {}",
        value_name(&a.kind),
        xa.count,
        ya.count,
        a.out.display()
    );
    Ok(EXIT_OK)
}

fn slice_point(a: &WignerArgs, u: f64, v: f64) -> PhasePoint4 {
    let mut p = PhasePoint4::new(a.x1, a.x2, a.xi1, a.xi2);
    for (coord, value) in a.plane.iter().zip([u, v]) {
        match coord {
            Coord::X1 => p.x1 = value,
            Coord::X2 => p.x2 = value,
            Coord::Xi1 => p.xi1 = value,
            Coord::Xi2 => p.xi2 = value,
        }
    }
    p
}

pub fn cmd_wigner(a: &WignerArgs) -> Result<i32> {
    if a.plane.len() != 2 || a.plane[0] == a.plane[1] {
        return Err(Error::InvalidArgument(
            "--plane needs two distinct coordinates".into(),
        ));
    }
    if a.points.is_some() && a.image.is_some() {
        return Err(Error::InvalidArgument(
            "--image needs a grid, not --points".into(),
        ));
    }
    type Eval = Box<dyn Fn(&PhasePoint4) -> Result<Complex64> + Sync>;
    let eval: Eval = match a.kind {
        WignerKind::Hermite => {
            let [j, k] = expect_indices(&a.index)?;
            if a.points.is_some() {
                return Err(Error::InvalidArgument(
                    "hermite takes a grid, not --points".into(),
                ));
            }
            let (xa, ya) = a.grid.axes()?;
            let grid = Grid2D::try_sample(xa, ya, |x, y| wigner_hermite_closed(j, k, x, y))?;
            write_grid_outputs(&grid, &a.out, a.image.as_deref())?;
            println!(
                "wigner hermite ({j},{k}): {}x{} samples to {}",
                xa.count,
                ya.count,
                a.out.display()
            );
            return Ok(EXIT_OK);
        }
        WignerKind::LgDiag => {
            let [j, k] = expect_indices(&a.index)?;
            wigner_lg_diag(j, k, &PhasePoint4::origin())?;
            Box::new(move |p| Ok(Complex64::new(wigner_lg_diag(j, k, p)?, 0.0)))
        }
        WignerKind::LgGeneral => {
            let [j, k, m, n] = expect_indices(&a.index)?;
            wigner_lg_closed(j, k, m, n, &PhasePoint4::origin())?;
            Box::new(move |p| wigner_lg_closed(j, k, m, n, p))
        }
        WignerKind::HgGeneral => {
            let [j, k, m, n] = expect_indices(&a.index)?;
            wigner_hg_closed(j, k, m, n, &PhasePoint4::origin())?;
            Box::new(move |p| wigner_hg_closed(j, k, m, n, p))
        }
    };

    if let Some(path) = &a.points {
        let points = output::parse_points(BufReader::new(File::open(path)?))?;
        let values = points.iter().map(eval).collect::<Result<Vec<_>>>()?;
        output::write_points_csv(create(&a.out)?, &points, &values)?;
        println!(
            "wigner {}: {} points to {}",
            value_name(&a.kind),
            points.len(),
            a.out.display()
        );
        return Ok(EXIT_OK);
    }
    if a.kind != WignerKind::LgDiag {
        return Err(Error::InvalidArgument(format!(
            "--points is required for {:?}",
            a.kind
        )));
    }
    let (xa, ya) = a.grid.axes()?;
    let grid = Grid2D::try_sample(xa, ya, |u, v| eval(&slice_point(a, u, v)))?;
    write_grid_outputs(&grid, &a.out, a.image.as_deref())?;
    println!(
        "wigner lg-diag slice: {}x{} samples to {}",
        xa.count,
        ya.count,
        a.out.display()
    );
    Ok(EXIT_OK)
}

pub fn cmd_beam(a: &BeamArgs) -> Result<i32> {
    let index = BeamIndex::new(a.p, a.ell)?;
    let params = BeamParams::new(a.w0, a.k)?;
    if !a.z.is_finite() {
        return Err(Error::NonFinite(a.z));
    }
    let norm = if a.proportional {
        Normalization::Proportional
    } else {
        Normalization::Unit
    };
    let (xa, ya) = a.grid.axes()?;
    let grid = Grid2D::sample(xa, ya, |x, y| {
        beam_field_xy(index, &params, x, y, a.z, norm)
    });
    write_grid_outputs(&grid, &a.out, a.image.as_deref())?;
    println!(
        "beam p={} ell={} z={}: {}x{} samples to {}",
        a.p,
        a.ell,
        a.z,
        xa.count,
        ya.count,
        a.out.display()
    );
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
    let report = run_suite(&a.suite, a.seed, a.budget)?;
    let mut out = create(&a.out)?;
    serde_json::to_writer_pretty(&mut out, &report).map_err(std::io::Error::from)?;
    std::io::Write::write_all(&mut out, b"\n")?;
    std::io::Write::flush(&mut out)?;
    let failed = report.failures().count();
    for c in report.failures() {
        eprintln!(
            "FAIL {}: error {:e} > tolerance {:e}",
            c.name, c.max_abs_err, c.tolerance
        );
    }
    println!(
        "verify {} seed={} {}: {} checks, {} failed, {}",
        report.suite,
        report.seed,
        a.budget,
        report.checks.len(),
        failed,
        if report.passed { "PASS" } else { "FAIL" }
    );
    Ok(report_exit_code(&report))
}

/// 0 when every check passed, 1 otherwise.
fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

pub fn report_exit_code(report: &SuiteReport) -> i32 {
    if report.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
