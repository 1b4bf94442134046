//! Command-line front end: jet spectra of matrices, spectral-mapping
//! comparison, and named demo suites.
//!
//! Exit codes: 0 success, 1 tolerance failure, 2 parse/usage, 3 spectral
//! domain, 4 cluster resolution, 5 disk violation.

mod demos;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use symcalc::funcalc::{
    jet_spectrum, spectral_map_literal, spectral_map_oracle, HoloMap, JetSpectrum,
};
use symcalc::linalg::spectral_radius;
use symcalc::Error;

use report::{MatrixFile, PairReport, SpecmapReport, SpectrumReport};

#[derive(Parser)]
#[command(
    name = "symcalc",
    about = "Jet spectra, spectral mapping, and defect demos"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the jet spectrum (eigenvalue, block length) of a matrix.
    Spectrum {
        /// Matrix file: {"n": int, "entries": [[re, im], ...]} row-major
        input: PathBuf,
        /// Clustering and rank tolerance
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Write a scatter plot of the spectrum to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Compare the literal spectral-mapping formula with the Jordan oracle.
    Specmap {
        input: PathBuf,
        /// Real polynomial coefficients c0,c1,... of a map of the disk
        #[arg(long, value_delimiter = ',', required = true)]
        poly: Vec<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run a named defect suite: fourier, bargmann, hardy, covariance,
    /// brackets or nogo.
    Demo {
        name: String,
        /// Line-grid size for operator demos
        #[arg(long, default_value_t = 256)]
        grid: usize,
        /// Planck parameter
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// Heisenberg-box nodes per axis
        #[arg(long = "box", default_value_t = 64)]
        box_nodes: usize,
        /// Contour nodes for calculus demos (reserved for parity of flags)
        #[arg(long, default_value_t = 256)]
        contour_nodes: usize,
        /// Worker threads for parallel slices (outputs do not depend on it)
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn read_matrix(path: &PathBuf) -> Result<symcalc::linalg::CMat, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read input: {e}"))?;
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse matrix file: {e}"))?;
    file.to_matrix()
}

fn error_code(err: &Error) -> u8 {
    match err {
        Error::SpectralDomain(_) => 3,
        Error::ClusterResolution(_) => 4,
        Error::DiskViolation(_) => 5,
        _ => 2,
    }
}

fn cmd_spectrum(input: PathBuf, tol: f64, svg_path: Option<PathBuf>) -> ExitCode {
    let matrix = match read_matrix(&input) {
        Ok(m) => m,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match spectral_radius(&matrix) {
        Ok(r) if r < 1.0 => {}
        Ok(r) => {
            eprintln!("error: spectral radius {r} is not < 1");
            return ExitCode::from(3);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    }
    let spectrum = match jet_spectrum(&matrix, tol) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let report = SpectrumReport::from_spectrum(&spectrum, tol);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    if let Some(path) = svg_path {
        if let Err(e) = std::fs::write(&path, svg::spectrum_svg(&report.pairs)) {
            eprintln!("error: cannot write svg: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}

fn to_pairs(spec: &JetSpectrum) -> Vec<PairReport> {
    spec.pairs
        .iter()
        .map(|(lambda, k)| PairReport {
            re: lambda.re,
            im: lambda.im,
            k: *k,
        })
        .collect()
}

fn cmd_specmap(input: PathBuf, poly: Vec<f64>, tol: f64) -> ExitCode {
    let matrix = match read_matrix(&input) {
        Ok(m) => m,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match spectral_radius(&matrix) {
        Ok(r) if r < 1.0 => {}
        _ => {
            eprintln!("error: spectral radius must be < 1");
            return ExitCode::from(3);
        }
    }
    let phi = HoloMap::polynomial(poly.iter().map(|c| Complex64::new(*c, 0.0)).collect());
    // the polynomial must keep the closed disk: check a boundary sample
    for j in 0..256 {
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 256.0);
        if phi.eval(z).norm() > 1.0 + 1e-9 {
            eprintln!("error: polynomial leaves the unit disk at the boundary");
            return ExitCode::from(5);
        }
    }
    let spectrum = match jet_spectrum(&matrix, tol) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let literal: Result<Vec<_>, _> = spectrum
        .pairs
        .iter()
        .map(|pair| spectral_map_literal(&phi, *pair))
        .collect();
    let literal = match literal {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let oracle = match spectral_map_oracle(&phi, &spectrum) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };

    // agreement: exact multiset match, set-level match, or disagreement
    let literal_spec = JetSpectrum::new(literal.clone());
    let agreement = if literal_spec.matches(&oracle, 10.0 * tol) {
        "multiset"
    } else {
        let as_set = |s: &JetSpectrum| {
            let mut v: Vec<(i64, i64, usize)> = s
                .pairs
                .iter()
                .map(|(l, k)| ((l.re / tol) as i64, (l.im / tol) as i64, *k))
                .collect();
            v.sort();
            v.dedup();
            v
        };
        if as_set(&literal_spec) == as_set(&oracle) {
            "set_level"
        } else {
            "disagreement"
        }
    };

    let report = SpecmapReport {
        tol,
        input: to_pairs(&spectrum),
        literal: literal
            .iter()
            .map(|(l, k)| PairReport {
                re: l.re,
                im: l.im,
                k: *k,
            })
            .collect(),
        oracle: to_pairs(&oracle),
        agreement: agreement.into(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    ExitCode::SUCCESS
}

fn cmd_demo(name: &str, grid: usize, hbar: f64, box_nodes: usize) -> ExitCode {
    let rows = match name {
        "fourier" => demos::demo_fourier(grid),
        "bargmann" => demos::demo_bargmann(grid),
        "hardy" => demos::demo_hardy(grid),
        "covariance" => demos::demo_covariance(grid, hbar),
        "brackets" => demos::demo_brackets(box_nodes, hbar),
        "nogo" => demos::demo_nogo(grid, hbar),
        other => {
            eprintln!("error: unknown demo '{other}'");
            return ExitCode::from(2);
        }
    };
    let mut all_pass = true;
    println!("{:<34} {:>13} {:>10}  result", "check", "measured", "bound");
    for row in &rows {
        let relation = if row.below { "≤" } else { "≥" };
        let verdict = if row.pass() { "pass" } else { "FAIL" };
        all_pass &= row.pass();
        println!(
            "{:<34} {:>13.4e} {} {:>8.1e}  {}",
            row.name, row.measured, relation, row.bound, verdict
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum { input, tol, svg } => cmd_spectrum(input, tol, svg),
        Command::Specmap { input, poly, tol } => cmd_specmap(input, poly, tol),
        Command::Demo {
            name,
            grid,
            hbar,
            box_nodes,
            contour_nodes: _,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .ok();
            }
            cmd_demo(&name, grid, hbar, box_nodes)
        }
    }
}
