//! Command dispatch for the `relcalc` binary.
//!
//! Every subcommand reads its inputs, calls the library, and prints one JSON
//! report. Exit codes: 0 success, 1 schema or usage error, 2 precondition or
//! classification error raised by the library.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use relcalc::debranges::build_model;
use relcalc::extensions::{extend_by_contraction, index_budget, ExtensionParameter};
use relcalc::io::{
    emit_report, matrix_doc, parse_complex, parse_complex_list, parse_document, parse_matrix, stable,
    stable_c, IoError, ParameterDoc, RelationDocument, ReportDocument, ValidationDoc,
};
use relcalc::jacobi::{JacobiModel, Tau};
use relcalc::poly::match_multisets;
use relcalc::spectra;
use relcalc::transforms::z_transform;
use relcalc::{LinearRelation, RelError, ToleranceProfile, C64};

#[derive(Debug, Parser)]
#[command(name = "relcalc", version, about = "Linear relations: adjoints, transforms, extensions, spectra")]
pub struct Cli {
    #[command(flatten)]
    pub tol: TolArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    /// Relative singular-value cutoff for ranks.
    #[arg(long = "tol-rank-rel", global = true, allow_negative_numbers = true)]
    pub rank_rel: Option<f64>,
    /// Absolute floor for Hermitian-form eigenvalues.
    #[arg(long = "tol-psd-abs", global = true, allow_negative_numbers = true)]
    pub psd_abs: Option<f64>,
    /// Projector-distance tolerance for subspace equality.
    #[arg(long = "tol-eq", global = true, allow_negative_numbers = true)]
    pub eq_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JacobiReport {
    Eig,
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeBrangesReport {
    Eig,
    Phi,
    Validate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parts, classification, deficiency indices at ±i and spectrum.
    Analyze { file: PathBuf },
    /// The adjoint relation and its analysis.
    Adjoint { file: PathBuf },
    /// The Z transform at ζ and its analysis.
    Ztransform {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// Extension of a symmetric relation by a contraction on ker(A* − ζ).
    Extend {
        file: PathBuf,
        /// JSON matrix (rows of [re, im]) from ker(A* − ζ) to ker(A* − ζ̄).
        #[arg(long)]
        k: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "i")]
        zeta: String,
    },
    /// Finite eigenvalues with multiplicities and the infinite part.
    Spectrum { file: PathBuf },
    /// Truncated Jacobi model with boundary parameter τ.
    Jacobi {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        n: usize,
        /// Complex literal or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, value_enum, default_value = "eig")]
        report: JacobiReport,
    },
    /// Polynomial de Branges model with extension S_τ.
    Debranges {
        /// Comma-separated roots of e, all in the open lower half-plane.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true, default_value = "i")]
        w: String,
        #[arg(long, value_enum, default_value = "eig")]
        report: DeBrangesReport,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(IoError),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Io(e)
    }
}

impl From<RelError> for CliError {
    fn from(e: RelError) -> Self {
        CliError::Io(IoError::Relation(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(IoError::Schema(_)) => 1,
            CliError::Io(IoError::Relation(_)) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string().into_bytes();
            let (stdout, stderr) = if code == 0 { (text, Vec::new()) } else { (Vec::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            code: 0,
            stdout: emit_report(&report),
            stderr: Vec::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: Vec::new(),
            stderr: format!("error: {}\n", e.message()).into_bytes(),
        },
    }
}

/// Environment default, then command-line overrides.
pub fn base_tolerance(args: &TolArgs) -> Result<ToleranceProfile, CliError> {
    let mut tol = ToleranceProfile::from_env();
    if let Some(v) = args.rank_rel {
        tol.rank_rel = v;
    }
    if let Some(v) = args.psd_abs {
        tol.psd_abs = v;
    }
    if let Some(v) = args.eq_tol {
        tol.eq_tol = v;
    }
    tol.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(tol)
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// A relation file; its own `tol` applies unless a flag overrides it.
fn load_relation(path: &Path, args: &TolArgs) -> Result<LinearRelation, CliError> {
    let mut doc = parse_document(&read(path)?)?;
    let mut tol = doc.tol.unwrap_or(base_tolerance(args)?);
    if let Some(v) = args.rank_rel {
        tol.rank_rel = v;
    }
    if let Some(v) = args.psd_abs {
        tol.psd_abs = v;
    }
    if let Some(v) = args.eq_tol {
        tol.eq_tol = v;
    }
    doc.tol = None;
    Ok(doc.to_relation(tol)?)
}

fn parse_reals(s: &str, what: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Usage(format!("--{what}: malformed real number {x:?}")))
        })
        .collect()
}

pub fn parse_tau(s: &str) -> Result<Tau, CliError> {
    if s.trim().eq_ignore_ascii_case("inf") {
        Ok(Tau::Infinity)
    } else {
        Ok(Tau::Finite(parse_complex(s)?))
    }
}

fn tau_doc(t: Tau) -> serde_json::Value {
    match t {
        Tau::Infinity => serde_json::Value::from("inf"),
        Tau::Finite(z) => serde_json::json!(stable_c(z)),
    }
}

fn check(name: &str, value: f64, tolerance: f64) -> ValidationDoc {
    ValidationDoc {
        check: name.to_string(),
        value: stable(value),
        tolerance,
        passed: value <= tolerance,
    }
}

pub fn execute(cli: &Cli) -> Result<ReportDocument, CliError> {
    match &cli.command {
        Command::Analyze { file } => {
            let t = load_relation(file, &cli.tol)?;
            Ok(ReportDocument::analyze("analyze", &t))
        }
        Command::Adjoint { file } => {
            let t = load_relation(file, &cli.tol)?.adjoint();
            let mut rep = ReportDocument::analyze("adjoint", &t);
            rep.relation = Some(RelationDocument::from_relation(&t));
            Ok(rep)
        }
        Command::Ztransform { file, zeta } => {
            let z = parse_complex(zeta)?;
            let t = z_transform(&load_relation(file, &cli.tol)?, z);
            let mut rep = ReportDocument::analyze("ztransform", &t);
            rep.parameters = Some(ParameterDoc {
                zeta: Some(stable_c(z)),
                ..Default::default()
            });
            rep.relation = Some(RelationDocument::from_relation(&t));
            Ok(rep)
        }
        Command::Extend { file, k, zeta } => {
            let z = parse_complex(zeta)?;
            let a = load_relation(file, &cli.tol)?;
            let kmat = parse_matrix(&read(k)?)?;
            let p = ExtensionParameter::on_full_kernel(&a, z, kmat.clone());
            let hat = extend_by_contraction(&a, &p)?;
            let budget = index_budget(&a, &hat)?;
            let mut rep = ReportDocument::analyze("extend", &hat);
            rep.parameters = Some(ParameterDoc {
                zeta: Some(stable_c(z)),
                k: Some(matrix_doc(&kmat)),
                ..Default::default()
            });
            let gap = budget.eta_a as f64 - (budget.eta_hat + budget.quotient_dim) as f64;
            rep.validation.push(check("index_budget", gap.abs(), 0.0));
            rep.relation = Some(RelationDocument::from_relation(&hat));
            Ok(rep)
        }
        Command::Spectrum { file } => {
            let t = load_relation(file, &cli.tol)?;
            let spec = spectra::eigenvalues(&t)?;
            let mut rep = ReportDocument::new("spectrum");
            rep.spectrum = Some((&spec).into());
            Ok(rep)
        }
        Command::Jacobi { b, q, n, tau, report } => {
            let tol = base_tolerance(&cli.tol)?;
            let tau = parse_tau(tau)?;
            let model = JacobiModel::new(parse_reals(b, "b")?, parse_reals(q, "q")?, *n)?.with_tol(tol);
            let t = model.j(tau);
            let mut rep = ReportDocument::analyze("jacobi", &t);
            rep.parameters = Some(ParameterDoc {
                tau: Some(tau_doc(tau)),
                ..Default::default()
            });
            if *report == JacobiReport::Validate {
                let dist = model.extension_distance(tau, C64::new(0.0, 1.0))?;
                rep.validation.push(check("extension_distance_at_i", dist, 1e-7));
                let upper = match tau {
                    Tau::Finite(z) => z.im >= 0.0,
                    Tau::Infinity => true,
                };
                if upper {
                    let spec = spectra::eigenvalues(&t)?;
                    let worst = spec.values().iter().map(|z| (-z.im).max(0.0)).fold(0.0, f64::max);
                    rep.validation.push(check("eigenvalues_below_real_axis", worst, 1e-9));
                }
            }
            Ok(rep)
        }
        Command::Debranges { roots, tau, w, report } => {
            let tol = base_tolerance(&cli.tol)?;
            let tau = parse_complex(tau)?;
            let w = parse_complex(w)?;
            let model = build_model(&parse_complex_list(roots)?)?.with_tol(tol);
            let st = model.s_tau(tau, w)?;
            let mut rep = match report {
                DeBrangesReport::Eig => ReportDocument::analyze("debranges", &st),
                _ => ReportDocument::new("debranges"),
            };
            rep.parameters = Some(ParameterDoc {
                tau: Some(serde_json::json!(stable_c(tau))),
                w: Some(stable_c(w)),
                ..Default::default()
            });
            match report {
                DeBrangesReport::Eig => {}
                DeBrangesReport::Phi => {
                    rep.polynomial = Some(model.phi_tau(tau).coeffs.iter().map(|&z| stable_c(z)).collect());
                    rep.roots = Some(model.spectrum_via_phi(tau).into_iter().map(stable_c).collect());
                }
                DeBrangesReport::Validate => {
                    rep.set_spectrum(&st);
                    let pencil: Vec<C64> = spectra::eigenvalues(&st)?
                        .multiset()
                        .into_iter()
                        .filter(|z| z.im >= -1e-9 * (1.0 + z.norm()))
                        .collect();
                    let phi = model.spectrum_via_phi(tau);
                    let gap = match_multisets(&phi, &pencil).unwrap_or(f64::INFINITY);
                    rep.validation.push(check("phi_roots_vs_pencil", gap, 1e-6));
                    rep.roots = Some(phi.into_iter().map(stable_c).collect());
                }
            }
            Ok(rep)
        }
    }
}
