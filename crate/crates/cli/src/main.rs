//! Command-line frontend: eigen-decompositions, pointwise evaluation and
//! analytic extension on grids, mu/lambda spectra, approximation reports,
//! and the bound-verification suite.
//!
//! Exit codes: 0 success, 1 verification found a violated bound,
//! 2 invalid parameters, 3 solver failure.

mod output;

use clap::{Args, Parser, Subcommand};
use gpswf_core::approx::{
    self, error_report, gauss_jacobi, report_from_coeffs, weierstrass_coeffs, weierstrass_k_terms,
    Builtin, CubicSpline,
};
use gpswf_core::eigensystem::{build_matrix, default_truncation, solve};
use gpswf_core::prolate::Gpswf;
use gpswf_core::specfun::WeightParams;
use gpswf_core::verify::{self, BoundReport};
use gpswf_core::Error as CoreError;
use output::{csv_row, float_array, fmt_float, Json};
use std::f64::consts::PI;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gpswf",
    version,
    about = "Generalized prolate spheroidal wave functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BandwidthArgs {
    /// Bandwidth c (> 0)
    #[arg(long, conflicts_with = "c_pi")]
    c: Option<f64>,
    /// Bandwidth as a multiple of pi (e.g. --c-pi 5 means c = 5 pi)
    #[arg(long = "c-pi")]
    c_pi: Option<f64>,
}

impl BandwidthArgs {
    fn resolve(&self) -> Result<f64, String> {
        let c = match (self.c, self.c_pi) {
            (Some(c), None) => c,
            (None, Some(m)) => m * PI,
            (None, None) => return Err("one of --c or --c-pi is required".into()),
            (Some(_), Some(_)) => unreachable!("clap conflict"),
        };
        if !(c > 0.0) || !c.is_finite() {
            return Err(format!("bandwidth c = {c} must be positive and finite"));
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the eigensystem and write chi_n, coefficients, mu, lambda (JSON)
    Eigen {
        #[arg(long)]
        alpha: f64,
        /// Defaults to alpha (symmetric weight)
        #[arg(long)]
        beta: Option<f64>,
        #[command(flatten)]
        bandwidth: BandwidthArgs,
        /// Largest eigenfunction index
        #[arg(long)]
        nmax: usize,
        /// Truncation order of the matrix (default: heuristic)
        #[arg(long)]
        trunc: Option<usize>,
        /// Output path (- for stdout)
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Evaluate eigenfunctions on a grid (CSV); points outside [-1,1] use
    /// the analytic extension (symmetric weight only)
    Eval {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: Option<f64>,
        #[command(flatten)]
        bandwidth: BandwidthArgs,
        /// Eigenfunction indices, comma separated (e.g. 0,5,15)
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Grid as start:stop:step
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Write n, chi, |mu|, lambda, log10(lambda) for n = 0..nmax (CSV)
    Spectrum {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        bandwidth: BandwidthArgs,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Project a function on the GPSWF basis and report errors vs bounds (JSON)
    Approx {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        bandwidth: BandwidthArgs,
        /// Built-in function: sinc | eta | weierstrass
        #[arg(long, conflicts_with = "input")]
        func: Option<String>,
        /// CSV file of x,f(x) samples (cubic-spline interpolated)
        #[arg(long)]
        input: Option<String>,
        /// Weierstrass exponent s
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        /// Truncation index N of the projection S_N
        #[arg(long)]
        nmax: usize,
        /// Constant C1 of the error bound (the analysis leaves it unspecified)
        #[arg(long, default_value_t = 1.0)]
        c1: f64,
        /// Almost-band-limited offset eps_Omega added to the bounds
        #[arg(long, default_value_t = 0.0)]
        eps_omega: f64,
        /// ||f||_{L^2(R)} for the bound columns (default: known value for
        /// sinc, numerical for eta, 0 otherwise)
        #[arg(long)]
        norm_f: Option<f64>,
        /// Optional CSV of pointwise errors
        #[arg(long)]
        pointwise_out: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Run the bound-verification suite (JSON reports; exit 1 on violation)
    Verify {
        /// Restrict to one (alpha, c) instead of the standard matrix
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        bandwidth: BandwidthArgs,
        #[arg(long)]
        nmax: Option<usize>,
        /// Filter by report name prefix (e.g. hs, chi, local, sup, coeff,
        /// derivative, moment, lambda)
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Solver(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

enum AppError {
    Invalid(String),
    Solver(String),
    Io(std::io::Error),
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> AppError {
        match e {
            CoreError::Domain { .. } | CoreError::InvalidParameter(_) => {
                AppError::Invalid(e.to_string())
            }
            other => AppError::Solver(other.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> AppError {
        AppError::Io(e)
    }
}

fn invalid(msg: impl Into<String>) -> AppError {
    AppError::Invalid(msg.into())
}

fn write_out(path: &str, content: &str) -> Result<(), AppError> {
    if path == "-" {
        std::io::stdout().write_all(content.as_bytes())?;
    } else {
        std::fs::write(path, content)?;
    }
    Ok(())
}

fn validated_params(alpha: f64, beta: Option<f64>) -> Result<WeightParams, AppError> {
    WeightParams::new(alpha, beta.unwrap_or(alpha)).map_err(AppError::from)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, AppError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(invalid(format!("grid {spec:?} is not start:stop:step")));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| invalid(format!("grid {spec:?}: {e}")))?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !(step > 0.0) || !(start < stop) {
        return Err(invalid(format!(
            "grid needs step > 0 and start < stop, got {spec:?}"
        )));
    }
    let count = ((stop - start) / step).round() as usize + 1;
    Ok((0..count)
        .map(|i| (start + step * i as f64).min(stop))
        .collect())
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Eigen {
            alpha,
            beta,
            bandwidth,
            nmax,
            trunc,
            out,
        } => {
            let params = validated_params(alpha, beta)?;
            let c = bandwidth.resolve().map_err(invalid)?;
            let order = trunc.unwrap_or_else(|| default_truncation(nmax, c, alpha));
            let matrix = build_matrix(params, c, order)?;
            let pairs = solve(&matrix, nmax)?;
            let symmetric = params.is_symmetric();
            let family = if symmetric {
                Some(Gpswf::family(pairs.clone())?)
            } else {
                None
            };
            let mut items = Vec::new();
            for (i, pair) in pairs.iter().enumerate() {
                let mut fields = vec![
                    ("n".to_string(), Json::Int(pair.n() as i64)),
                    ("chi".to_string(), Json::Float(pair.chi())),
                    ("coeffs".to_string(), float_array(pair.coeffs())),
                ];
                if let Some(fam) = &family {
                    fields.push(("mu_abs".to_string(), Json::Float(fam[i].mu_abs())));
                    fields.push(("lambda".to_string(), Json::Float(fam[i].lambda())));
                }
                items.push(Json::Object(fields));
            }
            let doc = Json::Object(vec![
                ("schema".to_string(), Json::Str("gpswf/1".to_string())),
                ("alpha".to_string(), Json::Float(params.alpha())),
                ("beta".to_string(), Json::Float(params.beta())),
                ("c".to_string(), Json::Float(c)),
                ("trunc".to_string(), Json::Int(order as i64)),
                ("pairs".to_string(), Json::Array(items)),
            ]);
            write_out(&out, &doc.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            alpha,
            beta,
            bandwidth,
            n,
            grid,
            trunc,
            format,
            out,
        } => {
            let params = validated_params(alpha, beta)?;
            let c = bandwidth.resolve().map_err(invalid)?;
            if n.is_empty() {
                return Err(invalid("at least one eigenfunction index is required"));
            }
            let points = parse_grid(&grid)?;
            let n_top = *n.iter().max().unwrap();
            let order = trunc.unwrap_or_else(|| default_truncation(n_top, c, alpha));
            let matrix = build_matrix(params, c, order)?;
            let pairs = solve(&matrix, n_top)?;
            let outside = points.iter().any(|x| x.abs() > 1.0);
            if outside && !params.is_symmetric() {
                return Err(invalid(
                    "grid extends beyond [-1, 1]: the analytic extension needs alpha == beta",
                ));
            }
            let family = if params.is_symmetric() {
                Some(Gpswf::family(pairs.clone())?)
            } else {
                None
            };
            let mut values = vec![Vec::with_capacity(points.len()); n.len()];
            for &x in &points {
                for (col, &idx) in n.iter().enumerate() {
                    let v = if x.abs() <= 1.0 {
                        gpswf_core::prolate::eval_inside(&pairs[idx], x)?
                    } else {
                        family.as_ref().unwrap()[idx].eval_extended(x)?
                    };
                    values[col].push(v);
                }
            }
            let text = match format {
                Format::Csv => {
                    let mut text = String::new();
                    let mut header = vec!["x".to_string()];
                    for &idx in &n {
                        header.push(format!(
                            "psi(n={idx},alpha={},beta={},c={},trunc={order})",
                            fmt_float(params.alpha()),
                            fmt_float(params.beta()),
                            fmt_float(c)
                        ));
                    }
                    text.push_str(&csv_row(&header));
                    for (i, &x) in points.iter().enumerate() {
                        let mut row = vec![fmt_float(x)];
                        for col in values.iter() {
                            row.push(fmt_float(col[i]));
                        }
                        text.push_str(&csv_row(&row));
                    }
                    text
                }
                Format::Json => {
                    let series: Vec<Json> = n
                        .iter()
                        .zip(&values)
                        .map(|(&idx, col)| {
                            Json::Object(vec![
                                ("n".to_string(), Json::Int(idx as i64)),
                                ("values".to_string(), float_array(col)),
                            ])
                        })
                        .collect();
                    Json::Object(vec![
                        ("schema".to_string(), Json::Str("gpswf/1".to_string())),
                        ("alpha".to_string(), Json::Float(params.alpha())),
                        ("beta".to_string(), Json::Float(params.beta())),
                        ("c".to_string(), Json::Float(c)),
                        ("trunc".to_string(), Json::Int(order as i64)),
                        ("x".to_string(), float_array(&points)),
                        ("series".to_string(), Json::Array(series)),
                    ])
                    .render()
                }
            };
            write_out(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            alpha,
            bandwidth,
            nmax,
            trunc,
            format,
            out,
        } => {
            let params = validated_params(alpha, None)?;
            let c = bandwidth.resolve().map_err(invalid)?;
            let order = trunc.unwrap_or_else(|| default_truncation(nmax, c, alpha));
            let matrix = build_matrix(params, c, order)?;
            let family = Gpswf::family(solve(&matrix, nmax)?)?;
            let text = match format {
                Format::Csv => {
                    let mut text = String::new();
                    text.push_str(&csv_row(&[
                        "n".into(),
                        "chi".into(),
                        "mu_abs".into(),
                        "lambda".into(),
                        "log10_lambda".into(),
                    ]));
                    for psi in &family {
                        text.push_str(&csv_row(&[
                            psi.n().to_string(),
                            fmt_float(psi.chi()),
                            fmt_float(psi.mu_abs()),
                            fmt_float(psi.lambda()),
                            fmt_float(psi.lambda_log10()),
                        ]));
                    }
                    text
                }
                Format::Json => {
                    let rows: Vec<Json> = family
                        .iter()
                        .map(|psi| {
                            Json::Object(vec![
                                ("n".to_string(), Json::Int(psi.n() as i64)),
                                ("chi".to_string(), Json::Float(psi.chi())),
                                ("mu_abs".to_string(), Json::Float(psi.mu_abs())),
                                ("lambda".to_string(), Json::Float(psi.lambda())),
                                ("log10_lambda".to_string(), Json::Float(psi.lambda_log10())),
                            ])
                        })
                        .collect();
                    Json::Object(vec![
                        ("schema".to_string(), Json::Str("gpswf/1".to_string())),
                        ("alpha".to_string(), Json::Float(params.alpha())),
                        ("c".to_string(), Json::Float(c)),
                        ("trunc".to_string(), Json::Int(order as i64)),
                        ("rows".to_string(), Json::Array(rows)),
                    ])
                    .render()
                }
            };
            write_out(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Approx {
            alpha,
            bandwidth,
            func,
            input,
            s,
            nmax,
            c1,
            eps_omega,
            norm_f,
            pointwise_out,
            out,
        } => {
            let c = bandwidth.resolve().map_err(invalid)?;
            WeightParams::symmetric(alpha)?;
            enum Target {
                Builtin(Builtin),
                Sampled(CubicSpline, String),
            }
            let target = match (&func, &input) {
                (Some(name), None) => {
                    let param = if name == "weierstrass" { s } else { c };
                    Target::Builtin(Builtin::new(name, param)?)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)?;
                    Target::Sampled(CubicSpline::from_csv(&text)?, format!("csv:{path}"))
                }
                _ => return Err(invalid("exactly one of --func or --input is required")),
            };
            let norm = norm_f.unwrap_or(match &target {
                Target::Builtin(Builtin::Sinc { .. }) => (PI / c).sqrt(),
                Target::Builtin(Builtin::Eta { .. }) => eta_l2_norm(c),
                _ => 0.0,
            });
            let report = match &target {
                Target::Builtin(b @ Builtin::Weierstrass { .. }) => {
                    // exact series coefficients instead of quadrature
                    let basis = approx::build_basis(alpha, c, nmax)?;
                    let quad = gauss_jacobi(alpha, basis[0].pair().truncation() + 20)?;
                    let coeffs = weierstrass_coeffs(s, &basis, weierstrass_k_terms(s, alpha))?;
                    let f = *b;
                    report_from_coeffs(
                        move |x| f.eval(x),
                        b.name(),
                        coeffs,
                        &basis,
                        &quad,
                        norm,
                        c1,
                        eps_omega,
                    )?
                }
                Target::Builtin(b) => {
                    let f = *b;
                    error_report(
                        move |x| f.eval(x),
                        b.name(),
                        c,
                        alpha,
                        nmax,
                        norm,
                        c1,
                        eps_omega,
                    )?
                }
                Target::Sampled(spline, name) => {
                    let sp = spline.clone();
                    error_report(
                        move |x| sp.eval(x),
                        name,
                        c,
                        alpha,
                        nmax,
                        norm,
                        c1,
                        eps_omega,
                    )?
                }
            };
            if let Some(path) = pointwise_out {
                let basis = approx::build_basis(alpha, c, nmax)?;
                let mut text = String::new();
                text.push_str(&csv_row(&[
                    "x".into(),
                    "f".into(),
                    "s_n".into(),
                    "error".into(),
                ]));
                for i in 0..approx::SUP_GRID {
                    let x = -1.0 + 2.0 * i as f64 / (approx::SUP_GRID - 1) as f64;
                    let fv = match &target {
                        Target::Builtin(b) => b.eval(x),
                        Target::Sampled(spline, _) => spline.eval(x),
                    };
                    let sv = approx::reconstruct(&report.coeffs, &basis, x)?;
                    text.push_str(&csv_row(&[
                        fmt_float(x),
                        fmt_float(fv),
                        fmt_float(sv),
                        fmt_float(fv - sv),
                    ]));
                }
                write_out(&path, &text)?;
            }
            let doc = Json::Object(vec![
                ("schema".to_string(), Json::Str("gpswf/1".to_string())),
                ("func".to_string(), Json::Str(report.func.clone())),
                ("alpha".to_string(), Json::Float(report.alpha)),
                ("c".to_string(), Json::Float(report.c)),
                ("N".to_string(), Json::Int(report.n as i64)),
                ("l2_error".to_string(), Json::Float(report.l2_error)),
                ("sup_error".to_string(), Json::Float(report.sup_error)),
                ("bound_l2".to_string(), Json::Float(report.bound_l2)),
                ("bound_sup".to_string(), Json::Float(report.bound_sup)),
                ("eps_omega".to_string(), Json::Float(report.eps_omega)),
                ("C1".to_string(), Json::Float(report.c1)),
                (
                    "hypothesis_met".to_string(),
                    Json::Bool(report.hypothesis_met),
                ),
                ("min_C1_l2".to_string(), Json::Float(report.min_c1_l2)),
                ("min_C1_sup".to_string(), Json::Float(report.min_c1_sup)),
                ("coeffs".to_string(), float_array(&report.coeffs)),
            ]);
            write_out(&out, &doc.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            alpha,
            bandwidth,
            nmax,
            suite,
            out,
        } => {
            let reports = match alpha {
                None => verify::run_standard_suite(suite.as_deref())?,
                Some(al) => {
                    let params = WeightParams::symmetric(al)?;
                    let c = bandwidth.resolve().map_err(invalid)?;
                    // deep enough for the Hilbert-Schmidt tail by default
                    let n_top = nmax.unwrap_or((2.0 * c / PI).ceil() as usize + 32);
                    single_combo_suite(params, c, n_top, suite.as_deref())?
                }
            };
            let items: Vec<Json> = reports.iter().map(report_json).collect();
            let doc = Json::Object(vec![
                ("schema".to_string(), Json::Str("gpswf/1".to_string())),
                ("reports".to_string(), Json::Array(items)),
            ]);
            write_out(&out, &doc.render())?;
            if reports.iter().any(|r| r.violated()) {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

/// All applicable checks for one (alpha, c) pair.
fn single_combo_suite(
    params: WeightParams,
    c: f64,
    n_top: usize,
    suite: Option<&str>,
) -> Result<Vec<BoundReport>, AppError> {
    let alpha = params.alpha();
    let wanted = |name: &str| suite.map_or(true, |s| name.starts_with(s));
    let order = default_truncation(n_top, c, alpha);
    let matrix = build_matrix(params, c, order)?;
    let pairs = solve(&matrix, n_top)?;
    let mut reports = Vec::new();
    if wanted("chi_bounds") {
        reports.push(verify::check_chi_bounds(&pairs));
    }
    let family = Gpswf::family(pairs)?;
    let grid: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    for psi in &family {
        if wanted("local_estimate") {
            reports.push(verify::check_local_estimate(psi.pair(), &grid));
        }
        if wanted("sup_bound") {
            reports.push(verify::check_sup_bound(psi.pair()));
        }
        if wanted("coeff_decay") {
            reports.push(verify::check_coeff_decay_kummer(psi));
        }
        if wanted("coeff_positivity") {
            reports.push(verify::check_coeff_positivity_and_decay2(
                psi,
                &verify::AppendixConstants::new(alpha),
            ));
        }
    }
    if wanted("hs_identity") {
        let spectrum: Vec<f64> = family.iter().map(|p| p.mu_abs()).collect();
        reports.push(verify::check_hs_identity(&spectrum, alpha)?);
    }
    Ok(reports)
}

fn report_json(r: &BoundReport) -> Json {
    let params = Json::Object(
        r.parameters
            .iter()
            .map(|(k, v)| (k.clone(), Json::Float(*v)))
            .collect(),
    );
    let mut fields = vec![
        ("name".to_string(), Json::Str(r.name.clone())),
        ("parameters".to_string(), params),
        ("lhs".to_string(), Json::Float(r.lhs)),
        ("rhs".to_string(), Json::Float(r.rhs)),
        ("satisfied".to_string(), Json::Bool(r.satisfied)),
        ("margin".to_string(), Json::Float(r.margin)),
        ("applicable".to_string(), Json::Bool(r.applicable)),
    ];
    if let Some(note) = &r.note {
        fields.push(("note".to_string(), Json::Str(note.clone())));
    }
    Json::Object(fields)
}

/// ||eta||_{L^2(R)} by wide-window quadrature; eta ~ x^{-3} so the tail of
/// eta^2 beyond the window contributes ~ X^{-5}.
fn eta_l2_norm(c: f64) -> f64 {
    let eta = Builtin::Eta { c };
    let x_max = 200.0;
    let panels = (x_max * (c + 2.0) / PI).ceil() as usize;
    let h = x_max / panels as f64;
    // 4-point Gauss-Legendre per panel; doubled for the negative half-axis
    let gx = [
        -0.861136311594052575,
        -0.339981043584856265,
        0.339981043584856265,
        0.861136311594052575,
    ];
    let gw = [
        0.347854845137453857,
        0.652145154862546143,
        0.652145154862546143,
        0.347854845137453857,
    ];
    let mut acc = 0.0;
    for p in 0..panels {
        let a = p as f64 * h;
        for (x, w) in gx.iter().zip(gw) {
            let t = a + 0.5 * h * (x + 1.0);
            acc += 0.5 * h * w * eta.eval(t).powi(2);
        }
    }
    (2.0 * acc).sqrt()
}
