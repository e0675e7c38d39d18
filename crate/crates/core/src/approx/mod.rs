//! Spectral approximation on the GPSWF basis: projection S_N f, measured
//! errors against the theoretical bound shapes, the exact series for the
//! Weierstrass-function coefficients, and the built-in test functions.

pub mod spline;

pub use crate::quadrature::{gauss_jacobi, gauss_jacobi_general, QuadratureRule};
pub use spline::CubicSpline;

use crate::eigensystem::{build_matrix, default_truncation, solve};
use crate::error::{Error, Result};
use crate::prolate::{weight_ladder_f64, Gpswf};
use crate::specfun::bessel::bessel_j_sequence;
use crate::specfun::WeightParams;
use std::f64::consts::PI;

/// Projection coefficients <f, psi_k> for every basis element.
pub fn project<F: Fn(f64) -> f64>(
    f: F,
    basis: &[Gpswf],
    quad: &QuadratureRule,
) -> Result<Vec<f64>> {
    let trunc = basis.first().map(|p| p.pair().truncation()).unwrap_or(0);
    if quad.size() < trunc {
        return Err(Error::InvalidParameter(format!(
            "quadrature size {} below basis truncation {trunc}",
            quad.size()
        )));
    }
    let table = basis_table(basis, quad.nodes())?;
    let fw: Vec<f64> = quad
        .nodes()
        .iter()
        .zip(quad.weights())
        .map(|(&x, &w)| w * f(x))
        .collect();
    Ok(table
        .iter()
        .map(|psis| psis.iter().zip(&fw).map(|(p, fw)| p * fw).sum())
        .collect())
}

/// S_N-style synthesis at one point: sum_k coeffs_k psi_k(x).
pub fn reconstruct(coeffs: &[f64], basis: &[Gpswf], x: f64) -> Result<f64> {
    if coeffs.len() != basis.len() {
        return Err(Error::InvalidParameter(format!(
            "coefficient/basis length mismatch: {} vs {}",
            coeffs.len(),
            basis.len()
        )));
    }
    let mut acc = 0.0;
    for (c, psi) in coeffs.iter().zip(basis) {
        acc += c * psi.eval_inside(x)?;
    }
    Ok(acc)
}

/// psi values of every basis element at every point: table[k][i] = psi_k(x_i).
fn basis_table(basis: &[Gpswf], points: &[f64]) -> Result<Vec<Vec<f64>>> {
    let first = basis
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty basis".into()))?;
    let trunc = first.pair().truncation();
    let rec = crate::specfun::JacobiRecurrence::new(first.pair().params(), trunc + 2);
    let mut table = vec![vec![0.0_f64; points.len()]; basis.len()];
    for (i, &x) in points.iter().enumerate() {
        let ps = rec.eval_all(trunc, x)?;
        for (k, psi) in basis.iter().enumerate() {
            let mut acc = 0.0;
            for (b, p) in psi.pair().coeffs().iter().zip(&ps) {
                acc += b * p;
            }
            table[k][i] = acc;
        }
    }
    Ok(table)
}

/// Projection report: measured weighted-L2 and sup errors of f - S_N f next
/// to the theoretical bound shapes
/// C1 sqrt(lambda_N) chi_N^{(1+a)/2} ||f|| (+ eps_Omega) and
/// C1 sqrt(lambda_N) chi_N^{1+a/2} ||f|| (+ eps_Omega).
#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub func: String,
    pub c: f64,
    pub alpha: f64,
    pub n: usize,
    pub coeffs: Vec<f64>,
    pub l2_error: f64,
    pub sup_error: f64,
    pub bound_l2: f64,
    pub bound_sup: f64,
    pub eps_omega: f64,
    pub c1: f64,
    /// false when the hypothesis N > 2c/pi of the projection bound is unmet.
    pub hypothesis_met: bool,
    /// minimal C1 values that would make the measured errors satisfy the
    /// bounds (the paper leaves C1 unspecified).
    pub min_c1_l2: f64,
    pub min_c1_sup: f64,
}

/// Number of sup-error sample points on [-1, 1].
pub const SUP_GRID: usize = 2001;

/// Build the basis for (alpha, c) with N+1 elements at default truncation.
pub fn build_basis(alpha: f64, c: f64, n: usize) -> Result<Vec<Gpswf>> {
    let order = default_truncation(n, c, alpha);
    let matrix = build_matrix(WeightParams::symmetric(alpha)?, c, order)?;
    Gpswf::family(solve(&matrix, n)?)
}

/// Full report for a function projected on the first N+1 GPSWFs.
#[allow(clippy::too_many_arguments)]
pub fn error_report<F: Fn(f64) -> f64>(
    f: F,
    name: &str,
    c: f64,
    alpha: f64,
    n: usize,
    norm_f: f64,
    c1: f64,
    eps_omega: f64,
) -> Result<ApproxReport> {
    let basis = build_basis(alpha, c, n)?;
    let quad = gauss_jacobi(alpha, basis[0].pair().truncation() + 20)?;
    let coeffs = project(&f, &basis, &quad)?;
    report_from_coeffs(f, name, coeffs, &basis, &quad, norm_f, c1, eps_omega)
}

#[allow(clippy::too_many_arguments)]
pub fn report_from_coeffs<F: Fn(f64) -> f64>(
    f: F,
    name: &str,
    coeffs: Vec<f64>,
    basis: &[Gpswf],
    quad: &QuadratureRule,
    norm_f: f64,
    c1: f64,
    eps_omega: f64,
) -> Result<ApproxReport> {
    let last = basis
        .last()
        .ok_or_else(|| Error::InvalidParameter("empty basis".into()))?;
    let n = last.n();
    let c = last.pair().c();
    let alpha = last.pair().params().alpha();
    // residual on the sup grid
    let grid: Vec<f64> = (0..SUP_GRID)
        .map(|i| -1.0 + 2.0 * i as f64 / (SUP_GRID - 1) as f64)
        .collect();
    let table = basis_table(basis, &grid)?;
    let mut sup_error = 0.0_f64;
    for (i, &x) in grid.iter().enumerate() {
        let mut s = 0.0;
        for (k, ck) in coeffs.iter().enumerate() {
            s += ck * table[k][i];
        }
        sup_error = sup_error.max((f(x) - s).abs());
    }
    // weighted-L2 residual by quadrature
    let qtable = basis_table(basis, quad.nodes())?;
    let mut l2 = 0.0_f64;
    for (i, (&x, &w)) in quad.nodes().iter().zip(quad.weights()).enumerate() {
        let mut s = 0.0;
        for (k, ck) in coeffs.iter().enumerate() {
            s += ck * qtable[k][i];
        }
        l2 += w * (f(x) - s).powi(2);
    }
    let l2_error = l2.max(0.0).sqrt();
    let lam = last.lambda();
    let chi = last.chi();
    let shape_l2 = lam.sqrt() * chi.powf(0.5 * (1.0 + alpha)) * norm_f;
    let shape_sup = lam.sqrt() * chi.powf(1.0 + 0.5 * alpha) * norm_f;
    Ok(ApproxReport {
        func: name.to_string(),
        c,
        alpha,
        n,
        coeffs,
        l2_error,
        sup_error,
        bound_l2: c1 * shape_l2 + eps_omega,
        bound_sup: c1 * shape_sup + eps_omega,
        eps_omega,
        c1,
        hypothesis_met: (n as f64) > 2.0 * c / PI,
        min_c1_l2: if shape_l2 > 0.0 {
            (l2_error - eps_omega).max(0.0) / shape_l2
        } else {
            0.0
        },
        min_c1_sup: if shape_sup > 0.0 {
            (sup_error - eps_omega).max(0.0) / shape_sup
        } else {
            0.0
        },
    })
}

/// Smallest number of dyadic terms with 2^{-k(s+a+1/2)} below 1e-16.
pub fn weierstrass_k_terms(s: f64, alpha: f64) -> usize {
    (16.0 * std::f64::consts::LN_10 / ((s + alpha + 0.5) * std::f64::consts::LN_2)).ceil() as usize
}

/// Exact (series) projection coefficients of the Weierstrass function
/// W_s(x) = sum_k cos(2^k x) / 2^{ks} on the basis: odd indices vanish, and
/// C_{2m} = sqrt(pi) 2^{a+1/2} sum_l (-1)^l beta_{2l}^{2m} w_{2l}
///          sum_k 2^{-k(s+a+1/2)} J_{2l+a+1/2}(2^k).
pub fn weierstrass_coeffs(s: f64, basis: &[Gpswf], k_terms: usize) -> Result<Vec<f64>> {
    if !(s > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "weierstrass exponent s = {s} must be > 0"
        )));
    }
    let first = basis
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty basis".into()))?;
    let alpha = first.pair().params().alpha();
    let trunc = first.pair().truncation();
    let ws = weight_ladder_f64(alpha, trunc + 1);
    // inner[l] = sum_k 2^{-k(s+a+1/2)} J_{2l+a+1/2}(2^k), shared by all m
    let l_count = trunc / 2 + 1;
    let mut inner = vec![0.0_f64; l_count];
    for k in 0..=k_terms {
        let x = 2.0_f64.powi(k as i32);
        let js = bessel_j_sequence(alpha + 0.5, trunc + 1, x)?;
        let damp = 2.0_f64.powf(-(k as f64) * (s + alpha + 0.5));
        for (l, v) in inner.iter_mut().enumerate() {
            *v += damp * js[2 * l];
        }
    }
    let front = PI.sqrt() * 2.0_f64.powf(alpha + 0.5);
    let mut out = Vec::with_capacity(basis.len());
    for psi in basis {
        if psi.n() % 2 == 1 {
            out.push(0.0);
            continue;
        }
        let mut acc = 0.0;
        for (l, v) in inner.iter().enumerate() {
            let k = 2 * l;
            if k > trunc {
                break;
            }
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * psi.pair().coeffs()[k] * ws[k] * v;
        }
        out.push(front * acc);
    }
    Ok(out)
}

/// The built-in test functions.
#[derive(Clone, Copy, Debug)]
pub enum Builtin {
    /// sin(cx)/(cx)
    Sinc { c: f64 },
    /// sin(cx - x/2)/x^4 (2 sin(x/2) - x cos(x/2)), band-limited to [-c, c]
    Eta { c: f64 },
    /// sum_k cos(2^k x)/2^{ks}
    Weierstrass { s: f64 },
}

impl Builtin {
    pub fn new(name: &str, param: f64) -> Result<Builtin> {
        match name {
            "sinc" => {
                if !(param > 0.0) {
                    return Err(Error::InvalidParameter("sinc needs c > 0".into()));
                }
                Ok(Builtin::Sinc { c: param })
            }
            "eta" => {
                if !(param > 1.0) {
                    return Err(Error::InvalidParameter("eta needs c > 1".into()));
                }
                Ok(Builtin::Eta { c: param })
            }
            "weierstrass" => {
                if !(param > 0.0) {
                    return Err(Error::InvalidParameter("weierstrass needs s > 0".into()));
                }
                Ok(Builtin::Weierstrass { s: param })
            }
            other => Err(Error::InvalidParameter(format!(
                "unknown builtin function {other:?}"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Sinc { .. } => "sinc",
            Builtin::Eta { .. } => "eta",
            Builtin::Weierstrass { .. } => "weierstrass",
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Builtin::Sinc { c } => {
                let t = c * x;
                if t.abs() < 1e-4 {
                    1.0 - t * t / 6.0 + t * t * t * t / 120.0
                } else {
                    t.sin() / t
                }
            }
            Builtin::Eta { c } => {
                if x.abs() < 1e-3 {
                    // sin((c-1/2)x)/x * (x^3/12 - x^5/480 + x^7/53760)/x^3
                    let u = (c - 0.5) * x;
                    let sinc_u = 1.0 - u * u / 6.0 + u.powi(4) / 120.0;
                    (c - 0.5) * sinc_u * (1.0 / 12.0 - x * x / 480.0 + x.powi(4) / 53760.0)
                } else {
                    (c * x - 0.5 * x).sin() / x.powi(4)
                        * (2.0 * (0.5 * x).sin() - x * (0.5 * x).cos())
                }
            }
            Builtin::Weierstrass { s } => {
                let k_max =
                    (17.0 * std::f64::consts::LN_10 / (s * std::f64::consts::LN_2)).ceil() as usize;
                let mut acc = 0.0;
                for k in 0..=k_max {
                    acc += (2.0_f64.powi(k as i32) * x).cos() * 2.0_f64.powf(-(k as f64) * s);
                }
                acc
            }
        }
    }
}

/// ||f||_{L^2(I, w_alpha)} by quadrature.
pub fn weighted_l2_norm<F: Fn(f64) -> f64>(f: F, quad: &QuadratureRule) -> f64 {
    quad.integrate(|x| f(x) * f(x)).max(0.0).sqrt()
}
