//! Complete GPSWF objects for symmetric weights: evaluation inside [-1, 1]
//! by the Jacobi expansion, analytic extension on the real line by the
//! Bessel series, and the Fourier eigenvalues mu_n (with lambda_n).
//!
//! The mu_n series cancels down to the scale of mu_n itself, which falls
//! super-exponentially past the plunge region; both the series and the
//! eigenvector feeding it are therefore carried in double-double precision,
//! with power-of-two frames so that spectra keep meaningful magnitudes well
//! below 1e-300 in log form.

use crate::dd::Dd;
use crate::eigensystem::{self, EigenPair};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::specfun::bessel::{bessel_j_sequence_dd, ScaledDd};
use crate::specfun::gamma::ln_gamma_unchecked;
use crate::specfun::jacobi::ln_h;
use crate::specfun::{bessel_j, JacobiRecurrence};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// Fourier eigenvalue mu_n = i^phase |mu_n| with magnitude kept in log form.
#[derive(Clone, Copy, Debug)]
pub struct MuEigenvalue {
    pub abs: f64,
    pub log10_abs: f64,
    pub phase: u8,
}

impl MuEigenvalue {
    pub fn as_complex(&self) -> Complex64 {
        match self.phase {
            0 => Complex64::new(self.abs, 0.0),
            1 => Complex64::new(0.0, self.abs),
            2 => Complex64::new(-self.abs, 0.0),
            _ => Complex64::new(0.0, -self.abs),
        }
    }
}

/// A fully constructed eigenfunction of the weighted finite Fourier
/// transform, with its eigenvalues and evaluation machinery.
#[derive(Clone)]
pub struct Gpswf {
    pair: EigenPair,
    rec: Arc<JacobiRecurrence>,
    coeffs_dd: Arc<Vec<Dd>>, // parity-compressed refined coefficients
    mu_signed: ScaledDd,
    mu: MuEigenvalue,
    lambda: f64,
    lambda_log10: f64,
}

impl Gpswf {
    /// Construct from one eigenpair (symmetric weight required).
    pub fn new(pair: EigenPair) -> Result<Gpswf> {
        let rec = Arc::new(JacobiRecurrence::new(pair.params(), pair.truncation() + 2));
        let shared = SharedLadders::new(&pair)?;
        Gpswf::with_shared(pair, rec, &shared)
    }

    /// Construct a family over one (alpha, c) batch, sharing the recurrence
    /// and the Bessel/weight ladders across all members.
    pub fn family(pairs: Vec<EigenPair>) -> Result<Vec<Gpswf>> {
        let first = pairs
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty eigenpair batch".into()))?;
        let rec = Arc::new(JacobiRecurrence::new(
            first.params(),
            first.truncation() + 2,
        ));
        let shared = SharedLadders::new(first)?;
        pairs
            .into_iter()
            .map(|p| Gpswf::with_shared(p, rec.clone(), &shared))
            .collect()
    }

    fn with_shared(
        pair: EigenPair,
        rec: Arc<JacobiRecurrence>,
        shared: &SharedLadders,
    ) -> Result<Gpswf> {
        if !pair.params().is_symmetric() {
            return Err(Error::InvalidParameter(
                "mu/lambda and the analytic extension need a symmetric weight".into(),
            ));
        }
        let (_, coeffs_dd) = eigensystem::refine_pair_dd(&pair)?;
        let (mu_signed, mu) = mu_from_ladders(&pair, &coeffs_dd, shared);
        let c = pair.c();
        let lambda = (c / (2.0 * PI) * mu.abs * mu.abs).min(1.0);
        let lambda_log10 = 2.0 * mu.log10_abs + (c / (2.0 * PI)).log10();
        Ok(Gpswf {
            pair,
            rec,
            coeffs_dd: Arc::new(coeffs_dd),
            mu_signed,
            mu,
            lambda,
            lambda_log10,
        })
    }

    pub fn pair(&self) -> &EigenPair {
        &self.pair
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn chi(&self) -> f64 {
        self.pair.chi()
    }

    pub fn mu_abs(&self) -> f64 {
        self.mu.abs
    }

    /// log10 |mu_n|; finite even where |mu_n| underflows f64.
    pub fn mu_log10(&self) -> f64 {
        self.mu.log10_abs
    }

    pub fn mu_phase(&self) -> u8 {
        self.mu.phase
    }

    pub fn mu(&self) -> MuEigenvalue {
        self.mu
    }

    /// lambda_n = c/(2 pi) |mu_n|^2. Rounds to 1.0 in f64 deep in the
    /// plateau (true value below 1 by less than an ulp).
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn lambda_log10(&self) -> f64 {
        self.lambda_log10
    }

    /// psi_n(x) on [-1, 1] by Clenshaw summation of the Jacobi expansion.
    pub fn eval_inside(&self, x: f64) -> Result<f64> {
        if !(x.abs() <= 1.0) {
            return Err(Error::domain(
                "eval_inside",
                format!("|x| = {} exceeds 1", x.abs()),
            ));
        }
        Ok(clenshaw(&self.rec, self.pair.coeffs(), x))
    }

    /// Analytic extension psi_n(x) for x != 0 by the Bessel series.
    pub fn eval_extended(&self, x: f64) -> Result<f64> {
        if x == 0.0 {
            return Err(Error::domain(
                "eval_extended",
                "x = 0: use eval_inside".to_string(),
            ));
        }
        if self.mu.abs < 1e-300 {
            return Err(Error::MuUnderflow { mu: self.mu.abs });
        }
        let pair = &self.pair;
        let al = pair.params().alpha();
        let c = pair.c();
        let ax = x.abs();
        let n = pair.n();
        let start = n % 2;
        let k_top = pair.truncation();
        let js = bessel_j_sequence_dd(al + 0.5, k_top + 1, c * ax);
        let ws = weight_ladder_dd(al, k_top + 1);
        // sum_k i^{k-n} beta_k w_k J_{k+a+1/2}(c|x|), real by parity
        let mut frame = i32::MIN;
        for (m, _) in self.coeffs_dd.iter().enumerate() {
            let k = start + 2 * m;
            if k <= k_top {
                frame = frame.max(js[k].frame);
            }
        }
        let mut sum = Dd::ZERO;
        for (m, beta) in self.coeffs_dd.iter().enumerate() {
            let k = start + 2 * m;
            if k > k_top {
                break;
            }
            let rel = 600 * (js[k].frame - frame);
            if rel < -1040 {
                continue;
            }
            let term = beta.mul(ws[k]).mul(js[k].mantissa).ldexp(rel);
            let signed = if (m + n / 2) % 2 == 0 {
                term
            } else {
                term.neg()
            };
            sum = sum.add(signed);
        }
        let pre = PI.sqrt() * 2.0_f64.powf(al + 0.5) / (c * ax).powf(al + 0.5);
        let ratio = sum.div(self.mu_signed.mantissa).to_f64()
            * crate::dd::exp2i(600 * (frame - self.mu_signed.frame));
        let v = pre * ratio;
        Ok(if x < 0.0 && n % 2 == 1 { -v } else { v })
    }
}

struct SharedLadders {
    js: Vec<ScaledDd>,
    ws: Vec<Dd>,
}

impl SharedLadders {
    fn new(pair: &EigenPair) -> Result<SharedLadders> {
        if !pair.params().is_symmetric() {
            return Err(Error::InvalidParameter(
                "mu/lambda and the analytic extension need a symmetric weight".into(),
            ));
        }
        let al = pair.params().alpha();
        let count = pair.truncation() + 1;
        Ok(SharedLadders {
            js: bessel_j_sequence_dd(al + 0.5, count, pair.c()),
            ws: weight_ladder_dd(al, count),
        })
    }
}

/// w_k = Gamma(k+alpha+1) / (sqrt(h_k) k!), by an exact-rational ratio ladder.
pub(crate) fn weight_ladder_dd(alpha: f64, count: usize) -> Vec<Dd> {
    let mut out = Vec::with_capacity(count);
    let w0 = (ln_gamma_unchecked(alpha + 1.0) - 0.5 * ln_h(alpha, alpha, 0)).exp();
    out.push(Dd::from(w0));
    for k in 0..count.saturating_sub(1) {
        let kf = k as f64;
        // h_{k+1}/h_k for the symmetric weight
        let num = Dd::from(kf + alpha + 1.0)
            .mul(Dd::from(kf + alpha + 1.0))
            .mul(Dd::from(2.0 * kf + 2.0 * alpha + 1.0));
        let den = Dd::from(kf + 1.0)
            .mul(Dd::from(kf + 2.0 * alpha + 1.0))
            .mul(Dd::from(2.0 * kf + 2.0 * alpha + 3.0));
        let h_ratio_sqrt = num.div(den).sqrt();
        let next = out[k]
            .mul(Dd::from(kf + alpha + 1.0))
            .div(Dd::from(kf + 1.0))
            .div(h_ratio_sqrt);
        out.push(next);
    }
    out
}

pub(crate) fn weight_ladder_f64(alpha: f64, count: usize) -> Vec<f64> {
    weight_ladder_dd(alpha, count)
        .into_iter()
        .map(|x| x.to_f64())
        .collect()
}

fn mu_from_ladders(
    pair: &EigenPair,
    coeffs_dd: &[Dd],
    shared: &SharedLadders,
) -> (ScaledDd, MuEigenvalue) {
    let al = pair.params().alpha();
    let c = pair.c();
    let n = pair.n();
    let start = n % 2;
    let k_top = pair.truncation();
    let mut frame = i32::MIN;
    for m in 0..coeffs_dd.len() {
        let k = start + 2 * m;
        if k <= k_top && shared.js[k].mantissa.hi != 0.0 {
            frame = frame.max(shared.js[k].frame);
        }
    }
    if frame == i32::MIN {
        frame = 0;
    }
    let mut num = Dd::ZERO;
    let mut den = Dd::ZERO;
    for (m, beta) in coeffs_dd.iter().enumerate() {
        let k = start + 2 * m;
        if k > k_top {
            break;
        }
        den = den.add(beta.mul(shared.ws[k]));
        let rel = 600 * (shared.js[k].frame - frame);
        if rel < -1040 {
            continue;
        }
        let term = beta.mul(shared.ws[k]).mul(shared.js[k].mantissa).ldexp(rel);
        num = num.add(if (m + n / 2) % 2 == 0 {
            term
        } else {
            term.neg()
        });
    }
    // psi_n(1) = den / Gamma(alpha+1); the Gamma factors cancel against the
    // prefactor only through the explicit formula below
    let gamma_al1 = ln_gamma_unchecked(al + 1.0).exp();
    let pre = PI.sqrt() * (2.0 / c).powf(al + 0.5) * gamma_al1;
    let signed = num.div(den).mul_f64(pre);
    let mu_signed = ScaledDd {
        mantissa: signed,
        frame,
    };
    let log10_abs = mu_signed.log10_abs();
    let abs = mu_signed.to_f64().abs();
    let negative = signed.hi < 0.0;
    let phase = (((n % 4) as u8) + if negative { 2 } else { 0 }) % 4;
    (
        mu_signed,
        MuEigenvalue {
            abs,
            log10_abs,
            phase,
        },
    )
}

/// (|mu_n|, phase) for a symmetric-weight eigenpair; mu_n = i^phase |mu_n|.
pub fn compute_mu(pair: &EigenPair) -> Result<MuEigenvalue> {
    let shared = SharedLadders::new(pair)?;
    let (_, coeffs_dd) = eigensystem::refine_pair_dd(pair)?;
    Ok(mu_from_ladders(pair, &coeffs_dd, &shared).1)
}

/// lambda = c/(2 pi) mu_abs^2.
pub fn compute_lambda(mu_abs: f64, c: f64) -> f64 {
    c / (2.0 * PI) * mu_abs * mu_abs
}

/// psi_n(x) on [-1, 1] for a bare eigenpair (builds the recurrence; use
/// `Gpswf` for repeated evaluation).
pub fn eval_inside(pair: &EigenPair, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::domain(
            "eval_inside",
            format!("|x| = {} exceeds 1", x.abs()),
        ));
    }
    let rec = JacobiRecurrence::new(pair.params(), pair.truncation() + 2);
    Ok(clenshaw(&rec, pair.coeffs(), x))
}

/// Backward (Clenshaw) summation of sum_k coeffs_k Pt_k(x).
pub(crate) fn clenshaw(rec: &JacobiRecurrence, coeffs: &[f64], x: f64) -> f64 {
    let mut y1 = 0.0_f64;
    let mut y2 = 0.0_f64;
    for k in (0..coeffs.len()).rev() {
        let (a, b, _) = rec.ortho(k);
        let (_, _, c_next) = rec.ortho(k + 1);
        let y = coeffs[k] + (a * x + b) * y1 - c_next * y2;
        y2 = y1;
        y1 = y;
    }
    y1 / rec.h(0).sqrt()
}

/// Finite Fourier transform of the weight: K_a(x) = sqrt(pi) 2^{a+1/2}
/// Gamma(a+1) J_{a+1/2}(x) / x^{a+1/2}, continuous at 0.
pub fn kernel_k(alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} must exceed -1"
        )));
    }
    let ax = x.abs();
    if ax < 2.0 {
        // J_{a+1/2}(x)/x^{a+1/2} via its entire power series
        let mut term =
            (ln_gamma_unchecked(alpha + 1.0) - ln_gamma_unchecked(alpha + 1.5)).exp() * PI.sqrt();
        let mut sum = term;
        let q = 0.25 * ax * ax;
        for m in 0..60 {
            let mf = m as f64;
            term *= -q / ((mf + 1.0) * (alpha + 1.5 + mf));
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        return Ok(sum);
    }
    let j = bessel_j(alpha + 0.5, ax)?;
    Ok(
        PI.sqrt() * 2.0_f64.powf(alpha + 0.5) * ln_gamma_unchecked(alpha + 1.0).exp() * j
            / ax.powf(alpha + 0.5),
    )
}

/// Apply the weighted finite Fourier transform to an eigenfunction at x by
/// Gauss-Jacobi quadrature: int e^{i c x y} psi_n(y) w(y) dy. Used as the
/// independent residual oracle for mu_n and the extension.
pub fn apply_fourier(pair: &EigenPair, x: f64, quad: &QuadratureRule) -> Complex64 {
    let rec = JacobiRecurrence::new(pair.params(), pair.truncation() + 2);
    let c = pair.c();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&y, &w) in quad.nodes().iter().zip(quad.weights()) {
        let psi = clenshaw(&rec, pair.coeffs(), y);
        acc += w * psi * Complex64::from_polar(1.0, c * x * y);
    }
    acc
}
