//! Bessel functions of the first kind, real order nu >= -1/2.
//!
//! Three regimes:
//!  - ascending power series where it is cancellation-free (x <= 2 sqrt(nu+1));
//!  - backward (Miller) recurrence seeded by the ratio continued fraction,
//!    normalized by the Gegenbauer sum (x/2)^v = sum (v+2k) G(v+k)/k! J_{v+2k};
//!  - Hankel asymptotic expansion for very large x (x >= 50 nu^2, x >= 1e4),
//!    needed for arguments like 2^k in the Weierstrass coefficient series.
//!
//! The double-double ladder mirrors the Miller path with per-entry power-of-two
//! scale tracking, so orders whose values sink below the f64 range keep a
//! meaningful (mantissa, exponent) representation.

use crate::dd::{exp2i, Dd};
use crate::error::{Error, Result};
use crate::specfun::gamma::ln_gamma_unchecked;

const RESCALE_BITS: i32 = 600;
const RESCALE_LIMIT: f64 = 4.149_515_568_880_993e180; // 2^600

/// J_nu(x) for nu >= -1/2, x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= -0.5) {
        return Err(Error::domain(
            "bessel_j",
            format!("order nu = {nu} must be >= -1/2"),
        ));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(
            "bessel_j",
            format!("argument x = {x} must be >= 0"),
        ));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    if use_hankel(nu, x) {
        return Ok(hankel_asymptotic(nu, x));
    }
    if x <= series_threshold(nu) {
        return Ok(ascending_series(nu, x));
    }
    // ladder from the fractional base up to nu
    let (base, offset) = split_order(nu);
    let seq = miller_sequence(base, offset.max(0) as usize + 1, x, offset < 0);
    Ok(*seq.last().unwrap())
}

/// J_{nu0 + k}(x) for k = 0..count, one backward pass. Requires nu0 >= -1/2, x > 0.
pub fn bessel_j_sequence(nu0: f64, count: usize, x: f64) -> Result<Vec<f64>> {
    if !(nu0 >= -0.5) || !(x > 0.0) || count == 0 {
        return Err(Error::domain(
            "bessel_j_sequence",
            format!("need nu0 >= -1/2 (got {nu0}), x > 0 (got {x}), count > 0"),
        ));
    }
    if use_hankel(nu0 + (count - 1) as f64, x) {
        return Ok((0..count)
            .map(|k| hankel_asymptotic(nu0 + k as f64, x))
            .collect());
    }
    if x <= series_threshold(nu0) {
        return Ok((0..count)
            .map(|k| ascending_series(nu0 + k as f64, x))
            .collect());
    }
    let (base, offset) = split_order(nu0);
    let raw = miller_sequence(base, (offset.max(0) as usize) + count, x, offset < 0);
    let start = offset.max(0) as usize;
    Ok(raw[start..start + count].to_vec())
}

fn series_threshold(nu: f64) -> f64 {
    2.0 * (nu.max(0.0) + 1.0).sqrt()
}

fn use_hankel(nu: f64, x: f64) -> bool {
    x >= 1.0e4 && x >= 50.0 * nu * nu
}

/// Split nu into a base in (0, 1] plus an integer offset; offset = -1 means
/// the requested order sits one rung below the base.
fn split_order(nu: f64) -> (f64, i32) {
    let frac = nu - nu.floor();
    let base = if frac == 0.0 { 1.0 } else { frac };
    let offset = (nu - base).round() as i32;
    (base, offset)
}

/// Ascending power series; cancellation-free under `series_threshold`.
fn ascending_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for m in 0..400 {
        let mf = m as f64;
        term *= -q / ((mf + 1.0) * (nu + mf + 1.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    // (x/2)^nu / Gamma(nu+1) in log space; underflow to 0 is the right answer
    let ln_pre = nu * (0.5 * x).ln() - ln_gamma_unchecked(nu + 1.0);
    if ln_pre < -745.0 {
        return 0.0;
    }
    ln_pre.exp() * sum
}

/// Ratio J_{v+1}(x)/J_v(x) by the continued fraction (modified Lentz).
fn ratio_cf1(v: f64, x: f64) -> f64 {
    let tiny = 1e-290;
    let mut f = tiny;
    let mut c = f;
    let mut d = 0.0_f64;
    for j in 1..200_000 {
        let b = 2.0 * (v + j as f64) / x;
        let a = if j == 1 { 1.0 } else { -1.0 };
        d = b + a * d;
        if d == 0.0 {
            d = tiny;
        }
        c = b + a / c;
        if c == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            return f;
        }
    }
    f
}

fn ladder_top(base: f64, top_needed: f64, x: f64) -> usize {
    let support = x + 14.0 * x.max(1.0).cbrt() + 12.0;
    let top = top_needed.max(support);
    ((top - base).ceil() as usize) + 2
}

/// Backward recurrence J_{v-1} = (2v/x) J_v - J_{v+1} from a CF1-exact seed,
/// normalized by the Gegenbauer identity. Returns orders base..base+count-1,
/// or base-1..base+count-2 when `extend_below` is set.
fn miller_sequence(base: f64, count: usize, x: f64, extend_below: bool) -> Vec<f64> {
    let m = ladder_top(base, base + count as f64, x);
    let r = ratio_cf1(base + m as f64, x);
    let mut vals = vec![0.0_f64; m + 2];
    let mut scales = vec![0_i32; m + 2];
    vals[m + 1] = r;
    vals[m] = 1.0;
    let mut scale = 0_i32;
    for k in (0..m).rev() {
        let v = base + (k + 1) as f64;
        let next = (2.0 * v / x) * vals[k + 1] - vals[k + 2];
        vals[k] = next;
        scales[k] = scale;
        if next.abs() > RESCALE_LIMIT {
            vals[k] /= RESCALE_LIMIT;
            vals[k + 1] /= RESCALE_LIMIT;
            scale += 1;
            scales[k] = scale;
            scales[k + 1] += 1;
        }
    }
    let final_scale = scale;
    // normalization sum over even rungs, in the final scale frame
    let mut g = ln_gamma_unchecked(base).exp(); // Gamma(base + k)/k! ladder
    let mut s = 0.0_f64;
    let mut k2 = 0usize;
    while k2 <= m {
        let k = (k2 / 2) as f64;
        let w = (base + k2 as f64) * g;
        let aligned = vals[k2] * exp2i(RESCALE_BITS * (scales[k2] - final_scale));
        s += w * aligned;
        g *= (base + k) / (k + 1.0);
        k2 += 2;
    }
    let pre = (0.5 * x).powf(base);
    let mut out = Vec::with_capacity(count);
    if extend_below {
        // one stable downward step below the base
        let below =
            (2.0 * base / x) * vals[0] - vals[1] * exp2i(RESCALE_BITS * (scales[1] - scales[0]));
        out.push((below / s) * pre * exp2i(RESCALE_BITS * (scales[0] - final_scale)));
    }
    let take = if extend_below { count - 1 } else { count };
    for k in 0..take {
        out.push((vals[k] / s) * pre * exp2i(RESCALE_BITS * (scales[k] - final_scale)));
    }
    out
}

/// Hankel large-argument expansion (only used when x >= 50 nu^2, x >= 1e4).
fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut t = 1.0_f64;
    let mut p = 1.0_f64;
    let mut q = 0.0_f64;
    for k in 0..24 {
        let kf = k as f64;
        t *= (mu - (2.0 * kf + 1.0) * (2.0 * kf + 1.0)) / ((kf + 1.0) * 8.0 * x);
        let signed = match k % 4 {
            0 => t,  // contributes +t to Q
            1 => -t, // -t to P
            2 => -t, // -t to Q
            _ => t,  // +t to P
        };
        if k % 2 == 0 {
            q += signed;
        } else {
            p += signed;
        }
        if t.abs() < 1e-18 {
            break;
        }
    }
    let omega = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (omega.cos() * p - omega.sin() * q)
}

/// Scaled double-double value: `mantissa * 2^(RESCALE_BITS * frame)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ScaledDd {
    pub mantissa: Dd,
    pub frame: i32,
}

impl ScaledDd {
    pub fn log10_abs(self) -> f64 {
        self.mantissa.hi.abs().log10()
            + (RESCALE_BITS as f64) * (self.frame as f64) * std::f64::consts::LOG10_2
    }
    pub fn to_f64(self) -> f64 {
        self.mantissa.to_f64() * exp2i(RESCALE_BITS * self.frame)
    }
}

/// Double-double Miller ladder: J_{nu0+k}(x) for k = 0..count, scale-tracked.
/// Requires nu0 > -1/2 and x > 0. Common scalar factors (Gamma(base), (x/2)^base)
/// stay at f64 accuracy; they cancel or factor out of every downstream ratio.
pub(crate) fn bessel_j_sequence_dd(nu0: f64, count: usize, x: f64) -> Vec<ScaledDd> {
    let (base, offset) = split_order(nu0);
    debug_assert!(offset >= -1);
    if x <= series_threshold(nu0) {
        return (0..count)
            .map(|k| ScaledDd {
                mantissa: ascending_series_dd(nu0 + k as f64, x),
                frame: 0,
            })
            .collect();
    }
    let need = (offset.max(0) as usize) + count;
    let m = ladder_top(base, base + need as f64, x);
    let r = ratio_cf1(base + m as f64, x);
    let inv_x = Dd::from(x).recip();
    let mut vals = vec![Dd::ZERO; m + 2];
    let mut scales = vec![0_i32; m + 2];
    vals[m + 1] = Dd::from(r);
    vals[m] = Dd::ONE;
    let mut scale = 0_i32;
    for k in (0..m).rev() {
        let v = Dd::from(base).add_f64((k + 1) as f64);
        let next = v.mul(inv_x).mul_f64(2.0).mul(vals[k + 1]).sub(vals[k + 2]);
        vals[k] = next;
        scales[k] = scale;
        if next.hi.abs() > RESCALE_LIMIT {
            vals[k] = vals[k].ldexp(-RESCALE_BITS);
            vals[k + 1] = vals[k + 1].ldexp(-RESCALE_BITS);
            scale += 1;
            scales[k] = scale;
            scales[k + 1] += 1;
        }
    }
    let final_scale = scale;
    let mut g = Dd::from(ln_gamma_unchecked(base).exp());
    let mut s = Dd::ZERO;
    let mut k2 = 0usize;
    while k2 <= m {
        let k = (k2 / 2) as f64;
        let dscale = RESCALE_BITS * (scales[k2] - final_scale);
        if dscale > -1040 {
            let w = g.mul(Dd::from(base).add_f64(k2 as f64));
            s = s.add(w.mul(vals[k2]).ldexp(dscale));
        }
        g = g.mul(Dd::from(base).add_f64(k)).div(Dd::from(k + 1.0));
        k2 += 2;
    }
    let pre = (0.5 * x).powf(base);
    let inv_s = s.recip().mul_f64(pre);
    let mut out = Vec::with_capacity(count);
    if offset < 0 {
        let step = vals[1].ldexp(RESCALE_BITS * (scales[1] - scales[0]));
        let below = Dd::from(base)
            .mul(inv_x)
            .mul_f64(2.0)
            .mul(vals[0])
            .sub(step);
        out.push(ScaledDd {
            mantissa: below.mul(inv_s),
            frame: scales[0] - final_scale,
        });
    }
    let start = offset.max(0) as usize;
    for k in start..start + count - (offset < 0) as usize {
        out.push(ScaledDd {
            mantissa: vals[k].mul(inv_s),
            frame: scales[k] - final_scale,
        });
    }
    out
}

fn ascending_series_dd(nu: f64, x: f64) -> Dd {
    let q = Dd::from(0.25 * x * x);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for m in 0..400 {
        let mf = m as f64;
        term = term
            .mul(q)
            .div(Dd::from((mf + 1.0) * (nu + mf + 1.0)))
            .neg();
        sum = sum.add(term);
        if term.hi.abs() < 1e-34 * sum.hi.abs() {
            break;
        }
    }
    let ln_pre = nu * (0.5 * x).ln() - ln_gamma_unchecked(nu + 1.0);
    if ln_pre < -745.0 {
        return Dd::ZERO;
    }
    sum.mul_f64(ln_pre.exp())
}
