//! Implicit-shift QL eigensolver for symmetric tridiagonal matrices (with
//! eigenvectors), plus a double-double inverse-iteration refiner for a single
//! eigenpair. The QL routine is the classical EISPACK tql2 scheme.

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal `d`
/// and off-diagonal `e` (`e.len() == d.len() - 1`). Returns eigenvalues in
/// ascending order and the matching orthonormal eigenvectors as columns.
pub fn symmetric_tridiagonal_eigen(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = diag.len();
    assert!(n > 0 && off.len() + 1 == n);
    if n == 1 {
        return Ok((vec![diag[0]], vec![vec![1.0]]));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    // z[i * n + j] = component i of eigenvector j
    let mut z = vec![0.0_f64; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    let eps = f64::EPSILON;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::SolverFailure(format!(
                    "QL iteration count exceeded at row {l} of {n}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0_f64;
            let mut c = 1.0_f64;
            let mut p = 0.0_f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // sort ascending, permuting eigenvector columns along
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&j| d[j]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&j| (0..n).map(|i| z[i * n + j]).collect())
        .collect();
    Ok((values, vectors))
}

/// Refine one eigenpair of a symmetric tridiagonal matrix to double-double
/// accuracy by shifted inverse iteration from an f64 seed. The returned
/// vector keeps the seed's sign and has unit norm.
pub(crate) fn refine_eigenpair_dd(
    diag: &[Dd],
    off: &[Dd],
    chi_seed: f64,
    v_seed: &[f64],
) -> Result<(Dd, Vec<Dd>)> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n);
    assert_eq!(v_seed.len(), n);
    let mut v: Vec<Dd> = v_seed.iter().map(|&x| Dd::from(x)).collect();
    normalize(&mut v);
    let mut chi = Dd::from(chi_seed);
    let mut shift_bump = 1e-14 * (1.0 + chi_seed.abs());
    let mut it = 0;
    while it < 4 {
        let sigma = chi.add_f64(shift_bump);
        match thomas_solve(diag, off, sigma, &v) {
            Some(mut w) => {
                normalize(&mut w);
                v = w;
                chi = rayleigh(diag, off, &v);
                it += 1;
            }
            None => {
                // singular pivot: nudge the shift and retry
                shift_bump *= 16.0;
                if shift_bump > 1e-6 * (1.0 + chi_seed.abs()) {
                    return Err(Error::SolverFailure(
                        "inverse iteration could not find a nonsingular shift".into(),
                    ));
                }
            }
        }
    }
    let mut dot = Dd::ZERO;
    for (a, b) in v.iter().zip(v_seed) {
        dot = dot.add(a.mul_f64(*b));
    }
    if dot.hi < 0.0 {
        for x in v.iter_mut() {
            *x = x.neg();
        }
    }
    Ok((chi, v))
}

fn normalize(v: &mut [Dd]) {
    let mut s = Dd::ZERO;
    for x in v.iter() {
        s = s.add(x.mul(*x));
    }
    let inv = s.sqrt().recip();
    for x in v.iter_mut() {
        *x = x.mul(inv);
    }
}

fn rayleigh(diag: &[Dd], off: &[Dd], v: &[Dd]) -> Dd {
    let n = diag.len();
    let mut acc = Dd::ZERO;
    for i in 0..n {
        let mut tv = diag[i].mul(v[i]);
        if i > 0 {
            tv = tv.add(off[i - 1].mul(v[i - 1]));
        }
        if i + 1 < n {
            tv = tv.add(off[i].mul(v[i + 1]));
        }
        acc = acc.add(v[i].mul(tv));
    }
    acc
}

/// Solve (T - sigma I) w = rhs without pivoting; None on a vanishing pivot.
fn thomas_solve(diag: &[Dd], off: &[Dd], sigma: Dd, rhs: &[Dd]) -> Option<Vec<Dd>> {
    let n = diag.len();
    let mut cp = vec![Dd::ZERO; n];
    let mut dp = vec![Dd::ZERO; n];
    let a0 = diag[0].sub(sigma);
    if a0.hi == 0.0 {
        return None;
    }
    if n > 1 {
        cp[0] = off[0].div(a0);
    }
    dp[0] = rhs[0].div(a0);
    for i in 1..n {
        let denom = diag[i].sub(sigma).sub(off[i - 1].mul(cp[i - 1]));
        if denom.hi == 0.0 {
            return None;
        }
        if i + 1 < n {
            cp[i] = off[i].div(denom);
        }
        dp[i] = rhs[i].sub(off[i - 1].mul(dp[i - 1])).div(denom);
    }
    let mut w = vec![Dd::ZERO; n];
    w[n - 1] = dp[n - 1];
    for i in (0..n - 1).rev() {
        w[i] = dp[i].sub(cp[i].mul(w[i + 1]));
    }
    Some(w)
}
