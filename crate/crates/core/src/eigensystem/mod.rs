//! Matrix representation of the perturbed Jacobi operator in the normalized
//! Jacobi basis (Bouwkamp method) and its truncated eigensolve.
//!
//! The operator is self-adjoint on L^2(I, w), so its matrix in the
//! orthonormal basis is symmetric pentadiagonal; only the diagonal and the
//! two upper bands are stored. For a symmetric weight the odd couplings
//! vanish and the even/odd index classes decouple into two symmetric
//! tridiagonal problems solved independently.

pub(crate) mod tridiag;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::{JacobiRecurrence, WeightParams};
use nalgebra::DMatrix;

pub use tridiag::symmetric_tridiagonal_eigen;

/// Parity class of an eigenfunction (meaningful for symmetric weights).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_index(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Truncated matrix of -L_c in the normalized Jacobi basis: symmetric with
/// bands d_{i,i}, d_{i,i+1}, d_{i,i+2}; zero beyond.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    params: WeightParams,
    c: f64,
    order: usize,
    diag: Vec<f64>,
    off1: Vec<f64>,
    off2: Vec<f64>,
}

impl OperatorMatrix {
    pub fn params(&self) -> WeightParams {
        self.params
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Truncation order N; indices run 0..=N.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry d_{i,j} (zero whenever |i - j| >= 3).
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        match hi - lo {
            0 => self.diag[lo],
            1 => self.off1[lo],
            2 => self.off2[lo],
            _ => 0.0,
        }
    }

    /// (diag, off-diagonal) of the even- or odd-index sub-block; valid for
    /// symmetric weights where the odd couplings vanish.
    pub fn parity_block(&self, parity: Parity) -> (Vec<f64>, Vec<f64>) {
        let start = match parity {
            Parity::Even => 0usize,
            Parity::Odd => 1usize,
        };
        let idx: Vec<usize> = (start..=self.order).step_by(2).collect();
        let diag = idx.iter().map(|&k| self.diag[k]).collect();
        let off = idx
            .iter()
            .take(idx.len().saturating_sub(1))
            .map(|&k| self.off2[k])
            .collect();
        (diag, off)
    }
}

/// Populate the banded matrix from the x^2 expansion in the orthonormal
/// recurrence (entries of the upper triangle; symmetry supplies the rest).
pub fn build_matrix(params: WeightParams, c: f64, order: usize) -> Result<OperatorMatrix> {
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bandwidth c = {c} must be > 0"
        )));
    }
    if order < 4 {
        return Err(Error::InvalidParameter(format!(
            "truncation order {order} must be >= 4"
        )));
    }
    let rec = JacobiRecurrence::new(params, order + 2);
    let (al, be) = (params.alpha(), params.beta());
    let c2 = c * c;
    let n = order + 1;
    let mut diag = Vec::with_capacity(n);
    let mut off1 = Vec::with_capacity(n - 1);
    let mut off2 = Vec::with_capacity(n - 2);
    let a = |k: usize| rec.ortho(k).0;
    let b = |k: usize| rec.ortho(k).1;
    let cc = |k: usize| rec.ortho(k).2;
    for k in 0..n {
        let kf = k as f64;
        // <x^2 Pt_k, Pt_k>
        let mut e0 = cc(k + 1) / (a(k) * a(k + 1)) + (b(k) / a(k)).powi(2);
        if k >= 1 {
            e0 += cc(k) / (a(k) * a(k - 1));
        }
        diag.push(kf * (kf + al + be + 1.0) + c2 * e0);
        if k + 1 < n {
            // <x^2 Pt_{k+1}, Pt_k>
            let j = k + 1;
            off1.push(-c2 * cc(j) * (b(j) / (a(j) * a(j)) + b(j - 1) / (a(j) * a(j - 1))));
        }
        if k + 2 < n {
            // <x^2 Pt_{k+2}, Pt_k>
            let j = k + 2;
            off2.push(c2 * cc(j) * cc(j - 1) / (a(j) * a(j - 1)));
        }
    }
    Ok(OperatorMatrix {
        params,
        c,
        order,
        diag,
        off1,
        off2,
    })
}

/// Truncation order heuristic: N = max(2 n_max + 30, ceil(e c / 2) + 30)
/// keeps the tail coefficients below 1e-16 by the super-exponential decay of
/// the expansion coefficients.
pub fn default_truncation(n_max: usize, c: f64, _alpha: f64) -> usize {
    let osc = (std::f64::consts::E * c / 2.0).ceil() as usize + 30;
    (2 * n_max + 30).max(osc)
}

/// One eigen-solution of the truncated problem: index, eigenvalue chi_n(c),
/// normalized Jacobi coefficients, parity class.
#[derive(Clone, Debug)]
pub struct EigenPair {
    n: usize,
    chi: f64,
    coeffs: Vec<f64>,
    parity: Option<Parity>,
    params: WeightParams,
    c: f64,
}

impl EigenPair {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    /// Expansion coefficients beta_k^n, k = 0..=truncation.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn params(&self) -> WeightParams {
        self.params
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// q = c^2 / chi_n(c), the ratio governing the local estimates.
    pub fn q(&self) -> f64 {
        self.c * self.c / self.chi
    }
}

/// Solve the truncated eigenproblem for the first `n_max + 1` eigenpairs,
/// sorted by increasing chi. Symmetric weights are split into independent
/// even/odd tridiagonal solves; general weights go through a dense symmetric
/// solver on the banded matrix.
pub fn solve(matrix: &OperatorMatrix, n_max: usize) -> Result<Vec<EigenPair>> {
    if n_max + 4 > matrix.order {
        return Err(Error::InvalidParameter(format!(
            "n_max = {n_max} needs truncation order >= {}, have {}",
            n_max + 4,
            matrix.order
        )));
    }
    let n = matrix.order + 1;
    let mut pairs: Vec<(f64, Option<Parity>, Vec<f64>)> = Vec::with_capacity(n);
    if matrix.params.is_symmetric() {
        for parity in [Parity::Even, Parity::Odd] {
            let (diag, off) = matrix.parity_block(parity);
            let (vals, vecs) = symmetric_tridiagonal_eigen(&diag, &off)?;
            let start = match parity {
                Parity::Even => 0usize,
                Parity::Odd => 1usize,
            };
            for (chi, v) in vals.into_iter().zip(vecs) {
                let mut coeffs = vec![0.0_f64; n];
                for (m, &x) in v.iter().enumerate() {
                    coeffs[start + 2 * m] = x;
                }
                pairs.push((chi, Some(parity), coeffs));
            }
        }
    } else {
        let mut dense = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in i..(i + 3).min(n) {
                let v = matrix.entry(i, j);
                dense[(i, j)] = v;
                dense[(j, i)] = v;
            }
        }
        let eig = dense.symmetric_eigen();
        for j in 0..n {
            let chi = eig.eigenvalues[j];
            let coeffs: Vec<f64> = (0..n).map(|i| eig.eigenvectors[(i, j)]).collect();
            pairs.push((chi, None, coeffs));
        }
    }
    pairs.sort_by(|x, y| {
        let d = x.0 - y.0;
        if d.abs() <= 1e-13 * (1.0 + x.0.abs()) {
            // ties at degenerate truncations: even class first
            let px = matches!(x.1, Some(Parity::Even));
            let py = matches!(y.1, Some(Parity::Even));
            py.cmp(&px)
        } else {
            d.partial_cmp(&0.0).unwrap()
        }
    });
    let mut out = Vec::with_capacity(n_max + 1);
    for (idx, (chi, parity, mut coeffs)) in pairs.into_iter().take(n_max + 1).enumerate() {
        let norm: f64 = coeffs.iter().map(|x| x * x).sum::<f64>().sqrt();
        let peak = coeffs
            .iter()
            .cloned()
            .max_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap())
            .unwrap();
        let sign = if peak < 0.0 { -1.0 } else { 1.0 };
        for x in coeffs.iter_mut() {
            *x *= sign / norm;
        }
        let tail = coeffs[n - 1].abs().max(coeffs[n - 2].abs());
        let peak_abs = peak.abs() / norm;
        if tail > 1e-12 * peak_abs {
            return Err(Error::TruncationTooSmall {
                order: matrix.order,
                tail,
            });
        }
        out.push(EigenPair {
            n: idx,
            chi,
            coeffs,
            parity,
            params: matrix.params,
            c: matrix.c,
        });
    }
    Ok(out)
}

/// The reflection map between the (alpha, beta) and (beta, alpha) problems:
/// same chi_n, coefficients flipped to (-1)^{k+n} beta_k^n, so that
/// psi^{(a,b)}(-x) = (-1)^n psi^{(b,a)}(x). The mapped pair carries the sign
/// dictated by this relation, which may differ from the solver's
/// peak-positive convention by a global factor.
pub fn symmetry_map(pair: &EigenPair) -> EigenPair {
    let n = pair.n;
    let coeffs: Vec<f64> = pair
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &b)| if (k + n) % 2 == 0 { b } else { -b })
        .collect();
    EigenPair {
        n,
        chi: pair.chi,
        coeffs,
        parity: pair.parity,
        params: pair.params.swapped(),
        c: pair.c,
    }
}

/// Double-double refinement of a symmetric-weight eigenpair against the
/// exact closed-form matrix entries. Returns the refined chi and the
/// parity-compressed coefficient vector (indices parity, parity+2, ...).
pub(crate) fn refine_pair_dd(pair: &EigenPair) -> Result<(Dd, Vec<Dd>)> {
    let params = pair.params;
    assert!(params.is_symmetric());
    let al = params.alpha();
    let c = pair.c;
    let order = pair.truncation();
    let parity = pair.parity.expect("symmetric weight has parity");
    let start = match parity {
        Parity::Even => 0usize,
        Parity::Odd => 1usize,
    };
    let ks: Vec<usize> = (start..=order).step_by(2).collect();
    let c2 = Dd::from(c).mul(Dd::from(c));
    let diag: Vec<Dd> = ks.iter().map(|&k| closed_diag_dd(k, al, c2)).collect();
    let off: Vec<Dd> = ks
        .iter()
        .take(ks.len() - 1)
        .map(|&k| closed_off2_dd(k, al, c2))
        .collect();
    let seed: Vec<f64> = ks.iter().map(|&k| pair.coeffs[k]).collect();
    tridiag::refine_eigenpair_dd(&diag, &off, pair.chi, &seed)
}

/// d_{k,k} of the symmetric-weight matrix in closed form. The rational factor
/// has removable 0/0 points at (k, alpha) = (0, 1/2) and (1, -1/2); the
/// reduced expressions below are exact there and equal elsewhere.
fn closed_diag_dd(k: usize, al: f64, c2: Dd) -> Dd {
    let kf = k as f64;
    let chi0 = Dd::from(kf).mul(Dd::from(kf).add_f64(2.0 * al + 1.0));
    let r = match k {
        0 => Dd::ONE.div(Dd::from(2.0 * al).add_f64(3.0)),
        1 => Dd::from(3.0).div(Dd::from(2.0 * al).add_f64(5.0)),
        _ => {
            let num = Dd::from(2.0 * kf)
                .mul(Dd::from(kf).add_f64(2.0 * al + 1.0))
                .add_f64(2.0 * al - 1.0);
            let den = Dd::from(2.0 * kf + 2.0 * al + 3.0).mul(Dd::from(2.0 * kf + 2.0 * al - 1.0));
            num.div(den)
        }
    };
    chi0.add(c2.mul(r))
}

/// d_{k,k+2} of the symmetric-weight matrix in closed form.
fn closed_off2_dd(k: usize, al: f64, c2: Dd) -> Dd {
    let kf = k as f64;
    let num = Dd::from(kf + 1.0)
        .mul(Dd::from(kf + 2.0))
        .mul(Dd::from(kf).add_f64(2.0 * al + 1.0))
        .mul(Dd::from(kf).add_f64(2.0 * al + 2.0));
    let den = Dd::from(2.0 * kf + 2.0 * al + 5.0).mul(Dd::from(2.0 * kf + 2.0 * al + 1.0));
    c2.mul(num.sqrt())
        .div(Dd::from(2.0 * kf + 2.0 * al + 3.0))
        .div(den.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn default_truncation_examples() {
        assert!(default_truncation(15, 5.0 * PI, 0.5) >= 60);
        assert_eq!(default_truncation(0, 1e-9, 0.0), 31);
        assert_eq!(default_truncation(40, 100.0, 0.0), 166);
    }

    #[test]
    fn d00_legendre() {
        // alpha = beta = 0: d_{0,0} = c^2/3
        let m = build_matrix(WeightParams::symmetric(0.0).unwrap(), 3.0, 8).unwrap();
        assert!((m.entry(0, 0) - 3.0).abs() < 1e-13);
    }

    #[test]
    fn symmetric_weight_kills_odd_couplings() {
        for &al in &[0.0, 0.5, 1.5, -0.3] {
            let m = build_matrix(WeightParams::symmetric(al).unwrap(), 4.0, 12).unwrap();
            for i in 0..12 {
                assert_eq!(m.entry(i, i + 1), 0.0, "alpha = {al}, i = {i}");
            }
        }
    }

    #[test]
    fn closed_form_matches_recurrence_build() {
        // expanded symmetric-weight entries vs the general x^2-expansion route
        for &al in &[0.0, 0.5, 1.5] {
            let c = 3.0;
            let c2 = Dd::from(c).mul(Dd::from(c));
            let m = build_matrix(WeightParams::symmetric(al).unwrap(), c, 16).unwrap();
            for k in 0..=14usize {
                let want = closed_diag_dd(k, al, c2).to_f64();
                assert!(
                    (m.entry(k, k) - want).abs() <= 1e-13 * (1.0 + want.abs()),
                    "diag alpha={al} k={k}: {} vs {want}",
                    m.entry(k, k)
                );
                if k + 2 <= 16 {
                    let want = closed_off2_dd(k, al, c2).to_f64();
                    assert!(
                        (m.entry(k, k + 2) - want).abs() <= 1e-13 * (1.0 + want.abs()),
                        "off2 alpha={al} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn diag_dominates_unperturbed_part() {
        // d_{i,i} >= i (i + 2 alpha + 1) for symmetric weights
        for &al in &[0.0, 0.5, 1.5, -0.9] {
            let m = build_matrix(WeightParams::symmetric(al).unwrap(), 7.0, 20).unwrap();
            for i in 0..=20usize {
                let base = i as f64 * (i as f64 + 2.0 * al + 1.0);
                assert!(m.entry(i, i) >= base, "alpha={al} i={i}");
            }
        }
    }

    #[test]
    fn entries_match_quadrature_oracle() {
        // d_{i,j} = chi_i(0) delta_{ij} + c^2 <x^2 Pt_j, Pt_i>_w, with the
        // inner product done by an independent Gauss-Jacobi rule
        let params = WeightParams::new(0.3, 0.6).unwrap();
        let c = 4.0;
        let m = build_matrix(params, c, 14).unwrap();
        let rec = crate::specfun::JacobiRecurrence::new(params, 14);
        let rule = crate::quadrature::gauss_jacobi_general(params, 40).unwrap();
        let table: Vec<Vec<f64>> = rule
            .nodes()
            .iter()
            .map(|&x| rec.eval_all(12, x).unwrap())
            .collect();
        for i in 0..=10usize {
            for j in 0..=10usize {
                let mut acc = 0.0;
                for (q, w) in rule.weights().iter().enumerate() {
                    acc += w * rule.nodes()[q].powi(2) * table[q][i] * table[q][j];
                }
                let mut want = c * c * acc;
                if i == j {
                    want += i as f64 * (i as f64 + 0.3 + 0.6 + 1.0);
                }
                let got = m.entry(i, j);
                if (i as i64 - j as i64).abs() >= 3 {
                    assert!(want.abs() < 1e-10, "five-diagonal structure at ({i},{j})");
                }
                assert!(
                    (got - want).abs() <= 1e-10 * (1.0 + want.abs()),
                    "({i},{j}): {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let p = WeightParams::symmetric(0.0).unwrap();
        assert!(build_matrix(p, 0.0, 10).is_err());
        assert!(build_matrix(p, -1.0, 10).is_err());
        assert!(build_matrix(p, 1.0, 3).is_err());
        let m = build_matrix(p, 1.0, 10).unwrap();
        assert!(solve(&m, 8).is_err()); // n_max + margin exceeds order
    }

    #[test]
    fn small_c_limit() {
        // chi_n -> n(n + alpha + beta + 1), coefficients -> unit vectors
        let params = WeightParams::new(0.3, 0.6).unwrap();
        let m = build_matrix(params, 1e-8, 24).unwrap();
        let pairs = solve(&m, 6).unwrap();
        for (n, pair) in pairs.iter().enumerate() {
            let nf = n as f64;
            let want = nf * (nf + 0.3 + 0.6 + 1.0);
            assert!((pair.chi() - want).abs() < 1e-10, "n={n}");
            assert!((pair.coeffs()[n] - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn chi_bounds_and_ordering() {
        for &(al, be) in &[(0.0, 0.0), (0.5, 0.5), (0.3, 0.6)] {
            let params = WeightParams::new(al, be).unwrap();
            let c = 5.0 * PI;
            let n_max = 20;
            let order = default_truncation(n_max, c, al);
            let m = build_matrix(params, c, order).unwrap();
            let pairs = solve(&m, n_max).unwrap();
            let mut last = f64::NEG_INFINITY;
            for pair in &pairs {
                let nf = pair.n() as f64;
                let lo = nf * (nf + al + be + 1.0);
                assert!(
                    pair.chi() >= lo - 1e-12 * (1.0 + lo),
                    "lower bound n={}",
                    pair.n()
                );
                assert!(
                    pair.chi() <= lo + c * c + 1e-12 * (1.0 + lo + c * c),
                    "upper bound n={}",
                    pair.n()
                );
                assert!(pair.chi() > last, "eigenvalues must increase strictly");
                last = pair.chi();
                let norm: f64 = pair.coeffs().iter().map(|x| x * x).sum();
                assert!((norm - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn parity_classes_are_structural() {
        let params = WeightParams::symmetric(0.5).unwrap();
        let m = build_matrix(params, 5.0 * PI, 70).unwrap();
        let pairs = solve(&m, 15).unwrap();
        for pair in &pairs {
            assert_eq!(pair.parity(), Some(Parity::of_index(pair.n())));
            for (k, &b) in pair.coeffs().iter().enumerate() {
                if k % 2 != pair.n() % 2 {
                    assert_eq!(b, 0.0, "opposite parity class must be exactly zero");
                }
            }
        }
    }

    #[test]
    fn truncation_stability() {
        let params = WeightParams::symmetric(0.5).unwrap();
        let c = 5.0 * PI;
        let m1 = build_matrix(params, c, 70).unwrap();
        let m2 = build_matrix(params, c, 140).unwrap();
        let p1 = solve(&m1, 10).unwrap();
        let p2 = solve(&m2, 10).unwrap();
        for n in 0..=10 {
            let a = &p1[n];
            let b = &p2[n];
            assert!(
                (a.chi() - b.chi()).abs() <= 1e-12 * (1.0 + a.chi().abs()),
                "n={n}"
            );
            for k in 0..=70 {
                assert!((a.coeffs()[k] - b.coeffs()[k]).abs() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn detects_too_small_truncation() {
        let params = WeightParams::symmetric(0.0).unwrap();
        let m = build_matrix(params, 30.0, 14).unwrap();
        match solve(&m, 10) {
            Err(Error::TruncationTooSmall { .. }) => {}
            other => panic!("expected TruncationTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_vectors_orthonormal() {
        let params = WeightParams::new(0.3, 0.6).unwrap();
        let m = build_matrix(params, 4.0, 30).unwrap();
        let pairs = solve(&m, 12).unwrap();
        for i in 0..pairs.len() {
            for j in i..pairs.len() {
                let dot: f64 = pairs[i]
                    .coeffs()
                    .iter()
                    .zip(pairs[j].coeffs())
                    .map(|(x, y)| x * y)
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10, "i={i} j={j}: {dot}");
            }
        }
    }

    #[test]
    fn residual_of_full_matrix() {
        let params = WeightParams::new(0.3, 0.6).unwrap();
        let c = 4.0;
        let m = build_matrix(params, c, 40).unwrap();
        let pairs = solve(&m, 10).unwrap();
        for pair in &pairs {
            let v = pair.coeffs();
            let mut res = 0.0_f64;
            for i in 0..v.len() {
                let mut tv = 0.0;
                for j in i.saturating_sub(2)..(i + 3).min(v.len()) {
                    tv += m.entry(i, j) * v[j];
                }
                res += (tv - pair.chi() * v[i]).powi(2);
            }
            assert!(
                res.sqrt() <= 1e-10 * (1.0 + pair.chi()),
                "n = {}: residual {}",
                pair.n(),
                res.sqrt()
            );
        }
    }

    #[test]
    fn dense_oracle_agreement() {
        // classical limit: my tridiagonal QL vs an independent dense solver
        // at doubled truncation (alpha = beta = 0, c = 5)
        let params = WeightParams::symmetric(0.0).unwrap();
        let c = 5.0;
        let m = build_matrix(params, c, 60).unwrap();
        let pairs = solve(&m, 10).unwrap();
        let big = build_matrix(params, c, 200).unwrap();
        let n = big.order() + 1;
        let mut dense = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in i..(i + 3).min(n) {
                dense[(i, j)] = big.entry(i, j);
                dense[(j, i)] = big.entry(i, j);
            }
        }
        let mut vals: Vec<f64> = dense
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for pair in &pairs {
            let want = vals[pair.n()];
            assert!(
                (pair.chi() - want).abs() <= 1e-10 * (1.0 + want.abs()),
                "n = {}: {} vs {}",
                pair.n(),
                pair.chi(),
                want
            );
        }
    }

    #[test]
    fn symmetry_map_preserves_chi_and_is_involution_up_to_sign() {
        let params = WeightParams::new(0.3, 0.6).unwrap();
        let m = build_matrix(params, 4.0, 30).unwrap();
        let pairs = solve(&m, 6).unwrap();
        for pair in &pairs {
            let mapped = symmetry_map(pair);
            assert_eq!(mapped.chi(), pair.chi());
            assert_eq!(mapped.params(), params.swapped());
            let back = symmetry_map(&mapped);
            for (x, y) in back.coeffs().iter().zip(pair.coeffs()) {
                assert_eq!(x, y);
            }
        }
        // symmetric case: identity
        let ms = build_matrix(WeightParams::symmetric(0.5).unwrap(), 4.0, 30).unwrap();
        for pair in solve(&ms, 4).unwrap() {
            let mapped = symmetry_map(&pair);
            for (x, y) in mapped.coeffs().iter().zip(pair.coeffs()) {
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn dd_refinement_consistent_with_f64() {
        let params = WeightParams::symmetric(0.5).unwrap();
        let c = 5.0 * PI;
        let m = build_matrix(params, c, 70).unwrap();
        let pairs = solve(&m, 8).unwrap();
        for pair in &pairs {
            let (chi, v) = refine_pair_dd(pair).unwrap();
            assert!((chi.to_f64() - pair.chi()).abs() < 1e-9 * (1.0 + pair.chi()));
            let start = if pair.n() % 2 == 0 { 0 } else { 1 };
            for (m_i, x) in v.iter().enumerate() {
                let f = pair.coeffs()[start + 2 * m_i];
                assert!((x.to_f64() - f).abs() < 1e-9, "component {m_i}");
            }
        }
    }
}
