//! Natural cubic spline interpolation for sampled input functions (CSV rows
//! of x,f(x) pairs).

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    y2: Vec<f64>,
}

impl CubicSpline {
    /// Build a natural spline; abscissas must be strictly increasing.
    pub fn from_points(xs: Vec<f64>, ys: Vec<f64>) -> Result<CubicSpline> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::InvalidParameter(
                "spline needs at least two equal-length coordinate vectors".into(),
            ));
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(
                "spline abscissas must strictly increase".into(),
            ));
        }
        let n = xs.len();
        let mut y2 = vec![0.0_f64; n];
        let mut u = vec![0.0_f64; n];
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * y2[i - 1] + 2.0;
            y2[i] = (sig - 1.0) / p;
            let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (6.0 * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            y2[i] = y2[i] * y2[i + 1] + u[i];
        }
        Ok(CubicSpline { xs, ys, y2 })
    }

    /// Parse "x,y" rows; a non-numeric first row is treated as a header.
    pub fn from_csv(text: &str) -> Result<CubicSpline> {
        let mut pts: Vec<(f64, f64)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split(',');
            let a = cols.next().map(str::trim);
            let b = cols.next().map(str::trim);
            match (
                a.and_then(|s| s.parse::<f64>().ok()),
                b.and_then(|s| s.parse::<f64>().ok()),
            ) {
                (Some(x), Some(y)) => pts.push((x, y)),
                _ if lineno == 0 => continue, // header row
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "CSV line {} is not an x,f(x) pair: {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        pts.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        let (xs, ys) = pts.into_iter().unzip();
        CubicSpline::from_points(xs, ys)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let x = x.clamp(self.xs[0], self.xs[n - 1]);
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - x) / h;
        let b = (x - self.xs[lo]) / h;
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.y2[lo] + (b * b * b - b) * self.y2[hi]) * h * h / 6.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_nodes_exactly() {
        let xs: Vec<f64> = (0..20).map(|i| -1.0 + i as f64 / 9.5).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (3.0 * x).sin()).collect();
        let s = CubicSpline::from_points(xs.clone(), ys.clone()).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert!((s.eval(*x) - y).abs() < 1e-14);
        }
        // interior accuracy ~ h^4
        assert!((s.eval(0.05) - (0.15_f64).sin()).abs() < 1e-3);
    }

    #[test]
    fn csv_roundtrip() {
        let text = "x,f\n-1.0,1.0\n-0.5,0.25\n0.0,0.0\n0.5,0.25\n1.0,1.0\n";
        let s = CubicSpline::from_csv(text).unwrap();
        assert!((s.eval(0.5) - 0.25).abs() < 1e-14);
        assert!(CubicSpline::from_csv("x,f\nbad,row\n").is_err());
    }
}
