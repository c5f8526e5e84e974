//! Monotone cubic (Fritsch-Carlson) interpolation and monotone inversion.

use crate::error::{Error, Result};

/// Piecewise-cubic Hermite interpolant with Fritsch-Carlson limited slopes.
/// Keeps monotone data monotone, which is what the characteristic profile
/// and the map inverses need.
#[derive(Debug, Clone)]
pub struct Pchip {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ds: Vec<f64>,
}

impl Pchip {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() < 2 || xs.len() != ys.len() {
            return Err(Error::Config("pchip needs at least two nodes".into()));
        }
        let n = xs.len();
        for i in 1..n {
            if xs[i] <= xs[i - 1] {
                return Err(Error::NonMonotone { x: xs[i] });
            }
        }
        let mut slopes = vec![0.0; n - 1];
        for i in 0..n - 1 {
            slopes[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut ds = vec![0.0; n];
        ds[0] = slopes[0];
        ds[n - 1] = slopes[n - 2];
        for i in 1..n - 1 {
            let (s0, s1) = (slopes[i - 1], slopes[i]);
            if s0 * s1 <= 0.0 {
                ds[i] = 0.0;
            } else {
                // weighted harmonic mean (Fritsch-Butland form)
                let h0 = xs[i] - xs[i - 1];
                let h1 = xs[i + 1] - xs[i];
                let w0 = 2.0 * h1 + h0;
                let w1 = h1 + 2.0 * h0;
                ds[i] = (w0 + w1) / (w0 / s0 + w1 / s1);
            }
        }
        Ok(Pchip { xs, ys, ds })
    }

    fn segment(&self, x: f64) -> usize {
        match self
            .xs
            .binary_search_by(|v| v.partial_cmp(&x).unwrap())
        {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(0) => 0,
            Err(i) if i >= self.xs.len() => self.xs.len() - 2,
            Err(i) => i - 1,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1, d0, d1) = (self.ys[i], self.ys[i + 1], self.ds[i], self.ds[i + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + h * d0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + h * d1 * (t3 - t2)
    }

    pub fn eval_deriv(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1, d0, d1) = (self.ys[i], self.ys[i + 1], self.ds[i], self.ds[i + 1]);
        let t2 = t * t;
        (y0 * (6.0 * t2 - 6.0 * t) / h)
            + d0 * (3.0 * t2 - 4.0 * t + 1.0)
            + (y1 * (-6.0 * t2 + 6.0 * t) / h)
            + d1 * (3.0 * t2 - 2.0 * t)
    }

    pub fn range(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }
}

/// Solve `f(x) = target` for a strictly monotone `f` on `[lo, hi]` by
/// safeguarded Newton (bisection fallback). `f` returns (value, derivative).
pub fn invert_monotone<F>(mut lo: f64, mut hi: f64, target: f64, tol: f64, f: F) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    let (flo, _) = f(lo);
    let (fhi, _) = f(hi);
    let increasing = fhi > flo;
    let (mut a, mut b) = (flo - target, fhi - target);
    if !increasing {
        std::mem::swap(&mut a, &mut b);
        // keep lo < hi but track bracket orientation via `increasing`
    }
    if a > 0.0 || b < 0.0 {
        return Err(Error::Config(format!(
            "inversion target {target} outside bracket [{flo}, {fhi}]"
        )));
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (v, d) = f(x);
        let r = v - target;
        if r.abs() <= tol * (1.0 + target.abs()) {
            return Ok(x);
        }
        // shrink bracket
        if (r > 0.0) == increasing {
            hi = x;
        } else {
            lo = x;
        }
        let newton = x - r / d;
        x = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (hi - lo).abs() < 1e-17 * (1.0 + x.abs()) {
            return Ok(x);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_monotone_data_monotonically() {
        let xs: Vec<f64> = (0..40).map(|i| i as f64 * 0.25).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x + (0.5 * x).sin()).collect();
        let p = Pchip::new(xs.clone(), ys).unwrap();
        let mut prev = p.eval(0.0);
        let mut x = 0.01;
        while x < 9.7 {
            let v = p.eval(x);
            assert!(v >= prev - 1e-12, "monotonicity violated at {x}");
            prev = v;
            x += 0.013;
        }
        // accuracy on smooth data
        assert!((p.eval(3.3) - (3.3 + (0.5f64 * 3.3).sin())).abs() < 2e-4);
    }

    #[test]
    fn inversion_hits_target() {
        let f = |x: f64| (x + x.powi(3), 1.0 + 3.0 * x * x);
        let x = invert_monotone(0.0, 2.0, 1.3, 1e-14, f).unwrap();
        assert!((x + x.powi(3) - 1.3).abs() < 1e-12);
    }
}
