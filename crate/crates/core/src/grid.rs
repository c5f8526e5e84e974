//! Periodic grid in `y` with FFT-based spectral operations.
//!
//! Conventions: the grid has `n` (a power of two) points `y_j = -L + j*dy`,
//! `dy = 2L/n`. Fourier frequencies are measured in cycles per unit length,
//! `xi_m = m/(2L)` for `m = -n/2 .. n/2-1`, matching the transform
//! `f(y) = sum_m c_m exp(2 pi i xi_m (y+L))`.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

#[derive(Clone)]
pub struct PeriodicGrid {
    n: usize,
    half_width: f64,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for PeriodicGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PeriodicGrid")
            .field("n", &self.n)
            .field("half_width", &self.half_width)
            .finish()
    }
}

impl PeriodicGrid {
    pub fn new(n: usize, half_width: f64) -> Self {
        assert!(n.is_power_of_two(), "grid size must be a power of two");
        let mut planner = FftPlanner::new();
        PeriodicGrid {
            n,
            half_width,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn dy(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        -self.half_width + j as f64 * self.dy()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.node(j)).collect()
    }

    /// Signed integer mode index for spectral bin `k`.
    pub fn mode(&self, k: usize) -> i64 {
        if k <= self.n / 2 {
            k as i64
        } else {
            k as i64 - self.n as i64
        }
    }

    /// Frequency (cycles per unit length) of spectral bin `k`.
    pub fn freq(&self, k: usize) -> f64 {
        self.mode(k) as f64 / (2.0 * self.half_width)
    }

    /// Forward transform of real samples; returns Fourier coefficients
    /// `c_k` (normalized by `1/n`).
    pub fn forward(&self, real: &[f64]) -> Vec<Complex64> {
        assert_eq!(real.len(), self.n);
        let mut buf: Vec<Complex64> = real.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.fwd.process(&mut buf);
        let scale = 1.0 / self.n as f64;
        for c in &mut buf {
            *c *= scale;
        }
        buf
    }

    /// Inverse transform back to real samples (imaginary parts discarded).
    pub fn inverse(&self, spec: &[Complex64]) -> Vec<f64> {
        assert_eq!(spec.len(), self.n);
        let mut buf = spec.to_vec();
        self.inv.process(&mut buf);
        buf.iter().map(|c| c.re).collect()
    }

    /// Spectral derivative of the given order. Odd orders zero the Nyquist
    /// bin; even orders keep its real multiplier.
    pub fn deriv(&self, real: &[f64], order: usize) -> Vec<f64> {
        let mut spec = self.forward(real);
        for (k, c) in spec.iter_mut().enumerate() {
            let xi = self.freq(k);
            let factor = Complex64::new(0.0, 2.0 * std::f64::consts::PI * xi).powu(order as u32);
            if self.mode(k).unsigned_abs() as usize == self.n / 2 && order % 2 == 1 {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c *= factor;
            }
        }
        self.inverse(&spec)
    }

    /// Trigonometric evaluation of the interpolant at an arbitrary point.
    pub fn eval_trig(&self, spec: &[Complex64], y: f64) -> f64 {
        let n = self.n;
        let u = y + self.half_width;
        let w = 2.0 * std::f64::consts::PI * u / (2.0 * self.half_width);
        let mut acc = spec[0].re;
        for k in 1..n / 2 {
            let phase = w * k as f64;
            let e = Complex64::new(phase.cos(), phase.sin());
            acc += 2.0 * (spec[k] * e).re;
        }
        // Nyquist bin as pure cosine
        acc += spec[n / 2].re * (w * (n / 2) as f64).cos();
        acc
    }

    /// Cyclic shift by `m` cells (used by equivariance checks).
    pub fn cyclic_shift(data: &[f64], m: usize) -> Vec<f64> {
        let n = data.len();
        (0..n).map(|j| data[(j + n - m % n) % n]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectral_derivative_of_trig_polynomial() {
        let g = PeriodicGrid::new(64, 3.0);
        let k = std::f64::consts::PI / 3.0; // one full period over the domain
        let f: Vec<f64> = g.nodes().iter().map(|&y| (2.0 * k * y).sin()).collect();
        let d2 = g.deriv(&f, 2);
        for (j, &y) in g.nodes().iter().enumerate() {
            let want = -(2.0 * k) * (2.0 * k) * (2.0 * k * y).sin();
            assert!((d2[j] - want).abs() < 1e-10, "node {j}");
        }
    }

    #[test]
    fn trig_eval_interpolates_nodes_and_midpoints() {
        let g = PeriodicGrid::new(128, 5.0);
        let f: Vec<f64> = g
            .nodes()
            .iter()
            .map(|&y| (-y * y / 2.0) * (0.9 * y).cos())
            .collect();
        let spec = g.forward(&f);
        // node reproduction
        for j in (0..g.len()).step_by(17) {
            assert!((g.eval_trig(&spec, g.node(j)) - f[j]).abs() < 1e-10);
        }
        // midpoint: compare against the function itself (smooth, wide grid)
        let y = g.node(40) + 0.5 * g.dy();
        let want = (-y * y / 2.0) * (0.9 * y).cos();
        assert!((g.eval_trig(&spec, y) - want).abs() < 1e-6);
    }

    #[test]
    fn forward_inverse_round_trip() {
        let g = PeriodicGrid::new(32, 1.0);
        let f: Vec<f64> = (0..32).map(|j| (j as f64 * 0.37).sin()).collect();
        let back = g.inverse(&g.forward(&f));
        for (a, b) in f.iter().zip(&back) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
