//! Truncated Taylor ("jet") arithmetic over plain `f64` coefficient vectors.
//!
//! A jet of order `n` is a `Vec<f64>` of length `n + 1` holding plain
//! coefficients: `f(x0 + d) = a[0] + a[1] d + ... + a[n] d^n + O(d^{n+1})`.
//! These are the workhorse behind analytic differentiation of parsed
//! expressions, the piecewise-smooth bump surfaces, and the high-order
//! derivative tables of the conformal map.

/// Constant jet.
pub fn cnst(c: f64, n: usize) -> Vec<f64> {
    let mut a = vec![0.0; n + 1];
    a[0] = c;
    a
}

/// Jet of the identity `x` expanded at `x0`.
pub fn var(x0: f64, n: usize) -> Vec<f64> {
    let mut a = vec![0.0; n + 1];
    a[0] = x0;
    if n >= 1 {
        a[1] = 1.0;
    }
    a
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

/// Truncated product.
pub fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().min(b.len());
    let mut out = vec![0.0; n];
    for i in 0..n {
        let ai = a[i];
        if ai == 0.0 {
            continue;
        }
        for j in 0..n - i {
            out[i + j] += ai * b[j];
        }
    }
    out
}

/// Truncated quotient; requires `b[0] != 0`.
pub fn div(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().min(b.len());
    let mut out = vec![0.0; n];
    for k in 0..n {
        let mut acc = a[k];
        for j in 1..=k {
            acc -= b[j] * out[k - j];
        }
        out[k] = acc / b[0];
    }
    out
}

pub fn recip(a: &[f64]) -> Vec<f64> {
    div(&cnst(1.0, a.len() - 1), a)
}

/// Composition `f(g(d))`; requires `g[0] == 0`.
pub fn compose(f: &[f64], g: &[f64]) -> Vec<f64> {
    debug_assert!(g[0] == 0.0, "compose requires vanishing inner constant");
    let n = f.len();
    let mut out = cnst(f[n - 1], n - 1);
    for k in (0..n - 1).rev() {
        out = mul(&out, g);
        out[0] += f[k];
    }
    out
}

/// Compositional inverse of `w` with `w[0] == 0`, `w[1] != 0`:
/// returns `d(z)` with `w(d(z)) = z + O(z^{n+1})`.
pub fn reversion(w: &[f64]) -> Vec<f64> {
    let n = w.len() - 1;
    assert!(w[0] == 0.0 && w[1] != 0.0, "reversion needs w = w1*d + ...");
    // w(d) = w1*d + t(d); iterate d <- (z - t(d))/w1, gaining one order each pass.
    let mut tail = w.to_vec();
    tail[1] = 0.0;
    let zed = var(0.0, n);
    let mut d = scale(&zed, 1.0 / w[1]);
    for _ in 0..n {
        d = scale(&sub(&zed, &compose(&tail, &d)), 1.0 / w[1]);
    }
    d
}

pub fn exp(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut f = vec![0.0; n];
    f[0] = u[0].exp();
    for k in 1..n {
        let mut acc = 0.0;
        for j in 1..=k {
            acc += j as f64 * u[j] * f[k - j];
        }
        f[k] = acc / k as f64;
    }
    f
}

pub fn ln(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    debug_assert!(u[0] > 0.0);
    let mut l = vec![0.0; n];
    l[0] = u[0].ln();
    for k in 1..n {
        let mut acc = u[k];
        for j in 1..k {
            acc -= j as f64 * l[j] * u[k - j] / k as f64;
        }
        l[k] = acc / u[0];
    }
    l
}

/// Real power `u^r`; requires `u[0] > 0`.
pub fn powf(u: &[f64], r: f64) -> Vec<f64> {
    let n = u.len();
    debug_assert!(u[0] > 0.0);
    let mut p = vec![0.0; n];
    p[0] = u[0].powf(r);
    for k in 1..n {
        let mut acc = 0.0;
        for j in 0..k {
            acc += (r * (k - j) as f64 - j as f64) * p[j] * u[k - j];
        }
        p[k] = acc / (k as f64 * u[0]);
    }
    p
}

pub fn powi(u: &[f64], mut e: u32) -> Vec<f64> {
    let n = u.len() - 1;
    let mut base = u.to_vec();
    let mut out = cnst(1.0, n);
    while e > 0 {
        if e & 1 == 1 {
            out = mul(&out, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    out
}

pub fn sqrt(u: &[f64]) -> Vec<f64> {
    powf(u, 0.5)
}

pub fn sin_cos(u: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = u.len();
    let mut s = vec![0.0; n];
    let mut c = vec![0.0; n];
    s[0] = u[0].sin();
    c[0] = u[0].cos();
    for k in 1..n {
        let mut sa = 0.0;
        let mut ca = 0.0;
        for j in 1..=k {
            sa += j as f64 * u[j] * c[k - j];
            ca += j as f64 * u[j] * s[k - j];
        }
        s[k] = sa / k as f64;
        c[k] = -ca / k as f64;
    }
    (s, c)
}

pub fn sin(u: &[f64]) -> Vec<f64> {
    sin_cos(u).0
}

pub fn cos(u: &[f64]) -> Vec<f64> {
    sin_cos(u).1
}

pub fn tanh(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut t = vec![0.0; n];
    t[0] = u[0].tanh();
    for k in 1..n {
        // t' = (1 - t^2) u', with t^2 rebuilt from the orders already known
        let q = mul(&t, &t);
        let mut acc = 0.0;
        for j in 1..=k {
            let w = if k - j == 0 { 1.0 - q[0] } else { -q[k - j] };
            acc += j as f64 * u[j] * w;
        }
        t[k] = acc / k as f64;
    }
    t
}

/// Jet of the derivative `f'` (coefficients shift down).
pub fn deriv(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    if n <= 1 {
        return vec![0.0];
    }
    (1..n).map(|k| k as f64 * a[k]).collect()
}

/// Evaluate the jet at displacement `d` by Horner.
pub fn eval(a: &[f64], d: f64) -> f64 {
    let mut acc = 0.0;
    for &c in a.iter().rev() {
        acc = acc * d + c;
    }
    acc
}

/// Evaluate the `k`-th derivative of the jet at displacement `d`.
pub fn eval_deriv(a: &[f64], k: usize, d: f64) -> f64 {
    if k >= a.len() {
        return 0.0;
    }
    // Horner on the factorial-weighted coefficients a_i * i!/(i-k)!.
    let mut out = 0.0;
    for i in (k..a.len()).rev() {
        let mut c = a[i];
        for j in 0..k {
            c *= (i - j) as f64;
        }
        out = out * d + c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn exp_of_sin_matches_closed_form() {
        // f(x) = exp(sin x) at x0 = 0.7, check f and f' against directly
        // differentiated closed forms.
        let x0 = 0.7_f64;
        let u = var(x0, 8);
        let f = exp(&sin(&u));
        assert!(close(f[0], x0.sin().exp(), TOL));
        assert!(close(f[1], x0.cos() * x0.sin().exp(), TOL));
        // second derivative: (cos^2 - sin) e^{sin}
        let d2 = (x0.cos().powi(2) - x0.sin()) * x0.sin().exp();
        assert!(close(2.0 * f[2], d2, TOL));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = vec![1.3, -0.4, 0.2, 0.05, -0.7];
        let b = vec![0.8, 0.3, -0.1, 0.9, 0.11];
        let q = div(&mul(&a, &b), &b);
        for (x, y) in q.iter().zip(&a) {
            assert!(close(*x, *y, TOL));
        }
    }

    #[test]
    fn reversion_round_trip() {
        let w = vec![0.0, 2.0, -0.3, 0.08, 0.5, -0.2];
        let d = reversion(&w);
        let round = compose(&w, &d);
        assert!(close(round[1], 1.0, TOL));
        for k in [0usize, 2, 3, 4, 5] {
            assert!(round[k].abs() < 1e-12, "order {k}: {}", round[k]);
        }
    }

    #[test]
    fn powf_consistent_with_exp_ln() {
        let u = vec![2.0, 0.5, -0.3, 0.12, 0.07];
        let a = powf(&u, 0.37);
        let b = exp(&scale(&ln(&u), 0.37));
        for (x, y) in a.iter().zip(&b) {
            assert!(close(*x, *y, 1e-13));
        }
    }

    #[test]
    fn tanh_derivative_identity() {
        let u = var(0.3, 6);
        let t = tanh(&u);
        // t' = 1 - t^2
        let q = mul(&t, &t);
        assert!(close(t[1], 1.0 - q[0], TOL));
        assert!(close(2.0 * t[2], -2.0 * t[0] * t[1], TOL));
    }

    #[test]
    fn eval_deriv_matches_shifted_expansion() {
        let a = vec![0.3, 1.7, -0.4, 0.9, 0.21, -0.05];
        let d = 0.13;
        // derivative jet route
        let da = deriv(&a);
        assert!(close(eval_deriv(&a, 1, d), eval(&da, d), TOL));
        assert!(close(eval_deriv(&a, 2, d), eval(&deriv(&da), d), TOL));
    }
}
