//! Gauss-Legendre nodes and weights on [-1, 1], via Newton iteration on the
//! Legendre recurrence with the usual cosine initial guesses.

use std::f64::consts::PI;

/// Returns `n` (node, weight) pairs; exact for polynomials up to degree 2n-1.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut rule = Vec::with_capacity(n);
    // nodes are symmetric; compute the non-negative half and mirror
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
        if x.abs() > 1e-12 || n.is_multiple_of(2) {
            rule.push((-x, w));
        }
    }
    rule.truncate(n);
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integrates `f` over [-1, 1] with an order-`n` rule.
pub fn integrate<F: Fn(f64) -> f64>(n: usize, f: F) -> f64 {
    gauss_legendre(n).iter().map(|&(x, w)| w * f(x)).sum()
}
