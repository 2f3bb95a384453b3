//! Gauss–Legendre quadrature, exact for polynomials of degree `2n - 1`.
//!
//! Nodes are the roots of the degree-`n` Legendre polynomial, found by
//! Newton iteration from the Chebyshev-based initial guesses; weights come
//! from the standard derivative formula. Used by the radial integral
//! identity, whose integrands are polynomials of known degree.

use num_complex::Complex64;

/// Nodes and weights on the reference interval `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Rule with `n >= 1` nodes.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            // classic initial guess near the i-th root
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        // ascending order makes the rule easier to inspect
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| nodes[a].total_cmp(&nodes[b]));
        GaussLegendre {
            nodes: order.iter().map(|&i| nodes[i]).collect(),
            weights: order.iter().map(|&i| weights[i]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrate a complex-valued function over `[a, b]`.
    pub fn integrate<F>(&self, a: f64, b: f64, mut f: F) -> Complex64
    where
        F: FnMut(f64) -> Complex64,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + half * x) * w;
        }
        acc * half
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}
