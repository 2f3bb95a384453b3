//! Deterministic generators for the named test-function families.
//!
//! Each family realizes one side of a membership statement the checks
//! exercise: sparse random polynomials (generic smooth inputs), coordinate
//! functions (closed-form values), ridge powers `<x,u>^k`, the truncated
//! logarithmic ridge, and the binomial ridge `(1-z)^{-beta}` whose growth
//! rate is tuned by `beta`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::functions::{HoloFunction, MAX_MONOMIAL_DEGREE, MAX_RIDGE_ORDER};
use crate::geometry::Point;
use crate::series::DiskSeries;
use crate::{Error, Result};

/// Number of monomials drawn per random polynomial.
const RANDOM_POLY_TERMS: usize = 6;

/// RNG stream reserved for random curve generation; streams 1 and 2 belong
/// to the sampling plan's directions and pairs.
const STREAM_CURVES: u64 = 4;

/// The named generator kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    RandomPoly,
    Coordinate,
    RidgePower,
    RidgeLog,
    RidgePowerBeta,
}

impl FamilyName {
    pub fn label(self) -> &'static str {
        match self {
            FamilyName::RandomPoly => "random-poly",
            FamilyName::Coordinate => "coordinate",
            FamilyName::RidgePower => "ridge-power",
            FamilyName::RidgeLog => "ridge-log",
            FamilyName::RidgePowerBeta => "ridge-powerbeta",
        }
    }
}

/// A reproducible recipe for a list of test functions.
///
/// Generation is a pure function of the spec: same spec, same functions.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    name: FamilyName,
    dim: usize,
    degree: u32,
    truncation: usize,
    count: usize,
    beta: f64,
    seed: u64,
}

impl FamilySpec {
    /// `count` sparse polynomials of total degree `<= degree` with
    /// coefficients uniform on the complex unit disk over a seeded sparse
    /// exponent set.
    pub fn random_poly(dim: usize, degree: u32, count: usize, seed: u64) -> Self {
        FamilySpec {
            name: FamilyName::RandomPoly,
            dim,
            degree,
            truncation: 0,
            count,
            beta: 0.0,
            seed,
        }
    }

    /// The coordinate functions `x_1, ..., x_n`.
    pub fn coordinate(dim: usize) -> Self {
        FamilySpec {
            name: FamilyName::Coordinate,
            dim,
            degree: 0,
            truncation: 0,
            count: 0,
            beta: 0.0,
            seed: 0,
        }
    }

    /// The ridge powers `<x,e_1>^k` for `k = 1..=degree`.
    pub fn ridge_power(dim: usize, degree: u32) -> Self {
        FamilySpec {
            name: FamilyName::RidgePower,
            dim,
            degree,
            truncation: 0,
            count: 0,
            beta: 0.0,
            seed: 0,
        }
    }

    /// The truncated logarithm `sum_{k=1}^{N} <x,e_1>^k / k`.
    pub fn ridge_log(dim: usize, truncation: usize) -> Self {
        FamilySpec {
            name: FamilyName::RidgeLog,
            dim,
            degree: 0,
            truncation,
            count: 0,
            beta: 0.0,
            seed: 0,
        }
    }

    /// The truncated binomial series of `(1 - <x,e_1>)^{-beta}`, with
    /// coefficients `c_0 = 1`, `c_k = c_{k-1} (beta + k - 1) / k`. Negative
    /// `beta` gives the boundary-continuous `(1-z)^{|beta|}`-type profile.
    pub fn ridge_power_beta(dim: usize, beta: f64, truncation: usize) -> Self {
        FamilySpec {
            name: FamilyName::RidgePowerBeta,
            dim,
            degree: 0,
            truncation,
            count: 0,
            beta,
            seed: 0,
        }
    }

    pub fn name(&self) -> FamilyName {
        self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Compact deterministic identifier used in check ids and reports.
    pub fn id(&self) -> String {
        match self.name {
            FamilyName::RandomPoly => format!(
                "random-poly(n{},d{},c{},s{})",
                self.dim, self.degree, self.count, self.seed
            ),
            FamilyName::Coordinate => format!("coordinate(n{})", self.dim),
            FamilyName::RidgePower => format!("ridge-power(n{},d{})", self.dim, self.degree),
            FamilyName::RidgeLog => format!("ridge-log(n{},N{})", self.dim, self.truncation),
            FamilyName::RidgePowerBeta => format!(
                "ridge-powerbeta(n{},b{},N{})",
                self.dim, self.beta, self.truncation
            ),
        }
    }

    fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidFamily { reason });
        if self.dim == 0 {
            return fail(format!("{}: dimension must be positive", self.id()));
        }
        match self.name {
            FamilyName::RandomPoly => {
                if self.degree == 0 || self.degree > MAX_MONOMIAL_DEGREE {
                    return fail(format!(
                        "{}: degree must lie in 1..={}",
                        self.id(),
                        MAX_MONOMIAL_DEGREE
                    ));
                }
                if self.count == 0 {
                    return fail(format!("{}: count must be positive", self.id()));
                }
            }
            FamilyName::Coordinate => {}
            FamilyName::RidgePower => {
                if self.degree == 0 || self.degree as usize > MAX_RIDGE_ORDER {
                    return fail(format!(
                        "{}: degree must lie in 1..={}",
                        self.id(),
                        MAX_RIDGE_ORDER
                    ));
                }
            }
            FamilyName::RidgeLog | FamilyName::RidgePowerBeta => {
                if self.truncation == 0 || self.truncation > MAX_RIDGE_ORDER {
                    return fail(format!(
                        "{}: truncation must lie in 1..={}",
                        self.id(),
                        MAX_RIDGE_ORDER
                    ));
                }
                if !self.beta.is_finite() {
                    return fail(format!("{}: beta must be finite", self.id()));
                }
            }
        }
        Ok(())
    }

    /// Generate the family as `(function_id, function)` pairs.
    pub fn generate(&self) -> Result<Vec<(String, HoloFunction)>> {
        self.validate()?;
        let mut out = Vec::new();
        match self.name {
            FamilyName::RandomPoly => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                for i in 0..self.count {
                    let mut f = HoloFunction::zero(self.dim);
                    for _ in 0..RANDOM_POLY_TERMS {
                        let total = rng.gen_range(1..=self.degree);
                        let mut exps = vec![0u32; self.dim];
                        for _ in 0..total {
                            exps[rng.gen_range(0..self.dim)] += 1;
                        }
                        // uniform on the unit disk: sqrt-radius times phase
                        let radius = rng.gen::<f64>().sqrt();
                        let angle = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
                        let coeff = Complex64::from_polar(radius, angle);
                        f = f.add(&HoloFunction::monomial(self.dim, exps, coeff)?)?;
                    }
                    out.push((format!("poly{:02}", i), f));
                }
            }
            FamilyName::Coordinate => {
                for j in 0..self.dim {
                    out.push((format!("x{}", j + 1), HoloFunction::coordinate(self.dim, j)));
                }
            }
            FamilyName::RidgePower => {
                let u = Point::basis(self.dim, 0);
                for k in 1..=self.degree as usize {
                    out.push((format!("zpow{}", k), HoloFunction::ridge_power(u.clone(), k)?));
                }
            }
            FamilyName::RidgeLog => {
                let mut coeffs = vec![Complex64::new(0.0, 0.0); self.truncation + 1];
                for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
                    *c = Complex64::new(1.0 / k as f64, 0.0);
                }
                let f = HoloFunction::ridge(Point::basis(self.dim, 0), coeffs)?;
                out.push((format!("ridgelog{}", self.truncation), f));
            }
            FamilyName::RidgePowerBeta => {
                let mut coeffs = vec![Complex64::new(0.0, 0.0); self.truncation + 1];
                coeffs[0] = Complex64::new(1.0, 0.0);
                for k in 1..=self.truncation {
                    coeffs[k] =
                        coeffs[k - 1] * Complex64::new((self.beta + k as f64 - 1.0) / k as f64, 0.0);
                }
                let f = HoloFunction::ridge(Point::basis(self.dim, 0), coeffs)?;
                out.push((format!("powbeta({})", self.beta), f));
            }
        }
        Ok(out)
    }
}

/// Whether a generated function is constant (degree zero after trimming).
pub(crate) fn is_constant(f: &HoloFunction) -> bool {
    f.max_degree() == 0
}

/// The curve `z -> z u` along a unit direction; its range is the closed
/// radius-`||u||` disk of the slice.
pub fn axis_curve(u: &Point) -> Vec<DiskSeries> {
    u.coords()
        .iter()
        .map(|&c| DiskSeries::monomial(1, c))
        .collect()
}

/// `count` random cubic polynomial curves `D -> B` with boundary supremum
/// at most `range`, deterministic in `seed`.
pub fn seeded_curves(dim: usize, count: usize, seed: u64, range: f64) -> Result<Vec<Vec<DiskSeries>>> {
    if dim == 0 || count == 0 || !(range > 0.0 && range < 1.0) {
        return Err(Error::InvalidFamily {
            reason: format!(
                "curves(dim {}, count {}, range {}): need dim/count positive, 0 < range < 1",
                dim, count, range
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(STREAM_CURVES);
    let mut curves = Vec::with_capacity(count);
    for _ in 0..count {
        let raw: Vec<Vec<Complex64>> = (0..dim)
            .map(|_| {
                (0..4)
                    .map(|power| {
                        let cap = if power == 0 { 0.2 } else { 0.5 };
                        let radius = cap * rng.gen::<f64>().sqrt();
                        let angle = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
                        Complex64::from_polar(radius, angle)
                    })
                    .collect()
            })
            .collect();
        // boundary supremum of the vector polynomial is attained on |z| = 1
        let mut sup: f64 = 0.0;
        for s in 0..720 {
            let theta = 2.0 * std::f64::consts::PI * (s as f64) / 720.0;
            let z = Complex64::from_polar(1.0, theta);
            let norm_sq: f64 = raw
                .iter()
                .map(|coeffs| {
                    coeffs
                        .iter()
                        .rev()
                        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
                        .norm_sqr()
                })
                .sum();
            sup = sup.max(norm_sq.sqrt());
        }
        let scale = if sup > 0.0 { 0.999 * range / sup } else { 1.0 };
        curves.push(
            raw.into_iter()
                .map(|coeffs| {
                    DiskSeries::new(
                        coeffs
                            .into_iter()
                            .map(|c| c * Complex64::new(scale, 0.0))
                            .collect(),
                    )
                })
                .collect(),
        );
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval_bits(f: &HoloFunction, pts: &[Point]) -> Vec<(u64, u64)> {
        pts.iter()
            .map(|p| {
                let v = f.evaluate(p).unwrap();
                (v.re.to_bits(), v.im.to_bits())
            })
            .collect()
    }

    fn probe_points(dim: usize) -> Vec<Point> {
        vec![
            Point::zero(dim),
            Point::basis(dim, 0).scale(Complex64::new(0.3, 0.1)),
            Point::basis(dim, dim - 1).scale(Complex64::new(-0.5, 0.2)),
        ]
    }

    #[test]
    fn coordinate_family_lists_all_coordinates() {
        let fam = FamilySpec::coordinate(2).generate().unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam[0].0, "x1");
        assert_eq!(fam[1].0, "x2");
        let x = Point::new(vec![Complex64::new(0.2, 0.0), Complex64::new(0.0, 0.4)]);
        assert_eq!(fam[0].1.evaluate(&x).unwrap(), Complex64::new(0.2, 0.0));
        assert_eq!(fam[1].1.evaluate(&x).unwrap(), Complex64::new(0.0, 0.4));
    }

    #[test]
    fn ridge_log_coefficients_are_reciprocal_integers() {
        let fam = FamilySpec::ridge_log(3, 64).generate().unwrap();
        assert_eq!(fam.len(), 1);
        let f = &fam[0].1;
        // F(z) = sum z^k / k: at z = 0.5 compare against the closed form of
        // the truncated series computed directly
        let z = 0.5f64;
        let expected: f64 = (1..=64).map(|k| z.powi(k as i32) / k as f64).sum();
        let x = Point::basis(3, 0).scale(Complex64::new(z, 0.0));
        let got = f.evaluate(&x).unwrap();
        assert!((got.re - expected).abs() < 1e-14 && got.im.abs() < 1e-16);
    }

    #[test]
    fn power_beta_matches_binomial_series() {
        // beta = 1: (1-z)^{-1} has all coefficients 1
        let fam = FamilySpec::ridge_power_beta(2, 1.0, 8).generate().unwrap();
        let z = 0.25f64;
        let expected: f64 = (0..=8).map(|k| z.powi(k)).sum();
        let x = Point::basis(2, 0).scale(Complex64::new(z, 0.0));
        let got = fam[0].1.evaluate(&x).unwrap();
        assert!((got.re - expected).abs() < 1e-15);

        // beta = -1: the series terminates at 1 - z
        let fam = FamilySpec::ridge_power_beta(2, -1.0, 8).generate().unwrap();
        let got = fam[0].1.evaluate(&x).unwrap();
        assert!((got.re - (1.0 - z)).abs() < 1e-15);

        // beta = -0.5: truncation of (1-z)^{1/2}; check against powf
        let fam = FamilySpec::ridge_power_beta(2, -0.5, 64).generate().unwrap();
        let got = fam[0].1.evaluate(&x).unwrap();
        assert!((got.re - (1.0 - z).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn random_poly_is_deterministic_and_sparse() {
        let spec = FamilySpec::random_poly(3, 6, 20, 42);
        let a = spec.generate().unwrap();
        let b = spec.generate().unwrap();
        assert_eq!(a.len(), 20);
        let pts = probe_points(3);
        for ((ida, fa), (idb, fb)) in a.iter().zip(&b) {
            assert_eq!(ida, idb);
            assert_eq!(eval_bits(fa, &pts), eval_bits(fb, &pts));
            assert!(fa.max_degree() >= 1 && fa.max_degree() <= 6);
            assert!(fa.terms().len() <= RANDOM_POLY_TERMS);
        }
        // a different seed moves at least the first function
        let c = FamilySpec::random_poly(3, 6, 20, 43).generate().unwrap();
        assert_ne!(eval_bits(&a[0].1, &pts), eval_bits(&c[0].1, &pts));
    }

    #[test]
    fn ridge_power_family_is_the_power_ladder() {
        let fam = FamilySpec::ridge_power(2, 3).generate().unwrap();
        assert_eq!(fam.len(), 3);
        let x = Point::basis(2, 0).scale(Complex64::new(0.5, 0.0));
        for (k, (id, f)) in fam.iter().enumerate() {
            assert_eq!(id, &format!("zpow{}", k + 1));
            let got = f.evaluate(&x).unwrap();
            assert!((got.re - 0.5f64.powi(k as i32 + 1)).abs() < 1e-15);
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(matches!(
            FamilySpec::random_poly(0, 6, 20, 1).generate(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::random_poly(3, 0, 20, 1).generate(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::random_poly(3, 17, 20, 1).generate(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::ridge_log(3, 0).generate(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::ridge_log(3, 65).generate(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::ridge_power_beta(3, f64::NAN, 8).generate(),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn constant_detection_flags_degree_zero_only() {
        assert!(is_constant(&HoloFunction::constant(
            2,
            Complex64::new(3.0, 1.0)
        )));
        assert!(is_constant(&HoloFunction::zero(2)));
        assert!(!is_constant(&HoloFunction::coordinate(2, 0)));
        // beta = 0 collapses the binomial family to the constant 1
        let fam = FamilySpec::ridge_power_beta(2, 0.0, 8).generate().unwrap();
        assert!(is_constant(&fam[0].1));
    }

    #[test]
    fn seeded_curves_stay_inside_the_stated_range() {
        let curves = seeded_curves(3, 10, 42, 0.99).unwrap();
        assert_eq!(curves.len(), 10);
        for curve in &curves {
            assert_eq!(curve.len(), 3);
            for s in 0..1024 {
                let theta = 2.0 * std::f64::consts::PI * (s as f64) / 1024.0;
                let z = Complex64::from_polar(1.0, theta);
                let norm_sq: f64 = curve.iter().map(|g| g.evaluate(z).norm_sqr()).sum();
                assert!(norm_sq.sqrt() <= 0.99);
            }
        }
        // determinism
        let again = seeded_curves(3, 10, 42, 0.99).unwrap();
        for (a, b) in curves.iter().zip(&again) {
            for (ga, gb) in a.iter().zip(b) {
                assert_eq!(ga.coeffs(), gb.coeffs());
            }
        }
    }

    #[test]
    fn axis_curve_traces_the_slice() {
        let u = Point::new(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ]);
        let curve = axis_curve(&u);
        let z = Complex64::new(0.3, 0.2);
        for (g, &c) in curve.iter().zip(u.coords()) {
            assert_eq!(g.evaluate(z), z * c);
        }
    }
}
