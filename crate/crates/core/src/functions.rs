//! Holomorphic test functions on the ball and their exact derivative
//! calculus.
//!
//! A [`HoloFunction`] is a finite sum of sparse monomials and "ridge" terms
//! `sum_k c_k <x,u>^k` along a unit direction `u`. The class is closed under
//! radial differentiation, homogeneous-part extraction, boundary slicing, and
//! composition with polynomial disk curves, so every quantity the norm
//! checks need is computed without discretization error.

use num_complex::Complex64;

use crate::geometry::Point;
use crate::series::DiskSeries;
use crate::{Error, Result};

/// Largest total degree accepted for a monomial term.
pub const MAX_MONOMIAL_DEGREE: u32 = 16;
/// Largest power index accepted in a ridge term's coefficient list.
pub const MAX_RIDGE_ORDER: usize = 64;
/// Hard cap on coefficients produced by disk-curve composition.
pub const COMPOSE_COEFF_CAP: usize = 4096;

const CURVE_BOUNDARY_SAMPLES: usize = 4096;
const CURVE_BOUNDARY_TOL: f64 = 1e-9;

/// `coeff * x_1^{e_1} ... x_n^{e_n}` with total degree at most
/// [`MAX_MONOMIAL_DEGREE`].
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialTerm {
    exponents: Vec<u32>,
    coeff: Complex64,
}

impl MonomialTerm {
    pub fn new(exponents: Vec<u32>, coeff: Complex64) -> Result<Self> {
        assert!(!exponents.is_empty(), "monomials need dimension >= 1");
        let degree: u32 = exponents.iter().sum();
        if degree > MAX_MONOMIAL_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_MONOMIAL_DEGREE,
            });
        }
        Ok(MonomialTerm { exponents, coeff })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coeff(&self) -> Complex64 {
        self.coeff
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn dim(&self) -> usize {
        self.exponents.len()
    }

    fn evaluate(&self, x: &[Complex64]) -> Complex64 {
        let mut v = self.coeff;
        for (xi, &e) in x.iter().zip(&self.exponents) {
            if e > 0 {
                v *= xi.powu(e);
            }
        }
        v
    }

    fn gradient_into(&self, x: &[Complex64], out: &mut [Complex64]) {
        let n = self.dim();
        let pows: Vec<Complex64> = x
            .iter()
            .zip(&self.exponents)
            .map(|(xi, &e)| xi.powu(e))
            .collect();
        // prefix/suffix products let each partial reuse the other factors
        let mut prefix = vec![Complex64::new(1.0, 0.0); n];
        for j in 1..n {
            prefix[j] = prefix[j - 1] * pows[j - 1];
        }
        let mut suffix = vec![Complex64::new(1.0, 0.0); n];
        for j in (0..n.saturating_sub(1)).rev() {
            suffix[j] = suffix[j + 1] * pows[j + 1];
        }
        for j in 0..n {
            let e = self.exponents[j];
            if e == 0 {
                continue;
            }
            out[j] += self.coeff * (e as f64) * x[j].powu(e - 1) * prefix[j] * suffix[j];
        }
    }
}

/// `sum_k coeffs[k] * <x, direction>^k` with a unit direction.
#[derive(Debug, Clone, PartialEq)]
pub struct RidgeTerm {
    direction: Point,
    coeffs: Vec<Complex64>,
}

impl RidgeTerm {
    pub fn new(direction: Point, coeffs: Vec<Complex64>) -> Result<Self> {
        if !direction.is_unit() {
            return Err(Error::NotUnit {
                norm: direction.norm(),
            });
        }
        if coeffs.len() > MAX_RIDGE_ORDER + 1 {
            return Err(Error::TruncationTooLarge {
                order: coeffs.len() - 1,
                max: MAX_RIDGE_ORDER,
            });
        }
        Ok(RidgeTerm { direction, coeffs })
    }

    pub fn direction(&self) -> &Point {
        &self.direction
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| c.norm() != 0.0)
            .unwrap_or(0)
    }

    fn dim(&self) -> usize {
        self.direction.dim()
    }

    fn pairing(&self, x: &[Complex64]) -> Complex64 {
        x.iter()
            .zip(self.direction.coords())
            .map(|(xi, u)| xi * u.conj())
            .sum()
    }

    fn profile(&self) -> DiskSeries {
        DiskSeries::new(self.coeffs.clone())
    }

    fn evaluate(&self, x: &[Complex64]) -> Complex64 {
        self.profile().evaluate(self.pairing(x))
    }

    fn gradient_into(&self, x: &[Complex64], out: &mut [Complex64]) {
        let slope = self.profile().derivative().evaluate(self.pairing(x));
        for (o, u) in out.iter_mut().zip(self.direction.coords()) {
            *o += slope * u.conj();
        }
    }

    /// `R(sum c_k w^k) = sum k c_k w^k = w * F'(w)` by Euler's identity.
    fn radial(&self, x: &[Complex64]) -> Complex64 {
        let w = self.pairing(x);
        w * self.profile().derivative().evaluate(w)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    Monomial(MonomialTerm),
    Ridge(RidgeTerm),
}

impl Term {
    fn dim(&self) -> usize {
        match self {
            Term::Monomial(t) => t.dim(),
            Term::Ridge(t) => t.dim(),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Term::Monomial(t) => t.degree() as usize,
            Term::Ridge(t) => t.order(),
        }
    }
}

/// A holomorphic function `C^n -> C` given as a finite sum of monomial and
/// ridge terms. Immutable; all operations are pure.
#[derive(Debug, Clone, PartialEq)]
pub struct HoloFunction {
    dim: usize,
    terms: Vec<Term>,
}

impl HoloFunction {
    pub fn new(dim: usize, terms: Vec<Term>) -> Result<Self> {
        assert!(dim >= 1, "functions need dimension >= 1");
        for term in &terms {
            if term.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: term.dim(),
                });
            }
        }
        Ok(HoloFunction { dim, terms })
    }

    pub fn zero(dim: usize) -> Self {
        HoloFunction::new(dim, Vec::new()).expect("zero function is always valid")
    }

    pub fn constant(dim: usize, value: Complex64) -> Self {
        let term = MonomialTerm::new(vec![0; dim], value).expect("degree 0");
        HoloFunction::new(dim, vec![Term::Monomial(term)]).expect("constant term")
    }

    /// The coordinate function `x_{index+1}`.
    pub fn coordinate(dim: usize, index: usize) -> Self {
        assert!(index < dim, "coordinate index {index} out of range for dim {dim}");
        let mut exps = vec![0; dim];
        exps[index] = 1;
        let term = MonomialTerm::new(exps, Complex64::new(1.0, 0.0)).expect("degree 1");
        HoloFunction::new(dim, vec![Term::Monomial(term)]).expect("coordinate term")
    }

    pub fn monomial(dim: usize, exponents: Vec<u32>, coeff: Complex64) -> Result<Self> {
        if exponents.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: exponents.len(),
            });
        }
        let term = MonomialTerm::new(exponents, coeff)?;
        HoloFunction::new(dim, vec![Term::Monomial(term)])
    }

    /// The inner-product functional `x -> <x, a>`.
    pub fn linear(a: &Point) -> Self {
        let terms = a
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() != 0.0)
            .map(|(j, c)| {
                let mut exps = vec![0; a.dim()];
                exps[j] = 1;
                Term::Monomial(
                    MonomialTerm::new(exps, c.conj()).expect("degree 1"),
                )
            })
            .collect();
        HoloFunction::new(a.dim(), terms).expect("linear terms")
    }

    pub fn ridge(direction: Point, coeffs: Vec<Complex64>) -> Result<Self> {
        let dim = direction.dim();
        let term = RidgeTerm::new(direction, coeffs)?;
        HoloFunction::new(dim, vec![Term::Ridge(term)])
    }

    /// `<x, direction>^power` as a single ridge term.
    pub fn ridge_power(direction: Point, power: usize) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); power + 1];
        coeffs[power] = Complex64::new(1.0, 0.0);
        HoloFunction::ridge(direction, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Degree of the highest-order term actually present.
    pub fn max_degree(&self) -> usize {
        self.terms.iter().map(Term::degree).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term-concatenation sum; both summands keep their exact representation.
    pub fn add(&self, other: &HoloFunction) -> Result<HoloFunction> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        HoloFunction::new(self.dim, terms)
    }

    pub fn scale(&self, factor: Complex64) -> HoloFunction {
        let terms = self
            .terms
            .iter()
            .map(|t| match t {
                Term::Monomial(m) => Term::Monomial(
                    MonomialTerm::new(m.exponents.clone(), m.coeff * factor)
                        .expect("degree unchanged"),
                ),
                Term::Ridge(r) => Term::Ridge(
                    RidgeTerm::new(
                        r.direction.clone(),
                        r.coeffs.iter().map(|&c| c * factor).collect(),
                    )
                    .expect("order unchanged"),
                ),
            })
            .collect();
        HoloFunction::new(self.dim, terms).expect("dims unchanged")
    }

    fn check_point(&self, x: &Point) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.dim(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &Point) -> Result<Complex64> {
        self.check_point(x)?;
        let coords = x.coords();
        Ok(self
            .terms
            .iter()
            .map(|t| match t {
                Term::Monomial(m) => m.evaluate(coords),
                Term::Ridge(r) => r.evaluate(coords),
            })
            .sum())
    }

    /// The coefficient vector `g` of the differential: `Df(x)(w) = sum_j g_j w_j`.
    ///
    /// The operator norm of `Df(x)` equals `norm(g)`, attained in the
    /// direction `conj(g)/norm(g)`.
    pub fn gradient(&self, x: &Point) -> Result<Point> {
        self.check_point(x)?;
        let coords = x.coords();
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for term in &self.terms {
            match term {
                Term::Monomial(m) => m.gradient_into(coords, &mut out),
                Term::Ridge(r) => r.gradient_into(coords, &mut out),
            }
        }
        Ok(Point::new(out))
    }

    /// `Df(x)(w)` — the bilinear pairing of the gradient with `w`.
    pub fn directional_derivative(&self, x: &Point, w: &Point) -> Result<Complex64> {
        self.check_point(w)?;
        let g = self.gradient(x)?;
        Ok(g.coords()
            .iter()
            .zip(w.coords())
            .map(|(gj, wj)| gj * wj)
            .sum())
    }

    /// The radial derivative `Rf(x) = Df(x)(x)`, computed term-wise from
    /// homogeneity (degree-`k` pieces pick up a factor `k`).
    pub fn radial_derivative(&self, x: &Point) -> Result<Complex64> {
        self.check_point(x)?;
        let coords = x.coords();
        Ok(self
            .terms
            .iter()
            .map(|t| match t {
                Term::Monomial(m) => m.evaluate(coords) * (m.degree() as f64),
                Term::Ridge(r) => r.radial(coords),
            })
            .sum())
    }

    /// `Rf` as a function in the same representation: monomial coefficients
    /// scale by total degree, ridge coefficients `c_k` by `k`.
    pub fn radial_derivative_function(&self) -> HoloFunction {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| match t {
                Term::Monomial(m) => {
                    if m.degree() == 0 {
                        None
                    } else {
                        Some(Term::Monomial(
                            MonomialTerm::new(
                                m.exponents.clone(),
                                m.coeff * m.degree() as f64,
                            )
                            .expect("degree unchanged"),
                        ))
                    }
                }
                Term::Ridge(r) => {
                    let coeffs: Vec<Complex64> = r
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| c * k as f64)
                        .collect();
                    Some(Term::Ridge(
                        RidgeTerm::new(r.direction.clone(), coeffs)
                            .expect("order unchanged"),
                    ))
                }
            })
            .collect();
        HoloFunction::new(self.dim, terms).expect("dims unchanged")
    }

    /// `D(Rf)(x)(y)`, exact for the representation.
    pub fn mixed_radial_derivative(&self, x: &Point, y: &Point) -> Result<Complex64> {
        self.radial_derivative_function().directional_derivative(x, y)
    }

    /// The degree-`k` homogeneous part `P_k`; summing all parts recovers `f`.
    pub fn homogeneous_part(&self, k: usize) -> HoloFunction {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| match t {
                Term::Monomial(m) => {
                    if m.degree() as usize == k {
                        Some(Term::Monomial(m.clone()))
                    } else {
                        None
                    }
                }
                Term::Ridge(r) => {
                    let c = r.coeffs.get(k).copied()?;
                    if c.norm() == 0.0 {
                        return None;
                    }
                    let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
                    coeffs[k] = c;
                    Some(Term::Ridge(
                        RidgeTerm::new(r.direction.clone(), coeffs)
                            .expect("order unchanged"),
                    ))
                }
            })
            .collect();
        HoloFunction::new(self.dim, terms).expect("dims unchanged")
    }

    /// The boundary slice `z -> f(z y)` for a unit direction `y`, with the
    /// degree-`k` coefficient `P_k(y)`.
    pub fn slice_series(&self, y: &Point) -> Result<DiskSeries> {
        self.check_point(y)?;
        if !y.is_unit() {
            return Err(Error::NotUnit { norm: y.norm() });
        }
        let coords = y.coords();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.max_degree() + 1];
        for term in &self.terms {
            match term {
                Term::Monomial(m) => {
                    coeffs[m.degree() as usize] += m.evaluate(coords);
                }
                Term::Ridge(r) => {
                    let w = r.pairing(coords);
                    for (k, &c) in r.coeffs.iter().enumerate() {
                        if c.norm() != 0.0 {
                            coeffs[k] += c * w.powu(k as u32);
                        }
                    }
                }
            }
        }
        Ok(DiskSeries::new(coeffs))
    }

    /// Compose with a polynomial disk curve `g = (g_1, ..., g_n)`, checking
    /// on a dense boundary grid that the curve stays in the closed ball.
    pub fn compose_curve(&self, curve: &[DiskSeries]) -> Result<DiskSeries> {
        if curve.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: curve.len(),
            });
        }
        let mut worst: f64 = 0.0;
        for s in 0..CURVE_BOUNDARY_SAMPLES {
            let theta = 2.0 * std::f64::consts::PI * (s as f64)
                / (CURVE_BOUNDARY_SAMPLES as f64);
            let z = Complex64::new(theta.cos(), theta.sin());
            let norm_sq: f64 = curve.iter().map(|g| g.evaluate(z).norm_sqr()).sum();
            worst = worst.max(norm_sq.sqrt());
        }
        if worst > 1.0 + CURVE_BOUNDARY_TOL {
            return Err(Error::CurveEscapesBall { norm: worst });
        }

        let cap = COMPOSE_COEFF_CAP;
        let mut total = DiskSeries::zero();
        for term in &self.terms {
            let piece = match term {
                Term::Monomial(m) => {
                    let mut acc = DiskSeries::constant(m.coeff);
                    for (g, &e) in curve.iter().zip(&m.exponents) {
                        if e > 0 {
                            acc = acc.mul(&g.pow(e, cap)?, cap)?;
                        }
                    }
                    acc
                }
                Term::Ridge(r) => {
                    let mut pair = DiskSeries::zero();
                    for (g, u) in curve.iter().zip(r.direction.coords()) {
                        pair = pair.add(&g.scale(u.conj()));
                    }
                    // Horner over series: c_N, then acc*pair + c_k
                    let mut acc = DiskSeries::zero();
                    for &c in r.coeffs.iter().rev() {
                        acc = acc.mul(&pair, cap)?.add(&DiskSeries::constant(c));
                    }
                    acc
                }
            };
            total = total.add(&piece);
        }
        Ok(total)
    }
}
