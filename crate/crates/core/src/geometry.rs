//! Complex Hilbert-space primitives at a fixed truncation dimension:
//! Hermitian inner products, orthogonal decomposition against a radial
//! direction, and the involutive Moebius automorphisms of the unit ball.

use num_complex::Complex64;

use crate::{Error, Result};

pub type Complex = Complex64;

/// Tolerance for "is a unit vector" checks.
pub const UNIT_TOL: f64 = 1e-12;

/// A point of the ambient space `C^n`.
///
/// Interior points (`norm < 1`) and boundary directions (`norm = 1`) share
/// this type; operations state which they need.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<Complex>,
}

impl Point {
    /// A point from explicit complex coordinates. Dimension must be >= 1.
    pub fn new(coords: Vec<Complex>) -> Self {
        assert!(!coords.is_empty(), "points need dimension >= 1");
        Point { coords }
    }

    /// A point from real coordinates.
    pub fn from_reals(coords: &[f64]) -> Self {
        Point::new(coords.iter().map(|&re| Complex::new(re, 0.0)).collect())
    }

    /// The origin of `C^n`.
    pub fn zero(dim: usize) -> Self {
        Point::new(vec![Complex::new(0.0, 0.0); dim])
    }

    /// The standard basis vector `e_{index+1}` of `C^n`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut coords = vec![Complex::new(0.0, 0.0); dim];
        coords[index] = Complex::new(1.0, 0.0);
        Point::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Complex] {
        &self.coords
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, factor: Complex) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn conj(&self) -> Point {
        Point::new(self.coords.iter().map(|c| c.conj()).collect())
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Rescale to exact unit norm. Errors on the zero vector.
    pub fn normalized(&self) -> Result<Point> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(Complex::new(1.0 / n, 0.0)))
    }

    pub fn is_interior(&self) -> bool {
        self.norm() < 1.0
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_TOL
    }

    fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

/// Hermitian inner product `<x, y> = sum_j x_j * conj(y_j)`.
///
/// Linear in the first argument, conjugate-linear in the second;
/// `norm(x) = sqrt(inner(x, x))` is the norm used throughout.
pub fn inner(x: &Point, y: &Point) -> Result<Complex> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| a * b.conj())
        .sum())
}

/// Projection-theorem split of `c` against the direction of `x`:
/// `c = parallel + orthogonal` with `parallel` a complex multiple of `x`
/// and `<orthogonal, x> = 0`.
pub fn decompose(c: &Point, x: &Point) -> Result<(Point, Point)> {
    let x_norm_sq = x.norm_sq();
    if x_norm_sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    let coeff = inner(c, x)? / x_norm_sq;
    let parallel = x.scale(coeff);
    let orthogonal = c.sub(&parallel)?;
    Ok((parallel, orthogonal))
}

/// The quadratic form `(1 - |x|^2) |w|^2 + |<w, x>|^2` appearing in the
/// denominator of the invariant-gradient supremum. Strictly positive for
/// interior `x` and `w != 0`.
pub fn quadratic_denominator(x: &Point, w: &Point) -> Result<f64> {
    let r_sq = x.norm_sq();
    if r_sq >= 1.0 {
        return Err(Error::OutsideBall { norm: r_sq.sqrt() });
    }
    let pairing = inner(w, x)?;
    Ok((1.0 - r_sq) * w.norm_sq() + pairing.norm_sqr())
}

/// The involutive automorphism `phi_a` of the unit ball with `phi_a(0) = a`.
///
/// `phi_a(x) = (a - P_a x - s_a Q_a x) / (1 - <x, a>)` where `P_a` projects
/// onto `span(a)`, `Q_a = I - P_a`, and `s_a = sqrt(1 - |a|^2)`. For `a = 0`
/// the map is plain negation.
#[derive(Debug, Clone)]
pub struct MobiusMap {
    base: Point,
    s: f64,
}

impl MobiusMap {
    pub fn new(base: Point) -> Result<Self> {
        let norm = base.norm();
        if norm >= 1.0 {
            return Err(Error::OutsideBall { norm });
        }
        let s = (1.0 - base.norm_sq()).sqrt();
        Ok(MobiusMap { base, s })
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    /// `sqrt(1 - |base|^2)`, cached at construction.
    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Apply the automorphism to an interior point.
    pub fn apply(&self, x: &Point) -> Result<Point> {
        let norm = x.norm();
        if norm >= 1.0 {
            return Err(Error::OutsideBall { norm });
        }
        let a = &self.base;
        if a.norm_sq() == 0.0 {
            return Ok(x.scale(Complex::new(-1.0, 0.0)));
        }
        let denom = Complex::new(1.0, 0.0) - inner(x, a)?;
        // |<x,a>| <= |x||a| < 1 for interior points, so the denominator
        // cannot vanish; the guard catches misuse with boundary data.
        if denom.norm() < 1e-14 {
            return Err(Error::DegenerateDenominator {
                value: denom.norm(),
            });
        }
        let (parallel, orthogonal) = decompose(x, a)?;
        let numerator = a
            .sub(&parallel)?
            .sub(&orthogonal.scale(Complex::new(self.s, 0.0)))?;
        Ok(numerator.scale(denom.inv()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::test_support::{random_ball_point, seeded_rng};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn inner_unit_vectors() {
        let e1 = Point::basis(2, 0);
        let e2 = Point::basis(2, 1);
        assert_eq!(inner(&e1, &e1).unwrap(), c(1.0, 0.0));
        assert_eq!(inner(&e1, &e2).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn inner_expansion() {
        let x = Point::new(vec![c(0.3, 0.0), c(0.0, 0.4)]);
        let v = inner(&x, &x).unwrap();
        assert_abs_diff_eq!(v.re, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let x = Point::basis(2, 0);
        let y = Point::basis(3, 0);
        assert!(matches!(
            inner(&x, &y),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn decompose_axis_split() {
        let e1 = Point::basis(2, 0);
        let (par, orth) = decompose(&Point::from_reals(&[1.0, 1.0]), &e1).unwrap();
        assert_eq!(par, Point::from_reals(&[1.0, 0.0]));
        assert_eq!(orth, Point::from_reals(&[0.0, 1.0]));

        let (par, orth) = decompose(&Point::from_reals(&[0.0, 5.0]), &e1).unwrap();
        assert_eq!(par.norm(), 0.0);
        assert_eq!(orth, Point::from_reals(&[0.0, 5.0]));
    }

    #[test]
    fn decompose_slanted_direction() {
        let cvec = Point::from_reals(&[2.0, 0.0]);
        let x = Point::from_reals(&[0.6, 0.8]);
        let (par, orth) = decompose(&cvec, &x).unwrap();
        assert_abs_diff_eq!(par.coords()[0].re, 0.72, epsilon = 1e-12);
        assert_abs_diff_eq!(par.coords()[1].re, 0.96, epsilon = 1e-12);
        assert_abs_diff_eq!(orth.coords()[0].re, 1.28, epsilon = 1e-12);
        assert_abs_diff_eq!(orth.coords()[1].re, -0.96, epsilon = 1e-12);
        // re-add and orthogonality oracle
        let sum = par.add(&orth).unwrap();
        assert_abs_diff_eq!(sum.sub(&cvec).unwrap().norm(), 0.0, epsilon = 1e-12);
        assert!(inner(&orth, &x).unwrap().norm() <= 1e-12 * cvec.norm());
    }

    #[test]
    fn decompose_zero_direction() {
        let cvec = Point::from_reals(&[1.0, 0.0]);
        assert!(matches!(
            decompose(&cvec, &Point::zero(2)),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn quadratic_denominator_values() {
        let w = Point::new(vec![c(0.7, 0.0), c(0.0, -0.3)]);
        let q = quadratic_denominator(&Point::zero(2), &w).unwrap();
        assert_abs_diff_eq!(q, w.norm_sq(), epsilon = 1e-15);

        let x = Point::from_reals(&[0.5, 0.0]);
        let q = quadratic_denominator(&x, &Point::basis(2, 1)).unwrap();
        assert_abs_diff_eq!(q, 0.75, epsilon = 1e-15);

        let x = Point::from_reals(&[0.6, 0.0]);
        let q = quadratic_denominator(&x, &Point::from_reals(&[0.5, 0.5])).unwrap();
        assert_abs_diff_eq!(q, 0.41, epsilon = 1e-15);
    }

    #[test]
    fn mobius_sends_zero_to_base() {
        let a = Point::new(vec![c(0.3, 0.1), c(-0.2, 0.4)]);
        let phi = MobiusMap::new(a.clone()).unwrap();
        let image = phi.apply(&Point::zero(2)).unwrap();
        assert_abs_diff_eq!(image.sub(&a).unwrap().norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn mobius_at_origin_is_negation() {
        let phi = MobiusMap::new(Point::zero(2)).unwrap();
        let x = Point::new(vec![c(0.3, 0.2), c(0.1, -0.4)]);
        let image = phi.apply(&x).unwrap();
        assert_abs_diff_eq!(
            image.add(&x).unwrap().norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn mobius_hand_worked_value() {
        let phi = MobiusMap::new(Point::from_reals(&[0.5, 0.0])).unwrap();
        let image = phi.apply(&Point::from_reals(&[0.0, 0.5])).unwrap();
        assert_abs_diff_eq!(image.coords()[0].re, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(image.coords()[1].re, -0.75f64.sqrt() * 0.5, epsilon = 1e-12);
        // metric identity oracle: 1 - |phi(x)|^2 = (1-|a|^2)(1-|x|^2)/|1-<x,a>|^2
        assert_abs_diff_eq!(1.0 - image.norm_sq(), 0.5625, epsilon = 1e-12);
    }

    #[test]
    fn mobius_rejects_exterior_points() {
        let phi = MobiusMap::new(Point::from_reals(&[0.5, 0.0])).unwrap();
        assert!(phi.apply(&Point::from_reals(&[1.0, 0.5])).is_err());
        assert!(MobiusMap::new(Point::from_reals(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn mobius_involution_and_metric_identity() {
        for &dim in &[1usize, 2, 8] {
            let mut rng = seeded_rng(0x5eed ^ dim as u64);
            for _ in 0..500 {
                let a = random_ball_point(&mut rng, dim, 0.95);
                let x = random_ball_point(&mut rng, dim, 0.95);
                let phi = MobiusMap::new(a.clone()).unwrap();
                let y = phi.apply(&x).unwrap();
                assert!(y.norm() < 1.0);

                let back = phi.apply(&y).unwrap();
                assert!(back.sub(&x).unwrap().norm() <= 1e-10);

                let pairing = inner(&x, &a).unwrap();
                let lhs = (1.0 - y.norm_sq()) * (Complex::new(1.0, 0.0) - pairing).norm_sqr();
                let rhs = (1.0 - a.norm_sq()) * (1.0 - x.norm_sq());
                assert!((lhs - rhs).abs() <= 1e-10);

                // contraction bound used by the weighted-quotient theory
                let bound = a.sub(&x).unwrap().norm()
                    / (Complex::new(1.0, 0.0) - pairing).norm();
                assert!(y.norm() <= bound + 1e-12);
            }
        }
    }

    #[test]
    fn mobius_dimension_one_matches_scalar_formula() {
        let mut rng = seeded_rng(0xd1);
        for _ in 0..200 {
            let a = random_ball_point(&mut rng, 1, 0.95);
            let x = random_ball_point(&mut rng, 1, 0.95);
            let phi = MobiusMap::new(a.clone()).unwrap();
            let got = phi.apply(&x).unwrap().coords()[0];
            let (a0, x0) = (a.coords()[0], x.coords()[0]);
            let want = (a0 - x0) / (Complex::new(1.0, 0.0) - x0 * a0.conj());
            assert!((got - want).norm() <= 1e-12);
        }
    }

    #[test]
    fn decomposition_identity_for_quadratic_form() {
        let mut rng = seeded_rng(0xdec0);
        for _ in 0..500 {
            let x = random_ball_point(&mut rng, 3, 0.9);
            if x.norm() < 1e-3 {
                continue;
            }
            let w = random_ball_point(&mut rng, 3, 1.5);
            let (par, orth) = decompose(&w, &x).unwrap();
            // writing w = z*x + y with y orthogonal to x collapses the form
            // to |z|^2 |x|^2 + (1 - |x|^2) |y|^2, and |par|^2 = |z|^2 |x|^2
            let lhs = quadratic_denominator(&x, &w).unwrap();
            let rhs = par.norm_sq() + (1.0 - x.norm_sq()) * orth.norm_sq();
            assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs));
        }
    }
}
