//! Truncated one-variable power series on the unit disk.
//!
//! These carry boundary slices `f_y(z) = f(z y)`, disk-curve compositions
//! `f o g`, and general one-variable test functions. Everything is exact for
//! the stored truncation: evaluation, differentiation, and arithmetic
//! introduce no truncation error of their own.

use num_complex::Complex64;

use crate::{Error, Result};

/// A polynomial `a_0 + a_1 z + ... + a_M z^M` stored densely.
///
/// The empty coefficient list is the zero series. Immutable; arithmetic
/// returns new values.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSeries {
    coeffs: Vec<Complex64>,
}

impl DiskSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut s = DiskSeries { coeffs };
        s.trim();
        s
    }

    pub fn zero() -> Self {
        DiskSeries { coeffs: Vec::new() }
    }

    pub fn constant(value: Complex64) -> Self {
        DiskSeries::new(vec![value])
    }

    /// The monomial `coeff * z^power`.
    pub fn monomial(power: usize, coeff: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); power + 1];
        coeffs[power] = coeff;
        DiskSeries::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest retained power, or `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> DiskSeries {
        if self.coeffs.len() <= 1 {
            return DiskSeries::zero();
        }
        DiskSeries::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }

    pub fn scale(&self, factor: Complex64) -> DiskSeries {
        DiskSeries::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    pub fn add(&self, other: &DiskSeries) -> DiskSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        DiskSeries::new(coeffs)
    }

    /// Cauchy product, refusing results longer than `cap` coefficients.
    pub fn mul(&self, other: &DiskSeries, cap: usize) -> Result<DiskSeries> {
        if self.is_zero() || other.is_zero() {
            return Ok(DiskSeries::zero());
        }
        let needed = self.coeffs.len() + other.coeffs.len() - 1;
        if needed > cap {
            return Err(Error::SeriesTooLong { needed, cap });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); needed];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(DiskSeries::new(coeffs))
    }

    /// Integer power by repeated multiplication, with the same length cap.
    pub fn pow(&self, exponent: u32, cap: usize) -> Result<DiskSeries> {
        let one = Complex64::new(1.0, 0.0);
        let mut acc = DiskSeries::constant(one);
        for _ in 0..exponent {
            acc = acc.mul(self, cap)?;
        }
        Ok(acc)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.norm() == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluation_matches_direct_sum() {
        let s = DiskSeries::new(vec![c(1.0, 0.0), c(0.0, 2.0), c(-0.5, 0.0)]);
        let z = c(0.3, -0.4);
        let direct = c(1.0, 0.0) + c(0.0, 2.0) * z + c(-0.5, 0.0) * z * z;
        assert_abs_diff_eq!((s.evaluate(z) - direct).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn derivative_shifts_and_scales() {
        let s = DiskSeries::new(vec![c(7.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let d = s.derivative();
        assert_eq!(d, DiskSeries::monomial(2, c(3.0, 0.0)));
        assert_eq!(DiskSeries::constant(c(5.0, 0.0)).derivative(), DiskSeries::zero());
    }

    #[test]
    fn product_of_conjugate_factors() {
        let one_plus = DiskSeries::new(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        let one_minus = DiskSeries::new(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        let p = one_plus.mul(&one_minus, 16).unwrap();
        assert_eq!(p, DiskSeries::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let s = DiskSeries::new(vec![c(0.5, 0.0), c(0.5, 0.0)]);
        let cubed = s.pow(3, 64).unwrap();
        let by_hand = s.mul(&s, 64).unwrap().mul(&s, 64).unwrap();
        assert_eq!(cubed, by_hand);
        assert_eq!(s.pow(0, 64).unwrap(), DiskSeries::constant(c(1.0, 0.0)));
    }

    #[test]
    fn cap_is_enforced() {
        let s = DiskSeries::new(vec![c(1.0, 0.0); 10]);
        match s.mul(&s, 16) {
            Err(Error::SeriesTooLong { needed: 19, cap: 16 }) => {}
            other => panic!("expected length-cap error, got {other:?}"),
        }
    }

    #[test]
    fn zero_handling() {
        let z = DiskSeries::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.evaluate(c(0.7, 0.1)), c(0.0, 0.0));
        let s = DiskSeries::monomial(3, c(2.0, 0.0));
        assert_eq!(s.mul(&z, 4).unwrap(), DiskSeries::zero());
        assert_eq!(s.add(&z), s);
    }
}
