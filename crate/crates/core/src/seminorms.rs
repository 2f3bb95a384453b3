//! Pointwise differential quantities and supremum estimators for the
//! Bloch-type seminorms, growth norms, and difference quotients.
//!
//! Every estimator returns a certified lower bound: the exact maximum of the
//! pointwise quantity over the plan's deterministic sample set, followed by
//! golden-section radial refinement around the best sample. Re-running with
//! the same plan reproduces the value bit-identically.
//!
//! The invariant-gradient norm comes in three independent computations — a
//! closed form, a sampled supremum over test directions, and a
//! finite-difference pass through the ball automorphism — which cross-check
//! one another in the test suite.

use std::fmt;

use num_complex::Complex64;

use crate::functions::HoloFunction;
use crate::geometry::{decompose, quadratic_denominator, MobiusMap, Point};
use crate::sampling::{golden_section_max, radial_direction_sup, SamplingPlan};
use crate::series::DiskSeries;
use crate::{Error, Result};

/// Angular resolution of the disk scans behind the slice seminorm.
pub const DISK_ANGLES: usize = 64;

/// Boundary weight written as a function of the radius `r`.
///
/// The seminorm definitions use `(1 - r)^alpha`; the invariant-gradient
/// seminorm is displayed with `(1 - r^2)^alpha`. Both are implemented, and
/// since `1 - r <= 1 - r^2 <= 2 (1 - r)` the two estimates always agree up
/// to a factor `2^alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightConvention {
    OneMinusNorm,
    OneMinusNormSq,
}

impl WeightConvention {
    /// The weight base at radius `r`, computed as `(1-r)` times `(1+r)` in
    /// the squared convention so deep dyadic radii lose no precision.
    pub fn base(self, r: f64) -> f64 {
        let gap = 1.0 - r;
        match self {
            WeightConvention::OneMinusNorm => gap,
            WeightConvention::OneMinusNormSq => gap * (1.0 + r),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            WeightConvention::OneMinusNorm => "ONE_MINUS_NORM",
            WeightConvention::OneMinusNormSq => "ONE_MINUS_NORM_SQ",
        }
    }
}

impl fmt::Display for WeightConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The supremum quantities the estimators understand.
///
/// `S1`–`S4` are the four Bloch-type seminorms (gradient, radial, slice,
/// invariant gradient). `Growth` is the weighted sup norm, `Normal` the
/// Lehto-type quantity, `Qf` the unweighted invariant-gradient supremum.
/// `Lip`, `SWeighted`, and `DiskBloch` have dedicated entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeminormKind {
    S1,
    S2,
    S3,
    S4,
    Growth,
    Lip,
    SWeighted,
    Normal,
    Qf,
    DiskBloch,
}

impl SeminormKind {
    pub fn label(self) -> &'static str {
        match self {
            SeminormKind::S1 => "S1",
            SeminormKind::S2 => "S2",
            SeminormKind::S3 => "S3",
            SeminormKind::S4 => "S4",
            SeminormKind::Growth => "GROWTH",
            SeminormKind::Lip => "LIP",
            SeminormKind::SWeighted => "SWEIGHTED",
            SeminormKind::Normal => "NORMAL",
            SeminormKind::Qf => "QF",
            SeminormKind::DiskBloch => "DISK_BLOCH",
        }
    }

    /// The weight convention each quantity carries unless overridden.
    pub fn default_convention(self) -> WeightConvention {
        match self {
            SeminormKind::S1
            | SeminormKind::S2
            | SeminormKind::Growth
            | SeminormKind::Lip
            | SeminormKind::SWeighted => WeightConvention::OneMinusNorm,
            SeminormKind::S3
            | SeminormKind::S4
            | SeminormKind::Normal
            | SeminormKind::Qf
            | SeminormKind::DiskBloch => WeightConvention::OneMinusNormSq,
        }
    }

    /// Weight exponent applied to the base at a given `alpha`. The invariant
    /// gradient already carries one power of the weight, so `S4` uses
    /// `alpha - 1`; `Qf` is unweighted.
    fn exponent(self, alpha: f64) -> f64 {
        match self {
            SeminormKind::S4 => alpha - 1.0,
            SeminormKind::Qf => 0.0,
            _ => alpha,
        }
    }
}

impl fmt::Display for SeminormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// All first-order data of `f` at one interior point.
#[derive(Debug, Clone)]
pub struct PointDiff {
    pub value: Complex64,
    pub grad: Point,
    pub grad_norm: f64,
    pub radial: Complex64,
    pub invgrad_norm: f64,
}

/// Argmax location of a supremum estimate.
#[derive(Debug, Clone)]
pub enum Witness {
    Point(Point),
    Pair(Point, Point),
    Slice { direction: Point, z: Complex64 },
}

impl Witness {
    /// Radius reported in tabular output: the (outer) norm of the argmax.
    pub fn radius(&self) -> f64 {
        match self {
            Witness::Point(x) => x.norm(),
            Witness::Pair(x, y) => x.norm().max(y.norm()),
            Witness::Slice { z, .. } => z.norm(),
        }
    }
}

/// A certified-lower-bound supremum estimate with its argmax witness and the
/// plan that produced it.
#[derive(Debug, Clone)]
pub struct SeminormEstimate {
    pub kind: SeminormKind,
    pub alpha: f64,
    pub lambda: Option<f64>,
    pub value: f64,
    pub witness: Witness,
    pub plan: SamplingPlan,
    pub convention: WeightConvention,
}

/// `||c_par||^2, ||c_perp||^2` split of the conjugate gradient against `x`,
/// recovered from `|Rf(x)| = r * ||c_par||`.
fn invgrad_from_parts(r: f64, grad_norm: f64, radial_abs: f64) -> f64 {
    if r == 0.0 {
        return grad_norm;
    }
    let par_sq = (radial_abs / r) * (radial_abs / r);
    let perp_sq = (grad_norm * grad_norm - par_sq).max(0.0);
    let s = (1.0 - r) * (1.0 + r);
    (s * s * par_sq + s * perp_sq).sqrt()
}

fn require_interior(x: &Point) -> Result<f64> {
    let r = x.norm();
    if r >= 1.0 {
        return Err(Error::OutsideBall { norm: r });
    }
    Ok(r)
}

/// Bilinear contraction `Df(x)(x) = sum_j g_j x_j` from an existing gradient.
fn radial_from_gradient(grad: &Point, x: &Point) -> Complex64 {
    grad.coords()
        .iter()
        .zip(x.coords())
        .map(|(g, xi)| g * xi)
        .sum()
}

/// Closed-form norm of the invariant gradient at `x`.
///
/// Splitting the conjugate gradient `c` into radial and tangential parts
/// diagonalizes the constrained maximization, giving
/// `sqrt((1-r^2)^2 ||c_par||^2 + (1-r^2) ||c_perp||^2)`; at `x = 0` this is
/// `||c||`.
pub fn invariant_gradient_norm(f: &HoloFunction, x: &Point) -> Result<f64> {
    let r = require_interior(x)?;
    let grad = f.gradient(x)?;
    let radial = radial_from_gradient(&grad, x);
    Ok(invgrad_from_parts(r, grad.norm(), radial.norm()))
}

/// Algebraically collapsed form of the same quantity:
/// `sqrt((1-r^2) (||Df(x)||^2 - |Rf(x)|^2))`.
pub fn invariant_gradient_norm_alt(f: &HoloFunction, x: &Point) -> Result<f64> {
    let r = require_interior(x)?;
    let grad = f.gradient(x)?;
    let radial = radial_from_gradient(&grad, x);
    let s = (1.0 - r) * (1.0 + r);
    Ok((s * (grad.norm_sq() - radial.norm_sqr()).max(0.0)).sqrt())
}

/// Sampled supremum defining the invariant-gradient norm:
/// `sup_w |Df(x)(w)| (1-r^2) / sqrt((1-r^2)||w||^2 + |<w,x>|^2)` over the
/// plan's seeded directions, the radial and tangential projections of the
/// conjugate gradient, the exact mixing optimum, and a golden-section sweep
/// of the mixing angle between the two projections.
pub fn invariant_gradient_oracle(
    f: &HoloFunction,
    x: &Point,
    plan: &SamplingPlan,
) -> Result<f64> {
    let r = require_interior(x)?;
    let grad = f.gradient(x)?;
    if grad.norm() == 0.0 {
        return Ok(0.0);
    }
    let c = grad.conj();
    let s = (1.0 - r) * (1.0 + r);
    let ratio = |w: &Point| -> f64 {
        let pairing: Complex64 = grad
            .coords()
            .iter()
            .zip(w.coords())
            .map(|(g, wj)| g * wj)
            .sum();
        let denom = quadratic_denominator(x, w).expect("interior point");
        if denom <= 0.0 {
            0.0
        } else {
            pairing.norm() * s / denom.sqrt()
        }
    };

    let mut best: f64 = 0.0;
    for w in plan.directions(x.dim()) {
        best = best.max(ratio(&w));
    }

    if r == 0.0 {
        // at the center the ratio is |<w, c>| / ||w||, maximized by c itself
        return Ok(best.max(ratio(&c)));
    }

    let (c_par, c_perp) = decompose(&c, x)?;
    let par_norm = c_par.norm();
    let perp_norm = c_perp.norm();
    if par_norm > 0.0 {
        best = best.max(ratio(&c_par));
    }
    if perp_norm > 0.0 {
        best = best.max(ratio(&c_perp));
    }
    if par_norm > 0.0 && perp_norm > 0.0 {
        // exact maximizer: radial part plus tangential part boosted by
        // 1/(1-r^2)
        let w_opt = c_par.add(&c_perp.scale(Complex64::new(1.0 / s, 0.0)))?;
        best = best.max(ratio(&w_opt));
        // sweep the mixing angle as an independent refinement
        let par_unit = c_par.scale(Complex64::new(1.0 / par_norm, 0.0));
        let perp_unit = c_perp.scale(Complex64::new(1.0 / perp_norm, 0.0));
        let mix = |theta: f64| -> f64 {
            let w = par_unit
                .scale(Complex64::new(theta.cos(), 0.0))
                .add(&perp_unit.scale(Complex64::new(theta.sin(), 0.0)))
                .expect("same dimension");
            ratio(&w)
        };
        let (_, swept) =
            golden_section_max(mix, 0.0, std::f64::consts::FRAC_PI_2, plan.refine_steps());
        best = best.max(swept);
    }
    Ok(best)
}

/// Finite-difference computation through the ball automorphism: the gradient
/// at `0` of `z -> f(phi_x(z))` by central differences with step `h` per
/// coordinate.
pub fn invariant_gradient_fd(f: &HoloFunction, x: &Point, h: f64) -> Result<f64> {
    if !(h > 0.0 && h <= 1e-4) {
        return Err(Error::InvalidStep { step: h });
    }
    require_interior(x)?;
    let phi = MobiusMap::new(x.clone())?;
    let dim = x.dim();
    let mut sum_sq = 0.0;
    for j in 0..dim {
        let step = Point::basis(dim, j).scale(Complex64::new(h, 0.0));
        let plus = f.evaluate(&phi.apply(&step)?)?;
        let minus = f.evaluate(&phi.apply(&step.scale(Complex64::new(-1.0, 0.0)))?)?;
        let derivative = (plus - minus) / Complex64::new(2.0 * h, 0.0);
        sum_sq += derivative.norm_sqr();
    }
    Ok(sum_sq.sqrt())
}

/// All pointwise quantities at `x` in one bundle.
pub fn point_diff(f: &HoloFunction, x: &Point) -> Result<PointDiff> {
    let r = require_interior(x)?;
    let value = f.evaluate(x)?;
    let grad = f.gradient(x)?;
    let grad_norm = grad.norm();
    let radial = radial_from_gradient(&grad, x);
    let invgrad_norm = invgrad_from_parts(r, grad_norm, radial.norm());
    Ok(PointDiff {
        value,
        grad,
        grad_norm,
        radial,
        invgrad_norm,
    })
}

fn pointwise_quantity(kind: SeminormKind, pd: &PointDiff) -> f64 {
    match kind {
        SeminormKind::S1 => pd.grad_norm,
        SeminormKind::S2 => pd.radial.norm(),
        SeminormKind::S4 | SeminormKind::Qf => pd.invgrad_norm,
        SeminormKind::Growth => pd.value.norm(),
        SeminormKind::Normal => pd.grad_norm / (1.0 + pd.value.norm_sqr()),
        _ => unreachable!("quotient and slice kinds never reach the pointwise scan"),
    }
}

fn check_kind_alpha(f: &HoloFunction, kind: SeminormKind, alpha: f64) -> Result<()> {
    match kind {
        SeminormKind::Lip | SeminormKind::SWeighted | SeminormKind::DiskBloch => {
            return Err(Error::UnsupportedKind {
                kind: kind.label().to_string(),
            });
        }
        SeminormKind::S3 | SeminormKind::S4 => {
            if !(alpha > 0.0) {
                return Err(Error::UnsupportedAlpha {
                    kind: kind.label().to_string(),
                    alpha,
                });
            }
        }
        _ => {
            if !(alpha >= 0.0) {
                return Err(Error::UnsupportedAlpha {
                    kind: kind.label().to_string(),
                    alpha,
                });
            }
        }
    }
    if kind == SeminormKind::S4 && f.dim() == 1 {
        return Err(Error::InvariantGradientDimensionOne);
    }
    Ok(())
}

/// Certified-lower-bound estimate of the `kind` seminorm at weight `alpha`.
///
/// Interior kinds scan the radial grid against the direction set and refine
/// radially around the best sample; `S3` delegates each direction to a disk
/// scan of its boundary slice. Equal values keep the earliest sample in
/// level-major, direction-minor order.
pub fn estimate_seminorm(
    f: &HoloFunction,
    kind: SeminormKind,
    alpha: f64,
    plan: &SamplingPlan,
    convention: WeightConvention,
) -> Result<SeminormEstimate> {
    check_kind_alpha(f, kind, alpha)?;
    if kind == SeminormKind::S3 {
        return estimate_slice_seminorm(f, alpha, plan, convention);
    }
    let radii = plan.radii();
    let dirs = plan.directions(f.dim());
    let exponent = kind.exponent(alpha);
    let scan = radial_direction_sup(&radii, &dirs, plan.refine_steps(), |r, u| {
        let x = u.scale(Complex64::new(r, 0.0));
        let pd = point_diff(f, &x).expect("plan radii stay interior");
        convention.base(r).powf(exponent) * pointwise_quantity(kind, &pd)
    });
    let witness = Witness::Point(dirs[scan.direction].scale(Complex64::new(scan.radius, 0.0)));
    Ok(SeminormEstimate {
        kind,
        alpha,
        lambda: None,
        value: scan.value.max(0.0),
        witness,
        plan: plan.clone(),
        convention,
    })
}

/// Disk scan shared by the slice seminorm and the one-variable norm:
/// maximum of `weight(|z|)^alpha |F'(z)|` over the radius grid times
/// [`DISK_ANGLES`] phases, with radial refinement.
fn disk_bloch_scan(
    series: &DiskSeries,
    alpha: f64,
    plan: &SamplingPlan,
    convention: WeightConvention,
) -> (f64, Complex64) {
    let deriv = series.derivative();
    if deriv.is_zero() {
        return (0.0, Complex64::new(0.0, 0.0));
    }
    let radii = plan.radii();
    let phases: Vec<Point> = (0..DISK_ANGLES)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (DISK_ANGLES as f64);
            Point::new(vec![Complex64::from_polar(1.0, theta)])
        })
        .collect();
    let scan = radial_direction_sup(&radii, &phases, plan.refine_steps(), |r, u| {
        let z = u.coords()[0] * r;
        convention.base(r).powf(alpha) * deriv.evaluate(z).norm()
    });
    let z = phases[scan.direction].coords()[0] * scan.radius;
    (scan.value, z)
}

/// The one-variable Bloch norm `sup (1-|z|^2)^alpha |F'(z)|` as a sampled
/// lower bound. The zero series gives 0.
pub fn disk_bloch_norm(series: &DiskSeries, alpha: f64, plan: &SamplingPlan) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::UnsupportedAlpha {
            kind: SeminormKind::DiskBloch.label().to_string(),
            alpha,
        });
    }
    Ok(disk_bloch_scan(series, alpha, plan, WeightConvention::OneMinusNormSq).0)
}

fn estimate_slice_seminorm(
    f: &HoloFunction,
    alpha: f64,
    plan: &SamplingPlan,
    convention: WeightConvention,
) -> Result<SeminormEstimate> {
    let dirs = plan.directions(f.dim());
    let mut best_value = f64::NEG_INFINITY;
    let mut best_dir = 0;
    let mut best_z = Complex64::new(0.0, 0.0);
    for (d, y) in dirs.iter().enumerate() {
        let series = f.slice_series(y)?;
        let (value, z) = disk_bloch_scan(&series, alpha, plan, convention);
        if value > best_value {
            best_value = value;
            best_dir = d;
            best_z = z;
        }
    }
    Ok(SeminormEstimate {
        kind: SeminormKind::S3,
        alpha,
        lambda: None,
        value: best_value.max(0.0),
        witness: Witness::Slice {
            direction: dirs[best_dir].clone(),
            z: best_z,
        },
        plan: plan.clone(),
        convention,
    })
}

/// The Lipschitz quotient `sup |f(x)-f(y)| / ||x-y||^alpha` over the plan's
/// pair set.
pub fn lipschitz_quotient(
    f: &HoloFunction,
    alpha: f64,
    plan: &SamplingPlan,
) -> Result<SeminormEstimate> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::UnsupportedAlpha {
            kind: SeminormKind::Lip.label().to_string(),
            alpha,
        });
    }
    let mut best_value = 0.0;
    let mut best_pair: Option<(Point, Point)> = None;
    for (x, y) in plan.pairs(f.dim()) {
        let gap = x.sub(&y)?.norm();
        if gap == 0.0 {
            continue;
        }
        let diff = (f.evaluate(&x)? - f.evaluate(&y)?).norm();
        let q = diff / gap.powf(alpha);
        if q > best_value {
            best_value = q;
            best_pair = Some((x, y));
        }
    }
    let witness = match best_pair {
        Some((x, y)) => Witness::Pair(x, y),
        None => Witness::Point(Point::zero(f.dim())),
    };
    Ok(SeminormEstimate {
        kind: SeminormKind::Lip,
        alpha,
        lambda: None,
        value: best_value,
        witness,
        plan: plan.clone(),
        convention: SeminormKind::Lip.default_convention(),
    })
}

/// The weighted difference quotient
/// `sup (1-||x||)^lambda (1-||y||)^{alpha-lambda} |f(x)-f(y)| / ||x-y||`,
/// evaluated on the symmetrized pair set (both orders of every pair), so the
/// estimates for `lambda` and `alpha - lambda` coincide.
pub fn weighted_quotient(
    f: &HoloFunction,
    alpha: f64,
    lambda: f64,
    plan: &SamplingPlan,
) -> Result<SeminormEstimate> {
    if !(alpha > 0.0) {
        return Err(Error::UnsupportedAlpha {
            kind: SeminormKind::SWeighted.label().to_string(),
            alpha,
        });
    }
    if !(0.0..=alpha).contains(&lambda) {
        return Err(Error::InvalidLambda { lambda, alpha });
    }
    let mut best_value = 0.0;
    let mut best_pair: Option<(Point, Point)> = None;
    for (x, y) in plan.pairs(f.dim()) {
        let gap = x.sub(&y)?.norm();
        if gap == 0.0 {
            continue;
        }
        let diff = (f.evaluate(&x)? - f.evaluate(&y)?).norm();
        let wx = (1.0 - x.norm()).max(0.0);
        let wy = (1.0 - y.norm()).max(0.0);
        let forward = wx.powf(lambda) * wy.powf(alpha - lambda) * diff / gap;
        if forward > best_value {
            best_value = forward;
            best_pair = Some((x.clone(), y.clone()));
        }
        let swapped = wy.powf(lambda) * wx.powf(alpha - lambda) * diff / gap;
        if swapped > best_value {
            best_value = swapped;
            best_pair = Some((y, x));
        }
    }
    let witness = match best_pair {
        Some((x, y)) => Witness::Pair(x, y),
        None => Witness::Point(Point::zero(f.dim())),
    };
    Ok(SeminormEstimate {
        kind: SeminormKind::SWeighted,
        alpha,
        lambda: Some(lambda),
        value: best_value,
        witness,
        plan: plan.clone(),
        convention: SeminormKind::SWeighted.default_convention(),
    })
}

/// `S1` and `S2` maxima accumulated over one shared sample set.
///
/// Every evaluated point — grid and both refinement passes — contributes to
/// both quantities, so the pointwise bound `|Rf(x)| <= ||x|| ||Df(x)||`
/// forces `s2 <= s1` here exactly, not merely up to sampling gaps.
pub fn shared_s1_s2(
    f: &HoloFunction,
    alpha: f64,
    plan: &SamplingPlan,
    convention: WeightConvention,
) -> Result<(f64, f64)> {
    check_kind_alpha(f, SeminormKind::S1, alpha)?;
    let radii = plan.radii();
    let dirs = plan.directions(f.dim());
    let mut max1 = 0.0f64;
    let mut max2 = 0.0f64;
    let mut best1 = (0usize, 0usize);
    let mut best2 = (0usize, 0usize);
    {
        let eval = |r: f64, u: &Point| -> (f64, f64) {
            let x = u.scale(Complex64::new(r, 0.0));
            let pd = point_diff(f, &x).expect("plan radii stay interior");
            let w = convention.base(r).powf(alpha);
            (w * pd.grad_norm, w * pd.radial.norm())
        };
        for (j, &r) in radii.iter().enumerate() {
            for (d, u) in dirs.iter().enumerate() {
                let (v1, v2) = eval(r, u);
                if v1 > max1 {
                    max1 = v1;
                    best1 = (j, d);
                }
                if v2 > max2 {
                    max2 = v2;
                    best2 = (j, d);
                }
            }
        }
        for (which, (j, d)) in [best1, best2].into_iter().enumerate() {
            let lo = if j == 0 { 0.0 } else { radii[j - 1] };
            let hi = if j + 1 < radii.len() {
                radii[j + 1]
            } else {
                crate::sampling::radial_cap()
            };
            if hi <= lo {
                continue;
            }
            let u = dirs[d].clone();
            let (_, refined) = golden_section_max(
                |r| {
                    let (v1, v2) = eval(r, &u);
                    // feed the co-accumulator so the sample set stays shared
                    if v1 > max1 && which == 1 {
                        max1 = v1;
                    }
                    if v2 > max2 && which == 0 {
                        max2 = v2;
                    }
                    if which == 0 {
                        v1
                    } else {
                        v2
                    }
                },
                lo,
                hi,
                plan.refine_steps(),
            );
            if which == 0 && refined > max1 {
                max1 = refined;
            }
            if which == 1 && refined > max2 {
                max2 = refined;
            }
        }
    }
    Ok((max1, max2))
}

/// Slice seminorm and radial seminorm restricted to the same slice samples.
///
/// At a sample `z y` the radial quantity is `|z|` times the slice quantity,
/// so the returned `sliced_s2 <= s3` holds exactly on the shared set.
pub fn shared_s3_sliced_s2(
    f: &HoloFunction,
    alpha: f64,
    plan: &SamplingPlan,
    convention: WeightConvention,
) -> Result<(f64, f64)> {
    check_kind_alpha(f, SeminormKind::S3, alpha)?;
    let dirs = plan.directions(f.dim());
    let radii = plan.radii();
    let phases: Vec<f64> = (0..DISK_ANGLES)
        .map(|k| 2.0 * std::f64::consts::PI * (k as f64) / (DISK_ANGLES as f64))
        .collect();
    let mut max3 = 0.0f64;
    let mut max2 = 0.0f64;
    for y in &dirs {
        let deriv = f.slice_series(y)?.derivative();
        if deriv.is_zero() {
            continue;
        }
        for &theta in &phases {
            let phase = Complex64::from_polar(1.0, theta);
            for &r in &radii {
                let v3 = convention.base(r).powf(alpha) * deriv.evaluate(phase * r).norm();
                let v2 = r * v3;
                if v3 > max3 {
                    max3 = v3;
                }
                if v2 > max2 {
                    max2 = v2;
                }
            }
        }
        // radial refinement along the angle-0 ray feeds both accumulators
        let (_, _) = golden_section_max(
            |r| {
                let v3 = convention.base(r).powf(alpha) * deriv.evaluate(Complex64::new(r, 0.0)).norm();
                let v2 = r * v3;
                if v2 > max2 {
                    max2 = v2;
                }
                if v3 > max3 {
                    max3 = v3;
                }
                v3
            },
            0.0,
            crate::sampling::radial_cap(),
            plan.refine_steps(),
        );
    }
    Ok((max3, max2))
}
