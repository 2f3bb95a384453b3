//! Deterministic seeded sampling for supremum estimation.
//!
//! A [`SamplingPlan`] fixes a dyadic radial grid `r_j = 1 - 2^{-j}`, a
//! direction set (coordinate axes plus seeded random unit vectors), a pair
//! set for difference quotients, and a golden-section refinement budget.
//! Identical plans produce identical sample sets, and enlarging any count
//! extends the sample set without disturbing the existing prefix, so
//! estimates grow monotonically with the plan.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::Point;
use crate::{Error, Result};

/// Deepest allowed radial level; `1 - 2^{-40}` keeps `1 - r` and `1 - r^2`
/// well away from rounding.
pub const MAX_RADIAL_LEVELS: u32 = 40;

/// Largest radius any sample or refinement may reach.
pub fn radial_cap() -> f64 {
    1.0 - 0.5f64.powi(MAX_RADIAL_LEVELS as i32)
}

/// Gap sizes for near-diagonal difference-quotient pairs.
pub const NEAR_DIAGONAL_GAPS: [f64; 3] = [1e-2, 1e-4, 1e-6];

// Independent ChaCha streams derived from one seed.
const STREAM_DIRECTIONS: u64 = 1;
const STREAM_PAIRS: u64 = 2;

/// Configuration of the deterministic supremum search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingPlan {
    radial_levels: u32,
    directions_per_level: u32,
    pair_samples: u32,
    refine_steps: u32,
    seed: u64,
}

impl SamplingPlan {
    pub fn new(
        radial_levels: u32,
        directions_per_level: u32,
        pair_samples: u32,
        refine_steps: u32,
        seed: u64,
    ) -> Result<Self> {
        if radial_levels == 0 || radial_levels > MAX_RADIAL_LEVELS {
            return Err(Error::InvalidPlan {
                reason: format!(
                    "radial_levels must be in 1..={MAX_RADIAL_LEVELS}, got {radial_levels}"
                ),
            });
        }
        if directions_per_level == 0 {
            return Err(Error::InvalidPlan {
                reason: "directions_per_level must be positive".into(),
            });
        }
        if pair_samples == 0 {
            return Err(Error::InvalidPlan {
                reason: "pair_samples must be positive".into(),
            });
        }
        if refine_steps == 0 {
            return Err(Error::InvalidPlan {
                reason: "refine_steps must be positive".into(),
            });
        }
        Ok(SamplingPlan {
            radial_levels,
            directions_per_level,
            pair_samples,
            refine_steps,
            seed,
        })
    }

    /// Default-resolution plan: 20 radial levels, 8 extra directions,
    /// 2000 pair groups, 48 refinement steps.
    pub fn standard(seed: u64) -> Self {
        SamplingPlan::new(20, 8, 2000, 48, seed).expect("standard plan is valid")
    }

    pub fn radial_levels(&self) -> u32 {
        self.radial_levels
    }

    pub fn directions_per_level(&self) -> u32 {
        self.directions_per_level
    }

    pub fn pair_samples(&self) -> u32 {
        self.pair_samples
    }

    pub fn refine_steps(&self) -> u32 {
        self.refine_steps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Compact identifier recorded with every estimate and check.
    pub fn fingerprint(&self) -> String {
        format!(
            "J{}-D{}-P{}-R{}-S{}",
            self.radial_levels,
            self.directions_per_level,
            self.pair_samples,
            self.refine_steps,
            self.seed
        )
    }

    /// The dyadic radial grid `0, 1/2, 3/4, ..., 1 - 2^{-J}`.
    pub fn radii(&self) -> Vec<f64> {
        (0..=self.radial_levels)
            .map(|j| 1.0 - 0.5f64.powi(j as i32))
            .collect()
    }

    /// Coordinate axes followed by seeded random unit directions. The random
    /// block is a prefix-stable stream: raising the count appends vectors.
    pub fn directions(&self, dim: usize) -> Vec<Point> {
        let mut dirs: Vec<Point> = (0..dim).map(|j| Point::basis(dim, j)).collect();
        let mut rng = stream_rng(self.seed, STREAM_DIRECTIONS);
        for _ in 0..self.directions_per_level {
            dirs.push(unit_direction(&mut rng, dim));
        }
        dirs
    }

    /// Difference-quotient pairs: a structured block (near-diagonal,
    /// consecutive-level, and antipodal pairs along every direction) plus
    /// seeded random groups. All points stay strictly inside the ball.
    pub fn pairs(&self, dim: usize) -> Vec<(Point, Point)> {
        let cap = radial_cap();
        let radii = self.radii();
        let mut out = Vec::new();

        for u in self.directions(dim) {
            for (j, &r) in radii.iter().enumerate() {
                let x = u.scale(Complex64::new(r, 0.0));
                for &t in &NEAR_DIAGONAL_GAPS {
                    // step outward if room remains, otherwise inward
                    let r2 = if r + t < cap { r + t } else { r - t };
                    out.push((x.clone(), u.scale(Complex64::new(r2, 0.0))));
                }
                if j + 1 < radii.len() {
                    out.push((x.clone(), u.scale(Complex64::new(radii[j + 1], 0.0))));
                }
                if r > 0.0 {
                    out.push((x.clone(), x.scale(Complex64::new(-1.0, 0.0))));
                }
            }
        }

        let mut rng = stream_rng(self.seed, STREAM_PAIRS);
        for _ in 0..self.pair_samples {
            let x = ball_point(&mut rng, dim, 0.999);
            let y = ball_point(&mut rng, dim, 0.999);
            let d = unit_direction(&mut rng, dim);
            out.push((x.clone(), y));
            for &t in &NEAR_DIAGONAL_GAPS {
                let shifted = x
                    .add(&d.scale(Complex64::new(t, 0.0)))
                    .expect("same dimension");
                if shifted.norm() < cap {
                    out.push((x.clone(), shifted));
                }
            }
        }
        out
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// One standard-normal pair via Box–Muller (keeps the dependency footprint
/// to plain uniform draws, which are stable across rand versions).
fn gaussian_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    let u1: f64 = loop {
        let v: f64 = rng.gen();
        if v > 1e-300 {
            break v;
        }
    };
    let u2: f64 = rng.gen();
    let radius = (-2.0 * u1.ln()).sqrt();
    let angle = 2.0 * std::f64::consts::PI * u2;
    (radius * angle.cos(), radius * angle.sin())
}

/// Uniformly distributed complex unit vector (normalized Gaussian).
pub(crate) fn unit_direction<R: Rng>(rng: &mut R, dim: usize) -> Point {
    loop {
        let coords: Vec<Complex64> = (0..dim)
            .map(|_| {
                let (re, im) = gaussian_pair(rng);
                Complex64::new(re, im)
            })
            .collect();
        let p = Point::new(coords);
        if p.norm() > 1e-6 {
            return p.normalized().expect("nonzero by construction");
        }
    }
}

/// Random point with norm below `rmax` (radius `rmax * u`, direction uniform).
pub(crate) fn ball_point<R: Rng>(rng: &mut R, dim: usize, rmax: f64) -> Point {
    let r: f64 = rng.gen::<f64>() * rmax;
    unit_direction(rng, dim).scale(Complex64::new(r, 0.0))
}

/// Golden-section maximization on `[a, b]`, returning the best point seen
/// across all evaluations (including the endpoints), so the result is a
/// certified lower bound of the true maximum even off unimodal inputs.
pub(crate) fn golden_section_max<F>(mut f: F, a: f64, b: f64, steps: u32) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best_x = a;
    let mut best_v = f(a);
    let vb = f(b);
    if vb > best_v {
        best_x = b;
        best_v = vb;
    }
    let mut lo = a;
    let mut hi = b;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut v1 = f(x1);
    if v1 > best_v {
        best_x = x1;
        best_v = v1;
    }
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut v2 = f(x2);
    if v2 > best_v {
        best_x = x2;
        best_v = v2;
    }
    for _ in 0..steps {
        if v1 >= v2 {
            hi = x2;
            x2 = x1;
            v2 = v1;
            x1 = hi - INV_PHI * (hi - lo);
            v1 = f(x1);
            if v1 > best_v {
                best_x = x1;
                best_v = v1;
            }
        } else {
            lo = x1;
            x1 = x2;
            v1 = v2;
            x2 = lo + INV_PHI * (hi - lo);
            v2 = f(x2);
            if v2 > best_v {
                best_x = x2;
                best_v = v2;
            }
        }
    }
    (best_x, best_v)
}

/// Result of a radial-grid-times-directions scan with refinement.
#[derive(Debug, Clone)]
pub(crate) struct SupScan {
    pub value: f64,
    pub radius: f64,
    pub direction: usize,
}

/// Maximize `value(r, u)` over the grid `radii x directions` in level-major,
/// direction-minor order (first strict improvement wins ties), then refine
/// radially around the best level along the best direction.
pub(crate) fn radial_direction_sup<F>(
    radii: &[f64],
    directions: &[Point],
    refine_steps: u32,
    mut value: F,
) -> SupScan
where
    F: FnMut(f64, &Point) -> f64,
{
    assert!(!radii.is_empty() && !directions.is_empty());
    let mut best = SupScan {
        value: f64::NEG_INFINITY,
        radius: radii[0],
        direction: 0,
    };
    let mut best_level = 0;
    for (j, &r) in radii.iter().enumerate() {
        for (d, u) in directions.iter().enumerate() {
            let v = value(r, u);
            if v > best.value {
                best = SupScan {
                    value: v,
                    radius: r,
                    direction: d,
                };
                best_level = j;
            }
        }
    }
    let lo = if best_level == 0 {
        0.0
    } else {
        radii[best_level - 1]
    };
    let hi = if best_level + 1 < radii.len() {
        radii[best_level + 1]
    } else {
        radial_cap()
    };
    if hi > lo {
        let u = directions[best.direction].clone();
        let (r_ref, v_ref) = golden_section_max(|r| value(r, &u), lo, hi, refine_steps);
        if v_ref > best.value {
            best.value = v_ref;
            best.radius = r_ref;
        }
    }
    best
}

#[cfg(test)]
pub mod test_support {
    //! Seeded helpers shared by unit tests across modules.

    use super::*;

    pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn random_ball_point<R: Rng>(rng: &mut R, dim: usize, rmax: f64) -> Point {
        ball_point(rng, dim, rmax)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_validation() {
        assert!(SamplingPlan::new(20, 8, 100, 10, 1).is_ok());
        assert!(matches!(
            SamplingPlan::new(41, 8, 100, 10, 1),
            Err(Error::InvalidPlan { .. })
        ));
        assert!(matches!(
            SamplingPlan::new(0, 8, 100, 10, 1),
            Err(Error::InvalidPlan { .. })
        ));
        assert!(SamplingPlan::new(20, 0, 100, 10, 1).is_err());
        assert!(SamplingPlan::new(20, 8, 0, 10, 1).is_err());
        assert!(SamplingPlan::new(20, 8, 100, 0, 1).is_err());
    }

    #[test]
    fn radii_are_exact_dyadics() {
        let plan = SamplingPlan::standard(7);
        let radii = plan.radii();
        assert_eq!(radii.len(), 21);
        assert_eq!(radii[0], 0.0);
        assert_eq!(radii[1], 0.5);
        assert_eq!(radii[16], 1.0 - 0.5f64.powi(16));
        assert!(radii.iter().all(|&r| r <= radial_cap()));
    }

    #[test]
    fn directions_start_with_axes_and_are_unit() {
        let plan = SamplingPlan::standard(3);
        let dirs = plan.directions(3);
        assert_eq!(dirs.len(), 3 + 8);
        for (j, d) in dirs.iter().take(3).enumerate() {
            assert_eq!(*d, Point::basis(3, j));
        }
        for d in &dirs {
            assert!((d.norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn sample_sets_are_deterministic_and_prefix_stable() {
        let a = SamplingPlan::new(10, 4, 50, 10, 42).unwrap();
        let b = SamplingPlan::new(10, 4, 50, 10, 42).unwrap();
        assert_eq!(a.directions(2), b.directions(2));
        assert_eq!(a.pairs(2), b.pairs(2));

        // more random directions extend, not reshuffle, the list
        let wider = SamplingPlan::new(10, 6, 50, 10, 42).unwrap();
        assert_eq!(&wider.directions(2)[..6], &a.directions(2)[..]);

        let other_seed = SamplingPlan::new(10, 4, 50, 10, 43).unwrap();
        assert_ne!(a.directions(2)[2], other_seed.directions(2)[2]);
    }

    #[test]
    fn pairs_stay_inside_the_ball_and_cover_scales() {
        let plan = SamplingPlan::new(12, 4, 40, 10, 9).unwrap();
        let pairs = plan.pairs(2);
        assert!(!pairs.is_empty());
        let mut min_gap = f64::INFINITY;
        for (x, y) in &pairs {
            assert!(x.norm() <= radial_cap() + 1e-15);
            assert!(y.norm() <= radial_cap() + 1e-15);
            let gap = x.sub(y).unwrap().norm();
            if gap > 0.0 {
                min_gap = min_gap.min(gap);
            }
        }
        // near-diagonal block reaches the finest declared gap
        assert!(min_gap <= 1.5e-6);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        // the value converges to machine precision; the abscissa freezes at
        // the first point whose value rounds to the max, so it is looser
        let (x, v) = golden_section_max(|t| 1.0 - (t - 0.3).powi(2), 0.0, 1.0, 60);
        assert!((x - 0.3).abs() <= 1e-6);
        assert!((v - 1.0).abs() <= 1e-12);
        // endpoint maxima are caught by the endpoint evaluations
        let (x, v) = golden_section_max(|t| t, 0.0, 1.0, 5);
        assert_eq!(x, 1.0);
        assert_eq!(v, 1.0);
    }

    #[test]
    fn sup_scan_refines_radially() {
        let plan = SamplingPlan::new(6, 2, 10, 60, 5).unwrap();
        let radii = plan.radii();
        let dirs = plan.directions(2);
        // peak of r(1-r) at r = 1/2 lies on the grid; peak of 2r(1-r)^2
        // at r = 1/3 does not and needs refinement
        let scan = radial_direction_sup(&radii, &dirs, plan.refine_steps(), |r, _| {
            2.0 * r * (1.0 - r) * (1.0 - r)
        });
        assert!((scan.radius - 1.0 / 3.0).abs() <= 1e-8);
        assert!((scan.value - 8.0 / 27.0).abs() <= 1e-12);
    }

    #[test]
    fn tie_breaking_prefers_first_sample() {
        let plan = SamplingPlan::new(4, 2, 10, 5, 5).unwrap();
        let radii = plan.radii();
        let dirs = plan.directions(2);
        let scan = radial_direction_sup(&radii, &dirs, plan.refine_steps(), |_, _| 1.0);
        assert_eq!(scan.radius, 0.0);
        assert_eq!(scan.direction, 0);
    }
}
