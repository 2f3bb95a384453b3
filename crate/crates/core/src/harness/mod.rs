//! Theorem checks over generated function families.
//!
//! Each check turns one quantitative statement about the Bloch-type
//! seminorms into a reproducible numerical experiment: exact identities are
//! asserted at sampled points, one-directional inequalities are asserted on
//! shared sample sets, and two-sided equivalences with inexplicit constants
//! are recorded as empirical ratios that must stay inside the declared
//! windows and stabilize under radial refinement.
//!
//! Every [`CheckResult`] is a pure function of its inputs and the sampling
//! plan — re-running a check reproduces it bit-identically.

pub mod checks;
pub mod families;

use serde::{Deserialize, Serialize};

use crate::sampling::SamplingPlan;

pub use checks::{
    check_dai, check_derivative_growth, check_equivalence, check_growth_equiv,
    check_hardy_littlewood, check_integral_identity, check_pointwise_identities,
    check_schlicht_pick, check_t_alpha, run_integral_suite, run_suite,
    weighted_quotient_region, Suite, WeightedQuotientRegion,
};
pub use families::{axis_curve, seeded_curves, FamilyName, FamilySpec};

/// Declared thresholds for every check.
///
/// The ratio windows are empirical envelopes recorded from the committed
/// oracle run at plan `J20-D8-P2000-R48-S42`; the pinning tests below fail
/// the suite if any of these constants drifts.
pub mod windows {
    /// Two-sided window for seminorm-comparison ratios.
    pub const RATIO_LO: f64 = 0.125;
    /// Upper edge of the two-sided ratio window.
    pub const RATIO_HI: f64 = 8.0;
    /// Cap on the recorded equivalence constants `S1/S2` and `S3/S2`.
    pub const EQUIV_RATIO_CAP: f64 = 32.0;
    /// Allowed relative drift of a ratio between the two finest radial
    /// levels.
    pub const STABILITY_REL: f64 = 0.05;
    /// Allowed relative drift of a derivative-growth profile between the two
    /// finest radial levels.
    pub const PROFILE_REL: f64 = 0.10;
    /// Tolerance for pointwise algebraic identities.
    pub const IDENTITY_TOL: f64 = 1e-10;
    /// Tolerance for theorem-backed one-directional inequalities evaluated
    /// on shared samples.
    pub const EXACT_DIRECTION_TOL: f64 = 1e-12;
    /// Relative tolerance for the quadrature identity.
    pub const INTEGRAL_TOL: f64 = 1e-12;
    /// Slack over the analytic bound in the composition check.
    pub const SCHLICHT_TOL: f64 = 1e-6;
    /// Slack for the pointwise bounded-function difference inequality.
    pub const POINTWISE_DIFF_TOL: f64 = 1e-12;
    /// Values below this count as "numerically zero" when flagging degenerate
    /// ratio inputs.
    pub const DEGENERATE: f64 = 1e-9;
}

/// One named scalar a check observed and reported.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub name: String,
    pub value: f64,
}

/// One machine-readable row of evidence behind a verdict — the unit the CLI
/// serializes into report files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    /// Which generated function (or input artifact) the row is about.
    pub function_id: String,
    /// Quantity label (seminorm kind or profile name); may be empty.
    pub kind: String,
    pub alpha: Option<f64>,
    pub lambda: Option<f64>,
    /// Weight-convention label; empty when not applicable.
    pub convention: String,
    /// The primary measured value of the row.
    pub value: f64,
    /// Radius of the argmax witness when the value is a supremum estimate.
    pub witness_radius: Option<f64>,
    /// Name of the derived ratio carried by this row; empty when none.
    pub ratio_name: String,
    pub ratio_value: Option<f64>,
    /// Whether this row satisfied its local assertion.
    pub pass: bool,
}

impl Evidence {
    /// Row with every optional field empty; fill what applies.
    pub fn blank(function_id: &str) -> Self {
        Evidence {
            function_id: function_id.to_string(),
            kind: String::new(),
            alpha: None,
            lambda: None,
            convention: String::new(),
            value: 0.0,
            witness_radius: None,
            ratio_name: String::new(),
            ratio_value: None,
            pass: true,
        }
    }
}

/// Verdict of one check: a pass flag that is a pure function of the observed
/// quantities versus the declared thresholds, plus the evidence rows behind
/// it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub pass: bool,
    pub observed: Vec<Observation>,
    pub tolerance: f64,
    pub plan_fingerprint: String,
    pub evidence: Vec<Evidence>,
}

impl CheckResult {
    pub fn new(check_id: String, tolerance: f64, plan: &SamplingPlan) -> Self {
        CheckResult {
            check_id,
            pass: true,
            observed: Vec::new(),
            tolerance,
            plan_fingerprint: plan.fingerprint(),
            evidence: Vec::new(),
        }
    }

    /// Record a named scalar.
    pub fn observe(&mut self, name: &str, value: f64) {
        self.observed.push(Observation {
            name: name.to_string(),
            value,
        });
    }

    /// Fold a sub-assertion into the verdict and return it for local use.
    pub fn require(&mut self, ok: bool) -> bool {
        self.pass &= ok;
        ok
    }

    /// Attach one evidence row, folding its local pass flag into the verdict.
    pub fn push_evidence(&mut self, row: Evidence) {
        self.pass &= row.pass;
        self.evidence.push(row);
    }

    /// Look up an observation by name (first match).
    pub fn observation(&self, name: &str) -> Option<f64> {
        self.observed
            .iter()
            .find(|o| o.name == name)
            .map(|o| o.value)
    }
}
