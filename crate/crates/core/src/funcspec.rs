//! JSON function specifications.
//!
//! Schema: `{"dim": n, "terms": [...]}` where each term is one of
//!
//! ```json
//! {"type": "monomial", "exponents": [1, 1], "coeff": [1.0, 0.0]}
//! {"type": "ridge", "direction": [[1.0, 0.0], [0.0, 0.0]], "coeffs": [[0.0, 0.0], [1.0, 0.0]]}
//! ```
//!
//! Complex numbers are `[re, im]` pairs. An empty `terms` array is the zero
//! function. Ridge directions must be unit vectors within [`DIRECTION_TOL`];
//! they are renormalized exactly on load.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::functions::{HoloFunction, MonomialTerm, RidgeTerm, Term};
use crate::geometry::Point;
use crate::{Error, Result};

/// How far a ridge direction may be from unit length before the spec is
/// rejected.
pub const DIRECTION_TOL: f64 = 1e-9;

/// The on-disk form of a function.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub dim: usize,
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum TermSpec {
    Monomial {
        exponents: Vec<u32>,
        coeff: [f64; 2],
    },
    Ridge {
        direction: Vec<[f64; 2]>,
        coeffs: Vec<[f64; 2]>,
    },
}

fn complex(pair: [f64; 2]) -> Complex64 {
    Complex64::new(pair[0], pair[1])
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Parse a JSON function spec. Schema violations come back as
/// [`Error::Spec`] with the offending field (or the parser's line/column
/// position for malformed JSON).
pub fn parse_function_spec(text: &str) -> Result<HoloFunction> {
    let spec: FunctionSpec = serde_json::from_str(text)
        .map_err(|e| Error::Spec(format!("function spec: {}", e)))?;
    build_function(&spec)
}

/// Validate a deserialized spec and build the function it describes.
pub fn build_function(spec: &FunctionSpec) -> Result<HoloFunction> {
    if spec.dim == 0 {
        return Err(Error::Spec("function spec: dim must be at least 1".into()));
    }
    let mut terms = Vec::with_capacity(spec.terms.len());
    for (i, term) in spec.terms.iter().enumerate() {
        match term {
            TermSpec::Monomial { exponents, coeff } => {
                if exponents.len() != spec.dim {
                    return Err(Error::Spec(format!(
                        "function spec: terms[{}].exponents: expected {} entries for dim {}, found {}",
                        i,
                        spec.dim,
                        spec.dim,
                        exponents.len()
                    )));
                }
                let t = MonomialTerm::new(exponents.clone(), complex(*coeff))
                    .map_err(|e| Error::Spec(format!("function spec: terms[{}]: {}", i, e)))?;
                terms.push(Term::Monomial(t));
            }
            TermSpec::Ridge { direction, coeffs } => {
                if direction.len() != spec.dim {
                    return Err(Error::Spec(format!(
                        "function spec: terms[{}].direction: expected {} entries for dim {}, found {}",
                        i,
                        spec.dim,
                        spec.dim,
                        direction.len()
                    )));
                }
                let point = Point::new(direction.iter().map(|c| complex(*c)).collect());
                let gap = (point.norm() - 1.0).abs();
                if gap > DIRECTION_TOL {
                    return Err(Error::Spec(format!(
                        "function spec: terms[{}].direction: norm {} is not within {:e} of 1",
                        i,
                        point.norm(),
                        DIRECTION_TOL
                    )));
                }
                let unit = point
                    .normalized()
                    .map_err(|e| Error::Spec(format!("function spec: terms[{}].direction: {}", i, e)))?;
                let t = RidgeTerm::new(unit, coeffs.iter().map(|c| complex(*c)).collect())
                    .map_err(|e| Error::Spec(format!("function spec: terms[{}]: {}", i, e)))?;
                terms.push(Term::Ridge(t));
            }
        }
    }
    HoloFunction::new(spec.dim, terms)
}

/// The spec a function serializes to (inverse of [`build_function`] up to
/// direction normalization).
pub fn function_to_spec(f: &HoloFunction) -> FunctionSpec {
    let terms = f
        .terms()
        .iter()
        .map(|t| match t {
            Term::Monomial(m) => TermSpec::Monomial {
                exponents: m.exponents().to_vec(),
                coeff: pair(m.coeff()),
            },
            Term::Ridge(r) => TermSpec::Ridge {
                direction: r.direction().coords().iter().map(|&z| pair(z)).collect(),
                coeffs: r.coeffs().iter().map(|&z| pair(z)).collect(),
            },
        })
        .collect();
    FunctionSpec {
        dim: f.dim(),
        terms,
    }
}

/// Pretty-printed JSON for a function.
pub fn serialize_function_spec(f: &HoloFunction) -> String {
    serde_json::to_string_pretty(&function_to_spec(f)).expect("function specs serialize")
}
