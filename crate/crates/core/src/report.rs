//! Report rendering (CSV and JSON) and atomic file output.
//!
//! A report is the full set of check verdicts from one `verify` run plus a
//! metadata block. Everything except the metadata timestamp is a pure
//! function of (suite, dim, plan, seed), so two runs with the same
//! configuration produce byte-identical output once the timestamp is
//! excluded; [`Report::comparable_json`] does exactly that.

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::harness::CheckResult;
use crate::sampling::SamplingPlan;
use crate::{Error, Result};

/// The fixed CSV column order.
pub const CSV_HEADER: &str =
    "check_id,function_id,kind,alpha,lambda,convention,value,witness_radius,ratio_name,ratio_value,pass";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMetadata {
    /// Seconds since the Unix epoch at render time — the one field excluded
    /// from determinism comparisons.
    pub timestamp: u64,
    pub suite: String,
    pub dim: usize,
    pub seed: u64,
    pub plan_fingerprint: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub metadata: ReportMetadata,
    pub records: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: &str, dim: usize, plan: &SamplingPlan, records: Vec<CheckResult>) -> Report {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Report {
            metadata: ReportMetadata {
                timestamp,
                suite: suite.to_string(),
                dim,
                seed: plan.seed(),
                plan_fingerprint: plan.fingerprint(),
            },
            records,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Spec(format!("report: {}", e)))
    }

    /// The JSON form with the timestamp zeroed, for byte-for-byte
    /// reproducibility comparisons.
    pub fn comparable_json(&self) -> String {
        let mut copy = self.clone();
        copy.metadata.timestamp = 0;
        copy.to_json()
    }

    /// Flatten every evidence row into the fixed CSV schema.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for record in &self.records {
            for row in &record.evidence {
                let fields = [
                    csv_escape(&record.check_id),
                    csv_escape(&row.function_id),
                    csv_escape(&row.kind),
                    fmt_opt(row.alpha),
                    fmt_opt(row.lambda),
                    csv_escape(&row.convention),
                    fmt_f64(row.value),
                    fmt_opt(row.witness_radius),
                    csv_escape(&row.ratio_name),
                    fmt_opt(row.ratio_value),
                    row.pass.to_string(),
                ];
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
        out
    }
}

fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{}", v)
    } else {
        // CSV has no NaN/inf literals that survive every consumer; spell
        // them out
        format!("{:?}", v)
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Write via a temporary file in the destination directory plus an atomic
/// rename, so readers never observe a partial report.
pub fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let io_err = |source: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(dir) => tempfile::NamedTempFile::new_in(dir),
        None => tempfile::NamedTempFile::new_in("."),
    }
    .map_err(io_err)?;
    tmp.write_all(content.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Evidence;

    fn sample_report(seed: u64) -> Report {
        let plan = SamplingPlan::new(4, 2, 10, 8, seed).unwrap();
        let mut check = CheckResult::new("equivalence[coordinate(n2),alpha=0.5]".into(), 1e-12, &plan);
        check.observe("max_ratio_s1_s2", 2.598);
        let mut row = Evidence::blank("x1");
        row.kind = "S1".into();
        row.alpha = Some(0.5);
        row.convention = "ONE_MINUS_NORM".into();
        row.value = 1.0;
        // a value whose shortest decimal is 17 digits: catches any float
        // parser that is not correctly rounded
        row.witness_radius = Some(1.0 - 2.0f64.powi(-16));
        row.ratio_name = "s1_over_s2".into();
        row.ratio_value = Some(2.598);
        check.push_evidence(row);
        let mut bad = Evidence::blank("x2");
        bad.kind = "ratio".into();
        bad.pass = false;
        check.push_evidence(bad);
        Report::new("equivalence", 2, &plan, vec![check])
    }

    #[test]
    fn csv_has_fixed_header_and_quotes_commas() {
        let report = sample_report(7);
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let first = lines.next().unwrap();
        // the check id contains a comma and must arrive quoted
        assert!(first.starts_with("\"equivalence[coordinate(n2),alpha=0.5]\","));
        assert!(
            first.contains(",S1,0.5,,ONE_MINUS_NORM,1,0.9999847412109375,s1_over_s2,2.598,true"),
            "{}",
            first
        );
        let second = lines.next().unwrap();
        assert!(second.ends_with(",false"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn json_round_trips_exactly() {
        let report = sample_report(7);
        let back = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert!(!report.all_pass());
    }

    #[test]
    fn comparable_json_ignores_only_the_timestamp() {
        let mut a = sample_report(7);
        let mut b = sample_report(7);
        a.metadata.timestamp = 111;
        b.metadata.timestamp = 999;
        assert_eq!(a.comparable_json(), b.comparable_json());
        let c = sample_report(8);
        assert_ne!(a.comparable_json(), c.comparable_json());
    }

    #[test]
    fn rejects_malformed_report_json() {
        let err = Report::from_json("{\"metadata\":").unwrap_err();
        assert!(err.to_string().contains("report:"), "{}", err);
    }

    #[test]
    fn atomic_write_replaces_existing_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "first\n").unwrap();
        write_atomic(&path, "second\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "second\n");
    }
}
