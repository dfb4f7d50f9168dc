//! Report records shared by every subcommand.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use wzcheck_core::Rational;

/// Outcome of one record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
    NotApplicable,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
            Outcome::NotApplicable => "NOT-APPLICABLE",
        }
    }
}

/// Exact rational as decimal strings, so no consumer loses precision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalText {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalText {
    fn from(x: &Rational) -> Self {
        RationalText {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

impl std::fmt::Display for RationalText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == "1" {
            f.write_str(&self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub kind: &'static str,
    /// Named integer parameters in a fixed order.
    #[serde(serialize_with = "ordered_map")]
    pub params: Vec<(String, i64)>,
    /// Free-form tag that completes the parameter tuple (theorem, certificate, statement).
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<RationalText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<RationalText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum: Option<RationalText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    pub status: Outcome,
    /// `PROVEN-REF` or `CONJECTURE` for congruence records.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<&'static str>,
    /// Whether the record takes part in the exit code.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<RationalText>>,
    pub elapsed_ms: Option<f64>,
}

impl Record {
    pub fn new(
        kind: &'static str,
        subject: impl Into<String>,
        params: &[(&str, i64)],
        status: Outcome,
    ) -> Self {
        Record {
            kind,
            params: params.iter().map(|(k, v)| ((*k).to_string(), *v)).collect(),
            subject: subject.into(),
            lhs: None,
            rhs: None,
            sum: None,
            expected: None,
            modulus: None,
            residue: None,
            status,
            claim: None,
            asserted: true,
            detail: None,
            trace: None,
            elapsed_ms: None,
        }
    }

    pub fn with_sides(mut self, lhs: &Rational, rhs: &Rational) -> Self {
        self.lhs = Some(lhs.into());
        self.rhs = Some(rhs.into());
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn report_only(mut self) -> Self {
        self.asserted = false;
        self
    }

    /// True when this record makes the run fail.
    pub fn is_asserted_failure(&self) -> bool {
        self.asserted && self.status == Outcome::Fail
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn sort_key(&self) -> (&'static str, &str, Vec<i64>) {
        (
            self.kind,
            &self.subject,
            self.params.iter().map(|(_, v)| *v).collect(),
        )
    }
}

fn ordered_map<S: Serializer>(params: &[(String, i64)], ser: S) -> Result<S::Ok, S::Error> {
    let mut map = ser.serialize_map(Some(params.len()))?;
    for (k, v) in params {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

/// Orders records by kind, subject and parameter tuple.
pub fn sort_records(records: &mut [Record]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub asserted_failures: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Self {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.status {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail => s.failed += 1,
                Outcome::Skip => s.skipped += 1,
                Outcome::NotApplicable => s.not_applicable += 1,
            }
            if r.is_asserted_failure() {
                s.asserted_failures += 1;
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.asserted_failures > 0 {
            1
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wzcheck_core::exact::rat;

    #[test]
    fn rational_text_renders_exactly() {
        assert_eq!(RationalText::from(&rat(-6, 4)).to_string(), "-3/2");
        assert_eq!(RationalText::from(&rat(8, 4)).to_string(), "2");
    }

    #[test]
    fn params_keep_their_order_in_json() {
        let r = Record::new(
            "identity",
            "T1",
            &[("l", 2), ("s", 0), ("M", 3)],
            Outcome::Pass,
        );
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""params":{"l":2,"s":0,"M":3}"#));
        assert_eq!(r.params_text(), "l=2 s=0 M=3");
    }

    #[test]
    fn sorting_is_by_kind_subject_and_params() {
        let mut v = vec![
            Record::new("b", "x", &[("n", 2)], Outcome::Pass),
            Record::new("a", "y", &[("n", 1)], Outcome::Pass),
            Record::new("b", "x", &[("n", 10)], Outcome::Pass),
            Record::new("a", "x", &[("n", 3)], Outcome::Pass),
        ];
        sort_records(&mut v);
        let keys: Vec<String> = v
            .iter()
            .map(|r| format!("{}{}{}", r.kind, r.subject, r.params_text()))
            .collect();
        assert_eq!(keys, ["axn=3", "ayn=1", "bxn=2", "bxn=10"]);
    }

    #[test]
    fn only_asserted_failures_set_the_exit_code() {
        let report_only = Record::new("c", "x", &[], Outcome::Fail).report_only();
        assert_eq!(
            Summary::of(std::slice::from_ref(&report_only)).exit_code(),
            0
        );
        let asserted = Record::new("c", "x", &[], Outcome::Fail);
        let s = Summary::of(&[
            report_only,
            asserted,
            Record::new("c", "y", &[], Outcome::Skip),
        ]);
        assert_eq!(
            (s.failed, s.asserted_failures, s.skipped, s.exit_code()),
            (2, 1, 1, 1)
        );
    }
}
