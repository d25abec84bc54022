//! JSON exchange format for labelings.
//!
//! ```json
//! {
//!   "n": 4,
//!   "center": 5,
//!   "vertices": [2, 6, 8, 4],
//!   "midpoints": [7, 1, 3, 9]
//! }
//! ```
//!
//! `vertices[i - 1]` holds `vi` (clockwise) and `midpoints[i - 1]` holds the
//! midpoint between `vi` and `v(i+1)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::polygon::{Labeling, MIN_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub n: usize,
    pub center: i64,
    pub vertices: Vec<i64>,
    pub midpoints: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldIssue {
    pub field: String,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed labeling document: {0}")]
    Syntax(#[from] serde_json::Error),

    #[error("invalid labeling document: {}", format_issues(.0))]
    Invalid(Vec<FieldIssue>),
}

fn format_issues(issues: &[FieldIssue]) -> String {
    issues
        .iter()
        .map(|i| format!("{}: {}", i.field, i.message))
        .collect::<Vec<_>>()
        .join("; ")
}

impl LabelingDocument {
    pub fn from_labeling(labeling: &Labeling) -> Result<Self, Error> {
        let slots = labeling.complete_slots().ok_or_else(|| Error::Incomplete {
            missing: labeling.missing_nodes(),
        })?;
        let n = labeling.n();
        Ok(LabelingDocument {
            n,
            center: slots[0],
            vertices: slots[1..=n].to_vec(),
            midpoints: slots[n + 1..].to_vec(),
        })
    }

    /// Parses and validates a document: array lengths must equal `n` and
    /// every value must lie in `1..=2n+1`. Repeated values are accepted here
    /// and reported by verification.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: LabelingDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        let mut issues = Vec::new();
        let mut issue = |field: String, message: String| issues.push(FieldIssue { field, message });
        if self.n < MIN_ORDER {
            issue(
                "n".into(),
                format!("must be at least {MIN_ORDER}, got {}", self.n),
            );
        }
        for (name, values) in [("vertices", &self.vertices), ("midpoints", &self.midpoints)] {
            if values.len() != self.n {
                issue(
                    name.into(),
                    format!("expected {} entries, found {}", self.n, values.len()),
                );
            }
        }
        let max = 2 * self.n as i64 + 1;
        let mut check = |field: String, v: i64| {
            if !(1..=max).contains(&v) {
                issue(field, format!("value {v} outside 1..={max}"));
            }
        };
        check("center".into(), self.center);
        for (i, &v) in self.vertices.iter().enumerate() {
            check(format!("vertices[{i}]"), v);
        }
        for (i, &v) in self.midpoints.iter().enumerate() {
            check(format!("midpoints[{i}]"), v);
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(DocumentError::Invalid(issues))
        }
    }

    pub fn to_labeling(&self) -> Result<Labeling, DocumentError> {
        self.validate()?;
        Ok(
            Labeling::from_parts(self.n, self.center, &self.vertices, &self.midpoints)
                .expect("validated document"),
        )
    }

    /// Canonical formatting: pretty-printed, fields in declaration order,
    /// newline-terminated.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }
}
