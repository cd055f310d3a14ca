use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One checked theorem instance.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub weight: Option<String>,
    pub typical: Option<bool>,
    pub omega_scalar: Option<String>,
    pub simple_oracle: Option<String>,
    pub agree: bool,
    pub witnesses: Vec<String>,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub skipped: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub algebra: String,
    pub seed: u64,
    pub grid: Option<String>,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        suite: String,
        algebra: String,
        seed: u64,
        grid: Option<String>,
        instances: Vec<Instance>,
    ) -> Self {
        let skipped = instances.iter().filter(|i| i.skipped.is_some()).count();
        let disagreed = instances
            .iter()
            .filter(|i| i.skipped.is_none() && !i.agree)
            .count();
        let summary = Summary {
            instances: instances.len(),
            agreed: instances.len() - skipped - disagreed,
            disagreed,
            skipped,
            passed: disagreed == 0,
        };
        Self {
            suite,
            algebra,
            seed,
            grid,
            instances,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    /// Copy with timings zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> Report {
        let mut out = self.clone();
        for i in &mut out.instances {
            i.ms = 0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let grid = self
            .grid
            .as_deref()
            .map(|g| format!(" grid {g}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "suite {} on {}{grid} (seed {})",
            self.suite, self.algebra, self.seed
        );
        for i in &self.instances {
            let mut fields = vec![i.weight.clone().unwrap_or_else(|| "-".into())];
            if let Some(t) = i.typical {
                fields.push(format!("typical={t}"));
            }
            if let Some(s) = &i.omega_scalar {
                fields.push(format!("omega={s}"));
            }
            if let Some(s) = &i.simple_oracle {
                fields.push(format!("oracle={s}"));
            }
            let status = match (&i.skipped, i.agree) {
                (Some(reason), _) => format!("skipped ({reason})"),
                (None, true) => "ok".into(),
                (None, false) => "MISMATCH".into(),
            };
            fields.push(status);
            if !i.witnesses.is_empty() {
                fields.push(format!("[{}]", i.witnesses.join("; ")));
            }
            let _ = writeln!(out, "  {}", fields.join(" "));
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} instances, {} agreed, {} disagreed, {} skipped",
            if s.passed { "PASS" } else { "FAIL" },
            s.instances,
            s.agreed,
            s.disagreed,
            s.skipped
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let ok = Instance {
            agree: true,
            ..Default::default()
        };
        let bad = Instance {
            agree: false,
            ..Default::default()
        };
        let skipped = Instance {
            skipped: Some("too large".into()),
            ..Default::default()
        };
        let r = Report::new(
            "s".into(),
            "gl(1|1)".into(),
            1,
            None,
            vec![ok.clone(), bad, skipped],
        );
        assert_eq!(
            (r.summary.agreed, r.summary.disagreed, r.summary.skipped),
            (1, 1, 1)
        );
        assert!(!r.passed());
        assert!(Report::new("s".into(), "a".into(), 1, None, vec![]).passed());
        assert!(Report::new("s".into(), "a".into(), 1, None, vec![ok])
            .to_text()
            .contains("PASS"));
    }
}
