use facering::certify::{Certificate, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub master_seed: u64,
    pub field: String,
    pub parallel: bool,
}

impl Environment {
    pub fn new(master_seed: u64, field: String) -> Self {
        Environment { version: env!("CARGO_PKG_VERSION").to_string(), master_seed, field, parallel: cfg!(feature = "parallel") }
    }
}

/// One labelled certificate; `subject` names the corpus entry or document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub subject: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub environment: Environment,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Value>,
    pub entries: Vec<Entry>,
    /// Checks skipped because they do not apply, with the reason.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<(String, String)>,
}

impl RunReport {
    pub fn new(command: &str, environment: Environment) -> Self {
        RunReport { command: command.to_string(), environment, analysis: None, entries: Vec::new(), skipped: Vec::new() }
    }

    pub fn push(&mut self, subject: &str, certificate: Certificate) {
        self.entries.push(Entry { subject: subject.to_string(), certificate });
    }

    pub fn failed(&self) -> bool {
        self.entries.iter().any(|e| e.certificate.verdict == Verdict::Fail)
    }

    /// Stable order: subject, then check name.
    pub fn canonicalize(&mut self) {
        self.entries.sort_by(|a, b| (&a.subject, &a.certificate.check).cmp(&(&b.subject, &b.certificate.check)));
        self.skipped.sort();
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.entries.iter().filter(|e| e.certificate.verdict == v).count()
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        if let Some(a) = &self.analysis {
            out.push_str(&serde_json::to_string_pretty(a).expect("values serialize"));
            out.push('\n');
        }
        if !self.entries.is_empty() {
            let w = self.entries.iter().map(|e| e.subject.len()).max().unwrap_or(0).max(7);
            out.push_str(&format!("{:<w$}  {:<28} {:<12} {:<24} {:>8}\n", "subject", "check", "verdict", "error bound", "ms"));
            for e in &self.entries {
                let c = &e.certificate;
                let bound =
                    if c.error_probability_bound.numerator == 0 { "0".to_string() } else { format!("2^{:.1}", c.error_probability_bound.log2()) };
                out.push_str(&format!("{:<w$}  {:<28} {:<12} {:<24} {:>8}\n", e.subject, c.check, c.verdict.to_string(), bound, c.runtime_ms));
            }
        }
        for (what, why) in &self.skipped {
            out.push_str(&format!("skipped {what}: {why}\n"));
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} report-only (field {}, seed {})\n",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::ReportOnly),
            self.environment.field,
            self.environment.master_seed
        ));
        out
    }
}
