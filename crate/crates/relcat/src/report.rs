use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub law: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of a verification run: one entry per law, each counting the cases
/// it was evaluated on and keeping the first failing case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new(), notes: Vec::new() }
    }

    fn entry(&mut self, law: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.law == law) {
            Some(p) => p,
            None => {
                self.checks.push(Check { law: law.to_string(), passed: true, cases: 0, witness: None });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    /// Lists a law even if no case ends up exercising it.
    pub fn declare(&mut self, law: &str) {
        self.entry(law);
    }

    pub fn record(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        let c = self.entry(law);
        c.cases += 1;
        if !ok && c.passed {
            c.passed = false;
            c.witness = Some(witness());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends the checks of `other`, prefixing their law names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            let law = if prefix.is_empty() { c.law } else { format!("{prefix}.{}", c.law) };
            let e = self.entry(&law);
            e.cases += c.cases;
            if !c.passed && e.passed {
                e.passed = false;
                e.witness = c.witness;
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn law_passed(&self, law: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.law == law).map(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        let failed = self.failures().count();
        v["summary"] = serde_json::json!({
            "laws": self.checks.len(),
            "passed": self.checks.len() - failed,
            "failed": failed,
        });
        v
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let width = self.checks.iter().map(|c| c.law.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  {:<width$}  {}  ({} cases)", c.law, mark, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} of {} laws passed", self.checks.len() - failed, self.checks.len())
    }
}
