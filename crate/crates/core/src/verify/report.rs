//! Structured pass/fail reports.

use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};

use crate::field::FieldSpec;
use crate::repmod::Method;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub char: u32,
    pub degree: u8,
}

impl From<FieldSpec> for FieldInfo {
    fn from(s: FieldSpec) -> Self {
        FieldInfo {
            char: s.characteristic,
            degree: s.degree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub label: String,
    pub paper_ref: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub field: FieldInfo,
    pub m: usize,
    pub claims: Vec<Claim>,
    pub pass: bool,
    /// Dimensions of the main composition chain, for text output.
    #[serde(skip)]
    pub ladder: Vec<usize>,
}

pub const EXACT: &str = "exact";

impl Report {
    pub fn new(case: &str, field: FieldSpec, m: usize) -> Self {
        Report {
            case: case.to_string(),
            field: field.into(),
            m,
            claims: Vec::new(),
            pass: true,
            ladder: Vec::new(),
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.pass &= claim.pass;
        self.claims.push(claim);
    }

    /// Records `expected == computed`.
    pub fn check<T: PartialEq + Display>(
        &mut self,
        label: &str,
        paper_ref: &str,
        expected: T,
        computed: T,
        method: &str,
    ) -> bool {
        let pass = expected == computed;
        self.push(Claim {
            label: label.into(),
            paper_ref: paper_ref.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            method: method.into(),
        });
        pass
    }

    /// Records a boolean property expected to hold.
    pub fn holds(&mut self, label: &str, paper_ref: &str, computed: bool, method: &str) -> bool {
        self.check(label, paper_ref, true, computed, method)
    }

    /// Records an irreducibility or simplicity certificate.
    pub fn certified(
        &mut self,
        label: &str,
        paper_ref: &str,
        expected: bool,
        computed: Option<&Method>,
        detail: &str,
    ) -> bool {
        let (value, method) = match computed {
            Some(m) => (m.is_certified(), m.to_string()),
            None => (false, detail.to_string()),
        };
        let pass = value == expected;
        self.push(Claim {
            label: label.into(),
            paper_ref: paper_ref.into(),
            expected: expected.to_string(),
            computed: value.to_string(),
            pass,
            method,
        });
        pass
    }

    /// A claim that could not be evaluated.
    pub fn error(&mut self, label: &str, paper_ref: &str, err: impl Display) {
        self.push(Claim {
            label: label.into(),
            paper_ref: paper_ref.into(),
            expected: "evaluated".into(),
            computed: format!("error: {err}"),
            pass: false,
            method: EXACT.into(),
        });
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let field = match (self.field.char, self.field.degree) {
            (0, _) => "Q".to_string(),
            (p, 1) => format!("GF({p})"),
            (p, d) => format!("GF({p}^{d})"),
        };
        let _ = writeln!(out, "case {} over {} with m = {}", self.case, field, self.m);
        if !self.ladder.is_empty() {
            let ladder: Vec<String> = self.ladder.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "  chain dims: {}", ladder.join(" < "));
        }
        for c in &self.claims {
            let mark = if c.pass { "✓" } else { "✗" };
            let _ = writeln!(
                out,
                "  {mark} {} [{}]: expected {}, computed {} ({})",
                c.label, c.paper_ref, c.expected, c.computed, c.method
            );
        }
        let _ = writeln!(out, "  {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Renders a list of dimensions as `[a, b, c]`.
pub fn dims(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("[{}]", s.join(", "))
}
