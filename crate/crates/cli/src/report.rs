//! Reports shared by every command. The text form is rendered from the same
//! fields that the JSON form serializes.

use std::collections::BTreeMap;
use std::fmt::Write;

use loday_core::graded::{Element, Word};
use loday_core::scalar::format_scalar;
use loday_core::{GradedBasis, Scalar};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub word: String,
    pub coefficient: String,
}

/// A counterexample: what failed, and the nonzero residual it left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub note: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<Term>,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Self {
        Witness {
            note: note.into(),
            terms: Vec::new(),
        }
    }

    pub fn with_element(note: impl Into<String>, x: &Element) -> Self {
        Witness {
            note: note.into(),
            terms: terms_of(x),
        }
    }

    pub fn with_value(note: impl Into<String>, basis: &GradedBasis, w: &Word, c: &Scalar) -> Self {
        Witness {
            note: note.into(),
            terms: vec![Term {
                word: w.display(basis).to_string(),
                coefficient: format_scalar(c),
            }],
        }
    }
}

pub fn terms_of(x: &Element) -> Vec<Term> {
    x.terms()
        .map(|(w, c)| Term {
            word: w.display(x.basis()).to_string(),
            coefficient: format_scalar(c),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn new(id: impl Into<String>, name: impl Into<String>) -> Self {
        Verdict {
            id: id.into(),
            name: name.into(),
            passed: true,
            checked: 0,
            counts: BTreeMap::new(),
            witness: None,
        }
    }

    /// Records one check; the first failure keeps its witness.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
            self.passed = false;
        }
    }

    pub fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    pub fn fail(&mut self, witness: Witness) {
        self.passed = false;
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }
}

/// Named data a command produces, such as an expanded function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<Term>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<String>,
}

impl Output {
    pub fn element(name: impl Into<String>, x: &Element) -> Self {
        Output {
            name: name.into(),
            terms: terms_of(x),
            lines: Vec::new(),
        }
    }

    pub fn text(name: impl Into<String>, text: &str) -> Self {
        Output {
            name: name.into(),
            terms: Vec::new(),
            lines: text.lines().map(str::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub sign_convention: String,
    pub seed: Option<u64>,
    pub inputs_digest: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<Output>,
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
}

pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for part in inputs {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part);
    }
    h.finalize().iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl Report {
    pub fn new(command: &str, sign_convention: &str, seed: Option<u64>, inputs: &[&[u8]]) -> Self {
        Report {
            command: command.to_string(),
            version: VERSION.to_string(),
            sign_convention: sign_convention.to_string(),
            seed,
            inputs_digest: format!("sha256:{}", digest(inputs)),
            parameters: BTreeMap::new(),
            outputs: Vec::new(),
            verdicts: Vec::new(),
            passed: true,
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, v: Verdict) {
        self.passed &= v.passed;
        self.verdicts.push(v);
    }

    pub fn output(&mut self, o: Output) {
        self.outputs.push(o);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let seed = self.seed.map_or("none".to_string(), |x| x.to_string());
        let _ = writeln!(
            s,
            "loday {} {}  sign convention {}  seed {}",
            self.command, self.version, self.sign_convention, seed
        );
        let _ = writeln!(s, "inputs {}", self.inputs_digest);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "{k} = {v}");
        }
        for o in &self.outputs {
            let _ = writeln!(s);
            if o.terms.is_empty() && o.lines.is_empty() {
                let _ = writeln!(s, "{} = 0", o.name);
            }
            if !o.terms.is_empty() {
                let _ = writeln!(s, "{} =", o.name);
                for t in &o.terms {
                    let _ = writeln!(s, "  {:>8}  {}", t.coefficient, t.word);
                }
            }
            if !o.lines.is_empty() {
                let _ = writeln!(s, "{}:", o.name);
                for line in &o.lines {
                    if line.is_empty() {
                        s.push('\n');
                    } else {
                        let _ = writeln!(s, "  {line}");
                    }
                }
            }
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(s);
        }
        for v in &self.verdicts {
            let counts: Vec<String> = v.counts.iter().map(|(k, n)| format!("{k} {n}")).collect();
            let extra = if counts.is_empty() { String::new() } else { format!("; {}", counts.join(", ")) };
            let _ = writeln!(
                s,
                "[{}] {:>2} {}  ({} checks{})",
                if v.passed { "PASS" } else { "FAIL" },
                v.id,
                v.name,
                v.checked,
                extra
            );
            if let Some(w) = &v.witness {
                let _ = writeln!(s, "       witness: {}", w.note);
                for t in &w.terms {
                    let _ = writeln!(s, "         {:>8}  {}", t.coefficient, t.word);
                }
            }
        }
        if self.verdicts.is_empty() {
            return s;
        }
        let passed = self.verdicts.iter().filter(|v| v.passed).count();
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "{}: {passed}/{} checks passed",
            if self.passed { "PASS" } else { "FAIL" },
            self.verdicts.len()
        );
        s
    }
}
