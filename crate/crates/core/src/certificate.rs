//! Line-oriented text form of a [`ChainCertificate`].
//!
//! ```text
//! version = 1
//! steps = 13
//! seed.a = 000011011101110100
//! seed.b = ...
//! seed.c = ...
//! seed.x = 0
//! step.1.y = 1
//! step.1.checks.l_a = pass
//! ...
//! step.1.derived.a = ...
//! ...
//! closure_ok = true
//! ```
//!
//! Every field is `key = value` on its own line; words are written over
//! `{0,1}`. Checking a document re-verifies each claimed step on its own
//! and also requires the document to equal a fresh rendering byte for byte.

use std::collections::BTreeMap;

use crate::algebra::Residue;
use crate::error::CertificateError;
use crate::family::{check_step, verify_chain, ChainCertificate, Quadruplet, StepChecks};
use crate::word::BinaryWord;

pub const FORMAT_VERSION: &str = "1";

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn push_quadruplet(out: &mut String, prefix: &str, q: &Quadruplet) {
    out.push_str(&format!("{prefix}.a = {}\n", q.a));
    out.push_str(&format!("{prefix}.b = {}\n", q.b));
    out.push_str(&format!("{prefix}.c = {}\n", q.c));
    out.push_str(&format!("{prefix}.x = {}\n", q.x));
}

pub fn render(chain: &ChainCertificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("version = {FORMAT_VERSION}\n"));
    out.push_str(&format!("steps = {}\n", chain.steps.len()));
    push_quadruplet(&mut out, "seed", chain.seed());
    for (i, step) in chain.steps.iter().enumerate() {
        let k = i + 1;
        out.push_str(&format!("step.{k}.y = {}\n", step.y));
        for (name, ok) in step.checks.named() {
            out.push_str(&format!("step.{k}.checks.{name} = {}\n", pass(ok)));
        }
        push_quadruplet(&mut out, &format!("step.{k}.derived"), &step.derived);
    }
    out.push_str(&format!("closure_ok = {}\n", chain.closure_ok));
    out
}

/// A step as claimed by a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedStep {
    pub y: Residue,
    pub checks: StepChecks,
    pub derived: Quadruplet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedCertificate {
    pub seed: Quadruplet,
    pub steps: Vec<ClaimedStep>,
    pub closure_ok: bool,
}

struct Fields {
    map: BTreeMap<String, (usize, String)>,
}

impl Fields {
    fn get(&self, key: &str) -> Result<(usize, &str), CertificateError> {
        self.map
            .get(key)
            .map(|(line, v)| (*line, v.as_str()))
            .ok_or_else(|| CertificateError::MissingField(key.to_string()))
    }

    fn word(&self, key: &str) -> Result<BinaryWord, CertificateError> {
        let (line, v) = self.get(key)?;
        v.parse().map_err(|e| CertificateError::Syntax {
            line,
            message: format!("{key}: {e}"),
        })
    }

    fn residue(&self, key: &str) -> Result<Residue, CertificateError> {
        let (line, v) = self.get(key)?;
        match v {
            "0" | "1" | "2" => Ok(Residue::from(v.parse::<u8>().expect("digit"))),
            _ => Err(CertificateError::Syntax {
                line,
                message: format!("{key}: expected 0, 1 or 2"),
            }),
        }
    }

    fn flag(&self, key: &str, yes: &str, no: &str) -> Result<bool, CertificateError> {
        let (line, v) = self.get(key)?;
        match v {
            _ if v == yes => Ok(true),
            _ if v == no => Ok(false),
            _ => Err(CertificateError::Syntax {
                line,
                message: format!("{key}: expected {yes} or {no}"),
            }),
        }
    }

    fn quadruplet(&self, prefix: &str) -> Result<Quadruplet, CertificateError> {
        Ok(Quadruplet::new(
            self.word(&format!("{prefix}.a"))?,
            self.word(&format!("{prefix}.b"))?,
            self.word(&format!("{prefix}.c"))?,
            self.residue(&format!("{prefix}.x"))?,
        ))
    }
}

pub fn parse(text: &str) -> Result<ParsedCertificate, CertificateError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let (key, value) = raw
            .split_once(" = ")
            .ok_or_else(|| CertificateError::Syntax {
                line,
                message: "expected `key = value`".to_string(),
            })?;
        if map
            .insert(key.trim().to_string(), (line, value.trim().to_string()))
            .is_some()
        {
            return Err(CertificateError::Syntax {
                line,
                message: format!("duplicate key {key}"),
            });
        }
    }
    let fields = Fields { map };
    let (_, version) = fields.get("version")?;
    if version != FORMAT_VERSION {
        return Err(CertificateError::Version(version.to_string()));
    }
    let (line, steps) = fields.get("steps")?;
    let steps: usize = steps.parse().map_err(|_| CertificateError::Syntax {
        line,
        message: "steps: expected a count".to_string(),
    })?;
    let seed = fields.quadruplet("seed")?;
    let mut claimed = Vec::with_capacity(steps);
    for k in 1..=steps {
        let flag = |name: &str| fields.flag(&format!("step.{k}.checks.{name}"), "pass", "fail");
        claimed.push(ClaimedStep {
            y: fields.residue(&format!("step.{k}.y"))?,
            checks: StepChecks {
                l_a: flag("l_a")?,
                l_c: flag("l_c")?,
                y_eq: flag("y_eq")?,
                d_ok: flag("d_ok")?,
                e_ok: flag("e_ok")?,
                f_ok: flag("f_ok")?,
            },
            derived: fields.quadruplet(&format!("step.{k}.derived"))?,
        });
    }
    let closure_ok = fields.flag("closure_ok", "true", "false")?;
    Ok(ParsedCertificate {
        seed,
        steps: claimed,
        closure_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    /// The document equals the rendering of a freshly computed chain.
    pub bit_exact: bool,
    /// Problems found re-checking the claims, empty if none.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.bit_exact && self.failures.is_empty()
    }
}

/// Re-validates a certificate document.
pub fn check(text: &str) -> Result<CheckReport, CertificateError> {
    let parsed = parse(text)?;
    let mut failures = Vec::new();
    let mut source = parsed.seed.clone();
    for (i, step) in parsed.steps.iter().enumerate() {
        let k = i + 1;
        let actual = check_step(&source, &step.derived, step.y);
        for ((name, claimed), (_, ok)) in step.checks.named().into_iter().zip(actual.named()) {
            if !ok {
                failures.push(format!("step {k}: {name} does not hold"));
            } else if !claimed {
                failures.push(format!("step {k}: {name} recorded as failed"));
            }
        }
        source = step.derived.clone();
    }
    let closes = source == parsed.seed.grown();
    if !closes {
        failures.push("chain does not close on (a, a·b·c, c, x)".to_string());
    }
    if parsed.closure_ok != closes {
        failures.push(format!(
            "closure_ok recorded as {} but is {closes}",
            parsed.closure_ok
        ));
    }
    let bit_exact = match verify_chain(&parsed.seed, parsed.steps.len()) {
        Ok(fresh) => render(&fresh) == text,
        Err(e) => {
            failures.push(e.to_string());
            false
        }
    };
    Ok(CheckReport {
        bit_exact,
        failures,
    })
}
