//! Certification of the growing family `aⁿ b cᵐ`.
//!
//! A [`Quadruplet`] `(a, b, c, x)` stands for every word `(aⁿ b cᵐ)[x]` at
//! once. When `l(a) = l(c) = 0`, one pass maps that whole family onto the
//! family of `(g(a[x]), g(b[x]), g(c[y]), y)` with `y = x - l(b)`, for all
//! `n` and `m`. Chaining such steps until the quadruplet comes back as
//! `(a, a·b·c, c, x)` shows that every member grows.

use crate::algebra::{cut, length_residue, pass_steps, sample_produce, Residue, MIN_PASS_LEN};
use crate::constants::{omega_table, word_a, word_b, word_c};
use crate::error::FamilyError;
use crate::tag::{run, RunOutcome, TagRules};
use crate::word::BinaryWord;

/// Default budget for direct checks of the growth statement.
pub const DEFAULT_DIRECT_BUDGET: u64 = 200_000;

/// Number of steps in the published chain.
pub const CHAIN_STEPS: usize = 13;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadruplet {
    pub a: BinaryWord,
    pub b: BinaryWord,
    pub c: BinaryWord,
    pub x: Residue,
}

impl Quadruplet {
    pub fn new(a: BinaryWord, b: BinaryWord, c: BinaryWord, x: Residue) -> Self {
        Self { a, b, c, x }
    }

    /// `(a, b, c, 0)` with the embedded words.
    pub fn standard_seed() -> Self {
        Self::new(word_a(), word_b(), word_c(), Residue::ZERO)
    }

    /// The quadruplet the chain has to return to: `(a, a·b·c, c, x)`.
    pub fn grown(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.a.concat(&self.b).concat(&self.c),
            self.c.clone(),
            self.x,
        )
    }
}

/// Outcome of each side condition of one step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct StepChecks {
    pub l_a: bool,
    pub l_c: bool,
    pub y_eq: bool,
    pub d_ok: bool,
    pub e_ok: bool,
    pub f_ok: bool,
}

impl StepChecks {
    pub fn all(&self) -> bool {
        self.l_a && self.l_c && self.y_eq && self.d_ok && self.e_ok && self.f_ok
    }

    /// `(name, passed)` in document order.
    pub fn named(&self) -> [(&'static str, bool); 6] {
        [
            ("l_a", self.l_a),
            ("l_c", self.l_c),
            ("y_eq", self.y_eq),
            ("d_ok", self.d_ok),
            ("e_ok", self.e_ok),
            ("f_ok", self.f_ok),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCertificate {
    pub source: Quadruplet,
    pub derived: Quadruplet,
    pub y: Residue,
    pub checks: StepChecks,
}

impl StepCertificate {
    pub fn is_valid(&self) -> bool {
        self.checks.all() && self.derived.x == self.y
    }
}

/// Re-checks a claimed step `source -> (derived, y)` against the side conditions.
pub fn check_step(source: &Quadruplet, derived: &Quadruplet, y: Residue) -> StepChecks {
    let recompute = |w: &BinaryWord, k: Residue| cut(w, k).ok().map(|s| sample_produce(&s));
    StepChecks {
        l_a: length_residue(&source.a) == Residue::ZERO,
        l_c: length_residue(&source.c) == Residue::ZERO,
        y_eq: source.x - length_residue(&source.b) == y && derived.x == y,
        d_ok: recompute(&source.a, source.x).as_ref() == Some(&derived.a),
        e_ok: recompute(&source.b, source.x).as_ref() == Some(&derived.b),
        f_ok: recompute(&source.c, y).as_ref() == Some(&derived.c),
    }
}

/// Derives the next quadruplet and records the side conditions.
pub fn derive_next(q: &Quadruplet) -> Result<StepCertificate, FamilyError> {
    for (name, w) in [("a", &q.a), ("b", &q.b), ("c", &q.c)] {
        if w.len() < MIN_PASS_LEN {
            return Err(FamilyError::InvariantViolated(format!(
                "{name} has length {} < {MIN_PASS_LEN}",
                w.len()
            )));
        }
    }
    for (name, w) in [("a", &q.a), ("c", &q.c)] {
        let l = length_residue(w);
        if l != Residue::ZERO {
            return Err(FamilyError::InvariantViolated(format!(
                "l({name}) = {l}, not 0"
            )));
        }
    }
    let y = q.x - length_residue(&q.b);
    let derived = Quadruplet::new(
        sample_produce(&cut(&q.a, q.x)?),
        sample_produce(&cut(&q.b, q.x)?),
        sample_produce(&cut(&q.c, y)?),
        y,
    );
    let checks = check_step(q, &derived, y);
    Ok(StepCertificate {
        source: q.clone(),
        derived,
        y,
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    /// Seed followed by every derived quadruplet.
    pub quadruplets: Vec<Quadruplet>,
    pub steps: Vec<StepCertificate>,
    pub closure_ok: bool,
}

impl ChainCertificate {
    pub fn seed(&self) -> &Quadruplet {
        &self.quadruplets[0]
    }

    pub fn is_valid(&self) -> bool {
        self.closure_ok && self.steps.iter().all(StepCertificate::is_valid)
    }

    /// Human-readable reasons the chain does not certify, empty if it does.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            for (name, ok) in step.checks.named() {
                if !ok {
                    out.push(format!("step {}: {name} failed", i + 1));
                }
            }
        }
        if !self.closure_ok {
            out.push("closure failed".to_string());
        }
        out
    }

    /// Tag iterations one trip around the chain takes for `(aⁿ b cᵐ)[x]`.
    pub fn tag_iterations(&self, n: usize, m: usize) -> u64 {
        self.quadruplets[..self.steps.len()]
            .iter()
            .map(|q| pass_steps(instantiated_len(q, n, m)) as u64)
            .sum()
    }
}

/// Applies [`derive_next`] `steps` times and compares the result with the grown seed.
pub fn verify_chain(seed: &Quadruplet, steps: usize) -> Result<ChainCertificate, FamilyError> {
    let mut quadruplets = vec![seed.clone()];
    let mut certs = Vec::with_capacity(steps);
    for _ in 0..steps {
        let cert = derive_next(quadruplets.last().expect("non-empty"))?;
        quadruplets.push(cert.derived.clone());
        certs.push(cert);
    }
    let closure_ok = *quadruplets.last().expect("non-empty") == seed.grown();
    Ok(ChainCertificate {
        quadruplets,
        steps: certs,
        closure_ok,
    })
}

fn instantiated_len(q: &Quadruplet, n: usize, m: usize) -> usize {
    (n * q.a.len() + q.b.len() + m * q.c.len()).saturating_sub(q.x.value() as usize)
}

/// `(aⁿ b cᵐ)[x]` by explicit concatenation.
pub fn instantiate(q: &Quadruplet, n: usize, m: usize) -> BinaryWord {
    let mut w = BinaryWord::with_capacity(n * q.a.len() + q.b.len() + m * q.c.len());
    for _ in 0..n {
        w.extend_from(&q.a);
    }
    w.extend_from(&q.b);
    for _ in 0..m {
        w.extend_from(&q.c);
    }
    let k = (q.x.value() as usize).min(w.len());
    w.drop_front(k).expect("k <= len")
}

/// Simulates from `aⁿ b cᵐ` looking for `aⁿ⁺¹ b cᵐ⁺¹`.
pub fn verify_theorem_direct(n: usize, m: usize, budget: u64) -> Result<RunOutcome, FamilyError> {
    let seed = Quadruplet::standard_seed();
    let start = instantiate(&seed, n, m);
    let target = instantiate(&seed, n + 1, m + 1);
    Ok(run(&start, &TagRules::post(), budget, Some(&target))?)
}

/// Indices (1-based) where the chain's `(a_i, c_i, x_i)` differ from the published table.
pub fn table_mismatches(chain: &ChainCertificate) -> Vec<usize> {
    let table = omega_table();
    let mut bad: Vec<usize> = chain
        .quadruplets
        .iter()
        .zip(&table)
        .enumerate()
        .filter(|(_, (q, row))| q.a != row.a || q.c != row.c || q.x != row.x)
        .map(|(i, _)| i + 1)
        .collect();
    for i in chain.quadruplets.len().min(table.len())..chain.quadruplets.len().max(table.len()) {
        bad.push(i + 1);
    }
    bad
}
