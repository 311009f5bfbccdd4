//! Certified derivations: a start element, a list of multiply/conjugate
//! steps by elements claimed to centralise `α₁^j`, and the element reached.
//!
//! Every expression in a trace is a word in the DSL. Replaying a trace
//! checks each centraliser claim with [`Model::commutes`] and each claimed
//! intermediate result with [`Model::equal`].

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::dsl::{parse, Atom, Expr, ParseError};
use crate::framed::{Evidence, Model, ModelElement, ModelError};
use crate::report::VerificationReport;

pub const TRACE_VERSION: u32 = 1;

/// The shipped derivation of `σ₃` from `α₁ʳ` through centraliser elements.
pub const SIGMA3_FIXTURE: &str = include_str!("../fixtures/sigma3.trace");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepOp {
    /// `x ← x · m`
    RightMultiply,
    /// `x ← m · x`
    LeftMultiply,
    /// `x ← m · x · m⁻¹`
    Conjugate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: StepOp,
    pub multiplier: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<u8>,
    pub claim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTrace {
    pub version: u32,
    pub start: String,
    /// Optional claim that the start element itself centralises `α₁^j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_centralizer: Option<u8>,
    pub steps: Vec<TraceStep>,
    #[serde(rename = "final")]
    pub final_element: String,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("malformed trace: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported trace version {0}")]
    Version(u32),
    #[error("malformed trace: {field}: {source}")]
    Expression {
        field: String,
        #[source]
        source: ParseError,
    },
    #[error("malformed trace: {field}: centralizer power must be 2 or 3, got {power}")]
    Centralizer { field: String, power: u8 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl DerivationTrace {
    pub fn from_json(text: &str) -> Result<Self, TraceError> {
        let trace: DerivationTrace = serde_json::from_str(text)?;
        trace.validate()?;
        Ok(trace)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialises")
    }

    pub fn sigma3() -> Self {
        DerivationTrace::from_json(SIGMA3_FIXTURE).expect("shipped fixture is well-formed")
    }

    fn fields(&self) -> impl Iterator<Item = (String, &str)> {
        std::iter::once(("start".to_string(), self.start.as_str()))
            .chain(self.steps.iter().enumerate().flat_map(|(i, s)| {
                [
                    (format!("steps[{i}].multiplier"), s.multiplier.as_str()),
                    (format!("steps[{i}].claim"), s.claim.as_str()),
                ]
            }))
            .chain(std::iter::once(("final".to_string(), self.final_element.as_str())))
    }

    /// Checks version, expression syntax and centraliser powers.
    pub fn validate(&self) -> Result<(), TraceError> {
        if self.version != TRACE_VERSION {
            return Err(TraceError::Version(self.version));
        }
        for (field, text) in self.fields() {
            parse(text).map_err(|source| TraceError::Expression { field, source })?;
        }
        let powers = std::iter::once(("start_centralizer".to_string(), self.start_centralizer)).chain(
            self.steps
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("steps[{i}].centralizer"), s.centralizer)),
        );
        for (field, power) in powers {
            if let Some(p) = power {
                if p != 2 && p != 3 {
                    return Err(TraceError::Centralizer { field, power: p });
                }
            }
        }
        Ok(())
    }
}

/// Why a well-formed trace failed to replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TraceFailure {
    /// `step` is `None` for the start element.
    CentralizerClaim {
        step: Option<usize>,
        power: u8,
        evidence: Evidence,
    },
    ClaimMismatch { step: usize, evidence: Evidence },
    FinalMismatch { evidence: Evidence },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivationReport {
    pub failures: Vec<TraceFailure>,
    pub report: VerificationReport,
}

impl DerivationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn expr(field: &str, text: &str) -> Result<Expr, TraceError> {
    parse(text).map_err(|source| TraceError::Expression {
        field: field.to_string(),
        source,
    })
}

pub fn verify_derivation(model: &Model, trace: &DerivationTrace) -> Result<DerivationReport, TraceError> {
    trace.validate()?;
    let mut report = VerificationReport::new("derivation");
    let mut failures = Vec::new();
    let alpha1 = model.named(Atom::A1)?;
    let central = |j: u8| model.pow(&alpha1, j as i64);

    let mut current = model.eval(&expr("start", &trace.start)?)?;
    if let Some(j) = trace.start_centralizer {
        let ev = model.commutes(&current, &central(j)?)?;
        report.push(
            format!("start: {} in C(a1^{j})", trace.start),
            ev.is_equal(),
            json!({ "result": ev }),
        );
        if !ev.is_equal() {
            failures.push(TraceFailure::CentralizerClaim { step: None, power: j, evidence: ev });
        }
    }

    for (i, step) in trace.steps.iter().enumerate() {
        let m = model.eval(&expr(&format!("steps[{i}].multiplier"), &step.multiplier)?)?;
        if let Some(j) = step.centralizer {
            let ev = model.commutes(&m, &central(j)?)?;
            report.push(
                format!("step {}: {} in C(a1^{j})", i + 1, step.multiplier),
                ev.is_equal(),
                json!({ "result": ev }),
            );
            if !ev.is_equal() {
                failures.push(TraceFailure::CentralizerClaim {
                    step: Some(i + 1),
                    power: j,
                    evidence: ev,
                });
            }
        }
        current = apply_step(model, step.op, &current, &m)?;
        let claim = model.eval(&expr(&format!("steps[{i}].claim"), &step.claim)?)?;
        let ev = model.equal(&current, &claim)?;
        report.push(
            format!("step {}: result = {}", i + 1, step.claim),
            ev.is_equal(),
            json!({ "op": step.op, "result": ev }),
        );
        if !ev.is_equal() {
            failures.push(TraceFailure::ClaimMismatch { step: i + 1, evidence: ev });
        }
    }

    let fin = model.eval(&expr("final", &trace.final_element)?)?;
    let ev = model.equal(&current, &fin)?;
    report.push(
        format!("final = {}", trace.final_element),
        ev.is_equal(),
        json!({ "result": ev }),
    );
    if !ev.is_equal() {
        failures.push(TraceFailure::FinalMismatch { evidence: ev });
    }
    Ok(DerivationReport { failures, report })
}

fn apply_step(
    model: &Model,
    op: StepOp,
    x: &ModelElement,
    m: &ModelElement,
) -> Result<ModelElement, ModelError> {
    match op {
        StepOp::RightMultiply => model.mul(x, m),
        StepOp::LeftMultiply => model.mul(m, x),
        StepOp::Conjugate => model.conjugate(x, m),
    }
}

/// Conjugates every element of the trace by `g`. Operations and
/// centraliser claims carry over unchanged.
pub fn conjugate_trace(trace: &DerivationTrace, g: &Expr) -> Result<DerivationTrace, TraceError> {
    trace.validate()?;
    if matches!(g, Expr::Atom(Atom::Id)) {
        return Ok(trace.clone());
    }
    let conj = |field: &str, text: &str| -> Result<String, TraceError> {
        Ok(expr(field, text)?.conjugate_by(g).to_string())
    };
    Ok(DerivationTrace {
        version: trace.version,
        start: conj("start", &trace.start)?,
        start_centralizer: trace.start_centralizer,
        steps: trace
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Ok(TraceStep {
                    op: s.op,
                    multiplier: conj(&format!("steps[{i}].multiplier"), &s.multiplier)?,
                    centralizer: s.centralizer,
                    claim: conj(&format!("steps[{i}].claim"), &s.claim)?,
                })
            })
            .collect::<Result<_, TraceError>>()?,
        final_element: conj("final", &trace.final_element)?,
    })
}
