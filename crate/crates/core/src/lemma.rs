//! The relation suite for the generators `R`, `σ_i`, `ρ`, `α₁`, `α₂`.

use serde_json::json;

use crate::dsl::parse;
use crate::framed::{Model, ModelElement, ModelError};
use crate::report::VerificationReport;

/// The chain of rewrites showing `α₂⁵ = 1`, one line per equality.
pub const ALPHA2_CHAIN: [&str; 11] = [
    "a2^5",
    "a1 s5 R a1 s5 R a1 s5 R a1 s5 R a1 s5 R",
    "a1 s5 a1 s5 a1 s5 a1 s5 a1 s5 R^5",
    "s6 a1^2 s5 a1 s5 a1 s5 a1 s5 R^5",
    "s6 s1 a1^3 s5 a1 s5 a1 s5 R^5",
    "s6 s1 s2 a1^4 s5 a1 s5 R^5",
    "s6 s1 s2 s3 a1^5 s5 R^5",
    "s6 s1 s2 s3 s4 a1^5 R^5",
    "rho a1^-1 R^5",
    "R^-5 R^5",
    "id",
];

fn el(model: &Model, text: &str) -> Result<ModelElement, ModelError> {
    model.eval(&parse(text).expect("built-in expression parses"))
}

fn check_equal(
    report: &mut VerificationReport,
    model: &Model,
    name: String,
    lhs: &str,
    rhs: &str,
) -> Result<(), ModelError> {
    let ev = model.equal(&el(model, lhs)?, &el(model, rhs)?)?;
    report.push(
        name,
        ev.is_equal(),
        json!({ "lhs": lhs, "rhs": rhs, "result": ev }),
    );
    Ok(())
}

/// Runs all five groups of relations and reports each check.
pub fn verify_lemma_comp(model: &Model) -> Result<VerificationReport, ModelError> {
    let mut report = VerificationReport::new("lemma-comp");

    for i in 1..=6 {
        let ev = model.commutes(&el(model, "R")?, &el(model, &format!("s{i}"))?)?;
        report.push(
            format!("(1) R commutes with s{i}"),
            ev.is_equal(),
            json!({ "result": ev }),
        );
    }

    for i in 1..=6 {
        let next = i % 6 + 1;
        check_equal(
            &mut report,
            model,
            format!("(2) a1 s{i} a1^-1 = s{next}"),
            &format!("a1 s{i} a1^-1"),
            &format!("s{next}"),
        )?;
    }

    check_equal(&mut report, model, "(3) rho = s1 s2 s3 s4 s5".into(), "rho", "s1 s2 s3 s4 s5")?;
    check_equal(&mut report, model, "(3) rho = s6 s1 s2 s3 s4".into(), "rho", "s6 s1 s2 s3 s4")?;

    check_equal(&mut report, model, "(4) a1 = rho R^5".into(), "a1", "rho R^5")?;
    check_equal(&mut report, model, "(4) rho = a1 R^-5".into(), "rho", "a1 R^-5")?;

    for k in 1..=4 {
        let ev = model.is_identity(&el(model, &format!("a2^{k}"))?)?;
        report.push(
            format!("(5) a2^{k} != id"),
            !ev.is_equal(),
            json!({ "result": ev }),
        );
    }
    check_equal(&mut report, model, "(5) a2^5 = id".into(), "a2^5", "id")?;
    for (j, pair) in ALPHA2_CHAIN.windows(2).enumerate() {
        check_equal(
            &mut report,
            model,
            format!("(5) chain step {}", j + 1),
            pair[0],
            pair[1],
        )?;
    }

    Ok(report)
}
