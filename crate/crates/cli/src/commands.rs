use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

use gammakit_core::braid::{exponent_sum, permutation};
use gammakit_core::dsl::ParseError;
use gammakit_core::lemma::verify_lemma_comp;
use gammakit_core::report::VerificationReport;
use gammakit_core::trace::{verify_derivation, DerivationTrace, TraceError};
use gammakit_core::{parse, Expr, Model, ModelConfig, ModelElement, ModelError};
use gammakit_geom::{apply_word, svg, DiskConfig, GeomError, MapExpr, SampleSet};

use crate::Command;

pub enum CliError {
    Input(String),
    Cap(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Cap(m) => f.write_str(m),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Cap { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::Model(m) => m.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn parse_arg(name: &str, text: &str) -> Result<Expr, CliError> {
    parse(text).map_err(|e: ParseError| CliError::Input(format!("{name}: {e}")))
}

fn eval(model: &Model, name: &str, text: &str) -> Result<ModelElement, CliError> {
    Ok(model.eval(&parse_arg(name, text)?)?)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn report(r: VerificationReport) -> (Value, bool) {
    let passed = r.passed;
    (serde_json::to_value(r).expect("report serialises"), passed)
}

/// Runs one subcommand, returning its JSON output and whether it passed.
pub fn run(cmd: &Command, config: ModelConfig) -> Result<(Value, bool), CliError> {
    let model = Model::new(config);
    match cmd {
        Command::Eq { lhs, rhs } => {
            let ev = model.equal(&eval(&model, "lhs", lhs)?, &eval(&model, "rhs", rhs)?)?;
            let mut r = VerificationReport::new("eq");
            r.push(format!("{lhs} = {rhs}"), ev.is_equal(), json!({ "result": ev }));
            Ok(report(r))
        }
        Command::Comm { lhs, rhs } => {
            let ev = model.commutes(&eval(&model, "lhs", lhs)?, &eval(&model, "rhs", rhs)?)?;
            let mut r = VerificationReport::new("comm");
            r.push(format!("[{lhs}, {rhs}] = id"), ev.is_equal(), json!({ "result": ev }));
            Ok(report(r))
        }
        Command::Normalize { expr } => {
            let a = eval(&model, "expr", expr)?;
            let labels = model.wedge_label_action(&a);
            let perm = permutation(&a.braid);
            let out = json!({
                "expr": expr,
                "framing": a.framing,
                "braid": a.braid.to_string(),
                "braid_length": a.braid.len(),
                "exponent_sum": exponent_sum(&a.braid),
                "permutation": perm.to_string(),
                "joint_invariant": model.joint_invariant(&a),
                "label_action": {
                    "order": labels.order(),
                    "fixed_disks": labels.fixed_disks(),
                    "disk_moves": labels.disk_moves(),
                },
            });
            Ok((out, true))
        }
        Command::Order { expr, max } => {
            let a = eval(&model, "expr", expr)?;
            let order = model.element_order(&a, *max)?;
            Ok((json!({ "expr": expr, "max": max, "order": order }), order.is_some()))
        }
        Command::VerifyLemma => Ok(report(verify_lemma_comp(&model)?)),
        Command::VerifyDerivation { file } => {
            let trace = match file {
                Some(path) => DerivationTrace::from_json(&read(path)?)?,
                None => DerivationTrace::sigma3(),
            };
            let d = verify_derivation(&model, &trace)?;
            let passed = d.passed();
            let mut out = serde_json::to_value(&d.report).expect("report serialises");
            out["failures"] = serde_json::to_value(&d.failures).expect("failures serialise");
            Ok((out, passed))
        }
        Command::Simulate { expr, config, depth, svg: svg_path } => {
            let mut cfg = match config {
                Some(path) => DiskConfig::from_json(&read(path)?).map_err(|e| CliError::Input(e.to_string()))?,
                None => DiskConfig::default(),
            };
            if let Some(d) = depth {
                cfg.depth = *d;
            }
            simulate(&model, expr, &cfg, svg_path.as_deref())
        }
    }
}

fn simulate(model: &Model, text: &str, cfg: &DiskConfig, svg_path: Option<&Path>) -> Result<(Value, bool), CliError> {
    let e = parse_arg("expr", text)?;
    let samples = SampleSet::build(cfg).map_err(|e| CliError::Input(e.to_string()))?;
    let map = MapExpr::from_expr(&e, model.config.max_word_len).map_err(|e| match e {
        GeomError::Cap { .. } => CliError::Cap(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;
    let algebraic = model.wedge_label_action(&model.eval(&e)?);

    let mut r = VerificationReport::new("simulate");
    r.push(
        "sample set",
        true,
        json!({ "depth": cfg.depth, "samples": samples.len(), "tolerance": cfg.tolerance, "map": map.to_string() }),
    );
    match apply_word(&map, &samples, cfg) {
        Err(err) => r.push("label bijection", false, json!({ "error": err.to_string() })),
        Ok(orbit) => {
            r.push("label bijection", true, Value::Null);
            let diff = orbit.labels.first_difference(&algebraic);
            r.push(
                "matches model label action",
                diff.is_none(),
                diff.map(|l| json!({ "label": l, "planar": orbit.labels.apply(l), "model": algebraic.apply(l) })),
            );
            if let Some(path) = svg_path {
                let doc = svg::render(cfg, &samples, &orbit.moved, text);
                std::fs::write(path, doc)
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
        }
    }
    Ok(report(r))
}
