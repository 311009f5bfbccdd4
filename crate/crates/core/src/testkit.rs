//! Randomised words, relation rewriting and certificate checking for tests.
//!
//! The certificate checker recomputes every invariant from scratch (signed
//! letter codes, per-atom label actions composed in word order) rather than
//! calling the routines that produced the evidence.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{self, artin_action, boundary_word};
use crate::dsl::{Atom, Expr};
use crate::framed::{Evidence, Model, ModelElement, TWIST_FRAMING};
use crate::labels::LabelAction;

/// A signed atom: `(atom, inverted)`.
pub type Token = (Atom, bool);

const GENERATORS: [Atom; 10] = [
    Atom::Sigma(1),
    Atom::Sigma(2),
    Atom::Sigma(3),
    Atom::Sigma(4),
    Atom::Sigma(5),
    Atom::Sigma(6),
    Atom::R,
    Atom::Rho,
    Atom::A1,
    Atom::A2,
];

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Vec<Token> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| (*GENERATORS.choose(rng).unwrap(), rng.gen_bool(0.5)))
        .collect()
}

pub fn to_expr(tokens: &[Token]) -> Expr {
    if tokens.is_empty() {
        return Expr::Atom(Atom::Id);
    }
    Expr::product(
        tokens
            .iter()
            .map(|&(a, inv)| if inv { Expr::Atom(a).inverse() } else { Expr::Atom(a) })
            .collect(),
    )
}

pub fn invert(tokens: &[Token]) -> Vec<Token> {
    tokens.iter().rev().map(|&(a, i)| (a, !i)).collect()
}

fn s(i: u8) -> Token {
    (Atom::Sigma(i), false)
}

fn si(i: u8) -> Token {
    (Atom::Sigma(i), true)
}

/// The defining relations of the model, as relators equal to the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Free,
    Braid,
    FarCommutation,
    RCentral,
    CentralRelation,
    Definition,
}

pub const RELATIONS: [Relation; 6] = [
    Relation::Free,
    Relation::Braid,
    Relation::FarCommutation,
    Relation::RCentral,
    Relation::CentralRelation,
    Relation::Definition,
];

fn relator(rng: &mut impl Rng, kind: Relation) -> Vec<Token> {
    match kind {
        Relation::Free => {
            let t = (*GENERATORS.choose(rng).unwrap(), rng.gen_bool(0.5));
            vec![t, (t.0, !t.1)]
        }
        Relation::Braid => {
            let i = rng.gen_range(1..=4u8);
            vec![s(i), s(i + 1), s(i), si(i + 1), si(i), si(i + 1)]
        }
        Relation::FarCommutation => {
            let (i, j) = loop {
                let i = rng.gen_range(1..=5u8);
                let j = rng.gen_range(1..=5u8);
                if i.abs_diff(j) >= 2 {
                    break (i, j);
                }
            };
            vec![s(i), s(j), si(i), si(j)]
        }
        Relation::RCentral => {
            let g = *GENERATORS.choose(rng).unwrap();
            vec![(Atom::R, false), (g, false), (Atom::R, true), (g, true)]
        }
        Relation::CentralRelation => {
            let mut r = vec![(Atom::Rho, false); 6];
            r.extend(std::iter::repeat_n((Atom::R, false), TWIST_FRAMING as usize));
            r
        }
        Relation::Definition => match rng.gen_range(0..3) {
            // a1 = rho R^5
            0 => {
                let mut r = vec![(Atom::A1, false)];
                r.extend(std::iter::repeat_n((Atom::R, true), 5));
                r.push((Atom::Rho, true));
                r
            }
            // a2 = a1 s5 R
            1 => vec![(Atom::A2, false), (Atom::R, true), si(5), (Atom::A1, true)],
            // s6 = rho s5 rho^-1
            _ => vec![s(6), (Atom::Rho, false), si(5), (Atom::Rho, true)],
        },
    }
}

/// Inserts a conjugate of a random relator (or its inverse) at a random
/// position. The result represents the same group element.
pub fn rewrite(rng: &mut impl Rng, tokens: &[Token], kind: Relation) -> Vec<Token> {
    let mut r = relator(rng, kind);
    if rng.gen_bool(0.5) {
        r = invert(&r);
    }
    // Cyclic rotation of a relator is still a relator.
    if !r.is_empty() {
        let k = rng.gen_range(0..r.len());
        r.rotate_left(k);
    }
    let pos = rng.gen_range(0..=tokens.len());
    let mut out = tokens[..pos].to_vec();
    out.extend(r);
    out.extend_from_slice(&tokens[pos..]);
    out
}

pub fn random_rewrite(rng: &mut impl Rng, tokens: &[Token]) -> (Vec<Token>, Relation) {
    let kind = *RELATIONS.choose(rng).unwrap();
    (rewrite(rng, tokens, kind), kind)
}

/// Random expression tree of the given depth.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        let a = *crate::dsl::Atom::ALL.choose(rng).unwrap();
        return Expr::Atom(a);
    }
    match rng.gen_range(0..3) {
        0 => Expr::Atom(*GENERATORS.choose(rng).unwrap()).pow(rng.gen_range(-3..=3)),
        1 => random_expr(rng, depth - 1).pow(rng.gen_range(-2..=2)),
        _ => {
            let n = rng.gen_range(2..=3);
            Expr::Product((0..n).map(|_| random_expr(rng, depth - 1)).collect())
        }
    }
}

/// Label action computed per atom and composed in word order.
pub fn label_action_by_atoms(model: &Model, tokens: &[Token]) -> LabelAction {
    tokens.iter().fold(LabelAction::identity(), |acc, &(a, inv)| {
        let g = model.named(a).expect("named atom");
        let g = if inv { model.inv(&g) } else { g };
        acc.compose(&model.wedge_label_action(&g))
    })
}

fn exp_sum(e: &ModelElement) -> i64 {
    e.braid.to_signed().iter().map(|v| v.signum() as i64).sum()
}

fn joint(e: &ModelElement) -> i64 {
    e.framing.0.iter().sum::<i64>() - 6 * exp_sum(e)
}

/// Confirms that an inequality certificate genuinely separates `a` and `b`.
pub fn check_certificate(
    model: &Model,
    a: &ModelElement,
    b: &ModelElement,
    a_tokens: &[Token],
    b_tokens: &[Token],
    ev: &Evidence,
) -> Result<(), String> {
    match ev {
        Evidence::CentralPower { .. } => Err("not an inequality certificate".into()),
        Evidence::Permutation { left, right } => {
            if braid::permutation(&a.braid) != *left || braid::permutation(&b.braid) != *right {
                return Err("permutation values do not match".into());
            }
            (left != right).then_some(()).ok_or("permutations agree".into())
        }
        Evidence::JointInvariant { left, right } => {
            if joint(a) != *left || joint(b) != *right {
                return Err(format!("joint invariant recomputes to {} / {}", joint(a), joint(b)));
            }
            (left != right).then_some(()).ok_or("joint invariants agree".into())
        }
        Evidence::LabelAction { label, left, right } => {
            let la = label_action_by_atoms(model, a_tokens);
            let lb = label_action_by_atoms(model, b_tokens);
            if la.apply(*label) != *left || lb.apply(*label) != *right {
                return Err("label images do not recompute".into());
            }
            (left != right).then_some(()).ok_or("label images agree".into())
        }
        Evidence::ExponentResidue { left, right } => {
            let (ea, eb) = (exp_sum(a).rem_euclid(30), exp_sum(b).rem_euclid(30));
            if (ea, eb) != (*left, *right) {
                return Err("exponent residues do not recompute".into());
            }
            (left != right).then_some(()).ok_or("residues agree".into())
        }
        Evidence::NonCentralBraid { twist_power, generator } => {
            let d = model.mul(a, &model.inv(b)).map_err(|e| e.to_string())?;
            let act = artin_action(&d.braid, model.config.artin, usize::MAX).map_err(|e| e.to_string())?;
            let c = boundary_word(6).pow(*twist_power, usize::MAX).map_err(|e| e.to_string())?;
            let g = *generator;
            if g == 0 || g as usize > 6 {
                return Err(format!("generator index {g} out of range"));
            }
            let x = crate::word::Word::generator(g, 6).map_err(|e| e.to_string())?;
            let expected = x.conjugate_by(&c, usize::MAX).map_err(|e| e.to_string())?;
            (act.image(g) != &expected)
                .then_some(())
                .ok_or("generator image is the central conjugate".into())
        }
        Evidence::FramingResidual { twist_power, residual } => {
            let d = model.mul(a, &model.inv(b)).map_err(|e| e.to_string())?;
            if braid::central_power_candidate(&d.braid) != Some(*twist_power) {
                return Err("twist power does not recompute".into());
            }
            let expect: Vec<i64> = d.framing.0.iter().map(|f| f - twist_power * TWIST_FRAMING).collect();
            if expect != residual.0 {
                return Err("residual does not recompute".into());
            }
            residual.0.iter().any(|&r| r != 0).then_some(()).ok_or("zero residual".into())
        }
    }
}

/// The shipped centraliser witnesses: `(expression, power j)`.
pub const CENTRALIZER_WITNESSES: [(&str, u8); 6] = [
    ("s1 s4", 3),
    ("s2 s5", 3),
    ("s3 s6", 3),
    ("s1 s3 s5", 2),
    ("s2 s4 s6", 2),
    ("rho", 2),
];
