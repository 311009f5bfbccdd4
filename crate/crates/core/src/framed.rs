//! The model group: integer framings of the six disks, semidirect with `B_6`,
//! modulo the single central relation `Δ² · R^30 = 1`.
//!
//! An element `(f, b)` is read as "push the disks along the braid `b`, and
//! rotate the disk now sitting in slot `k` by `f[k]` units of `2π/30`" under
//! the default [`FramingTransport::Left`] convention. Products are functional:
//! in `a · b` the factor `b` acts first.
//!
//! Rotating every disk by a full turn and pushing them once around each other
//! by the full twist is the identity (it is the sixth power of the global
//! rotation `α₁ = ρ · R^5`), so equality is decided by reducing `a · b⁻¹` to a
//! candidate central power `Δ^{2m}` through the Artin action and comparing its
//! framing with `m · (30, …, 30)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{
    self, artin_action, boundary_word, ArtinConvention, BraidError, BraidPermutation, BraidWord,
};
use crate::dsl::{Atom, Expr};
use crate::labels::{LabelAction, WedgeLabel, DISKS};
use crate::word::{WordError, DEFAULT_MAX_LEN};

pub const STRANDS: usize = DISKS;

/// Framing paired with one full twist: `Δ² ≡ R^{-TWIST_FRAMING}`.
pub const TWIST_FRAMING: i64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("word length cap of {cap} letters exceeded")]
    Cap { cap: usize },
    #[error(transparent)]
    Braid(BraidError),
}

impl From<WordError> for ModelError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::LengthCap { cap } => ModelError::Cap { cap },
            other => ModelError::Braid(BraidError::Word(other)),
        }
    }
}

impl From<BraidError> for ModelError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::LengthCap { cap } | BraidError::Word(WordError::LengthCap { cap }) => {
                ModelError::Cap { cap }
            }
            other => ModelError::Braid(other),
        }
    }
}

/// Per-slot rotation counts in units of `2π/30`. Never reduced mod 30.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FramingVector(pub [i64; STRANDS]);

impl FramingVector {
    pub fn zero() -> Self {
        FramingVector([0; STRANDS])
    }

    pub fn uniform(k: i64) -> Self {
        FramingVector([k; STRANDS])
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &FramingVector) -> FramingVector {
        FramingVector(std::array::from_fn(|k| self.0[k] + other.0[k]))
    }

    pub fn neg(&self) -> FramingVector {
        FramingVector(self.0.map(|v| -v))
    }

    /// `(f ∘ p)[j] = f[p(j)]`.
    fn pull_back(&self, p: &BraidPermutation) -> FramingVector {
        FramingVector(std::array::from_fn(|j| self.0[p.images()[j]]))
    }
}

/// Which factor's slot permutation transports the other factor's framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FramingTransport {
    /// `(f, b) = R_f ∘ B_b`; framing indexed by final slot.
    /// `(f,b)(g,c) = (f + g ∘ π_b⁻¹, bc)`.
    #[default]
    Left,
    /// `(f, b) = B_b ∘ R_f`; framing indexed by initial slot.
    /// `(f,b)(g,c) = (f ∘ π_c + g, bc)`.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub artin: ArtinConvention,
    pub transport: FramingTransport,
    /// When false the quotient by `Δ² R^30` is dropped.
    pub central_relation: bool,
    pub max_word_len: usize,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            artin: ArtinConvention::Standard,
            transport: FramingTransport::Left,
            central_relation: true,
            max_word_len: DEFAULT_MAX_LEN,
        }
    }
}

/// A representative of a model-group element. Compare with [`Model::equal`],
/// never with `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelElement {
    pub framing: FramingVector,
    pub braid: BraidWord,
}

impl ModelElement {
    pub fn identity() -> Self {
        ModelElement {
            framing: FramingVector::zero(),
            braid: BraidWord::identity(STRANDS),
        }
    }

    pub fn from_braid(braid: BraidWord) -> Self {
        ModelElement {
            framing: FramingVector::zero(),
            braid,
        }
    }

    /// `R^k`: every disk rotated by `k` units, no braiding.
    pub fn rotation(k: i64) -> Self {
        ModelElement {
            framing: FramingVector::uniform(k),
            braid: BraidWord::identity(STRANDS),
        }
    }
}

/// Outcome of an equality test, with the certificate that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "kebab-case")]
pub enum Evidence {
    /// `a · b⁻¹ = Δ^{2m} · R^{30m}`, verified through the Artin action.
    CentralPower { twist_power: i64 },
    Permutation {
        left: BraidPermutation,
        right: BraidPermutation,
    },
    JointInvariant { left: i64, right: i64 },
    LabelAction {
        label: WedgeLabel,
        left: WedgeLabel,
        right: WedgeLabel,
    },
    /// Braid exponent sums differ modulo 30 (exactly, without the relation).
    ExponentResidue { left: i64, right: i64 },
    /// `a · b⁻¹` has a braid part whose Artin action is not conjugation by
    /// `(x_1⋯x_6)^m` at basis generator `generator`.
    NonCentralBraid { twist_power: i64, generator: u32 },
    /// Braid part is `Δ^{2m}` but the framing is off by `residual`.
    FramingResidual {
        twist_power: i64,
        residual: FramingVector,
    },
}

impl Evidence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Evidence::CentralPower { .. })
    }

    pub fn certificate(&self) -> &'static str {
        match self {
            Evidence::CentralPower { .. } => "central-power",
            Evidence::Permutation { .. } => "permutation",
            Evidence::JointInvariant { .. } => "joint-invariant",
            Evidence::LabelAction { .. } => "label-action",
            Evidence::ExponentResidue { .. } => "exponent-residue",
            Evidence::NonCentralBraid { .. } => "non-central-braid",
            Evidence::FramingResidual { .. } => "framing-residual",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Model {
    pub config: ModelConfig,
}

impl Model {
    pub fn new(config: ModelConfig) -> Self {
        Model { config }
    }

    fn cap(&self) -> usize {
        self.config.max_word_len
    }

    pub fn mul(&self, a: &ModelElement, b: &ModelElement) -> Result<ModelElement, ModelError> {
        let braid = a.braid.concat(&b.braid, self.cap())?;
        let framing = match self.config.transport {
            FramingTransport::Left => {
                let pa = braid::permutation(&a.braid).inverse();
                a.framing.add(&b.framing.pull_back(&pa))
            }
            FramingTransport::Right => {
                let pb = braid::permutation(&b.braid);
                a.framing.pull_back(&pb).add(&b.framing)
            }
        };
        Ok(ModelElement { framing, braid })
    }

    pub fn inv(&self, a: &ModelElement) -> ModelElement {
        let p = braid::permutation(&a.braid);
        let framing = match self.config.transport {
            FramingTransport::Left => a.framing.pull_back(&p).neg(),
            FramingTransport::Right => a.framing.pull_back(&p.inverse()).neg(),
        };
        ModelElement {
            framing,
            braid: a.braid.inverse(),
        }
    }

    pub fn pow(&self, a: &ModelElement, n: i64) -> Result<ModelElement, ModelError> {
        let mut base = if n < 0 { self.inv(a) } else { a.clone() };
        let mut acc = ModelElement::identity();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    pub fn conjugate(&self, x: &ModelElement, by: &ModelElement) -> Result<ModelElement, ModelError> {
        self.mul(&self.mul(by, x)?, &self.inv(by))
    }

    pub fn commutator(&self, a: &ModelElement, b: &ModelElement) -> Result<ModelElement, ModelError> {
        let ab = self.mul(a, b)?;
        let ab_ai = self.mul(&ab, &self.inv(a))?;
        self.mul(&ab_ai, &self.inv(b))
    }

    pub fn named(&self, atom: Atom) -> Result<ModelElement, ModelError> {
        Ok(match atom {
            Atom::Id => ModelElement::identity(),
            Atom::Sigma(i) => ModelElement::from_braid(braid::sigma_circular(i as usize, STRANDS)?),
            Atom::R => ModelElement::rotation(1),
            Atom::Rho => ModelElement::from_braid(braid::delta(STRANDS)?),
            // α₁ = α₁ʳ R(2π/6)
            Atom::A1 => self.mul(&self.named(Atom::Rho)?, &ModelElement::rotation(5))?,
            // α₂ = α₁ σ₅ R(2π/30)
            Atom::A2 => {
                let a1s5 = self.mul(&self.named(Atom::A1)?, &self.named(Atom::Sigma(5))?)?;
                self.mul(&a1s5, &ModelElement::rotation(1))?
            }
        })
    }

    pub fn eval(&self, e: &Expr) -> Result<ModelElement, ModelError> {
        match e {
            Expr::Atom(a) => self.named(*a),
            Expr::Power(inner, n) => self.pow(&self.eval(inner)?, *n),
            Expr::Product(terms) => terms.iter().try_fold(ModelElement::identity(), |acc, t| {
                self.mul(&acc, &self.eval(t)?)
            }),
        }
    }

    /// `Σ framing − 6 · exponent_sum`; vanishes on the relator `Δ² R^30`.
    pub fn joint_invariant(&self, a: &ModelElement) -> i64 {
        a.framing.sum() - STRANDS as i64 * braid::exponent_sum(&a.braid)
    }

    pub fn wedge_label_action(&self, a: &ModelElement) -> LabelAction {
        let p = braid::permutation(&a.braid);
        let transport = self.config.transport;
        LabelAction::from_fn(|l| {
            let to = p.apply(l.disk);
            let shift = match transport {
                FramingTransport::Left => a.framing.0[to - 1],
                FramingTransport::Right => a.framing.0[l.disk - 1],
            };
            WedgeLabel::new(to, l.branch as i64 + shift)
        })
        .expect("slot permutation with branch shift is a bijection")
    }

    fn residue(&self, e: i64) -> i64 {
        if self.config.central_relation {
            e.rem_euclid(TWIST_FRAMING)
        } else {
            e
        }
    }

    pub fn equal(&self, a: &ModelElement, b: &ModelElement) -> Result<Evidence, ModelError> {
        let (pa, pb) = (braid::permutation(&a.braid), braid::permutation(&b.braid));
        if pa != pb {
            return Ok(Evidence::Permutation { left: pa, right: pb });
        }
        let (ja, jb) = (self.joint_invariant(a), self.joint_invariant(b));
        if ja != jb {
            return Ok(Evidence::JointInvariant { left: ja, right: jb });
        }
        let (la, lb) = (self.wedge_label_action(a), self.wedge_label_action(b));
        if let Some(label) = la.first_difference(&lb) {
            return Ok(Evidence::LabelAction {
                label,
                left: la.apply(label),
                right: lb.apply(label),
            });
        }
        let (ea, eb) = (
            self.residue(braid::exponent_sum(&a.braid)),
            self.residue(braid::exponent_sum(&b.braid)),
        );
        if ea != eb {
            return Ok(Evidence::ExponentResidue { left: ea, right: eb });
        }
        let d = self.mul(a, &self.inv(b))?;
        self.identity_certificate(&d)
    }

    /// Decides whether `d` is trivial once the cheap invariants agree.
    fn identity_certificate(&self, d: &ModelElement) -> Result<Evidence, ModelError> {
        let per_twist = (STRANDS * (STRANDS - 1)) as i64;
        let e = braid::exponent_sum(&d.braid);
        let m = if self.config.central_relation { e.div_euclid(per_twist) } else { 0 };
        let c = boundary_word(STRANDS).pow(m, self.cap())?;
        let action = artin_action(&d.braid, self.config.artin, self.cap())?;
        let perm_ok = braid::permutation(&d.braid).is_identity();
        let exp_ok = e == m * per_twist;
        match action.inner_failure(&c) {
            None if perm_ok && exp_ok => {}
            failure => {
                return Ok(Evidence::NonCentralBraid {
                    twist_power: m,
                    generator: failure.unwrap_or(0),
                })
            }
        }
        let expected = FramingVector::uniform(m * TWIST_FRAMING);
        if d.framing == expected {
            Ok(Evidence::CentralPower { twist_power: m })
        } else {
            Ok(Evidence::FramingResidual {
                twist_power: m,
                residual: d.framing.add(&expected.neg()),
            })
        }
    }

    pub fn is_equal(&self, a: &ModelElement, b: &ModelElement) -> Result<bool, ModelError> {
        Ok(self.equal(a, b)?.is_equal())
    }

    pub fn is_identity(&self, a: &ModelElement) -> Result<Evidence, ModelError> {
        self.equal(a, &ModelElement::identity())
    }

    /// Evidence for `[a, b] = 1`.
    pub fn commutes(&self, a: &ModelElement, b: &ModelElement) -> Result<Evidence, ModelError> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        self.equal(&ab, &ba)
    }

    /// Smallest `k ≤ max_k` with `a^k = 1`.
    pub fn element_order(&self, a: &ModelElement, max_k: u64) -> Result<Option<u64>, ModelError> {
        let mut p = a.clone();
        for k in 1..=max_k {
            if self.is_identity(&p)?.is_equal() {
                return Ok(Some(k));
            }
            p = self.mul(&p, a)?;
        }
        Ok(None)
    }
}
