//! Braid words on `n` strands and their Artin action on the free group `F_n`.
//!
//! Equality in `B_n` is decided by comparing Artin actions. Under the
//! [`ArtinConvention::Standard`] convention the generator `σ_i` acts by
//!
//! ```text
//! x_i ↦ x_i x_{i+1} x_i⁻¹,   x_{i+1} ↦ x_i,   x_j ↦ x_j otherwise
//! ```
//!
//! and a word acts by functional composition of its letters read left to
//! right: `act(uv) = act(u) ∘ act(v)`. With that convention the full twist
//! `Δ² = (σ_1 ⋯ σ_{n-1})^n` acts as conjugation by `x_1 x_2 ⋯ x_n`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphism::FreeAutomorphism;
use crate::word::{Reducer, Sign, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator σ{gen} out of range for {strands} strands")]
    GeneratorOutOfRange { gen: usize, strands: usize },
    #[error("braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("circular generator index {index} out of 1..={strands}")]
    CircularIndex { index: usize, strands: usize },
    #[error("braid word length cap of {cap} letters exceeded")]
    LengthCap { cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which of the two mirror-image Artin actions to use for `σ_i`.
///
/// Both give faithful representations, but only `Standard` makes the full
/// twist act as conjugation by `+(x_1 ⋯ x_n)`, which is what
/// [`detect_central_power`] checks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArtinConvention {
    #[default]
    Standard,
    Mirrored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub gen: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn inverse(self) -> Self {
        BraidLetter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the Artin generators `σ_1, ..., σ_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.gen == 0 || l.gen >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                gen: bad.gen,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// `±i` encodes `σ_i^{±1}`.
    pub fn from_signed(code: &[i32], strands: usize) -> Result<Self, BraidError> {
        let letters = code
            .iter()
            .map(|&v| BraidLetter {
                gen: v.unsigned_abs() as usize,
                sign: if v > 0 { Sign::Pos } else { Sign::Neg },
            })
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn sigma(gen: usize, strands: usize) -> Result<Self, BraidError> {
        BraidWord::new(
            strands,
            vec![BraidLetter {
                gen,
                sign: Sign::Pos,
            }],
        )
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters
            .iter()
            .map(|l| l.gen as i32 * l.sign.as_i64() as i32)
            .collect()
    }

    /// Concatenation followed by free cancellation of `σ_i σ_i⁻¹` pairs.
    pub fn concat(&self, other: &BraidWord, cap: usize) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut out = self.letters.clone();
        for &l in &other.letters {
            match out.last() {
                Some(&top) if top.gen == l.gen && top.sign != l.sign => {
                    out.pop();
                }
                _ => {
                    if out.len() >= cap {
                        return Err(BraidError::LengthCap { cap });
                    }
                    out.push(l);
                }
            }
        }
        Ok(BraidWord {
            strands: self.strands,
            letters: out,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, n: i64, cap: usize) -> Result<BraidWord, BraidError> {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = BraidWord::identity(self.strands);
        for _ in 0..n.unsigned_abs() {
            acc = acc.concat(&base, cap)?;
        }
        Ok(acc)
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &BraidWord, cap: usize) -> Result<BraidWord, BraidError> {
        c.concat(self, cap)?.concat(&c.inverse(), cap)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => format!("σ{}", l.gen),
                Sign::Neg => format!("σ{}⁻¹", l.gen),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A permutation of the strand slots `1..=n`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidPermutation(Vec<usize>);

impl BraidPermutation {
    pub fn identity(n: usize) -> Self {
        BraidPermutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(BraidPermutation(images))
    }

    /// The slot that slot `j` (1-based) is carried to.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BraidPermutation) -> BraidPermutation {
        BraidPermutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> BraidPermutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        BraidPermutation(inv)
    }

    /// Nontrivial cycles, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.0[j];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for BraidPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|j| j.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Slot permutation: `σ_i ↦ (i i+1)`, `perm(uv) = perm(u) ∘ perm(v)`.
pub fn permutation(b: &BraidWord) -> BraidPermutation {
    let mut p: Vec<usize> = (0..b.strands).collect();
    for l in &b.letters {
        p.swap(l.gen - 1, l.gen);
    }
    BraidPermutation(p)
}

pub fn exponent_sum(b: &BraidWord) -> i64 {
    b.letters.iter().map(|l| l.sign.as_i64()).sum()
}

/// `σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn delta(n: usize) -> Result<BraidWord, BraidError> {
    let code: Vec<i32> = (1..n as i32).collect();
    BraidWord::from_signed(&code, n)
}

/// Circular generator family on `n` strands: `σ_i` for `i < n`, and
/// `σ_n := δ σ_{n-1} δ⁻¹`, the half twist closing the ring.
pub fn sigma_circular(i: usize, n: usize) -> Result<BraidWord, BraidError> {
    if i == 0 || i > n {
        return Err(BraidError::CircularIndex {
            index: i,
            strands: n,
        });
    }
    if i < n {
        return BraidWord::sigma(i, n);
    }
    let d = delta(n)?;
    BraidWord::sigma(n - 1, n)?.conjugate_by(&d, usize::MAX)
}

/// Artin action of a braid word, composed letter by letter.
pub fn artin_action(
    b: &BraidWord,
    convention: ArtinConvention,
    cap: usize,
) -> Result<FreeAutomorphism, WordError> {
    let n = b.strands;
    let mut images: Vec<Word> = (1..=n as u32)
        .map(|i| Word::generator(i, n))
        .collect::<Result<_, _>>()?;
    for l in &b.letters {
        let forward = match convention {
            ArtinConvention::Standard => l.sign == Sign::Pos,
            ArtinConvention::Mirrored => l.sign == Sign::Neg,
        };
        let (i, j) = (l.gen - 1, l.gen);
        // images ← images ∘ act(letter); only slots i, j change.
        let (a, c) = (&images[i], &images[j]);
        let (new_i, new_j) = if forward {
            // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            let mut r = Reducer::new(n, cap);
            r.push_word(a)?;
            r.push_word(c)?;
            r.push_inverse(a)?;
            (r.finish(), a.clone())
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            let mut r = Reducer::new(n, cap);
            r.push_inverse(c)?;
            r.push_word(a)?;
            r.push_word(c)?;
            (c.clone(), r.finish())
        };
        images[i] = new_i;
        images[j] = new_j;
    }
    FreeAutomorphism::from_images(n, images)
}

/// Why two braids differ, from the cheapest invariant that separates them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BraidDistinction {
    Permutation {
        left: BraidPermutation,
        right: BraidPermutation,
    },
    ExponentSum {
        left: i64,
        right: i64,
    },
    /// Artin images of basis generator `x_generator` differ.
    Image {
        generator: u32,
        left_len: usize,
        right_len: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidVerdict {
    Equal,
    Differs(BraidDistinction),
}

impl BraidVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, BraidVerdict::Equal)
    }
}

pub fn braid_compare(
    a: &BraidWord,
    b: &BraidWord,
    convention: ArtinConvention,
    cap: usize,
) -> Result<BraidVerdict, BraidError> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    let (pa, pb) = (permutation(a), permutation(b));
    if pa != pb {
        return Ok(BraidVerdict::Differs(BraidDistinction::Permutation {
            left: pa,
            right: pb,
        }));
    }
    let (ea, eb) = (exponent_sum(a), exponent_sum(b));
    if ea != eb {
        return Ok(BraidVerdict::Differs(BraidDistinction::ExponentSum {
            left: ea,
            right: eb,
        }));
    }
    let fa = artin_action(a, convention, cap)?;
    let fb = artin_action(b, convention, cap)?;
    Ok(match fa.first_difference(&fb)? {
        None => BraidVerdict::Equal,
        Some(g) => BraidVerdict::Differs(BraidDistinction::Image {
            generator: g,
            left_len: fa.image(g).len(),
            right_len: fb.image(g).len(),
        }),
    })
}

pub fn braid_equal(
    a: &BraidWord,
    b: &BraidWord,
    convention: ArtinConvention,
    cap: usize,
) -> Result<bool, BraidError> {
    Ok(braid_compare(a, b, convention, cap)?.is_equal())
}

/// `x_1 x_2 ⋯ x_n`, the boundary word fixed by every Artin generator.
pub fn boundary_word(n: usize) -> Word {
    Word::reduce((1..=n as u32).map(crate::word::Letter::pos), n).expect("indices within rank")
}

/// Returns `m` when `b = Δ^{2m}` in `B_n`, certified by checking that its
/// Artin action is conjugation by `(x_1 ⋯ x_n)^m`.
pub fn detect_central_power(
    b: &BraidWord,
    convention: ArtinConvention,
    cap: usize,
) -> Result<Option<i64>, WordError> {
    let Some(m) = central_power_candidate(b) else {
        return Ok(None);
    };
    let c = boundary_word(b.strands).pow(m, cap)?;
    let action = artin_action(b, convention, cap)?;
    Ok(action.is_inner_by(&c).then_some(m))
}

/// The only `m` for which `b = Δ^{2m}` could hold, from the permutation and
/// the abelianisation alone.
pub fn central_power_candidate(b: &BraidWord) -> Option<i64> {
    let n = b.strands as i64;
    let e = exponent_sum(b);
    let per_twist = n * (n - 1);
    (permutation(b).is_identity() && e % per_twist == 0).then(|| e / per_twist)
}
