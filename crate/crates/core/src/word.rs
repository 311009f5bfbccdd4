//! Freely reduced words in a free group of fixed rank.
//!
//! A [`Word`] is always stored reduced: every constructor and every product
//! goes through a stack-style cancellation pass, so no value ever contains an
//! adjacent `x x⁻¹` pair. The rank travels with each word and is checked on
//! every binary operation.

use std::fmt;

use thiserror::Error;

/// Default hard cap on the number of letters in any word we build.
pub const DEFAULT_MAX_LEN: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator x{index} out of range for rank {rank}")]
    IndexOutOfRange { index: u32, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("word length cap of {cap} letters exceeded")]
    LengthCap { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A signed occurrence of the basis generator `x_index` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: u32, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn pos(index: u32) -> Self {
        Letter::new(index, Sign::Pos)
    }

    pub fn neg(index: u32) -> Self {
        Letter::new(index, Sign::Neg)
    }

    /// Signed integer encoding, `±index`.
    pub fn from_signed(v: i32) -> Option<Self> {
        match v {
            0 => None,
            v if v > 0 => Some(Letter::pos(v as u32)),
            v => Some(Letter::neg(v.unsigned_abs())),
        }
    }

    pub fn to_signed(self) -> i32 {
        match self.sign {
            Sign::Pos => self.index as i32,
            Sign::Neg => -(self.index as i32),
        }
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.index, self.sign.flip())
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

/// Incremental reducer: pushes letters onto a stack, cancelling against the top.
#[derive(Debug, Clone)]
pub(crate) struct Reducer {
    rank: usize,
    cap: usize,
    stack: Vec<Letter>,
}

impl Reducer {
    pub(crate) fn new(rank: usize, cap: usize) -> Self {
        Reducer {
            rank,
            cap,
            stack: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, letter: Letter) -> Result<(), WordError> {
        if letter.index == 0 || letter.index as usize > self.rank {
            return Err(WordError::IndexOutOfRange {
                index: letter.index,
                rank: self.rank,
            });
        }
        match self.stack.last() {
            Some(&top) if top.cancels(letter) => {
                self.stack.pop();
            }
            _ => {
                if self.stack.len() >= self.cap {
                    return Err(WordError::LengthCap { cap: self.cap });
                }
                self.stack.push(letter);
            }
        }
        Ok(())
    }

    pub(crate) fn push_word(&mut self, w: &Word) -> Result<(), WordError> {
        w.letters.iter().try_for_each(|&l| self.push(l))
    }

    pub(crate) fn push_inverse(&mut self, w: &Word) -> Result<(), WordError> {
        w.letters.iter().rev().try_for_each(|&l| self.push(l.inverse()))
    }

    pub(crate) fn finish(self) -> Word {
        Word {
            rank: self.rank,
            letters: self.stack,
        }
    }
}

/// A freely reduced word over `x_1, ..., x_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(index: u32, rank: usize) -> Result<Self, WordError> {
        Word::reduce([Letter::pos(index)], rank)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>, rank: usize) -> Result<Self, WordError> {
        Word::reduce_capped(letters, rank, DEFAULT_MAX_LEN)
    }

    pub fn reduce_capped(
        letters: impl IntoIterator<Item = Letter>,
        rank: usize,
        cap: usize,
    ) -> Result<Self, WordError> {
        let mut r = Reducer::new(rank, cap);
        for l in letters {
            r.push(l)?;
        }
        Ok(r.finish())
    }

    /// Builds a word from the `±index` encoding, e.g. `[1, -2]` for `x1 x2⁻¹`.
    pub fn from_signed(code: &[i32], rank: usize) -> Result<Self, WordError> {
        let letters = code
            .iter()
            .map(|&v| {
                Letter::from_signed(v).ok_or(WordError::IndexOutOfRange { index: 0, rank })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::reduce(letters, rank)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Word) -> Result<(), WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        self.multiply_capped(other, DEFAULT_MAX_LEN)
    }

    pub fn multiply_capped(&self, other: &Word, cap: usize) -> Result<Word, WordError> {
        self.check_rank(other)?;
        // Cancellation only happens at the seam, so find it directly.
        let common = self
            .letters
            .iter()
            .rev()
            .zip(other.letters.iter())
            .take_while(|(a, b)| a.cancels(**b))
            .count();
        let len = self.len() - common + other.len() - common;
        if len > cap {
            return Err(WordError::LengthCap { cap });
        }
        let mut letters = Vec::with_capacity(len);
        letters.extend_from_slice(&self.letters[..self.len() - common]);
        letters.extend_from_slice(&other.letters[common..]);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64, cap: usize) -> Result<Word, WordError> {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut r = Reducer::new(self.rank, cap);
        for _ in 0..n.unsigned_abs() {
            r.push_word(&base)?;
        }
        Ok(r.finish())
    }

    /// `c · self · c⁻¹`, reduced.
    pub fn conjugate_by(&self, c: &Word, cap: usize) -> Result<Word, WordError> {
        self.check_rank(c)?;
        let mut r = Reducer::new(self.rank, cap);
        r.push_word(c)?;
        r.push_word(self)?;
        r.push_inverse(c)?;
        Ok(r.finish())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // Run-length encode: x1 x1 x2⁻¹ prints as x1^2 x2^-1.
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&m| m == l).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = run as i64 * l.sign.as_i64();
            if exp == 1 {
                write!(f, "x{}", l.index)?;
            } else {
                write!(f, "x{}^{}", l.index, exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(code: &[i32]) -> Word {
        Word::from_signed(code, 6).unwrap()
    }

    #[test]
    fn reduce_cancels_inner_pair() {
        assert_eq!(w(&[1, 2, -2, 3]).to_signed(), vec![1, 3]);
    }

    #[test]
    fn reduce_to_empty() {
        assert!(w(&[1, -1]).is_empty());
        assert!(w(&[1, 2, 3, -3, -2, -1]).is_empty());
    }

    #[test]
    fn reduce_leaves_reduced_word_alone() {
        assert_eq!(w(&[-2, -2]).to_signed(), vec![-2, -2]);
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert_eq!(
            Word::from_signed(&[1, 4], 3),
            Err(WordError::IndexOutOfRange { index: 4, rank: 3 })
        );
        assert!(Word::from_signed(&[0], 3).is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w(&[1, 2]).multiply(&w(&[-2, 3])).unwrap(), w(&[1, 3]));
        assert_eq!(w(&[1, 2]).multiply(&Word::empty(6)).unwrap(), w(&[1, 2]));
        assert!(w(&[1]).multiply(&w(&[-1])).unwrap().is_empty());
    }

    #[test]
    fn multiply_rank_mismatch() {
        let a = Word::generator(1, 3).unwrap();
        let b = Word::generator(1, 4).unwrap();
        assert_eq!(
            a.multiply(&b),
            Err(WordError::RankMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[1, 2]).invert(), w(&[-2, -1]));
        assert!(Word::empty(6).invert().is_empty());
        assert_eq!(w(&[-3]).invert(), w(&[3]));
    }

    #[test]
    fn cap_is_enforced() {
        let a = w(&[1, 2, 3]);
        assert_eq!(
            a.multiply_capped(&a, 5),
            Err(WordError::LengthCap { cap: 5 })
        );
        assert_eq!(a.pow(2, 6).unwrap().len(), 6);
        assert_eq!(a.pow(3, 6), Err(WordError::LengthCap { cap: 6 }));
    }

    #[test]
    fn pow_and_conjugate() {
        assert_eq!(w(&[1, 2]).pow(-2, 100).unwrap(), w(&[-2, -1, -2, -1]));
        assert!(w(&[5]).pow(0, 100).unwrap().is_empty());
        assert_eq!(w(&[2]).conjugate_by(&w(&[1]), 100).unwrap(), w(&[1, 2, -1]));
        assert_eq!(w(&[1]).conjugate_by(&w(&[1]), 100).unwrap(), w(&[1]));
    }

    #[test]
    fn display_run_length() {
        assert_eq!(w(&[1, 1, -2, 3]).to_string(), "x1^2 x2^-1 x3");
        assert_eq!(Word::empty(2).to_string(), "1");
    }
}
