//! Endomorphisms of a free group given by the images of its basis.

use std::fmt;

use crate::word::{Letter, Reducer, Sign, Word, WordError, DEFAULT_MAX_LEN};

/// The endomorphism `x_i ↦ images[i-1]`.
///
/// Composition is functional: `compose(phi, psi)` is `phi ∘ psi`, so
/// `compose(phi, psi).apply(w) == phi.apply(psi.apply(w))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank as u32)
            .map(|i| Word::generator(i, rank).expect("index within rank"))
            .collect();
        FreeAutomorphism { rank, images }
    }

    pub fn from_images(rank: usize, images: Vec<Word>) -> Result<Self, WordError> {
        if images.len() != rank {
            return Err(WordError::RankMismatch {
                left: rank,
                right: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(WordError::RankMismatch {
                left: rank,
                right: bad.rank(),
            });
        }
        Ok(FreeAutomorphism { rank, images })
    }

    /// Inner automorphism `w ↦ c w c⁻¹`.
    pub fn conjugation(c: &Word) -> Result<Self, WordError> {
        let rank = c.rank();
        let images = (1..=rank as u32)
            .map(|i| Word::generator(i, rank)?.conjugate_by(c, DEFAULT_MAX_LEN))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FreeAutomorphism { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of the basis generator `x_index` (1-based).
    pub fn image(&self, index: u32) -> &Word {
        &self.images[index as usize - 1]
    }

    /// Total letters across all images.
    pub fn size(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [Letter::pos(i as u32 + 1)])
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        self.apply_capped(w, DEFAULT_MAX_LEN)
    }

    pub fn apply_capped(&self, w: &Word, cap: usize) -> Result<Word, WordError> {
        if w.rank() != self.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        let mut r = Reducer::new(self.rank, cap);
        for l in w.letters() {
            let img = self.image(l.index);
            match l.sign {
                Sign::Pos => r.push_word(img)?,
                Sign::Neg => r.push_inverse(img)?,
            }
        }
        Ok(r.finish())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism, WordError> {
        self.compose_capped(other, DEFAULT_MAX_LEN)
    }

    pub fn compose_capped(
        &self,
        other: &FreeAutomorphism,
        cap: usize,
    ) -> Result<FreeAutomorphism, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply_capped(w, cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FreeAutomorphism {
            rank: self.rank,
            images,
        })
    }

    /// Index of the first basis generator whose images differ, if any.
    pub fn first_difference(&self, other: &FreeAutomorphism) -> Result<Option<u32>, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .position(|(a, b)| a != b)
            .map(|i| i as u32 + 1))
    }

    pub fn auto_equal(&self, other: &FreeAutomorphism) -> Result<bool, WordError> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// True iff every `x_i` is sent to `c x_i c⁻¹`.
    pub fn is_inner_by(&self, c: &Word) -> bool {
        self.inner_failure(c).is_none()
    }

    /// First generator whose image is not `c x_i c⁻¹`; `Some(0)` on rank mismatch.
    pub fn inner_failure(&self, c: &Word) -> Option<u32> {
        if c.rank() != self.rank {
            return Some(0);
        }
        (1..=self.rank as u32).find(|&i| !is_conjugate_image(self.image(i), i, c))
    }
}

/// Checks `img == c x_i c⁻¹` as reduced words.
fn is_conjugate_image(img: &Word, i: u32, c: &Word) -> bool {
    let gen = Word::generator(i, c.rank()).expect("index within rank");
    match gen.conjugate_by(c, usize::MAX) {
        Ok(expected) => &expected == img,
        Err(_) => false,
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} ↦ {}", i + 1, img)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(code: &[i32], rank: usize) -> Word {
        Word::from_signed(code, rank).unwrap()
    }

    fn auto(images: &[&[i32]], rank: usize) -> FreeAutomorphism {
        FreeAutomorphism::from_images(rank, images.iter().map(|c| w(c, rank)).collect()).unwrap()
    }

    #[test]
    fn identity_fixes_words() {
        let id = FreeAutomorphism::identity(3);
        let word = w(&[1, -2, 3, 3], 3);
        assert_eq!(id.apply(&word).unwrap(), word);
        assert!(id.is_identity());
    }

    #[test]
    fn apply_hand_expanded() {
        // x1 ↦ x1 x2 x1⁻¹, x2 ↦ x1: x1 x2 ↦ x1 x2 x1⁻¹ x1 = x1 x2
        let phi = auto(&[&[1, 2, -1], &[1], &[3]], 3);
        assert_eq!(phi.apply(&w(&[1, 2], 3)).unwrap(), w(&[1, 2], 3));
        assert!(phi.apply(&Word::empty(3)).unwrap().is_empty());
    }

    #[test]
    fn compose_with_identity() {
        let phi = auto(&[&[1, 2, -1], &[1], &[3]], 3);
        let id = FreeAutomorphism::identity(3);
        assert_eq!(phi.compose(&id).unwrap(), phi);
        assert_eq!(id.compose(&phi).unwrap(), phi);
    }

    #[test]
    fn compose_is_functional_order() {
        // phi: the x1/x2 half twist; psi: its inverse form on x1/x2.
        let phi = auto(&[&[1, 2, -1], &[1], &[3]], 3);
        let psi = auto(&[&[2], &[-2, 1, 2], &[3]], 3);
        let both = phi.compose(&psi).unwrap();
        for i in 1..=3 {
            let x = Word::generator(i, 3).unwrap();
            assert_eq!(
                both.apply(&x).unwrap(),
                phi.apply(&psi.apply(&x).unwrap()).unwrap()
            );
        }
        assert!(both.is_identity());
    }

    #[test]
    fn rank_mismatch_errors() {
        let a = FreeAutomorphism::identity(2);
        let b = FreeAutomorphism::identity(3);
        assert!(a.compose(&b).is_err());
        assert!(a.auto_equal(&b).is_err());
        assert!(a.apply(&Word::empty(3)).is_err());
    }

    #[test]
    fn inner_detection() {
        let id = FreeAutomorphism::identity(4);
        assert!(id.is_inner_by(&Word::empty(4)));
        let c = w(&[1], 4);
        let conj = FreeAutomorphism::conjugation(&c).unwrap();
        assert!(conj.is_inner_by(&c));
        assert!(!conj.is_inner_by(&Word::empty(4)));
        let twist = auto(&[&[1, 2, -1], &[1], &[3], &[4]], 4);
        for code in [&[][..], &[1], &[1, 2], &[2, -1]] {
            assert!(!twist.is_inner_by(&w(code, 4)));
        }
    }
}
