//! Reduced words in a free group over an anonymous index alphabet, and
//! endomorphisms given by generator images.
//!
//! Words are kept freely reduced at all times, so equality in the free group
//! is plain sequence equality.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A generator or inverse generator. Stored as a nonzero signed index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: u32, sign: i8) -> Result<Self> {
        if index == 0 || index > i32::MAX as u32 {
            return Err(Error::InvalidIndex { index });
        }
        Ok(if sign < 0 {
            Letter(-(index as i32))
        } else {
            Letter(index as i32)
        })
    }

    /// The generator `x_index`. Panics on index 0.
    pub fn gen(index: u32) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Letter(index as i32)
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "x{}^-1", self.index())
        } else {
            write!(f, "x{}", self.index())
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: u32) -> Self {
        FreeWord {
            letters: vec![Letter::gen(index)],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Builds a word from signed indices, e.g. `[1, -2]` for `x1 x2^-1`.
    pub fn from_signed(indices: &[i32]) -> Self {
        FreeWord::reduce(indices.iter().map(|&i| {
            assert!(i != 0, "zero is not a letter");
            Letter(i)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Appends a letter, cancelling against the last one if possible.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn push_word(&mut self, w: &FreeWord) {
        for &l in &w.letters {
            self.push(l);
        }
    }

    /// Appends the inverse of `w`.
    pub fn push_inverse(&mut self, w: &FreeWord) {
        for &l in w.letters.iter().rev() {
            self.push(l.inverse());
        }
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.push_word(other);
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = a.clone();
        out.push_word(b);
        out.push_inverse(a);
        out.push_inverse(b);
        out
    }

    /// `c w c^-1`.
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        let mut out = c.clone();
        out.push_word(self);
        out.push_inverse(c);
        out
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            out.push_word(&base);
        }
        out
    }

    /// Signed number of occurrences of `x_index`.
    pub fn exponent_sum(&self, index: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index() == index)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Replaces every occurrence of the listed generators by the identity.
    pub fn kill(&self, indices: &[u32]) -> FreeWord {
        FreeWord::reduce(
            self.letters
                .iter()
                .copied()
                .filter(|l| !indices.contains(&l.index())),
        )
    }

    /// Formats with a custom generator symbol, e.g. `y1 y2^-1`.
    pub fn display_with(&self, symbol: char) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.is_inverse() {
                parts.push(format!("{symbol}{}^-1", l.index()));
            } else {
                parts.push(format!("{symbol}{}", l.index()));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.multiply(rhs)
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(mut self, rhs: FreeWord) -> FreeWord {
        self.push_word(&rhs);
        self
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FreeWord::reduce(iter)
    }
}

/// An endomorphism of the free group on `x_1..x_n`, given by the images of
/// the generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endomorphism {
    images: Vec<FreeWord>,
}

impl Endomorphism {
    pub fn identity(n: u32) -> Self {
        Endomorphism {
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    /// Images must be words over `x_1..x_n` where `n = images.len()`.
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let n = images.len() as u32;
        for w in &images {
            if w.max_index() > n {
                return Err(Error::AlphabetMismatch {
                    index: w.max_index(),
                    size: n,
                });
            }
        }
        Ok(Endomorphism { images })
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, index: u32) -> &FreeWord {
        &self.images[index as usize - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn set_image(&mut self, index: u32, w: FreeWord) -> Result<()> {
        if index == 0 || index > self.rank() {
            return Err(Error::AlphabetMismatch {
                index,
                size: self.rank(),
            });
        }
        if w.max_index() > self.rank() {
            return Err(Error::AlphabetMismatch {
                index: w.max_index(),
                size: self.rank(),
            });
        }
        self.images[index as usize - 1] = w;
        Ok(())
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        let n = self.rank();
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            if l.index() > n {
                return Err(Error::AlphabetMismatch {
                    index: l.index(),
                    size: n,
                });
            }
            let img = &self.images[l.index() as usize - 1];
            if l.is_inverse() {
                out.push_inverse(img);
            } else {
                out.push_word(img);
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::SizeMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == FreeWord::generator(i as u32 + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i32]) -> FreeWord {
        FreeWord::from_signed(s)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[1, -1, 2]), w(&[2]));
        assert_eq!(FreeWord::reduce(vec![]), FreeWord::identity());
        assert_eq!(w(&[1, 2, -2, -1]), FreeWord::identity());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&w(&[1]) * &w(&[-1]), FreeWord::identity());
        assert_eq!(&w(&[1, 2]) * &w(&[-2, 3]), w(&[1, 3]));
        assert_eq!(&FreeWord::identity() * &w(&[2, 1]), w(&[2, 1]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[1, 2]).inverse(), w(&[-2, -1]));
        assert_eq!(FreeWord::identity().inverse(), FreeWord::identity());
        assert_eq!(w(&[-1]).inverse(), w(&[1]));
    }

    #[test]
    fn commutator_examples() {
        let (x1, x2) = (w(&[1]), w(&[2]));
        assert_eq!(FreeWord::commutator(&x1, &x2), w(&[1, 2, -1, -2]));
        assert!(FreeWord::commutator(&x1, &x1).is_identity());
        assert_eq!(
            FreeWord::commutator(&x2, &x1),
            FreeWord::commutator(&x1, &x2).inverse()
        );
    }

    #[test]
    fn apply_examples() {
        let f = Endomorphism::new(vec![w(&[1, 2]), w(&[2])]).unwrap();
        assert_eq!(f.apply(&w(&[-1])).unwrap(), w(&[-2, -1]));

        let id = Endomorphism::identity(3);
        assert_eq!(id.apply(&w(&[3, -1, 2])).unwrap(), w(&[3, -1, 2]));

        let swap = Endomorphism::new(vec![w(&[2]), w(&[1])]).unwrap();
        let c12 = FreeWord::commutator(&w(&[1]), &w(&[2]));
        let c21 = FreeWord::commutator(&w(&[2]), &w(&[1]));
        assert_eq!(swap.apply(&c12).unwrap(), c21);
    }

    #[test]
    fn apply_rejects_foreign_letters() {
        let id = Endomorphism::identity(2);
        assert_eq!(
            id.apply(&w(&[3])),
            Err(Error::AlphabetMismatch { index: 3, size: 2 })
        );
    }

    #[test]
    fn compose_examples() {
        let f = Endomorphism::new(vec![w(&[1, 2]), w(&[2])]).unwrap();
        let g = Endomorphism::new(vec![w(&[-1]), w(&[2])]).unwrap();
        let id = Endomorphism::identity(2);
        assert_eq!(id.compose(&g).unwrap(), g);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(f.compose(&g).unwrap().image(1), &w(&[-2, -1]));
        assert!(f.compose(&Endomorphism::identity(3)).is_err());
    }

    #[test]
    fn kill_removes_letters() {
        assert_eq!(w(&[1, 3, 2, -3, -1]).kill(&[3]), w(&[1, 2, -1]));
    }
}
