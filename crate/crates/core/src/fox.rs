//! Abelianized Fox calculus and the Magnus representation.
//!
//! All derivatives take values in `Z[Z^n]`: the free derivative `∂w/∂x_j`
//! followed by abelianization.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groupring::{GroupRingElement, Monomial};
use crate::words::{Endomorphism, FreeWord};

/// `φ(∂w/∂x_j)` for every `j = 1..n` in one pass over `w`.
pub fn gradient(w: &FreeWord, n: u32) -> Result<Vec<GroupRingElement>> {
    let mut acc: Vec<HashMap<Vec<i64>, i64>> = vec![HashMap::new(); n as usize];
    let mut prefix = vec![0i64; n as usize];
    for l in w.letters() {
        let j = l.index();
        if j > n {
            return Err(Error::AlphabetMismatch { index: j, size: n });
        }
        let slot = j as usize - 1;
        if l.is_inverse() {
            prefix[slot] -= 1;
            *acc[slot].entry(prefix.clone()).or_default() -= 1;
        } else {
            *acc[slot].entry(prefix.clone()).or_default() += 1;
            prefix[slot] += 1;
        }
    }
    Ok(acc
        .into_iter()
        .map(|m| {
            GroupRingElement::from_terms(
                m.into_iter()
                    .filter(|&(_, c)| c != 0)
                    .map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))),
            )
        })
        .collect())
}

/// `φ(∂w/∂x_j)`.
pub fn fox_derivative(w: &FreeWord, j: u32, n: u32) -> Result<GroupRingElement> {
    if j == 0 || j > n {
        return Err(Error::AlphabetMismatch { index: j, size: n });
    }
    Ok(gradient(w, n)?.swap_remove(j as usize - 1))
}

/// True iff `w` lies in the second derived subgroup `F''`: `w` is in `F'`
/// and every abelianized Fox derivative vanishes.
pub fn in_second_derived(w: &FreeWord, n: u32) -> Result<bool> {
    let e = crate::groupring::exponent_vector(w, n)?;
    if e.iter().any(|&x| x != 0) {
        return Ok(false);
    }
    Ok(gradient(w, n)?.iter().all(|d| d.is_zero()))
}

/// Square matrix over `Z[Z^n]`; row `i` holds the derivatives of `f(x_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnusMatrix {
    n: u32,
    entries: Vec<Vec<GroupRingElement>>,
}

impl MagnusMatrix {
    pub fn identity(n: u32) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            GroupRingElement::one()
                        } else {
                            GroupRingElement::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        MagnusMatrix { n, entries }
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: u32, j: u32) -> &GroupRingElement {
        &self.entries[i as usize - 1][j as usize - 1]
    }

    pub fn rows(&self) -> &[Vec<GroupRingElement>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == MagnusMatrix::identity(self.n)
    }

    pub fn mul(&self, other: &MagnusMatrix) -> Result<MagnusMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n as usize;
        let mut entries = vec![vec![GroupRingElement::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for l in 0..n {
                    let p = &self.entries[i][l] * &other.entries[l][j];
                    *e = &*e + &p;
                }
            }
        }
        Ok(MagnusMatrix { n: self.n, entries })
    }

    /// Applies a monomial substitution to every entry.
    pub fn map_entries(&self, f: impl Fn(&Monomial) -> Monomial) -> MagnusMatrix {
        MagnusMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e.map_monomials(&f)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for MagnusMatrix {
    /// One row per line, entries separated by ` | `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// The matrix `(φ(∂f(x_i)/∂x_j))_{i,j}`.
pub fn magnus_matrix(f: &Endomorphism) -> MagnusMatrix {
    let n = f.rank();
    let entries = f
        .images()
        .iter()
        .map(|w| gradient(w, n).expect("endomorphism images lie in the alphabet"))
        .collect();
    MagnusMatrix { n, entries }
}

pub fn is_magnus_trivial(f: &Endomorphism) -> bool {
    magnus_matrix(f).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::abelianize;

    fn w(s: &[i32]) -> FreeWord {
        FreeWord::from_signed(s)
    }

    fn t(i: u32) -> GroupRingElement {
        GroupRingElement::var(i)
    }

    #[test]
    fn derivative_examples() {
        assert!(fox_derivative(&w(&[1, 2]), 1, 2).unwrap().is_one());
        let inv = GroupRingElement::monomial(Monomial::from_pairs([(1, -1)]), -1);
        assert_eq!(fox_derivative(&w(&[-1]), 1, 1).unwrap(), inv);
        let c = FreeWord::commutator(&w(&[1]), &w(&[2]));
        assert_eq!(
            fox_derivative(&c, 1, 2).unwrap(),
            &GroupRingElement::one() - &t(2)
        );
        assert!(fox_derivative(&c, 3, 2).is_err());
    }

    #[test]
    fn matrix_examples() {
        assert!(is_magnus_trivial(&Endomorphism::identity(4)));
        let swap = Endomorphism::new(vec![w(&[2]), w(&[1])]).unwrap();
        let m = magnus_matrix(&swap);
        assert!(m.entry(1, 2).is_one() && m.entry(2, 1).is_one());
        assert!(m.entry(1, 1).is_zero() && m.entry(2, 2).is_zero());
        let f = Endomorphism::new(vec![w(&[1, 2]), w(&[2])]).unwrap();
        assert!(!is_magnus_trivial(&f));
        assert_eq!(magnus_matrix(&f).entry(1, 2), &t(1));
    }

    #[test]
    fn fundamental_identity_small() {
        let x = w(&[1, 2, -1, -1, 3, 2, -3]);
        let g = gradient(&x, 3).unwrap();
        let mut rhs = GroupRingElement::zero();
        for (j, d) in g.iter().enumerate() {
            rhs = &rhs + &(d * &(&t(j as u32 + 1) - &GroupRingElement::one()));
        }
        let lhs = &GroupRingElement::monomial(abelianize(&x, 3).unwrap(), 1)
            - &GroupRingElement::one();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_derived() {
        let a = FreeWord::commutator(&w(&[1]), &w(&[2]));
        let b = a.conjugate_by(&w(&[3]));
        assert!(!in_second_derived(&a, 3).unwrap());
        assert!(in_second_derived(&FreeWord::commutator(&a, &b), 3).unwrap());
        assert!(!in_second_derived(&w(&[1]), 3).unwrap());
    }
}
