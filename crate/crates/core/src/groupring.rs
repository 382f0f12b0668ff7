//! The integral group ring of a free abelian group `Z^n`, written with
//! variables `t_1, t_2, ...` (Laurent monomials) and big-integer
//! coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::FreeWord;

/// A Laurent monomial `t_1^{e_1} ... t_n^{e_n}`, stored sparsely.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// `(index, exponent)` sorted by index, exponents nonzero.
    exps: Vec<(u32, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: u32) -> Self {
        Monomial::from_pairs([(index, 1)])
    }

    /// Dense exponent vector, index 1 first.
    pub fn from_exponents(e: &[i64]) -> Self {
        Monomial::from_pairs(e.iter().enumerate().map(|(i, &x)| (i as u32 + 1, x)))
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut m: BTreeMap<u32, i64> = BTreeMap::new();
        for (i, e) in pairs {
            assert!(i >= 1, "monomial indices start at 1");
            *m.entry(i).or_default() += e;
        }
        Monomial {
            exps: m.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> i64 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|p| self.exps[p].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(u32, i64)] {
        &self.exps
    }

    pub fn max_index(&self) -> u32 {
        self.exps.last().map(|&(i, _)| i).unwrap_or(0)
    }

    pub fn exponents(&self, n: u32) -> Vec<i64> {
        (1..=n).map(|i| self.exponent(i)).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.exps.iter().chain(other.exps.iter()).copied())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// The word `x_1^{e_1} ... x_n^{e_n}` lifting this monomial to the free
    /// group.
    pub fn lift(&self) -> FreeWord {
        let mut w = FreeWord::identity();
        for &(i, e) in &self.exps {
            w.push_word(&FreeWord::generator(i).pow(e));
        }
        w
    }
}

impl Ord for Monomial {
    /// Lexicographic on dense exponent vectors.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&&(_, eb))) => return 0.cmp(&eb),
                (Some(&&(ia, ea)), Some(&&(ib, eb))) => match ia.cmp(&ib) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "t{i}")?;
            } else {
                write!(f, "t{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Image of `w` in `Z^n`. Fails if `w` uses a letter beyond `n`.
pub fn abelianize(w: &FreeWord, n: u32) -> Result<Monomial> {
    Ok(Monomial::from_exponents(&exponent_vector(w, n)?))
}

/// Signed letter counts of `w` as a dense vector of length `n`.
pub fn exponent_vector(w: &FreeWord, n: u32) -> Result<Vec<i64>> {
    let mut e = vec![0i64; n as usize];
    for l in w.letters() {
        if l.index() > n {
            return Err(Error::AlphabetMismatch {
                index: l.index(),
                size: n,
            });
        }
        e[l.index() as usize - 1] += l.sign() as i64;
    }
    Ok(e)
}

/// A finite integer combination of monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Monomial, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero();
        r.add_term(m, c.into());
        r
    }

    /// `t_index`.
    pub fn var(index: u32) -> Self {
        Self::monomial(Monomial::var(index), 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut r = Self::zero();
        for (m, c) in terms {
            r.add_term(m, c.into());
        }
        r
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Substitutes monomials through `f` (a group homomorphism of `Z^n`).
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// The augmentation: sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut r = GroupRingElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for GroupRingElement {
            type Output = GroupRingElement;
            fn $f(self, rhs: GroupRingElement) -> GroupRingElement {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

impl fmt::Display for GroupRingElement {
    /// Terms in descending lexicographic order, e.g. `3*t1^2*t2^-1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
