//! Graded classes in `F_k / F_{k+1}` and their extraction from words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lcs::hall::{pattern_basis, CommutatorTree, Leaf};
use crate::lcs::series::{magnus_expand, pack, unpack, Key};
use crate::words::FreeWord;

/// An integer combination of weight-`k` basic commutators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedClass<L: Leaf> {
    weight: usize,
    terms: BTreeMap<CommutatorTree<L>, i64>,
}

impl<L: Leaf> GradedClass<L> {
    pub fn zero(weight: usize) -> Self {
        GradedClass {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The class of a single basic commutator.
    pub fn basic(tree: CommutatorTree<L>) -> Self {
        Self::from_terms(tree.weight(), [(tree, 1)]).expect("weight matches")
    }

    pub fn from_terms<I>(weight: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CommutatorTree<L>, i64)>,
    {
        let mut c = Self::zero(weight);
        for (t, v) in terms {
            if t.weight() != weight {
                return Err(Error::WeightMismatch {
                    left: weight,
                    right: t.weight(),
                });
            }
            c.add_term(t, v)?;
        }
        Ok(c)
    }

    fn add_term(&mut self, t: CommutatorTree<L>, v: i64) -> Result<()> {
        if v == 0 {
            return Ok(());
        }
        let e = self.terms.entry(t).or_insert(0);
        *e = e.checked_add(v).ok_or(Error::Overflow {
            context: "graded class addition",
        })?;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&CommutatorTree<L>, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &CommutatorTree<L>) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        let mut r = self.clone();
        for (t, &v) in &other.terms {
            r.add_term(t.clone(), v)?;
        }
        Ok(r)
    }

    pub fn scale(&self, s: i64) -> Result<Self> {
        let mut r = Self::zero(self.weight);
        for (t, &v) in &self.terms {
            let p = v.checked_mul(s).ok_or(Error::Overflow {
                context: "graded class scaling",
            })?;
            r.add_term(t.clone(), p)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1).expect("negation fits")
    }

    /// Relabels leaves. `f` must be strictly increasing on the leaves that
    /// occur, so that basic commutators stay basic.
    pub fn map_leaves<M: Leaf>(&self, f: impl Fn(&L) -> M) -> GradedClass<M> {
        GradedClass {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(t, &c)| (t.map_leaves(&f), c))
                .collect(),
        }
    }

    /// Image under the homomorphism killing `letter`: the basic
    /// commutators with `letter` as an entry vanish, the others survive.
    pub fn kill_letter(&self, letter: &L) -> Self {
        GradedClass {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| !t.contains_leaf(letter))
                .map(|(t, &c)| (t.clone(), c))
                .collect(),
        }
    }

    /// A representative word: the product of `b^{c_b}` in basis order.
    pub fn to_word_with(&self, f: &impl Fn(&L) -> FreeWord) -> FreeWord {
        let mut w = FreeWord::identity();
        for (t, &c) in &self.terms {
            w.push_word(&t.to_word_with(f).pow(c));
        }
        w
    }
}

impl GradedClass<u32> {
    pub fn to_word(&self) -> FreeWord {
        self.to_word_with(&|&l| FreeWord::generator(l))
    }
}

impl<L: Leaf> fmt::Display for GradedClass<L> {
    /// `+2*[x2,x1] -1*[[x2,x1],x1]`; `0` for the zero class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (t, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}*{t}")?;
        }
        Ok(())
    }
}

impl<L: Leaf> fmt::Debug for GradedClass<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedClass(k={}; {self})", self.weight)
    }
}

fn term_string(letters: &[u32], c: i128) -> String {
    let ms: Vec<String> = letters.iter().map(|l| format!("X{l}")).collect();
    format!("{c}*{}", ms.join(""))
}

/// The class of `w` in `F_k / F_{k+1}`, as coefficients on weight-`k` basic
/// commutators in the letters of `w`.
///
/// Fails with [`Error::NotInLcs`] if `w` is not in `F_k`.
pub fn collect(w: &FreeWord, k: usize) -> Result<GradedClass<u32>> {
    if k == 0 {
        return Err(Error::CapOutOfRange {
            cap: 0,
            max: crate::lcs::series::MAX_DEGREE,
        });
    }
    let s = magnus_expand(w, k)?;
    if let Some(d) = s.lowest_nontrivial_degree().filter(|&d| d < k) {
        let (key, c) = s
            .degree_part(d)
            .iter()
            .max_by_key(|(key, _)| **key)
            .map(|(a, b)| (*a, *b))
            .unwrap();
        return Err(Error::NotInLcs {
            weight: k,
            degree: d,
            term: term_string(&unpack(key, d), c),
        });
    }
    // Group the degree-k part by letter content.
    let mut groups: HashMap<Vec<u32>, Vec<(Vec<u32>, i128)>> = HashMap::new();
    for (&key, &c) in s.degree_part(k) {
        let letters = unpack(key, k);
        let mut content = letters.clone();
        content.sort_unstable();
        groups.entry(content).or_default().push((letters, c));
    }
    let mut class = GradedClass::zero(k);
    let mut contents: Vec<_> = groups.into_iter().collect();
    contents.sort();
    for (content, terms) in contents {
        let mut distinct = content.clone();
        distinct.dedup();
        let pattern: Vec<u32> = distinct
            .iter()
            .map(|l| content.iter().filter(|x| *x == l).count() as u32)
            .collect();
        let normalize = |l: u32| distinct.binary_search(&l).unwrap() as u32 + 1;
        let target: FxHashMap<Key, i128> = terms
            .iter()
            .map(|(ls, c)| {
                let v: Vec<u32> = ls.iter().map(|&l| normalize(l)).collect();
                (pack(&v), *c)
            })
            .collect();
        let basis = pattern_basis(&pattern);
        let coeffs: Vec<BigInt> = (0..basis.trees.len())
            .map(|t| {
                basis
                    .pivots
                    .iter()
                    .zip(&basis.inverse)
                    .map(|(p, row)| BigInt::from(target.get(p).copied().unwrap_or(0)) * &row[t])
                    .sum::<BigInt>()
            })
            .collect();
        let mut solved = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            let (q, r) = (&c / &basis.denominator, &c % &basis.denominator);
            if !r.is_zero() {
                return Err(Error::NotInLcs {
                    weight: k,
                    degree: k,
                    term: "non-integral class coefficient".into(),
                });
            }
            solved.push(q.to_i64().ok_or(Error::Overflow {
                context: "class coefficient",
            })?);
        }
        // Residual check: the solution must reproduce the whole target.
        let mut residual = target.clone();
        for (poly, &c) in basis.polys.iter().zip(&solved) {
            for (key, &v) in poly {
                *residual.entry(*key).or_default() -= v * c as i128;
            }
        }
        if let Some((key, c)) = residual.iter().find(|(_, c)| **c != 0) {
            return Err(Error::NotInLcs {
                weight: k,
                degree: k,
                term: term_string(
                    &unpack(*key, k).iter().map(|&j| distinct[j as usize - 1]).collect::<Vec<_>>(),
                    *c,
                ),
            });
        }
        for (tree, c) in basis.trees.iter().zip(solved) {
            class.add_term(tree.map_leaves(&|&j| distinct[j as usize - 1]), c)?;
        }
    }
    Ok(class)
}
