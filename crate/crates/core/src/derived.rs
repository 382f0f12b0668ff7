//! The commutator subgroup `F'` as a free group on the Tomaszewski basis
//! `B(i, k, d) = T(d) [x_i, x_k] T(d)^-1` with `T(d) = x_1^{d_1} ... x_k^{d_k}`,
//! `i < k`.
//!
//! Words in `F'` are rewritten with the Schreier transversal
//! `T(a) = x_1^{a_1} ... x_n^{a_n}`. Each Schreier generator
//! `s(a, j) = T(a) x_j T(a + e_j)^-1` telescopes into B-letters.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groupring::{GroupRingElement, Monomial};
use crate::lcs::hall::Leaf;
use crate::lcs::series::MAX_LETTER;
use crate::lcs::{collect, GradedClass};
use crate::words::{FreeWord, Letter};

/// A Tomaszewski basis element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BLetter {
    i: u32,
    k: u32,
    d: Vec<i64>,
}

impl BLetter {
    /// Requires `1 <= i < k` and `d.len() == k`.
    pub fn new(i: u32, k: u32, d: Vec<i64>) -> Result<Self> {
        if i == 0 || i >= k || d.len() != k as usize {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("invalid basis letter i={i}, k={k}, d={d:?}"),
            });
        }
        Ok(BLetter { i, k, d })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn conjugator(&self) -> FreeWord {
        let mut w = FreeWord::identity();
        for (j, &e) in self.d.iter().enumerate() {
            w.push_word(&FreeWord::generator(j as u32 + 1).pow(e));
        }
        w
    }

    /// The word `T(d) [x_i, x_k] T(d)^-1` in `F`.
    pub fn expand(&self) -> FreeWord {
        let c = FreeWord::commutator(&FreeWord::generator(self.i), &FreeWord::generator(self.k));
        c.conjugate_by(&self.conjugator())
    }

    /// Conjugation by `x_1^e`: `d_1 += e`.
    pub fn shift(&self, e: i64) -> BLetter {
        let mut d = self.d.clone();
        d[0] += e;
        BLetter { d, ..*self }
    }
}

impl Ord for BLetter {
    /// Lexicographic on `(d zero-padded, i, k)`.
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.d.len().max(other.d.len());
        for j in 0..len {
            let a = self.d.get(j).copied().unwrap_or(0);
            let b = other.d.get(j).copied().unwrap_or(0);
            if a != b {
                return a.cmp(&b);
            }
        }
        (self.i, self.k).cmp(&(other.i, other.k))
    }
}

impl PartialOrd for BLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "[x{},x{}]^({})", self.i, self.k, d.join(","))
    }
}

impl fmt::Debug for BLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Leaf for BLetter {
    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BLetter {
    type Err = Error;

    /// `[x<i>,x<k>]^(d1,...,dk)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in basis letter {s:?}"),
        };
        let s2: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s2.strip_prefix("[x").ok_or_else(|| bad("expected '[x'"))?;
        let (i, rest) = rest.split_once(",x").ok_or_else(|| bad("expected ',x'"))?;
        let (k, rest) = rest.split_once("]^(").ok_or_else(|| bad("expected ']^('"))?;
        let d = rest.strip_suffix(')').ok_or_else(|| bad("expected ')'"))?;
        let i: u32 = i.parse().map_err(|_| bad("bad index"))?;
        let k: u32 = k.parse().map_err(|_| bad("bad index"))?;
        let d = if d.is_empty() {
            Vec::new()
        } else {
            d.split(',')
                .map(|x| x.parse::<i64>().map_err(|_| bad("bad exponent")))
                .collect::<Result<Vec<_>>>()?
        };
        BLetter::new(i, k, d)
    }
}

/// A freely reduced word in the free group on `B`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BWord {
    letters: Vec<(BLetter, i8)>,
}

impl BWord {
    pub fn identity() -> Self {
        BWord::default()
    }

    pub fn letter(b: BLetter) -> Self {
        BWord {
            letters: vec![(b, 1)],
        }
    }

    pub fn push(&mut self, b: BLetter, sign: i8) {
        if let Some((last, s)) = self.letters.last() {
            if *s == -sign && *last == b {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((b, sign));
    }

    pub fn letters(&self) -> &[(BLetter, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BWord {
        BWord {
            letters: self.letters.iter().rev().map(|(b, s)| (b.clone(), -s)).collect(),
        }
    }

    pub fn multiply(&self, other: &BWord) -> BWord {
        let mut r = self.clone();
        for (b, s) in &other.letters {
            r.push(b.clone(), *s);
        }
        r
    }

    /// Distinct letters in increasing B-order.
    pub fn alphabet(&self) -> Vec<BLetter> {
        let set: BTreeSet<&BLetter> = self.letters.iter().map(|(b, _)| b).collect();
        set.into_iter().cloned().collect()
    }

    /// The word over `1..=m` obtained by numbering `alphabet` in order.
    fn index_word(&self, alphabet: &[BLetter]) -> FreeWord {
        FreeWord::reduce(self.letters.iter().map(|(b, s)| {
            let idx = alphabet.binary_search(b).expect("letter in alphabet") as u32 + 1;
            Letter::new(idx, *s).expect("positive index")
        }))
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (n, (b, s)) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
            if *s < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The literal `F`-word of a `B`-word.
pub fn expand_b(w: &BWord) -> FreeWord {
    let mut out = FreeWord::identity();
    for (b, s) in &w.letters {
        let e = b.expand();
        if *s < 0 {
            out.push_inverse(&e);
        } else {
            out.push_word(&e);
        }
    }
    out
}

/// Appends `s(a, i)^sign` to `out`.
fn push_schreier(out: &mut BWord, a: &[i64], i: u32, sign: i8) {
    let top = |a: &[i64]| a.iter().rposition(|&x| x != 0).map(|p| p as u32 + 1);
    let mut a = a.to_vec();
    let mut letters = Vec::new();
    while let Some(k) = top(&a).filter(|&k| k > i) {
        let slot = k as usize - 1;
        if a[slot] > 0 {
            a[slot] -= 1;
            letters.push((BLetter { i, k, d: a[..=slot].to_vec() }, -1));
        } else {
            letters.push((BLetter { i, k, d: a[..=slot].to_vec() }, 1));
            a[slot] += 1;
        }
    }
    if sign > 0 {
        for (b, s) in letters {
            out.push(b, s);
        }
    } else {
        for (b, s) in letters.into_iter().rev() {
            out.push(b, -s);
        }
    }
}

/// Rewrites `w ∈ F'` as a word in the Tomaszewski basis.
///
/// Fails with [`Error::NotInDerived`] if the exponent sums of `w` do not
/// all vanish.
pub fn rewrite_to_b(w: &FreeWord) -> Result<BWord> {
    let n = w.max_index() as usize;
    let mut a = vec![0i64; n];
    let mut out = BWord::identity();
    for l in w.letters() {
        let j = l.index();
        let slot = j as usize - 1;
        if l.is_inverse() {
            a[slot] -= 1;
            push_schreier(&mut out, &a, j, -1);
        } else {
            push_schreier(&mut out, &a, j, 1);
            a[slot] += 1;
        }
    }
    if a.iter().any(|&x| x != 0) {
        return Err(Error::NotInDerived { exponents: a });
    }
    Ok(out)
}

/// A class in `F'_k / F'_{k+1}`: basic commutators in B-letters.
pub type DerivedGradedClass = GradedClass<BLetter>;

/// Explicit limits for derived-class extraction.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum number of distinct B-letters in a rewritten word.
    pub max_b_letters: usize,
    /// Maximum length of a rewritten word.
    pub max_b_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_b_letters: MAX_LETTER as usize,
            max_b_length: 50_000_000,
        }
    }
}

/// The class of a `B`-word in `F'_k / F'_{k+1}`.
pub fn b_word_class(w: &BWord, k: usize, limits: &Limits) -> Result<DerivedGradedClass> {
    if w.len() > limits.max_b_length {
        return Err(Error::ResourceCap(format!(
            "rewritten word has {} letters, limit {}",
            w.len(),
            limits.max_b_length
        )));
    }
    let alphabet = w.alphabet();
    if alphabet.len() > limits.max_b_letters.min(MAX_LETTER as usize) {
        return Err(Error::ResourceCap(format!(
            "{} distinct basis letters, limit {}",
            alphabet.len(),
            limits.max_b_letters.min(MAX_LETTER as usize)
        )));
    }
    let class = collect(&w.index_word(&alphabet), k).map_err(|e| match e {
        Error::NotInLcs { weight, degree, .. } => Error::NotInLcs {
            weight,
            degree,
            term: format!("rewritten word is not in term {weight} over the basis"),
        },
        e => e,
    })?;
    Ok(class.map_leaves(|&j| alphabet[j as usize - 1].clone()))
}

/// The class of `w ∈ F'_k` in `F'_k / F'_{k+1}`.
pub fn derived_class(w: &FreeWord, k: usize) -> Result<DerivedGradedClass> {
    derived_class_limited(w, k, &Limits::default())
}

pub fn derived_class_limited(w: &FreeWord, k: usize, limits: &Limits) -> Result<DerivedGradedClass> {
    b_word_class(&rewrite_to_b(w)?, k, limits)
}

/// Representative `F`-word of a derived class.
pub fn class_word(c: &DerivedGradedClass) -> FreeWord {
    c.to_word_with(&|b: &BLetter| b.expand())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionMode {
    /// Conjugate a representative and re-derive the class.
    Exact,
    /// Relabel `d_1`; only for monomials in `t_1`.
    Fast,
}

/// The `Z[F/F']`-module action `[g]·[x] = [g x g^-1]` on a derived class.
pub fn module_act(
    r: &GroupRingElement,
    c: &DerivedGradedClass,
    mode: ActionMode,
) -> Result<DerivedGradedClass> {
    module_act_limited(r, c, mode, &Limits::default())
}

pub fn module_act_limited(
    r: &GroupRingElement,
    c: &DerivedGradedClass,
    mode: ActionMode,
    limits: &Limits,
) -> Result<DerivedGradedClass> {
    let k = c.weight();
    match mode {
        ActionMode::Fast => {
            let mut out = DerivedGradedClass::zero(k);
            for (m, coef) in r.terms() {
                if m.pairs().iter().any(|&(i, _)| i != 1) {
                    return Err(Error::FastModeUnsupported {
                        monomial: m.to_string(),
                    });
                }
                let e = m.exponent(1);
                let coef = i64::try_from(coef).map_err(|_| Error::Overflow {
                    context: "module coefficient",
                })?;
                out = out.add(&c.map_leaves(|b| b.shift(e)).scale(coef)?)?;
            }
            Ok(out)
        }
        ActionMode::Exact => {
            let rep = class_word(c);
            let terms: Vec<(Monomial, i64)> = r
                .terms()
                .map(|(m, coef)| {
                    i64::try_from(coef)
                        .map(|v| (m.clone(), v))
                        .map_err(|_| Error::Overflow {
                            context: "module coefficient",
                        })
                })
                .collect::<Result<_>>()?;
            let parts: Vec<DerivedGradedClass> = terms
                .par_iter()
                .map(|(m, coef)| derived_class_limited(&rep.conjugate_by(&m.lift()), k, limits)?.scale(*coef))
                .collect::<Result<_>>()?;
            parts
                .iter()
                .try_fold(DerivedGradedClass::zero(k), |acc, p| acc.add(p))
        }
    }
}
