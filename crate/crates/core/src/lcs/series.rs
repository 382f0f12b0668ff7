//! Truncated Magnus expansion `x_i ↦ 1 + X_i` into noncommutative power
//! series with integer coefficients.
//!
//! A degree-`d` monomial `X_{a_1} ... X_{a_d}` is packed into a `u128` with
//! 16 bits per letter (first letter most significant), so letters must fit in
//! 16 bits and degrees are at most [`MAX_DEGREE`]. Terms are bucketed by
//! degree.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::words::FreeWord;

pub const MAX_DEGREE: usize = 8;
pub const MAX_LETTER: u32 = u16::MAX as u32;

pub type Key = u128;
pub type Poly = FxHashMap<Key, i128>;

pub fn pack(letters: &[u32]) -> Key {
    letters.iter().fold(0, |k, &l| (k << 16) | l as Key)
}

pub fn unpack(key: Key, degree: usize) -> Vec<u32> {
    (0..degree)
        .map(|j| ((key >> (16 * (degree - 1 - j))) & 0xFFFF) as u32)
        .collect()
}

fn bump(p: &mut Poly, key: Key, c: i128) -> Result<()> {
    use std::collections::hash_map::Entry;
    match p.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o
                .get()
                .checked_add(c)
                .ok_or(Error::Overflow { context: "magnus expansion" })?;
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
    Ok(())
}

/// A power series truncated above degree `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: usize,
    buckets: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn one(cap: usize) -> Result<Self> {
        if cap > MAX_DEGREE {
            return Err(Error::CapOutOfRange {
                cap,
                max: MAX_DEGREE,
            });
        }
        let mut buckets = vec![Poly::default(); cap + 1];
        buckets[0].insert(0, 1);
        Ok(TruncatedSeries { cap, buckets })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Right multiplication by `1 + X_l`, or by its inverse if `inverse`.
    pub fn mul_letter(&mut self, l: u32, inverse: bool) -> Result<()> {
        if l == 0 || l > MAX_LETTER {
            return Err(Error::ResourceCap(format!(
                "series letter {l} outside 1..={MAX_LETTER}"
            )));
        }
        let l = l as Key;
        if inverse {
            // S' (1 + X) = S, solved upward in degree.
            for d in 1..=self.cap {
                let (lo, hi) = self.buckets.split_at_mut(d);
                for (&k, &c) in lo[d - 1].iter() {
                    bump(&mut hi[0], (k << 16) | l, -c)?;
                }
            }
        } else {
            for d in (1..=self.cap).rev() {
                let (lo, hi) = self.buckets.split_at_mut(d);
                for (&k, &c) in lo[d - 1].iter() {
                    bump(&mut hi[0], (k << 16) | l, c)?;
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let cap = self.cap.min(other.cap);
        let mut out = TruncatedSeries {
            cap,
            buckets: vec![Poly::default(); cap + 1],
        };
        for da in 0..=cap {
            for db in 0..=cap - da {
                for (&ka, &ca) in &self.buckets[da] {
                    for (&kb, &cb) in &other.buckets[db] {
                        let c = ca
                            .checked_mul(cb)
                            .ok_or(Error::Overflow { context: "series product" })?;
                        bump(&mut out.buckets[da + db], (ka << (16 * db)) | kb, c)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Nonzero terms of degree `d`.
    pub fn degree_part(&self, d: usize) -> &Poly {
        &self.buckets[d]
    }

    pub fn coefficient(&self, letters: &[u32]) -> i128 {
        self.buckets
            .get(letters.len())
            .and_then(|b| b.get(&pack(letters)))
            .copied()
            .unwrap_or(0)
    }

    /// Terms sorted by degree, then descending by letter sequence.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, i128)> {
        let mut out = Vec::new();
        for (d, b) in self.buckets.iter().enumerate() {
            let mut ks: Vec<_> = b.iter().collect();
            ks.sort_by(|a, b| b.0.cmp(a.0));
            out.extend(ks.into_iter().map(|(&k, &c)| (unpack(k, d), c)));
        }
        out
    }

    /// Smallest positive degree with a nonzero term.
    pub fn lowest_nontrivial_degree(&self) -> Option<usize> {
        (1..=self.cap).find(|&d| !self.buckets[d].is_empty())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (ls, c)) in terms.iter().enumerate() {
            let neg = *c < 0;
            let a = c.unsigned_abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if ls.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            let mut j = 0;
            while j < ls.len() {
                let mut r = j;
                while r < ls.len() && ls[r] == ls[j] {
                    r += 1;
                }
                write!(f, "X{}", ls[j])?;
                if r - j > 1 {
                    write!(f, "^{}", r - j)?;
                }
                j = r;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Magnus expansion of `w` up to and including degree `cap`.
pub fn magnus_expand(w: &FreeWord, cap: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(cap)?;
    for l in w.letters() {
        s.mul_letter(l.index(), l.is_inverse())?;
    }
    Ok(s)
}

/// Position of a word in the lower central series, as certified by a
/// truncated expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LcsWeight {
    /// The empty word.
    Identity,
    /// In term `k` but not in term `k + 1`.
    Exact(usize),
    /// In term `k`; deeper membership was not tested.
    AtLeast(usize),
}

impl LcsWeight {
    fn rank(self) -> (usize, u8) {
        match self {
            LcsWeight::Exact(k) => (k, 0),
            LcsWeight::AtLeast(k) => (k, 1),
            LcsWeight::Identity => (usize::MAX, 2),
        }
    }

    /// Whether this certifies membership in term `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            LcsWeight::Identity => true,
            LcsWeight::Exact(j) | LcsWeight::AtLeast(j) => j >= k,
        }
    }
}

impl Ord for LcsWeight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for LcsWeight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LcsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsWeight::Identity => write!(f, "identity"),
            LcsWeight::Exact(k) => write!(f, "{k}"),
            LcsWeight::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Lower central series weight of `w`, testing degrees below `cap`.
pub fn lcs_weight(w: &FreeWord, cap: usize) -> Result<LcsWeight> {
    if !(2..=MAX_DEGREE + 1).contains(&cap) {
        return Err(Error::CapOutOfRange {
            cap,
            max: MAX_DEGREE + 1,
        });
    }
    if w.is_identity() {
        return Ok(LcsWeight::Identity);
    }
    let s = magnus_expand(w, cap - 1)?;
    Ok(match s.lowest_nontrivial_degree() {
        Some(d) => LcsWeight::Exact(d),
        None => LcsWeight::AtLeast(cap),
    })
}
