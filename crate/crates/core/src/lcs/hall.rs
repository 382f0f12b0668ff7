//! Formal commutators and Hall basic commutators.
//!
//! Trees are ordered by weight, then (for leaves) by letter, then by left
//! child and right child. A node `[l, r]` is basic when `l` and `r` are
//! basic, `l > r`, and, if `l = [s, t]`, `r >= t`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::lcs::series::{Key, Poly};
use crate::words::FreeWord;

/// Leaf labels usable in commutator trees.
pub trait Leaf: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Leaf for u32 {
    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{self}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CommutatorTree<L> {
    Leaf(L),
    Node {
        left: Arc<CommutatorTree<L>>,
        right: Arc<CommutatorTree<L>>,
        weight: usize,
    },
}

impl<L: Leaf> CommutatorTree<L> {
    pub fn leaf(l: L) -> Self {
        CommutatorTree::Leaf(l)
    }

    pub fn node(left: CommutatorTree<L>, right: CommutatorTree<L>) -> Self {
        let weight = left.weight() + right.weight();
        CommutatorTree::Node {
            left: Arc::new(left),
            right: Arc::new(right),
            weight,
        }
    }

    pub fn weight(&self) -> usize {
        match self {
            CommutatorTree::Leaf(_) => 1,
            CommutatorTree::Node { weight, .. } => *weight,
        }
    }

    pub fn children(&self) -> Option<(&CommutatorTree<L>, &CommutatorTree<L>)> {
        match self {
            CommutatorTree::Leaf(_) => None,
            CommutatorTree::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            CommutatorTree::Leaf(l) => out.push(l),
            CommutatorTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn contains_leaf(&self, l: &L) -> bool {
        match self {
            CommutatorTree::Leaf(x) => x == l,
            CommutatorTree::Node { left, right, .. } => {
                left.contains_leaf(l) || right.contains_leaf(l)
            }
        }
    }

    pub fn is_basic(&self) -> bool {
        match self {
            CommutatorTree::Leaf(_) => true,
            CommutatorTree::Node { left, right, .. } => {
                if !(left.is_basic() && right.is_basic() && **left > **right) {
                    return false;
                }
                match left.children() {
                    Some((_, t)) => **right >= *t,
                    None => true,
                }
            }
        }
    }

    pub fn map_leaves<M: Leaf>(&self, f: &impl Fn(&L) -> M) -> CommutatorTree<M> {
        match self {
            CommutatorTree::Leaf(l) => CommutatorTree::Leaf(f(l)),
            CommutatorTree::Node { left, right, .. } => {
                CommutatorTree::node(left.map_leaves(f), right.map_leaves(f))
            }
        }
    }

    /// The group element: leaves via `f`, nodes as `a b a^-1 b^-1`.
    pub fn to_word_with(&self, f: &impl Fn(&L) -> FreeWord) -> FreeWord {
        match self {
            CommutatorTree::Leaf(l) => f(l),
            CommutatorTree::Node { left, right, .. } => {
                FreeWord::commutator(&left.to_word_with(f), &right.to_word_with(f))
            }
        }
    }
}

impl CommutatorTree<u32> {
    pub fn to_word(&self) -> FreeWord {
        self.to_word_with(&|&l| FreeWord::generator(l))
    }

    /// Lie polynomial `[a,b] = ab - ba` in the letters of the tree.
    pub fn lie_polynomial(&self) -> Poly {
        match self {
            CommutatorTree::Leaf(l) => {
                let mut p = Poly::default();
                p.insert(*l as Key, 1);
                p
            }
            CommutatorTree::Node { left, right, .. } => {
                let (a, b) = (left.lie_polynomial(), right.lie_polynomial());
                let (da, db) = (left.weight(), right.weight());
                let mut p = Poly::default();
                for (&ka, &ca) in &a {
                    for (&kb, &cb) in &b {
                        *p.entry((ka << (16 * db)) | kb).or_default() += ca * cb;
                        *p.entry((kb << (16 * da)) | ka).or_default() -= ca * cb;
                    }
                }
                p.retain(|_, c| *c != 0);
                p
            }
        }
    }
}

impl<L: Leaf> Ord for CommutatorTree<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal => {}
            o => return o,
        }
        match (self, other) {
            (CommutatorTree::Leaf(a), CommutatorTree::Leaf(b)) => a.cmp(b),
            (
                CommutatorTree::Node {
                    left: la,
                    right: ra,
                    ..
                },
                CommutatorTree::Node {
                    left: lb,
                    right: rb,
                    ..
                },
            ) => la.cmp(lb).then_with(|| ra.cmp(rb)),
            (CommutatorTree::Leaf(_), _) => Ordering::Less,
            (_, CommutatorTree::Leaf(_)) => Ordering::Greater,
        }
    }
}

impl<L: Leaf> PartialOrd for CommutatorTree<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Leaf> fmt::Display for CommutatorTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorTree::Leaf(l) => l.fmt_leaf(f),
            CommutatorTree::Node { left, right, .. } => write!(f, "[{left},{right}]"),
        }
    }
}

impl<L: Leaf> fmt::Debug for CommutatorTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn mobius(mut n: u64) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Number of weight-`k` basic commutators on `n` letters (Witt's formula).
pub fn witt_count(n: u64, k: u64) -> u64 {
    assert!(k >= 1);
    let mut s: i128 = 0;
    for d in 1..=k {
        if k.is_multiple_of(d) {
            s += mobius(d) as i128 * (n as i128).pow((k / d) as u32);
        }
    }
    (s / k as i128) as u64
}

/// All basic commutators of weight exactly `k` on letters `1..=n`, in
/// increasing order.
pub fn enumerate_basic(n: u32, k: usize) -> Vec<CommutatorTree<u32>> {
    assert!(k >= 1);
    let mut by_weight: Vec<Vec<CommutatorTree<u32>>> = vec![Vec::new(), (1..=n).map(CommutatorTree::leaf).collect()];
    for w in 2..=k {
        let mut out = Vec::new();
        for a in w.div_ceil(2)..w {
            let b = w - a;
            for l in &by_weight[a] {
                for r in &by_weight[b] {
                    if l > r && l.children().is_none_or(|(_, t)| r >= t) {
                        out.push(CommutatorTree::node(l.clone(), r.clone()));
                    }
                }
            }
        }
        out.sort();
        by_weight.push(out);
    }
    by_weight.swap_remove(k)
}

/// Basic commutators whose multiset of leaves is given by `content`:
/// letter `j + 1` occurs `content[j]` times. Sorted increasingly.
fn basics_for_pattern(content: &[u32]) -> Vec<CommutatorTree<u32>> {
    fn rec(
        content: &[u32],
        memo: &mut HashMap<Vec<u32>, Vec<CommutatorTree<u32>>>,
    ) -> Vec<CommutatorTree<u32>> {
        if let Some(v) = memo.get(content) {
            return v.clone();
        }
        let total: u32 = content.iter().sum();
        let mut out = Vec::new();
        if total == 1 {
            let j = content.iter().position(|&m| m == 1).unwrap();
            out.push(CommutatorTree::leaf(j as u32 + 1));
        } else {
            // Every sub-multiset for the left child, complement on the right.
            let mut left = vec![0u32; content.len()];
            loop {
                let mut j = 0;
                while j < content.len() && left[j] == content[j] {
                    left[j] = 0;
                    j += 1;
                }
                if j == content.len() {
                    break;
                }
                left[j] += 1;
                let lw: u32 = left.iter().sum();
                if lw == total || 2 * lw < total {
                    continue;
                }
                let right: Vec<u32> = content.iter().zip(&left).map(|(c, l)| c - l).collect();
                let ls = rec(&left, memo);
                let rs = rec(&right, memo);
                for l in &ls {
                    for r in &rs {
                        if l > r && l.children().is_none_or(|(_, t)| r >= t) {
                            out.push(CommutatorTree::node(l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        out.sort();
        memo.insert(content.to_vec(), out.clone());
        out
    }
    rec(content, &mut HashMap::new())
}

/// Data for solving in one content class: the basics, the monomials their
/// Lie polynomials span, and an exact left inverse restricted to pivot
/// monomials.
pub(crate) struct PatternBasis {
    pub trees: Vec<CommutatorTree<u32>>,
    /// Lie polynomial of each tree over normalized letters.
    pub polys: Vec<Poly>,
    /// Pivot monomials (normalized keys), one per tree.
    pub pivots: Vec<Key>,
    /// `inverse[p][t] / denominator` recovers the coefficient of tree `t`
    /// from the pivot values.
    pub inverse: Vec<Vec<num_bigint::BigInt>>,
    pub denominator: num_bigint::BigInt,
}

fn build_pattern(content: &[u32]) -> PatternBasis {
    let trees = basics_for_pattern(content);
    let polys: Vec<Poly> = trees.iter().map(|t| t.lie_polynomial()).collect();
    let mut keys: Vec<Key> = polys.iter().flat_map(|p| p.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<Vec<num_bigint::BigInt>> = polys
        .iter()
        .map(|p| keys.iter().map(|k| p.get(k).copied().unwrap_or(0).into()).collect())
        .collect();
    let cols = crate::linalg::pivot_columns(&rows);
    assert_eq!(cols.len(), trees.len(), "basic commutators are independent");
    let sub: Vec<Vec<num_bigint::BigInt>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    // c · sub = v_P  ⇒  c = v_P · sub^{-1}.
    let (inverse, denominator) =
        crate::linalg::integer_inverse(&sub).expect("pivot submatrix is invertible");
    PatternBasis {
        trees,
        polys,
        pivots: cols.iter().map(|&c| keys[c]).collect(),
        inverse,
        denominator,
    }
}

type PatternCache = Mutex<HashMap<Vec<u32>, Arc<PatternBasis>>>;

fn cache() -> &'static PatternCache {
    static CACHE: OnceLock<PatternCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached basis data for a normalized content pattern.
pub(crate) fn pattern_basis(content: &[u32]) -> Arc<PatternBasis> {
    if let Some(p) = cache().lock().unwrap().get(content) {
        return p.clone();
    }
    let built = Arc::new(build_pattern(content));
    cache()
        .lock()
        .unwrap()
        .entry(content.to_vec())
        .or_insert(built)
        .clone()
}

/// Basic commutators with a given leaf multiset, over arbitrary ordered
/// leaves. Sorted increasingly.
pub fn basics_with_content<L: Leaf>(content: &BTreeMap<L, u32>) -> Vec<CommutatorTree<L>> {
    let letters: Vec<&L> = content.keys().collect();
    let pattern: Vec<u32> = content.values().copied().collect();
    pattern_basis(&pattern)
        .trees
        .iter()
        .map(|t| t.map_leaves(&|&j| letters[j as usize - 1].clone()))
        .collect()
}
