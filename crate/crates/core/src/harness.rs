//! Rank experiments and verification suites.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::derived::{self, ActionMode, DerivedGradedClass};
use crate::error::{Error, Result};
use crate::fox;
use crate::groupring::{abelianize, GroupRingElement, Monomial};
use crate::lcs::{collect, enumerate_basic, lcs_weight, witt_count, CommutatorTree, GradedClass, Leaf};
use crate::linalg;
use crate::mcg::{commutator_class, generator_commutator, johnson_level, DiskMappingClass, Embedding};
use crate::parse::BraidWord;
use crate::words::{FreeWord, Letter};

/// Integer matrix of graded classes against the union of their supports.
#[derive(Clone, Debug)]
pub struct ClassMatrix<L: Leaf> {
    pub columns: Vec<CommutatorTree<L>>,
    pub rows: Vec<Vec<BigInt>>,
}

impl<L: Leaf> ClassMatrix<L> {
    pub fn from_classes(classes: &[GradedClass<L>]) -> Self {
        let mut columns: Vec<CommutatorTree<L>> = classes
            .iter()
            .flat_map(|c| c.terms().map(|(t, _)| t.clone()))
            .collect();
        columns.sort();
        columns.dedup();
        let rows = classes
            .iter()
            .map(|c| columns.iter().map(|t| BigInt::from(c.coefficient(t))).collect())
            .collect();
        ClassMatrix { columns, rows }
    }

    pub fn rank(&self) -> usize {
        integer_rank(&self.rows)
    }
}

/// Rank over `Q` of an integer matrix.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    linalg::rank(rows)
}

/// Outcome of one experiment or check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub experiment: String,
    pub params: BTreeMap<String, Value>,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub millis: u128,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    fn new(experiment: &str, params: Value) -> Self {
        let params = match params {
            Value::Object(m) => m.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Report {
            experiment: experiment.to_string(),
            params,
            expected: Value::Null,
            actual: Value::Null,
            pass: false,
            millis: 0,
            notes: Vec::new(),
        }
    }

    /// Records an error as a failure; resource caps are flagged as
    /// truncation.
    fn fail_with(mut self, e: &Error) -> Self {
        self.pass = false;
        match e {
            Error::ResourceCap(msg) => self.notes.push(format!("TRUNCATED: resource cap exceeded: {msg}")),
            e => self.notes.push(format!("error: {e}")),
        }
        self
    }

    pub fn line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!(
            "[{}] {}({}) expected={} actual={} ({} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.experiment,
            params.join(", "),
            self.expected,
            self.actual,
            self.millis
        );
        for n in &self.notes {
            s.push_str("\n    ");
            s.push_str(n);
        }
        s
    }
}

fn timed(mut r: Report, start: Instant, body: impl FnOnce(&mut Report) -> Result<()>) -> Report {
    let res = body(&mut r);
    r.millis = start.elapsed().as_millis();
    match res {
        Ok(()) => r,
        Err(e) => r.fail_with(&e),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExperimentOptions {
    /// Cross-check the first row against the direct definition.
    pub direct_check: bool,
    /// Append rows from deeper braid words, which must vanish.
    pub kernel_rows: bool,
    pub limits: derived::Limits,
}

/// Rows of the block-embedding experiment: one per basic commutator.
fn thm53_rows(g: u32, k: usize, opts: &ExperimentOptions) -> Result<Vec<DerivedGradedClass>> {
    let e = Embedding::block(g)?;
    let pair = (2, 2 * g);
    enumerate_basic(g - 1, k)
        .par_iter()
        .map(|t| {
            let bw = BraidWord::from_free_word(&t.to_word(), g)?;
            let f = DiskMappingClass::from_braid_word(&bw)?;
            tau_formula_limited(&e, &f, k, pair, &opts.limits)
        })
        .collect()
}

fn tau_formula_limited(
    e: &Embedding,
    f: &DiskMappingClass,
    k: usize,
    pair: (u32, u32),
    limits: &derived::Limits,
) -> Result<DerivedGradedClass> {
    e.tau_magnus_formula_limited(f, k, pair, limits)
}

fn direct_agrees(e: &Embedding, f: &DiskMappingClass, k: usize, pair: (u32, u32), row: &DerivedGradedClass) -> Result<bool> {
    let s = e.extend(f)?;
    Ok(s.tau_magnus_direct(k, &generator_commutator(pair.0, pair.1))? == *row)
}

/// Block embedding of genus `g`: the weight-`k` basic commutators of
/// `E(g-1)` pushed through braids and `τ'_k` on `[γ_1, γ_g]` should have
/// full rank.
pub fn thm53_experiment(g: u32, k: usize, opts: &ExperimentOptions) -> Report {
    let r = Report::new("thm53", json!({"g": g, "k": k}));
    let start = Instant::now();
    timed(r, start, |r| {
        if g < 3 || k < 2 {
            return Err(Error::InvalidParameter(format!("requires g >= 3 and k >= 2, got g={g}, k={k}")));
        }
        let expected = witt_count(g as u64 - 1, k as u64) as usize;
        r.expected = json!({"rank": expected});
        let rows = thm53_rows(g, k, opts)?;
        let rank = ClassMatrix::from_classes(&rows).rank();
        let mut pass = rank == expected;
        let mut actual = json!({"rank": rank, "rows": rows.len()});
        if opts.kernel_rows {
            let e = Embedding::block(g)?;
            let deeper: Vec<bool> = enumerate_basic(g - 1, k + 1)
                .iter()
                .take(2)
                .map(|t| {
                    let bw = BraidWord::from_free_word(&t.to_word(), g)?;
                    let f = DiskMappingClass::from_braid_word(&bw)?;
                    Ok(tau_formula_limited(&e, &f, k, (2, 2 * g), &opts.limits)?.is_zero())
                })
                .collect::<Result<_>>()?;
            pass &= deeper.iter().all(|&z| z);
            actual["kernel_rows_zero"] = json!(deeper);
        }
        if opts.direct_check {
            let t = &enumerate_basic(g - 1, k)[0];
            let f = DiskMappingClass::from_braid_word(&BraidWord::from_free_word(&t.to_word(), g)?)?;
            let ok = direct_agrees(&Embedding::block(g)?, &f, k, (2, 2 * g), &rows[0])?;
            pass &= ok;
            actual["direct_check"] = json!(ok);
        }
        r.actual = actual;
        r.pass = pass;
        Ok(())
    })
}

/// The braid word `[..[[x_2,x_1],x_1],..,x_1]` of weight `k` on 3 strands.
pub fn church_farb_braid(k: usize) -> BraidWord {
    let mut w = FreeWord::generator(2);
    for _ in 1..k {
        w = FreeWord::commutator(&w, &FreeWord::generator(1));
    }
    BraidWord::from_free_word(&w, 3).expect("letters below strand count")
}

/// Church–Farb family: `τ'_k` of `f_k` embedded by `i_1..i_N`, evaluated on
/// `[c_6, c_2]`, should have rank `N`.
pub fn thm54_experiment(k: usize, big_n: u32, opts: &ExperimentOptions) -> Report {
    let r = Report::new("thm54", json!({"k": k, "N": big_n}));
    let start = Instant::now();
    timed(r, start, |r| {
        r.expected = json!({"rank": big_n});
        let f = DiskMappingClass::from_braid_word(&church_farb_braid(k))?;
        let rows: Vec<DerivedGradedClass> = (1..=big_n)
            .into_par_iter()
            .map(|n| tau_formula_limited(&Embedding::church_farb(n)?, &f, k, (6, 2), &opts.limits))
            .collect::<Result<_>>()?;
        let rank = ClassMatrix::from_classes(&rows).rank();
        let mut pass = rank == big_n as usize;
        let mut actual = json!({"rank": rank, "row_terms": rows.iter().map(|c| c.len()).collect::<Vec<_>>()});
        if opts.direct_check {
            let ok = direct_agrees(&Embedding::church_farb(1)?, &f, k, (6, 2), &rows[0])?;
            pass &= ok;
            actual["direct_check"] = json!(ok);
        }
        r.actual = actual;
        r.pass = pass;
        Ok(())
    })
}

/// Seeded random sampling used by the verification suites.
pub mod sample {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A reduced random word of length at most `len` on `n` letters.
    pub fn word(rng: &mut impl Rng, n: u32, len: usize) -> FreeWord {
        let l = rng.gen_range(0..=len);
        FreeWord::reduce((0..l).map(|_| {
            let i = rng.gen_range(1..=n);
            Letter::new(i, if rng.gen_bool(0.5) { 1 } else { -1 }).unwrap()
        }))
    }

    pub fn nonempty_word(rng: &mut impl Rng, n: u32, len: usize) -> FreeWord {
        loop {
            let w = word(rng, n, len);
            if !w.is_identity() {
                return w;
            }
        }
    }

    /// A left-normed `k`-fold commutator of random words.
    pub fn nested_commutator(rng: &mut impl Rng, n: u32, k: usize, len: usize) -> FreeWord {
        let mut w = nonempty_word(rng, n, len);
        for _ in 1..k {
            w = FreeWord::commutator(&w, &nonempty_word(rng, n, len));
        }
        w
    }

    /// A product of conjugated commutators, an element of `F'`.
    pub fn derived_word(rng: &mut impl Rng, n: u32, factors: usize, len: usize) -> FreeWord {
        let mut w = FreeWord::identity();
        for _ in 0..factors {
            let c = FreeWord::commutator(&nonempty_word(rng, n, len), &nonempty_word(rng, n, len));
            w.push_word(&c.conjugate_by(&word(rng, n, len)));
        }
        w
    }
}

fn check(name: &str, params: Value, body: impl FnOnce(&mut Report) -> Result<()>) -> Report {
    timed(Report::new(name, params), Instant::now(), body)
}

pub fn fox_suite() -> Vec<Report> {
    let fundamental = check("fox-fundamental-identity", json!({"words": 200, "max_len": 60, "max_n": 6}), |r| {
        let mut rng = sample::rng(3);
        let mut bad = 0;
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let w = sample::word(&mut rng, n, 60);
            let grad = fox::gradient(&w, n)?;
            let mut rhs = GroupRingElement::zero();
            for (j, d) in grad.iter().enumerate() {
                rhs = &rhs + &(d * &(&GroupRingElement::var(j as u32 + 1) - &GroupRingElement::one()));
            }
            let lhs = &GroupRingElement::monomial(abelianize(&w, n)?, 1) - &GroupRingElement::one();
            bad += (lhs != rhs) as usize;
        }
        r.expected = json!({"failures": 0});
        r.actual = json!({"failures": bad});
        r.pass = bad == 0;
        Ok(())
    });
    let kernel = check("magnus-kernel-church-farb", json!({"n": [1, 2], "v": ["[x2,x1]", "[[x2,x1],x1]"]}), |r| {
        let mut all = true;
        for k in [2, 3] {
            let f = DiskMappingClass::from_braid_word(&church_farb_braid(k))?;
            for n in [1, 2] {
                all &= fox::is_magnus_trivial(&Embedding::church_farb(n)?.extend(&f)?.endo);
            }
        }
        r.expected = json!({"identity_matrix": true});
        r.actual = json!({"identity_matrix": all});
        r.pass = all;
        Ok(())
    });
    vec![fundamental, kernel]
}

pub fn hall_suite() -> Vec<Report> {
    let witt = check("witt-counts", json!({"n": "1..=3", "k": "1..=6"}), |r| {
        let mut mismatches = Vec::new();
        for n in 1..=3u32 {
            for k in 1..=6usize {
                let got = enumerate_basic(n, k).len() as u64;
                if got != witt_count(n as u64, k as u64) {
                    mismatches.push(format!("({n},{k})"));
                }
            }
        }
        r.expected = json!({"mismatches": []});
        r.actual = json!({"mismatches": mismatches});
        r.pass = mismatches.is_empty();
        Ok(())
    });
    let roundtrip = check("collection-round-trip", json!({"samples": 100, "n": 3, "max_k": 4}), |r| {
        let mut rng = sample::rng(5);
        let mut bad = 0;
        for s in 0..100 {
            let k = 1 + s % 4;
            let mut w = FreeWord::identity();
            for _ in 0..rng.gen_range(1..=3) {
                w.push_word(&sample::nested_commutator(&mut rng, 3, k, 3));
            }
            let c = collect(&w, k)?;
            let resid = &w * &c.to_word().inverse();
            bad += (!lcs_weight(&resid, k + 1)?.at_least(k + 1)) as usize;
        }
        r.expected = json!({"failures": 0});
        r.actual = json!({"failures": bad});
        r.pass = bad == 0;
        Ok(())
    });
    let independence = check("basic-independence", json!({"n": "1..=3", "k": "1..=5"}), |r| {
        let mut bad = Vec::new();
        for n in 1..=3u32 {
            for k in 1..=5usize {
                let words: Vec<FreeWord> = enumerate_basic(n, k).iter().map(|t| t.to_word()).collect();
                if expansion_rank(&words, k)? != words.len() {
                    bad.push(format!("({n},{k})"));
                }
            }
        }
        r.expected = json!({"deficient": []});
        r.actual = json!({"deficient": bad});
        r.pass = bad.is_empty();
        Ok(())
    });
    vec![witt, roundtrip, independence]
}

/// Rank of the degree-`k` Magnus expansion vectors of `words`.
pub fn expansion_rank(words: &[FreeWord], k: usize) -> Result<usize> {
    let parts = words
        .iter()
        .map(|w| Ok(crate::lcs::magnus_expand(w, k)?.degree_part(k).clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut keys: Vec<u128> = parts.iter().flat_map(|p| p.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|p| keys.iter().map(|k| BigInt::from(p.get(k).copied().unwrap_or(0))).collect())
        .collect();
    Ok(integer_rank(&rows))
}

pub fn derived_suite() -> Vec<Report> {
    let roundtrip = check("b-basis-round-trip", json!({"samples": 200, "max_n": 6}), |r| {
        let mut rng = sample::rng(11);
        let mut bad = 0;
        for _ in 0..200 {
            let n = rng.gen_range(2..=6);
            let factors = rng.gen_range(1..=3);
            let w = sample::derived_word(&mut rng, n, factors, 4);
            bad += (derived::expand_b(&derived::rewrite_to_b(&w)?) != w) as usize;
        }
        r.expected = json!({"failures": 0});
        r.actual = json!({"failures": bad});
        r.pass = bad == 0;
        Ok(())
    });
    let torsion = check("torsion-spot-check", json!({"classes": 50, "max_weight": 3, "i": "1..=3"}), |r| {
        let mut rng = sample::rng(13);
        let mut zeros = 0;
        for c in random_derived_classes(&mut rng, 50)? {
            for i in 1..=3 {
                let op = &GroupRingElement::one() - &GroupRingElement::var(i);
                let mode = if i == 1 { ActionMode::Fast } else { ActionMode::Exact };
                zeros += derived::module_act(&op, &c, mode)?.is_zero() as usize;
            }
        }
        r.expected = json!({"zero_images": 0});
        r.actual = json!({"zero_images": zeros});
        r.pass = zeros == 0;
        Ok(())
    });
    let modes = check("module-mode-agreement", json!({"classes": 10}), |r| {
        let mut rng = sample::rng(17);
        let mut bad = 0;
        for c in random_derived_classes(&mut rng, 10)? {
            let e = rng.gen_range(-2..=2);
            let op = GroupRingElement::monomial(Monomial::from_pairs([(1, e)]), 1);
            bad += (derived::module_act(&op, &c, ActionMode::Fast)? != derived::module_act(&op, &c, ActionMode::Exact)?) as usize;
        }
        r.expected = json!({"disagreements": 0});
        r.actual = json!({"disagreements": bad});
        r.pass = bad == 0;
        Ok(())
    });
    vec![roundtrip, torsion, modes]
}

/// Nonzero derived classes of weights 1..=3 from nested commutators of
/// random `F'` elements on 3 letters.
pub fn random_derived_classes(rng: &mut impl Rng, count: usize) -> Result<Vec<DerivedGradedClass>> {
    let mut out = Vec::new();
    while out.len() < count {
        let k = 1 + out.len() % 3;
        let mut w = sample::derived_word(rng, 3, 1, 2);
        for _ in 1..k {
            w = FreeWord::commutator(&w, &sample::derived_word(rng, 3, 1, 2));
        }
        let c = derived::derived_class(&w, k)?;
        if !c.is_zero() {
            out.push(c);
        }
    }
    Ok(out)
}

/// Bound on `|a| + |b|` for sampled Morita pairs. Arc prefixes of braid
/// commutators grow roughly geometrically in braid length.
pub const MORITA_MAX_BRAID: usize = 12;

/// Pairs `(a, b)` of elements `[p, q]` of `E(2)_2` with short `p`, `q`, such
/// that `a` and `b` do not commute.
pub fn morita_pairs(rng: &mut impl Rng, count: usize) -> Vec<(FreeWord, FreeWord)> {
    let mut out = Vec::new();
    while out.len() < count {
        let mut draw = || {
            let p = sample::nonempty_word(rng, 2, 2);
            let q = sample::nonempty_word(rng, 2, 2);
            FreeWord::commutator(&p, &q)
        };
        let (a, b) = (draw(), draw());
        if a.is_identity() || b.is_identity() || a.len() + b.len() > MORITA_MAX_BRAID {
            continue;
        }
        if FreeWord::commutator(&a, &b).is_identity() {
            continue;
        }
        out.push((a, b));
    }
    out
}

pub fn mcg_suite() -> Vec<Report> {
    let boundary = check("boundary-fixing", json!({"braids": 20, "strands": [3, 4]}), |r| {
        let mut rng = sample::rng(19);
        let mut bad = 0;
        for s in 0..20 {
            let n = 3 + (s % 2) as u32;
            let w = sample::word(&mut rng, n - 1, 8);
            let f = DiskMappingClass::from_braid_word(&BraidWord::from_free_word(&w, n)?)?;
            bad += (!f.is_boundary_consistent()) as usize;
        }
        r.expected = json!({"failures": 0});
        r.actual = json!({"failures": bad});
        r.pass = bad == 0;
        Ok(())
    });
    let morita = check("morita-depth", json!({"pairs": 10, "max_braid_length": MORITA_MAX_BRAID}), |r| {
        let mut rng = sample::rng(23);
        let mut levels = Vec::new();
        for (a, b) in morita_pairs(&mut rng, 10) {
            let c = commutator_class(&BraidWord::from_free_word(&a, 3)?, &BraidWord::from_free_word(&b, 3)?)?;
            levels.push(johnson_level(&c, 3)?.full_level);
        }
        r.expected = json!({"min_full_level": ">=3"});
        r.actual = json!({"levels": levels.iter().map(|l| l.to_string()).collect::<Vec<_>>()});
        r.pass = levels.iter().all(|l| l.at_least(3));
        Ok(())
    });
    let kernel = check("kernel-containment", json!({"k": 2, "cases": 5}), |r| {
        let mut zero = Vec::new();
        for (v, e, pair) in kernel_cases()? {
            let f = DiskMappingClass::from_braid_word(&BraidWord::from_free_word(&v, 3)?)?;
            zero.push(e.tau_magnus_formula(&f, 2, pair)?.is_zero());
        }
        r.expected = json!({"all_zero": true});
        r.actual = json!({"zero": zero});
        r.pass = zero.iter().all(|&z| z);
        Ok(())
    });
    let oracle = check("formula-vs-direct", json!({"k": 2, "n": [1, 2, 3], "pair": "[c6,c2]"}), |r| {
        let f = DiskMappingClass::from_braid_word(&church_farb_braid(2))?;
        let mut agree = Vec::new();
        for n in 1..=3 {
            let e = Embedding::church_farb(n)?;
            let row = e.tau_magnus_formula(&f, 2, (6, 2))?;
            agree.push(direct_agrees(&e, &f, 2, (6, 2), &row)?);
        }
        r.expected = json!({"agree": [true, true, true]});
        r.actual = json!({"agree": agree});
        r.pass = agree.iter().all(|&a| a);
        Ok(())
    });
    let theta = check("theta-mu-identities", json!({"samples": 20}), |r| {
        let mut rng = sample::rng(29);
        let mut bad = 0;
        for _ in 0..20 {
            let v = sample::word(&mut rng, 2, 8);
            let f = DiskMappingClass::from_braid_word(&BraidWord::from_free_word(&v, 3)?)?;
            let eta = v.exponent_sum(1);
            bad += (f.arc_prefix(3).kill(&[3]) != v) as usize;
            bad += (f.arc_prefix(1).kill(&[3]) != FreeWord::generator(1).pow(eta)) as usize;
        }
        r.expected = json!({"failures": 0});
        r.actual = json!({"failures": bad});
        r.pass = bad == 0;
        Ok(())
    });
    vec![boundary, morita, kernel, oracle, theta]
}

pub type KernelCase = (FreeWord, Embedding, (u32, u32));

/// Elements of `E(2)_3` with an embedding and a crossing pair.
pub fn kernel_cases() -> Result<Vec<KernelCase>> {
    let p = |s: &str| crate::parse::parse_word(s);
    Ok(vec![
        (p("[[x2,x1],x1]")?, Embedding::church_farb(1)?, (6, 2)),
        (p("[[x2,x1],x2]")?, Embedding::church_farb(1)?, (6, 2)),
        (p("[[x2,x1],x1]")?, Embedding::church_farb(2)?, (6, 2)),
        (p("[[x2,x1],x1]")?, Embedding::block(3)?, (2, 6)),
        (p("[[x1,x2],x2^-1]")?, Embedding::block(3)?, (2, 6)),
    ])
}

pub fn thm53_suite(opts: &ExperimentOptions) -> Vec<Report> {
    let kernel = ExperimentOptions { kernel_rows: true, ..*opts };
    vec![thm53_experiment(3, 2, &kernel), thm53_experiment(3, 3, opts)]
}

pub fn thm54_suite(opts: &ExperimentOptions) -> Vec<Report> {
    vec![thm54_experiment(2, 4, opts), thm54_experiment(3, 3, opts)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fox,
    Hall,
    Derived,
    Mcg,
    Thm53,
    Thm54,
    All,
}

pub fn run_suite(suite: Suite, opts: &ExperimentOptions) -> Vec<Report> {
    match suite {
        Suite::Fox => fox_suite(),
        Suite::Hall => hall_suite(),
        Suite::Derived => derived_suite(),
        Suite::Mcg => mcg_suite(),
        Suite::Thm53 => thm53_suite(opts),
        Suite::Thm54 => thm54_suite(opts),
        Suite::All => [Suite::Fox, Suite::Hall, Suite::Derived, Suite::Mcg, Suite::Thm53, Suite::Thm54]
            .into_iter()
            .flat_map(|s| run_suite(s, opts))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_distinct_commutators() {
        let b = |d0: i64| CommutatorTree::leaf(derived::BLetter::new(1, 2, vec![d0, 0]).unwrap());
        let c1 = GradedClass::basic(CommutatorTree::node(b(1), b(0)));
        let c2 = GradedClass::basic(CommutatorTree::node(b(2), b(0)));
        assert_eq!(ClassMatrix::from_classes(&[c1.clone(), c2]).rank(), 2);
        assert_eq!(ClassMatrix::from_classes(&[c1.clone(), c1.clone()]).rank(), 1);
        assert_eq!(ClassMatrix::from_classes(&[c1]).rank(), 1);
    }

    #[test]
    fn small_experiments() {
        let opts = ExperimentOptions {
            direct_check: true,
            ..Default::default()
        };
        let r = thm54_experiment(2, 1, &opts);
        assert!(r.pass, "{}", r.line());
        let r = thm53_experiment(3, 2, &ExperimentOptions { kernel_rows: true, ..opts });
        assert!(r.pass, "{}", r.line());
    }

    #[test]
    fn truncation_is_reported() {
        let opts = ExperimentOptions {
            limits: derived::Limits {
                max_b_letters: 3,
                ..Default::default()
            },
            ..Default::default()
        };
        let r = thm54_experiment(2, 1, &opts);
        assert!(!r.pass);
        assert!(r.notes[0].starts_with("TRUNCATED"));
    }
}
