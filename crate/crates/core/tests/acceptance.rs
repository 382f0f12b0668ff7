//! Acceptance criteria AC-1 through AC-12. Each prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails or runs over its limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use magnus_core::derived::{expand_b, module_act, rewrite_to_b, ActionMode};
use magnus_core::fox::{gradient, magnus_matrix};
use magnus_core::groupring::{abelianize, GroupRingElement};
use magnus_core::harness::{
    church_farb_braid, kernel_cases, morita_pairs, random_derived_classes, sample, thm53_experiment,
    thm54_experiment, ExperimentOptions,
};
use magnus_core::lcs::{collect, enumerate_basic, lcs_weight, CommutatorTree, GradedClass};
use magnus_core::mcg::{
    commutator_class, generator_commutator, johnson_level, tau_disk, DiskMappingClass, Embedding,
};
use magnus_core::parse::{parse_braid, BraidWord};
use magnus_core::lcs::Leaf;
use magnus_core::FreeWord;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn run(name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    let elapsed = start.elapsed();
    let (pass, detail) = match result {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over time limit")),
        Err(d) => (false, d),
    };
    println!(
        "[{}] {name}: {detail} ({:.2?} / limit {:?})",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        limit
    );
    pass
}

/// Witt's formula with a locally computed Möbius function.
fn witt(n: u64, k: u64) -> u64 {
    let mu = |mut d: u64| {
        let mut sign = 1i64;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if d > 1 {
            sign = -sign;
        }
        sign
    };
    let total: i64 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mu(d) * (n as i64).pow((k / d) as u32))
        .sum();
    (total / k as i64) as u64
}

/// Rank over Q by plain Gaussian elimination on rationals.
fn rational_rank<L: Leaf>(classes: &[GradedClass<L>]) -> usize {
    let mut cols: Vec<&CommutatorTree<L>> = classes.iter().flat_map(|c| c.terms().map(|(t, _)| t)).collect();
    cols.sort();
    cols.dedup();
    let mut m: Vec<Vec<BigRational>> = classes
        .iter()
        .map(|c| cols.iter().map(|t| BigRational::from_integer(BigInt::from(c.coefficient(t)))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn left_normed(entries: &[FreeWord]) -> FreeWord {
    entries[1..].iter().fold(entries[0].clone(), |acc, e| FreeWord::commutator(&acc, e))
}

fn ac1() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3u32 {
        for k in 1..=6usize {
            let got = enumerate_basic(n, k).len() as u64;
            if got != witt(n as u64, k as u64) {
                bad.push(format!("(n={n},k={k}) {got} vs {}", witt(n as u64, k as u64)));
            }
        }
    }
    let spot = (enumerate_basic(2, 3).len(), enumerate_basic(3, 4).len());
    ensure(
        bad.is_empty() && spot == (2, 18),
        format!("18 counts checked, (2,3)={} (3,4)={}, mismatches {bad:?}", spot.0, spot.1),
    )
}

fn ac2() -> Outcome {
    let mut rng = sample::rng(101);
    let mut bad = 0;
    for s in 0..100 {
        let k = 1 + s % 4;
        let factors = rng.gen_range(1..=3);
        let mut w = FreeWord::identity();
        for _ in 0..factors {
            let entries: Vec<FreeWord> = (0..k).map(|_| sample::nonempty_word(&mut rng, 3, 3)).collect();
            w = &w * &left_normed(&entries);
        }
        let c = collect(&w, k).map_err(|e| e.to_string())?;
        let residual = &w * &c.to_word().inverse();
        bad += !lcs_weight(&residual, k + 1).map_err(|e| e.to_string())?.at_least(k + 1) as usize;
    }
    ensure(bad == 0, format!("100 words, k <= 4, {bad} residuals too shallow"))
}

fn ac3() -> Outcome {
    let mut rng = sample::rng(103);
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=60);
        let w = sample::word(&mut rng, n, len);
        let one = GroupRingElement::one();
        let lhs = &GroupRingElement::monomial(abelianize(&w, n).map_err(|e| e.to_string())?, 1) - &one;
        let mut rhs = GroupRingElement::zero();
        for (j, d) in gradient(&w, n).map_err(|e| e.to_string())?.iter().enumerate() {
            rhs = &rhs + &(d * &(&GroupRingElement::var(j as u32 + 1) - &one));
        }
        bad += (lhs != rhs) as usize;
    }
    ensure(bad == 0, format!("200 words, {bad} failures"))
}

fn ac4() -> Outcome {
    let mut out = Vec::new();
    for n in 1..=2 {
        let e = Embedding::church_farb(n).map_err(|e| e.to_string())?;
        for v in ["[x2,x1]", "[[x2,x1],x1]"] {
            let f = DiskMappingClass::from_braid_word(&parse_braid(v, Some(3)).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let m = magnus_matrix(&e.extend(&f).map_err(|e| e.to_string())?.endo);
            out.push(m.size() == 6 && m.is_identity());
        }
    }
    ensure(out.iter().all(|&b| b), format!("identity: {out:?}"))
}

fn ac5() -> Outcome {
    let f = DiskMappingClass::from_braid_word(&parse_braid("[x2,x1]", Some(3)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let mut agree = Vec::new();
    for n in 1..=3 {
        let e = Embedding::church_farb(n).map_err(|e| e.to_string())?;
        let formula = e.tau_magnus_formula(&f, 2, (6, 2)).map_err(|e| e.to_string())?;
        let direct = e
            .extend(&f)
            .and_then(|g| g.tau_magnus_direct(2, &generator_commutator(6, 2)))
            .map_err(|e| e.to_string())?;
        agree.push(!formula.is_zero() && formula == direct);
    }
    ensure(agree.iter().all(|&a| a), format!("n = 1..3 agree: {agree:?}"))
}

fn ac6(k: usize, big_n: u32) -> Outcome {
    let report = thm54_experiment(k, big_n, &ExperimentOptions { direct_check: true, ..Default::default() });
    let f = DiskMappingClass::from_braid_word(&church_farb_braid(k)).map_err(|e| e.to_string())?;
    let rows = (1..=big_n)
        .map(|n| Embedding::church_farb(n)?.tau_magnus_formula(&f, k, (6, 2)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let rank = rational_rank(&rows);
    ensure(
        report.pass && rank == big_n as usize,
        format!("report {} rank {}, independent rank {rank}, expected {big_n}", report.pass, report.actual["rank"]),
    )
}

fn ac7() -> Outcome {
    let opts = ExperimentOptions { direct_check: true, kernel_rows: true, ..Default::default() };
    let mut detail = Vec::new();
    let mut ok = true;
    for (k, expected) in [(2usize, 1usize), (3, 2)] {
        let report = thm53_experiment(3, k, &opts);
        let e = Embedding::block(3).map_err(|e| e.to_string())?;
        let rows = enumerate_basic(2, k)
            .iter()
            .map(|t| {
                let f = DiskMappingClass::from_braid_word(&BraidWord::from_free_word(&t.to_word(), 3)?)?;
                e.tau_magnus_formula(&f, k, (2, 6))
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let rank = rational_rank(&rows);
        ok &= report.pass && rank == expected;
        detail.push(format!("k={k}: report {} rank {rank}/{expected}", report.pass));
    }
    ensure(ok, detail.join(", "))
}

fn ac8() -> Outcome {
    let mut rng = sample::rng(107);
    let mut levels = Vec::new();
    for (a, b) in morita_pairs(&mut rng, 10) {
        let (ba, bb) = (BraidWord::from_free_word(&a, 3), BraidWord::from_free_word(&b, 3));
        let (ba, bb) = (ba.map_err(|e| e.to_string())?, bb.map_err(|e| e.to_string())?);
        for w in [&ba, &bb] {
            let lvl = johnson_level(&DiskMappingClass::from_braid_word(w).map_err(|e| e.to_string())?, 3);
            if !lvl.map_err(|e| e.to_string())?.full_level.at_least(2) {
                return Err("sampled factor below level 2".into());
            }
        }
        let c = commutator_class(&ba, &bb).map_err(|e| e.to_string())?;
        levels.push(johnson_level(&c, 3).map_err(|e| e.to_string())?.full_level);
    }
    ensure(
        levels.len() == 10 && levels.iter().all(|l| l.at_least(3)),
        format!("10 pairs, levels {}", levels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")),
    )
}

fn ac9() -> Outcome {
    let mut zero = Vec::new();
    for (v, e, pair) in kernel_cases().map_err(|e| e.to_string())? {
        if !lcs_weight(&v, 4).map_err(|e| e.to_string())?.at_least(3) {
            return Err(format!("{v} is not in E(2)_3"));
        }
        let f = BraidWord::from_free_word(&v, 3).and_then(|b| DiskMappingClass::from_braid_word(&b));
        let class = e.tau_magnus_formula(&f.map_err(|e| e.to_string())?, 2, pair);
        zero.push(class.map_err(|e| e.to_string())?.is_zero());
    }
    ensure(zero.len() == 5 && zero.iter().all(|&z| z), format!("zero: {zero:?}"))
}

fn ac10() -> Outcome {
    let mut rng = sample::rng(109);
    let classes = random_derived_classes(&mut rng, 50).map_err(|e| e.to_string())?;
    let mut zeros = 0;
    for c in &classes {
        if c.is_zero() || c.weight() > 3 {
            return Err("bad sample".into());
        }
        for i in 1..=3 {
            let r = &GroupRingElement::one() - &GroupRingElement::var(i);
            zeros += module_act(&r, c, ActionMode::Exact).map_err(|e| e.to_string())?.is_zero() as usize;
        }
    }
    ensure(zeros == 0, format!("50 classes x 3 generators, {zeros} zero images"))
}

fn ac11() -> Outcome {
    let mut rng = sample::rng(113);
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let factors = rng.gen_range(1..=4);
        let w = sample::derived_word(&mut rng, n, factors, 4);
        bad += (expand_b(&rewrite_to_b(&w).map_err(|e| e.to_string())?) != w) as usize;
    }
    ensure(bad == 0, format!("200 words, {bad} failures"))
}

fn ac12() -> Outcome {
    let mut rng = sample::rng(127);
    let mut bad = 0;
    for s in 0..20 {
        let v = if s % 2 == 0 {
            sample::word(&mut rng, 2, 8)
        } else {
            let k = 2 + s % 3 / 2;
            left_normed(&(0..k).map(|_| sample::nonempty_word(&mut rng, 2, 2)).collect::<Vec<_>>())
        };
        let f = BraidWord::from_free_word(&v, 3).and_then(|b| DiskMappingClass::from_braid_word(&b));
        let f = f.map_err(|e| e.to_string())?;
        let eta = v.exponent_sum(1);
        bad += (f.arc_prefix(3).kill(&[3]) != v) as usize;
        bad += (f.arc_prefix(1).kill(&[3]) != FreeWord::generator(1).pow(eta)) as usize;
        // class-level: the degree-k Johnson image projected away from y3
        let k = match lcs_weight(&v, 4).map_err(|e| e.to_string())? {
            magnus_core::lcs::LcsWeight::Exact(k) => k,
            _ => continue,
        };
        let tau = tau_disk(&f, k).map_err(|e| e.to_string())?;
        let theta = tau[2].kill_letter(&3);
        let mu = tau[0].kill_letter(&3);
        bad += (theta != collect(&v, k).map_err(|e| e.to_string())?) as usize;
        let mu_expected = collect(&FreeWord::generator(1).pow(eta), k).map_err(|e| e.to_string())?;
        bad += (mu != mu_expected) as usize;
    }
    ensure(bad == 0, format!("20 braids, {bad} failures"))
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run("AC-1 Witt counts", secs(5), ac1),
        run("AC-2 collection round trip", secs(30), ac2),
        run("AC-3 Fox fundamental identity", secs(5), ac3),
        run("AC-4 Magnus kernel membership", secs(30), ac4),
        run("AC-5 formula vs direct", secs(120), ac5),
        run("AC-6 infinite rank (k=2, N=4)", secs(300), || ac6(2, 4)),
        run("AC-6 infinite rank (k=3, N=3)", secs(300), || ac6(3, 3)),
        run("AC-7 block rank", secs(300), ac7),
        run("AC-8 Morita depth", secs(60), ac8),
        run("AC-9 kernel containment", secs(60), ac9),
        run("AC-10 torsion spot check", secs(60), ac10),
        run("AC-11 B-basis round trip", secs(10), ac11),
        run("AC-12 theta/mu identities", secs(60), ac12),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
