use magnus_core::harness::{integer_rank, run_suite, ExperimentOptions, Report, Suite};
use num_bigint::BigInt;
use proptest::prelude::*;

fn det(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == r)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Largest size of a nonzero minor.
fn minors_rank(m: &[Vec<i128>]) -> usize {
    let (rows, cols) = (m.len(), m.first().map_or(0, |r| r.len()));
    (1..=rows.min(cols))
        .rev()
        .find(|&r| {
            subsets(rows, r).iter().any(|rs| {
                subsets(cols, r).iter().any(|cs| {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    det(&sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn rank_matches_minors(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![Just(0i128), -3i128..=3], c), r)
    })) {
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert_eq!(integer_rank(&big), minors_rank(&m));
    }

    #[test]
    fn dependent_rows_do_not_count(a in prop::collection::vec(-3i128..=3, 4), b in prop::collection::vec(-3i128..=3, 4), s in -3i128..=3) {
        let c: Vec<i128> = a.iter().zip(&b).map(|(x, y)| x + s * y).collect();
        let m = vec![a, b, c];
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert!(integer_rank(&big) <= 2);
        prop_assert_eq!(integer_rank(&big), minors_rank(&m));
    }
}

fn strip_timing(reports: &[Report]) -> String {
    let mut v = serde_json::to_value(reports).unwrap();
    for r in v.as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("millis");
    }
    v.to_string()
}

#[test]
fn reports_are_reproducible() {
    let opts = ExperimentOptions::default();
    let a = run_suite(Suite::Hall, &opts);
    let b = run_suite(Suite::Hall, &opts);
    assert_eq!(strip_timing(&a), strip_timing(&b));
    assert!(a.iter().all(|r| r.pass));
}

#[test]
fn json_field_names_are_stable() {
    let reports = run_suite(Suite::Fox, &ExperimentOptions::default());
    let v = serde_json::to_value(&reports).unwrap();
    for key in ["experiment", "params", "expected", "actual", "pass", "millis"] {
        assert!(v[0].get(key).is_some(), "missing {key}");
    }
}
