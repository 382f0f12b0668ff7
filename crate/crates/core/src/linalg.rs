//! Exact linear algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) row reduction. Returns the pivot columns in
/// order; their count is the rank over `Q`.
pub fn pivot_columns(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over `Q` of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    pivot_columns(rows).len()
}

/// Inverse of a square integer matrix as `(N, D)` with `M^{-1} = N / D`,
/// `D > 0`. `None` if singular.
pub fn integer_inverse(m: &[Vec<BigInt>]) -> Option<(Vec<Vec<BigInt>>, BigInt)> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r: Vec<BigRational> =
                row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot = a[c].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
    }
    let mut d = BigInt::one();
    for row in &a {
        for x in &row[n..] {
            d = d.lcm(x.denom());
        }
    }
    let inv = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| x.numer() * (&d / x.denom()))
                .collect()
        })
        .collect();
    Some((inv, d))
}
