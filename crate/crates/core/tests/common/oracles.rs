//! Brute-force linear algebra over tiny matrices.

use std::collections::BTreeSet;

use bockstein::linalg::{cokernel_invariants, kernel_mod, rank_mod_p, snf, solve_mod};
use bockstein::IntegerMatrix;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

pub fn all_vectors(len: usize, l: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    (0..len).map(|_| 0..l).multi_cartesian_product().collect()
}

pub fn apply(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

pub fn brute_kernel(a: &[Vec<i64>], cols: usize, l: i64) -> BTreeSet<Vec<i64>> {
    all_vectors(cols, l)
        .into_iter()
        .filter(|x| apply(a, x).iter().all(|y| y.rem_euclid(l) == 0))
        .collect()
}

/// Z/l-span of `gens` by closure under addition.
pub fn span(gens: &[Vec<i64>], cols: usize, l: i64) -> BTreeSet<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; cols]]);
    let mut frontier = vec![vec![0; cols]];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<i64> = v
                .iter()
                .zip(g)
                .map(|(a, b)| (a + b).rem_euclid(l))
                .collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

pub fn gauss_rank_mod_p(a: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = (1..p).find(|i| i * m[rank][c] % p == 1).unwrap();
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| *x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinantal divisors: gcd of all k x k minors, for k = 1..
pub fn determinantal_divisors(a: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i128> {
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

pub fn build(rows: usize, cols: usize, a: &[Vec<i64>]) -> IntegerMatrix {
    let entries = a.iter().flatten().map(|&x| BigInt::from(x)).collect();
    IntegerMatrix::new(rows, cols, entries).unwrap()
}

pub fn check_snf(r: usize, c: usize, a: &[Vec<i64>]) -> Result<(), String> {
    let s = snf(&build(r, c, a));
    if !s.verify() {
        return Err(format!("snf verification failed for {a:?}"));
    }
    // d_1 ... d_k equals the k-th determinantal divisor
    let divisors = determinantal_divisors(a, r, c);
    if s.rank() != divisors.len() {
        return Err(format!("rank {} vs {} for {a:?}", s.rank(), divisors.len()));
    }
    let mut prefix = 1i128;
    for (d, dd) in s.diagonal.iter().zip(&divisors) {
        prefix *= d.to_i64().unwrap() as i128;
        if prefix != *dd {
            return Err(format!(
                "diagonal {:?} vs divisors {divisors:?} for {a:?}",
                s.diagonal
            ));
        }
    }
    let (free, torsion) = cokernel_invariants(&build(r, c, a));
    if free != r - s.rank() || torsion.iter().any(|d| *d <= BigInt::from(1)) {
        return Err(format!("cokernel mismatch for {a:?}"));
    }
    Ok(())
}

pub fn check_kernel(r: usize, c: usize, a: &[Vec<i64>], l: i64) -> Result<(), String> {
    let gens = kernel_mod(&build(r, c, a), l as u64).map_err(|e| e.to_string())?;
    let gens: Vec<Vec<i64>> = gens.iter().map(|g| to_i64(g)).collect();
    if gens
        .iter()
        .any(|g| apply(a, g).iter().any(|y| y.rem_euclid(l) != 0))
    {
        return Err(format!("kernel generator not in kernel: {a:?} mod {l}"));
    }
    if span(&gens, c, l) != brute_kernel(a, c, l) {
        return Err(format!("kernel span mismatch: {a:?} mod {l}"));
    }
    Ok(())
}

pub fn check_solve(r: usize, c: usize, a: &[Vec<i64>], b: &[i64], l: i64) -> Result<(), String> {
    let b_big: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
    let solvable = all_vectors(c, l).iter().any(|x| {
        apply(a, x)
            .iter()
            .zip(b)
            .all(|(y, z)| (y - z).rem_euclid(l) == 0)
    });
    match solve_mod(&build(r, c, a), &b_big, l as u64).map_err(|e| e.to_string())? {
        Some(x) => {
            let ax = apply(a, &to_i64(&x));
            if !solvable || !ax.iter().zip(b).all(|(y, z)| (y - z).rem_euclid(l) == 0) {
                return Err(format!("bad solution {x:?} for {a:?} x = {b:?} mod {l}"));
            }
        }
        None if solvable => return Err(format!("missed solution for {a:?} x = {b:?} mod {l}")),
        None => {}
    }
    Ok(())
}

pub fn check_rank(r: usize, c: usize, a: &[Vec<i64>], p: u64) -> Result<(), String> {
    let got = rank_mod_p(&build(r, c, a), p).map_err(|e| e.to_string())?;
    let expected = gauss_rank_mod_p(a, p as i64);
    if got != expected {
        return Err(format!("rank mod {p} of {a:?}: {got} vs {expected}"));
    }
    Ok(())
}
