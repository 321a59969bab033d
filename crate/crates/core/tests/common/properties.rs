//! Property checks shared by the suites and the acceptance gate.

use bockstein::cohomology::{bockstein, bockstein_of_cocycle, integral_cohomology, mod_cohomology};
use bockstein::stanley_reisner::{graded_cech_complex, hochster_dimension};
use bockstein::{BocksteinMap, Face, SimplicialComplex};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

/// `second ∘ first`, reduced mod the orders of the final target.
pub fn compose(first: &BocksteinMap, second: &BocksteinMap) -> Vec<Vec<u64>> {
    assert_eq!(first.target_orders, second.source_orders);
    second
        .target_orders
        .iter()
        .enumerate()
        .map(|(h, &order)| {
            (0..first.source_orders.len())
                .map(|i| {
                    let s: u128 = (0..first.target_orders.len())
                        .map(|j| second.matrix[h][j] as u128 * first.matrix[j][i] as u128)
                        .sum();
                    (s % order as u128) as u64
                })
                .collect()
        })
        .collect()
}

pub fn bockstein_squares_to_zero(name: &str, c: &SimplicialComplex) -> Result<(), String> {
    for l in 2..=9 {
        for k in -1..=c.dim() {
            let first = bockstein(c, k, l).map_err(|e| e.to_string())?;
            let second = bockstein(c, k + 1, l).map_err(|e| e.to_string())?;
            if compose(&first, &second).iter().flatten().any(|&x| x != 0) {
                return Err(format!("{name}: β∘β ≠ 0 at k={k} l={l}"));
            }
        }
    }
    Ok(())
}

/// Perturb each generator by a random coboundary and a random multiple of l.
pub fn bockstein_ignores_choice_of_lift(
    name: &str,
    c: &SimplicialComplex,
    rng: &mut impl Rng,
) -> Result<(), String> {
    for l in [2u64, 3, 4, 6, 9] {
        for k in -1..c.dim() {
            let source = mod_cohomology(c, k, l).map_err(|e| e.to_string())?;
            let target = mod_cohomology(c, k + 1, l).map_err(|e| e.to_string())?;
            let prev = c.coboundary_matrix(k - 1);
            let here = c.coboundary_matrix(k);
            let lm = BigInt::from(l);
            for g in &source.generators {
                let a: Vec<BigInt> = (0..prev.cols())
                    .map(|_| BigInt::from(rng.gen_range(-5..=5)))
                    .collect();
                let b: Vec<BigInt> = (0..g.len())
                    .map(|_| BigInt::from(rng.gen_range(-5..=5)))
                    .collect();
                let da = prev.mul_vec(&a).unwrap();
                let perturbed: Vec<BigInt> = g
                    .iter()
                    .zip(&da)
                    .zip(&b)
                    .map(|((x, y), z)| x + y + &lm * z)
                    .collect();
                let d = bockstein_of_cocycle(c, k, l, g).map_err(|e| e.to_string())?;
                let d2 = bockstein_of_cocycle(c, k, l, &perturbed).map_err(|e| e.to_string())?;
                // cochain identity: d2 - d = D^k b (mod l)
                let db = here.mul_vec(&b).unwrap();
                if d2
                    .iter()
                    .zip(&d)
                    .zip(&db)
                    .any(|((x, y), z)| !(x - y - z).is_multiple_of(&lm))
                {
                    return Err(format!("{name}: cochain identity fails at k={k} l={l}"));
                }
                if target.classify(&d).unwrap() != target.classify(&d2).unwrap() {
                    return Err(format!("{name}: class depends on lift at k={k} l={l}"));
                }
            }
        }
    }
    Ok(())
}

pub fn universal_coefficients(name: &str, c: &SimplicialComplex) -> Result<(), String> {
    for p in [2u64, 3, 5] {
        for k in -1..=c.dim() + 1 {
            let here = integral_cohomology(c, k);
            let next = integral_cohomology(c, k + 1);
            let expected = here.free_rank + here.torsion_count(p) + next.torsion_count(p);
            let dim = mod_cohomology(c, k, p)
                .map_err(|e| e.to_string())?
                .dimension();
            if dim != expected {
                return Err(format!(
                    "{name}: dim H^{k}(Z/{p}) = {dim}, expected {expected}"
                ));
            }
        }
    }
    Ok(())
}

pub fn bockstein_rank_law(name: &str, c: &SimplicialComplex) -> Result<(), String> {
    for p in [2u64, 3, 5, 7] {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        for k in -1..=c.dim() {
            let next = integral_cohomology(c, k + 1);
            let expected = next
                .invariant_factors
                .iter()
                .filter(|d| d.is_multiple_of(&pb) && !d.is_multiple_of(&p2))
                .count();
            let map = bockstein(c, k, p).map_err(|e| e.to_string())?;
            if map.rank != Some(expected) || map.is_zero != (expected == 0) {
                return Err(format!(
                    "{name}: rank β^{k}_{p} = {:?}, expected {expected}",
                    map.rank
                ));
            }
        }
    }
    Ok(())
}

/// Compare Hochster's formula with the Čech strand of degree -supp for every
/// support of size at most `max_support`.
pub fn hochster_matches_cech(
    name: &str,
    c: &SimplicialComplex,
    max_support: usize,
    primes: &[u64],
) -> Result<(), String> {
    let n = c.n();
    for size in 0..=max_support.min(n as usize) {
        for tau in (1..=n).combinations(size) {
            let u: Vec<i64> = (1..=n)
                .map(|i| if tau.contains(&i) { -1 } else { 0 })
                .collect();
            let cech = graded_cech_complex(c, &u).map_err(|e| e.to_string())?;
            let face = Face::new(tau);
            for &p in primes {
                for k in 0..=n as i32 + 1 {
                    let expected = cech.cohomology_dim_mod_p(k, p).map_err(|e| e.to_string())?;
                    let got = hochster_dimension(c, p, k, &face)
                        .map_err(|e| e.to_string())?
                        .dimension();
                    if got != expected {
                        return Err(format!(
                            "{name}: tau={face} p={p} k={k}: {got} vs {expected}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
