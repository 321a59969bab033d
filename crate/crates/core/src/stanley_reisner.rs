//! Stanley–Reisner ideals and local cohomology of Stanley–Reisner rings
//! over `Z`.
//!
//! With `R = Z[x_1..x_n]` and `a` the Stanley–Reisner ideal of `Δ`, the
//! graded pieces of `H^k_n(R/(a + lR))` in degrees `u ≤ 0` are the mod-`l`
//! cohomology of links of `Δ` (Hochster), and the Bockstein on
//! `H^k_a(R/pR)` vanishes iff the Bockstein
//! `H̃^{n-k-2-|τ|}(link τ; Z/p) → H̃^{n-k-1-|τ|}(link τ; Z/p)` vanishes for
//! every `τ`. Only faces `τ` matter; other subsets have void links.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cohomology::{self, bockstein, mod_cohomology};
use crate::error::{Error, Result};
use crate::linalg::{self, IntegerMatrix};
use crate::simplicial::{ComplexKind, Face, SimplicialComplex};

/// Square-free monomial ideal, one generator `x^σ` per minimal non-face `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrIdeal {
    pub n: u32,
    pub generators: Vec<Face>,
}

impl SrIdeal {
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `x1*x2*x3` style rendering of each generator.
    pub fn monomials(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| {
                g.vertices()
                    .iter()
                    .map(|v| format!("x{v}"))
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect()
    }
}

pub fn sr_ideal(complex: &SimplicialComplex) -> Result<SrIdeal> {
    Ok(SrIdeal {
        n: complex.n(),
        generators: complex.minimal_nonfaces()?,
    })
}

fn check_prime_power(l: u64) -> Result<(u64, u32)> {
    arith::prime_power(l).ok_or(Error::NotPrimePower(l))
}

/// Degree of link cohomology feeding `[H^k_n]_u` for `supp(u) = τ`.
pub fn hochster_link_degree(k: i32, tau: &Face) -> i32 {
    k - 1 - tau.len() as i32
}

/// Structure of `[H^k_n(R/(a + lR))]_u` for any `u ≤ 0` with negative support `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterEntry {
    pub tau: Face,
    pub link_degree: i32,
    /// Orders of the cyclic summands; all equal to `l` for prime `l`.
    pub orders: Vec<u64>,
}

impl HochsterEntry {
    /// `Z/p`-dimension for prime `l`, number of cyclic summands otherwise.
    pub fn dimension(&self) -> usize {
        self.orders.len()
    }
}

pub fn hochster_dimension(
    complex: &SimplicialComplex,
    l: u64,
    k: i32,
    tau: &Face,
) -> Result<HochsterEntry> {
    check_prime_power(l)?;
    let link_degree = hochster_link_degree(k, tau);
    let link = complex.link(tau);
    Ok(HochsterEntry {
        tau: tau.clone(),
        link_degree,
        orders: mod_cohomology(&link, link_degree, l)?.orders,
    })
}

/// Hochster data for every face `τ` of `Δ` (the empty face first). Non-faces
/// contribute nothing and are left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterTable {
    pub modulus: u64,
    pub k: i32,
    pub rows: Vec<HochsterEntry>,
}

impl HochsterTable {
    pub fn nonzero_rows(&self) -> impl Iterator<Item = &HochsterEntry> {
        self.rows.iter().filter(|r| !r.orders.is_empty())
    }
}

pub fn hochster_table(complex: &SimplicialComplex, l: u64, k: i32) -> Result<HochsterTable> {
    check_prime_power(l)?;
    let faces: Vec<&Face> = complex.all_faces().collect();
    let rows = faces
        .par_iter()
        .map(|tau| hochster_dimension(complex, l, k, tau))
        .collect::<Result<Vec<_>>>()?;
    Ok(HochsterTable {
        modulus: l,
        k,
        rows,
    })
}

/// Degree-`u` strand of the Čech complex `Č(x_1..x_n; R/a)` for `u ≤ 0`.
///
/// The summand `(R/a)_{x^F}` has a (rank one) degree-`u` piece exactly when
/// `F ∈ Δ` and `supp(u) ⊆ F`; it sits in Čech index `|F|`. Differentials
/// use the usual Čech sign `(-1)^i` for inserting the `i`-th index.
///
/// This is built from localization supports alone, without links, and
/// serves as a cross-check for [`hochster_dimension`].
#[derive(Clone, Debug)]
pub struct GradedCechComplex {
    pub support: Face,
    /// `components[j]` are the index sets `F` spanning Čech index `j`.
    pub components: Vec<Vec<Face>>,
    /// `differentials[j]` maps index `j` to index `j + 1`.
    pub differentials: Vec<IntegerMatrix>,
}

impl GradedCechComplex {
    fn component_len(&self, j: i32) -> usize {
        if j < 0 {
            return 0;
        }
        self.components.get(j as usize).map_or(0, Vec::len)
    }

    fn differential(&self, j: i32) -> Option<&IntegerMatrix> {
        if j < 0 {
            return None;
        }
        self.differentials.get(j as usize)
    }

    /// `Z/p`-dimension of the cohomology at Čech index `k` after reducing mod `p`.
    pub fn cohomology_dim_mod_p(&self, k: i32, p: u64) -> Result<usize> {
        let rank = |m: Option<&IntegerMatrix>| m.map_or(Ok(0), |m| linalg::rank_mod_p(m, p));
        Ok(self.component_len(k) - rank(self.differential(k))? - rank(self.differential(k - 1))?)
    }

    /// Integral cohomology at Čech index `k` as `(free_rank, invariant factors > 1)`.
    pub fn integral_cohomology(&self, k: i32) -> (usize, Vec<num_bigint::BigInt>) {
        let rank_k = self
            .differential(k)
            .map_or(0, |m| linalg::invariant_factors(m).len());
        let (free, torsion) = match self.differential(k - 1) {
            Some(m) => linalg::cokernel_invariants(m),
            None => (self.component_len(k), Vec::new()),
        };
        (free - rank_k, torsion)
    }
}

pub fn graded_cech_complex(complex: &SimplicialComplex, u: &[i64]) -> Result<GradedCechComplex> {
    let n = complex.n() as usize;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    if let Some(i) = u.iter().position(|&x| x > 0) {
        return Err(Error::PositiveDegree(i));
    }
    let support = Face::new(
        u.iter()
            .enumerate()
            .filter(|(_, &x)| x < 0)
            .map(|(i, _)| i as u32 + 1)
            .collect(),
    );
    let mut components: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    for f in complex.all_faces().filter(|f| support.is_subset(f)) {
        components[f.len()].push(f.clone());
    }
    for level in &mut components {
        level.sort();
    }
    let differentials = (0..n)
        .map(|j| {
            let (src, dst) = (&components[j], &components[j + 1]);
            let mut m = IntegerMatrix::zeros(dst.len(), src.len());
            for (row, target) in dst.iter().enumerate() {
                for (col, source) in src.iter().enumerate() {
                    if !source.is_subset(target) {
                        continue;
                    }
                    let extra = target.difference(source).vertices()[0];
                    let pos = target.vertices().iter().position(|&v| v == extra).unwrap();
                    m.set(
                        row,
                        col,
                        num_bigint::BigInt::from(if pos % 2 == 0 { 1 } else { -1 }),
                    );
                }
            }
            m
        })
        .collect();
    Ok(GradedCechComplex {
        support,
        components,
        differentials,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tau: Face,
    pub link_degree: i32,
    /// Index of a source generator of the link Bockstein with nonzero image.
    #[serde(skip)]
    pub generator: usize,
    /// That generator as a cocycle on the link.
    #[serde(skip)]
    pub cocycle: Vec<num_bigint::BigInt>,
}

/// Verdict on the Bockstein `H^k_a(R/lR) → H^{k+1}_a(R/lR)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalBocksteinReport {
    pub k: i32,
    pub modulus: u64,
    pub is_zero: bool,
    pub witnesses: Vec<Witness>,
    /// Set for `l = p^e` with `e ≥ 2`, where the link criterion is the
    /// natural analogue of the prime case rather than a proved equivalence.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unproved_analogue: bool,
}

impl LocalBocksteinReport {
    /// A nonzero Bockstein at `(k, p)` certifies `p`-torsion in `H^{k+1}_a(R)`.
    pub fn certified_torsion_index(&self) -> Option<i32> {
        (!self.is_zero).then_some(self.k + 1)
    }
}

pub fn local_bockstein_is_zero(
    complex: &SimplicialComplex,
    l: u64,
    k: i32,
) -> Result<LocalBocksteinReport> {
    let (_, e) = check_prime_power(l)?;
    let n = complex.n() as i32;
    let faces: Vec<&Face> = complex.all_faces().collect();
    let checks = faces
        .par_iter()
        .map(|tau| -> Result<Option<Witness>> {
            let link_degree = n - k - 2 - tau.len() as i32;
            let link = complex.link(tau);
            // H̃^j of a complex vanishes outside -1..=dim
            if link_degree < -1 || link_degree > link.dim() {
                return Ok(None);
            }
            let map = bockstein(&link, link_degree, l)?;
            Ok(map.nonzero_columns().first().map(|&g| Witness {
                tau: (*tau).clone(),
                link_degree,
                generator: g,
                cocycle: map.source_generators[g].clone(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let witnesses: Vec<Witness> = checks.into_iter().flatten().collect();
    Ok(LocalBocksteinReport {
        k,
        modulus: l,
        is_zero: witnesses.is_empty(),
        witnesses,
        unproved_analogue: e >= 2,
    })
}

/// Primes dividing a torsion coefficient of `H̃^j(link τ; Z)` for some face
/// `τ` and degree `j`. A link Bockstein mod `p` can only be nonzero when
/// some link has `p`-torsion, so this bounds every prime sweep.
pub fn candidate_primes(complex: &SimplicialComplex) -> BTreeSet<u64> {
    let faces: Vec<&Face> = complex.all_faces().collect();
    faces
        .par_iter()
        .map(|tau| {
            let link = complex.link(tau);
            (-1..=link.dim())
                .flat_map(|j| cohomology::integral_cohomology(&link, j).invariant_factors)
                .flat_map(|d| arith::prime_divisors(&d))
                .collect::<BTreeSet<u64>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// All primes `p` for which the Bockstein `H^k_a(R/pR) → H^{k+1}_a(R/pR)` is nonzero.
pub fn bockstein_prime_sweep(complex: &SimplicialComplex, k: i32) -> Result<BTreeSet<u64>> {
    bockstein_prime_sweep_bounded(complex, k, None)
}

/// As [`bockstein_prime_sweep`], restricted to primes `≤ bound` when given.
pub fn bockstein_prime_sweep_bounded(
    complex: &SimplicialComplex,
    k: i32,
    bound: Option<u64>,
) -> Result<BTreeSet<u64>> {
    if complex.kind() != ComplexKind::Proper {
        return Err(Error::DegenerateComplex(complex.kind().name()));
    }
    let mut out = BTreeSet::new();
    for p in candidate_primes(complex) {
        if bound.is_some_and(|b| p > b) {
            continue;
        }
        if !local_bockstein_is_zero(complex, p, k)?.is_zero {
            out.insert(p);
        }
    }
    Ok(out)
}
