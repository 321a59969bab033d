//! Reduced simplicial cohomology over `Z` and `Z/l`, and the Bockstein map
//! `H^k(Δ; Z/l) → H^{k+1}(Δ; Z/l)` attached to `0 → Z → Z → Z/l → 0`.
//!
//! The Bockstein is computed on cochains: lift a mod-`l` cocycle `c` to an
//! integer cochain, apply the integral coboundary, divide by `l` and reduce.
//! The class of the result does not depend on the lift.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::linalg::{self, IntVector, IntegerMatrix, KernelLattice};
use crate::simplicial::SimplicialComplex;

/// `H̃^k(Δ; Z) ≅ Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_r`, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntCohomology {
    pub degree: i32,
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub invariant_factors: Vec<BigInt>,
}

impl IntCohomology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Number of invariant factors divisible by `p`.
    pub fn torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.invariant_factors
            .iter()
            .filter(|d| d.is_multiple_of(&p))
            .count()
    }
}

fn serialize_bigints<S: serde::Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(small) => seq.serialize_element(&small)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl fmt::Display for IntCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// `H̃^k(Δ; Z/l)` as a direct sum of cyclic groups with explicit cocycle
/// generators. The generators are not canonical.
#[derive(Clone, Debug)]
pub struct ModCohomology {
    pub degree: i32,
    pub modulus: u64,
    /// Integer cochains with entries in `0..l`, each a cocycle mod `l`.
    pub generators: Vec<IntVector>,
    /// Order of each generator; every order divides `l` and exceeds 1.
    pub orders: Vec<u64>,
    lattice: KernelLattice,
    presentation_left: IntegerMatrix,
    summands: Vec<usize>,
}

impl ModCohomology {
    /// Number of cyclic summands; the `Z/p`-dimension when `l = p` is prime.
    pub fn dimension(&self) -> usize {
        self.orders.len()
    }

    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    /// Order of the whole group.
    pub fn order(&self) -> BigInt {
        self.orders.iter().map(|&o| BigInt::from(o)).product()
    }

    pub fn is_cocycle(&self, z: &[BigInt]) -> bool {
        z.len() == self.lattice.dim() && self.lattice.coordinates(z).is_some()
    }

    /// Coordinates of the class of the cocycle `z` in the generators, the
    /// `i`-th reduced into `0..orders[i]`.
    pub fn classify(&self, z: &[BigInt]) -> Result<Vec<u64>> {
        if z.len() != self.lattice.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.lattice.dim(),
                found: z.len(),
            });
        }
        let y = self
            .lattice
            .coordinates(z)
            .ok_or(Error::NotACocycle(self.modulus))?;
        let w = self.presentation_left.mul_vec(&y)?;
        Ok(self
            .summands
            .iter()
            .zip(&self.orders)
            .map(|(&i, &order)| {
                w[i].mod_floor(&BigInt::from(order))
                    .to_u64()
                    .expect("bounded by order")
            })
            .collect())
    }
}

impl fmt::Display for ModCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.orders.iter().map(|o| format!("Z/{o}")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `H̃^k(Δ; Z) = ker D^k / im D^{k-1}`: its torsion is that of `coker D^{k-1}`
/// because `ker D^k` is a direct summand of the cochains.
pub fn integral_cohomology(complex: &SimplicialComplex, k: i32) -> IntCohomology {
    let rank_k = linalg::invariant_factors(&complex.coboundary_matrix(k)).len();
    let (coker_free, invariant_factors) =
        linalg::cokernel_invariants(&complex.coboundary_matrix(k - 1));
    IntCohomology {
        degree: k,
        free_rank: coker_free - rank_k,
        invariant_factors,
    }
}

/// Mod-`l` cohomology with generators.
///
/// The mod-`l` cocycles form the lattice `K = {x : D^k x ≡ 0 (mod l)}`, and
/// `H = K / (im D^{k-1} + l Z^n)`. Writing the relations in a basis of `K`
/// and taking their Smith form splits `H` into cyclic pieces.
pub fn mod_cohomology(complex: &SimplicialComplex, k: i32, l: u64) -> Result<ModCohomology> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    let lattice = KernelLattice::new(&complex.coboundary_matrix(k), l);
    let n = lattice.dim();
    let mut scaled = IntegerMatrix::identity(n);
    for i in 0..n {
        scaled.set(i, i, BigInt::from(l));
    }
    let boundaries = complex.coboundary_matrix(k - 1).hstack(&scaled)?;
    let relations = lattice
        .coordinates_of_columns(&boundaries)
        .expect("coboundaries are cocycles");
    let presentation = linalg::snf(&relations);
    debug_assert_eq!(
        presentation.rank(),
        n,
        "l Z^n keeps the relations full rank"
    );

    let basis = lattice.basis();
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut summands = Vec::new();
    for (i, d) in presentation.diagonal.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let y = presentation.left_inverse.column(i);
        let g = basis.mul_vec(&y)?;
        generators.push(g.iter().map(|x| arith::reduce(x, l)).collect());
        orders.push(d.to_u64().expect("order divides the modulus"));
        summands.push(i);
    }
    Ok(ModCohomology {
        degree: k,
        modulus: l,
        generators,
        orders,
        lattice,
        presentation_left: presentation.left,
        summands,
    })
}

/// `(D^k c) / l` reduced mod `l`: a cochain representative of `β[c]`.
pub fn bockstein_of_cocycle(
    complex: &SimplicialComplex,
    k: i32,
    l: u64,
    cocycle: &[BigInt],
) -> Result<IntVector> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    lift_and_divide(&complex.coboundary_matrix(k), l, cocycle)
}

fn lift_and_divide(coboundary: &IntegerMatrix, l: u64, cocycle: &[BigInt]) -> Result<IntVector> {
    let modulus = BigInt::from(l);
    coboundary
        .mul_vec(cocycle)?
        .into_iter()
        .map(|x| {
            let (q, r) = x.div_rem(&modulus);
            if r.is_zero() {
                Ok(arith::reduce(&q, l))
            } else {
                Err(Error::NotACocycle(l))
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BocksteinMap {
    pub modulus: u64,
    /// Source degree `k` of `β: H̃^k → H̃^{k+1}`.
    pub degree: i32,
    pub source_orders: Vec<u64>,
    pub target_orders: Vec<u64>,
    /// `matrix[j][i]` is the coefficient of target generator `j` in the image
    /// of source generator `i`, reduced mod `target_orders[j]`.
    pub matrix: Vec<Vec<u64>>,
    pub is_zero: bool,
    /// Rank over `Z/l`; only defined for prime `l`.
    pub rank: Option<usize>,
    #[serde(skip)]
    pub source_generators: Vec<IntVector>,
    /// Cochain representative of the image of each source generator.
    #[serde(skip)]
    pub images: Vec<IntVector>,
}

impl BocksteinMap {
    /// Indices of source generators whose image class is nonzero.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.source_orders.len())
            .filter(|&i| self.matrix.iter().any(|row| row[i] != 0))
            .collect()
    }
}

pub fn bockstein(complex: &SimplicialComplex, k: i32, l: u64) -> Result<BocksteinMap> {
    let source = mod_cohomology(complex, k, l)?;
    let target = mod_cohomology(complex, k + 1, l)?;
    let coboundary = complex.coboundary_matrix(k);
    let coboundary_snf = &source.lattice.snf;

    let mut matrix = vec![vec![0u64; source.dimension()]; target.dimension()];
    let mut images = Vec::with_capacity(source.dimension());
    let mut is_zero = true;
    for (i, c) in source.generators.iter().enumerate() {
        let d = lift_and_divide(&coboundary, l, c)?;
        let coords = target.classify(&d)?;
        // Independent zero test: is d a coboundary mod l?
        let exact = linalg::solve_with(coboundary_snf, &d, l).is_some();
        debug_assert_eq!(exact, coords.iter().all(|&x| x == 0));
        is_zero &= exact;
        for (row, x) in matrix.iter_mut().zip(coords) {
            row[i] = x;
        }
        images.push(d);
    }
    let rank = if arith::is_prime(l) {
        let m = IntegerMatrix::from_rows(&matrix);
        let m = if matrix.is_empty() {
            IntegerMatrix::zeros(0, source.dimension())
        } else {
            m
        };
        Some(linalg::rank_mod_p(&m, l)?)
    } else {
        None
    };
    Ok(BocksteinMap {
        modulus: l,
        degree: k,
        source_orders: source.orders.clone(),
        target_orders: target.orders.clone(),
        matrix,
        is_zero,
        rank,
        source_generators: source.generators,
        images,
    })
}
