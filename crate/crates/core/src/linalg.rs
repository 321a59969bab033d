//! Exact integer matrices, Smith normal form with unimodular transforms, and
//! the mod-`l` kernel / solve / rank primitives built on top of it.
//!
//! Every cohomology computation in the crate reduces to one of these calls.
//! Nothing here touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, inverse_mod};
use crate::error::{Error, Result};

pub type IntVector = Vec<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero rows or zero columns are allowed; the coboundary maps of tiny links
/// are frequently empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of anything convertible to `BigInt`.
    ///
    /// Panics if the rows are ragged. `cols` is taken from the first row, so
    /// an empty slice gives a 0x0 matrix.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[IntVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<IntVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(Self {
            rows: self.rows,
            cols,
            entries,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j];
            if !s.is_zero() {
                let add = c * s;
                self.entries[dst * self.cols + j] += add;
            }
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + src];
            if !s.is_zero() {
                let add = c * s;
                self.entries[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *x = -std::mem::take(x);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = &mut self.entries[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix({}x{})", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  [")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// `U * source * V = diag(diagonal)` padded with zeros, `U`, `V` unimodular.
///
/// The inverses of both transforms are tracked alongside them, so nothing
/// downstream ever needs to invert an integer matrix.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub source: IntegerMatrix,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    pub left_inverse: IntegerMatrix,
    pub right_inverse: IntegerMatrix,
    /// Positive invariant factors, each dividing the next.
    pub diagonal: Vec<BigInt>,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The padded diagonal matrix `U * A * V`.
    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(self.source.rows(), self.source.cols());
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }

    /// Checks every structural invariant exactly. Used by the tests and in
    /// debug builds after each decomposition.
    pub fn verify(&self) -> bool {
        let product = self
            .left
            .mul(&self.source)
            .and_then(|ua| ua.mul(&self.right));
        let m = self.source.rows();
        let n = self.source.cols();
        product.is_ok_and(|p| p == self.diagonal_matrix())
            && self.diagonal.iter().all(Signed::is_positive)
            && self.diagonal.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
            && self
                .left
                .mul(&self.left_inverse)
                .is_ok_and(|p| p == IntegerMatrix::identity(m))
            && self
                .right
                .mul(&self.right_inverse)
                .is_ok_and(|p| p == IntegerMatrix::identity(n))
    }
}

struct Transforms {
    left: IntegerMatrix,
    left_inverse: IntegerMatrix,
    right: IntegerMatrix,
    right_inverse: IntegerMatrix,
}

struct Reducer {
    a: IntegerMatrix,
    t: Option<Transforms>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.t {
            t.left.swap_rows(i, j);
            t.left_inverse.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.t {
            t.right.swap_cols(i, j);
            t.right_inverse.swap_rows(i, j);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        if let Some(t) = &mut self.t {
            t.left.add_row_multiple(dst, src, c);
            t.left_inverse.add_col_multiple(src, dst, &-c);
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        if let Some(t) = &mut self.t {
            t.right.add_col_multiple(dst, src, c);
            t.right_inverse.add_row_multiple(src, dst, &-c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(t) = &mut self.t {
            t.left.negate_row(i);
            t.left_inverse.negate_col(i);
        }
    }

    /// Position of a nonzero entry of minimal absolute value among `cells`.
    fn min_abs<I: Iterator<Item = (usize, usize)>>(&self, cells: I) -> Option<(usize, usize)> {
        cells
            .filter(|&(i, j)| !self.a.get(i, j).is_zero())
            .min_by(|&(i, j), &(k, l)| self.a.get(i, j).abs().cmp(&self.a.get(k, l).abs()))
    }

    fn run(&mut self) -> Vec<BigInt> {
        let (m, n) = (self.a.rows(), self.a.cols());
        let mut diagonal = Vec::new();
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.min_abs((t..m).flat_map(|i| (t..n).map(move |j| (i, j))))
            else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                    self.add_row_multiple(i, t, &-q);
                    dirty |= !self.a.get(i, t).is_zero();
                }
                for j in t + 1..n {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                    self.add_col_multiple(j, t, &-q);
                    dirty |= !self.a.get(t, j).is_zero();
                }
                if dirty {
                    let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                    let (pi, pj) = self.min_abs(cross).expect("pivot is nonzero");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // Row and column are clear; the pivot must divide the rest.
                let pivot = self.a.get(t, t).clone();
                let offender = (t + 1..m)
                    .find(|&i| (t + 1..n).any(|j| !self.a.get(i, j).is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.add_row_multiple(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.a.get(t, t).clone());
        }
        diagonal
    }
}

/// Smith normal form of `a` with unimodular transforms.
pub fn snf(a: &IntegerMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        t: Some(Transforms {
            left: IntegerMatrix::identity(m),
            left_inverse: IntegerMatrix::identity(m),
            right: IntegerMatrix::identity(n),
            right_inverse: IntegerMatrix::identity(n),
        }),
    };
    let diagonal = r.run();
    let t = r.t.expect("transforms tracked");
    let decomposition = SnfDecomposition {
        source: a.clone(),
        left: t.left,
        right: t.right,
        left_inverse: t.left_inverse,
        right_inverse: t.right_inverse,
        diagonal,
    };
    debug_assert!(decomposition.verify(), "SNF invariants violated");
    decomposition
}

/// SNF diagonal alone, skipping the transform bookkeeping.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    Reducer {
        a: a.clone(),
        t: None,
    }
    .run()
}

/// Presents `coker(A) = Z^free_rank + sum Z/d_i` with every `d_i > 1`.
pub fn cokernel_invariants(a: &IntegerMatrix) -> (usize, Vec<BigInt>) {
    let diagonal = invariant_factors(a);
    let free = a.rows() - diagonal.len();
    let torsion = diagonal.into_iter().filter(|d| !d.is_one()).collect();
    (free, torsion)
}

fn check_modulus(l: u64) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    Ok(())
}

/// The lattice `{x in Z^n : A x = 0 mod l}`, which always contains `l Z^n`.
///
/// In the SNF coordinates `y = V^-1 x` it is the product of `scale_i Z`,
/// with `scale_i = l / gcd(d_i, l)` on the pivot rows and `1` elsewhere.
#[derive(Clone, Debug)]
pub(crate) struct KernelLattice {
    pub snf: SnfDecomposition,
    pub scales: Vec<BigInt>,
}

impl KernelLattice {
    pub fn new(a: &IntegerMatrix, l: u64) -> Self {
        let snf = snf(a);
        let l = BigInt::from(l);
        let scales = (0..a.cols())
            .map(|i| match snf.diagonal.get(i) {
                Some(d) => &l / d.gcd(&l),
                None => BigInt::one(),
            })
            .collect();
        Self { snf, scales }
    }

    pub fn dim(&self) -> usize {
        self.scales.len()
    }

    /// The `i`-th basis vector `scale_i * V e_i`.
    pub fn basis_vector(&self, i: usize) -> IntVector {
        let s = &self.scales[i];
        self.snf
            .right
            .column(i)
            .into_iter()
            .map(|x| x * s)
            .collect()
    }

    /// Basis matrix `V * diag(scales)`.
    pub fn basis(&self) -> IntegerMatrix {
        let cols: Vec<IntVector> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        IntegerMatrix::from_columns(self.dim(), &cols)
    }

    /// Coordinates of `x` in the lattice basis, or `None` if `x` is not in the lattice.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<IntVector> {
        let y = self.snf.right_inverse.mul_vec(x).ok()?;
        y.into_iter()
            .zip(&self.scales)
            .map(|(yi, s)| {
                let (q, r) = yi.div_rem(s);
                r.is_zero().then_some(q)
            })
            .collect()
    }

    /// `basis^-1 * M` for a matrix whose columns all lie in the lattice.
    pub fn coordinates_of_columns(&self, m: &IntegerMatrix) -> Option<IntegerMatrix> {
        let cols = (0..m.cols())
            .map(|j| self.coordinates(&m.column(j)))
            .collect::<Option<Vec<_>>>()?;
        Some(IntegerMatrix::from_columns(self.dim(), &cols))
    }
}

/// Generators of `{x mod l : A x = 0 mod l}` as a `Z/l`-module, entries in `0..l`.
pub fn kernel_mod(a: &IntegerMatrix, l: u64) -> Result<Vec<IntVector>> {
    check_modulus(l)?;
    let lattice = KernelLattice::new(a, l);
    Ok((0..lattice.dim())
        .map(|i| {
            lattice
                .basis_vector(i)
                .iter()
                .map(|x| arith::reduce(x, l))
                .collect::<IntVector>()
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect())
}

/// Some `x` with `A x = b (mod l)`, entries in `0..l`, or `None` if there is none.
pub fn solve_mod(a: &IntegerMatrix, b: &[BigInt], l: u64) -> Result<Option<IntVector>> {
    check_modulus(l)?;
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    Ok(solve_with(&snf(a), b, l))
}

pub(crate) fn solve_with(snf: &SnfDecomposition, b: &[BigInt], l: u64) -> Option<IntVector> {
    let modulus = BigInt::from(l);
    let c = snf.left.mul_vec(b).expect("length checked by caller");
    let mut y = vec![BigInt::zero(); snf.source.cols()];
    for (i, ci) in c.iter().enumerate() {
        match snf.diagonal.get(i) {
            Some(d) => {
                let g = d.gcd(&modulus);
                if !ci.is_multiple_of(&g) {
                    return None;
                }
                let reduced_mod = &modulus / &g;
                let unit = inverse_mod(&(d / &g), &reduced_mod);
                y[i] = ((ci / &g) * unit).mod_floor(&reduced_mod);
            }
            None => {
                if !ci.is_multiple_of(&modulus) {
                    return None;
                }
            }
        }
    }
    let x = snf.right.mul_vec(&y).expect("square transform");
    Some(x.iter().map(|xi| arith::reduce(xi, l)).collect())
}

/// Rank of `A` over the field with `p` elements.
pub fn rank_mod_p(a: &IntegerMatrix, p: u64) -> Result<usize> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    Ok(invariant_factors(a)
        .iter()
        .filter(|d| !d.is_multiple_of(&p))
        .count())
}
