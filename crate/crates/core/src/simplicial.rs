//! Finite abstract simplicial complexes on the vertex universe `1..=n`,
//! stored by their facets, with reduced coboundary matrices.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

/// A strictly increasing list of vertex labels. The empty face is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Face(Vec<u32>);

impl Face {
    /// Sorts and deduplicates `vertices`.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    /// The face with the vertex at position `pos` removed.
    pub fn without_position(&self, pos: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(pos);
        Face(v)
    }

    fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        assert!(k < 32, "facet with {k} vertices is too large to enumerate");
        (0u32..1 << k).map(move |mask| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect(),
            )
        })
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl From<Face> for Vec<u32> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// No faces at all, not even the empty one.
    Void,
    /// Only the empty face.
    Irrelevant,
    Proper,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Void => "void",
            ComplexKind::Irrelevant => "irrelevant",
            ComplexKind::Proper => "proper",
        }
    }
}

/// The on-disk representation: `{"n": 6, "facets": [[1,2,5], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: u32,
    pub facets: Vec<Vec<u32>>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "ComplexFile", into = "ComplexFile")]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
    // faces[d + 1] lists the d-dimensional faces lexicographically
    faces: Vec<Vec<Face>>,
    index: HashMap<Face, usize>,
}

impl SimplicialComplex {
    /// The complex generated by `lists`. Duplicates and non-maximal faces are
    /// dropped; `[]` gives the void complex and `[[]]` the irrelevant one.
    pub fn from_facets(n: u32, lists: &[Vec<u32>]) -> Result<Self> {
        for &vertex in lists.iter().flatten() {
            if vertex == 0 || vertex > n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(Self::from_faces(
            n,
            lists.iter().cloned().map(Face::new).collect(),
        ))
    }

    /// Same as [`from_facets`](Self::from_facets) for faces already known to be in range.
    pub(crate) fn from_faces(n: u32, mut candidates: Vec<Face>) -> Self {
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        candidates.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for c in candidates {
            if !facets.iter().any(|f| c.is_subset(f)) {
                facets.push(c);
            }
        }
        facets.sort();

        let mut by_dim: Vec<BTreeSet<Face>> = Vec::new();
        for facet in &facets {
            if by_dim.len() < facet.len() + 1 {
                by_dim.resize_with(facet.len() + 1, BTreeSet::new);
            }
            for s in facet.subsets() {
                by_dim[s.len()].insert(s);
            }
        }
        let faces: Vec<Vec<Face>> = by_dim
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let index = faces
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, f)| (f.clone(), i)))
            .collect();
        Self {
            n,
            facets,
            faces,
            index,
        }
    }

    pub fn void(n: u32) -> Self {
        Self::from_faces(n, Vec::new())
    }

    pub fn irrelevant(n: u32) -> Self {
        Self::from_faces(n, vec![Face::empty()])
    }

    /// Size of the vertex universe; vertices are labelled `1..=n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Proper,
        }
    }

    /// Largest face dimension; `-1` for the irrelevant complex and `-2` for the void one.
    pub fn dim(&self) -> i32 {
        self.faces.len() as i32 - 2
    }

    /// All `d`-dimensional faces in lexicographic order.
    pub fn faces(&self, d: i32) -> &[Face] {
        if d < -1 {
            return &[];
        }
        self.faces.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    /// Every face, the empty face first, then by dimension and lexicographically.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.index.len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index.contains_key(face)
    }

    /// Position of `face` in `faces(face.dim())`.
    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.index.get(face).copied()
    }

    /// `{σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}`, void when `τ` is not a face.
    pub fn link(&self, tau: &Face) -> SimplicialComplex {
        if !self.contains(tau) {
            return Self::void(self.n);
        }
        let candidates = self
            .facets
            .iter()
            .filter(|f| tau.is_subset(f))
            .map(|f| f.difference(tau))
            .collect();
        Self::from_faces(self.n, candidates)
    }

    /// Matrix of the reduced coboundary `C^k → C^{k+1}` in the lexicographic
    /// face bases. The entry for `σ ⊂ σ' = σ ∪ {v}` is `(-1)^i` where `i` is
    /// the position of `v` in `σ'`.
    pub fn coboundary_matrix(&self, k: i32) -> IntegerMatrix {
        let sources = self.faces(k);
        let targets = self.faces(k + 1);
        let mut m = IntegerMatrix::zeros(targets.len(), sources.len());
        if sources.is_empty() {
            return m;
        }
        for (row, target) in targets.iter().enumerate() {
            for pos in 0..target.len() {
                let col = self.index[&target.without_position(pos)];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m.set(row, col, BigInt::from(sign));
            }
        }
        m
    }

    /// Inclusion-minimal subsets of `1..=n` that are not faces, ordered by
    /// size and then lexicographically.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        match self.kind() {
            ComplexKind::Proper => {}
            kind => return Err(Error::DegenerateComplex(kind.name())),
        }
        let mut out: Vec<Face> = (1..=self.n)
            .map(|v| Face(vec![v]))
            .filter(|f| !self.contains(f))
            .collect();
        // Every larger minimal non-face is a face plus one vertex above its maximum.
        let vertices = self.faces(0);
        for face in self.all_faces().filter(|f| !f.is_empty()) {
            let top = *face.vertices().last().expect("nonempty");
            for v in vertices
                .iter()
                .map(|f| f.vertices()[0])
                .filter(|&v| v > top)
            {
                let mut cand = face.0.clone();
                cand.push(v);
                let cand = Face(cand);
                if self.contains(&cand) {
                    continue;
                }
                if (0..cand.len()).all(|i| self.contains(&cand.without_position(i))) {
                    out.push(cand);
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            n: self.n,
            facets: self.facets.iter().map(|f| f.0.clone()).collect(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("facets", &self.facets)
            .finish()
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Self> {
        Self::from_facets(file.n, &file.facets)
    }
}

impl From<SimplicialComplex> for ComplexFile {
    fn from(c: SimplicialComplex) -> Self {
        c.to_file()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec())
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    #[test]
    fn construction() {
        let t = hollow_triangle();
        assert_eq!(t.facets(), &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3])]);
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1], vec![1, 2]]).unwrap();
        assert_eq!(c.facets(), &[face(&[1, 2])]);
        assert_eq!(
            SimplicialComplex::from_facets(3, &[vec![1, 4]]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 4, n: 3 }
        );
        assert!(SimplicialComplex::from_facets(3, &[vec![0]]).is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(
            SimplicialComplex::from_facets(0, &[]).unwrap().kind(),
            ComplexKind::Void
        );
        let irr = SimplicialComplex::from_facets(0, &[vec![]]).unwrap();
        assert_eq!(irr.kind(), ComplexKind::Irrelevant);
        assert_eq!(irr.dim(), -1);
        assert_eq!(hollow_triangle().kind(), ComplexKind::Proper);
        // the empty face is absorbed by any nonempty face
        let c = SimplicialComplex::from_facets(2, &[vec![], vec![1]]).unwrap();
        assert_eq!(c.facets(), &[face(&[1])]);
    }

    #[test]
    fn face_listing() {
        let t = hollow_triangle();
        assert_eq!(t.faces(1), &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3])]);
        assert_eq!(t.faces(-1), &[Face::empty()]);
        assert!(t.faces(2).is_empty());
        assert!(t.faces(-2).is_empty());
        let void = SimplicialComplex::void(3);
        for d in -1..3 {
            assert!(void.faces(d).is_empty());
        }
        assert_eq!(t.f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn links() {
        let t = hollow_triangle();
        assert_eq!(t.link(&Face::empty()), t);
        let l = t.link(&face(&[1]));
        assert_eq!(l.facets(), &[face(&[2]), face(&[3])]);
        assert_eq!(t.link(&face(&[1, 2])).kind(), ComplexKind::Irrelevant);
        assert_eq!(t.link(&face(&[1, 2, 3])).kind(), ComplexKind::Void);
    }

    #[test]
    fn coboundaries() {
        let irr = SimplicialComplex::irrelevant(0);
        let d = irr.coboundary_matrix(-1);
        assert_eq!((d.rows(), d.cols()), (0, 1));

        let edge = SimplicialComplex::from_facets(2, &[vec![1, 2]]).unwrap();
        assert_eq!(
            edge.coboundary_matrix(-1),
            IntegerMatrix::from_rows(&[vec![1], vec![1]])
        );
        assert_eq!(
            edge.coboundary_matrix(0),
            IntegerMatrix::from_rows(&[vec![-1, 1]])
        );

        let t = hollow_triangle();
        let d0 = t.coboundary_matrix(0);
        assert_eq!((d0.rows(), d0.cols()), (3, 3));
        assert_eq!(crate::linalg::invariant_factors(&d0).len(), 2);
        assert!(t
            .coboundary_matrix(0)
            .mul(&t.coboundary_matrix(-1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn nonfaces() {
        let simplex = SimplicialComplex::from_facets(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert!(simplex.minimal_nonfaces().unwrap().is_empty());
        assert_eq!(
            hollow_triangle().minimal_nonfaces().unwrap(),
            vec![face(&[1, 2, 3])]
        );
        let with_ghost = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(
            with_ghost.minimal_nonfaces().unwrap(),
            vec![face(&[4]), face(&[1, 3])]
        );
        assert_eq!(
            SimplicialComplex::void(2).minimal_nonfaces(),
            Err(Error::DegenerateComplex("void"))
        );
        assert_eq!(
            SimplicialComplex::irrelevant(2).minimal_nonfaces(),
            Err(Error::DegenerateComplex("irrelevant"))
        );
    }

    #[test]
    fn json_format() {
        let t = hollow_triangle();
        let file = t.to_file();
        assert_eq!(file.n, 3);
        assert_eq!(file.facets, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let back = SimplicialComplex::try_from(file).unwrap();
        assert_eq!(back, t);
    }
}
