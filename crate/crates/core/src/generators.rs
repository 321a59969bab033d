//! Built-in complexes: the six-vertex projective plane, m-fold dunce caps,
//! spheres, cycles and seeded random complexes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cohomology::integral_cohomology;
use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};

/// Facets of the six-vertex triangulation of the real projective plane.
pub const RP2_FACETS: [[u32; 3]; 10] = [
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 6],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

pub fn rp2_six_vertex() -> SimplicialComplex {
    let lists: Vec<Vec<u32>> = RP2_FACETS.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(6, &lists).expect("labels in range")
}

/// The full simplex on `1..=n`.
pub fn simplex(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(n, vec![Face::new((1..=n).collect())])
}

/// Boundary of the `(n-1)`-simplex on `n` vertices, a `(n-2)`-sphere.
pub fn simplex_boundary(n: u32) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "simplex boundary needs n >= 2, got {n}"
        )));
    }
    let facets = (1..=n)
        .map(|skip| Face::new((1..=n).filter(|&v| v != skip).collect()))
        .collect();
    Ok(SimplicialComplex::from_faces(n, facets))
}

/// The `n`-gon.
pub fn cycle(n: u32) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let facets = (1..=n).map(|i| Face::new(vec![i, i % n + 1])).collect();
    Ok(SimplicialComplex::from_faces(n, facets))
}

/// Seeded random complex.
///
/// All vertices `1..=n` are always present. Each subset of size
/// `min(d + 1, n)`, visited in lexicographic order, is then kept when the
/// next `f64` drawn from `ChaCha8Rng::seed_from_u64(seed)` is below
/// `density`. The result is the downward closure.
pub fn random_complex(n: u32, d: u32, density: f64, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "random complex needs n >= 1".into(),
        ));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    let size = (d as usize + 1).min(n as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<Face> = (1..=n).map(|v| Face::new(vec![v])).collect();
    for subset in (1..=n).combinations(size) {
        if rng.gen::<f64>() < density {
            faces.push(Face::new(subset));
        }
    }
    Ok(SimplicialComplex::from_faces(n, faces))
}

/// A validated triangulation of the m-fold dunce cap together with the
/// subdivision parameter that produced it.
#[derive(Clone, Debug)]
pub struct DunceCap {
    pub complex: SimplicialComplex,
    pub m: u32,
    /// Number of distinct vertices on the identified boundary circle.
    pub q: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DunceCapMetadata {
    pub generator: &'static str,
    pub m: u32,
    pub q: u32,
}

impl DunceCap {
    pub fn metadata(&self) -> DunceCapMetadata {
        DunceCapMetadata {
            generator: "dunce",
            m: self.m,
            q: self.q,
        }
    }
}

pub const MIN_DUNCE_SUBDIVISION: u32 = 3;
const DUNCE_RETRY_BUDGET: u32 = 8;

/// Triangulation of the disk with `m q` boundary vertices, glued so that
/// boundary vertex `i` is identified with `i + q`, `i + 2q`, ...
///
/// Disk layout, outside in: boundary ring `B` (`m q` vertices), ring `A`
/// (`m q` vertices) joined to `B` by a strip, ring `C` (`q` vertices) joined
/// to `A` so that `C_j` sees `A_{jm} … A_{(j+1)m}`, and a center cone over `C`.
/// Vertex labels: the `q` boundary classes, then `A`, `C` and the center,
/// `n = q (m + 2) + 1` in total.
///
/// The quotient is checked for simpliciality and its integral cohomology is
/// checked to be `0, 0, Z/m` in degrees 0..=2; on failure `q` is increased.
/// With `q = None` the search starts at the smallest admissible value.
pub fn dunce_cap(m: u32, q: Option<u32>) -> Result<DunceCap> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "dunce cap needs m >= 2, got {m}"
        )));
    }
    let start = q.unwrap_or(MIN_DUNCE_SUBDIVISION);
    if start < MIN_DUNCE_SUBDIVISION {
        return Err(Error::InvalidParameter(format!(
            "dunce cap subdivision must be >= {MIN_DUNCE_SUBDIVISION}, got {start}"
        )));
    }
    for q in start..start + DUNCE_RETRY_BUDGET {
        if let Some(complex) = glue_disk(m, q) {
            if has_dunce_cohomology(&complex, m) {
                return Ok(DunceCap { complex, m, q });
            }
        }
    }
    Err(Error::TriangulationFailed {
        m,
        attempts: DUNCE_RETRY_BUDGET,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum DiskVertex {
    Boundary(u32),
    Outer(u32),
    Inner(u32),
    Center,
}

fn disk_triangles(m: u32, q: u32) -> Vec<[DiskVertex; 3]> {
    use DiskVertex::*;
    let big = m * q;
    let mut tris = Vec::new();
    for i in 0..big {
        let next = (i + 1) % big;
        tris.push([Boundary(i), Boundary(next), Outer(i)]);
        tris.push([Boundary(next), Outer(i), Outer(next)]);
        tris.push([Outer(i), Outer(next), Inner(i / m)]);
    }
    for j in 0..q {
        let next = (j + 1) % q;
        tris.push([Inner(j), Inner(next), Outer(((j + 1) * m) % big)]);
        tris.push([Center, Inner(j), Inner(next)]);
    }
    tris
}

/// Glues the disk and returns the quotient if it is a simplicial complex
/// homeomorphic to the intended quotient space: no face may collapse, and
/// two disk faces may share an image only if both lie on the boundary and
/// differ by a rotation through a multiple of `q` steps.
fn glue_disk(m: u32, q: u32) -> Option<SimplicialComplex> {
    use DiskVertex::*;
    let big = m * q;
    let label = |v: DiskVertex| match v {
        Boundary(i) => i % q + 1,
        Outer(i) => q + i + 1,
        Inner(j) => q + big + j + 1,
        Center => q + big + q + 1,
    };
    let n = q * (m + 2) + 1;

    let mut disk_faces: Vec<Vec<DiskVertex>> = Vec::new();
    for t in disk_triangles(m, q) {
        for mask in 1u32..8 {
            let mut f: Vec<DiskVertex> = (0..3)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| t[b])
                .collect();
            f.sort();
            disk_faces.push(f);
        }
    }
    disk_faces.sort();
    disk_faces.dedup();

    let mut images: HashMap<Face, Vec<Vec<DiskVertex>>> = HashMap::new();
    for f in &disk_faces {
        let image = Face::new(f.iter().map(|&v| label(v)).collect());
        if image.len() != f.len() {
            return None;
        }
        images.entry(image).or_default().push(f.clone());
    }
    for preimages in images.values().filter(|p| p.len() > 1) {
        let boundary_sets: Option<Vec<Vec<u32>>> = preimages
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| match v {
                        Boundary(i) => Some(*i),
                        _ => None,
                    })
                    .collect::<Option<Vec<u32>>>()
                    .map(|mut s| {
                        s.sort_unstable();
                        s
                    })
            })
            .collect();
        let sets = boundary_sets?;
        let first = &sets[0];
        let is_rotation = |s: &Vec<u32>| {
            (0..m).any(|r| {
                let mut rotated: Vec<u32> = first.iter().map(|i| (i + r * q) % big).collect();
                rotated.sort_unstable();
                &rotated == s
            })
        };
        if !sets.iter().all(is_rotation) {
            return None;
        }
    }
    let facets = disk_triangles(m, q)
        .into_iter()
        .map(|t| Face::new(t.iter().map(|&v| label(v)).collect()))
        .collect();
    Some(SimplicialComplex::from_faces(n, facets))
}

fn has_dunce_cohomology(complex: &SimplicialComplex, m: u32) -> bool {
    let h = |k| integral_cohomology(complex, k);
    h(-1).is_zero()
        && h(0).is_zero()
        && h(1).is_zero()
        && h(2).free_rank == 0
        && h(2).invariant_factors == vec![BigInt::from(m)]
}

/// Parsed generator spec such as `rp2`, `dunce:4`, `dunce:4,5`, `cycle:5`,
/// `simplex-boundary:4`, `simplex:3` or `random:8,2,0.5,42`.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Rp2,
    Dunce {
        m: u32,
        q: Option<u32>,
    },
    Cycle {
        n: u32,
    },
    SimplexBoundary {
        n: u32,
    },
    Simplex {
        n: u32,
    },
    Random {
        n: u32,
        d: u32,
        density: f64,
        seed: u64,
    },
}

/// A generated complex plus any metadata worth recording next to it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub complex: SimplicialComplex,
    pub metadata: Option<DunceCapMetadata>,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Generated> {
        let plain = |complex| Generated {
            complex,
            metadata: None,
        };
        Ok(match *self {
            GeneratorSpec::Rp2 => plain(rp2_six_vertex()),
            GeneratorSpec::Dunce { m, q } => {
                let cap = dunce_cap(m, q)?;
                Generated {
                    metadata: Some(cap.metadata()),
                    complex: cap.complex,
                }
            }
            GeneratorSpec::Cycle { n } => plain(cycle(n)?),
            GeneratorSpec::SimplexBoundary { n } => plain(simplex_boundary(n)?),
            GeneratorSpec::Simplex { n } => plain(simplex(n)),
            GeneratorSpec::Random {
                n,
                d,
                density,
                seed,
            } => plain(random_complex(n, d, density, seed)?),
        })
    }
}

fn parse_param<T: FromStr>(name: &str, raw: &str) -> Result<T> {
    raw.trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{name}: cannot parse parameter {raw:?}")))
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<&str> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',').collect()
        };
        let arity = |allowed: &[usize]| {
            if allowed.contains(&params.len()) {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} takes {allowed:?} parameters, got {}",
                    params.len()
                )))
            }
        };
        match name.trim() {
            "rp2" => {
                arity(&[0])?;
                Ok(GeneratorSpec::Rp2)
            }
            "dunce" => {
                arity(&[1, 2])?;
                Ok(GeneratorSpec::Dunce {
                    m: parse_param(name, params[0])?,
                    q: params.get(1).map(|q| parse_param(name, q)).transpose()?,
                })
            }
            "cycle" => {
                arity(&[1])?;
                Ok(GeneratorSpec::Cycle {
                    n: parse_param(name, params[0])?,
                })
            }
            "simplex-boundary" => {
                arity(&[1])?;
                Ok(GeneratorSpec::SimplexBoundary {
                    n: parse_param(name, params[0])?,
                })
            }
            "simplex" => {
                arity(&[1])?;
                Ok(GeneratorSpec::Simplex {
                    n: parse_param(name, params[0])?,
                })
            }
            "random" => {
                arity(&[4])?;
                Ok(GeneratorSpec::Random {
                    n: parse_param(name, params[0])?,
                    d: parse_param(name, params[1])?,
                    density: parse_param(name, params[2])?,
                    seed: parse_param(name, params[3])?,
                })
            }
            other => Err(Error::InvalidParameter(format!(
                "unknown generator {other:?}"
            ))),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Rp2 => write!(f, "rp2"),
            GeneratorSpec::Dunce { m, q: None } => write!(f, "dunce:{m}"),
            GeneratorSpec::Dunce { m, q: Some(q) } => write!(f, "dunce:{m},{q}"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GeneratorSpec::SimplexBoundary { n } => write!(f, "simplex-boundary:{n}"),
            GeneratorSpec::Simplex { n } => write!(f, "simplex:{n}"),
            GeneratorSpec::Random {
                n,
                d,
                density,
                seed,
            } => {
                write!(f, "random:{n},{d},{density},{seed}")
            }
        }
    }
}
