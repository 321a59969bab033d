//! Bockstein homomorphisms on reduced simplicial cohomology, and their
//! counterparts on local cohomology of Stanley–Reisner rings over `Z`.
//!
//! All arithmetic is exact (`num-bigint`).
//!
//! ```
//! use bockstein::{generators, cohomology, stanley_reisner};
//!
//! let rp2 = generators::rp2_six_vertex();
//! assert_eq!(cohomology::integral_cohomology(&rp2, 2).to_string(), "Z/2");
//! assert!(!cohomology::bockstein(&rp2, 1, 2).unwrap().is_zero);
//! let sweep = stanley_reisner::bockstein_prime_sweep(&rp2, 3).unwrap();
//! assert_eq!(sweep.into_iter().collect::<Vec<_>>(), vec![2]);
//! ```

pub mod arith;
pub mod cohomology;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod simplicial;
pub mod stanley_reisner;

pub use cohomology::{BocksteinMap, IntCohomology, ModCohomology};
pub use error::{Error, Result};
pub use linalg::{IntVector, IntegerMatrix, SnfDecomposition};
pub use simplicial::{ComplexFile, ComplexKind, Face, SimplicialComplex};
pub use stanley_reisner::{HochsterEntry, HochsterTable, LocalBocksteinReport, SrIdeal, Witness};
