#![allow(dead_code)]

pub mod oracles;
pub mod properties;

use bockstein::generators::{self, dunce_cap, random_complex};
use bockstein::SimplicialComplex;

/// Seeded random complexes with 3..=8 vertices and mixed dimension/density.
pub fn random_corpus(count: u64) -> Vec<SimplicialComplex> {
    (0..count)
        .map(|seed| {
            let n = 3 + (seed % 6) as u32;
            let d = 1 + (seed / 6 % 3) as u32;
            let density = [0.35, 0.55, 0.75][(seed / 18 % 3) as usize];
            random_complex(n, d, density, seed).unwrap()
        })
        .collect()
}

/// Named fixtures, including the ones with torsion.
pub fn fixtures() -> Vec<(String, SimplicialComplex)> {
    let mut out = vec![
        ("rp2".to_string(), generators::rp2_six_vertex()),
        ("cycle:5".to_string(), generators::cycle(5).unwrap()),
        (
            "simplex-boundary:4".to_string(),
            generators::simplex_boundary(4).unwrap(),
        ),
        ("simplex:3".to_string(), generators::simplex(3)),
        ("irrelevant".to_string(), SimplicialComplex::irrelevant(0)),
        ("void".to_string(), SimplicialComplex::void(2)),
    ];
    for m in 2..=6 {
        out.push((format!("dunce:{m}"), dunce_cap(m, None).unwrap().complex));
    }
    out
}

pub fn small_fixtures() -> Vec<(String, SimplicialComplex)> {
    fixtures()
        .into_iter()
        .filter(|(_, c)| c.n() <= 19)
        .collect()
}

/// Two hundred random complexes plus the small fixtures.
pub fn property_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut v: Vec<(String, SimplicialComplex)> = random_corpus(200)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("random#{i}"), c))
        .collect();
    v.extend(small_fixtures());
    v
}
