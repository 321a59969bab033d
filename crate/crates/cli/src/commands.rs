use anyhow::{bail, ensure, Context};
use bockstein::cohomology::{self, IntCohomology};
use bockstein::generators::GeneratorSpec;
use bockstein::stanley_reisner::{self, HochsterTable};
use bockstein::{Face, SimplicialComplex};
use serde::Serialize;

use crate::render::{cyclic_sum, face_plain, json_line, table, tsv};
use crate::{Format, Outcome};

fn done(text: String) -> anyhow::Result<Outcome> {
    Ok(Outcome {
        text,
        nonzero: false,
    })
}

fn describe(complex: &SimplicialComplex) -> String {
    let f: Vec<String> = complex.f_vector().iter().map(usize::to_string).collect();
    format!(
        "Δ: n = {}, dim {}, {} facets, f-vector ({})\n",
        complex.n(),
        complex.dim(),
        complex.facets().len(),
        f.join(", ")
    )
}

#[derive(Serialize)]
struct CohomologyReport {
    n: u32,
    dim: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    rows: Vec<CohomologyRow>,
}

#[derive(Serialize)]
struct CohomologyRow {
    degree: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    integral: Option<IntegralGroup>,
    #[serde(rename = "mod", skip_serializing_if = "Option::is_none")]
    modular: Option<ModGroup>,
}

#[derive(Serialize)]
struct IntegralGroup {
    group: String,
    free_rank: usize,
    invariant_factors: serde_json::Value,
}

impl IntegralGroup {
    fn new(h: &IntCohomology) -> anyhow::Result<Self> {
        let mut value = serde_json::to_value(h)?;
        Ok(IntegralGroup {
            group: h.to_string(),
            free_rank: h.free_rank,
            invariant_factors: value["invariant_factors"].take(),
        })
    }
}

#[derive(Serialize)]
struct ModGroup {
    group: String,
    orders: Vec<u64>,
}

pub fn cohomology(
    complex: &SimplicialComplex,
    integral: bool,
    modulus: Option<u64>,
    format: Format,
) -> anyhow::Result<Outcome> {
    if let Some(l) = modulus {
        ensure!(l >= 2, "--mod needs a modulus of at least 2, got {l}");
    }
    let mut rows = Vec::new();
    for k in -1..=complex.dim() {
        let integral = if integral {
            Some(IntegralGroup::new(&cohomology::integral_cohomology(
                complex, k,
            ))?)
        } else {
            None
        };
        let modular = match modulus {
            Some(l) => {
                let h = cohomology::mod_cohomology(complex, k, l)?;
                Some(ModGroup {
                    group: h.to_string(),
                    orders: h.orders,
                })
            }
            None => None,
        };
        rows.push(CohomologyRow {
            degree: k,
            integral,
            modular,
        });
    }
    let report = CohomologyReport {
        n: complex.n(),
        dim: complex.dim(),
        modulus,
        rows,
    };
    let mut header = vec!["degree".to_string()];
    if integral {
        header.push("Z".into());
    }
    if let Some(l) = modulus {
        header.push(format!("Z/{l}"));
    }
    let mut cells = vec![header];
    for r in &report.rows {
        let mut line = vec![r.degree.to_string()];
        line.extend(r.integral.iter().map(|g| g.group.clone()));
        line.extend(r.modular.iter().map(|g| g.group.clone()));
        cells.push(line);
    }
    done(match format {
        Format::Json => json_line(&report)?,
        Format::Tsv => tsv(&cells),
        Format::Pretty => {
            cells[0][0] = "k".into();
            for h in cells[0].iter_mut().skip(1) {
                *h = format!("H̃^k(Δ; {h})");
            }
            describe(complex) + &table(&cells)
        }
    })
}

pub fn bockstein(
    complex: &SimplicialComplex,
    k: i32,
    l: u64,
    expect_zero: bool,
    format: Format,
) -> anyhow::Result<Outcome> {
    let map = cohomology::bockstein(complex, k, l)?;
    let rank = map.rank.map_or(String::new(), |r| r.to_string());
    let text = match format {
        Format::Json => json_line(&map)?,
        Format::Tsv => tsv(&[
            [
                "degree", "modulus", "source", "target", "is_zero", "rank", "matrix",
            ]
            .map(String::from)
            .to_vec(),
            vec![
                k.to_string(),
                l.to_string(),
                cyclic_sum(&map.source_orders),
                cyclic_sum(&map.target_orders),
                map.is_zero.to_string(),
                rank,
                serde_json::to_string(&map.matrix)?,
            ],
        ]),
        Format::Pretty => {
            let mut s = format!(
                "β: H̃^{k}(Δ; Z/{l}) = {} → H̃^{}(Δ; Z/{l}) = {}\n",
                cyclic_sum(&map.source_orders),
                k + 1,
                cyclic_sum(&map.target_orders)
            );
            s += if map.is_zero { "zero map" } else { "nonzero" };
            if let Some(r) = map.rank {
                s += &format!(", rank {r}");
            }
            s.push('\n');
            if !map.matrix.is_empty() && !map.source_orders.is_empty() {
                s += "matrix (rows: target generators, columns: source generators):\n";
                let cells: Vec<Vec<String>> = map
                    .matrix
                    .iter()
                    .map(|row| {
                        std::iter::once(String::new())
                            .chain(row.iter().map(u64::to_string))
                            .collect()
                    })
                    .collect();
                s += &table(&cells);
            }
            s
        }
    };
    Ok(Outcome {
        text,
        nonzero: expect_zero && !map.is_zero,
    })
}

pub fn local_bockstein(
    complex: &SimplicialComplex,
    k: i32,
    l: u64,
    expect_zero: bool,
    format: Format,
) -> anyhow::Result<Outcome> {
    let report = stanley_reisner::local_bockstein_is_zero(complex, l, k)?;
    let text = match format {
        Format::Json => json_line(&report)?,
        Format::Tsv => {
            let mut cells = vec![["k", "modulus", "is_zero", "tau", "link_degree"]
                .map(String::from)
                .to_vec()];
            let head = [k.to_string(), l.to_string(), report.is_zero.to_string()];
            if report.witnesses.is_empty() {
                cells.push(
                    head.iter()
                        .cloned()
                        .chain([String::new(), String::new()])
                        .collect(),
                );
            }
            for w in &report.witnesses {
                cells.push(
                    head.iter()
                        .cloned()
                        .chain([face_plain(&w.tau), w.link_degree.to_string()])
                        .collect(),
                );
            }
            tsv(&cells)
        }
        Format::Pretty => {
            let mut s = format!(
                "Bockstein H^{k}_m(R/{l}R) → H^{}_m(R/{l}R), R the Stanley–Reisner ring over Z: {}\n",
                k + 1,
                if report.is_zero { "zero" } else { "nonzero" }
            );
            if !report.witnesses.is_empty() {
                s += "witnesses:\n";
                let mut cells = vec![vec!["".into(), "τ".into(), "link degree".into()]];
                for w in &report.witnesses {
                    cells.push(vec![
                        "".into(),
                        w.tau.to_string(),
                        w.link_degree.to_string(),
                    ]);
                }
                s += &table(&cells);
            }
            if report.unproved_analogue {
                s += "note: for a proper prime power the link criterion is an unproved analogue of the prime case\n";
            } else if let Some(i) = report.certified_torsion_index() {
                s += &format!("certifies {l}-torsion in H^{i}_m(R)\n");
            }
            s
        }
    };
    Ok(Outcome {
        text,
        nonzero: expect_zero && !report.is_zero,
    })
}

#[derive(Serialize)]
struct SrReport {
    n: u32,
    generators: Vec<Face>,
    monomials: Vec<String>,
}

pub fn sr_ideal(complex: &SimplicialComplex, format: Format) -> anyhow::Result<Outcome> {
    let ideal = stanley_reisner::sr_ideal(complex)?;
    let monomials = ideal.monomials();
    done(match format {
        Format::Json => json_line(&SrReport {
            n: ideal.n,
            monomials,
            generators: ideal.generators,
        })?,
        Format::Tsv => {
            let mut cells = vec![vec!["monomial".to_string(), "vertices".to_string()]];
            for (m, g) in monomials.iter().zip(&ideal.generators) {
                cells.push(vec![m.clone(), face_plain(g)]);
            }
            tsv(&cells)
        }
        Format::Pretty => {
            let mut s = format!(
                "I_Δ ⊂ Z[x1..x{}]: {} minimal generator{}\n",
                ideal.n,
                monomials.len(),
                if monomials.len() == 1 { "" } else { "s" }
            );
            for m in &monomials {
                s += &format!("  {m}\n");
            }
            s
        }
    })
}

pub fn parse_face(raw: &str, n: u32) -> anyhow::Result<Face> {
    let raw = raw.trim();
    if raw.is_empty() || raw == "∅" {
        return Ok(Face::empty());
    }
    let mut vertices = Vec::new();
    for part in raw.split(',') {
        let v: u32 = part
            .trim()
            .parse()
            .with_context(|| format!("bad vertex {part:?} in --tau"))?;
        ensure!((1..=n).contains(&v), "vertex {v} out of range 1..={n}");
        vertices.push(v);
    }
    Ok(Face::new(vertices))
}

/// Support of a multidegree u ≤ 0 given as comma-separated integers.
pub fn support_of_degree(raw: &str, n: u32) -> anyhow::Result<Face> {
    let u: Vec<i64> = raw
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .with_context(|| format!("bad entry {p:?} in --u"))
        })
        .collect::<anyhow::Result<_>>()?;
    ensure!(
        u.len() == n as usize,
        "--u needs {n} entries, got {}",
        u.len()
    );
    if u.iter().any(|&x| x > 0) {
        bail!("--u must be ≤ 0 in every coordinate");
    }
    Ok(Face::new(
        (1..=n).filter(|&i| u[i as usize - 1] < 0).collect(),
    ))
}

pub fn hochster(
    complex: &SimplicialComplex,
    l: u64,
    k: i32,
    tau: Option<Face>,
    format: Format,
) -> anyhow::Result<Outcome> {
    let table_data = match tau {
        Some(tau) => HochsterTable {
            modulus: l,
            k,
            rows: vec![stanley_reisner::hochster_dimension(complex, l, k, &tau)?],
        },
        None => stanley_reisner::hochster_table(complex, l, k)?,
    };
    done(match format {
        Format::Json => json_line(&table_data)?,
        Format::Tsv => {
            let mut cells = vec![["tau", "link_degree", "dimension", "group"]
                .map(String::from)
                .to_vec()];
            for r in &table_data.rows {
                cells.push(vec![
                    face_plain(&r.tau),
                    r.link_degree.to_string(),
                    r.dimension().to_string(),
                    cyclic_sum(&r.orders),
                ]);
            }
            tsv(&cells)
        }
        Format::Pretty => {
            let mut s = format!("[H^{k}_m(R/{l}R)]_u ≅ H̃^(k-1-|τ|)(lk τ; Z/{l}) for supp(u) = τ\n");
            let nonzero: Vec<_> = table_data.nonzero_rows().collect();
            s += &format!(
                "{} faces checked, {} nonzero\n",
                table_data.rows.len(),
                nonzero.len()
            );
            if !nonzero.is_empty() {
                let mut cells = vec![vec!["τ".to_string(), "link degree".into(), "group".into()]];
                for r in nonzero {
                    cells.push(vec![
                        r.tau.to_string(),
                        r.link_degree.to_string(),
                        cyclic_sum(&r.orders),
                    ]);
                }
                s += &table(&cells);
            }
            s
        }
    })
}

#[derive(Serialize)]
struct SweepReport {
    k: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    prime_bound: Option<u64>,
    primes: Vec<u64>,
}

pub fn prime_sweep(
    complex: &SimplicialComplex,
    k: i32,
    bound: Option<u64>,
    format: Format,
) -> anyhow::Result<Outcome> {
    let primes: Vec<u64> = stanley_reisner::bockstein_prime_sweep_bounded(complex, k, bound)?
        .into_iter()
        .collect();
    done(match format {
        Format::Json => json_line(&SweepReport {
            k,
            prime_bound: bound,
            primes,
        })?,
        Format::Tsv => std::iter::once("prime".to_string())
            .chain(primes.iter().map(u64::to_string))
            .map(|l| l + "\n")
            .collect(),
        Format::Pretty if primes.is_empty() => {
            format!("k = {k}: no prime has a nonzero Bockstein\n")
        }
        Format::Pretty => {
            let list: Vec<String> = primes.iter().map(u64::to_string).collect();
            format!(
                "k = {k}: nonzero Bockstein for p ∈ {{{}}}\n",
                list.join(", ")
            )
        }
    })
}

#[derive(Serialize)]
struct GeneratedFile<'a> {
    n: u32,
    facets: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metadata: Option<&'a bockstein::generators::DunceCapMetadata>,
}

pub fn generate(spec: &str, format: Format) -> anyhow::Result<Outcome> {
    let generated = spec.parse::<GeneratorSpec>()?.build()?;
    let file = generated.complex.to_file();
    let out = GeneratedFile {
        n: file.n,
        facets: file.facets,
        metadata: generated.metadata.as_ref(),
    };
    done(match format {
        Format::Json => json_line(&out)?,
        Format::Tsv => bail!("generate emits the JSON complex format; use --format json or pretty"),
        Format::Pretty => {
            // one facet per line
            let mut s = format!("{{\n  \"n\": {},\n  \"facets\": [", out.n);
            for (i, facet) in out.facets.iter().enumerate() {
                s += if i == 0 { "\n    " } else { ",\n    " };
                s += &serde_json::to_string(facet)?;
            }
            s += if out.facets.is_empty() { "]" } else { "\n  ]" };
            if let Some(m) = out.metadata {
                s += &format!(",\n  \"metadata\": {}", serde_json::to_string(m)?);
            }
            s + "\n}\n"
        }
    })
}
