//! Per-polytope reports and the corpus classification runner.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::fibrelike::{
    decompose_prime, describe, is_centrally_symmetric, is_fibre_like, recognize_irreducible,
};
use crate::io::PolytopeRecord;
use crate::mori::is_k_neighbourly;
use crate::polytope::Polytope;
use crate::symmetry::symmetry_report;
use crate::toric::{fano_index, is_reflexive, is_smooth, is_terminal, picard_rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    VertexTransitive,
    FibreLike,
    Smooth,
    Reflexive,
    Terminal,
    CentrallySymmetric,
    TwoNeighbourly,
    Recognize,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::VertexTransitive,
        Predicate::FibreLike,
        Predicate::Smooth,
        Predicate::Reflexive,
        Predicate::Terminal,
        Predicate::CentrallySymmetric,
        Predicate::TwoNeighbourly,
        Predicate::Recognize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::VertexTransitive => "vertex_transitive",
            Predicate::FibreLike => "fibre_like",
            Predicate::Smooth => "smooth",
            Predicate::Reflexive => "reflexive",
            Predicate::Terminal => "terminal",
            Predicate::CentrallySymmetric => "centrally_symmetric",
            Predicate::TwoNeighbourly => "two_neighbourly",
            Predicate::Recognize => "recognize",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown predicate `{s}`"))
    }
}

/// A computed value, or the reason it could not be computed. Serializes as
/// the bare value or as `{"error": reason}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome<T> {
    Value(T),
    Error { error: String },
}

impl<T> Outcome<T> {
    fn err(reason: impl Into<String>) -> Self {
        Outcome::Error {
            error: reason.into(),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Error { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub family: String,
    pub dim: usize,
    pub multiplicity: usize,
}

/// Fields left as `None` were not requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoReport {
    pub id: Option<u64>,
    pub name: Option<String>,
    pub dim: usize,
    pub num_vertices: usize,
    pub smooth: Option<Outcome<bool>>,
    pub reflexive: Option<Outcome<bool>>,
    pub terminal: Option<Outcome<bool>>,
    pub simplicial: Option<Outcome<bool>>,
    pub centrally_symmetric: Option<Outcome<bool>>,
    pub two_neighbourly: Option<Outcome<bool>>,
    pub vertex_transitive: Option<Outcome<bool>>,
    pub t: Option<Outcome<usize>>,
    pub k: Option<Outcome<usize>>,
    pub fibre_like: Option<Outcome<bool>>,
    pub picard_rank: Option<Outcome<usize>>,
    pub fano_index: Option<Outcome<u64>>,
    pub factors: Option<Outcome<Vec<FactorEntry>>>,
    pub recognized: Option<Outcome<String>>,
}

impl FanoReport {
    pub fn flag(&self, p: Predicate) -> Option<bool> {
        let field = match p {
            Predicate::VertexTransitive => &self.vertex_transitive,
            Predicate::FibreLike => &self.fibre_like,
            Predicate::Smooth => &self.smooth,
            Predicate::Reflexive => &self.reflexive,
            Predicate::Terminal => &self.terminal,
            Predicate::CentrallySymmetric => &self.centrally_symmetric,
            Predicate::TwoNeighbourly => &self.two_neighbourly,
            Predicate::Recognize => {
                return self
                    .recognized
                    .as_ref()
                    .and_then(Outcome::value)
                    .map(|s| !s.contains('?'))
            }
        };
        field.as_ref().and_then(Outcome::value).copied()
    }
}

fn base_report(rec: &PolytopeRecord) -> FanoReport {
    FanoReport {
        id: rec.id,
        name: rec.name.clone(),
        dim: rec.dim,
        num_vertices: rec.vertices.len(),
        smooth: None,
        reflexive: None,
        terminal: None,
        simplicial: None,
        centrally_symmetric: None,
        two_neighbourly: None,
        vertex_transitive: None,
        t: None,
        k: None,
        fibre_like: None,
        picard_rank: None,
        fano_index: None,
        factors: None,
        recognized: None,
    }
}

fn fill(r: &mut FanoReport, p: &Polytope, wanted: &[Predicate]) {
    let want = |x: Predicate| wanted.contains(&x);
    let smooth = is_smooth(p);
    r.smooth = Some(Outcome::Value(smooth));
    r.simplicial = Some(Outcome::Value(p.is_simplicial()));
    r.picard_rank =
        Some(picard_rank(p).map_or_else(|_| Outcome::err("NotSimplicial"), Outcome::Value));
    r.fano_index = Some(fano_index(p).map_or_else(|_| Outcome::err("NotSmooth"), Outcome::Value));
    if want(Predicate::Reflexive) {
        r.reflexive = Some(Outcome::Value(is_reflexive(p)));
    }
    if want(Predicate::Terminal) {
        r.terminal = Some(Outcome::Value(is_terminal(p)));
    }
    if want(Predicate::CentrallySymmetric) {
        r.centrally_symmetric = Some(Outcome::Value(is_centrally_symmetric(p)));
    }
    if want(Predicate::TwoNeighbourly) {
        r.two_neighbourly = Some(Outcome::Value(is_k_neighbourly(p, 2)));
    }
    if want(Predicate::VertexTransitive) || want(Predicate::FibreLike) {
        let s = symmetry_report(p);
        r.vertex_transitive = Some(Outcome::Value(s.vertex_transitive));
        r.t = Some(Outcome::Value(s.t));
        r.k = Some(Outcome::Value(s.k));
    }
    if want(Predicate::FibreLike) {
        r.fibre_like = Some(match is_fibre_like(p) {
            Ok(v) => Outcome::Value(v.fibre_like),
            Err(_) => Outcome::err("NotSmooth"),
        });
    }
    if want(Predicate::Recognize) {
        r.factors = Some(match decompose_prime(p) {
            Ok(dec) => Outcome::Value(
                dec.factors
                    .iter()
                    .map(|f| FactorEntry {
                        family: recognize_irreducible(&f.polytope).to_string(),
                        dim: f.polytope.dim(),
                        multiplicity: f.multiplicity,
                    })
                    .collect(),
            ),
            Err(_) => Outcome::err("NotDirectSum"),
        });
        r.recognized = Some(Outcome::Value(describe(p)));
    }
}

/// Report on one record, evaluating the requested predicates. The smoothness,
/// simpliciality, Picard rank and index fields are always filled.
pub fn analyze_record(rec: &PolytopeRecord, wanted: &[Predicate]) -> FanoReport {
    let mut r = base_report(rec);
    match rec.polytope() {
        Ok(p) => fill(&mut r, &p, wanted),
        Err(e) => r.smooth = Some(Outcome::err(e.to_string())),
    }
    r
}

/// A row in the layout of the fibre-like table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub dim: usize,
    pub num_vertices: usize,
    pub description: String,
    pub id: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub predicates: Vec<String>,
    pub records: Vec<FanoReport>,
    /// records for which each requested predicate holds, plus `records`
    pub summary: BTreeMap<String, usize>,
    /// fibre-like records (present when `fibre_like` was requested)
    pub table: Vec<TableRow>,
}

impl CorpusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Evaluates `predicates` on every record using `threads` worker threads.
/// Records are reported in (dimension, id, vertices) order whatever the
/// thread count.
pub fn classify_corpus(
    records: &[PolytopeRecord],
    predicates: &[Predicate],
    threads: usize,
) -> CorpusReport {
    let mut wanted: Vec<Predicate> = predicates.to_vec();
    wanted.sort();
    wanted.dedup();
    let mut order: Vec<&PolytopeRecord> = records.iter().collect();
    order.sort_by(|a, b| (a.dim, a.id, &a.vertices).cmp(&(b.dim, b.id, &b.vertices)));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    let reports: Vec<FanoReport> = pool.install(|| {
        order
            .par_iter()
            .map(|r| analyze_record(r, &wanted))
            .collect()
    });

    let mut summary = BTreeMap::new();
    summary.insert("records".to_string(), reports.len());
    for &p in &wanted {
        let n = reports.iter().filter(|r| r.flag(p) == Some(true)).count();
        summary.insert(p.name().to_string(), n);
    }
    let table = reports
        .iter()
        .filter(|r| r.flag(Predicate::FibreLike) == Some(true))
        .map(|r| TableRow {
            dim: r.dim,
            num_vertices: r.num_vertices,
            description: match r.recognized.as_ref().and_then(Outcome::value) {
                Some(s) => s.clone(),
                None => r.name.clone().unwrap_or_default(),
            },
            id: r.id,
        })
        .collect();
    CorpusReport {
        predicates: wanted.iter().map(|p| p.name().to_string()).collect(),
        records: reports,
        summary,
        table,
    }
}
