//! Property 𝒫 (`I(I(S)) = I(S)` for every `S`) and its forbidden induced
//! subgraph characterization.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::generate::{all_connected_graphs, canonical_code, random_connected_graph};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::oracle::Oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForbiddenPattern {
    /// `K_4` minus an edge.
    Diamond,
    /// Triangle with one pendant vertex.
    Paw,
    /// `P_4` with a pendant at its second vertex.
    Chair,
    /// Complete bipartite `K_{2,3}`.
    K23,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 4] =
        [ForbiddenPattern::Diamond, ForbiddenPattern::Paw, ForbiddenPattern::Chair, ForbiddenPattern::K23];

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::Diamond => "diamond",
            ForbiddenPattern::Paw => "paw",
            ForbiddenPattern::Chair => "chair",
            ForbiddenPattern::K23 => "K_{2,3}",
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            ForbiddenPattern::Diamond => (4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
            ForbiddenPattern::Paw => (4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
            ForbiddenPattern::Chair => (5, &[(0, 1), (1, 2), (2, 3), (1, 4)]),
            ForbiddenPattern::K23 => return Graph::complete_bipartite(2, 3),
        };
        Graph::from_edges(n, edges).expect("pattern edge lists are simple")
    }
}

/// Patterns occurring as induced subgraphs of `g`.
pub fn forbidden_patterns_in(g: &Graph) -> Vec<ForbiddenPattern> {
    ForbiddenPattern::ALL.into_iter().filter(|p| g.contains_induced(&p.graph())).collect()
}

/// `true` iff `g` contains none of the four patterns as an induced subgraph.
pub fn has_property_p_by_patterns(g: &Graph) -> bool {
    forbidden_patterns_in(g).is_empty()
}

/// Whether the oracle geodetic and hull numbers coincide.
pub fn check_hg_equality(oracle: &Oracle, g: &Graph) -> Result<bool> {
    Ok(oracle.geodetic_number(g)? == oracle.hull_number(g)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FindingKind {
    /// Contains a pattern yet satisfies 𝒫.
    Forward,
    /// Pattern-free yet fails 𝒫.
    Reverse,
}

/// A graph on which the pattern test and the direct check disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub patterns: Vec<ForbiddenPattern>,
    /// A set `S` with `I(I(S)) ≠ I(S)`, if the direct check failed.
    pub witness: Option<Vec<usize>>,
    /// Every one-vertex-deleted subgraph satisfies 𝒫 (a minimal obstruction).
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub max_n: usize,
    /// `(n, graphs checked, exhaustive?)` per order.
    pub coverage: Vec<(usize, usize, bool)>,
    pub findings: Vec<Finding>,
}

impl CrosscheckReport {
    pub fn forward_violations(&self) -> usize {
        self.findings.iter().filter(|f| f.kind == FindingKind::Forward).count()
    }

    pub fn reverse_findings(&self) -> usize {
        self.findings.iter().filter(|f| f.kind == FindingKind::Reverse).count()
    }

    pub fn graphs_checked(&self) -> usize {
        self.coverage.iter().map(|c| c.1).sum()
    }
}

/// Largest order enumerated exhaustively; larger orders are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 7;

fn examine(oracle: &Oracle, g: &Graph) -> Result<Option<Finding>> {
    let patterns = forbidden_patterns_in(g);
    let witness = oracle.property_p_witness(g)?;
    let kind = match (patterns.is_empty(), witness.is_none()) {
        (true, false) => FindingKind::Reverse,
        (false, true) => FindingKind::Forward,
        _ => return Ok(None),
    };
    let minimal = witness.is_some()
        && (0..g.n()).all(|v| oracle.property_p(&g.remove_vertex(v)).unwrap_or(false));
    Ok(Some(Finding {
        kind,
        graph6: to_graph6(g),
        n: g.n(),
        edges: g.edges().collect(),
        patterns,
        witness,
        minimal,
    }))
}

/// Compares the pattern test with the direct property check on every
/// connected graph with at most `min(max_n, 7)` vertices, the four patterns
/// themselves, and `samples_per_order` random connected graphs for each order
/// from 8 to `max_n`. Findings are sorted by order, then graph6 string.
pub fn crosscheck_property_p<R: Rng>(
    oracle: &Oracle,
    max_n: usize,
    samples_per_order: usize,
    rng: &mut R,
) -> Result<CrosscheckReport> {
    let mut corpus: Vec<Graph> = ForbiddenPattern::ALL.iter().map(|p| p.graph()).collect();
    let mut coverage = Vec::new();
    for n in 1..=max_n.min(EXHAUSTIVE_LIMIT) {
        let graphs = all_connected_graphs(n);
        coverage.push((n, graphs.len(), true));
        corpus.extend(graphs);
    }
    for n in EXHAUSTIVE_LIMIT + 1..=max_n {
        for _ in 0..samples_per_order {
            let p = rng.gen_range(0.1..0.6);
            corpus.push(random_connected_graph(rng, n, p));
        }
        coverage.push((n, samples_per_order, false));
    }
    let results: Vec<Option<Finding>> =
        corpus.par_iter().map(|g| examine(oracle, g)).collect::<Result<_>>()?;
    let mut findings: Vec<Finding> = results.into_iter().flatten().collect();
    findings.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    // the patterns are also part of the enumeration, and samples may repeat
    findings.dedup_by_key(|f| {
        let g = Graph::from_edges(f.n, &f.edges).expect("edges came from a graph");
        canonical_code(&g)
    });
    Ok(CrosscheckReport { max_n, coverage, findings })
}
