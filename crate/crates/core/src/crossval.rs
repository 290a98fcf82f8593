//! Formula-versus-oracle cross-validation suites.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caterpillar::{self, recognize_caterpillar};
use crate::error::{Error, Result};
use crate::generate::{all_rds, random_caterpillar, random_uig, random_uig_2connected, seeded};
use crate::graph::Graph;
use crate::hereditary::{crosscheck_property_p, FindingKind};
use crate::io::to_graph6;
use crate::oracle::Oracle;
use crate::unit_interval::{self, UnitIntervalModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Caterpillar,
    Uig,
    PropertyP,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "caterpillar" => Ok(Suite::Caterpillar),
            "uig" => Ok(Suite::Uig),
            "property-p" => Ok(Suite::PropertyP),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?} (caterpillar, uig, property-p, all)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationRow {
    pub instance: String,
    pub parameter: String,
    pub formula: Option<usize>,
    /// `None` when the oracle cap was exceeded.
    pub oracle: Option<usize>,
    pub agree: bool,
    pub runtime_us: u128,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub rows: Vec<ValidationRow>,
    pub summary: Summary,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    fn from_rows(mut rows: Vec<ValidationRow>, mut warnings: Vec<String>) -> Self {
        rows.sort_by(|a, b| (&a.instance, &a.parameter).cmp(&(&b.instance, &b.parameter)));
        let mut summary = Summary { rows: rows.len(), ..Summary::default() };
        for r in &rows {
            match (r.oracle, r.agree) {
                (None, _) => summary.skipped += 1,
                (Some(_), true) => summary.agreements += 1,
                (Some(_), false) => summary.disagreements += 1,
            }
        }
        if summary.skipped > 0 {
            warnings.push(format!("{} rows skipped: oracle cap exceeded", summary.skipped));
        }
        ValidationReport { rows, summary, warnings }
    }

    fn merge(reports: Vec<ValidationReport>) -> Self {
        let mut rows = Vec::new();
        let mut warnings = Vec::new();
        for r in reports {
            rows.extend(r.rows);
            warnings.extend(r.warnings.into_iter().filter(|w| !w.contains("oracle cap exceeded")));
        }
        ValidationReport::from_rows(rows, warnings)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &ValidationRow> {
        self.rows.iter().filter(|r| r.oracle.is_some() && !r.agree)
    }
}

/// Settings shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct CrossvalConfig {
    pub max_n: usize,
    pub seed: u64,
    pub oracle: Oracle,
    /// Random instances per suite (caterpillars, UIGs, property-𝒫 samples per order).
    pub samples: usize,
}

impl Default for CrossvalConfig {
    fn default() -> Self {
        CrossvalConfig { max_n: 10, seed: 0, oracle: Oracle::default(), samples: 100 }
    }
}

fn row(instance: &str, parameter: &str, formula: usize, oracle: Result<usize>, start: Instant) -> Result<ValidationRow> {
    let oracle = match oracle {
        Ok(v) => Some(v),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ValidationRow {
        instance: instance.to_string(),
        parameter: parameter.to_string(),
        formula: Some(formula),
        agree: oracle == Some(formula),
        oracle,
        runtime_us: start.elapsed().as_micros(),
    })
}

fn caterpillar_rows(id: &str, g: &Graph, oracle: &Oracle) -> Result<Vec<ValidationRow>> {
    let cat = recognize_caterpillar(g)?.ok_or(Error::MalformedSequence(format!("{id} is not a caterpillar")))?;
    let t = Instant::now();
    let g_val = caterpillar::geodetic_number(&cat)?;
    let geo = row(id, "g", g_val, oracle.geodetic_number(g), t)?;
    let t = Instant::now();
    let hull = row(id, "h", caterpillar::hull_number(&cat), oracle.hull_number(g), t)?;
    let t = Instant::now();
    let tau = row(id, "tau", caterpillar::percolation_time(&cat)?, oracle.percolation_time(g), t)?;
    Ok(vec![geo, hull, tau])
}

/// Every caterpillar sequence whose two-pendants-per-4 realization has at most
/// `max_n` vertices, plus `samples` random caterpillars with `n ≤ max_n`.
pub fn caterpillar_suite(cfg: &CrossvalConfig) -> Result<ValidationReport> {
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for r in all_rds(cfg.max_n) {
        let g = caterpillar::realize(&r, 2)?;
        if g.n() <= cfg.max_n {
            corpus.push((format!("cat:{r}"), g));
        }
    }
    if cfg.max_n >= 2 {
        let mut rng = seeded(cfg.seed);
        for i in 0..cfg.samples {
            let g = random_caterpillar(&mut rng, cfg.max_n)?;
            corpus.push((format!("cat-random:{i:04}:{}", to_graph6(&g)), g));
        }
    }
    let rows: Vec<Vec<ValidationRow>> =
        corpus.par_iter().map(|(id, g)| caterpillar_rows(id, g, &cfg.oracle)).collect::<Result<_>>()?;
    Ok(ValidationReport::from_rows(rows.concat(), Vec::new()))
}

fn uig_rows(id: &str, m: &UnitIntervalModel, oracle: &Oracle) -> Result<Vec<ValidationRow>> {
    let g = m.graph();
    let mut rows = Vec::new();
    let t = Instant::now();
    let eps = unit_interval::percolation_time_uig(m)?;
    let tau = oracle.percolation_time(g);
    rows.push(row(id, "tau", eps, tau.clone(), t)?);
    let t = Instant::now();
    rows.push(row(id, "diameter", unit_interval::diameter_endpoints(m)?, g.diameter(), t)?);
    if let Ok(star) = unit_interval::star_transform(m) {
        let t = Instant::now();
        let star_tau = oracle.percolation_time(star.model.graph());
        if let (Ok(a), b) = (tau, star_tau) {
            rows.push(row(id, "tau_star", a, b, t)?);
        }
    }
    Ok(rows)
}

/// `samples` random connected unit interval graphs with `3 ≤ n ≤ max_n`, a
/// third of them 2-connected.
pub fn uig_suite(cfg: &CrossvalConfig) -> Result<ValidationReport> {
    if cfg.max_n < 3 {
        return Err(Error::TooSmall { what: "the unit interval suite", min: 3, n: cfg.max_n });
    }
    let mut rng = seeded(cfg.seed);
    let mut corpus = Vec::with_capacity(cfg.samples);
    for i in 0..cfg.samples {
        let n = rng.gen_range(3..=cfg.max_n);
        let m = if i % 3 == 0 { random_uig_2connected(&mut rng, n)? } else { random_uig(&mut rng, n)? };
        corpus.push((format!("uig:{i:04}:{}", to_graph6(m.graph())), m));
    }
    let rows: Vec<Vec<ValidationRow>> =
        corpus.par_iter().map(|(id, m)| uig_rows(id, m, &cfg.oracle)).collect::<Result<_>>()?;
    Ok(ValidationReport::from_rows(rows.concat(), Vec::new()))
}

/// Pattern verdict against the direct check, one row per disagreement and a
/// count row per order; reverse findings are listed as warnings with their
/// minimality.
pub fn property_p_suite(cfg: &CrossvalConfig) -> Result<ValidationReport> {
    let mut rng = seeded(cfg.seed);
    let start = Instant::now();
    let report = crosscheck_property_p(&cfg.oracle, cfg.max_n, cfg.samples, &mut rng)?;
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for (n, count, exhaustive) in &report.coverage {
        let mode = if *exhaustive { "exhaustive" } else { "sampled" };
        let bad = report.findings.iter().filter(|f| f.n == *n).count();
        rows.push(ValidationRow {
            instance: format!("property-p:n={n}:{mode}"),
            parameter: "graphs_agreeing".into(),
            formula: Some(*count - bad),
            oracle: Some(*count),
            agree: bad == 0,
            runtime_us: start.elapsed().as_micros(),
        });
    }
    for f in &report.findings {
        rows.push(ValidationRow {
            instance: format!("property-p:{}", f.graph6),
            parameter: "property_p".into(),
            formula: Some(usize::from(f.patterns.is_empty())),
            oracle: Some(usize::from(f.witness.is_none())),
            agree: false,
            runtime_us: 0,
        });
        if f.kind == FindingKind::Reverse {
            warnings.push(format!(
                "pattern-free graph {} lacks property P{} (edges {:?})",
                f.graph6,
                if f.minimal { ", minimal obstruction" } else { "" },
                f.edges
            ));
        }
    }
    Ok(ValidationReport::from_rows(rows, warnings))
}

pub fn run_suite(suite: Suite, cfg: &CrossvalConfig) -> Result<ValidationReport> {
    match suite {
        Suite::Caterpillar => caterpillar_suite(cfg),
        Suite::Uig => uig_suite(cfg),
        Suite::PropertyP => property_p_suite(cfg),
        Suite::All => Ok(ValidationReport::merge(vec![
            caterpillar_suite(cfg)?,
            uig_suite(cfg)?,
            property_p_suite(&CrossvalConfig { max_n: cfg.max_n.min(7), ..*cfg })?,
        ])),
    }
}
