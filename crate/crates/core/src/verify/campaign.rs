//! Corpora and campaigns.
//!
//! A corpus spec is a `;`-separated list of sources and filters:
//!
//! ```text
//! regular:n=4..14,d=3; pg:q=2..9; file:extra.g6; where:connected,min_degree=3
//! ```
//!
//! `family:args` builds from the family registry, `file:path` reads graph6
//! lines, and `where:` applies filters to everything in the corpus.

use std::collections::{BTreeMap, HashSet};
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{evaluate, round_sig12, Status, Subject, TheoremCheck, VerificationRecord, VerifyError};
use crate::generators::{FamilyArgs, FamilyRegistry};
use crate::graphs::{graph_id, parse_graph6_lines, Graph};

pub const SCHEMA: &str = "specgap/1";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusFilters {
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub regular_d: Option<usize>,
    pub min_girth: Option<usize>,
}

impl CorpusFilters {
    pub fn admits(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && self.min_degree.is_none_or(|d| g.min_degree() >= d)
            && self.max_degree.is_none_or(|d| g.max_degree() <= d)
            && self.regular_d.is_none_or(|d| g.regular_degree() == Some(d))
            && self.min_girth.is_none_or(|k| g.girth().is_none_or(|girth| girth >= k))
    }

    /// Parses `connected,min_degree=3,regular=3,...`.
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let mut f = CorpusFilters::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "connected" {
                f.connected = true;
                continue;
            }
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| VerifyError::CorpusSpec(format!("filter `{item}` needs a value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| VerifyError::CorpusSpec(format!("filter `{item}` needs an integer")))?;
            let slot = match key.trim() {
                "min_degree" => &mut f.min_degree,
                "max_degree" => &mut f.max_degree,
                "regular" | "regular_d" => &mut f.regular_d,
                "min_girth" => &mut f.min_girth,
                other => return Err(VerifyError::CorpusSpec(format!("unknown filter `{other}`"))),
            };
            *slot = Some(value);
        }
        Ok(f)
    }
}

/// Deduplicated graphs, each with its id, in id order.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    items: Vec<(String, Graph)>,
    pub filters: CorpusFilters,
}

impl Corpus {
    /// Keeps the graphs admitted by `filters`, one per isomorphism class
    /// (for orders within the canonical-form cap).
    pub fn from_graphs(graphs: impl IntoIterator<Item = Graph>, filters: CorpusFilters) -> Self {
        let admitted: Vec<Graph> = graphs.into_iter().filter(|g| filters.admits(g)).collect();
        let mut items: Vec<(String, Graph)> = admitted.into_par_iter().map(|g| (graph_id(&g), g)).collect();
        let mut seen = HashSet::new();
        items.retain(|(id, _)| seen.insert(id.clone()));
        items.sort_by(|a, b| a.0.cmp(&b.0));
        Corpus { items, filters }
    }

    pub fn parse(spec: &str, families: &FamilyRegistry) -> Result<Self, VerifyError> {
        let mut graphs = Vec::new();
        let mut filters = CorpusFilters::default();
        for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (head, rest) = item.split_once(':').unwrap_or((item, ""));
            match head.trim() {
                "where" => filters = CorpusFilters::parse(rest)?,
                "file" => {
                    let bytes = std::fs::read(rest.trim())?;
                    graphs.extend(parse_graph6_lines(&bytes)?);
                }
                name => {
                    if families.get(name).is_none() {
                        return Err(VerifyError::CorpusSpec(format!("unknown family `{name}`")));
                    }
                    graphs.extend(families.build(name, &FamilyArgs::parse(rest)?)?);
                }
            }
        }
        Ok(Self::from_graphs(graphs, filters))
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.items.iter().map(|(_, g)| g)
    }

    pub fn items(&self) -> &[(String, Graph)] {
        &self.items
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestGap {
    pub gap_from_one: f64,
    pub graph_id: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Aggregate {
    pub graphs: usize,
    pub theorems: BTreeMap<String, StatusCounts>,
    /// Theorem id to the graphs meeting its bound with equality.
    pub extremal: BTreeMap<String, Vec<String>>,
    /// Largest Laplacian gap seen among the `d`-regular corpus members, per
    /// `d`. Exploratory only: no pass/fail meaning.
    pub best_gaps: BTreeMap<usize, BestGap>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub records: Vec<VerificationRecord>,
    pub aggregate: Aggregate,
}

impl CampaignReport {
    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    /// Schema line, one line per record, then the aggregate.
    pub fn write_jsonl(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{}", serde_json::json!({ "schema": SCHEMA }))?;
        for r in &self.records {
            writeln!(out, "{}", serde_json::to_string(r).expect("records serialize"))?;
        }
        writeln!(out, "{}", serde_json::json!({ "aggregate": self.aggregate }))
    }
}

/// Records for one graph, plus its regular degree and gap if it has both.
type GraphOutcome = (Vec<VerificationRecord>, Option<(usize, f64)>);

/// Evaluates `checks` on every corpus graph using `jobs` worker threads.
/// Records come out in corpus order, then check order, whatever the
/// completion order.
pub fn run_campaign(corpus: &Corpus, checks: &[&dyn TheoremCheck], jobs: usize) -> Result<CampaignReport, VerifyError> {
    if corpus.is_empty() {
        return Err(VerifyError::EmptyCorpus);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| VerifyError::ThreadPool(e.to_string()))?;
    let per_graph: Vec<GraphOutcome> = pool.install(|| {
        corpus
            .items
            .par_iter()
            .map(|(id, g)| {
                let subject = Subject::with_id(g, id.clone());
                let records = checks.iter().map(|c| evaluate(*c, &subject)).collect();
                let probe = g
                    .regular_degree()
                    .filter(|_| g.is_connected())
                    .and_then(|d| subject.gap_from_one().ok().map(|gap| (d, round_sig12(gap.value))));
                (records, probe)
            })
            .collect()
    });

    let mut aggregate = Aggregate { graphs: corpus.len(), ..Aggregate::default() };
    for c in checks {
        aggregate.theorems.insert(c.id().to_string(), StatusCounts::default());
    }
    let mut records = Vec::new();
    for ((id, _), (recs, probe)) in corpus.items.iter().zip(per_graph) {
        if let Some((d, gap)) = probe {
            let best = aggregate.best_gaps.entry(d).or_insert(BestGap { gap_from_one: gap, graph_id: id.clone() });
            if gap > best.gap_from_one {
                *best = BestGap { gap_from_one: gap, graph_id: id.clone() };
            }
        }
        for r in recs {
            let counts = aggregate.theorems.entry(r.theorem.clone()).or_default();
            match r.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::NotApplicable => counts.not_applicable += 1,
            }
            if r.is_extremal() {
                aggregate.extremal.entry(r.theorem.clone()).or_default().push(r.graph_id.clone());
            }
            records.push(r);
        }
    }
    Ok(CampaignReport { records, aggregate })
}
