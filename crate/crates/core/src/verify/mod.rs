//! Theorem checks as predicates over graphs, a registry of named checks,
//! and a campaign runner that evaluates them over a corpus.
//!
//! Every equality claim is decided by a float comparison *and* an exact
//! recognizer; a check passes only when both agree.

mod campaign;
mod registry;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::generators::GenError;
use crate::graphs::{graph_id, Graph, GraphError};
use crate::neighborhood::{self, NeighborhoodError};
use crate::recognize::{classify_d2_extremal, is_projective_incidence, D2Class};
use crate::spectra::{self, GapKind, GapResult, SpectraError, Spectrum, GAP_TOL};

pub use campaign::{run_campaign, Aggregate, BestGap, CampaignReport, Corpus, CorpusFilters, StatusCounts, SCHEMA};
pub use registry::{evaluate, CheckRegistry, FnCheck, TheoremCheck};

/// Slack allowed in the pairwise gap inequality.
pub const PAIR_SLACK_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("precondition not met: {0}")]
    FilterViolation(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("girth {girth} is below 7")]
    GirthTooSmall { girth: usize },
    #[error("minimum degree {0} is below 3")]
    MinDegreeTooSmall(usize),
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("bad corpus spec: {0}")]
    CorpusSpec(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Neighborhood(#[from] NeighborhoodError),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl VerifyError {
    /// Whether the error says the check does not apply to the graph, as
    /// opposed to something having gone wrong while checking it.
    pub fn is_precondition(&self) -> bool {
        match self {
            VerifyError::FilterViolation(_)
            | VerifyError::NotRegular
            | VerifyError::GirthTooSmall { .. }
            | VerifyError::MinDegreeTooSmall(_) => true,
            VerifyError::Neighborhood(e) => !matches!(e, NeighborhoodError::Spectra(SpectraError::ConvergenceFailure)),
            VerifyError::Spectra(e) => !matches!(e, SpectraError::ConvergenceFailure),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Numeric evidence attached to a record. Floats are kept to 12
/// significant digits so reports are stable across platforms.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(pub BTreeMap<String, Value>);

/// `x` rounded to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn round12(x: f64) -> Value {
    if x.is_finite() {
        Value::from(round_sig12(x))
    } else {
        Value::Null
    }
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn num(&mut self, key: &str, x: f64) {
        self.0.insert(key.to_string(), round12(x));
    }

    pub fn int(&mut self, key: &str, x: usize) {
        self.0.insert(key.to_string(), Value::from(x));
    }

    pub fn flag(&mut self, key: &str, x: bool) {
        self.0.insert(key.to_string(), Value::from(x));
    }

    pub fn text(&mut self, key: &str, x: impl Into<String>) {
        self.0.insert(key.to_string(), Value::from(x.into()));
    }

    pub fn opt_int(&mut self, key: &str, x: Option<usize>) {
        self.0.insert(key.to_string(), x.map_or(Value::Null, Value::from));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub theorem: String,
    pub status: Status,
    pub witness: Witness,
}

impl VerificationRecord {
    pub fn new(g: &Graph, theorem: &str, status: Status, witness: Witness) -> Self {
        Self::with_id(graph_id(g), theorem, status, witness)
    }

    pub fn with_id(graph_id: String, theorem: &str, status: Status, witness: Witness) -> Self {
        VerificationRecord { graph_id, theorem: theorem.to_string(), status, witness }
    }

    /// Whether the record reports a graph meeting the theorem's bound with
    /// equality (confirmed by the recognizer).
    pub fn is_extremal(&self) -> bool {
        self.witness.get("extremal") == Some(&Value::Bool(true))
    }
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// A graph under test with lazily computed, shared spectra so that several
/// checks on the same graph solve each eigenproblem once.
pub struct Subject<'a> {
    graph: &'a Graph,
    id: OnceLock<String>,
    adjacency: OnceLock<Result<Spectrum, SpectraError>>,
    nlap: OnceLock<Result<Spectrum, SpectraError>>,
    plane: OnceLock<Option<usize>>,
    phi: OnceLock<Graph>,
}

impl<'a> Subject<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Subject {
            graph,
            id: OnceLock::new(),
            adjacency: OnceLock::new(),
            nlap: OnceLock::new(),
            plane: OnceLock::new(),
            phi: OnceLock::new(),
        }
    }

    pub fn with_id(graph: &'a Graph, id: String) -> Self {
        let s = Self::new(graph);
        s.id.set(id).expect("fresh cell");
        s
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn id(&self) -> &str {
        self.id.get_or_init(|| graph_id(self.graph))
    }

    pub fn adjacency_spectrum(&self) -> Result<&Spectrum, SpectraError> {
        self.adjacency.get_or_init(|| spectra::adjacency_spectrum(self.graph)).as_ref().map_err(Clone::clone)
    }

    pub fn nlap_spectrum(&self) -> Result<&Spectrum, SpectraError> {
        self.nlap.get_or_init(|| spectra::nlap_spectrum(self.graph)).as_ref().map_err(Clone::clone)
    }

    pub fn gap_from_zero(&self) -> Result<GapResult, SpectraError> {
        Ok(GapResult::from_spectrum(self.adjacency_spectrum()?, GapKind::AdjacencyFromZero))
    }

    pub fn gap_from_one(&self) -> Result<GapResult, SpectraError> {
        Ok(GapResult::from_spectrum(self.nlap_spectrum()?, GapKind::LaplacianFromOne))
    }

    pub fn plane_order(&self) -> Option<usize> {
        *self.plane.get_or_init(|| is_projective_incidence(self.graph))
    }

    pub fn phi(&self) -> &Graph {
        self.phi.get_or_init(|| neighborhood::phi(self.graph))
    }

    fn record(&self, theorem: &str, status: Status, witness: Witness) -> VerificationRecord {
        VerificationRecord::with_id(self.id().to_string(), theorem, status, witness)
    }

    fn require_connected(&self) -> Result<(), VerifyError> {
        if self.graph.is_connected() {
            Ok(())
        } else {
            Err(VerifyError::FilterViolation("graph is disconnected".into()))
        }
    }
}

fn require_degree_param(d: usize) -> Result<(), VerifyError> {
    if d < 3 {
        return Err(VerifyError::FilterViolation(format!("d = {d} is below 3")));
    }
    Ok(())
}

/// Sizes of the components of `phi` if each one is a complete graph.
fn complete_component_sizes(phi: &Graph) -> Option<Vec<usize>> {
    let comp = phi.components();
    let count = comp.iter().max().map_or(0, |c| c + 1);
    let mut sizes = vec![0; count];
    for &c in &comp {
        sizes[c] += 1;
    }
    (0..phi.order()).all(|v| phi.degree(v) + 1 == sizes[comp[v]]).then_some(sizes)
}

/// Whether `phi` is one or two complete graphs, each of order `d^2 - d + 1`.
fn phi_is_plane_shaped(phi: &Graph, d: usize) -> bool {
    complete_component_sizes(phi)
        .is_some_and(|sizes| (1..=2).contains(&sizes.len()) && sizes.iter().all(|&s| s == d * d - d + 1))
}

pub fn main_on(s: &Subject, d: usize) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    require_degree_param(d)?;
    if g.order() < 3 {
        return Err(VerifyError::FilterViolation("fewer than 3 vertices".into()));
    }
    if g.max_degree() > d {
        return Err(VerifyError::FilterViolation(format!("max degree {} exceeds d = {d}", g.max_degree())));
    }
    let gap = s.gap_from_zero()?;
    let upper = ((d - 1) as f64).sqrt();
    let nonplane = ((d - 2) as f64).sqrt();
    let plane = s.plane_order();
    let is_plane = plane == Some(d - 1);
    let at_upper = (gap.value - upper).abs() <= GAP_TOL;
    let above_nonplane = gap.value > nonplane + GAP_TOL;
    let ok = gap.value <= upper + GAP_TOL && (!above_nonplane || (is_plane && at_upper)) && (!is_plane || at_upper);

    let mut w = Witness::new();
    w.int("d", d);
    w.num("gap_from_zero", gap.value);
    w.num("attaining_eigenvalue", gap.attaining_eigenvalue);
    w.num("bound", upper);
    w.num("nonplane_bound", nonplane);
    w.opt_int("plane_order", plane);
    w.flag("extremal", is_plane && at_upper);
    Ok(s.record("main", status_of(ok), w))
}

pub fn main2_on(s: &Subject, d: usize) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    require_degree_param(d)?;
    if g.min_degree() < d {
        return Err(VerifyError::FilterViolation(format!("min degree {} is below d = {d}", g.min_degree())));
    }
    let gap = s.gap_from_one()?;
    let bound = ((d - 1) as f64).sqrt() / d as f64;
    let plane = s.plane_order();
    let is_plane = plane == Some(d - 1);
    let equal = (gap.value - bound).abs() <= GAP_TOL;
    let ok = gap.value <= bound + GAP_TOL && equal == is_plane;

    let mut w = Witness::new();
    w.int("d", d);
    w.num("gap_from_one", gap.value);
    w.num("attaining_eigenvalue", gap.attaining_eigenvalue);
    w.num("bound", bound);
    w.opt_int("plane_order", plane);
    w.flag("extremal", equal && is_plane);
    Ok(s.record("main2", status_of(ok), w))
}

pub fn trichotomy_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    s.require_connected()?;
    let d = s.graph().regular_degree().ok_or(VerifyError::NotRegular)?;
    require_degree_param(d)?;
    let gap = s.gap_from_one()?;
    let df = d as f64;
    let plane_value = (df - 1.0).sqrt() / df;
    let nonplane_value = (df - 2.0).sqrt() / df;
    let equal = (gap.value - plane_value).abs() <= GAP_TOL;
    let above = gap.value > nonplane_value + GAP_TOL;
    let plane = s.plane_order() == Some(d - 1);

    let mut w = Witness::new();
    w.int("d", d);
    w.num("gap_from_one", gap.value);
    w.num("plane_value", plane_value);
    w.num("nonplane_value", nonplane_value);
    w.flag("equals_plane_value", equal);
    w.flag("above_nonplane_value", above);
    w.flag("is_plane", plane);
    w.flag("extremal", equal && above && plane);
    Ok(s.record("trichotomy", status_of(equal == above && above == plane), w))
}

pub fn gap_inequality_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    if g.order() < 2 {
        return Err(VerifyError::FilterViolation("fewer than 2 vertices".into()));
    }
    let gap = s.gap_from_one()?.value;
    let gap2 = gap * gap;
    let n = g.order();
    let term: Vec<f64> = (0..n).map(|w| 1.0 / g.degree(w) as f64 - gap2).collect();
    let row_sum: Vec<f64> = (0..n).map(|u| g.neighbors(u).iter().map(|&w| term[w]).sum()).collect();

    // Sum over the symmetric difference = S(u) + S(v) - 2 * sum over the
    // intersection.
    let mut mark = vec![false; n];
    let mut worst = (f64::INFINITY, 0, 0);
    let mut tight = 0usize;
    for u in 0..n {
        for &w in g.neighbors(u) {
            mark[w] = true;
        }
        for v in u + 1..n {
            let (mut common, mut common_sum) = (0usize, 0.0);
            for &w in g.neighbors(v) {
                if mark[w] {
                    common += 1;
                    common_sum += term[w];
                }
            }
            let lhs = row_sum[u] + row_sum[v] - 2.0 * common_sum;
            let slack = lhs - 2.0 * common as f64 * gap2;
            if slack.abs() <= PAIR_SLACK_TOL {
                tight += 1;
            }
            if slack < worst.0 {
                worst = (slack, u, v);
            }
        }
        for &w in g.neighbors(u) {
            mark[w] = false;
        }
    }

    let mut w = Witness::new();
    w.num("gap_from_one", gap);
    w.num("min_slack", worst.0);
    w.int("min_slack_u", worst.1);
    w.int("min_slack_v", worst.2);
    w.int("tight_pairs", tight);
    Ok(s.record("gap_inequality", status_of(worst.0 >= -PAIR_SLACK_TOL), w))
}

/// Outcome of one material conditional.
fn conditional(w: &mut Witness, key: &str, antecedent: bool, consequent: impl FnOnce() -> bool) -> (bool, bool) {
    if !antecedent {
        w.text(key, "vacuous");
        return (false, true);
    }
    let holds = consequent();
    w.text(key, if holds { "holds" } else { "violated" });
    (true, holds)
}

pub fn lemmas_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    let gap = s.gap_from_one()?.value;
    let regular = g.regular_degree();
    let mut w = Witness::new();
    w.num("gap_from_one", gap);
    let mut outcomes = Vec::new();

    // A large gap forces regularity, for every admissible d.
    let forcing = (3..=g.min_degree()).filter(|&d| gap >= ((d - 1) as f64).sqrt() / d as f64 - GAP_TOL).max();
    w.opt_int("regularity_forcing_d", forcing);
    outcomes.push(conditional(&mut w, "reduce_to_regular", forcing.is_some(), || regular.is_some()));

    let d = regular.unwrap_or(0);
    let four_cycle_free = regular.is_some() && !g.has_four_cycle();
    let df = d as f64;
    let above_nonplane = d >= 3 && gap > (df - 2.0).sqrt() / df + GAP_TOL;
    outcomes.push(conditional(&mut w, "no_four_cycle", above_nonplane, || four_cycle_free));
    outcomes.push(conditional(&mut w, "phi_complete_components", above_nonplane, || phi_is_plane_shaped(s.phi(), d)));
    outcomes.push(conditional(&mut w, "phi_regular", four_cycle_free, || s.phi().regular_degree() == Some(d * d - d)));
    let shaped = d >= 3 && four_cycle_free && phi_is_plane_shaped(s.phi(), d);
    outcomes
        .push(conditional(&mut w, "phi_shape_gives_gap", shaped, || (gap - (df - 1.0).sqrt() / df).abs() <= GAP_TOL));

    let fired = outcomes.iter().any(|o| o.0);
    let ok = outcomes.iter().all(|o| o.1);
    let status = match (ok, fired) {
        (false, _) => Status::Fail,
        (true, false) => Status::NotApplicable,
        (true, true) => Status::Pass,
    };
    Ok(s.record("lemmas", status, w))
}

pub fn girth7_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    let d = g.regular_degree().ok_or(VerifyError::NotRegular)?;
    if let Some(girth) = g.girth().filter(|&girth| girth < 7) {
        return Err(VerifyError::GirthTooSmall { girth });
    }
    let c = spectra::c_d(d).map_err(|_| VerifyError::FilterViolation(format!("d = {d} is below 3")))?;
    let gap = s.gap_from_zero()?;
    let target = d as f64 - c;
    let bound = target.sqrt();
    let f = spectra::windmill_test_vector(g, 0)?;
    let quotient = spectra::rayleigh_a2(g, &f)?;
    let ok = gap.value <= bound + GAP_TOL && (quotient - target).abs() <= PAIR_SLACK_TOL;

    let mut w = Witness::new();
    w.int("d", d);
    w.num("c_d", c);
    w.num("gap_from_zero", gap.value);
    w.num("bound", bound);
    w.num("windmill_rayleigh", quotient);
    Ok(s.record("girth7", status_of(ok), w))
}

pub fn d2_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    if g.min_degree() < 2 {
        return Err(VerifyError::FilterViolation(format!("min degree {} is below 2", g.min_degree())));
    }
    let gap = s.gap_from_one()?;
    let class = classify_d2_extremal(g);
    let equal = (gap.value - 0.5).abs() <= GAP_TOL;
    let mut ok = gap.value <= 0.5 + GAP_TOL && equal == (class != D2Class::None);

    let mut w = Witness::new();
    w.num("gap_from_one", gap.value);
    w.num("bound", 0.5);
    w.text("class", format!("{class:?}").to_lowercase());
    if g.regular_degree() == Some(2) {
        // Cycles: the adjacency gap is at most 1, attained only by the
        // triangle and the hexagon.
        let gap0 = s.gap_from_zero()?.value;
        let cycle_extremal = matches!(class, D2Class::Triangle | D2Class::Hexagon);
        ok &= gap0 <= 1.0 + GAP_TOL && ((gap0 - 1.0).abs() <= GAP_TOL) == cycle_extremal;
        w.num("gap_from_zero", gap0);
    }
    w.flag("extremal", equal && class != D2Class::None);
    Ok(s.record("d2", status_of(ok), w))
}

pub fn phi_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    let bipartite = g.is_bipartite();
    let components = s.phi().component_count();
    let mut ok = if bipartite { components == 2 } else { components == 1 };

    let mut w = Witness::new();
    w.flag("bipartite", bipartite);
    w.int("phi_components", components);
    if let Some(d) = g.regular_degree().filter(|_| !g.has_four_cycle()) {
        let regular = s.phi().regular_degree() == Some(d * d - d);
        w.flag("phi_regular", regular);
        ok &= regular;
    }
    if let Some(n) = s.plane_order() {
        let d = n + 1;
        let two_cliques = complete_component_sizes(s.phi())
            .is_some_and(|sizes| sizes.len() == 2 && sizes.iter().all(|&x| x == d * d - d + 1));
        w.flag("phi_two_cliques", two_cliques);
        ok &= two_cliques;
    }
    Ok(s.record("phi", status_of(ok), w))
}

/// Orders 1 through 4 of the neighborhood-Laplacian bound in one record.
pub fn theonei1_on(s: &Subject) -> Result<VerificationRecord, VerifyError> {
    let g = s.graph();
    s.require_connected()?;
    let d = g.min_degree();
    if d < 3 {
        return Err(VerifyError::MinDegreeTooSmall(d));
    }
    let nlap = s.nlap_spectrum()?;
    let mut w = Witness::new();
    let mut ok = true;
    for l in 1..=4 {
        let spectrum = neighborhood::neighborhood_spectrum(nlap, l);
        ok &= neighborhood::theonei1_on_spectrum(&spectrum, d, l, &mut w, &format!("l{l}_"));
    }
    w.int("d", d);
    Ok(s.record("theonei1", status_of(ok), w))
}

pub fn check_thm_main(g: &Graph, d: usize) -> Result<VerificationRecord, VerifyError> {
    main_on(&Subject::new(g), d)
}

pub fn check_thm_main2(g: &Graph, d: usize) -> Result<VerificationRecord, VerifyError> {
    main2_on(&Subject::new(g), d)
}

pub fn check_regular_trichotomy(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    trichotomy_on(&Subject::new(g))
}

pub fn check_gap_inequality(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    gap_inequality_on(&Subject::new(g))
}

pub fn check_lemma_consequences(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    lemmas_on(&Subject::new(g))
}

pub fn check_girth7(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    girth7_on(&Subject::new(g))
}

pub fn check_d2(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    d2_on(&Subject::new(g))
}

pub fn check_phi(g: &Graph) -> Result<VerificationRecord, VerifyError> {
    phi_on(&Subject::new(g))
}
