use super::{
    d2_on, gap_inequality_on, girth7_on, lemmas_on, main2_on, main_on, phi_on, theonei1_on, trichotomy_on, Status,
    Subject, VerificationRecord, VerifyError, Witness,
};

/// A theorem predicate that can be run against any graph. Precondition
/// errors become `not_applicable` records; see [`evaluate`].
pub trait TheoremCheck: Send + Sync {
    fn id(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn check(&self, subject: &Subject) -> Result<VerificationRecord, VerifyError>;
}

/// Adapter turning a plain function into a [`TheoremCheck`].
pub struct FnCheck {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn(&Subject) -> Result<VerificationRecord, VerifyError>,
}

impl TheoremCheck for FnCheck {
    fn id(&self) -> &'static str {
        self.id
    }

    fn summary(&self) -> &'static str {
        self.summary
    }

    fn check(&self, subject: &Subject) -> Result<VerificationRecord, VerifyError> {
        (self.run)(subject)
    }
}

/// Runs `check` and folds errors into the record: unmet preconditions are
/// `not_applicable`, anything else (a solver failure) is `fail`.
pub fn evaluate(check: &dyn TheoremCheck, subject: &Subject) -> VerificationRecord {
    match check.check(subject) {
        Ok(record) => record,
        Err(e) => {
            let mut w = Witness::new();
            let status = if e.is_precondition() {
                w.text("reason", e.to_string());
                Status::NotApplicable
            } else {
                w.text("error", e.to_string());
                Status::Fail
            };
            VerificationRecord::with_id(subject.id().to_string(), check.id(), status, w)
        }
    }
}

/// Named theorem checks, selectable at runtime.
pub struct CheckRegistry {
    checks: Vec<Box<dyn TheoremCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    /// Adds `check`, replacing any existing check with the same id.
    pub fn register(&mut self, check: Box<dyn TheoremCheck>) {
        self.checks.retain(|c| c.id() != check.id());
        self.checks.push(check);
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        let defaults: [FnCheck; 9] = [
            FnCheck {
                id: "main",
                summary: "max degree <= d: adjacency gap <= sqrt(d-1), equality only for planes of order d-1, else <= sqrt(d-2)",
                run: |s| main_on(s, s.graph().max_degree()),
            },
            FnCheck {
                id: "main2",
                summary: "min degree >= d: Laplacian gap <= sqrt(d-1)/d, equality only for planes of order d-1",
                run: |s| main2_on(s, s.graph().min_degree()),
            },
            FnCheck {
                id: "trichotomy",
                summary: "d-regular: gap = sqrt(d-1)/d  <=>  gap > sqrt(d-2)/d  <=>  plane incidence graph",
                run: trichotomy_on,
            },
            FnCheck {
                id: "gap_inequality",
                summary: "pairwise inequality from the M-matrix Rayleigh quotient",
                run: gap_inequality_on,
            },
            FnCheck {
                id: "lemmas",
                summary: "regularity, 4-cycle freeness and the shape of phi(G) under large gaps",
                run: lemmas_on,
            },
            FnCheck {
                id: "girth7",
                summary: "d-regular, girth >= 7: adjacency gap <= sqrt(d - c_d)",
                run: girth7_on,
            },
            FnCheck {
                id: "theonei1",
                summary: "order-l neighborhood Laplacian bounds for l = 1..4",
                run: theonei1_on,
            },
            FnCheck {
                id: "d2",
                summary: "min degree >= 2: Laplacian gap <= 1/2, equality only for friendship and book graphs",
                run: d2_on,
            },
            FnCheck {
                id: "phi",
                summary: "phi(G): components vs bipartiteness, regularity, two cliques for planes",
                run: phi_on,
            },
        ];
        for check in defaults {
            r.register(Box::new(check));
        }
        r
    }

    pub fn get(&self, id: &str) -> Option<&dyn TheoremCheck> {
        self.checks.iter().find(|c| c.id() == id).map(|c| c.as_ref())
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().map(|c| c.id())
    }

    pub fn checks(&self) -> impl Iterator<Item = &dyn TheoremCheck> + '_ {
        self.checks.iter().map(|c| c.as_ref())
    }

    /// Resolves a comma-separated list of ids; `all` selects every check.
    pub fn select(&self, list: &str) -> Result<Vec<&dyn TheoremCheck>, VerifyError> {
        let mut out: Vec<&dyn TheoremCheck> = Vec::new();
        for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if id == "all" {
                out.extend(self.checks());
                continue;
            }
            out.push(self.get(id).ok_or_else(|| VerifyError::UnknownTheorem(id.to_string()))?);
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|c| seen.insert(c.id()));
        if out.is_empty() {
            return Err(VerifyError::UnknownTheorem(list.to_string()));
        }
        Ok(out)
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}
