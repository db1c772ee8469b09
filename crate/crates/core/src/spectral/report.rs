use serde::Serialize;

/// How a margin's value must compare with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `value ≥ bound`
    AtLeast,
    /// `value > bound`
    Above,
    /// `value ≤ bound`
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Margin {
    pub label: String,
    pub value: f64,
    pub relation: Relation,
    pub bound: f64,
}

impl Margin {
    pub fn new(label: impl Into<String>, value: f64, relation: Relation, bound: f64) -> Self {
        Self {
            label: label.into(),
            value,
            relation,
            bound,
        }
    }

    /// `a ≤ b`, allowing `tol` of slack.
    pub fn le(label: impl Into<String>, a: f64, b: f64, tol: f64) -> Self {
        Self::new(label, b - a, Relation::AtLeast, -tol)
    }

    /// `a = b` within `tol`.
    pub fn eq(label: impl Into<String>, a: f64, b: f64, tol: f64) -> Self {
        Self::new(label, (a - b).abs(), Relation::AtMost, tol)
    }

    /// Signed distance to the bound, positive when satisfied.
    pub fn slack(&self) -> f64 {
        match self.relation {
            Relation::AtLeast | Relation::Above => self.value - self.bound,
            Relation::AtMost => self.bound - self.value,
        }
    }

    pub fn satisfied(&self) -> bool {
        match self.relation {
            Relation::AtLeast => self.value >= self.bound,
            Relation::Above => self.value > self.bound,
            Relation::AtMost => self.value <= self.bound,
        }
    }
}

/// Result of checking one theorem numerically, with every margin kept so a
/// marginal verdict can be audited.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub passed: bool,
    pub tolerance: f64,
    pub margins: Vec<Margin>,
}

impl TheoremReport {
    pub fn from_margins(name: impl Into<String>, tolerance: f64, margins: Vec<Margin>) -> Self {
        let passed = margins.iter().all(Margin::satisfied);
        Self {
            name: name.into(),
            passed,
            tolerance,
            margins,
        }
    }

    /// A failed report with a single explanatory margin.
    pub fn failure(name: impl Into<String>, label: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            tolerance: 0.0,
            margins: vec![Margin::new(label, f64::NAN, Relation::AtLeast, 0.0)],
        }
    }

    /// Margin with the least slack.
    pub fn worst(&self) -> Option<&Margin> {
        self.margins
            .iter()
            .min_by(|a, b| a.slack().total_cmp(&b.slack()))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Margin> {
        self.margins.iter().filter(|m| !m.satisfied())
    }
}
