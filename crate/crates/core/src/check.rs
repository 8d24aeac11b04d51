use serde::Serialize;

/// A tuple of carrier indices certifying a verdict, tagged with the clause it
/// belongs to (e.g. `"absorption"`, `"closure"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: &'static str,
    pub elements: Vec<usize>,
}

/// Outcome of a decidable check: the verdict and, when it fails, the
/// lexicographically least violating tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass() -> Self {
        Check { holds: true, witness: None }
    }

    pub fn fail(clause: &'static str, elements: Vec<usize>) -> Self {
        Check { holds: false, witness: Some(Witness { clause, elements }) }
    }

    pub fn elements(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.elements.as_slice())
    }
}
