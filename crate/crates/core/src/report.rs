use std::fmt;

use serde::Serialize;

use crate::category::{ArrowId, ObjectId};

/// The law (or structural requirement) a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    IdentityMissing,
    IdentityTyping,
    CompositionIncomplete,
    CompositeTyping,
    Associativity,
    LeftIdentity,
    RightIdentity,
    FunctorIdentity,
    FunctorTyping,
    FunctorComposition,
    ComponentTyping,
    Naturality,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::IdentityMissing => "identity missing for object",
            Law::IdentityTyping => "identity is not an endo-arrow",
            Law::CompositionIncomplete => "composition table incomplete",
            Law::CompositeTyping => "composite has wrong domain or codomain",
            Law::Associativity => "associativity",
            Law::LeftIdentity => "left identity",
            Law::RightIdentity => "right identity",
            Law::FunctorIdentity => "functor preserves identities",
            Law::FunctorTyping => "functor respects domain and codomain",
            Law::FunctorComposition => "functor preserves composition",
            Law::ComponentTyping => "component typing",
            Law::Naturality => "naturality square",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub objects: Vec<ObjectId>,
    pub arrows: Vec<ArrowId>,
    pub detail: String,
}

/// Outcome of a law check. `ok` holds exactly when `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

/// Collects at most one witness per law: the first one offered, which the
/// callers arrange to be the lexicographically least.
#[derive(Default)]
pub(crate) struct ViolationSink {
    found: Vec<Violation>,
}

impl ViolationSink {
    pub fn seen(&self, law: Law) -> bool {
        self.found.iter().any(|v| v.law == law)
    }

    pub fn push(&mut self, law: Law, objects: Vec<ObjectId>, arrows: Vec<ArrowId>, detail: impl Into<String>) {
        if !self.seen(law) {
            self.found.push(Violation {
                law,
                objects,
                arrows,
                detail: detail.into(),
            });
        }
    }

    pub fn finish(self) -> ValidationReport {
        ValidationReport::from_violations(self.found)
    }
}
