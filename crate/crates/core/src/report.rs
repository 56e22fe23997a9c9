//! Validation reports shared by the bicategory, pseudo-functor and cocone
//! validators.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    // bicategories
    LocalCategory,
    HorizontalComposition,
    CoherenceTyping,
    Interchange,
    IdentityPreservation,
    UnitorInvertible,
    AssociatorInvertible,
    UnitorNaturality,
    AssociatorNaturality,
    Pentagon,
    Triangle,
    // finite categories, functors, transformations
    CategoryTyping,
    CategoryAssociativity,
    CategoryUnit,
    FunctorTyping,
    Functoriality,
    TransformationTyping,
    Naturality,
    // pseudo-functors
    PsfTyping,
    LocalFunctoriality,
    ConstraintInvertible,
    ConstraintNaturality,
    LaxAssociativity,
    LaxLeftUnity,
    LaxRightUnity,
    // Cat-valued pseudo-functors
    FiberCategory,
    // pseudo-cocones
    CoconeTyping,
    CoconeInvertible,
    Pc0,
    Pc1,
    Pc2,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        write!(f, "{}", s.as_str().unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: Law,
    /// Where the law was evaluated, e.g. `hom(A,B)` or `F(u)`.
    pub location: String,
    /// The offending cell tuple, by textual id.
    pub cells: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: Law, location: impl Into<String>, cells: Vec<String>, detail: impl Into<String>) {
        self.violations.push(Violation { law, location: location.into(), cells, detail: detail.into() });
    }

    pub fn laws(&self) -> Vec<Law> {
        let mut v: Vec<Law> = self.violations.iter().map(|x| x.law).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn names(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return writeln!(f, "no violations");
        }
        for v in &self.violations {
            writeln!(f, "{} at {}: ({}) {}", v.law, v.location, v.cells.join(", "), v.detail)?;
        }
        Ok(())
    }
}
