//! Deciders for the filteredness and fractions axioms, the invertibility
//! upgrade and the pseudo-cocone builder.

mod filtered;
mod fractions;

pub use filtered::{
    build_pseudococone, check_flt, check_pflt, flt0, flt1, flt2, pflt0, pflt0_commuting, span_completions,
    upgrade_to_invertible,
};
pub use fractions::{
    check_axiom_equivalence, check_bf, check_bf4_tail, check_frc, frc0, frc1_solutions, frc2, AxiomEquivalence,
};

use serde::{Deserialize, Serialize};
use std::fmt;

/// One witness row: the input tuple and the cells produced for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<String>,
    pub output: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub pass: bool,
    /// First failing input in canonical order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AxiomVerdict {
    pub(crate) fn new(axiom: &str) -> Self {
        AxiomVerdict { axiom: axiom.into(), pass: true, counterexample: None, witnesses: Vec::new(), notes: Vec::new() }
    }
    pub(crate) fn fail(&mut self, input: Vec<String>) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(input);
        }
    }
    pub(crate) fn witness(&mut self, input: Vec<String>, output: Vec<String>) {
        self.witnesses.push(Witness { input, output });
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
    pub fn verdict(&self, axiom: &str) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }
    /// Verdict of one axiom; panics on an unknown name.
    pub fn pass(&self, axiom: &str) -> bool {
        self.verdict(axiom).unwrap_or_else(|| panic!("no verdict for {axiom}")).pass
    }
    pub fn failed(&self) -> Vec<&str> {
        self.verdicts.iter().filter(|v| !v.pass).map(|v| v.axiom.as_str()).collect()
    }
    /// Drops the witness tables (reports stay small for printing).
    pub fn without_witnesses(mut self) -> Self {
        for v in &mut self.verdicts {
            v.witnesses.clear();
        }
        self
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            write!(f, "{:<10} {}", v.axiom, if v.pass { "pass" } else { "FAIL" })?;
            if let Some(c) = &v.counterexample {
                write!(f, "  at ({})", c.join(", "))?;
            }
            writeln!(f)?;
            for n in &v.notes {
                writeln!(f, "           note: {n}")?;
            }
        }
        Ok(())
    }
}
