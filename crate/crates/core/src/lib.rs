//! Finite bicategories, calculi of fractions and filtered pseudo-colimits,
//! decided and computed by exhaustive search over finite presentations.

pub mod axioms;
pub mod bicat;
pub mod category;
pub mod cli;
pub mod colimit;
pub mod error;
pub mod family;
pub mod fibrations;
pub mod fixtures;
pub mod functors;
pub mod grothendieck;
pub mod homfractions;
pub mod localization;
pub mod random;
pub mod ids;
pub mod io;
pub mod report;

pub use bicat::{BicategoryBuilder, FinBicategory, PastingExpr};
pub use category::{CategoryBuilder, FinCategory};
pub use error::{Error, Result};
pub use family::{ArrFamily, ArrowFamily};
pub use functors::{CatValuedPSF, FinFunctor, FinNatTransf, PseudoCocone, PseudoFunctor};
pub use ids::{Arr, Cell1, Cell2, Obj};
pub use report::{Law, ValidationReport, Violation};
