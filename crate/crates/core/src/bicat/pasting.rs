use super::FinBicategory;
use crate::error::{Error, Result};
use crate::ids::{Cell1, Cell2};
use serde::{Deserialize, Serialize};

/// A pasting of named cells. Composites of 1-cells are whatever the `hcomp1`
/// table says; associators and unitors appear only where written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PastingExpr {
    Cell(String),
    Identity(String),
    LeftUnitor(String),
    RightUnitor(String),
    Associator(String, String, String),
    Inverse(Box<PastingExpr>),
    /// `after ∘ before`.
    Vertical(Box<PastingExpr>, Box<PastingExpr>),
    /// `left ⋆ right`, `right` applied first.
    Horizontal(Box<PastingExpr>, Box<PastingExpr>),
}

impl PastingExpr {
    pub fn cell(s: &str) -> Self {
        PastingExpr::Cell(s.into())
    }
    pub fn id(s: &str) -> Self {
        PastingExpr::Identity(s.into())
    }
    pub fn lunitor(s: &str) -> Self {
        PastingExpr::LeftUnitor(s.into())
    }
    pub fn runitor(s: &str) -> Self {
        PastingExpr::RightUnitor(s.into())
    }
    pub fn assoc(u: &str, v: &str, w: &str) -> Self {
        PastingExpr::Associator(u.into(), v.into(), w.into())
    }
    pub fn inverse(self) -> Self {
        PastingExpr::Inverse(Box::new(self))
    }
    pub fn then(self, after: PastingExpr) -> Self {
        PastingExpr::Vertical(Box::new(after), Box::new(self))
    }
    pub fn vcomp(after: PastingExpr, before: PastingExpr) -> Self {
        PastingExpr::Vertical(Box::new(after), Box::new(before))
    }
    pub fn hcomp(left: PastingExpr, right: PastingExpr) -> Self {
        PastingExpr::Horizontal(Box::new(left), Box::new(right))
    }
}

fn err(path: &[&str], message: impl Into<String>) -> Error {
    let p = if path.is_empty() { "root".to_string() } else { path.join("/") };
    Error::Expr { path: p, message: message.into() }
}

impl FinBicategory {
    /// Folds the expression through the tables.
    pub fn evaluate(&self, e: &PastingExpr) -> Result<Cell2> {
        let mut path = Vec::new();
        self.eval_at(e, &mut path)
    }

    fn c1(&self, name: &str, path: &[&str]) -> Result<Cell1> {
        self.find_cell1(name).ok_or_else(|| err(path, format!("unknown 1-cell {name}")))
    }

    fn eval_at<'a>(&self, e: &'a PastingExpr, path: &mut Vec<&'a str>) -> Result<Cell2> {
        match e {
            PastingExpr::Cell(n) => self.find_cell2(n).ok_or_else(|| err(path, format!("unknown 2-cell {n}"))),
            PastingExpr::Identity(n) => Ok(self.id2(self.c1(n, path)?)),
            PastingExpr::LeftUnitor(n) => Ok(self.lunitor(self.c1(n, path)?)),
            PastingExpr::RightUnitor(n) => Ok(self.runitor(self.c1(n, path)?)),
            PastingExpr::Associator(u, v, w) => {
                let (u, v, w) = (self.c1(u, path)?, self.c1(v, path)?, self.c1(w, path)?);
                if self.src1(u) != self.tgt1(v) || self.src1(v) != self.tgt1(w) {
                    return Err(err(path, "associator on non-composable 1-cells"));
                }
                self.try_assoc(u, v, w).ok_or_else(|| err(path, "associator missing from table"))
            }
            PastingExpr::Inverse(x) => {
                path.push("inverse");
                let a = self.eval_at(x, path)?;
                path.pop();
                self.inverse(a).ok_or_else(|| err(path, format!("{} is not invertible", self.cell2_name(a))))
            }
            PastingExpr::Vertical(after, before) => {
                path.push("before");
                let a = self.eval_at(before, path)?;
                path.pop();
                path.push("after");
                let b = self.eval_at(after, path)?;
                path.pop();
                if self.tgt2(a) != self.src2(b) {
                    return Err(err(
                        path,
                        format!(
                            "vertical boundary mismatch: {} ends at {}, {} starts at {}",
                            self.cell2_name(a),
                            self.cell1_name(self.tgt2(a)),
                            self.cell2_name(b),
                            self.cell1_name(self.src2(b))
                        ),
                    ));
                }
                self.try_vcomp(b, a).ok_or_else(|| err(path, "vcomp entry missing"))
            }
            PastingExpr::Horizontal(left, right) => {
                path.push("right");
                let a = self.eval_at(right, path)?;
                path.pop();
                path.push("left");
                let b = self.eval_at(left, path)?;
                path.pop();
                if self.src1(self.src2(b)) != self.tgt1(self.src2(a)) {
                    return Err(err(path, "horizontal boundary mismatch"));
                }
                self.try_hcomp2(b, a).ok_or_else(|| err(path, "hcomp2 entry missing"))
            }
        }
    }
}
