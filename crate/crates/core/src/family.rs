//! Designated classes of 1-cells (the class `W` of a calculus of fractions).

use crate::bicat::FinBicategory;
use crate::category::FinCategory;
use crate::ids::{Arr, Cell1};

/// A set of 1-cells of a bicategory, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowFamily {
    pub name: String,
    members: Vec<Cell1>,
    mask: Vec<bool>,
}

impl ArrowFamily {
    pub fn new(b: &FinBicategory, name: impl Into<String>, members: impl IntoIterator<Item = Cell1>) -> Self {
        let mut mask = vec![false; b.num_cells1()];
        for f in members {
            mask[f.idx()] = true;
        }
        let members = (0..mask.len()).filter(|&i| mask[i]).map(Cell1::from_idx).collect();
        ArrowFamily { name: name.into(), members, mask }
    }
    pub fn all(b: &FinBicategory) -> Self {
        ArrowFamily::new(b, "all", b.cells1())
    }
    pub fn identities(b: &FinBicategory) -> Self {
        ArrowFamily::new(b, "identities", b.objects().map(|a| b.id1(a)))
    }
    pub fn equivalences(b: &FinBicategory) -> Self {
        ArrowFamily::new(b, "equivalences", b.cells1().filter(|&f| b.is_equivalence1(f).is_some()))
    }
    pub fn empty(b: &FinBicategory) -> Self {
        ArrowFamily::new(b, "empty", std::iter::empty())
    }
    /// Resolves a built-in family name.
    pub fn builtin(b: &FinBicategory, name: &str) -> Option<Self> {
        match name {
            "all" => Some(Self::all(b)),
            "identities" => Some(Self::identities(b)),
            "equivalences" => Some(Self::equivalences(b)),
            "empty" => Some(Self::empty(b)),
            _ => None,
        }
    }
    pub fn contains(&self, f: Cell1) -> bool {
        self.mask.get(f.idx()).copied().unwrap_or(false)
    }
    pub fn members(&self) -> &[Cell1] {
        &self.members
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn names(&self, b: &FinBicategory) -> Vec<String> {
        b.names1(&self.members)
    }
}

/// A set of arrows of a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrFamily {
    members: Vec<Arr>,
    mask: Vec<bool>,
}

impl ArrFamily {
    pub fn new(c: &FinCategory, members: impl IntoIterator<Item = Arr>) -> Self {
        let mut mask = vec![false; c.num_arrows()];
        for f in members {
            mask[f.idx()] = true;
        }
        let members = (0..mask.len()).filter(|&i| mask[i]).map(Arr::from_idx).collect();
        ArrFamily { members, mask }
    }
    pub fn all(c: &FinCategory) -> Self {
        ArrFamily::new(c, c.arrows())
    }
    pub fn identities(c: &FinCategory) -> Self {
        ArrFamily::new(c, c.objects().map(|a| c.id(a)))
    }
    pub fn contains(&self, f: Arr) -> bool {
        self.mask.get(f.idx()).copied().unwrap_or(false)
    }
    pub fn members(&self) -> &[Arr] {
        &self.members
    }
    /// The same arrows viewed in `C^op` (arrow indices are unchanged).
    pub fn op(&self) -> Self {
        self.clone()
    }
}
