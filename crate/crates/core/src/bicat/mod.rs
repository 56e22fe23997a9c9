//! Finite presentations of bicategories.
//!
//! A [`FinBicategory`] stores every cell explicitly together with complete
//! composition, unitor and associator tables. Cells are atoms: two 2-cells are
//! equal iff they are the same table element.

mod builder;
mod construct;
mod duals;
mod pasting;
mod pi0;
mod validate;

pub use builder::BicategoryBuilder;
pub use pasting::PastingExpr;
pub use pi0::Pi0;

use crate::ids::{Cell1, Cell2, Obj};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCell {
    pub name: String,
    pub src: Obj,
    pub tgt: Obj,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCell {
    pub name: String,
    pub src: Cell1,
    pub tgt: Cell1,
}

#[derive(Clone, Debug)]
pub struct FinBicategory {
    pub(crate) objects: Vec<String>,
    pub(crate) cells1: Vec<OneCell>,
    pub(crate) cells2: Vec<TwoCell>,
    pub(crate) id1: Vec<Cell1>,
    pub(crate) id2: Vec<Cell2>,
    pub(crate) vcomp: HashMap<(Cell2, Cell2), Cell2>,
    pub(crate) hcomp1: HashMap<(Cell1, Cell1), Cell1>,
    pub(crate) hcomp2: HashMap<(Cell2, Cell2), Cell2>,
    pub(crate) lunitor: Vec<Cell2>,
    pub(crate) runitor: Vec<Cell2>,
    pub(crate) assoc: HashMap<(Cell1, Cell1, Cell1), Cell2>,
    // derived indexes
    homs: Vec<Vec<Cell1>>,
    homs2: HashMap<(Cell1, Cell1), Vec<Cell2>>,
    inverses: Vec<Option<Cell2>>,
    obj_by_name: HashMap<String, Obj>,
    cell1_by_name: HashMap<String, Cell1>,
    cell2_by_name: HashMap<String, Cell2>,
}

impl PartialEq for FinBicategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.cells1 == other.cells1
            && self.cells2 == other.cells2
            && self.id1 == other.id1
            && self.id2 == other.id2
            && self.vcomp == other.vcomp
            && self.hcomp1 == other.hcomp1
            && self.hcomp2 == other.hcomp2
            && self.lunitor == other.lunitor
            && self.runitor == other.runitor
            && self.assoc == other.assoc
    }
}

impl Eq for FinBicategory {}

impl FinBicategory {
    /// Recomputes the lookup indexes after the raw tables changed.
    pub(crate) fn reindex(&mut self) {
        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, c) in self.cells1.iter().enumerate() {
            homs[c.src.idx() * n + c.tgt.idx()].push(Cell1::from_idx(i));
        }
        let mut homs2: HashMap<(Cell1, Cell1), Vec<Cell2>> = HashMap::new();
        for (i, c) in self.cells2.iter().enumerate() {
            homs2.entry((c.src, c.tgt)).or_default().push(Cell2::from_idx(i));
        }
        self.homs = homs;
        self.homs2 = homs2;
        self.obj_by_name = self.objects.iter().enumerate().map(|(i, s)| (s.clone(), Obj::from_idx(i))).collect();
        self.cell1_by_name =
            self.cells1.iter().enumerate().map(|(i, c)| (c.name.clone(), Cell1::from_idx(i))).collect();
        self.cell2_by_name =
            self.cells2.iter().enumerate().map(|(i, c)| (c.name.clone(), Cell2::from_idx(i))).collect();
        let mut inverses = vec![None; self.cells2.len()];
        for i in 0..self.cells2.len() {
            let a = Cell2::from_idx(i);
            let (f, g) = (self.cells2[i].src, self.cells2[i].tgt);
            if let Some(cands) = self.homs2.get(&(g, f)) {
                for &b in cands {
                    if self.vcomp.get(&(b, a)) == Some(&self.id2[f.idx()])
                        && self.vcomp.get(&(a, b)) == Some(&self.id2[g.idx()])
                    {
                        inverses[i] = Some(b);
                        break;
                    }
                }
            }
        }
        self.inverses = inverses;
    }

    pub(crate) fn from_raw(
        objects: Vec<String>,
        cells1: Vec<OneCell>,
        cells2: Vec<TwoCell>,
        id1: Vec<Cell1>,
        id2: Vec<Cell2>,
    ) -> Self {
        FinBicategory {
            objects,
            cells1,
            cells2,
            id1,
            id2,
            vcomp: HashMap::new(),
            hcomp1: HashMap::new(),
            hcomp2: HashMap::new(),
            lunitor: Vec::new(),
            runitor: Vec::new(),
            assoc: HashMap::new(),
            homs: Vec::new(),
            homs2: HashMap::new(),
            inverses: Vec::new(),
            obj_by_name: HashMap::new(),
            cell1_by_name: HashMap::new(),
            cell2_by_name: HashMap::new(),
        }
    }

    // ---- sizes and iteration ----

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn num_cells1(&self) -> usize {
        self.cells1.len()
    }
    pub fn num_cells2(&self) -> usize {
        self.cells2.len()
    }
    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj::from_idx)
    }
    pub fn cells1(&self) -> impl Iterator<Item = Cell1> + Clone {
        (0..self.cells1.len()).map(Cell1::from_idx)
    }
    pub fn cells2(&self) -> impl Iterator<Item = Cell2> + Clone {
        (0..self.cells2.len()).map(Cell2::from_idx)
    }

    // ---- names ----

    pub fn obj_name(&self, a: Obj) -> &str {
        &self.objects[a.idx()]
    }
    pub fn cell1_name(&self, f: Cell1) -> &str {
        &self.cells1[f.idx()].name
    }
    pub fn cell2_name(&self, a: Cell2) -> &str {
        &self.cells2[a.idx()].name
    }
    pub fn find_obj(&self, name: &str) -> Option<Obj> {
        self.obj_by_name.get(name).copied()
    }
    pub fn find_cell1(&self, name: &str) -> Option<Cell1> {
        self.cell1_by_name.get(name).copied()
    }
    pub fn find_cell2(&self, name: &str) -> Option<Cell2> {
        self.cell2_by_name.get(name).copied()
    }

    // ---- boundaries ----

    pub fn src1(&self, f: Cell1) -> Obj {
        self.cells1[f.idx()].src
    }
    pub fn tgt1(&self, f: Cell1) -> Obj {
        self.cells1[f.idx()].tgt
    }
    pub fn src2(&self, a: Cell2) -> Cell1 {
        self.cells2[a.idx()].src
    }
    pub fn tgt2(&self, a: Cell2) -> Cell1 {
        self.cells2[a.idx()].tgt
    }

    /// 1-cells `a → b`, in canonical order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Cell1] {
        &self.homs[a.idx() * self.objects.len() + b.idx()]
    }
    /// 2-cells `f ⇒ g`, in canonical order.
    pub fn hom2(&self, f: Cell1, g: Cell1) -> &[Cell2] {
        self.homs2.get(&(f, g)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    // ---- structure ----

    pub fn id1(&self, a: Obj) -> Cell1 {
        self.id1[a.idx()]
    }
    pub fn id2(&self, f: Cell1) -> Cell2 {
        self.id2[f.idx()]
    }
    pub fn is_identity2(&self, a: Cell2) -> bool {
        self.id2[self.src2(a).idx()] == a
    }

    pub fn try_vcomp(&self, beta: Cell2, alpha: Cell2) -> Option<Cell2> {
        self.vcomp.get(&(beta, alpha)).copied()
    }
    /// `β ∘ α`, α applied first.
    pub fn vcomp(&self, beta: Cell2, alpha: Cell2) -> Cell2 {
        match self.vcomp.get(&(beta, alpha)) {
            Some(&c) => c,
            None => panic!("vcomp undefined on ({}, {})", self.cell2_name(beta), self.cell2_name(alpha)),
        }
    }
    /// Vertical composite of a chain given in application order.
    pub fn vseq(&self, cells: &[Cell2]) -> Cell2 {
        let mut it = cells.iter();
        let mut acc = *it.next().expect("vseq of an empty chain");
        for &c in it {
            acc = self.vcomp(c, acc);
        }
        acc
    }

    pub fn try_hcomp1(&self, g: Cell1, f: Cell1) -> Option<Cell1> {
        self.hcomp1.get(&(g, f)).copied()
    }
    /// `g ∘ f`, f applied first.
    pub fn hcomp1(&self, g: Cell1, f: Cell1) -> Cell1 {
        match self.hcomp1.get(&(g, f)) {
            Some(&c) => c,
            None => panic!("hcomp1 undefined on ({}, {})", self.cell1_name(g), self.cell1_name(f)),
        }
    }
    pub fn try_hcomp2(&self, beta: Cell2, alpha: Cell2) -> Option<Cell2> {
        self.hcomp2.get(&(beta, alpha)).copied()
    }
    /// `β ⋆ α`, α on the first-applied side.
    pub fn hcomp2(&self, beta: Cell2, alpha: Cell2) -> Cell2 {
        match self.hcomp2.get(&(beta, alpha)) {
            Some(&c) => c,
            None => panic!("hcomp2 undefined on ({}, {})", self.cell2_name(beta), self.cell2_name(alpha)),
        }
    }
    /// `g ⋆ α = 1_g ⋆ α`.
    pub fn whisker_l(&self, g: Cell1, alpha: Cell2) -> Cell2 {
        self.hcomp2(self.id2(g), alpha)
    }
    /// `β ⋆ f = β ⋆ 1_f`.
    pub fn whisker_r(&self, beta: Cell2, f: Cell1) -> Cell2 {
        self.hcomp2(beta, self.id2(f))
    }

    /// `l_u : 1_B ∘ u ⇒ u`.
    pub fn lunitor(&self, u: Cell1) -> Cell2 {
        self.lunitor[u.idx()]
    }
    /// `r_u : u ∘ 1_A ⇒ u`.
    pub fn runitor(&self, u: Cell1) -> Cell2 {
        self.runitor[u.idx()]
    }
    pub fn try_assoc(&self, u: Cell1, v: Cell1, w: Cell1) -> Option<Cell2> {
        self.assoc.get(&(u, v, w)).copied()
    }
    /// `a_{u,v,w} : (uv)w ⇒ u(vw)`.
    pub fn assoc(&self, u: Cell1, v: Cell1, w: Cell1) -> Cell2 {
        match self.assoc.get(&(u, v, w)) {
            Some(&c) => c,
            None => panic!(
                "associator undefined on ({}, {}, {})",
                self.cell1_name(u),
                self.cell1_name(v),
                self.cell1_name(w)
            ),
        }
    }
    pub fn assoc_inv(&self, u: Cell1, v: Cell1, w: Cell1) -> Cell2 {
        self.inv(self.assoc(u, v, w))
    }

    /// Inverse of α if it has one.
    pub fn inverse(&self, a: Cell2) -> Option<Cell2> {
        self.inverses[a.idx()]
    }
    pub fn inv(&self, a: Cell2) -> Cell2 {
        match self.inverses[a.idx()] {
            Some(b) => b,
            None => panic!("2-cell {} is not invertible", self.cell2_name(a)),
        }
    }

    /// Invertibility with witness.
    pub fn is_invertible2(&self, a: Cell2) -> Option<Cell2> {
        self.inverse(a)
    }

    /// First invertible 2-cell `f ⇒ g`, if any.
    pub fn first_iso(&self, f: Cell1, g: Cell1) -> Option<Cell2> {
        self.hom2(f, g).iter().copied().find(|&a| self.inverse(a).is_some())
    }
    pub fn isomorphic1(&self, f: Cell1, g: Cell1) -> bool {
        self.first_iso(f, g).is_some()
    }

    /// `f` is an equivalence: witness `(g, η : 1 ⇒ gf, ε : fg ⇒ 1)`.
    pub fn is_equivalence1(&self, f: Cell1) -> Option<(Cell1, Cell2, Cell2)> {
        let (a, b) = (self.src1(f), self.tgt1(f));
        for &g in self.hom(b, a) {
            let gf = self.hcomp1(g, f);
            let fg = self.hcomp1(f, g);
            if let (Some(eta), Some(eps)) = (self.first_iso(self.id1(a), gf), self.first_iso(fg, self.id1(b))) {
                return Some((g, eta, eps));
            }
        }
        None
    }

    /// Undirected connectivity of the underlying graph of 1-cells.
    pub fn is_connected(&self) -> bool {
        let n = self.num_objects();
        if n == 0 {
            return true;
        }
        let mut uf = UnionFind::new(n);
        for c in &self.cells1 {
            uf.union(c.src.idx(), c.tgt.idx());
        }
        (1..n).all(|i| uf.find(i) == uf.find(0))
    }

    /// Every hom-category into `t` is equivalent to the terminal category.
    pub fn is_biterminal(&self, t: Obj) -> bool {
        self.objects().all(|a| self.hom_category(a, t).cat.is_contractible_groupoid())
    }

    pub fn biterminal_objects(&self) -> Vec<Obj> {
        self.objects().filter(|&t| self.is_biterminal(t)).collect()
    }

    /// All composable triples `(u, v, w)` with `w` first.
    pub fn composable_triples(&self) -> Vec<(Cell1, Cell1, Cell1)> {
        let mut out = Vec::new();
        for w in self.cells1() {
            for v in self.cells1().filter(|&v| self.src1(v) == self.tgt1(w)) {
                for u in self.cells1().filter(|&u| self.src1(u) == self.tgt1(v)) {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    /// Display helper for a list of 1-cells.
    pub fn names1(&self, cs: &[Cell1]) -> Vec<String> {
        cs.iter().map(|&c| self.cell1_name(c).to_string()).collect()
    }
    pub fn names2(&self, cs: &[Cell2]) -> Vec<String> {
        cs.iter().map(|&c| self.cell2_name(c).to_string()).collect()
    }
    pub(crate) fn hom_label(&self, a: Obj, b: Obj) -> String {
        format!("hom({},{})", self.obj_name(a), self.obj_name(b))
    }
}

/// Plain union-find over `0..n`, smallest index as representative.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }
    /// Returns true if the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A hom-category `B(a, b)` viewed as a [`FinCategory`](crate::category::FinCategory),
/// with the translation tables between cells and objects/arrows.
#[derive(Clone, Debug)]
pub struct HomCat {
    pub cat: std::sync::Arc<crate::category::FinCategory>,
    pub cells1: Vec<Cell1>,
    pub cells2: Vec<Cell2>,
    pub obj_of: HashMap<Cell1, Obj>,
    pub arr_of: HashMap<Cell2, crate::ids::Arr>,
}

impl HomCat {
    pub fn obj(&self, f: Cell1) -> Obj {
        self.obj_of[&f]
    }
    pub fn arr(&self, a: Cell2) -> crate::ids::Arr {
        self.arr_of[&a]
    }
}

impl FinBicategory {
    pub fn hom_category(&self, a: Obj, b: Obj) -> HomCat {
        use crate::category::{Arrow, FinCategory};
        use crate::ids::Arr;
        let cells1: Vec<Cell1> = self.hom(a, b).to_vec();
        let mut cells2: Vec<Cell2> = Vec::new();
        for &f in &cells1 {
            for &g in &cells1 {
                cells2.extend_from_slice(self.hom2(f, g));
            }
        }
        cells2.sort();
        let obj_of: HashMap<Cell1, Obj> = cells1.iter().enumerate().map(|(i, &f)| (f, Obj::from_idx(i))).collect();
        let arr_of: HashMap<Cell2, Arr> = cells2.iter().enumerate().map(|(i, &x)| (x, Arr::from_idx(i))).collect();
        let objects = cells1.iter().map(|&f| self.cell1_name(f).to_string()).collect();
        let arrows = cells2
            .iter()
            .map(|&x| Arrow {
                name: self.cell2_name(x).to_string(),
                src: obj_of[&self.src2(x)],
                tgt: obj_of[&self.tgt2(x)],
            })
            .collect();
        let identity = cells1.iter().map(|&f| arr_of[&self.id2(f)]).collect();
        let mut compose = HashMap::new();
        for &x in &cells2 {
            for y in self.cells2_from_cell(self.tgt2(x)) {
                compose.insert((arr_of[&y], arr_of[&x]), arr_of[&self.vcomp(y, x)]);
            }
        }
        let cat = std::sync::Arc::new(FinCategory::from_parts(objects, arrows, identity, compose));
        HomCat { cat, cells1, cells2, obj_of, arr_of }
    }

    fn cells2_from_cell(&self, f: Cell1) -> Vec<Cell2> {
        let (a, b) = (self.src1(f), self.tgt1(f));
        let mut out = Vec::new();
        for &g in self.hom(a, b) {
            out.extend_from_slice(self.hom2(f, g));
        }
        out
    }
}
