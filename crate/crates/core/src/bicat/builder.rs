use super::{FinBicategory, OneCell, TwoCell};
use crate::error::{Error, Result};
use crate::ids::{first_duplicate, sort_by_names, Cell1, Cell2, Obj};
use std::collections::HashMap;

/// Incremental construction of a [`FinBicategory`].
///
/// Ids handed out by the builder are provisional; `build` sorts every sort by
/// name and renumbers, so the built presentation iterates lexicographically.
/// If no unitors (resp. no associators) are supplied, identity coherence cells
/// are synthesized, which requires the corresponding strict equations between
/// 1-cells to hold in the `hcomp1` table.
#[derive(Clone, Debug, Default)]
pub struct BicategoryBuilder {
    objects: Vec<String>,
    cells1: Vec<(String, Obj, Obj)>,
    cells2: Vec<(String, Cell1, Cell1)>,
    id1: Vec<Option<Cell1>>,
    id2: Vec<Option<Cell2>>,
    vcomp: Vec<(Cell2, Cell2, Cell2)>,
    hcomp1: Vec<(Cell1, Cell1, Cell1)>,
    hcomp2: Vec<(Cell2, Cell2, Cell2)>,
    lunitor: Vec<Option<Cell2>>,
    runitor: Vec<Option<Cell2>>,
    assoc: Vec<(Cell1, Cell1, Cell1, Cell2)>,
}

impl BicategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> Obj {
        self.objects.push(name.into());
        self.id1.push(None);
        Obj::from_idx(self.objects.len() - 1)
    }

    pub fn cell1(&mut self, name: impl Into<String>, src: Obj, tgt: Obj) -> Cell1 {
        self.cells1.push((name.into(), src, tgt));
        self.id2.push(None);
        self.lunitor.push(None);
        self.runitor.push(None);
        Cell1::from_idx(self.cells1.len() - 1)
    }

    pub fn cell2(&mut self, name: impl Into<String>, src: Cell1, tgt: Cell1) -> Cell2 {
        self.cells2.push((name.into(), src, tgt));
        Cell2::from_idx(self.cells2.len() - 1)
    }

    pub fn set_id1(&mut self, a: Obj, f: Cell1) {
        self.id1[a.idx()] = Some(f);
    }
    pub fn set_id2(&mut self, f: Cell1, a: Cell2) {
        self.id2[f.idx()] = Some(a);
    }
    pub fn set_vcomp(&mut self, beta: Cell2, alpha: Cell2, r: Cell2) {
        self.vcomp.push((beta, alpha, r));
    }
    pub fn set_hcomp1(&mut self, g: Cell1, f: Cell1, r: Cell1) {
        self.hcomp1.push((g, f, r));
    }
    pub fn set_hcomp2(&mut self, beta: Cell2, alpha: Cell2, r: Cell2) {
        self.hcomp2.push((beta, alpha, r));
    }
    pub fn set_unitors(&mut self, u: Cell1, l: Cell2, r: Cell2) {
        self.lunitor[u.idx()] = Some(l);
        self.runitor[u.idx()] = Some(r);
    }
    pub fn set_assoc(&mut self, u: Cell1, v: Cell1, w: Cell1, a: Cell2) {
        self.assoc.push((u, v, w, a));
    }

    pub fn num_cells1(&self) -> usize {
        self.cells1.len()
    }
    pub fn num_cells2(&self) -> usize {
        self.cells2.len()
    }

    pub fn build(self) -> Result<FinBicategory> {
        let obj_names = self.objects;
        let c1_names: Vec<String> = self.cells1.iter().map(|c| c.0.clone()).collect();
        let c2_names: Vec<String> = self.cells2.iter().map(|c| c.0.clone()).collect();
        if let Some(d) = first_duplicate(&obj_names) {
            return Err(Error::Structural(format!("duplicate object id {d}")));
        }
        if let Some(d) = first_duplicate(&c1_names) {
            return Err(Error::Structural(format!("duplicate 1-cell id {d}")));
        }
        if let Some(d) = first_duplicate(&c2_names) {
            return Err(Error::Structural(format!("duplicate 2-cell id {d}")));
        }
        let (o_ord, o_rank) = sort_by_names(&obj_names);
        let (c1_ord, c1_rank) = sort_by_names(&c1_names);
        let (c2_ord, c2_rank) = sort_by_names(&c2_names);
        let ro = |a: Obj| Obj::from_idx(o_rank[a.idx()]);
        let r1 = |f: Cell1| Cell1::from_idx(c1_rank[f.idx()]);
        let r2 = |a: Cell2| Cell2::from_idx(c2_rank[a.idx()]);

        let objects: Vec<String> = o_ord.iter().map(|&i| obj_names[i].clone()).collect();
        let cells1: Vec<OneCell> = c1_ord
            .iter()
            .map(|&i| {
                let (n, s, t) = &self.cells1[i];
                OneCell { name: n.clone(), src: ro(*s), tgt: ro(*t) }
            })
            .collect();
        let cells2: Vec<TwoCell> = c2_ord
            .iter()
            .map(|&i| {
                let (n, s, t) = &self.cells2[i];
                TwoCell { name: n.clone(), src: r1(*s), tgt: r1(*t) }
            })
            .collect();
        let mut id1 = Vec::with_capacity(objects.len());
        for &i in &o_ord {
            match self.id1[i] {
                Some(f) => id1.push(r1(f)),
                None => return Err(Error::Structural(format!("object {} has no identity 1-cell", obj_names[i]))),
            }
        }
        let mut id2 = Vec::with_capacity(cells1.len());
        for &i in &c1_ord {
            match self.id2[i] {
                Some(a) => id2.push(r2(a)),
                None => return Err(Error::Structural(format!("1-cell {} has no identity 2-cell", c1_names[i]))),
            }
        }

        let mut b = FinBicategory::from_raw(objects, cells1, cells2, id1, id2);

        fn insert<K: std::hash::Hash + Eq + Copy, V: PartialEq + Copy>(
            map: &mut HashMap<K, V>,
            k: K,
            v: V,
            what: &str,
        ) -> Result<()> {
            if let Some(old) = map.insert(k, v) {
                if old != v {
                    return Err(Error::Structural(format!("conflicting {what} entries")));
                }
            }
            Ok(())
        }
        for &(x, y, r) in &self.vcomp {
            insert(&mut b.vcomp, (r2(x), r2(y)), r2(r), "vcomp")?;
        }
        for &(x, y, r) in &self.hcomp1 {
            insert(&mut b.hcomp1, (r1(x), r1(y)), r1(r), "hcomp1")?;
        }
        for &(x, y, r) in &self.hcomp2 {
            insert(&mut b.hcomp2, (r2(x), r2(y)), r2(r), "hcomp2")?;
        }
        for &(u, v, w, a) in &self.assoc {
            insert(&mut b.assoc, (r1(u), r1(v), r1(w)), r2(a), "associator")?;
        }

        // unitors: all or nothing
        let given = self.lunitor.iter().filter(|x| x.is_some()).count();
        let n1 = b.cells1.len();
        if given == 0 {
            let mut l = Vec::with_capacity(n1);
            let mut r = Vec::with_capacity(n1);
            for u in (0..n1).map(Cell1::from_idx) {
                let (s, t) = (b.cells1[u.idx()].src, b.cells1[u.idx()].tgt);
                let left = b.hcomp1.get(&(b.id1[t.idx()], u)).copied();
                let right = b.hcomp1.get(&(u, b.id1[s.idx()])).copied();
                if left != Some(u) || right != Some(u) {
                    return Err(Error::Structural(format!(
                        "unitors omitted but 1-cell {} is not strictly unital",
                        b.cells1[u.idx()].name
                    )));
                }
                l.push(b.id2[u.idx()]);
                r.push(b.id2[u.idx()]);
            }
            b.lunitor = l;
            b.runitor = r;
        } else {
            let mut l = vec![Cell2(0); n1];
            let mut r = vec![Cell2(0); n1];
            for (old, (lo, ro_)) in self.lunitor.iter().zip(self.runitor.iter()).enumerate() {
                match (lo, ro_) {
                    (Some(x), Some(y)) => {
                        l[c1_rank[old]] = r2(*x);
                        r[c1_rank[old]] = r2(*y);
                    }
                    _ => return Err(Error::Structural(format!("1-cell {} has no unitors", c1_names[old]))),
                }
            }
            b.lunitor = l;
            b.runitor = r;
        }

        if self.assoc.is_empty() {
            let mut synth = HashMap::new();
            for (&(g, f), &gf) in b.hcomp1.iter() {
                // triples (u, v, w) = (h, g, f) with h after g
                for h in (0..n1).map(Cell1::from_idx) {
                    if b.cells1[h.idx()].src != b.cells1[g.idx()].tgt {
                        continue;
                    }
                    let left = b.hcomp1.get(&(h, g)).and_then(|&hg| b.hcomp1.get(&(hg, f))).copied();
                    let right = b.hcomp1.get(&(h, gf)).copied();
                    match (left, right) {
                        (Some(x), Some(y)) if x == y => {
                            synth.insert((h, g, f), b.id2[x.idx()]);
                        }
                        (Some(_), Some(_)) => {
                            return Err(Error::Structural(format!(
                                "associators omitted but ({},{},{}) is not strictly associative",
                                b.cells1[h.idx()].name,
                                b.cells1[g.idx()].name,
                                b.cells1[f.idx()].name
                            )))
                        }
                        _ => {}
                    }
                }
            }
            b.assoc = synth;
        }
        b.reindex();
        Ok(b)
    }
}
