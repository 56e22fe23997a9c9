use super::{FinBicategory, UnionFind};
use crate::category::{Arrow, FinCategory};
use crate::error::{Error, Result};
use crate::ids::{Arr, Cell1};
use std::collections::HashMap;

/// `π₀(B)` with its quotient map on 1-cells.
#[derive(Clone, Debug)]
pub struct Pi0 {
    pub category: FinCategory,
    /// Class of each 1-cell of `B`.
    pub quotient: Vec<Arr>,
    /// Members of each class, in canonical order.
    pub members: Vec<Vec<Cell1>>,
}

impl FinBicategory {
    /// Connected components of parallel 1-cells under 2-cells. Each class is
    /// named `[f]` after its least member.
    pub fn pi0(&self) -> Result<Pi0> {
        let n1 = self.num_cells1();
        let mut uf = UnionFind::new(n1);
        for a in self.cells2() {
            uf.union(self.src2(a).idx(), self.tgt2(a).idx());
        }
        // Union-find keeps the least index as root; least index = least name.
        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<Cell1> = Vec::new();
        let mut class = vec![0usize; n1];
        for f in self.cells1() {
            let r = uf.find(f.idx());
            let next = reps.len();
            let c = *class_of_root.entry(r).or_insert_with(|| {
                reps.push(Cell1::from_idx(r));
                next
            });
            class[f.idx()] = c;
        }
        let names: Vec<String> = reps.iter().map(|&f| format!("[{}]", self.cell1_name(f))).collect();
        // Least-member names are sorted the same way as the members, except
        // that brackets can reorder prefixes; sort explicitly.
        let mut order: Vec<usize> = (0..reps.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0usize; reps.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let quotient: Vec<Arr> = class.iter().map(|&c| Arr::from_idx(rank[c])).collect();
        let arrows: Vec<Arrow> = order
            .iter()
            .map(|&c| {
                let f = reps[c];
                Arrow { name: names[c].clone(), src: self.src1(f), tgt: self.tgt1(f) }
            })
            .collect();
        let mut members = vec![Vec::new(); arrows.len()];
        for f in self.cells1() {
            members[quotient[f.idx()].idx()].push(f);
        }
        let identity = self.objects().map(|a| quotient[self.id1(a).idx()]).collect();
        let mut compose = HashMap::new();
        for (&(g, f), &gf) in self.hcomp1.iter() {
            let key = (quotient[g.idx()], quotient[f.idx()]);
            let val = quotient[gf.idx()];
            if let Some(old) = compose.insert(key, val) {
                if old != val {
                    return Err(Error::Internal(format!(
                        "pi0 composition ill-defined at ({}, {})",
                        self.cell1_name(g),
                        self.cell1_name(f)
                    )));
                }
            }
        }
        let category = FinCategory::from_parts(self.objects.clone(), arrows, identity, compose);
        Ok(Pi0 { category, quotient, members })
    }
}
