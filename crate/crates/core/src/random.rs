//! Seeded generators of small inputs for the property suites.
//!
//! Bicategories are locally preordered 2-categories on `P × M`, with `P` a
//! random poset and `M` a small monoid. Diagrams factor through a rank map
//! `P → {0, …, k}` onto a chain of thin fibers, so they are strict by
//! construction.

use crate::axioms::check_pflt;
use crate::bicat::FinBicategory;
use crate::category::{CategoryBuilder, FinCategory};
use crate::family::ArrowFamily;
use crate::functors::{CatValuedPSF, FinFunctor};
use crate::ids::{Arr, Obj};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const NAMES: [&str; 4] = ["A", "B", "C", "D"];

/// `le[i][j]`: a random partial order on `n` points, refining the index
/// order. With `top`, the last point is above everything.
fn random_poset(r: &mut impl Rng, n: usize, density: f64, top: bool) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
        for j in i + 1..n {
            le[i][j] = r.gen_bool(density) || (top && j == n - 1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    le
}

/// A small monoid: element names (unit first) and multiplication table.
#[derive(Clone, Debug)]
pub struct Monoid {
    pub names: Vec<&'static str>,
    pub mul: Vec<Vec<usize>>,
}

pub fn monoids() -> Vec<Monoid> {
    vec![
        Monoid { names: vec!["1"], mul: vec![vec![0]] },
        Monoid { names: vec!["1", "z"], mul: vec![vec![0, 1], vec![1, 0]] },
        Monoid { names: vec!["1", "m"], mul: vec![vec![0, 1], vec![1, 1]] },
        Monoid { names: vec!["1", "r", "s"], mul: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]] },
        // left-zero band with a unit
        Monoid { names: vec!["1", "a", "b"], mul: vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]] },
    ]
}

/// `P × M` as a category, with arrows `(s ≤ t, m)` named `st` or `st_m`,
/// identities `idS`.
fn poset_times_monoid(le: &[Vec<bool>], m: &Monoid) -> (FinCategory, HashMap<String, (usize, usize, usize)>) {
    let n = le.len();
    let mut cb = CategoryBuilder::new();
    let objs: Vec<Obj> = (0..n).map(|i| cb.object(NAMES[i])).collect();
    let mut arrs: HashMap<(usize, usize, usize), Arr> = HashMap::new();
    let mut data = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if !le[i][j] {
                continue;
            }
            for (k, mk) in m.names.iter().enumerate() {
                let base = if i == j { format!("id{}", NAMES[i]) } else { format!("{}{}", NAMES[i], NAMES[j]) };
                let name = if k == 0 { base } else { format!("{base}_{mk}") };
                data.insert(name.clone(), (i, j, k));
                arrs.insert((i, j, k), cb.arrow(name, objs[i], objs[j]));
            }
        }
    }
    for i in 0..n {
        cb.set_identity(objs[i], arrs[&(i, i, 0)]);
    }
    for (&(i, j, a), &f) in &arrs {
        for (&(j2, k, b), &g) in &arrs {
            if j2 == j {
                cb.set_compose(g, f, arrs[&(i, k, m.mul[b][a])]);
            }
        }
    }
    (cb.build().expect("product category"), data)
}

/// Preorder on the monoid component of 2-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalOrder {
    Discrete,
    Chaotic,
    /// `1 ≤ x` for every `x`.
    UnitBelow,
    UnitAbove,
}

#[derive(Clone, Debug)]
pub struct RandomBicategory {
    pub seed: u64,
    pub bicat: Arc<FinBicategory>,
    pub monoid: Monoid,
    pub order: LocalOrder,
}

/// A locally preordered `P × M` on at most `max_objects` objects.
pub fn random_bicategory(seed: u64, max_objects: usize, top: bool) -> RandomBicategory {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_objects.clamp(1, 4));
    let le = random_poset(&mut r, n, 0.5, top);
    let ms = monoids();
    let m = ms.choose(&mut r).unwrap().clone();
    let orders = [LocalOrder::Discrete, LocalOrder::Chaotic, LocalOrder::UnitBelow, LocalOrder::UnitAbove];
    let mut order = *orders.choose(&mut r).unwrap();
    let (cat, data) = poset_times_monoid(&le, &m);
    let rel = |order: LocalOrder, x: usize, y: usize| match order {
        LocalOrder::Discrete => x == y,
        LocalOrder::Chaotic => true,
        LocalOrder::UnitBelow => x == y || x == 0,
        LocalOrder::UnitAbove => x == y || y == 0,
    };
    let build = |order: LocalOrder| {
        FinBicategory::locally_preordered(
            &cat,
            |f, g| {
                let (a, b) = (data[cat.arr_name(f)], data[cat.arr_name(g)]);
                (a.0, a.1) == (b.0, b.1) && rel(order, a.2, b.2)
            },
            |_, _| None,
        )
    };
    let bicat = match build(order) {
        Ok(b) => b,
        Err(_) => {
            order = LocalOrder::Discrete;
            build(order).expect("discrete order is compatible")
        }
    };
    RandomBicategory { seed, bicat: Arc::new(bicat), monoid: m, order }
}

/// A class of 1-cells: a built-in one or a random subset closed under
/// composition and containing the identities.
pub fn random_family(r: &mut impl Rng, b: &FinBicategory) -> ArrowFamily {
    match r.gen_range(0..5) {
        0 => ArrowFamily::all(b),
        1 => ArrowFamily::equivalences(b),
        2 => ArrowFamily::identities(b),
        _ => {
            let mut mask: Vec<bool> = b.cells1().map(|_| r.gen_bool(0.4)).collect();
            for a in b.objects() {
                mask[b.id1(a).idx()] = true;
            }
            loop {
                let mut changed = false;
                for f in b.cells1() {
                    for g in b.cells1() {
                        if mask[f.idx()] && mask[g.idx()] {
                            if let Some(gf) = b.try_hcomp1(g, f) {
                                if !mask[gf.idx()] {
                                    mask[gf.idx()] = true;
                                    changed = true;
                                }
                            }
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            ArrowFamily::new(b, "random", b.cells1().filter(|f| mask[f.idx()]))
        }
    }
}

/// `(B, W)` from one seed.
pub fn random_pair(seed: u64) -> (RandomBicategory, ArrowFamily) {
    let rb = random_bicategory(seed, 3, false);
    let mut r = rng(seed ^ 0x5eed_f00d);
    let w = random_family(&mut r, &rb.bicat);
    (rb, w)
}

/// A random preorder on `n ≤ 3` points as a thin category; objects `x0, x1, …`.
fn random_thin(r: &mut impl Rng, n: usize, tag: &str) -> FinCategory {
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            le[i][j] = i == j || r.gen_bool(0.35);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    thin_category(&le, tag)
}

fn thin_category(le: &[Vec<bool>], tag: &str) -> FinCategory {
    let n = le.len();
    let mut cb = CategoryBuilder::new();
    let objs: Vec<Obj> = (0..n).map(|i| cb.object(format!("{tag}{i}"))).collect();
    let mut arrs = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                let name = if i == j { format!("1_{tag}{i}") } else { format!("{tag}{i}<{tag}{j}") };
                arrs.insert((i, j), cb.arrow(name, objs[i], objs[j]));
            }
        }
    }
    for i in 0..n {
        cb.set_identity(objs[i], arrs[&(i, i)]);
    }
    for (&(i, j), &f) in &arrs {
        for k in 0..n {
            if let Some(&g) = arrs.get(&(j, k)) {
                cb.set_compose(g, f, arrs[&(i, k)]);
            }
        }
    }
    cb.build().expect("thin category")
}

/// A random functor between thin categories; `None` if the search finds
/// no monotone map (it always finds a constant one when `t` is nonempty).
fn random_thin_functor(r: &mut impl Rng, s: Arc<FinCategory>, t: Arc<FinCategory>) -> Option<FinFunctor> {
    let (ns, nt) = (s.num_objects(), t.num_objects());
    let mut maps: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..ns {
        maps = maps.into_iter().flat_map(|m| (0..nt).map(move |y| [m.clone(), vec![y]].concat())).collect();
    }
    let ok: Vec<Vec<usize>> = maps
        .into_iter()
        .filter(|m| {
            s.arrows().all(|f| !t.hom(Obj::from_idx(m[s.src(f).idx()]), Obj::from_idx(m[s.tgt(f).idx()])).is_empty())
        })
        .collect();
    let m = ok.choose(r)?;
    let obj: Vec<Obj> = m.iter().map(|&y| Obj::from_idx(y)).collect();
    let arr = s.arrows().map(|f| t.hom(obj[s.src(f).idx()], obj[s.tgt(f).idx()])[0]).collect();
    Some(FinFunctor { src: s, tgt: t, obj, arr })
}

#[derive(Clone, Debug)]
pub struct RandomDiagram {
    pub seed: u64,
    pub base: RandomBicategory,
    pub diagram: CatValuedPSF,
    /// Rank of each base object in the chain of fibers.
    pub rank: Vec<usize>,
}

/// A pseudofiltered base with at most 4 objects and a strict diagram with
/// fibers of at most 3 objects. With `top`, the base has a biterminal object.
pub fn random_diagram(seed: u64, top: bool) -> RandomDiagram {
    let mut attempt = 0u64;
    loop {
        let s = seed.wrapping_mul(1_000_003).wrapping_add(attempt);
        attempt += 1;
        let rb = random_bicategory(s, 4, top);
        let b = rb.bicat.clone();
        if !check_pflt(&b).passes() || (top && b.biterminal_objects().is_empty()) {
            continue;
        }
        let mut r = rng(s ^ 0xd1a6);
        let n = b.num_objects();
        // rank: monotone in the poset order, which refines the index order
        let mut rank = vec![0usize; n];
        for a in b.objects() {
            let below = b.objects().filter(|&c| c < a && !b.hom(c, a).is_empty()).map(|c| rank[c.idx()]).max();
            rank[a.idx()] = match below {
                Some(k) => k + r.gen_range(0..=1),
                None => r.gen_range(0..=1),
            };
        }
        let k = rank.iter().copied().max().unwrap_or(0);
        let chain: Vec<Arc<FinCategory>> = (0..=k)
            .map(|i| {
                let size = r.gen_range(1..=3);
                Arc::new(random_thin(&mut r, size, &format!("{}", (b'p' + i as u8) as char)))
            })
            .collect();
        let steps: Vec<FinFunctor> = (0..k)
            .map(|i| random_thin_functor(&mut r, chain[i].clone(), chain[i + 1].clone()).expect("constant map"))
            .collect();
        let along = |i: usize, j: usize| -> FinFunctor {
            let mut f = FinFunctor::identity(chain[i].clone());
            for st in &steps[i..j] {
                f = st.after(&f);
            }
            f
        };
        let fibers: Vec<Arc<FinCategory>> = b.objects().map(|a| chain[rank[a.idx()]].clone()).collect();
        let on1: Vec<FinFunctor> = b.cells1().map(|u| along(rank[b.src1(u).idx()], rank[b.tgt1(u).idx()])).collect();
        let on2 = b
            .cells2()
            .map(|al| {
                let fu = &on1[b.src2(al).idx()];
                fu.src.objects().map(|x| fu.tgt.id(fu.map_obj(x))).collect()
            })
            .collect();
        let diagram = CatValuedPSF::strict(b, fibers, on1, on2).expect("rank diagrams are strict");
        return RandomDiagram { seed, base: rb, diagram, rank };
    }
}
