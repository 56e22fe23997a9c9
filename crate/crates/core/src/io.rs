//! JSON file formats. Every file carries a `format` tag; cells are referred
//! to by their textual ids.

use crate::bicat::{BicategoryBuilder, FinBicategory};
use crate::category::{CategoryBuilder, FinCategory};
use crate::error::{Error, Result};
use crate::family::ArrowFamily;
use crate::functors::{CatValuedPSF, FinFunctor, PseudoFunctor};
use crate::ids::{Arr, Cell1, Cell2, Obj};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDecl {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitorPair {
    pub l: String,
    pub r: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicategoryFile {
    #[serde(default = "fmt_bicategory")]
    pub format: String,
    pub objects: Vec<String>,
    pub cells1: Vec<CellDecl>,
    pub cells2: Vec<CellDecl>,
    pub identities1: BTreeMap<String, String>,
    pub identities2: BTreeMap<String, String>,
    #[serde(default)]
    pub vcomp: Vec<[String; 3]>,
    #[serde(default)]
    pub hcomp1: Vec<[String; 3]>,
    #[serde(default)]
    pub hcomp2: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitors: Option<BTreeMap<String, UnitorPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associators: Option<Vec<[String; 4]>>,
    /// Named classes of 1-cells, usable with `--family`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub families: BTreeMap<String, Vec<String>>,
}

fn fmt_bicategory() -> String {
    "bicategory".into()
}
fn fmt_category() -> String {
    "category".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    #[serde(default = "fmt_category")]
    pub format: String,
    pub objects: Vec<String>,
    pub arrows: Vec<CellDecl>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

/// A bicategory given inline or by path (relative to the referring file).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BicategoryRef {
    Path(String),
    Inline(Box<BicategoryFile>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsfFile {
    pub format: String,
    pub dom: BicategoryRef,
    pub cod: BicategoryRef,
    pub obj: BTreeMap<String, String>,
    pub cells1: BTreeMap<String, String>,
    pub cells2: BTreeMap<String, String>,
    /// `[u, v, F²_{u,v}]`; omitted entries are identities.
    #[serde(default)]
    pub f2: Vec<[String; 3]>,
    #[serde(default)]
    pub f0: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorFile {
    pub obj: BTreeMap<String, String>,
    pub arr: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Row {
    pub u: String,
    pub v: String,
    pub components: BTreeMap<String, String>,
}

/// Components default to identities and functors of identity 1-cells to
/// identity functors, so strict diagrams stay short.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatValuedFile {
    pub format: String,
    pub base: BicategoryRef,
    pub fibers: BTreeMap<String, CategoryFile>,
    #[serde(default)]
    pub functors: BTreeMap<String, FunctorFile>,
    #[serde(default)]
    pub cells2: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub f2: Vec<F2Row>,
    #[serde(default)]
    pub f0: BTreeMap<String, BTreeMap<String, String>>,
}

// ---- emit ----

fn decl(id: &str, src: &str, tgt: &str) -> CellDecl {
    CellDecl { id: id.into(), src: src.into(), tgt: tgt.into() }
}

pub fn bicategory_to_file(b: &FinBicategory, families: &[ArrowFamily]) -> BicategoryFile {
    let n1 = |f: Cell1| b.cell1_name(f).to_string();
    let n2 = |a: Cell2| b.cell2_name(a).to_string();
    let mut vcomp: Vec<_> = b.vcomp.iter().map(|(&(x, y), &r)| ((x, y), [n2(x), n2(y), n2(r)])).collect();
    vcomp.sort();
    let mut hcomp1: Vec<_> = b.hcomp1.iter().map(|(&(x, y), &r)| ((x, y), [n1(x), n1(y), n1(r)])).collect();
    hcomp1.sort();
    let mut hcomp2: Vec<_> = b.hcomp2.iter().map(|(&(x, y), &r)| ((x, y), [n2(x), n2(y), n2(r)])).collect();
    hcomp2.sort();
    let mut assoc: Vec<_> = b.assoc.iter().map(|(&(u, v, w), &a)| ((u, v, w), [n1(u), n1(v), n1(w), n2(a)])).collect();
    assoc.sort();
    let mut file = BicategoryFile {
        format: fmt_bicategory(),
        objects: b.objects().map(|a| b.obj_name(a).to_string()).collect(),
        cells1: b.cells1().map(|f| decl(b.cell1_name(f), b.obj_name(b.src1(f)), b.obj_name(b.tgt1(f)))).collect(),
        cells2: b.cells2().map(|a| decl(b.cell2_name(a), b.cell1_name(b.src2(a)), b.cell1_name(b.tgt2(a)))).collect(),
        identities1: b.objects().map(|a| (b.obj_name(a).to_string(), n1(b.id1(a)))).collect(),
        identities2: b.cells1().map(|f| (n1(f), n2(b.id2(f)))).collect(),
        vcomp: vcomp.into_iter().map(|x| x.1).collect(),
        hcomp1: hcomp1.into_iter().map(|x| x.1).collect(),
        hcomp2: hcomp2.into_iter().map(|x| x.1).collect(),
        unitors: Some(b.cells1().map(|f| (n1(f), UnitorPair { l: n2(b.lunitor(f)), r: n2(b.runitor(f)) })).collect()),
        associators: Some(assoc.into_iter().map(|x| x.1).collect()),
        families: families.iter().map(|w| (w.name.clone(), w.names(b))).collect(),
    };
    // drop the coherence tables when the loader would synthesize the same ones
    let mut short = file.clone();
    short.unitors = None;
    short.associators = None;
    if matches!(bicategory_from_file(&short), Ok(s) if s == *b) {
        return short;
    }
    let mut no_assoc = file.clone();
    no_assoc.associators = None;
    if matches!(bicategory_from_file(&no_assoc), Ok(s) if s == *b) {
        file = no_assoc;
    }
    file
}

pub fn category_to_file(c: &FinCategory) -> CategoryFile {
    let n = |f: Arr| c.arr_name(f).to_string();
    let mut compose: Vec<_> = c.compose.iter().map(|(&(g, f), &r)| ((g, f), [n(g), n(f), n(r)])).collect();
    compose.sort();
    CategoryFile {
        format: fmt_category(),
        objects: c.objects().map(|a| c.obj_name(a).to_string()).collect(),
        arrows: c.arrows().map(|f| decl(c.arr_name(f), c.obj_name(c.src(f)), c.obj_name(c.tgt(f)))).collect(),
        identities: c.objects().map(|a| (c.obj_name(a).to_string(), n(c.id(a)))).collect(),
        compose: compose.into_iter().map(|x| x.1).collect(),
    }
}

fn inline(b: &FinBicategory) -> BicategoryRef {
    BicategoryRef::Inline(Box::new(bicategory_to_file(b, &[])))
}

/// `dom`/`cod` given as references; `None` inlines them.
pub fn psf_to_file(f: &PseudoFunctor, dom: Option<BicategoryRef>, cod: Option<BicategoryRef>) -> PsfFile {
    let (d, c) = (&*f.dom, &*f.cod);
    let mut f2: Vec<_> = f
        .f2
        .iter()
        .map(|(&(u, v), &x)| ((u, v), [d.cell1_name(u).to_string(), d.cell1_name(v).to_string(), c.cell2_name(x).to_string()]))
        .collect();
    f2.sort();
    PsfFile {
        format: "psf".into(),
        dom: dom.unwrap_or_else(|| inline(d)),
        cod: cod.unwrap_or_else(|| inline(c)),
        obj: d.objects().map(|a| (d.obj_name(a).into(), c.obj_name(f.map_obj(a)).into())).collect(),
        cells1: d.cells1().map(|u| (d.cell1_name(u).into(), c.cell1_name(f.map1(u)).into())).collect(),
        cells2: d.cells2().map(|a| (d.cell2_name(a).into(), c.cell2_name(f.map2(a)).into())).collect(),
        f2: f2.into_iter().map(|x| x.1).collect(),
        f0: d.objects().map(|a| (d.obj_name(a).into(), c.cell2_name(f.f0(a)).into())).collect(),
    }
}

fn components(src: &FinCategory, tgt: &FinCategory, comps: &[Arr]) -> BTreeMap<String, String> {
    src.objects().map(|x| (src.obj_name(x).to_string(), tgt.arr_name(comps[x.idx()]).to_string())).collect()
}

pub fn catvalued_to_file(f: &CatValuedPSF, base: Option<BicategoryRef>) -> CatValuedFile {
    let b = &*f.base;
    let functor = |g: &FinFunctor| FunctorFile {
        obj: g.src.objects().map(|x| (g.src.obj_name(x).into(), g.tgt.obj_name(g.map_obj(x)).into())).collect(),
        arr: g.src.arrows().map(|a| (g.src.arr_name(a).into(), g.tgt.arr_name(g.map_arr(a)).into())).collect(),
    };
    let mut f2: Vec<_> = f
        .f2
        .iter()
        .map(|(&(u, v), comps)| {
            let (s, t) = (f.fiber(b.src1(v)), f.fiber(b.tgt1(u)));
            let row = F2Row { u: b.cell1_name(u).into(), v: b.cell1_name(v).into(), components: components(s, t, comps) };
            ((u, v), row)
        })
        .collect();
    f2.sort_by_key(|x| x.0);
    CatValuedFile {
        format: "catvalued".into(),
        base: base.unwrap_or_else(|| inline(b)),
        fibers: b.objects().map(|a| (b.obj_name(a).into(), category_to_file(f.fiber(a)))).collect(),
        functors: b.cells1().map(|u| (b.cell1_name(u).into(), functor(f.functor(u)))).collect(),
        cells2: b
            .cells2()
            .map(|a| {
                let u = b.src2(a);
                (b.cell2_name(a).into(), components(f.fiber(b.src1(u)), f.fiber(b.tgt1(u)), &f.on2[a.idx()]))
            })
            .collect(),
        f2: f2.into_iter().map(|x| x.1).collect(),
        f0: b.objects().map(|a| (b.obj_name(a).into(), components(f.fiber(a), f.fiber(a), &f.f0[a.idx()]))).collect(),
    }
}

// ---- load ----

fn unknown(what: &str, id: &str) -> Error {
    Error::Structural(format!("unknown {what} id {id}"))
}

pub fn bicategory_from_file(f: &BicategoryFile) -> Result<FinBicategory> {
    let mut bb = BicategoryBuilder::new();
    let objs: HashMap<&str, Obj> = f.objects.iter().map(|o| (o.as_str(), bb.object(o.clone()))).collect();
    let obj = |s: &str| objs.get(s).copied().ok_or_else(|| unknown("object", s));
    let mut c1: HashMap<&str, Cell1> = HashMap::new();
    for d in &f.cells1 {
        let id = bb.cell1(d.id.clone(), obj(&d.src)?, obj(&d.tgt)?);
        c1.insert(&d.id, id);
    }
    let cell1 = |s: &str| c1.get(s).copied().ok_or_else(|| unknown("1-cell", s));
    let mut c2: HashMap<&str, Cell2> = HashMap::new();
    for d in &f.cells2 {
        let id = bb.cell2(d.id.clone(), cell1(&d.src)?, cell1(&d.tgt)?);
        c2.insert(&d.id, id);
    }
    let cell2 = |s: &str| c2.get(s).copied().ok_or_else(|| unknown("2-cell", s));
    for (o, i) in &f.identities1 {
        bb.set_id1(obj(o)?, cell1(i)?);
    }
    for (c, i) in &f.identities2 {
        bb.set_id2(cell1(c)?, cell2(i)?);
    }
    for [x, y, r] in &f.vcomp {
        bb.set_vcomp(cell2(x)?, cell2(y)?, cell2(r)?);
    }
    for [x, y, r] in &f.hcomp1 {
        bb.set_hcomp1(cell1(x)?, cell1(y)?, cell1(r)?);
    }
    for [x, y, r] in &f.hcomp2 {
        bb.set_hcomp2(cell2(x)?, cell2(y)?, cell2(r)?);
    }
    if let Some(us) = &f.unitors {
        for (c, p) in us {
            bb.set_unitors(cell1(c)?, cell2(&p.l)?, cell2(&p.r)?);
        }
    }
    if let Some(rows) = &f.associators {
        for [u, v, w, a] in rows {
            bb.set_assoc(cell1(u)?, cell1(v)?, cell1(w)?, cell2(a)?);
        }
    }
    bb.build()
}

pub fn families_from_file(b: &FinBicategory, f: &BicategoryFile) -> Result<Vec<ArrowFamily>> {
    f.families
        .iter()
        .map(|(name, cells)| {
            let ms = cells.iter().map(|c| b.find_cell1(c).ok_or_else(|| unknown("1-cell", c))).collect::<Result<Vec<_>>>()?;
            Ok(ArrowFamily::new(b, name.clone(), ms))
        })
        .collect()
}

/// A family by built-in name, by a name declared in the file, or as a
/// comma-separated list of 1-cell ids.
pub fn resolve_family(b: &FinBicategory, declared: &[ArrowFamily], sel: &str) -> Result<ArrowFamily> {
    if let Some(w) = ArrowFamily::builtin(b, sel) {
        return Ok(w);
    }
    if let Some(w) = declared.iter().find(|w| w.name == sel) {
        return Ok(w.clone());
    }
    let ms = sel
        .split(',')
        .map(|c| b.find_cell1(c.trim()).ok_or_else(|| Error::Structural(format!("unknown family or 1-cell {c}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArrowFamily::new(b, sel, ms))
}

pub fn category_from_file(f: &CategoryFile) -> Result<FinCategory> {
    let mut cb = CategoryBuilder::new();
    let objs: HashMap<&str, Obj> = f.objects.iter().map(|o| (o.as_str(), cb.object(o.clone()))).collect();
    let obj = |s: &str| objs.get(s).copied().ok_or_else(|| unknown("object", s));
    let mut arrs: HashMap<&str, Arr> = HashMap::new();
    for d in &f.arrows {
        let id = cb.arrow(d.id.clone(), obj(&d.src)?, obj(&d.tgt)?);
        arrs.insert(&d.id, id);
    }
    let arr = |s: &str| arrs.get(s).copied().ok_or_else(|| unknown("arrow", s));
    for (o, i) in &f.identities {
        cb.set_identity(obj(o)?, arr(i)?);
    }
    for [g, h, r] in &f.compose {
        cb.set_compose(arr(g)?, arr(h)?, arr(r)?);
    }
    cb.build()
}

/// Resolves input paths: `path`, `path.json`, then the same relative to
/// `rel` and to the fixture directory.
#[derive(Clone, Debug)]
pub struct Loader {
    pub fixtures: PathBuf,
}

impl Default for Loader {
    fn default() -> Self {
        Loader::new()
    }
}

pub fn default_fixture_dir() -> PathBuf {
    match std::env::var_os("BIFRAC_FIXTURES") {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Loaded {
    Bicategory { bicat: Arc<FinBicategory>, families: Vec<ArrowFamily> },
    Category(Arc<FinCategory>),
    Psf(PseudoFunctor),
    Catvalued(CatValuedPSF),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Bicategory { .. } => "bicategory",
            Loaded::Category(_) => "category",
            Loaded::Psf(_) => "psf",
            Loaded::Catvalued(_) => "catvalued",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl Loader {
    pub fn new() -> Self {
        Loader { fixtures: default_fixture_dir() }
    }

    pub fn with_fixtures(dir: impl Into<PathBuf>) -> Self {
        Loader { fixtures: dir.into() }
    }

    pub fn resolve(&self, p: &str, rel: Option<&Path>) -> Result<PathBuf> {
        let mut cands: Vec<PathBuf> = Vec::new();
        let push = |cands: &mut Vec<PathBuf>, base: PathBuf| {
            let mut j = base.clone().into_os_string();
            j.push(".json");
            cands.push(base);
            cands.push(PathBuf::from(j));
        };
        push(&mut cands, PathBuf::from(p));
        if let Some(r) = rel {
            push(&mut cands, r.join(p));
        }
        push(&mut cands, self.fixtures.join(p));
        if let Some(name) = Path::new(p).file_name() {
            push(&mut cands, self.fixtures.join(name));
        }
        cands
            .into_iter()
            .find(|c| c.is_file())
            .ok_or_else(|| Error::Structural(format!("cannot find input {p}")))
    }

    /// Loads a file by path; returns the value and the digest of the bytes.
    pub fn load(&self, p: &str) -> Result<(Loaded, InputDigest)> {
        let path = self.resolve(p, None)?;
        let bytes = std::fs::read(&path)?;
        let digest = InputDigest { path: p.to_string(), sha256: hex::encode(Sha256::digest(&bytes)) };
        let v: serde_json::Value = serde_json::from_slice(&bytes)?;
        let dir = path.parent().map(Path::to_path_buf);
        Ok((self.from_value(v, dir.as_deref())?, digest))
    }

    pub fn from_value(&self, v: serde_json::Value, rel: Option<&Path>) -> Result<Loaded> {
        let format = v.get("format").and_then(|f| f.as_str()).unwrap_or("").to_string();
        match format.as_str() {
            "bicategory" => {
                let f: BicategoryFile = serde_json::from_value(v)?;
                let b = bicategory_from_file(&f)?;
                let families = families_from_file(&b, &f)?;
                Ok(Loaded::Bicategory { bicat: Arc::new(b), families })
            }
            "category" => Ok(Loaded::Category(Arc::new(category_from_file(&serde_json::from_value(v)?)?))),
            "psf" => Ok(Loaded::Psf(self.psf_from_file(&serde_json::from_value(v)?, rel)?)),
            "catvalued" => Ok(Loaded::Catvalued(self.catvalued_from_file(&serde_json::from_value(v)?, rel)?)),
            other => Err(Error::Structural(format!("unknown format tag {other:?}"))),
        }
    }

    pub fn bicategory_ref(&self, r: &BicategoryRef, rel: Option<&Path>) -> Result<Arc<FinBicategory>> {
        match r {
            BicategoryRef::Inline(f) => Ok(Arc::new(bicategory_from_file(f)?)),
            BicategoryRef::Path(p) => {
                let path = self.resolve(p, rel)?;
                let f: BicategoryFile = serde_json::from_slice(&std::fs::read(path)?)?;
                Ok(Arc::new(bicategory_from_file(&f)?))
            }
        }
    }

    pub fn psf_from_file(&self, f: &PsfFile, rel: Option<&Path>) -> Result<PseudoFunctor> {
        let dom = self.bicategory_ref(&f.dom, rel)?;
        let cod = self.bicategory_ref(&f.cod, rel)?;
        let (d, c) = (&*dom, &*cod);
        let get = |m: &BTreeMap<String, String>, k: &str, what: &str| {
            m.get(k).cloned().ok_or_else(|| Error::Structural(format!("{what} {k} is not mapped")))
        };
        let obj = d
            .objects()
            .map(|a| {
                let t = get(&f.obj, d.obj_name(a), "object")?;
                c.find_obj(&t).ok_or_else(|| unknown("object", &t))
            })
            .collect::<Result<Vec<_>>>()?;
        let c1 = d
            .cells1()
            .map(|u| {
                let t = get(&f.cells1, d.cell1_name(u), "1-cell")?;
                c.find_cell1(&t).ok_or_else(|| unknown("1-cell", &t))
            })
            .collect::<Result<Vec<_>>>()?;
        let c2 = d
            .cells2()
            .map(|a| {
                let t = get(&f.cells2, d.cell2_name(a), "2-cell")?;
                c.find_cell2(&t).ok_or_else(|| unknown("2-cell", &t))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut f2 = HashMap::new();
        for [u, v, x] in &f.f2 {
            let u = d.find_cell1(u).ok_or_else(|| unknown("1-cell", u))?;
            let v = d.find_cell1(v).ok_or_else(|| unknown("1-cell", v))?;
            f2.insert((u, v), c.find_cell2(x).ok_or_else(|| unknown("2-cell", x))?);
        }
        for (&(u, v), _) in d.hcomp1.iter() {
            if let std::collections::hash_map::Entry::Vacant(e) = f2.entry((u, v)) {
                let fu_fv = c
                    .try_hcomp1(c1[u.idx()], c1[v.idx()])
                    .ok_or_else(|| Error::Structural("composite of images is undefined".into()))?;
                e.insert(c.id2(fu_fv));
            }
        }
        let f0 = d
            .objects()
            .map(|a| match f.f0.get(d.obj_name(a)) {
                Some(x) => c.find_cell2(x).ok_or_else(|| unknown("2-cell", x)),
                None => Ok(c.id2(c.id1(obj[a.idx()]))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PseudoFunctor { dom, cod, obj, c1, c2, f2, f0 })
    }

    pub fn catvalued_from_file(&self, f: &CatValuedFile, rel: Option<&Path>) -> Result<CatValuedPSF> {
        let base = self.bicategory_ref(&f.base, rel)?;
        let b = &*base;
        let fibers = b
            .objects()
            .map(|a| {
                let cf = f
                    .fibers
                    .get(b.obj_name(a))
                    .ok_or_else(|| Error::Structural(format!("no fiber over {}", b.obj_name(a))))?;
                Ok(Arc::new(category_from_file(cf)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let on1 = b
            .cells1()
            .map(|u| {
                let (s, t) = (fibers[b.src1(u).idx()].clone(), fibers[b.tgt1(u).idx()].clone());
                match f.functors.get(b.cell1_name(u)) {
                    Some(ff) => functor_from_file(ff, s, t),
                    None if b.id1(b.src1(u)) == u => Ok(FinFunctor::identity(s)),
                    None => Err(Error::Structural(format!("no functor for {}", b.cell1_name(u)))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        // defaults: identity arrows at the source image
        let comps = |m: Option<&BTreeMap<String, String>>, s: &FinCategory, t: &FinCategory, dflt: &dyn Fn(Obj) -> Obj| {
            s.objects()
                .map(|x| match m.and_then(|m| m.get(s.obj_name(x))) {
                    Some(n) => t.find_arr(n).ok_or_else(|| unknown("arrow", n)),
                    None => Ok(t.id(dflt(x))),
                })
                .collect::<Result<Vec<Arr>>>()
        };
        let on2 = b
            .cells2()
            .map(|a| {
                let u = b.src2(a);
                let (s, t) = (&fibers[b.src1(u).idx()], &fibers[b.tgt1(u).idx()]);
                comps(f.cells2.get(b.cell2_name(a)), s, t, &|x| on1[u.idx()].map_obj(x))
            })
            .collect::<Result<Vec<_>>>()?;
        let rows: HashMap<(&str, &str), &F2Row> = f.f2.iter().map(|r| ((r.u.as_str(), r.v.as_str()), r)).collect();
        let mut f2 = HashMap::new();
        for (&(u, v), _) in b.hcomp1.iter() {
            let (s, t) = (&fibers[b.src1(v).idx()], &fibers[b.tgt1(u).idx()]);
            let m = rows.get(&(b.cell1_name(u), b.cell1_name(v))).map(|r| &r.components);
            let c = comps(m, s, t, &|x| on1[u.idx()].map_obj(on1[v.idx()].map_obj(x)))?;
            f2.insert((u, v), c);
        }
        let f0 = b
            .objects()
            .map(|a| {
                let s = &fibers[a.idx()];
                comps(f.f0.get(b.obj_name(a)), s, s, &|x| x)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CatValuedPSF { base, fibers, on1, on2, f2, f0 })
    }
}

fn functor_from_file(f: &FunctorFile, s: Arc<FinCategory>, t: Arc<FinCategory>) -> Result<FinFunctor> {
    let obj = s
        .objects()
        .map(|x| {
            let n = f.obj.get(s.obj_name(x)).ok_or_else(|| Error::Structural(format!("object {} is not mapped", s.obj_name(x))))?;
            t.find_obj(n).ok_or_else(|| unknown("object", n))
        })
        .collect::<Result<Vec<_>>>()?;
    let arr = s
        .arrows()
        .map(|a| {
            let n = f.arr.get(s.arr_name(a)).ok_or_else(|| Error::Structural(format!("arrow {} is not mapped", s.arr_name(a))))?;
            t.find_arr(n).ok_or_else(|| unknown("arrow", n))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FinFunctor { src: s, tgt: t, obj, arr })
}

/// Pretty JSON with a trailing newline; arrays of scalars stay on one line.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let v = serde_json::to_value(v).expect("serializable");
    let mut s = String::new();
    write_value(&v, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).unwrap());
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.values().all(|x| !x.is_array() && !x.is_object()) && m.len() <= 4 => {
            out.push_str(&serde_json::to_string(v).unwrap());
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).unwrap()),
    }
}

// ---- reports ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// The result of one CLI command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<Verdict>,
    /// Witness tables and produced data, keyed by name.
    pub witnesses: BTreeMap<String, serde_json::Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { format: "report".into(), command: command.into(), inputs: Vec::new(), verdicts: Vec::new(), witnesses: BTreeMap::new() }
    }
    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
    pub fn verdict(&mut self, name: impl Into<String>, pass: bool) -> &mut Verdict {
        self.verdicts.push(Verdict { name: name.into(), pass, counterexample: None, notes: Vec::new() });
        self.verdicts.last_mut().unwrap()
    }
    pub fn witness(&mut self, key: impl Into<String>, v: impl Serialize) {
        self.witnesses.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }
    pub fn add_axioms(&mut self, prefix: &str, r: &crate::axioms::AxiomReport) {
        for v in &r.verdicts {
            let name = format!("{prefix}{}", v.axiom);
            let x = self.verdict(name.clone(), v.pass);
            x.counterexample = v.counterexample.clone();
            x.notes = v.notes.clone();
            if !v.witnesses.is_empty() {
                self.witness(name, &v.witnesses);
            }
        }
    }
    /// Plain-text rendering.
    pub fn render(&self) -> String {
        let mut s = format!("{}\n", self.command);
        for i in &self.inputs {
            s += &format!("  input {} sha256:{}\n", i.path, &i.sha256[..16]);
        }
        for v in &self.verdicts {
            s += &format!("  [{}] {}", if v.pass { "pass" } else { "FAIL" }, v.name);
            if let Some(c) = &v.counterexample {
                s += &format!("  at ({})", c.join(", "));
            }
            s.push('\n');
            for n in &v.notes {
                s += &format!("      {n}\n");
            }
        }
        for (k, v) in &self.witnesses {
            let line = serde_json::to_string(v).unwrap();
            let line = if line.chars().count() > 100 { format!("{}...", line.chars().take(97).collect::<String>()) } else { line };
            s += &format!("  {k}: {line}\n");
        }
        s
    }
}
