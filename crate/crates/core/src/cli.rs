//! Command-line front end. `run` never prints; the binary does.

use crate::axioms::{build_pseudococone, check_bf, check_flt, check_frc, check_pflt, upgrade_to_invertible};
use crate::bicat::FinBicategory;
use crate::category::FinCategory;
use crate::colimit::{colimit_direct, colimit_via_localization, crosscheck_iso_with, IsoWitness};
use crate::error::{Error, Result};
use crate::family::{ArrFamily, ArrowFamily};
use crate::fibrations::is_cofibration;
use crate::functors::{CatValuedPSF, FinFunctor, PseudoFunctor};
use crate::grothendieck::elements;
use crate::homfractions::{check_gamma_independence, crosscheck_homcat_with, homcat_pronk, homcat_via_colimit};
use crate::io::{
    bicategory_to_file, category_to_file, resolve_family, to_json, InputDigest, Loaded, Loader, Report,
};
use crate::localization::{check_l, check_r, induced_w0, localize_left, localize_right, LocalizedCategory};
use crate::random;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::sync::Arc;

/// Name accepted in place of an input file: a generated input from `--seed`.
pub const RANDOM_INPUT: &str = "@random";

#[derive(Parser, Debug)]
#[command(name = "bifrac", about = "Checks and constructions on finite bicategories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for generated inputs (`@random`).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the produced structure to this path.
    #[arg(long, global = true)]
    pub emit: Option<PathBuf>,
    /// Print a plain-text rendering instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxiomSet {
    Flt,
    Pflt,
    Frc,
    Bf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColimitMethod {
    Direct,
    Localization,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HomcatMethod {
    Pronk,
    Colimit,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coherence check of any input file.
    Validate { file: String },
    /// Filteredness or fractions axioms with witness tables.
    Axioms {
        file: String,
        #[arg(long, value_enum)]
        set: AxiomSet,
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Category of elements of a Cat-valued diagram.
    Groth { file: String },
    /// Connected components of hom-categories; with `--family`, also the
    /// localization conditions on the induced class.
    Pi0 {
        file: String,
        #[arg(long)]
        family: Option<String>,
    },
    /// Localization of a finite category (or of `π₀` of a bicategory).
    Localize {
        file: String,
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Pseudo-colimit of a Cat-valued diagram.
    Colimit {
        file: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: ColimitMethod,
    },
    /// A hom-category of the bicategory of fractions.
    Homcat {
        file: String,
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "pronk")]
        method: HomcatMethod,
    },
    /// Pseudo-cocone on a diagram into a filtered bicategory.
    Cocone { file: String },
    /// Hom-categories into a biterminal object stay contractible.
    Exactness {
        file: String,
        #[arg(long, default_value = "all")]
        family: String,
    },
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                0
            } else {
                2
            };
            return Outcome { code, stdout: if code == 0 { e.to_string() } else { String::new() }, stderr: if code == 0 { String::new() } else { e.to_string() }, report: None };
        }
    };
    let command_line: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut ctx = Ctx { loader: Loader::new(), seed: cli.seed, report: Report::new(&command_line.join(" ")), emit: None };
    match dispatch(&cli.command, &mut ctx) {
        Ok(()) => {
            if let (Some(path), Some(text)) = (&cli.emit, &ctx.emit) {
                if let Err(e) = std::fs::write(path, text) {
                    return Outcome { code: 2, stderr: format!("cannot write {}: {e}\n", path.display()), ..Default::default() };
                }
                if let Some(side) = ctx.sidecar(path) {
                    if let Err(e) = std::fs::write(&side.0, side.1) {
                        return Outcome { code: 2, stderr: format!("cannot write {}: {e}\n", side.0.display()), ..Default::default() };
                    }
                }
            }
            let report = ctx.report;
            let code = if report.passes() { 0 } else { 1 };
            let stdout = if cli.human { report.render() } else { to_json(&report) };
            Outcome { code, stdout, stderr: String::new(), report: Some(report) }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n"), report: None },
    }
}

struct Ctx {
    loader: Loader,
    seed: u64,
    report: Report,
    emit: Option<String>,
}

impl Ctx {
    /// `groth` also writes the co-Cartesian families next to the total bicategory.
    fn sidecar(&self, path: &std::path::Path) -> Option<(PathBuf, String)> {
        let fams = self.report.witnesses.get("families")?;
        let mut p = path.as_os_str().to_owned();
        p.push(".families.json");
        Some((PathBuf::from(p), to_json(&json!({"format": "families", "families": fams}))))
    }

    fn input(&mut self, path: &str) -> Result<Loaded> {
        if path == RANDOM_INPUT {
            return Err(Error::Structural("@random is not available for this command".into()));
        }
        let (l, d) = self.loader.load(path)?;
        self.report.inputs.push(d);
        Ok(l)
    }

    fn generated(&mut self, text: &str) {
        self.report.inputs.push(InputDigest {
            path: format!("{RANDOM_INPUT}:{}", self.seed),
            sha256: hex::encode(Sha256::digest(text.as_bytes())),
        });
    }

    fn bicategory(&mut self, path: &str) -> Result<(Arc<FinBicategory>, Vec<ArrowFamily>)> {
        if path == RANDOM_INPUT {
            let (rb, w) = random::random_pair(self.seed);
            let w = ArrowFamily::new(&rb.bicat, "seeded", w.members().iter().copied());
            self.generated(&to_json(&bicategory_to_file(&rb.bicat, std::slice::from_ref(&w))));
            return Ok((rb.bicat, vec![w]));
        }
        match self.input(path)? {
            Loaded::Bicategory { bicat, families } => Ok((bicat, families)),
            other => Err(Error::Structural(format!("{path} is a {} file, expected a bicategory", other.kind()))),
        }
    }

    fn catvalued(&mut self, path: &str) -> Result<CatValuedPSF> {
        if path == RANDOM_INPUT {
            let d = random::random_diagram(self.seed, false);
            self.generated(&to_json(&crate::io::catvalued_to_file(&d.diagram, None)));
            return Ok(d.diagram);
        }
        match self.input(path)? {
            Loaded::Catvalued(f) => Ok(f),
            other => Err(Error::Structural(format!("{path} is a {} file, expected a catvalued file", other.kind()))),
        }
    }

    fn psf(&mut self, path: &str) -> Result<PseudoFunctor> {
        match self.input(path)? {
            Loaded::Psf(f) => Ok(f),
            other => Err(Error::Structural(format!("{path} is a {} file, expected a psf file", other.kind()))),
        }
    }
}

/// Structural problems block every other command.
fn require_valid(what: &str, v: crate::report::ValidationReport) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Structural(format!("{what} fails validation:\n{v}")))
    }
}

fn obj_by_name(b: &FinBicategory, n: &str) -> Result<crate::ids::Obj> {
    b.find_obj(n).ok_or_else(|| Error::Structural(format!("unknown object {n}")))
}

fn category_summary(c: &FinCategory) -> serde_json::Value {
    json!({
        "objects": c.objects().map(|o| c.obj_name(o)).collect::<Vec<_>>(),
        "arrows": c.arrows().map(|a| json!([c.arr_name(a), c.obj_name(c.src(a)), c.obj_name(c.tgt(a))])).collect::<Vec<_>>(),
    })
}

fn functor_table(f: &FinFunctor) -> serde_json::Value {
    let (s, t) = (&f.src, &f.tgt);
    json!({
        "obj": s.objects().map(|x| json!([s.obj_name(x), t.obj_name(f.map_obj(x))])).collect::<Vec<_>>(),
        "arr": s.arrows().map(|a| json!([s.arr_name(a), t.arr_name(f.map_arr(a))])).collect::<Vec<_>>(),
    })
}

fn iso_verdicts(r: &mut Report, prefix: &str, w: &IsoWitness) {
    for (name, ok) in [
        ("h-well-defined", w.h_well_defined),
        ("k-well-defined", w.k_well_defined),
        ("h-functor", w.h_functor),
        ("k-functor", w.k_functor),
        ("h-iso", w.h_iso),
        ("k-iso", w.k_iso),
        ("strict-inverse", w.strict_inverse),
    ] {
        r.verdict(format!("{prefix}{name}"), ok);
    }
    r.witness(format!("{prefix}H"), functor_table(&w.h));
    r.witness(format!("{prefix}K"), functor_table(&w.k));
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<()> {
    match cmd {
        Command::Validate { file } => {
            let v = match ctx.input(file)? {
                Loaded::Bicategory { bicat, .. } => bicat.validate(),
                Loaded::Category(c) => c.validate(),
                Loaded::Psf(p) => p.validate(),
                Loaded::Catvalued(c) => c.validate(),
            };
            let ok = v.is_empty();
            let laws = v.laws();
            let x = ctx.report.verdict("coherence", ok);
            x.notes = laws.iter().map(|l| l.to_string()).collect();
            if !ok {
                ctx.report.witness("violations", &v.violations);
            }
        }
        Command::Axioms { file, set, family } => {
            let (b, fams) = ctx.bicategory(file)?;
            require_valid(file, b.validate())?;
            let rep = match set {
                AxiomSet::Flt => check_flt(&b),
                AxiomSet::Pflt => check_pflt(&b),
                AxiomSet::Frc | AxiomSet::Bf => {
                    let w = resolve_family(&b, &fams, family)?;
                    ctx.report.witness("family", w.names(&b));
                    if *set == AxiomSet::Frc {
                        check_frc(&b, &w)
                    } else {
                        check_bf(&b, &w)
                    }
                }
            };
            ctx.report.add_axioms("", &rep);
        }
        Command::Groth { file } => {
            let f = ctx.catvalued(file)?;
            require_valid(file, f.validate())?;
            let el = elements(&f)?;
            let t = &el.total;
            ctx.report.verdict("total-coherence", t.validate().is_empty());
            ctx.report.verdict("projection-coherence", el.proj.validate().is_empty());
            ctx.report.verdict("projection-cofibration", is_cofibration(&el.proj));
            let cocart2: Vec<&str> = el.cocart2.iter().map(|&a| t.cell2_name(a)).collect();
            ctx.report.witness(
                "counts",
                json!({"objects": t.num_objects(), "cells1": t.num_cells1(), "cells2": t.num_cells2(), "cocartesian1": el.cocart1.len()}),
            );
            ctx.report.witness("families", json!({"cocartesian1": el.cocart1.names(t), "cocartesian2": cocart2}));
            ctx.emit = Some(to_json(&bicategory_to_file(t, std::slice::from_ref(&el.cocart1))));
        }
        Command::Pi0 { file, family } => {
            let (b, fams) = ctx.bicategory(file)?;
            require_valid(file, b.validate())?;
            let pi = b.pi0()?;
            let c = &pi.category;
            ctx.report.verdict("pi0-category", c.validate().is_empty());
            let classes: Vec<serde_json::Value> = c
                .arrows()
                .map(|a| json!([c.arr_name(a), b.names1(&pi.members[a.idx()])]))
                .collect();
            ctx.report.witness("classes", classes);
            if let Some(fam) = family {
                let w = resolve_family(&b, &fams, fam)?;
                let frc = check_frc(&b, &w);
                let w0 = induced_w0(&pi, &w);
                let r = check_r(c, &w0);
                ctx.report.witness("frc", frc.passes());
                ctx.report.witness("induced_w0", w0.members().iter().map(|&a| c.arr_name(a)).collect::<Vec<_>>());
                ctx.report.add_axioms("pi0-", &r);
                ctx.report.verdict("frc-implies-R", !frc.passes() || r.passes());
            }
            ctx.emit = Some(to_json(&category_to_file(c)));
        }
        Command::Localize { file, family, side } => {
            let (c, w) = match ctx.input(file)? {
                Loaded::Category(c) => {
                    let w = match family.as_str() {
                        "all" => ArrFamily::all(&c),
                        "identities" => ArrFamily::identities(&c),
                        list => {
                            let ms = list
                                .split(',')
                                .map(|n| c.find_arr(n.trim()).ok_or_else(|| Error::Structural(format!("unknown arrow {n}"))))
                                .collect::<Result<Vec<_>>>()?;
                            ArrFamily::new(&c, ms)
                        }
                    };
                    require_valid(file, c.validate())?;
                    (c, w)
                }
                Loaded::Bicategory { bicat, families } => {
                    require_valid(file, bicat.validate())?;
                    let pi = bicat.pi0()?;
                    let w = resolve_family(&bicat, &families, family)?;
                    let w0 = induced_w0(&pi, &w);
                    (Arc::new(pi.category), w0)
                }
                other => return Err(Error::Structural(format!("{file} is a {} file", other.kind()))),
            };
            let conditions = if *side == SideArg::Right { check_r(&c, &w) } else { check_l(&c, &w) };
            ctx.report.add_axioms("", &conditions);
            if conditions.passes() {
                let l: LocalizedCategory = if *side == SideArg::Right { localize_right(&c, &w)? } else { localize_left(&c, &w)? };
                ctx.report.verdict("localized-category", l.category.validate().is_empty());
                ctx.report.verdict("localization-functor", l.loc.validate().is_empty());
                if l.closure_added {
                    ctx.report.witness("closure_added", true);
                }
                ctx.report.witness("localized", category_summary(&l.category));
                ctx.emit = Some(to_json(&category_to_file(&l.category)));
            }
        }
        Command::Colimit { file, method } => {
            let f = ctx.catvalued(file)?;
            require_valid(file, f.validate())?;
            let direct = if *method != ColimitMethod::Localization { Some(colimit_direct(&f)?) } else { None };
            let via = if *method != ColimitMethod::Direct { Some(colimit_via_localization(&f)?) } else { None };
            if let Some(d) = &direct {
                ctx.report.verdict("direct-category", d.cat.validate().is_empty());
                ctx.report.witness("direct", category_summary(&d.cat));
                ctx.emit = Some(to_json(&category_to_file(&d.cat)));
            }
            if let Some(v) = &via {
                ctx.report.verdict("localization-category", v.localized.category.validate().is_empty());
                ctx.report.witness("localization", category_summary(&v.localized.category));
                if direct.is_none() {
                    ctx.emit = Some(to_json(&category_to_file(&v.localized.category)));
                }
            }
            if let (Some(d), Some(v)) = (&direct, &via) {
                let w = crosscheck_iso_with(&f, d, v)?;
                iso_verdicts(&mut ctx.report, "iso-", &w);
            }
        }
        Command::Homcat { file, family, source, target, method } => {
            let (b, fams) = ctx.bicategory(file)?;
            require_valid(file, b.validate())?;
            let w = resolve_family(&b, &fams, family)?;
            let (a, t) = (obj_by_name(&b, source)?, obj_by_name(&b, target)?);
            ctx.report.witness("family", w.names(&b));
            let pronk = if *method != HomcatMethod::Colimit { Some(homcat_pronk(&b, &w, a, t)?) } else { None };
            let via = if *method != HomcatMethod::Pronk { Some(homcat_via_colimit(b.clone(), &w, a, t)?) } else { None };
            if let Some(p) = &pronk {
                let x = ctx.report.verdict("pronk-category", p.cat.validate().is_empty());
                x.notes.push("vertical composites pasted with left-nested associators".into());
                ctx.report.verdict("side-condition-readings-agree", p.literal_agrees);
                let g = check_gamma_independence(&b, &w, p);
                ctx.report.add_axioms("", &crate::axioms::AxiomReport { verdicts: vec![g] });
                ctx.report.witness("pronk", category_summary(&p.cat));
                ctx.emit = Some(to_json(&category_to_file(&p.cat)));
            }
            if let Some(v) = &via {
                ctx.report.verdict("colimit-category", v.colimit.cat.validate().is_empty());
                ctx.report.witness("colimit", category_summary(&v.colimit.cat));
                if pronk.is_none() {
                    ctx.emit = Some(to_json(&category_to_file(&v.colimit.cat)));
                }
            }
            if let (Some(p), Some(v)) = (&pronk, &via) {
                let x = crosscheck_homcat_with(&w, p, v)?;
                iso_verdicts(&mut ctx.report, "iso-", &x);
            }
        }
        Command::Cocone { file } => {
            let d = ctx.psf(file)?;
            require_valid(file, d.validate())?;
            let flt = check_flt(&d.cod);
            ctx.report.add_axioms("codomain-", &flt.without_witnesses());
            let c = build_pseudococone(&d)?;
            let v = c.validate();
            let x = ctx.report.verdict("cocone", v.is_empty());
            x.notes = v.laws().iter().map(|l| l.to_string()).collect();
            let b = &*d.cod;
            ctx.report.witness("apex", b.obj_name(c.apex));
            ctx.report.witness("theta", b.names1(&c.theta));
            ctx.report.witness("theta_f", b.names2(&c.theta_f));
            let mut upgrades = true;
            for &(f, g) in &parallel_pairs(b) {
                if let Some((_, gamma, _)) = upgrade_to_invertible(b, f, g) {
                    upgrades &= b.is_invertible2(gamma).is_some();
                }
            }
            ctx.report.verdict("upgrade-invertible", upgrades);
        }
        Command::Exactness { file, family } => {
            let (b, fams) = ctx.bicategory(file)?;
            require_valid(file, b.validate())?;
            let w = resolve_family(&b, &fams, family)?;
            let v = crate::homfractions::check_biterminal_preserved(&b, &w)?;
            ctx.report.witness("biterminal", b.biterminal_objects().iter().map(|&o| b.obj_name(o)).collect::<Vec<_>>());
            ctx.report.add_axioms("", &crate::axioms::AxiomReport { verdicts: vec![v] });
        }
    }
    Ok(())
}

fn parallel_pairs(b: &FinBicategory) -> Vec<(crate::ids::Cell1, crate::ids::Cell1)> {
    let mut out = Vec::new();
    for a in b.objects() {
        for c in b.objects() {
            let h = b.hom(a, c);
            for &f in h {
                for &g in h {
                    out.push((f, g));
                }
            }
        }
    }
    out
}
