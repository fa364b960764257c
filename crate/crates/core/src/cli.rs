//! Command-line front end: argument parsing, dispatch and report emission.
//! Exit codes: 0 every outcome a conclusive pass, 1 a conclusive failure,
//! 2 inconclusive (necessary-only pass or exhausted budget), 3 input error.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adjunctions::{
    c_functor, r_functor, t_functor, verify_adjunction, verify_fn_instance, AdjunctionCertificate, ConstantRow0,
    IdentityPair, InclusionR, InvertRestrict, PairLabel, Pregroupoid, SegalPregroupoid, SymObject,
};
use crate::bisimp::{cosk0_space, nerve_sgpd, outer_discrete, BiView, BousfieldIndex, Space, SymmetricSimplicialSpace};
use crate::corpus::random_functors;
use crate::error::{Error, Result};
use crate::format::{parse, print, Carrier, Document, MapValue};
use crate::homology::homology;
use crate::kan::{kan_check, kan_fibration_check};
use crate::kan_ext::invert;
use crate::lifting::{
    bounded_localize, build_ic, build_if, crosscheck_props, localization_set, rlp_check, sgpd_set, Arrow, GeneratingSet,
    LocBounds, LocFlavor, LocRange, RepFlavor, Target,
};
use crate::oracle::EquivalenceVerdict;
use crate::presheaf::{Budget, ShapeKind};
use crate::report::{CheckReport, Outcome};
use crate::segal::{
    completeness_check, dk_equiv_segal, psi_locality_check, reduce, segal_condition_report, Flavor,
};
use crate::sgpd::{
    dk_equivalence_check, fibration_check, pi0_category, ug, DkReport, GeneratorKind, SimplicialFunctor,
    SimplicialGroupoid,
};
use crate::sset::{nerve_category, pi0, TruncatedSimplicialSet};

#[derive(Parser, Debug)]
#[command(name = "invsegal", version, about = "Checks and constructions for invertible Segal spaces and simplicial groupoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Truncation of constructed objects (outer direction for spaces).
    #[arg(long, global = true, default_value_t = 3)]
    pub trunc: usize,
    /// Inner truncation of constructed spaces.
    #[arg(long, global = true, default_value_t = 1)]
    pub inner: usize,
    /// Candidate assignments a search may try before giving up.
    #[arg(long, global = true, default_value = "1e6", value_parser = parse_budget)]
    pub budget: u64,
    /// Localization rounds.
    #[arg(long, global = true, default_value_t = 2)]
    pub steps: usize,
    #[arg(long, global = true, value_enum)]
    pub flavor: Option<FlavorArg>,
    #[arg(long = "bousfield-index", global = true, value_enum, default_value_t = IndexArg::Corrected)]
    pub bousfield_index: IndexArg,
    #[arg(long = "loc-range", global = true, value_enum, default_value_t = RangeArg::Paper)]
    pub loc_range: RangeArg,
    /// Machine-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Object to act on when the document holds several.
    #[arg(long, global = true)]
    pub object: Option<String>,
    /// Map to act on when the document holds several.
    #[arg(long, global = true)]
    pub map: Option<String>,
    /// Write a produced document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Invertible,
    Plain,
    Bousfield,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IndexArg {
    Paper,
    Corrected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RangeArg {
    Paper,
    Boundary,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Segal maps of a space (`ξ_k` for symmetric input, `φ_k` otherwise).
    CheckSegal {
        input: PathBuf,
        /// Largest k checked (default: the outer truncation).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Bousfield-Segal maps `χ_k`.
    CheckBousfield {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Completeness: `s₀` on rows 0 to 1 is a weak equivalence.
    CheckComplete { input: PathBuf },
    /// Locality against `ψ: Δ[0]^t -> E^t`.
    CheckPsiLocal { input: PathBuf },
    /// Row 0 is constant in the inner direction.
    CheckDiscrete { input: PathBuf },
    /// Dwyer-Kan equivalence of a simplicial functor or of a map of spaces.
    CheckDk { input: PathBuf },
    /// Fibration conditions on a simplicial functor.
    CheckFibration { input: PathBuf },
    /// Right lifting property of a map against generating sets.
    CheckRlp {
        input: PathBuf,
        /// Comma-separated: C1, C2, A1, A2 for functors; Ic, If, V, B for spaces.
        #[arg(long)]
        set: String,
        /// Include `C1(n=0)` with C1.
        #[arg(long)]
        with_c1_zero: bool,
        #[arg(long, default_value_t = 1)]
        mmax: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// Nerve: of a category (a discrete space), of a groupoid or simplicial groupoid (symmetric).
    Nerve { input: PathBuf },
    /// Collapse row 0 to its components.
    Reduce { input: PathBuf },
    /// `cosk₀` of a simplicial set, as a symmetric space.
    Cosk0 { input: PathBuf },
    /// Left Kan extension along `Δ -> IΔ`.
    Invert { input: PathBuf },
    /// Forget the symmetric structure.
    Restrict { input: PathBuf },
    /// Right adjoint to the inclusion of Segal pregroupoids.
    #[command(name = "R")]
    R { input: PathBuf },
    /// Row 0.
    #[command(name = "T")]
    T { input: PathBuf },
    /// Constant symmetric space.
    #[command(name = "C")]
    C { input: PathBuf },
    /// `U_G` of `∅` or `Δ[0]`.
    Ug { input: PathBuf },
    /// Components of a simplicial set, of the rows of a space, or the
    /// category of components of a simplicial groupoid.
    Pi0 { input: PathBuf },
    /// Integral homology of a simplicial set.
    Homology {
        input: PathBuf,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Horn filling for a simplicial set or map, up to a level.
    Kan {
        input: PathBuf,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Bounded localization by repeated attachment along unliftable squares.
    Localize {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        mmax: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// Verify an adjunction on consecutive pairs of objects of a document.
    VerifyAdjunction {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        instances: PathBuf,
    },
    /// Lifting characterizations against the direct fibration and
    /// equivalence checks, on a document's functors or the random corpus.
    Crosscheck {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
}

fn parse_budget(s: &str) -> std::result::Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("not a non-negative integer: {s}")),
    }
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Output { stdout: String::new(), stderr: text, code: 3 },
            }
        }
    }
}

enum Produced {
    Report(CheckReport),
    Doc(Document),
}

pub fn run(cli: &Cli) -> Output {
    let mut budget = Budget::new(cli.opts.budget);
    match dispatch(&cli.command, &cli.opts, &mut budget) {
        Ok(Produced::Report(r)) => {
            let stdout = if cli.opts.json { r.to_json() } else { r.to_text() };
            Output { stdout, stderr: String::new(), code: r.exit_code() }
        }
        Ok(Produced::Doc(d)) => {
            let text = print(&d);
            match &cli.opts.output {
                Some(p) => match std::fs::write(p, text) {
                    Ok(()) => Output { stdout: String::new(), stderr: String::new(), code: 0 },
                    Err(e) => input_error(&format!("cannot write {}: {e}", p.display())),
                },
                None => Output { stdout: text, stderr: String::new(), code: 0 },
            }
        }
        Err(Error::BudgetExhausted(n)) => {
            let mut r = CheckReport::new(command_name(&cli.command));
            r.push(Outcome::inconclusive("budget", format!("search budget of {n} candidate assignments exhausted")));
            let stdout = if cli.opts.json { r.to_json() } else { r.to_text() };
            Output { stdout, stderr: String::new(), code: 2 }
        }
        Err(e) => input_error(&e.to_string()),
    }
}

fn input_error(msg: &str) -> Output {
    Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 3 }
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckSegal { .. } => "check-segal",
        Command::CheckBousfield { .. } => "check-bousfield",
        Command::CheckComplete { .. } => "check-complete",
        Command::CheckPsiLocal { .. } => "check-psi-local",
        Command::CheckDiscrete { .. } => "check-discrete",
        Command::CheckDk { .. } => "check-dk",
        Command::CheckFibration { .. } => "check-fibration",
        Command::CheckRlp { .. } => "check-rlp",
        Command::Nerve { .. } => "nerve",
        Command::Reduce { .. } => "reduce",
        Command::Cosk0 { .. } => "cosk0",
        Command::Invert { .. } => "invert",
        Command::Restrict { .. } => "restrict",
        Command::R { .. } => "R",
        Command::T { .. } => "T",
        Command::C { .. } => "C",
        Command::Ug { .. } => "ug",
        Command::Pi0 { .. } => "pi0",
        Command::Homology { .. } => "homology",
        Command::Kan { .. } => "kan",
        Command::Localize { .. } => "localize",
        Command::VerifyAdjunction { .. } => "verify-adjunction",
        Command::Crosscheck { .. } => "crosscheck",
    }
}

pub fn load(path: &Path) -> Result<Document> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Invalid(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?
    };
    parse(&text)
}

fn space_diagram(c: &Carrier) -> Result<&crate::presheaf::Diagram> {
    match c {
        Carrier::Bisset(x) => Ok(x.diagram()),
        Carrier::Symsset(x) => Ok(x.diagram()),
        other => Err(Error::ShapeMismatch(format!("expected a bisset or symsset, got {}", other.kind()))),
    }
}

fn expect_sset(c: &Carrier) -> Result<&TruncatedSimplicialSet> {
    match c {
        Carrier::Sset(x) => Ok(x),
        other => Err(Error::ShapeMismatch(format!("expected an sset, got {}", other.kind()))),
    }
}

fn expect_symsset(c: &Carrier) -> Result<&SymmetricSimplicialSpace> {
    match c {
        Carrier::Symsset(x) => Ok(x),
        other => Err(Error::ShapeMismatch(format!("expected a symsset, got {}", other.kind()))),
    }
}

fn index_of(a: IndexArg) -> BousfieldIndex {
    match a {
        IndexArg::Paper => BousfieldIndex::Paper,
        IndexArg::Corrected => BousfieldIndex::Corrected,
    }
}

fn range_of(a: RangeArg) -> LocRange {
    match a {
        RangeArg::Paper => LocRange::Paper,
        RangeArg::Boundary => LocRange::Boundary,
    }
}

fn result_doc(name: &str, command: &str, c: Carrier) -> Document {
    Document::single(&format!("{command}({name})"), c)
}

fn dispatch(cmd: &Command, o: &Options, budget: &mut Budget) -> Result<Produced> {
    let index = index_of(o.bousfield_index);
    let obj = o.object.as_deref();
    Ok(match cmd {
        Command::CheckSegal { input, k } => {
            let doc = load(input)?;
            let d = space_diagram(doc.pick(obj)?.1)?;
            let v = BiView(d);
            let flavor = match (o.flavor, d.kind()) {
                (Some(FlavorArg::Invertible), _) => Flavor::Invertible,
                (Some(FlavorArg::Plain), _) => Flavor::Plain,
                (Some(FlavorArg::Bousfield), _) => Flavor::Bousfield,
                (None, ShapeKind::Symmetric { .. }) => Flavor::Invertible,
                (None, _) => Flavor::Plain,
            };
            Produced::Report(segal_condition_report(&v, k.unwrap_or(v.outer()), flavor, index)?)
        }
        Command::CheckBousfield { input, k } => {
            let doc = load(input)?;
            let v = BiView(space_diagram(doc.pick(obj)?.1)?);
            Produced::Report(segal_condition_report(&v, k.unwrap_or(v.outer()), Flavor::Bousfield, index)?)
        }
        Command::CheckComplete { input } => {
            let doc = load(input)?;
            let v = BiView(space_diagram(doc.pick(obj)?.1)?);
            let mut r = CheckReport::new("check-complete");
            r.push(Outcome::from_verdict("completeness", &completeness_check(&v, v.inner())?));
            Produced::Report(r)
        }
        Command::CheckPsiLocal { input } => {
            let doc = load(input)?;
            let d = space_diagram(doc.pick(obj)?.1)?;
            let mut r = CheckReport::new("check-psi-local");
            let inner = BiView(d).inner();
            r.push(Outcome::from_verdict("psi_local", &psi_locality_check(d, inner, budget)?));
            Produced::Report(r)
        }
        Command::CheckDiscrete { input } => {
            let doc = load(input)?;
            let v = BiView(space_diagram(doc.pick(obj)?.1)?);
            let mut r = CheckReport::new("check-discrete");
            r.push(Outcome::decided("row_0_discrete", v.is_discrete_row0(), None));
            Produced::Report(r)
        }
        Command::CheckDk { input } => {
            let doc = load(input)?;
            let m = doc.pick_map(o.map.as_deref())?;
            let dk = match &m.value {
                MapValue::Sfunctor(f) => dk_equivalence_check(f, f.source.trunc())?,
                _ => {
                    let f = doc.space_map(m)?;
                    let inner = BiView(&f.source).inner();
                    dk_equiv_segal(&f, inner)?
                }
            };
            Produced::Report(dk_report(&dk))
        }
        Command::CheckFibration { input } => {
            let doc = load(input)?;
            let f = doc.simplicial_functor(doc.pick_map(o.map.as_deref())?)?;
            let fib = fibration_check(&f, f.source.trunc())?;
            let mut r = CheckReport::new("check-fibration");
            let w1 = fib.f1_failure.map(|(x, y, w)| format!("Map({x}, {y}): {w}"));
            r.push(Outcome::decided("F1", w1.is_none(), w1).with_level(fib.level).partial());
            let w2 = fib.f2_failure.map(|w| format!("{} out of the image of {}", w.g, w.x));
            r.push(Outcome::decided("F2", w2.is_none(), w2));
            r.note("F1 is checked on horns up to the stated level only");
            Produced::Report(r)
        }
        Command::CheckRlp { input, set, with_c1_zero, mmax, nmax } => {
            let doc = load(input)?;
            let m = doc.pick_map(o.map.as_deref())?;
            let tokens: Vec<&str> = set.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
            let mut r = CheckReport::new("check-rlp");
            let outcome = match &m.value {
                MapValue::Sfunctor(f) => {
                    let kinds = tokens
                        .iter()
                        .map(|t| match *t {
                            "C1" => Ok(GeneratorKind::C1),
                            "C2" => Ok(GeneratorKind::C2),
                            "A1" => Ok(GeneratorKind::A1),
                            "A2" => Ok(GeneratorKind::A2),
                            other => Err(Error::Invalid(format!("unknown generating set {other} for a simplicial functor"))),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let trunc = f.source.trunc();
                    let gs = sgpd_set(&kinds, (*nmax).min(trunc), trunc, *with_c1_zero);
                    r.data("generators", gs.len());
                    rlp_check(Target::Sgpd(f), &gs, budget)?
                }
                _ => {
                    let f = doc.space_map(m)?;
                    let arrow = Arrow::new(f.source.clone(), f.target.clone(), f.level.clone())?;
                    let (outer, inner) = crate::bisimp::truncs_of(&f.target);
                    let rep = match f.target.kind() {
                        ShapeKind::Symmetric { .. } => RepFlavor::Invertible,
                        _ => RepFlavor::Plain,
                    };
                    let bounds = LocBounds { mmax: *mmax, nmax: *nmax };
                    let mut gs: Option<GeneratingSet> = None;
                    for t in &tokens {
                        let part = match *t {
                            "Ic" => build_ic(rep, *mmax, *nmax, outer, inner)?,
                            "If" => build_if(rep, *mmax, *nmax, outer, inner)?,
                            "V" => localization_set(LocFlavor::Invertible, range_of(o.loc_range), bounds, outer, inner, index)?,
                            "B" => localization_set(LocFlavor::Bousfield, range_of(o.loc_range), bounds, outer, inner, index)?,
                            other => return Err(Error::Invalid(format!("unknown generating set {other} for a map of spaces"))),
                        };
                        gs = Some(match gs {
                            Some(g) => g.union(part),
                            None => part,
                        });
                    }
                    let gs = gs.ok_or_else(|| Error::Invalid("empty generating set".into()))?;
                    r.data("generators", gs.len());
                    rlp_check(Target::Arrow(&arrow), &gs, budget)?
                }
            };
            r.data("set", tokens.join(","));
            r.push(outcome.to_outcome("rlp"));
            Produced::Report(r)
        }
        Command::Nerve { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let out = match c {
                Carrier::Fincat(cat) => Carrier::Bisset(outer_discrete(&nerve_category(cat, o.trunc), o.inner)),
                Carrier::Fingpd(g) => Carrier::Symsset(nerve_sgpd(&SimplicialGroupoid::constant(g, o.inner), o.trunc)),
                Carrier::Sgpd(g) => Carrier::Symsset(nerve_sgpd(g, o.trunc)),
                other => return Err(Error::ShapeMismatch(format!("nerve needs a fincat, fingpd or sgpd, got {}", other.kind()))),
            };
            Produced::Doc(result_doc(name, "nerve", out))
        }
        Command::Reduce { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let d = reduce(space_diagram(c)?)?.diagram;
            let out = match c {
                Carrier::Symsset(_) => Carrier::Symsset(SymmetricSimplicialSpace::from_diagram(d)?),
                _ => Carrier::Bisset(crate::bisimp::BiSimplicialSet::from_diagram(d)?),
            };
            Produced::Doc(result_doc(name, "reduce", out))
        }
        Command::Cosk0 { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            Produced::Doc(result_doc(name, "cosk0", Carrier::Symsset(cosk0_space(expect_sset(c)?, o.trunc))))
        }
        Command::Invert { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let Carrier::Bisset(x) = c else {
                return Err(Error::ShapeMismatch(format!("invert needs a bisset, got {}", c.kind())));
            };
            Produced::Doc(result_doc(name, "invert", Carrier::Symsset(invert(x, budget)?.space)))
        }
        Command::Restrict { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            Produced::Doc(result_doc(name, "restrict", Carrier::Bisset(expect_symsset(c)?.restrict())))
        }
        Command::R { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let rw = r_functor(expect_symsset(c)?)?;
            Produced::Doc(result_doc(name, "R", Carrier::Symsset(rw.pregroupoid.space().clone())))
        }
        Command::T { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let row0 = match c {
                Carrier::Symsset(w) => t_functor(w),
                other => BiView(space_diagram(other)?).row(0),
            };
            Produced::Doc(result_doc(name, "T", Carrier::Sset(row0)))
        }
        Command::C { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            Produced::Doc(result_doc(name, "C", Carrier::Symsset(c_functor(expect_sset(c)?, o.trunc))))
        }
        Command::Ug { input } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            Produced::Doc(result_doc(name, "ug", Carrier::Sgpd(ug(expect_sset(c)?)?)))
        }
        Command::Pi0 { input } => {
            let doc = load(input)?;
            let (_, c) = doc.pick(obj)?;
            let mut r = CheckReport::new("pi0");
            match c {
                Carrier::Sset(x) => r.data("components", components_of(x)?),
                Carrier::Bisset(_) | Carrier::Symsset(_) => {
                    let v = BiView(space_diagram(c)?);
                    let rows = (0..=v.outer()).map(|n| components_of(&v.row(n))).collect::<Result<Vec<_>>>()?;
                    r.data("rows", rows);
                }
                Carrier::Sgpd(g) => {
                    let pc = pi0_category(g)?;
                    let cat = &pc.groupoid.cat;
                    let ms: Vec<String> = cat
                        .morphisms()
                        .iter()
                        .map(|m| format!("{}: {} -> {}", m.name, cat.objects()[m.dom], cat.objects()[m.cod]))
                        .collect();
                    r.data("objects", cat.objects());
                    r.data("morphisms", ms);
                }
                other => return Err(Error::ShapeMismatch(format!("pi0 of a {} is not defined here", other.kind()))),
            }
            Produced::Report(r)
        }
        Command::Homology { input, upto } => {
            let doc = load(input)?;
            let x = expect_sset(doc.pick(obj)?.1)?;
            let upto = upto.unwrap_or(x.trunc().saturating_sub(1));
            let hs = homology(x, upto)?;
            let mut r = CheckReport::new("homology");
            r.data("groups", hs.iter().enumerate().map(|(k, h)| format!("H_{k} = {}", describe_group(h))).collect::<Vec<_>>());
            Produced::Report(r)
        }
        Command::Kan { input, upto } => {
            let doc = load(input)?;
            let mut r = CheckReport::new("kan");
            let kr = if let Some(name) = o.map.as_deref().or(if doc.objects.is_empty() || !doc.maps.is_empty() && obj.is_none() { doc.maps.first().map(|m| m.name.as_str()) } else { None }) {
                let f = doc.simplicial_map(doc.map(name)?)?;
                kan_fibration_check(&f, upto.unwrap_or(f.source.trunc()))?
            } else {
                let x = expect_sset(doc.pick(obj)?.1)?;
                kan_check(x, upto.unwrap_or(x.trunc()))?
            };
            let w = kr.witness.as_ref().map(ToString::to_string);
            r.push(Outcome::decided("horn_filling", kr.passed, w).with_level(kr.level).partial().detail("horns_checked", kr.horns_checked));
            Produced::Report(r)
        }
        Command::Localize { input, mmax, nmax } => {
            let doc = load(input)?;
            let (name, c) = doc.pick(obj)?;
            let d = space_diagram(c)?;
            let flavor = match (o.flavor, d.kind()) {
                (Some(FlavorArg::Bousfield), _) | (None, ShapeKind::Bisimplicial { .. }) => LocFlavor::Bousfield,
                _ => LocFlavor::Invertible,
            };
            let bounds = LocBounds { mmax: *mmax, nmax: *nmax };
            let (result, trace) = bounded_localize(d, flavor, range_of(o.loc_range), o.steps, bounds, index, budget)?;
            if let Some(p) = &o.output {
                let out = match result.kind() {
                    ShapeKind::Symmetric { .. } => Carrier::Symsset(SymmetricSimplicialSpace::from_diagram(result)?),
                    _ => Carrier::Bisset(crate::bisimp::BiSimplicialSet::from_diagram(result)?),
                };
                std::fs::write(p, print(&result_doc(name, "localize", out)))
                    .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display())))?;
            }
            let mut r = CheckReport::new("localize");
            if trace.exhausted {
                r.push(Outcome::inconclusive("localize", "budget exhausted; the trace is partial"));
            }
            r.data("attaching_rounds", trace.attaching_rounds());
            r.data("improved", trace.improved_within(o.steps));
            r.data("trace", &trace);
            Produced::Report(r)
        }
        Command::VerifyAdjunction { pair, instances } => {
            let label = PairLabel::parse(pair).ok_or_else(|| Error::Invalid(format!("unknown adjoint pair {pair}")))?;
            let doc = load(instances)?;
            Produced::Report(verify_pairs(label, &doc, o, budget)?.to_report())
        }
        Command::Crosscheck { input, count, nmax } => {
            let functors: Vec<SimplicialFunctor> = match input {
                Some(p) => {
                    let doc = load(p)?;
                    doc.maps.iter().map(|m| doc.simplicial_functor(m)).collect::<Result<_>>()?
                }
                None => random_functors(*count, 2)?.into_iter().map(|c| c.functor).collect(),
            };
            Produced::Report(crosscheck_props(&functors, *nmax, budget)?)
        }
    })
}

fn components_of(x: &TruncatedSimplicialSet) -> Result<Vec<Vec<String>>> {
    if x.trunc() == 0 {
        return Ok(x.cells(0).iter().map(|c| vec![c.clone()]).collect());
    }
    let comps = pi0(x)?;
    let mut out = vec![Vec::new(); comps.count()];
    for (v, &c) in comps.class.iter().enumerate() {
        out[c].push(x.cells(0)[v].clone());
    }
    Ok(out)
}

fn describe_group(h: &crate::homology::HomologyGroup) -> String {
    let mut parts: Vec<String> = Vec::new();
    match h.rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(h.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn dk_report(dk: &DkReport) -> CheckReport {
    let mut r = CheckReport::new("check-dk");
    for p in &dk.pairs {
        r.push(Outcome::from_verdict(format!("map({}, {})", p.x, p.y), &p.verdict));
    }
    r.push(Outcome::decided("components", dk.w2_witness.is_none(), dk.w2_witness.clone()));
    r.data("verdict", dk.verdict.label());
    r
}

/// Pairs consecutive objects `(X, Y)` of the document and verifies the
/// named adjunction on each.
pub fn verify_pairs(label: PairLabel, doc: &Document, o: &Options, budget: &mut Budget) -> Result<AdjunctionCertificate> {
    if doc.objects.len() % 2 != 0 {
        return Err(Error::Invalid("instances come in pairs: an odd number of objects was given".into()));
    }
    let pairs: Vec<(String, &Carrier, &Carrier)> = doc
        .objects
        .chunks(2)
        .map(|p| (format!("{}/{}", p[0].0, p[1].0), &p[0].1, &p[1].1))
        .collect();
    let mismatch = |l: &str, a: &Carrier, b: &Carrier, want: &str| {
        Error::ShapeMismatch(format!("instance {l}: {} needs {want}, got {} and {}", pair_name(label), a.kind(), b.kind()))
    };
    match label {
        PairLabel::CT => {
            let outer = pairs
                .iter()
                .find_map(|(_, _, b)| if let Carrier::Symsset(y) = b { Some(y.outer()) } else { None })
                .unwrap_or(o.trunc);
            let inst = pairs
                .iter()
                .map(|(l, a, b)| match (a, b) {
                    (Carrier::Sset(x), Carrier::Symsset(y)) => Ok((l.clone(), x.clone(), y.clone())),
                    _ => Err(mismatch(l, a, b, "(sset, symsset)")),
                })
                .collect::<Result<Vec<_>>>()?;
            verify_adjunction(&ConstantRow0 { outer }, &inst, budget)
        }
        PairLabel::IR => {
            let inst = pairs
                .iter()
                .map(|(l, a, b)| match (a, b) {
                    (Carrier::Symsset(x), Carrier::Symsset(y)) => {
                        Ok((l.clone(), Pregroupoid::new(SegalPregroupoid::new(x.clone())?), y.clone()))
                    }
                    _ => Err(mismatch(l, a, b, "(symsset, symsset)")),
                })
                .collect::<Result<Vec<_>>>()?;
            verify_adjunction(&InclusionR, &inst, budget)
        }
        PairLabel::InvertRestrict => {
            let inst = pairs
                .iter()
                .map(|(l, a, b)| match (a, b) {
                    (Carrier::Bisset(x), Carrier::Symsset(y)) => Ok((l.clone(), x.clone(), SymObject::new(y.clone()))),
                    _ => Err(mismatch(l, a, b, "(bisset, symsset)")),
                })
                .collect::<Result<Vec<_>>>()?;
            verify_adjunction(&InvertRestrict, &inst, budget)
        }
        PairLabel::Identity => {
            let inst = pairs
                .iter()
                .map(|(l, a, b)| match (a, b) {
                    (Carrier::Symsset(x), Carrier::Symsset(y)) => Ok((l.clone(), x.clone(), y.clone())),
                    _ => Err(mismatch(l, a, b, "(symsset, symsset)")),
                })
                .collect::<Result<Vec<_>>>()?;
            verify_adjunction(&IdentityPair, &inst, budget)
        }
        PairLabel::FN => {
            let instances = pairs
                .iter()
                .map(|(l, a, b)| match (a, b) {
                    (Carrier::Sgpd(g), Carrier::Sgpd(h)) => verify_fn_instance(l, g, h, o.trunc, budget),
                    _ => Err(mismatch(l, a, b, "(sgpd, sgpd)")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AdjunctionCertificate { pair: label, instances })
        }
    }
}

fn pair_name(l: PairLabel) -> &'static str {
    match l {
        PairLabel::IR => "I-R",
        PairLabel::CT => "C-T",
        PairLabel::FN => "F-N",
        PairLabel::InvertRestrict => "invert-restrict",
        PairLabel::Identity => "id-id",
    }
}

/// A verdict as a one-outcome report, for callers assembling their own.
pub fn verdict_report(command: &str, name: &str, v: &EquivalenceVerdict) -> CheckReport {
    let mut r = CheckReport::new(command);
    r.push(Outcome::from_verdict(name, v));
    r
}
