//! The `relcat` command line. [`run`] does all the work and returns the exit
//! status with the text destined for stdout and stderr.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{check_commutative, check_rel_monoid, generate_category, monoid_from_preorder};
use crate::category::Ambient;
use crate::ccat::{check_c_category, CCategory};
use crate::comonoid::{self, ModComonoid};
use crate::error::{Error, Result};
use crate::io;
use crate::monoidal::{check_symmetric_monoidal, MonoidalStructure};
use crate::products::{box_product, check_induced_constraints, check_symmetry, odot, tensor_relations};
use crate::quantization::{
    check_h_membership, check_quantized_functor, hat_transform, quantize_comonoid, quantize_monoid,
    transport_components, FunctorData,
};
use crate::relation::{check_bicomodule, phi, psi};
use crate::report::Report;

pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Parser, Debug)]
#[command(name = "relcat", version, about = "Relations in finite symmetric monoidal C-categories")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomly drawn generators.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Universe bound, or the search bound for `commutative`.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Pair {
    #[arg(long)]
    pub lhs: PathBuf,
    #[arg(long)]
    pub rhs: PathBuf,
    /// Vertex count for graph inputs; checked against the files otherwise.
    #[arg(long)]
    pub base: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the symmetric monoidal laws of a structure on a universe.
    CheckStructure {
        #[arg(long)]
        structure: PathBuf,
    },
    /// Check comonoid laws, σ-commutativity and (optionally) a reduction mod p.
    CheckComonoid {
        #[arg(long)]
        comonoid: PathBuf,
    },
    /// Check the C-category axioms.
    CheckCcat {
        #[arg(long)]
        ccat: PathBuf,
    },
    /// Relation to bicomodule.
    Phi {
        #[arg(long)]
        relation: PathBuf,
    },
    /// Bicomodule to relation.
    Psi {
        #[arg(long)]
        bicomodule: PathBuf,
    },
    CheckBicomodule {
        #[arg(long)]
        bicomodule: PathBuf,
    },
    /// Unrestricted product of two bicomodules.
    Box(Pair),
    /// Restricted product with its inclusion.
    Tensor(Pair),
    /// Composition of two relations.
    Odot(Pair),
    /// Coherence of the induced associator and unitors.
    Constraints {
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
        #[arg(long)]
        third: PathBuf,
        #[arg(long)]
        fourth: Option<PathBuf>,
    },
    /// The induced symmetry and its identities.
    Symmetry {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long)]
        third: Option<PathBuf>,
    },
    /// Build and check a monoid of relations.
    Monoid {
        #[arg(long, conflicts_with = "monoid", required_unless_present = "monoid")]
        preorder: Option<PathBuf>,
        #[arg(long)]
        monoid: Option<PathBuf>,
    },
    /// Search for an isomorphism between a monoid and its reversal.
    Commutative {
        #[arg(long)]
        monoid: PathBuf,
    },
    /// Iterated composites of a relation with decoded paths.
    Generate {
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Act on a structure by a triple, optionally transporting a monoid or comonoid.
    Quantize {
        #[arg(long)]
        triple: PathBuf,
        #[arg(long)]
        structure: Option<PathBuf>,
        #[arg(long, conflicts_with = "comonoid")]
        monoid: Option<PathBuf>,
        #[arg(long)]
        comonoid: Option<PathBuf>,
    },
    /// Check subgroup membership of a triple.
    CheckTriple {
        #[arg(long)]
        triple: PathBuf,
    },
    /// Check the equations of a quantized functor.
    CheckQfunctor {
        #[arg(long)]
        functor: PathBuf,
    },
    /// Enumerate comonoids over a small prime field.
    SolveComonoids {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    value: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn value(value: Value, text: String) -> Self {
        Outcome { value, text, code: 0 }
    }

    fn report(rep: &Report, extra: Option<(&str, Value)>) -> Self {
        let mut value = rep.to_json();
        let mut text = rep.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        if let Some((k, v)) = extra {
            text.push_str(&format!("{k}: {v}\n"));
            value[k] = v;
        }
        Outcome { value, text, code: rep.exit_code() }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&o.value).expect("serializable") + "\n"
            } else {
                o.text
            };
            Output { code: o.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = e.exit_code();
            let stdout = if cli.json {
                serde_json::to_string_pretty(&json!({"error": e.to_string(), "exit": code})).expect("serializable") + "\n"
            } else {
                String::new()
            };
            Output { code, stdout, stderr: format!("relcat: {e}\n") }
        }
    }
}

fn load(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    let bound = cli.bound;
    match &cli.command {
        Command::CheckStructure { structure } => {
            let doc = load(structure)?;
            let s = io::structure_from_json(io::field(&doc, "structure")?)?;
            let u = io::universe_from_json(io::field(&doc, "universe")?, s.ambient(), bound)?;
            let gens = io::generators_from_json(doc.get("generators"), &u, seed)?;
            Ok(Outcome::report(&check_symmetric_monoidal(&s, &u, &gens)?, None))
        }
        Command::CheckComonoid { comonoid } => {
            let doc = load(comonoid)?;
            let c = io::comonoid_from_doc(&doc)?;
            let s = match doc.get("structure") {
                Some(v) => io::structure_from_json(v)?,
                None => MonoidalStructure::builtin(c.ambient()),
            };
            let cosemigroup = doc.get("cosemigroup").and_then(Value::as_bool).unwrap_or(false);
            let mut rep = if cosemigroup { comonoid::check_cosemigroup(&c)? } else { comonoid::check_comonoid_in(&s, &c)? };
            rep.record("sigma_commutative", comonoid::is_sigma_commutative_in(&s, &c)?, || "σ∘δ ≠ δ".into());
            if !cosemigroup {
                rep.record("coproduct_mono", comonoid::check_coproduct_mono(&c), || "δ is not mono".into());
            }
            if let Some(p) = doc.get("field") {
                let p = io::as_usize(p, "field")? as u32;
                let reduced = ModComonoid::reduce(&c, p)?;
                rep.absorb(&format!("mod_{p}"), comonoid::check_mod_comonoid(&reduced)?);
            }
            Ok(Outcome::report(&rep, Some(("comonoid", io::comonoid_to_json(&c)))))
        }
        Command::CheckCcat { ccat } => {
            let doc = load(ccat)?;
            let cc = io::ccat_from_doc(&doc)?;
            let u = io::universe_from_json(io::field(&doc, "universe")?, cc.ambient(), bound)?;
            let gens = io::generators_from_json(doc.get("generators"), &u, seed)?;
            Ok(Outcome::report(&check_c_category(&cc, &u, &gens)?, None))
        }
        Command::Phi { relation } => {
            let doc = load(relation)?;
            let cc = io::ccat_from_doc(&doc)?;
            let m = phi(&cc, &io::relation_from_doc(&doc, &cc, None)?)?;
            let v = json!({"bicomodule": io::bicomodule_to_json(&m)});
            Ok(Outcome::value(v.clone(), pretty(&v)))
        }
        Command::Psi { bicomodule } => {
            let doc = load(bicomodule)?;
            let cc = io::ccat_from_doc(&doc)?;
            let r = psi(&cc, &io::bicomodule_from_doc(&doc, &cc, None)?)?;
            let v = json!({"relation": io::relation_to_json(&r)});
            Ok(Outcome::value(v.clone(), pretty(&v)))
        }
        Command::CheckBicomodule { bicomodule } => {
            let doc = load(bicomodule)?;
            let cc = io::ccat_from_doc(&doc)?;
            let m = io::bicomodule_from_doc(&doc, &cc, None)?;
            Ok(Outcome::report(&check_bicomodule(&cc, &m)?, None))
        }
        Command::Box(p) => {
            let (cc, d, g) = load_pair(p)?;
            let m = box_product(&cc, &d, &g)?;
            let v = json!({"bicomodule": io::bicomodule_to_json(&m)});
            Ok(Outcome::value(v.clone(), pretty(&v)))
        }
        Command::Tensor(p) => {
            let (cc, d, g) = load_pair(p)?;
            let t = tensor_relations(&cc, &d, &g)?;
            let v = io::tensor_result_to_json(&t);
            let text = format!(
                "carrier {} of {}, flat: {}\nlabels: {}\n",
                t.product.carrier.size,
                d.carrier.size * g.carrier.size,
                t.flat,
                v["carrier_labels"]
            );
            Ok(Outcome::value(v, text))
        }
        Command::Odot(p) => {
            let (ldoc, rdoc) = (load(&p.lhs)?, load(&p.rhs)?);
            let cc = io::ccat_from_doc(&ldoc)?;
            let r = io::relation_from_doc(&ldoc, &cc, p.base)?;
            let s = io::relation_from_doc(&rdoc, &cc, p.base.or(Some(r.base.size)))?;
            let (out, t) = odot(&cc, &r, &s)?;
            let v = json!({"relation": io::relation_to_json(&out), "carrier_labels": io::carrier_labels(&t)});
            let text = match out.image() {
                Some(img) => format!(
                    "arrows: {}\nimage: {}\n",
                    out.dom.size,
                    img.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
                ),
                None => pretty(&v),
            };
            Ok(Outcome::value(v, text))
        }
        Command::Constraints { first, second, third, fourth } => {
            let d1 = load(first)?;
            let cc = io::ccat_from_doc(&d1)?;
            let a = io::bicomodule_from_doc(&d1, &cc, None)?;
            let base = Some(a.base.size);
            let b = io::bicomodule_from_doc(&load(second)?, &cc, base)?;
            let c = io::bicomodule_from_doc(&load(third)?, &cc, base)?;
            let w = fourth.as_ref().map(|f| io::bicomodule_from_doc(&load(f)?, &cc, base)).transpose()?;
            Ok(Outcome::report(&check_induced_constraints(&cc, &a, &b, &c, w.as_ref())?, None))
        }
        Command::Symmetry { lhs, rhs, third } => {
            let d1 = load(lhs)?;
            let cc = io::ccat_from_doc(&d1)?;
            let a = io::bicomodule_from_doc(&d1, &cc, None)?;
            let base = Some(a.base.size);
            let b = io::bicomodule_from_doc(&load(rhs)?, &cc, base)?;
            let c = third.as_ref().map(|f| io::bicomodule_from_doc(&load(f)?, &cc, base)).transpose()?;
            Ok(Outcome::report(&check_symmetry(&cc, &a, &b, c.as_ref())?, None))
        }
        Command::Monoid { preorder, monoid } => {
            let cc = CCategory::standard(Ambient::FinSet);
            let m = match (preorder, monoid) {
                (Some(p), _) => {
                    let doc = load(p)?;
                    let g = doc.get("preorder").unwrap_or(&doc);
                    let n = io::as_usize(io::field(g, "vertices")?, "vertices")?;
                    monoid_from_preorder(&cc, n, &io::edge_list(io::field(g, "edges")?)?)?
                }
                (None, Some(m)) => {
                    let doc = load(m)?;
                    let cc = io::ccat_from_doc(&doc)?;
                    let m = io::rel_monoid_from_doc(&doc, &cc)?;
                    return Ok(Outcome::report(&check_rel_monoid(&cc, &m)?, Some(("monoid", io::rel_monoid_to_json(&m)))));
                }
                (None, None) => return Err(Error::Malformed("give --preorder or --monoid".into())),
            };
            Ok(Outcome::report(&check_rel_monoid(&cc, &m)?, Some(("monoid", io::rel_monoid_to_json(&m)))))
        }
        Command::Commutative { monoid } => {
            let doc = load(monoid)?;
            let cc = io::ccat_from_doc(&doc)?;
            let m = io::rel_monoid_from_doc(&doc, &cc)?;
            let c = check_commutative(&cc, &m, bound.unwrap_or(crate::algebra::DEFAULT_SEARCH_BOUND))?;
            let w = json!({"map": c.witness, "by_reversal": c.by_reversal});
            Ok(Outcome::report(&c.report, Some(("witness", w))))
        }
        Command::Generate { relation, depth } => {
            let doc = load(relation)?;
            let cc = io::ccat_from_doc(&doc)?;
            let r = io::relation_from_doc(&doc, &cc, None)?;
            let unit = doc.get("unit").map(|u| io::mor_from_json(u, Some(cc.ambient()))).transpose()?;
            let stages = generate_category(&cc, &r, unit.as_ref(), *depth)?;
            let mut text = String::new();
            let mut list = Vec::new();
            for (k, st) in stages.iter().enumerate() {
                text.push_str(&format!("stage {}: {} arrows\n", k + 1, st.relation.dom.size));
                list.push(json!({
                    "stage": k + 1,
                    "carrier": st.relation.dom.size,
                    "paths": st.paths,
                    "identities": st.identities,
                    "relation": io::relation_to_json(&st.relation),
                }));
            }
            Ok(Outcome::value(json!({"stages": list}), text))
        }
        Command::Quantize { triple, structure, monoid, comonoid } => {
            let tdoc = load(triple)?;
            let t = io::triple_from_json(io::field(&tdoc, "triple")?, bound, seed)?;
            let s = match structure {
                Some(p) => io::structure_from_json(io::field(&load(p)?, "structure")?)?,
                None => MonoidalStructure::builtin(t.ambient()),
            };
            let hat = hat_transform(&s, &t)?;
            let mut value = json!({
                "structure": io::structure_to_json(&hat),
                "universe": io::universe_to_json(&t.universe),
            });
            let fd = FunctorData::identity_functor(t.clone());
            if let Some(m) = monoid {
                let (m, w) = io::monoid_object_from_json(io::field(&load(m)?, "monoid_object")?, t.ambient())?;
                let out = quantize_monoid(&s, &m, w.as_ref(), &fd)?;
                value["monoid_object"] = io::monoid_object_to_json(&out.monoid);
                if let Some(w) = &out.witness {
                    value["monoid_object"]["witness"] = io::mor_to_json(w);
                }
                return Ok(Outcome::report(&out.report, Some(("quantized", value))));
            }
            if let Some(c) = comonoid {
                let c = io::comonoid_from_doc(&load(c)?)?;
                let (out, rep) = quantize_comonoid(&s, &c, &fd)?;
                value["comonoid"] = io::comonoid_to_json(&out);
                return Ok(Outcome::report(&rep, Some(("quantized", value))));
            }
            let text = format!(
                "transformed structure on {} over {:?}\n{}",
                t.ambient().name(),
                t.universe.sizes(),
                pretty(&value)
            );
            Ok(Outcome::value(value, text))
        }
        Command::CheckTriple { triple } => {
            let doc = load(triple)?;
            let t = io::triple_from_json(io::field(&doc, "triple")?, bound, seed)?;
            Ok(Outcome::report(&check_h_membership(&t)?, None))
        }
        Command::CheckQfunctor { functor } => {
            let doc = load(functor)?;
            let fd = io::functor_from_json(io::field(&doc, "functor")?, bound, seed)?;
            let s1 = match doc.get("source") {
                Some(v) => io::structure_from_json(v)?,
                None => MonoidalStructure::builtin(fd.triple.ambient()),
            };
            let s2 = match doc.get("target") {
                None => transport_components(&s1, &fd)?,
                Some(Value::String(s)) if s == "source" => s1.clone(),
                Some(v) => io::structure_from_json(v)?,
            };
            Ok(Outcome::report(&check_quantized_functor(&fd, &s1, &s2)?, None))
        }
        Command::SolveComonoids { dim, field } => {
            let sols = comonoid::solve_comonoid_equations(*dim, *field)?;
            let text = format!("{} comonoids of dimension {dim} over F_{field}\n", sols.len());
            let v = json!({"field": field, "dim": dim, "count": sols.len(), "solutions": sols.iter().map(io::mod_comonoid_to_json).collect::<Vec<_>>()});
            Ok(Outcome::value(v, text))
        }
    }
}

fn load_pair(p: &Pair) -> Result<(CCategory, crate::relation::Bicomodule, crate::relation::Bicomodule)> {
    let ldoc = load(&p.lhs)?;
    let cc = io::ccat_from_doc(&ldoc)?;
    let d = io::bicomodule_from_doc(&ldoc, &cc, p.base)?;
    let g = io::bicomodule_from_doc(&load(&p.rhs)?, &cc, Some(d.base.size))?;
    Ok((cc, d, g))
}
