//! JSON descriptors for every engine value. Rationals are written as `"p/q"`
//! strings (integers as `"n"`); plain JSON integers are accepted on input.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{monoid_from_preorder, RelMonoid};
use crate::category::{Ambient, Body, Mor, Obj};
use crate::ccat::{Assignment, CCategory};
use crate::comonoid::{self, ComonoidData, ModComonoid};
use crate::error::{Error, Result};
use crate::matrix::{q, Matrix, Q};
use crate::monoidal::{Components, MonoidalStructure, Universe};
use crate::products::TensorResult;
use crate::quantization::{FunctorAction, FunctorData, MonoidObject, QuantTriple};
use crate::relation::{Bicomodule, Relation};

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

pub fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_usize(x, what)).collect()
}

pub fn rat_from_json(v: &Value) -> Result<Q> {
    if let Some(i) = v.as_i64() {
        return Ok(q(i));
    }
    let s = v.as_str().ok_or_else(|| bad(format!("rational expected, got {v}")))?;
    let parse = |t: &str| t.trim().parse::<num::BigInt>().map_err(|_| bad(format!("bad rational {s:?}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == num::BigInt::from(0) {
                return Err(bad(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(parse(n)?, d))
        }
        None => Ok(Q::from_integer(parse(s)?)),
    }
}

pub fn rat_to_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn ambient_from_json(v: &Value) -> Result<Ambient> {
    Ambient::parse(v.as_str().ok_or_else(|| bad("ambient must be a string"))?)
}

/// An object is `{"ambient", "size"}`, or a bare size when the ambient is
/// known from context.
pub fn obj_from_json(v: &Value, ctx: Option<Ambient>) -> Result<Obj> {
    if let Some(n) = v.as_u64() {
        let amb = ctx.ok_or_else(|| bad("a bare object size needs an ambient"))?;
        return Ok(amb.obj(n as usize));
    }
    let amb = match v.get("ambient") {
        Some(a) => ambient_from_json(a)?,
        None => ctx.ok_or_else(|| bad("object without ambient"))?,
    };
    if let Some(c) = ctx {
        if c != amb {
            return Err(Error::Ambient(format!("expected {}, got {}", c.name(), amb.name())));
        }
    }
    Ok(amb.obj(as_usize(field(v, "size")?, "size")?))
}

pub fn obj_to_json(o: Obj) -> Value {
    json!({"ambient": o.ambient.name(), "size": o.size})
}

pub fn mor_from_json(v: &Value, ctx: Option<Ambient>) -> Result<Mor> {
    let ctx = match v.get("ambient") {
        Some(a) => {
            let a = ambient_from_json(a)?;
            if ctx.is_some_and(|c| c != a) {
                return Err(Error::Ambient(format!("morphism in {} where {} was expected", a.name(), ctx.unwrap().name())));
            }
            Some(a)
        }
        None => ctx,
    };
    let dom = obj_from_json(field(v, "dom")?, ctx)?;
    let cod = obj_from_json(field(v, "cod")?, ctx)?;
    if let Some(t) = v.get("table") {
        return Mor::table(dom, cod, usize_list(t, "table")?);
    }
    if let Some(m) = v.get("matrix") {
        let rows = as_array(m, "matrix")?
            .iter()
            .map(|r| as_array(r, "matrix row")?.iter().map(rat_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != cod.size || rows.iter().any(|r| r.len() != dom.size) {
            return Err(bad(format!("matrix must be {}×{}", cod.size, dom.size)));
        }
        return Mor::matrix(dom, cod, Matrix::from_rows(rows, dom.size));
    }
    Err(bad("morphism needs \"table\" or \"matrix\""))
}

pub fn mor_to_json(m: &Mor) -> Value {
    let mut out = json!({"ambient": m.ambient().name(), "dom": m.dom().size, "cod": m.cod().size});
    match m.body() {
        Body::Table(t) => out["table"] = json!(t),
        Body::Matrix(a) => {
            out["matrix"] = Value::Array(
                a.to_rows().iter().map(|r| Value::Array(r.iter().map(rat_to_json).collect())).collect(),
            )
        }
    }
    out
}

/// `[sizes…]` or `{"sizes": […], "bound": n}`; an explicit `bound` wins.
pub fn universe_from_json(v: &Value, amb: Ambient, bound: Option<usize>) -> Result<Universe> {
    let (sizes, b) = match v {
        Value::Array(_) => (usize_list(v, "universe")?, None),
        _ => (
            usize_list(field(v, "sizes")?, "universe sizes")?,
            v.get("bound").map(|b| as_usize(b, "bound")).transpose()?,
        ),
    };
    Ok(Universe::new(amb, sizes, bound.or(b)))
}

pub fn universe_to_json(u: &Universe) -> Value {
    json!({"sizes": u.sizes(), "bound": u.bound()})
}

/// A random morphism between two universe objects, with entries in
/// `{-2,…,2}` for linear ambients.
pub fn random_mor(rng: &mut ChaCha8Rng, u: &Universe) -> Result<Mor> {
    let sizes = u.sizes();
    let amb = u.ambient();
    let candidates: Vec<usize> = if amb == Ambient::FinSet { sizes.iter().copied().filter(|&n| n > 0).collect() } else { sizes.clone() };
    if candidates.is_empty() {
        return Err(bad("universe has no objects to draw from"));
    }
    let dom = candidates[rng.gen_range(0..candidates.len())];
    let cod = candidates[rng.gen_range(0..candidates.len())];
    if amb == Ambient::FinSet {
        let t = (0..dom).map(|_| rng.gen_range(0..cod)).collect();
        Mor::table(amb.obj(dom), amb.obj(cod), t)
    } else {
        let entries: Vec<Vec<Q>> = (0..cod).map(|_| (0..dom).map(|_| q(rng.gen_range(-2..=2))).collect()).collect();
        let m = Matrix::from_rows(entries, dom);
        Mor::matrix(amb.obj(dom), amb.obj(cod), m)
    }
}

/// A list of morphisms or `{"random": k}`.
pub fn generators_from_json(v: Option<&Value>, u: &Universe, seed: u64) -> Result<Vec<Mor>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    if let Some(k) = v.get("random") {
        let k = as_usize(k, "random")?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return (0..k).map(|_| random_mor(&mut rng, u)).collect();
    }
    as_array(v, "generators")?.iter().map(|g| mor_from_json(g, Some(u.ambient()))).collect()
}

fn objs_key(v: &Value, n: usize) -> Result<Vec<usize>> {
    let objs = usize_list(field(v, "objs")?, "objs")?;
    if objs.len() != n {
        return Err(bad(format!("objs must list {n} sizes")));
    }
    Ok(objs)
}

/// `{"ambient", "overrides": {"alpha": [{"objs", "mor"}], …}, "complete"}`.
pub fn structure_from_json(v: &Value) -> Result<MonoidalStructure> {
    let amb = ambient_from_json(field(v, "ambient")?)?;
    let mut c = Components::default();
    if let Some(o) = v.get("overrides") {
        let list = |k: &str| -> Result<Vec<Value>> { Ok(o.get(k).map(|x| as_array(x, k).cloned()).transpose()?.unwrap_or_default()) };
        for e in list("alpha")? {
            let k = objs_key(&e, 3)?;
            c.alpha.insert((k[0], k[1], k[2]), mor_from_json(field(&e, "mor")?, Some(amb))?);
        }
        for e in list("beta")? {
            c.beta.insert(objs_key(&e, 1)?[0], mor_from_json(field(&e, "mor")?, Some(amb))?);
        }
        for e in list("gamma")? {
            c.gamma.insert(objs_key(&e, 1)?[0], mor_from_json(field(&e, "mor")?, Some(amb))?);
        }
        for e in list("sigma")? {
            let k = objs_key(&e, 2)?;
            c.sigma.insert((k[0], k[1]), mor_from_json(field(&e, "mor")?, Some(amb))?);
        }
    }
    let complete = v.get("complete").and_then(Value::as_bool).unwrap_or(false);
    MonoidalStructure::with_tables(amb, c, complete)
}

pub fn components_to_json(c: &Components) -> Value {
    let entry = |objs: Vec<usize>, m: &Mor| json!({"objs": objs, "mor": mor_to_json(m)});
    json!({
        "alpha": c.alpha.iter().map(|(&(x, y, z), m)| entry(vec![x, y, z], m)).collect::<Vec<_>>(),
        "beta": c.beta.iter().map(|(&y, m)| entry(vec![y], m)).collect::<Vec<_>>(),
        "gamma": c.gamma.iter().map(|(&x, m)| entry(vec![x], m)).collect::<Vec<_>>(),
        "sigma": c.sigma.iter().map(|(&(x, y), m)| entry(vec![x, y], m)).collect::<Vec<_>>(),
    })
}

pub fn structure_to_json(s: &MonoidalStructure) -> Value {
    json!({
        "ambient": s.ambient().name(),
        "overrides": components_to_json(s.overrides()),
        "complete": s.is_complete(),
    })
}

pub fn comonoid_from_json(v: &Value, ctx: Option<Ambient>) -> Result<ComonoidData> {
    let carrier = obj_from_json(field(v, "carrier")?, ctx)?;
    let amb = Some(carrier.ambient);
    ComonoidData::new(carrier, mor_from_json(field(v, "delta")?, amb)?, mor_from_json(field(v, "epsilon")?, amb)?)
}

pub fn comonoid_to_json(c: &ComonoidData) -> Value {
    json!({"carrier": obj_to_json(c.carrier), "delta": mor_to_json(&c.delta), "epsilon": mor_to_json(&c.epsilon)})
}

pub fn group_table_from_json(v: &Value) -> Result<Vec<Vec<usize>>> {
    as_array(v, "group_table")?.iter().map(|r| usize_list(r, "group_table row")).collect()
}

pub fn mod_comonoid_to_json(c: &ModComonoid) -> Value {
    json!({"field": c.p, "dim": c.dim, "delta": c.delta, "epsilon": c.epsilon})
}

/// `{"ambient", "structure"?, "assignments": "canonical" | "grouplike" |
/// [{"object", "comonoid"}]}`; absent means the standard instance.
pub fn ccat_from_json(v: Option<&Value>, amb: Ambient) -> Result<CCategory> {
    let Some(v) = v else { return Ok(CCategory::standard(amb)) };
    let amb = match v.get("ambient") {
        Some(a) => ambient_from_json(a)?,
        None => amb,
    };
    let structure = match v.get("structure") {
        Some(s) => structure_from_json(s)?,
        None => MonoidalStructure::builtin(amb),
    };
    if structure.ambient() != amb {
        return Err(Error::Ambient("structure and c_category ambients differ".into()));
    }
    let assignment = match v.get("assignments") {
        None => return Ok(CCategory { assignment: CCategory::standard(amb).assignment, structure }),
        Some(Value::String(s)) if s == "canonical" => Assignment::Canonical,
        Some(Value::String(s)) if s == "grouplike" => Assignment::GroupLike,
        Some(list) => {
            let mut t = BTreeMap::new();
            for e in as_array(list, "assignments")? {
                let n = as_usize(field(e, "object")?, "object")?;
                t.insert(n, comonoid_from_json(field(e, "comonoid")?, Some(amb))?);
            }
            Assignment::Table(t)
        }
    };
    CCategory::new(structure, assignment)
}

/// `{"vertices", "edges": [[s, t], …]}`; `vertices` may come from `base`.
pub fn graph_from_json(v: &Value, base: Option<usize>) -> Result<Relation> {
    let n = match (v.get("vertices"), base) {
        (Some(x), b) => {
            let n = as_usize(x, "vertices")?;
            if b.is_some_and(|b| b != n) {
                return Err(bad(format!("graph has {n} vertices but the base is {}", b.unwrap())));
            }
            n
        }
        (None, Some(b)) => b,
        (None, None) => return Err(bad("graph needs \"vertices\" or a base size")),
    };
    Relation::from_edges(n, &edge_list(field(v, "edges")?)?)
}

pub fn edge_list(v: &Value) -> Result<Vec<(usize, usize)>> {
    as_array(v, "edges")?
        .iter()
        .map(|e| {
            let p = usize_list(e, "edge")?;
            match p[..] {
                [s, t] => Ok((s, t)),
                _ => Err(bad("an edge is a pair [source, target]")),
            }
        })
        .collect()
}

/// A document holding `"relation"` (`{"base", "arrow"}`) or `"graph"`.
pub fn relation_from_doc(doc: &Value, cc: &CCategory, base: Option<usize>) -> Result<Relation> {
    let amb = cc.ambient();
    let r = if let Some(g) = doc.get("graph") {
        if amb != Ambient::FinSet {
            return Err(Error::Ambient("graphs describe finset relations".into()));
        }
        graph_from_json(g, base)?
    } else {
        let v = field(doc, "relation")?;
        let b = obj_from_json(field(v, "base")?, Some(amb))?;
        Relation::new(cc, b, mor_from_json(field(v, "arrow")?, Some(amb))?)?
    };
    if base.is_some_and(|b| b != r.base.size) {
        return Err(Error::BaseMismatch(format!("relation has base {}, expected {}", r.base.size, base.unwrap())));
    }
    Ok(r)
}

pub fn relation_to_json(r: &Relation) -> Value {
    let mut v = json!({"base": obj_to_json(r.base), "dom": obj_to_json(r.dom), "arrow": mor_to_json(&r.arrow)});
    if let (Some(e), Some(i)) = (r.edges(), r.image()) {
        v["edges"] = json!(e);
        v["image"] = json!(i);
    }
    v
}

pub fn bicomodule_from_json(v: &Value, ctx: Option<Ambient>) -> Result<Bicomodule> {
    let base = obj_from_json(field(v, "base")?, ctx)?;
    let amb = Some(base.ambient);
    Bicomodule::new(base, mor_from_json(field(v, "left")?, amb)?, mor_from_json(field(v, "right")?, amb)?)
}

pub fn bicomodule_to_json(m: &Bicomodule) -> Value {
    json!({
        "base": obj_to_json(m.base),
        "carrier": obj_to_json(m.carrier),
        "left": mor_to_json(&m.left),
        "right": mor_to_json(&m.right),
    })
}

/// A document holding `"bicomodule"`, or a relation converted by Φ.
pub fn bicomodule_from_doc(doc: &Value, cc: &CCategory, base: Option<usize>) -> Result<Bicomodule> {
    let m = match doc.get("bicomodule") {
        Some(b) => bicomodule_from_json(b, Some(cc.ambient()))?,
        None => crate::relation::phi(cc, &relation_from_doc(doc, cc, base)?)?,
    };
    if base.is_some_and(|b| b != m.base.size) {
        return Err(Error::BaseMismatch(format!("bicomodule has base {}, expected {}", m.base.size, base.unwrap())));
    }
    Ok(m)
}

/// Names the elements of a product carrier: pairs `[b, e]` in FinSet, the
/// inclusion's columns otherwise.
pub fn carrier_labels(t: &TensorResult) -> Value {
    let e = t.rhs.carrier.size;
    match t.pi.as_table() {
        Some(tab) => json!(tab.iter().map(|&i| [i / e, i % e]).collect::<Vec<_>>()),
        None => {
            let m = t.pi.to_matrix();
            Value::Array((0..m.cols()).map(|c| Value::Array(m.column(c).iter().map(rat_to_json).collect())).collect())
        }
    }
}

pub fn tensor_result_to_json(t: &TensorResult) -> Value {
    json!({
        "product": bicomodule_to_json(&t.product),
        "pi": mor_to_json(&t.pi),
        "flat": t.flat,
        "carrier_labels": carrier_labels(t),
    })
}

/// `{"monoid": {"relation"|"graph", "mu", "unit"}}` or
/// `{"preorder": {"vertices", "edges"}}`.
pub fn rel_monoid_from_doc(doc: &Value, cc: &CCategory) -> Result<RelMonoid> {
    if let Some(p) = doc.get("preorder") {
        let n = as_usize(field(p, "vertices")?, "vertices")?;
        return monoid_from_preorder(cc, n, &edge_list(field(p, "edges")?)?);
    }
    let m = field(doc, "monoid")?;
    let rel = relation_from_doc(m, cc, None)?;
    let amb = Some(cc.ambient());
    RelMonoid::new(cc, rel, mor_from_json(field(m, "mu")?, amb)?, mor_from_json(field(m, "unit")?, amb)?)
}

pub fn rel_monoid_to_json(m: &RelMonoid) -> Value {
    json!({"relation": relation_to_json(&m.rel), "mu": mor_to_json(&m.mu), "unit": mor_to_json(&m.unit)})
}

fn keyed<K: Ord>(
    v: Option<&Value>,
    n: usize,
    amb: Ambient,
    key: impl Fn(&[usize]) -> K,
) -> Result<Option<BTreeMap<K, Mor>>> {
    let Some(v) = v else { return Ok(None) };
    let mut out = BTreeMap::new();
    for e in as_array(v, "component list")? {
        out.insert(key(&objs_key(e, n)?), mor_from_json(field(e, "mor")?, Some(amb))?);
    }
    Ok(Some(out))
}

/// `{"ambient", "universe", "lambda"?, "mu"?, "eta"?, "scalar"?, "action"?,
/// "generators"?}`. Absent families default to identities; `"scalar": c`
/// sets `λ = c·1`.
pub fn triple_from_json(v: &Value, bound: Option<usize>, seed: u64) -> Result<QuantTriple> {
    let amb = ambient_from_json(field(v, "ambient")?)?;
    match v.get("action") {
        None => {}
        Some(Value::String(s)) if s == "identity" => {}
        Some(other) => return Err(Error::Unsupported(format!("only the identity action is implemented, got {other}"))),
    }
    let u = universe_from_json(field(v, "universe")?, amb, bound)?;
    let gens = generators_from_json(v.get("generators"), &u, seed)?;
    let id = QuantTriple::identity(u.clone(), gens.clone());
    let mut lambda = keyed(v.get("lambda"), 2, amb, |k| (k[0], k[1]))?.unwrap_or(id.lambda);
    if let Some(c) = v.get("scalar") {
        if v.get("lambda").is_some() {
            return Err(bad("give either \"scalar\" or \"lambda\""));
        }
        let c = rat_from_json(c)?;
        for l in lambda.values_mut() {
            *l = l.scale(&c)?;
        }
    }
    let mu = keyed(v.get("mu"), 1, amb, |k| k[0])?.unwrap_or(id.mu);
    let eta = match v.get("eta") {
        Some(e) => mor_from_json(e, Some(amb))?,
        None => id.eta,
    };
    QuantTriple::new(u, lambda, mu, eta, gens)
}

pub fn triple_to_json(t: &QuantTriple) -> Value {
    let entry = |objs: Vec<usize>, m: &Mor| json!({"objs": objs, "mor": mor_to_json(m)});
    json!({
        "ambient": t.ambient().name(),
        "universe": universe_to_json(&t.universe),
        "lambda": t.lambda.iter().map(|(&(x, y), m)| entry(vec![x, y], m)).collect::<Vec<_>>(),
        "mu": t.mu.iter().map(|(&x, m)| entry(vec![x], m)).collect::<Vec<_>>(),
        "eta": mor_to_json(&t.eta),
        "action": "identity",
        "generators": t.generators.iter().map(mor_to_json).collect::<Vec<_>>(),
    })
}

/// `{"action": "identity" | {"conjugate": [{"object", "mor"}]}, "triple"}`.
pub fn functor_from_json(v: &Value, bound: Option<usize>, seed: u64) -> Result<FunctorData> {
    let triple = triple_from_json(field(v, "triple")?, bound, seed)?;
    let amb = triple.ambient();
    let action = match v.get("action") {
        None => FunctorAction::Identity,
        Some(Value::String(s)) if s == "identity" => FunctorAction::Identity,
        Some(a) => {
            let mut p = BTreeMap::new();
            for e in as_array(field(a, "conjugate")?, "conjugate")? {
                let n = as_usize(field(e, "object")?, "object")?;
                let m = mor_from_json(field(e, "mor")?, Some(amb))?;
                if m.dom() != amb.obj(n) || m.cod() != amb.obj(n) || !m.is_iso() {
                    return Err(Error::Shape(format!("conjugating map at {n} must be an automorphism")));
                }
                p.insert(n, m);
            }
            FunctorAction::Conjugate(p)
        }
    };
    Ok(FunctorData { action, triple })
}

pub fn functor_to_json(f: &FunctorData) -> Value {
    let action = match &f.action {
        FunctorAction::Identity => json!("identity"),
        FunctorAction::Conjugate(p) => json!({"conjugate": p.iter().map(|(&n, m)| json!({"object": n, "mor": mor_to_json(m)})).collect::<Vec<_>>()}),
    };
    json!({"action": action, "triple": triple_to_json(&f.triple)})
}

/// `{"carrier", "mult", "unit", "witness"?}` for a monoid object.
pub fn monoid_object_from_json(v: &Value, amb: Ambient) -> Result<(MonoidObject, Option<Mor>)> {
    let m = MonoidObject {
        carrier: as_usize(field(v, "carrier")?, "carrier")?,
        mult: mor_from_json(field(v, "mult")?, Some(amb))?,
        unit: mor_from_json(field(v, "unit")?, Some(amb))?,
    };
    let w = v.get("witness").map(|w| mor_from_json(w, Some(amb))).transpose()?;
    Ok((m, w))
}

pub fn monoid_object_to_json(m: &MonoidObject) -> Value {
    json!({"carrier": m.carrier, "mult": mor_to_json(&m.mult), "unit": mor_to_json(&m.unit)})
}

/// Builds the comonoid named by a document: explicit data, a group table
/// (function coalgebra), or a point `{"dim2_family": x}`.
pub fn comonoid_from_doc(doc: &Value) -> Result<ComonoidData> {
    if let Some(c) = doc.get("comonoid") {
        return comonoid_from_json(c, None);
    }
    if let Some(t) = doc.get("group_table") {
        return comonoid::function_coalgebra(&group_table_from_json(t)?);
    }
    if let Some(x) = doc.get("dim2_family") {
        return Ok(comonoid::dim2_family(&rat_from_json(x)?));
    }
    Err(bad("expected \"comonoid\", \"group_table\" or \"dim2_family\""))
}

fn first_ambient(v: &Value) -> Option<Ambient> {
    match v {
        Value::Object(m) => {
            if let Some(a) = m.get("ambient").and_then(Value::as_str) {
                return Ambient::parse(a).ok();
            }
            m.values().find_map(first_ambient)
        }
        Value::Array(a) => a.iter().find_map(first_ambient),
        _ => None,
    }
}

/// The ambient a document talks about: graphs and preorders are FinSet,
/// otherwise the first ambient named anywhere in it.
pub fn doc_ambient(doc: &Value) -> Result<Ambient> {
    if let Some(a) = doc.get("c_category").and_then(|c| c.get("ambient")) {
        return ambient_from_json(a);
    }
    if doc.get("graph").is_some() || doc.get("preorder").is_some() || doc.get("vertices").is_some() {
        return Ok(Ambient::FinSet);
    }
    first_ambient(doc).ok_or_else(|| Error::Malformed("no ambient category named in the input".into()))
}

pub fn ccat_from_doc(doc: &Value) -> Result<CCategory> {
    ccat_from_json(doc.get("c_category"), doc_ambient(doc)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q_frac;

    #[test]
    fn rationals() {
        assert_eq!(rat_from_json(&json!(3)).unwrap(), q(3));
        assert_eq!(rat_from_json(&json!("-6/4")).unwrap(), q_frac(-3, 2));
        assert_eq!(rat_to_json(&q_frac(-3, 2)), json!("-3/2"));
        assert_eq!(rat_to_json(&q(4)), json!("4"));
        assert!(rat_from_json(&json!("1/0")).is_err());
        assert!(rat_from_json(&json!(0.5)).is_err());
    }

    #[test]
    fn morphism_round_trip() {
        let o = |n| Ambient::FinVectSum.obj(n);
        let m = Mor::matrix(o(2), o(1), Matrix::from_rows(vec![vec![q_frac(1, 3), q(-2)]], 2)).unwrap();
        assert_eq!(mor_from_json(&mor_to_json(&m), None).unwrap(), m);
        let z = Mor::matrix(o(0), o(2), Matrix::zeros(2, 0)).unwrap();
        assert_eq!(mor_from_json(&mor_to_json(&z), None).unwrap(), z);
        let t = Mor::table(Ambient::FinSet.obj(3), Ambient::FinSet.obj(2), vec![1, 0, 1]).unwrap();
        assert_eq!(mor_from_json(&mor_to_json(&t), None).unwrap(), t);
        let bad_shape = json!({"ambient": "finvect_sum", "dom": 2, "cod": 1, "matrix": [["1"]]});
        assert!(matches!(mor_from_json(&bad_shape, None), Err(Error::Malformed(_))));
    }

    #[test]
    fn triple_round_trip() {
        let v = json!({"ambient": "finvect_tensor", "universe": [1, 2, 4], "scalar": "2"});
        let t = triple_from_json(&v, None, 0).unwrap();
        assert_eq!(triple_from_json(&triple_to_json(&t), None, 0).unwrap(), t);
        let perm = json!({"ambient": "finvect_tensor", "universe": [1, 2], "action": [1, 0]});
        assert!(matches!(triple_from_json(&perm, None, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn graph_base() {
        let g = json!({"edges": [[0, 1], [1, 2]]});
        assert_eq!(graph_from_json(&g, Some(3)).unwrap().image().unwrap(), vec![(0, 1), (1, 2)]);
        assert!(graph_from_json(&g, None).is_err());
        assert!(graph_from_json(&json!({"vertices": 2, "edges": [[0, 1]]}), Some(3)).is_err());
    }
}
