//! Monoids in the category of relations: internal categories built from
//! preorders, their law checks, the search for a commutativity isomorphism,
//! and iterated composition of a graph with itself.

use std::collections::HashMap;

use crate::category::{Ambient, Mor};
use crate::ccat::CCategory;
use crate::error::{Error, Result};
use crate::products::{associator, left_unitor, odot, right_unitor, tensor_morphisms, tensor_relations, TensorResult};
use crate::relation::{phi, Relation};
use crate::report::Report;

/// A relation `r` with composition `μ: X_{r,r} → B` and identities `u: A → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelMonoid {
    pub rel: Relation,
    pub mu: Mor,
    pub unit: Mor,
}

impl RelMonoid {
    pub fn new(cc: &CCategory, rel: Relation, mu: Mor, unit: Mor) -> Result<Self> {
        let sq = composable(cc, &rel)?;
        if mu.dom() != sq.pi.dom() || mu.cod() != rel.dom {
            return Err(Error::Shape(format!("composition must go {} → {}", sq.pi.dom(), rel.dom)));
        }
        if unit.dom() != rel.base || unit.cod() != rel.dom {
            return Err(Error::Shape(format!("unit must go {} → {}", rel.base, rel.dom)));
        }
        Ok(RelMonoid { rel, mu, unit })
    }
}

/// The carrier of `r⊙r` with its inclusion.
pub fn composable(cc: &CCategory, r: &Relation) -> Result<TensorResult> {
    let d = phi(cc, r)?;
    tensor_relations(cc, &d, &d)
}

pub const MONOID_LAWS: [&str; 5] = ["mu_morphism", "unit_morphism", "associativity", "left_unit", "right_unit"];

pub fn check_rel_monoid(cc: &CCategory, m: &RelMonoid) -> Result<Report> {
    let mut rep = Report::new(format!("monoid on a relation with {} arrows", m.rel.dom.size));
    for law in MONOID_LAWS {
        rep.declare(law);
    }
    let d = phi(cc, &m.rel)?;
    let a = m.rel.base.size;
    let (rr, sq) = odot(cc, &m.rel, &m.rel)?;
    let lhs = m.rel.arrow.after(&m.mu)?;
    rep.record("mu_morphism", lhs == rr.arrow, || diff(&lhs, &rr.arrow));
    let lhs = m.rel.arrow.after(&m.unit)?;
    let da = cc.delta(a)?;
    rep.record("unit_morphism", lhs == da, || diff(&lhs, &da));
    if !rep.passed() {
        // The remaining laws only make sense for morphisms of relations.
        return Ok(rep);
    }
    let ib = Mor::identity(m.rel.dom);
    let asc = associator(cc, &d, &d, &d)?;
    let lhs = m.mu.after(&tensor_morphisms(&m.mu, &ib, &asc.target, &sq)?)?.after(&asc.map)?;
    let rhs = m.mu.after(&tensor_morphisms(&ib, &m.mu, &asc.source, &sq)?)?;
    rep.record("associativity", lhs == rhs, || diff(&lhs, &rhs));
    let (tl, l) = left_unitor(cc, &d)?;
    let lhs = m.mu.after(&tensor_morphisms(&m.unit, &ib, &tl, &sq)?)?;
    rep.record("left_unit", lhs == l, || diff(&lhs, &l));
    let (tr, r) = right_unitor(cc, &d)?;
    let lhs = m.mu.after(&tensor_morphisms(&ib, &m.unit, &tr, &sq)?)?;
    rep.record("right_unit", lhs == r, || diff(&lhs, &r));
    Ok(rep)
}

fn diff(l: &Mor, r: &Mor) -> String {
    l.first_difference(r).map_or_else(String::new, |i| format!("at element {i}"))
}

fn sorted_edges(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut e = edges.to_vec();
    e.sort_unstable();
    e.dedup();
    e
}

/// The internal category of a reflexive, transitive relation: arrows are the
/// listed pairs (sorted, without repeats), `μ((x,y),(y,z)) = (x,z)`, `u(x) = (x,x)`.
pub fn monoid_from_preorder(cc: &CCategory, vertices: usize, edges: &[(usize, usize)]) -> Result<RelMonoid> {
    if cc.ambient() != Ambient::FinSet {
        return Err(Error::Unsupported("preorder monoids live in finset".into()));
    }
    let edges = sorted_edges(edges);
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let rel = Relation::from_edges(vertices, &edges)?;
    for x in 0..vertices {
        if !index.contains_key(&(x, x)) {
            return Err(Error::NotReflexive(x));
        }
    }
    for &(x, y) in &edges {
        for &(y2, z) in &edges {
            if y == y2 && !index.contains_key(&(x, z)) {
                return Err(Error::NotTransitive(x, y, z));
            }
        }
    }
    let sq = composable(cc, &rel)?;
    let n = edges.len();
    let mu = sq
        .pi
        .as_table()
        .expect("finset")
        .iter()
        .map(|&v| {
            let ((x, _), (_, z)) = (edges[v / n], edges[v % n]);
            index[&(x, z)]
        })
        .collect();
    let mu = Mor::table(sq.pi.dom(), rel.dom, mu)?;
    let unit = Mor::table(rel.base, rel.dom, (0..vertices).map(|x| index[&(x, x)]).collect())?;
    RelMonoid::new(cc, rel, mu, unit)
}

/// Result of the commutativity search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutativity {
    /// `φ` as a table on the arrows, when one exists.
    pub witness: Option<Vec<usize>>,
    /// Found by reversing pairs rather than by search.
    pub by_reversal: bool,
    pub report: Report,
}

pub const DEFAULT_SEARCH_BOUND: usize = 8;

/// Looks for a bijection `φ` of the arrows with `source∘φ = target`,
/// `target∘φ = source`, `φ∘u = u` and `φ(μ(x,y)) = μ(φ(y), φ(x))`.
pub fn check_commutative(cc: &CCategory, m: &RelMonoid, bound: usize) -> Result<Commutativity> {
    if cc.ambient() != Ambient::FinSet {
        return Err(Error::Unsupported("commutativity search is implemented for finset".into()));
    }
    let n = m.rel.dom.size;
    let edges = m.rel.edges().expect("finset relation");
    let sq = composable(cc, &m.rel)?;
    let pairs: Vec<(usize, usize)> = sq.pi.as_table().expect("finset").iter().map(|&v| (v / n, v % n)).collect();
    let mu_tab = m.mu.as_table().ok_or_else(|| Error::Shape("composition must be a table".into()))?;
    let mu: HashMap<(usize, usize), usize> = pairs.iter().zip(mu_tab).map(|(&p, &v)| (p, v)).collect();
    let units: Vec<usize> = m.unit.as_table().ok_or_else(|| Error::Shape("unit must be a table".into()))?.to_vec();

    let valid = |phi: &[usize]| -> bool {
        (0..n).all(|b| edges[phi[b]] == (edges[b].1, edges[b].0))
            && units.iter().all(|&u| phi[u] == u)
            && pairs.iter().all(|&(x, y)| mu.get(&(phi[y], phi[x])).is_some_and(|&v| phi[mu[&(x, y)]] == v))
    };
    let mut report = Report::new("commutativity of a relation monoid");
    report.note("the isomorphism is required to fix identity arrows");

    let mut by_reversal = false;
    let mut witness = None;
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let is_subset = index.len() == n;
    if is_subset && edges.iter().all(|&(x, y)| index.contains_key(&(y, x))) {
        let phi: Vec<usize> = edges.iter().map(|&(x, y)| index[&(y, x)]).collect();
        if valid(&phi) {
            witness = Some(phi);
            by_reversal = true;
        }
    }
    if witness.is_none() {
        if n > bound {
            return Err(Error::BoundsExceeded(format!("{n} arrows exceed the search bound {bound}")));
        }
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|b| (0..n).filter(|&c| edges[c] == (edges[b].1, edges[b].0)).collect())
            .collect();
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        witness = search(0, &candidates, &units, &mut phi, &mut used, &valid);
    }
    report.record("witness_found", witness.is_some(), || "no isomorphism with the reversed monoid".into());
    if let Some(phi) = &witness {
        report.record("fixes_identities", units.iter().all(|&u| phi[u] == u), String::new);
    }
    Ok(Commutativity { witness, by_reversal, report })
}

fn search(
    b: usize,
    candidates: &[Vec<usize>],
    units: &[usize],
    phi: &mut Vec<usize>,
    used: &mut Vec<bool>,
    valid: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if b == candidates.len() {
        return valid(phi).then(|| phi.clone());
    }
    for &c in &candidates[b] {
        if used[c] || (units.contains(&b) && c != b) {
            continue;
        }
        phi[b] = c;
        used[c] = true;
        if let Some(w) = search(b + 1, candidates, units, phi, used, valid) {
            return Some(w);
        }
        used[c] = false;
    }
    phi[b] = usize::MAX;
    None
}

/// One stage of iterated composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub relation: Relation,
    /// Arrow indices of the original relation making up each carrier element.
    pub paths: Vec<Vec<usize>>,
    /// For each vertex, the carrier element that is its identity path.
    pub identities: Option<Vec<usize>>,
}

/// `[r, r⊙r, (r⊙r)⊙r, …]` up to `depth` stages, with carriers decoded into
/// arrow strings. A unit map `A → B` must satisfy `r∘u = δ_A`.
pub fn generate_category(cc: &CCategory, r: &Relation, unit: Option<&Mor>, depth: usize) -> Result<Vec<Stage>> {
    if cc.ambient() != Ambient::FinSet {
        return Err(Error::Unsupported("category generation is implemented for finset".into()));
    }
    if depth == 0 {
        return Err(Error::Malformed("depth must be at least 1".into()));
    }
    let units = match unit {
        Some(u) => {
            if u.dom() != r.base || u.cod() != r.dom || r.arrow.after(u)? != cc.delta(r.base.size)? {
                return Err(Error::InvalidUnitMap("r∘u differs from the diagonal".into()));
            }
            Some(u.as_table().expect("finset").to_vec())
        }
        None => None,
    };
    let identities_of = |paths: &[Vec<usize>], k: usize| -> Option<Vec<usize>> {
        units.as_ref().map(|us| {
            let index: HashMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            us.iter().map(|&u| index[&vec![u; k]]).collect()
        })
    };
    let paths: Vec<Vec<usize>> = (0..r.dom.size).map(|b| vec![b]).collect();
    let mut stages = vec![Stage { relation: r.clone(), identities: identities_of(&paths, 1), paths }];
    let e = r.dom.size;
    for k in 2..=depth {
        let prev = stages.last().expect("nonempty");
        let (next, t) = odot(cc, &prev.relation, r)?;
        let paths: Vec<Vec<usize>> = t
            .pi
            .as_table()
            .expect("finset")
            .iter()
            .map(|&v| {
                let mut p = prev.paths[v / e].clone();
                p.push(v % e);
                p
            })
            .collect();
        stages.push(Stage { relation: next, identities: identities_of(&paths, k), paths });
    }
    Ok(stages)
}
