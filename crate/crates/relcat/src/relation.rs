//! Relations `r: B → A⊗A` and the equivalent A-A bicomodules, with the
//! translations between them and the reversal involution.

use crate::category::{compose_all, tensor, Ambient, Mor, Obj};
use crate::ccat::CCategory;
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub base: Obj,
    pub dom: Obj,
    pub arrow: Mor,
}

impl Relation {
    /// Validates the shape and that the arrow respects the chosen comonoids.
    pub fn new(cc: &CCategory, base: Obj, arrow: Mor) -> Result<Self> {
        let r = Relation::unchecked(base, arrow)?;
        if r.base.ambient != cc.ambient() {
            return Err(Error::Ambient("relation and category live in different ambients".into()));
        }
        if r.base.ambient == Ambient::FinVectTensor && !cc.is_arrow_into_square(&r.arrow, base.size)? {
            return Err(Error::Shape("arrow does not commute with the coproducts and counits".into()));
        }
        Ok(r)
    }

    /// Shape check only.
    pub fn unchecked(base: Obj, arrow: Mor) -> Result<Self> {
        let sq = base.tensor(base)?;
        if arrow.cod() != sq {
            return Err(Error::Shape(format!("relation arrow must land in {base}⊗{base} = {sq}, got {}", arrow.cod())));
        }
        Ok(Relation { base, dom: arrow.dom(), arrow })
    }

    /// The inclusion relation of a directed graph on `vertices` points, one
    /// arrow per listed edge.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let a = Ambient::FinSet.obj(vertices);
        for &(s, t) in edges {
            if s >= vertices || t >= vertices {
                return Err(Error::Shape(format!("edge ({s},{t}) leaves the {vertices} vertices")));
            }
        }
        let table = edges.iter().map(|&(s, t)| s * vertices + t).collect();
        let arrow = Mor::table(Ambient::FinSet.obj(edges.len()), a.tensor(a)?, table)?;
        Relation::unchecked(a, arrow)
    }

    /// Source/target pairs of a FinSet relation.
    pub fn edges(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.base.size;
        self.arrow.as_table().map(|t| t.iter().map(|&v| (v / n, v % n)).collect())
    }

    /// Distinct pairs in the image, sorted.
    pub fn image(&self) -> Option<Vec<(usize, usize)>> {
        self.edges().map(|mut e| {
            e.sort_unstable();
            e.dedup();
            e
        })
    }

    pub fn ambient(&self) -> Ambient {
        self.base.ambient
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicomodule {
    pub base: Obj,
    pub carrier: Obj,
    pub left: Mor,
    pub right: Mor,
}

impl Bicomodule {
    pub fn new(base: Obj, left: Mor, right: Mor) -> Result<Self> {
        let carrier = left.dom();
        if right.dom() != carrier {
            return Err(Error::Shape("left and right coactions have different domains".into()));
        }
        if left.cod() != base.tensor(carrier)? || right.cod() != carrier.tensor(base)? {
            return Err(Error::Shape(format!("coactions must land in {base}⊗{carrier} and {carrier}⊗{base}")));
        }
        Ok(Bicomodule { base, carrier, left, right })
    }

    pub fn ambient(&self) -> Ambient {
        self.base.ambient
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelMorphism {
    pub from: Relation,
    pub to: Relation,
    pub map: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleMorphism {
    pub from: Bicomodule,
    pub to: Bicomodule,
    pub map: Mor,
}

fn same_base(a: Obj, b: Obj) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{} vs {}", a, b)))
    }
}

/// The relation `δ_A` itself, the unit for composition.
pub fn unit_relation(cc: &CCategory, a: usize) -> Result<Relation> {
    Relation::unchecked(cc.obj(a), cc.delta(a)?)
}

/// The bicomodule `{δ_A, δ_A}`.
pub fn unit_bicomodule(cc: &CCategory, a: usize) -> Result<Bicomodule> {
    let d = cc.delta(a)?;
    Bicomodule::new(cc.obj(a), d.clone(), d)
}

/// Coactions from a relation:
/// `δˡ = (γ_A⊗1)∘((1⊗ε_A)⊗1)∘(r⊗1)∘δ_B`, `δʳ = (1⊗β_A)∘(1⊗(ε_A⊗1))∘(1⊗r)∘δ_B`.
pub fn phi(cc: &CCategory, r: &Relation) -> Result<Bicomodule> {
    let s = &cc.structure;
    let (a, b) = (r.base.size, r.dom.size);
    let (ia, ib) = (s.id(a), s.id(b));
    let ea = cc.epsilon(a)?;
    let db = cc.delta(b)?;
    let left = compose_all(&[
        &tensor(&s.gamma(a)?, &ib)?,
        &tensor(&tensor(&ia, &ea)?, &ib)?,
        &tensor(&r.arrow, &ib)?,
        &db,
    ])?;
    let right = compose_all(&[
        &tensor(&ib, &s.beta(a)?)?,
        &tensor(&ib, &tensor(&ea, &ia)?)?,
        &tensor(&ib, &r.arrow)?,
        &db,
    ])?;
    Bicomodule::new(r.base, left, right)
}

/// Relation from coactions: `r = (1⊗β_A)∘(1⊗(ε_B⊗1))∘(1⊗δʳ)∘δˡ`.
pub fn psi(cc: &CCategory, m: &Bicomodule) -> Result<Relation> {
    let rep = check_bicomodule(cc, m)?;
    if let Some(bad) = rep.failures().next() {
        return Err(Error::InvalidBicomodule(format!("{} fails: {}", bad.law, bad.witness.clone().unwrap_or_default())));
    }
    psi_unchecked(cc, m)
}

pub fn psi_unchecked(cc: &CCategory, m: &Bicomodule) -> Result<Relation> {
    let s = &cc.structure;
    let (a, b) = (m.base.size, m.carrier.size);
    let ia = s.id(a);
    let arrow = compose_all(&[
        &tensor(&ia, &s.beta(a)?)?,
        &tensor(&ia, &tensor(&cc.epsilon(b)?, &ia)?)?,
        &tensor(&ia, &m.right)?,
        &m.left,
    ])?;
    Relation::unchecked(m.base, arrow)
}

pub const BICOMODULE_LAWS: [&str; 5] = ["left_coassociative", "left_counit", "right_coassociative", "right_counit", "compatible"];

pub fn check_bicomodule(cc: &CCategory, m: &Bicomodule) -> Result<Report> {
    let s = &cc.structure;
    let (a, b) = (m.base.size, m.carrier.size);
    let (ia, ib) = (s.id(a), s.id(b));
    let (da, ea) = (cc.delta(a)?, cc.epsilon(a)?);
    let mut rep = Report::new(format!("bicomodule on carrier {} over {}", m.carrier, m.base));

    let lhs = tensor(&da, &ib)?.after(&m.left)?;
    let rhs = compose_all(&[&s.alpha(a, a, b)?, &tensor(&ia, &m.left)?, &m.left])?;
    rep.record(BICOMODULE_LAWS[0], lhs == rhs, || wit(&lhs, &rhs));

    let lhs = compose_all(&[&s.beta(b)?, &tensor(&ea, &ib)?, &m.left])?;
    rep.record(BICOMODULE_LAWS[1], lhs == ib, || wit(&lhs, &ib));

    let lhs = tensor(&m.right, &ia)?.after(&m.right)?;
    let rhs = compose_all(&[&s.alpha(b, a, a)?, &tensor(&ib, &da)?, &m.right])?;
    rep.record(BICOMODULE_LAWS[2], lhs == rhs, || wit(&lhs, &rhs));

    let lhs = compose_all(&[&s.gamma(b)?, &tensor(&ib, &ea)?, &m.right])?;
    rep.record(BICOMODULE_LAWS[3], lhs == ib, || wit(&lhs, &ib));

    let lhs = tensor(&m.left, &ia)?.after(&m.right)?;
    let rhs = compose_all(&[&s.alpha(a, b, a)?, &tensor(&ia, &m.right)?, &m.left])?;
    rep.record(BICOMODULE_LAWS[4], lhs == rhs, || wit(&lhs, &rhs));
    Ok(rep)
}

fn wit(l: &Mor, r: &Mor) -> String {
    l.first_difference(r).map_or_else(String::new, |i| format!("at element {i}"))
}

/// Reversal: `(δ*)ˡ = σ_{B,A}∘δʳ`, `(δ*)ʳ = σ_{A,B}∘δˡ`.
pub fn star(cc: &CCategory, m: &Bicomodule) -> Result<Bicomodule> {
    let s = &cc.structure;
    let (a, b) = (m.base.size, m.carrier.size);
    let left = s.sigma(b, a)?.after(&m.right)?;
    let right = s.sigma(a, b)?.after(&m.left)?;
    Bicomodule::new(m.base, left, right)
}

/// `r* = σ_{A,A}∘r`.
pub fn star_relation(cc: &CCategory, r: &Relation) -> Result<Relation> {
    let a = r.base.size;
    Relation::unchecked(r.base, cc.structure.sigma(a, a)?.after(&r.arrow)?)
}

impl RelMorphism {
    pub fn new(from: Relation, to: Relation, map: Mor) -> Result<Self> {
        same_base(from.base, to.base)?;
        if map.dom() != from.dom || map.cod() != to.dom {
            return Err(Error::Shape(format!("map must go {} → {}", from.dom, to.dom)));
        }
        Ok(RelMorphism { from, to, map })
    }

    /// `to.arrow ∘ map = from.arrow`.
    pub fn commutes(&self) -> Result<bool> {
        Ok(self.to.arrow.after(&self.map)? == self.from.arrow)
    }

    pub fn to_bicomodule_morphism(&self, cc: &CCategory) -> Result<BicomoduleMorphism> {
        Ok(BicomoduleMorphism { from: phi(cc, &self.from)?, to: phi(cc, &self.to)?, map: self.map.clone() })
    }
}

impl BicomoduleMorphism {
    pub fn new(from: Bicomodule, to: Bicomodule, map: Mor) -> Result<Self> {
        same_base(from.base, to.base)?;
        if map.dom() != from.carrier || map.cod() != to.carrier {
            return Err(Error::Shape(format!("map must go {} → {}", from.carrier, to.carrier)));
        }
        Ok(BicomoduleMorphism { from, to, map })
    }

    /// `(1⊗f)∘δˡ = γˡ∘f` and `(f⊗1)∘δʳ = γʳ∘f`.
    pub fn commutes(&self) -> Result<bool> {
        let ia = Mor::identity(self.from.base);
        let f = &self.map;
        let left = tensor(&ia, f)?.after(&self.from.left)? == self.to.left.after(f)?;
        let right = tensor(f, &ia)?.after(&self.from.right)? == self.to.right.after(f)?;
        Ok(left && right)
    }
}

/// Both readings of a relation morphism: the triangle and the two coaction
/// squares of the transported bicomodule morphism. They always agree.
pub fn check_rel_morphism(cc: &CCategory, m: &RelMorphism) -> Result<(bool, bool)> {
    Ok((m.commutes()?, m.to_bicomodule_morphism(cc)?.commutes()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{q, Matrix};

    fn sets() -> CCategory {
        CCategory::standard(Ambient::FinSet)
    }

    #[test]
    fn phi_on_a_small_graph() {
        let cc = sets();
        let r = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let m = phi(&cc, &r).unwrap();
        // left(b) = (source, b) as source·2 + b; right(b) = (b, target) as b·3 + target
        assert_eq!(m.left.as_table().unwrap(), &[0, 3]);
        assert_eq!(m.right.as_table().unwrap(), &[1, 5]);
        assert!(check_bicomodule(&cc, &m).unwrap().passed());
        assert_eq!(psi(&cc, &m).unwrap(), r);
    }

    #[test]
    fn unit_is_fixed() {
        let cc = sets();
        let a = unit_relation(&cc, 3).unwrap();
        let m = phi(&cc, &a).unwrap();
        assert_eq!(m, unit_bicomodule(&cc, 3).unwrap());
        assert_eq!(psi(&cc, &m).unwrap(), a);
        assert_eq!(star(&cc, &m).unwrap(), m);
    }

    #[test]
    fn linear_graph_relation() {
        let cc = CCategory::standard(Ambient::FinVectSum);
        let o = |n| Ambient::FinVectSum.obj(n);
        let r = Relation::new(&cc, o(1), Mor::matrix(o(1), o(2), Matrix::from_rows(vec![vec![q(1)], vec![q(2)]], 1)).unwrap())
            .unwrap();
        let m = phi(&cc, &r).unwrap();
        assert_eq!(m.left.as_matrix().unwrap().column(0), vec![q(1), q(1)]);
        assert_eq!(m.right.as_matrix().unwrap().column(0), vec![q(1), q(2)]);
        assert!(check_bicomodule(&cc, &m).unwrap().passed());
        assert_eq!(psi(&cc, &m).unwrap(), r);
    }

    #[test]
    fn corrupted_coaction_is_rejected() {
        let cc = sets();
        let r = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut m = phi(&cc, &r).unwrap();
        // swap the two outputs of the left coaction
        m.left = Mor::table(m.carrier, m.left.cod(), vec![3, 0]).unwrap();
        let rep = check_bicomodule(&cc, &m).unwrap();
        assert_eq!(rep.law_passed("compatible"), Some(false));
        assert!(matches!(psi(&cc, &m), Err(Error::InvalidBicomodule(_))));
    }

    #[test]
    fn arbitrary_set_coactions() {
        let cc = sets();
        let (a, b) = (Ambient::FinSet.obj(2), Ambient::FinSet.obj(3));
        let f = [1, 0, 1];
        let k = [0, 0, 1];
        let left = Mor::table(b, Ambient::FinSet.obj(6), (0..3).map(|x| f[x] * 3 + x).collect()).unwrap();
        let right = Mor::table(b, Ambient::FinSet.obj(6), (0..3).map(|x| x * 2 + k[x]).collect()).unwrap();
        let m = Bicomodule::new(a, left, right).unwrap();
        assert!(check_bicomodule(&cc, &m).unwrap().passed());
        assert_eq!(psi(&cc, &m).unwrap().edges().unwrap(), vec![(1, 0), (0, 0), (1, 1)]);
    }

    #[test]
    fn reversal() {
        let cc = sets();
        let r = Relation::from_edges(2, &[(0, 1)]).unwrap();
        let rs = star_relation(&cc, &r).unwrap();
        assert_eq!(rs.edges().unwrap(), vec![(1, 0)]);
        let m = phi(&cc, &r).unwrap();
        assert_eq!(phi(&cc, &rs).unwrap(), star(&cc, &m).unwrap());
        assert_eq!(star(&cc, &star(&cc, &m).unwrap()).unwrap(), m);
    }

    #[test]
    fn morphisms_agree() {
        let cc = sets();
        let two = Relation::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let one = Relation::from_edges(2, &[(0, 1)]).unwrap();
        let fold = Mor::table(two.dom, one.dom, vec![0, 0]).unwrap();
        let m = RelMorphism::new(two.clone(), one.clone(), fold).unwrap();
        assert_eq!(check_rel_morphism(&cc, &m).unwrap(), (true, true));
        let id = RelMorphism::new(one.clone(), one.clone(), Mor::identity(one.dom)).unwrap();
        assert_eq!(check_rel_morphism(&cc, &id).unwrap(), (true, true));
        let other = Relation::from_edges(2, &[(1, 0)]).unwrap();
        let bad = RelMorphism::new(two, other, Mor::table(Ambient::FinSet.obj(2), Ambient::FinSet.obj(1), vec![0, 0]).unwrap())
            .unwrap();
        assert_eq!(check_rel_morphism(&cc, &bad).unwrap(), (false, false));
    }

    #[test]
    fn tensor_relations_need_natural_arrows() {
        let cc = CCategory::standard(Ambient::FinVectTensor);
        let o = |n| Ambient::FinVectTensor.obj(n);
        let good = Mor::matrix(o(1), o(4), Matrix::from_rows(vec![vec![q(0)], vec![q(1)], vec![q(0)], vec![q(0)]], 1)).unwrap();
        assert!(Relation::new(&cc, o(2), good).is_ok());
        let bad = Mor::matrix(o(1), o(4), Matrix::from_rows(vec![vec![q(1)], vec![q(1)], vec![q(0)], vec![q(0)]], 1)).unwrap();
        assert!(matches!(Relation::new(&cc, o(2), bad), Err(Error::Shape(_))));
    }
}
