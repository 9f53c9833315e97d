//! A symmetric monoidal category equipped with a chosen commutative comonoid
//! on every object, compatible with the tensor and natural in morphisms.

use std::collections::BTreeMap;

use crate::category::{compose_all, tensor, Ambient, Mor, Obj};
use crate::comonoid::{self, ComonoidData};
use crate::error::{Error, Result};
use crate::monoidal::{MonoidalStructure, Universe};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    /// Diagonal copying in FinSet and FinVectSum.
    Canonical,
    /// `eᵢ ↦ eᵢ⊗eᵢ` on every FinVectTensor object.
    GroupLike,
    Table(BTreeMap<usize, ComonoidData>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCategory {
    pub structure: MonoidalStructure,
    pub assignment: Assignment,
}

impl CCategory {
    pub fn new(structure: MonoidalStructure, assignment: Assignment) -> Result<Self> {
        let amb = structure.ambient();
        match &assignment {
            Assignment::Canonical if amb == Ambient::FinVectTensor => {
                return Err(Error::Unsupported("finvect_tensor has no canonical comonoids; use group-like or a table".into()))
            }
            Assignment::GroupLike if amb != Ambient::FinVectTensor => {
                return Err(Error::Unsupported("group-like assignment is for finvect_tensor".into()))
            }
            Assignment::Table(t) => {
                for (&n, c) in t {
                    if c.carrier != amb.obj(n) {
                        return Err(Error::Shape(format!("assignment for {n} has carrier {}", c.carrier)));
                    }
                }
            }
            _ => {}
        }
        Ok(CCategory { structure, assignment })
    }

    /// The canonical instance on FinSet or FinVectSum, group-like on FinVectTensor.
    pub fn standard(ambient: Ambient) -> Self {
        let assignment = match ambient {
            Ambient::FinVectTensor => Assignment::GroupLike,
            _ => Assignment::Canonical,
        };
        CCategory { structure: MonoidalStructure::builtin(ambient), assignment }
    }

    pub fn ambient(&self) -> Ambient {
        self.structure.ambient()
    }

    pub fn obj(&self, n: usize) -> Obj {
        self.ambient().obj(n)
    }

    pub fn comonoid(&self, n: usize) -> Result<ComonoidData> {
        match &self.assignment {
            Assignment::Canonical => comonoid::diagonal(self.obj(n)),
            Assignment::GroupLike => comonoid::grouplike(n),
            Assignment::Table(t) => t
                .get(&n)
                .cloned()
                .ok_or_else(|| Error::MissingComponent { kind: "comonoid".into(), objs: format!("({n})") }),
        }
    }

    pub fn delta(&self, n: usize) -> Result<Mor> {
        Ok(self.comonoid(n)?.delta)
    }

    pub fn epsilon(&self, n: usize) -> Result<Mor> {
        Ok(self.comonoid(n)?.epsilon)
    }

    /// The comonoid induced on `A⊗B`:
    /// `δ = α∘(1⊗α⁻¹)∘(1⊗(σ⊗1))∘(1⊗α)∘α⁻¹∘(δ_A⊗δ_B)`, `ε = β_e∘(ε_A⊗ε_B)`.
    pub fn product_comonoid(&self, a: usize, b: usize) -> Result<ComonoidData> {
        let s = &self.structure;
        let t = |x, y| s.t(x, y);
        let (ca, cb) = (self.comonoid(a)?, self.comonoid(b)?);
        let (ia, ib) = (s.id(a), s.id(b));
        let delta = compose_all(&[
            &s.alpha(a, b, t(a, b))?,
            &tensor(&ia, &s.alpha_inv(b, a, b)?)?,
            &tensor(&ia, &tensor(&s.sigma(a, b)?, &ib)?)?,
            &tensor(&ia, &s.alpha(a, b, b)?)?,
            &s.alpha_inv(a, a, t(b, b))?,
            &tensor(&ca.delta, &cb.delta)?,
        ])?;
        let epsilon = s.beta(s.e())?.after(&tensor(&ca.epsilon, &cb.epsilon)?)?;
        ComonoidData::new(self.obj(t(a, b)), delta, epsilon)
    }

    /// Whether `f` commutes with the chosen coproducts and counits.
    pub fn is_arrow(&self, f: &Mor) -> Result<bool> {
        let (a, b) = (f.dom().size, f.cod().size);
        let (ca, cb) = (self.comonoid(a)?, self.comonoid(b)?);
        Ok(cb.delta.after(f)? == tensor(f, f)?.after(&ca.delta)? && cb.epsilon.after(f)? == ca.epsilon)
    }

    /// `is_arrow` for a map into `A⊗A`, using the induced product comonoid on
    /// the codomain.
    pub fn is_arrow_into_square(&self, f: &Mor, a: usize) -> Result<bool> {
        let ca = self.comonoid(f.dom().size)?;
        let sq = self.product_comonoid(a, a)?;
        if f.cod() != sq.carrier {
            return Err(Error::Shape(format!("{f} does not land in {a}⊗{a}")));
        }
        Ok(sq.delta.after(f)? == tensor(f, f)?.after(&ca.delta)? && sq.epsilon.after(f)? == ca.epsilon)
    }
}

pub fn check_c_category(cc: &CCategory, u: &Universe, generators: &[Mor]) -> Result<Report> {
    if u.ambient() != cc.ambient() {
        return Err(Error::Ambient("universe and category live in different ambients".into()));
    }
    let s = &cc.structure;
    let mut rep = Report::new(format!("C-category on {}", cc.ambient().name()));
    for law in [
        "coassociativity",
        "left_counit",
        "right_counit",
        "sigma_commutative",
        "product_delta",
        "product_epsilon",
        "naturality_delta",
        "naturality_epsilon",
    ] {
        rep.declare(law);
    }
    let sizes = u.sizes();
    for &x in &sizes {
        if !u.admit(&[s.t(x, x), s.t(s.t(x, x), x)], "comonoid laws")? {
            continue;
        }
        let c = cc.comonoid(x)?;
        let laws = comonoid::check_comonoid_in(s, &c)?;
        for ch in laws.checks {
            rep.record(&ch.law, ch.passed, || format!("object {x}"));
        }
        let comm = comonoid::is_sigma_commutative_in(s, &c)?;
        rep.record("sigma_commutative", comm, || format!("object {x}"));
    }
    for &a in &sizes {
        for &b in &sizes {
            let ab = s.t(a, b);
            let need = [ab, s.t(ab, ab), s.t(a, a), s.t(b, b), s.t(b, a), s.t(a, s.t(b, b)), s.t(s.t(a, b), b)];
            if !u.admit(&need, "product laws")? {
                continue;
            }
            let induced = cc.product_comonoid(a, b)?;
            let assigned = cc.comonoid(ab)?;
            rep.record("product_delta", induced.delta == assigned.delta, || format!("pair ({a},{b})"));
            rep.record("product_epsilon", induced.epsilon == assigned.epsilon, || format!("pair ({a},{b})"));
        }
    }
    for (gi, f) in generators.iter().enumerate() {
        if f.ambient() != cc.ambient() {
            return Err(Error::Ambient(format!("generator {gi} is not in {}", cc.ambient().name())));
        }
        let (a, b) = (f.dom().size, f.cod().size);
        if !u.contains(a) || !u.contains(b) || !u.admit(&[s.t(a, a), s.t(b, b)], "naturality")? {
            continue;
        }
        let (ca, cb) = (cc.comonoid(a)?, cc.comonoid(b)?);
        let lhs = cb.delta.after(f)?;
        let rhs = tensor(f, f)?.after(&ca.delta)?;
        rep.record("naturality_delta", lhs == rhs, || format!("generator {gi} ({f})"));
        rep.record("naturality_epsilon", cb.epsilon.after(f)? == ca.epsilon, || format!("generator {gi} ({f})"));
    }
    Ok(rep)
}
