//! Deformations of a symmetric monoidal structure by triples `(λ, μ, η)` of
//! invertible component families, the functors that carry them, and the
//! transport of monoids and comonoids along such functors.

use std::collections::BTreeMap;

use crate::category::{compose_all, tensor, Ambient, Mor};
use crate::error::{Error, Result};
use crate::monoidal::{check_symmetric_monoidal, Components, MonoidalStructure, Universe};
use crate::report::Report;

pub mod graded;

/// Components `λ_{X,Y}: X⊗Y → X⊗Y`, `μ_X: X → X` and `η: e → e` over a
/// finite universe, with the morphisms naturality is tested against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantTriple {
    pub universe: Universe,
    pub lambda: BTreeMap<(usize, usize), Mor>,
    pub mu: BTreeMap<usize, Mor>,
    pub eta: Mor,
    pub generators: Vec<Mor>,
}

fn expect_auto(m: &Mor, n: usize, ambient: Ambient, what: &str) -> Result<()> {
    if m.dom() != ambient.obj(n) || m.cod() != ambient.obj(n) {
        return Err(Error::Shape(format!("{what} must be an endomorphism of {n}, got {} → {}", m.dom(), m.cod())));
    }
    if !m.is_iso() {
        return Err(Error::Shape(format!("{what} is not invertible")));
    }
    Ok(())
}

impl QuantTriple {
    pub fn new(
        universe: Universe,
        lambda: BTreeMap<(usize, usize), Mor>,
        mu: BTreeMap<usize, Mor>,
        eta: Mor,
        generators: Vec<Mor>,
    ) -> Result<Self> {
        let amb = universe.ambient();
        for (x, y) in universe.pairs() {
            let l = lambda
                .get(&(x, y))
                .ok_or_else(|| Error::MissingComponent { kind: "lambda".into(), objs: format!("({x},{y})") })?;
            expect_auto(l, amb.tensor_size(x, y), amb, &format!("lambda at ({x},{y})"))?;
        }
        for x in universe.sizes() {
            let m = mu.get(&x).ok_or_else(|| Error::MissingComponent { kind: "mu".into(), objs: format!("({x})") })?;
            expect_auto(m, x, amb, &format!("mu at ({x})"))?;
        }
        expect_auto(&eta, amb.unit_size(), amb, "eta")?;
        for g in &generators {
            if g.ambient() != amb {
                return Err(Error::Ambient(format!("generator {g} is not in {}", amb.name())));
            }
        }
        Ok(QuantTriple { universe, lambda, mu, eta, generators })
    }

    pub fn identity(universe: Universe, generators: Vec<Mor>) -> Self {
        let amb = universe.ambient();
        let lambda = universe.pairs().into_iter().map(|(x, y)| ((x, y), Mor::identity(amb.obj(amb.tensor_size(x, y))))).collect();
        let mu = universe.sizes().into_iter().map(|x| (x, Mor::identity(amb.obj(x)))).collect();
        let eta = Mor::identity(amb.unit());
        QuantTriple { universe, lambda, mu, eta, generators }
    }

    /// `λ = c·1`, `μ = 1`, `η = 1`.
    pub fn scalar(universe: Universe, c: &crate::matrix::Q, generators: Vec<Mor>) -> Result<Self> {
        let mut t = QuantTriple::identity(universe, generators);
        for l in t.lambda.values_mut() {
            *l = l.scale(c)?;
        }
        QuantTriple::new(t.universe, t.lambda, t.mu, t.eta, t.generators)
    }

    pub fn ambient(&self) -> Ambient {
        self.universe.ambient()
    }

    pub fn lambda(&self, x: usize, y: usize) -> Result<Mor> {
        self.lambda
            .get(&(x, y))
            .cloned()
            .ok_or_else(|| Error::MissingComponent { kind: "lambda".into(), objs: format!("({x},{y})") })
    }

    pub fn mu(&self, x: usize) -> Result<Mor> {
        self.mu.get(&x).cloned().ok_or_else(|| Error::MissingComponent { kind: "mu".into(), objs: format!("({x})") })
    }

    /// Componentwise composite `self ∘ other`; acting by the result equals
    /// acting by `self` first and then by `other`.
    pub fn product(&self, other: &QuantTriple) -> Result<QuantTriple> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch("triples live on different universes".into()));
        }
        let lambda = self
            .lambda
            .iter()
            .map(|(k, l)| Ok((*k, l.after(&other.lambda[k])?)))
            .collect::<Result<_>>()?;
        let mu = self.mu.iter().map(|(k, m)| Ok((*k, m.after(&other.mu[k])?))).collect::<Result<_>>()?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().filter(|g| !self.generators.contains(g)).cloned());
        QuantTriple::new(self.universe.clone(), lambda, mu, self.eta.after(&other.eta)?, generators)
    }

    fn pool(&self) -> Vec<(String, Mor)> {
        let mut pool: Vec<(String, Mor)> = self
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| self.universe.contains(g.dom().size) && self.universe.contains(g.cod().size))
            .map(|(i, g)| (format!("generator {i} ({g})"), g.clone()))
            .collect();
        pool.extend(self.universe.objs().into_iter().map(|o| (format!("identity on {o}"), Mor::identity(o))));
        pool
    }
}

pub const H_LAWS: [&str; 7] = [
    "naturality_lambda",
    "naturality_mu",
    "naturality_eta",
    "mu_involution",
    "mu_unit_right",
    "mu_unit_left",
    "eta_fixed",
];

/// Naturality over the generators and the relations cutting out the subgroup
/// (trivial involution): `μ∘μ = 1`, `μ_{X⊗e} = μ_X⊗1`, `μ_{e⊗X} = 1⊗μ_X`,
/// `η = μ_e∘η`.
pub fn check_h_membership(t: &QuantTriple) -> Result<Report> {
    let u = &t.universe;
    let amb = t.ambient();
    let e = amb.unit_size();
    let mut rep = Report::new("subgroup membership of a quantization triple");
    for law in H_LAWS {
        rep.declare(law);
    }
    let pool = t.pool();
    for (fname, f) in &pool {
        let (a, b) = (f.dom().size, f.cod().size);
        let lhs = t.mu(b)?.after(f)?;
        let rhs = f.after(&t.mu(a)?)?;
        rep.record("naturality_mu", lhs == rhs, || fname.clone());
        if a == e && b == e {
            rep.record("naturality_eta", f.after(&t.eta)? == t.eta.after(f)?, || fname.clone());
        }
        for (gname, g) in &pool {
            let (c, d) = (g.dom().size, g.cod().size);
            if !u.contains(amb.tensor_size(a, c)) || !u.contains(amb.tensor_size(b, d)) {
                continue;
            }
            let fg = tensor(f, g)?;
            let lhs = t.lambda(b, d)?.after(&fg)?;
            let rhs = fg.after(&t.lambda(a, c)?)?;
            rep.record("naturality_lambda", lhs == rhs, || format!("{fname} with {gname}"));
        }
    }
    let ie = Mor::identity(amb.unit());
    for x in u.sizes() {
        let m = t.mu(x)?;
        rep.record("mu_involution", m.after(&m)? == Mor::identity(m.dom()), || format!("object {x}"));
        let xe = amb.tensor_size(x, e);
        rep.record("mu_unit_right", t.mu(xe)? == tensor(&m, &ie)?, || format!("object {x}"));
        let ex = amb.tensor_size(e, x);
        rep.record("mu_unit_left", t.mu(ex)? == tensor(&ie, &m)?, || format!("object {x}"));
    }
    rep.record("eta_fixed", t.mu(e)?.after(&t.eta)? == t.eta, || "mu at the unit moves eta".into());
    Ok(rep)
}

/// The functor part of a quantized functor: identity on objects, and on
/// morphisms either the identity or conjugation `f ↦ P_cod∘f∘P_dom⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorAction {
    Identity,
    Conjugate(BTreeMap<usize, Mor>),
}

impl FunctorAction {
    pub fn apply(&self, f: &Mor) -> Result<Mor> {
        match self {
            FunctorAction::Identity => Ok(f.clone()),
            FunctorAction::Conjugate(p) => {
                let get = |n: usize| {
                    p.get(&n).ok_or_else(|| Error::MissingComponent { kind: "functor".into(), objs: format!("({n})") })
                };
                compose_all(&[get(f.cod().size)?, f, &get(f.dom().size)?.inverse()?])
            }
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &FunctorAction) -> Result<FunctorAction> {
        match (self, inner) {
            (FunctorAction::Identity, x) | (x, FunctorAction::Identity) => Ok(x.clone()),
            (FunctorAction::Conjugate(p), FunctorAction::Conjugate(q)) => {
                let mut out = BTreeMap::new();
                for (n, qm) in q {
                    let pm = p.get(n).ok_or_else(|| Error::UniverseMismatch(format!("object {n} missing")))?;
                    out.insert(*n, pm.after(qm)?);
                }
                Ok(FunctorAction::Conjugate(out))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    pub action: FunctorAction,
    pub triple: QuantTriple,
}

impl FunctorData {
    pub fn identity_functor(triple: QuantTriple) -> Self {
        FunctorData { action: FunctorAction::Identity, triple }
    }

    pub fn apply(&self, f: &Mor) -> Result<Mor> {
        self.action.apply(f)
    }
}

/// The structure on the target making `fd` a quantized functor out of `s`:
/// `α' = (λ⁻¹⊗1)∘λ⁻¹∘F(α)∘λ∘(1⊗λ)`, `β'_Y = F(β_Y)∘λ_{e,Y}∘(η⊗1)`,
/// `γ'_X = F(γ_X)∘λ_{X,e}∘(1⊗η)`, `σ' = (μ_Y⁻¹⊗μ_X⁻¹)∘λ⁻¹_{Y,X}∘μ_{Y⊗X}∘F(σ)∘λ_{X,Y}`.
pub fn transport_components(s: &MonoidalStructure, fd: &FunctorData) -> Result<MonoidalStructure> {
    let t = &fd.triple;
    let u = &t.universe;
    if s.ambient() != t.ambient() {
        return Err(Error::Ambient("triple and structure live in different ambients".into()));
    }
    let f = |m: &Mor| fd.apply(m);
    let tz = |a, b| s.t(a, b);
    let id = |n| s.id(n);
    let e = s.e();
    let mut c = Components::default();
    for (x, y, z) in u.triples() {
        let m = compose_all(&[
            &tensor(&t.lambda(x, y)?.inverse()?, &id(z))?,
            &t.lambda(tz(x, y), z)?.inverse()?,
            &f(&s.alpha(x, y, z)?)?,
            &t.lambda(x, tz(y, z))?,
            &tensor(&id(x), &t.lambda(y, z)?)?,
        ])?;
        c.alpha.insert((x, y, z), m);
    }
    for x in u.sizes() {
        let b = compose_all(&[&f(&s.beta(x)?)?, &t.lambda(e, x)?, &tensor(&t.eta, &id(x))?])?;
        c.beta.insert(x, b);
        let g = compose_all(&[&f(&s.gamma(x)?)?, &t.lambda(x, e)?, &tensor(&id(x), &t.eta)?])?;
        c.gamma.insert(x, g);
    }
    for (x, y) in u.pairs() {
        let m = compose_all(&[
            &tensor(&t.mu(y)?.inverse()?, &t.mu(x)?.inverse()?)?,
            &t.lambda(y, x)?.inverse()?,
            &t.mu(tz(y, x))?,
            &f(&s.sigma(x, y)?)?,
            &t.lambda(x, y)?,
        ])?;
        c.sigma.insert((x, y), m);
    }
    MonoidalStructure::with_tables(s.ambient(), c, true)
}

/// The action of a subgroup element on a symmetric monoidal structure. The
/// triple must pass [`check_h_membership`]; when the input structure passes
/// the law checker, so must the output.
pub fn hat_transform(s: &MonoidalStructure, t: &QuantTriple) -> Result<MonoidalStructure> {
    let h = check_h_membership(t)?;
    if let Some(bad) = h.failures().next() {
        return Err(Error::NotInSubgroup(format!("{} fails at {}", bad.law, bad.witness.clone().unwrap_or_default())));
    }
    let out = transport_components(s, &FunctorData::identity_functor(t.clone()))?;
    let before = check_symmetric_monoidal(s, &t.universe, &t.generators)?;
    if before.passed() {
        let after = check_symmetric_monoidal(&out, &t.universe, &t.generators)?;
        if let Some(bad) = after.failures().next() {
            return Err(Error::TheoremViolation(format!(
                "transformed structure fails {} at {}",
                bad.law,
                bad.witness.clone().unwrap_or_default()
            )));
        };
    }
    Ok(out)
}

pub const FUNCTOR_LAWS: [&str; 7] =
    ["alpha", "beta", "gamma", "sigma", "mu_involution", "naturality_lambda", "naturality_mu"];

/// The object-level equations of a quantized functor from `s1` to `s2`.
pub fn check_quantized_functor(fd: &FunctorData, s1: &MonoidalStructure, s2: &MonoidalStructure) -> Result<Report> {
    let t = &fd.triple;
    let u = &t.universe;
    let mut rep = Report::new("quantized functor");
    for law in FUNCTOR_LAWS {
        rep.declare(law);
    }
    let f = |m: &Mor| fd.apply(m);
    let tz = |a, b| s1.t(a, b);
    let id = |n| s1.id(n);
    let e = s1.e();
    for (x, y, z) in u.triples() {
        // F(α₁)∘λ_{X,YZ}∘(1⊗λ_{Y,Z}) = λ_{XY,Z}∘(λ_{X,Y}⊗1)∘α₂
        let lhs = compose_all(&[&f(&s1.alpha(x, y, z)?)?, &t.lambda(x, tz(y, z))?, &tensor(&id(x), &t.lambda(y, z)?)?])?;
        let rhs = compose_all(&[&t.lambda(tz(x, y), z)?, &tensor(&t.lambda(x, y)?, &id(z))?, &s2.alpha(x, y, z)?])?;
        rep.record("alpha", lhs == rhs, || format!("({x},{y},{z})"));
    }
    for x in u.sizes() {
        let rhs = compose_all(&[&f(&s1.beta(x)?)?, &t.lambda(e, x)?, &tensor(&t.eta, &id(x))?])?;
        rep.record("beta", s2.beta(x)? == rhs, || format!("({x})"));
        let rhs = compose_all(&[&f(&s1.gamma(x)?)?, &t.lambda(x, e)?, &tensor(&id(x), &t.eta)?])?;
        rep.record("gamma", s2.gamma(x)? == rhs, || format!("({x})"));
        let m = t.mu(x)?;
        rep.record("mu_involution", m.after(&m)? == id(x), || format!("({x})"));
    }
    for (x, y) in u.pairs() {
        // λ_{Y,X}∘(μ_Y⊗μ_X)∘σ₂ = μ_{Y⊗X}∘F(σ₁)∘λ_{X,Y}
        let lhs = compose_all(&[&t.lambda(y, x)?, &tensor(&t.mu(y)?, &t.mu(x)?)?, &s2.sigma(x, y)?])?;
        let rhs = compose_all(&[&t.mu(tz(y, x))?, &f(&s1.sigma(x, y)?)?, &t.lambda(x, y)?])?;
        rep.record("sigma", lhs == rhs, || format!("({x},{y})"));
    }
    let pool = t.pool();
    for (fname, g) in &pool {
        let (a, b) = (g.dom().size, g.cod().size);
        let lhs = t.mu(b)?.after(&f(g)?)?;
        let rhs = f(g)?.after(&t.mu(a)?)?;
        rep.record("naturality_mu", lhs == rhs, || fname.clone());
        for (hname, h) in &pool {
            let (c, d) = (h.dom().size, h.cod().size);
            if !u.contains(tz(a, c)) || !u.contains(tz(b, d)) {
                continue;
            }
            let lhs = t.lambda(b, d)?.after(&tensor(&f(g)?, &f(h)?)?)?;
            let rhs = f(&tensor(g, h)?)?.after(&t.lambda(a, c)?)?;
            rep.record("naturality_lambda", lhs == rhs, || format!("{fname} with {hname}"));
        }
    }
    Ok(rep)
}

/// `G∘F` with `λ = G(λ_F)∘λ_G`, `μ = μ_G∘G(μ_F)`, `η = G(η_F)∘η_G`.
pub fn compose_quantized(g: &FunctorData, f: &FunctorData) -> Result<FunctorData> {
    let (tg, tf) = (&g.triple, &f.triple);
    if tg.universe != tf.universe {
        return Err(Error::UniverseMismatch("the functors act on different universes".into()));
    }
    let lambda = tf
        .lambda
        .iter()
        .map(|(k, l)| Ok((*k, g.apply(l)?.after(&tg.lambda(k.0, k.1)?)?)))
        .collect::<Result<_>>()?;
    let mu = tf.mu.iter().map(|(k, m)| Ok((*k, tg.mu(*k)?.after(&g.apply(m)?)?))).collect::<Result<_>>()?;
    let eta = g.apply(&tf.eta)?.after(&tg.eta)?;
    let mut generators = tf.generators.clone();
    generators.extend(tg.generators.iter().filter(|x| !tf.generators.contains(x)).cloned());
    let triple = QuantTriple::new(tf.universe.clone(), lambda, mu, eta, generators)?;
    Ok(FunctorData { action: g.action.after(&f.action)?, triple })
}

/// A monoid object `(X, ν: X⊗X → X, u: e → X)` in a monoidal structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidObject {
    pub carrier: usize,
    pub mult: Mor,
    pub unit: Mor,
}

pub fn check_monoid(s: &MonoidalStructure, m: &MonoidObject) -> Result<Report> {
    let x = m.carrier;
    let ix = s.id(x);
    let mut rep = Report::new(format!("monoid on {x}"));
    let lhs = m.mult.after(&tensor(&ix, &m.mult)?)?;
    let rhs = compose_all(&[&m.mult, &tensor(&m.mult, &ix)?, &s.alpha(x, x, x)?])?;
    rep.record("associativity", lhs == rhs, || "ν∘(1⊗ν) ≠ ν∘(ν⊗1)∘α".into());
    let lhs = m.mult.after(&tensor(&m.unit, &ix)?)?;
    rep.record("left_unit", lhs == s.beta(x)?, || "ν∘(u⊗1) ≠ β".into());
    let lhs = m.mult.after(&tensor(&ix, &m.unit)?)?;
    rep.record("right_unit", lhs == s.gamma(x)?, || "ν∘(1⊗u) ≠ γ".into());
    Ok(rep)
}

/// `φ∘ν∘σ_{X,X} = ν∘(φ⊗φ)` and `φ∘u = u` for an automorphism `φ`.
pub fn check_commutativity_witness(s: &MonoidalStructure, m: &MonoidObject, phi: &Mor) -> Result<Report> {
    let x = m.carrier;
    let mut rep = Report::new(format!("commutativity witness on {x}"));
    rep.record("witness_iso", phi.is_iso(), || "not invertible".into());
    let lhs = compose_all(&[phi, &m.mult, &s.sigma(x, x)?])?;
    let rhs = m.mult.after(&tensor(phi, phi)?)?;
    rep.record("witness_commutes", lhs == rhs, || "φ∘ν∘σ ≠ ν∘(φ⊗φ)".into());
    rep.record("witness_unit", phi.after(&m.unit)? == m.unit, || "φ∘u ≠ u".into());
    Ok(rep)
}

#[derive(Clone, Debug)]
pub struct TransportedMonoid {
    pub monoid: MonoidObject,
    pub witness: Option<Mor>,
    pub report: Report,
}

/// Carries a monoid along a quantized functor: `ν' = F(ν)∘λ_{X,X}`,
/// `u' = F(u)∘η`, and a commutativity witness to `F(φ)∘μ_X`. The report
/// checks the transported data against the transported structure.
pub fn quantize_monoid(
    s: &MonoidalStructure,
    m: &MonoidObject,
    phi: Option<&Mor>,
    fd: &FunctorData,
) -> Result<TransportedMonoid> {
    let src = check_monoid(s, m)?;
    if let Some(bad) = src.failures().next() {
        return Err(Error::SourceNotMonoid(bad.law.clone()));
    }
    if let Some(p) = phi {
        let w = check_commutativity_witness(s, m, p)?;
        if let Some(bad) = w.failures().next() {
            return Err(Error::SourceNotMonoid(format!("commutativity witness: {}", bad.law)));
        };
    }
    let t = &fd.triple;
    let x = m.carrier;
    let target = transport_components(s, fd)?;
    let monoid = MonoidObject {
        carrier: x,
        mult: fd.apply(&m.mult)?.after(&t.lambda(x, x)?)?,
        unit: fd.apply(&m.unit)?.after(&t.eta)?,
    };
    let mut report = check_monoid(&target, &monoid)?;
    let witness = match phi {
        Some(p) => {
            let w = fd.apply(p)?.after(&t.mu(x)?)?;
            report.absorb("", check_commutativity_witness(&target, &monoid, &w)?);
            Some(w)
        }
        None => None,
    };
    Ok(TransportedMonoid { monoid, witness, report })
}

/// The dual transport of a comonoid: `δ' = λ⁻¹∘F(δ)`, `ε' = η⁻¹∘F(ε)`.
pub fn quantize_comonoid(
    s: &MonoidalStructure,
    c: &crate::comonoid::ComonoidData,
    fd: &FunctorData,
) -> Result<(crate::comonoid::ComonoidData, Report)> {
    let src = crate::comonoid::check_comonoid_in(s, c)?;
    if let Some(bad) = src.failures().next() {
        return Err(Error::SourceNotMonoid(format!("source comonoid fails {}", bad.law)));
    }
    let t = &fd.triple;
    let x = c.carrier.size;
    let delta = t.lambda(x, x)?.inverse()?.after(&fd.apply(&c.delta)?)?;
    let epsilon = t.eta.inverse()?.after(&fd.apply(&c.epsilon)?)?;
    let out = crate::comonoid::ComonoidData::new(c.carrier, delta, epsilon)?;
    let target = transport_components(s, fd)?;
    let rep = crate::comonoid::check_comonoid_in(&target, &out)?;
    Ok((out, rep))
}
