//! Products of bicomodules: the unconstrained product on `B⊗E`, its
//! restriction to the equalizer of the two middle coactions, and the
//! associativity, unit and symmetry maps induced on that restriction.

use crate::category::{compose_all, equalizer, factor_through_mono, tensor, Mor};
use crate::ccat::CCategory;
use crate::error::{Error, Result};
use crate::relation::{phi, star, unit_bicomodule, Bicomodule, BicomoduleMorphism, Relation};
use crate::report::Report;

fn same_base(d: &Bicomodule, g: &Bicomodule) -> Result<()> {
    if d.base == g.base {
        Ok(())
    } else {
        Err(Error::BaseMismatch(format!("{} vs {}", d.base, g.base)))
    }
}

/// `(δ⊠γ)ˡ = α⁻¹∘(δˡ⊗1_E)`, `(δ⊠γ)ʳ = α∘(1_B⊗γʳ)` on `B⊗E`.
pub fn box_product(cc: &CCategory, d: &Bicomodule, g: &Bicomodule) -> Result<Bicomodule> {
    same_base(d, g)?;
    let s = &cc.structure;
    let (a, b, e) = (d.base.size, d.carrier.size, g.carrier.size);
    let left = s.alpha_inv(a, b, e)?.after(&tensor(&d.left, &s.id(e))?)?;
    let right = s.alpha(b, e, a)?.after(&tensor(&s.id(b), &g.right)?)?;
    Bicomodule::new(d.base, left, right)
}

/// `r⊡s = (γ_A⊗β_A)∘((1⊗ε_A)⊗(ε_A⊗1))∘(r⊗s)`, a relation on `B⊗E`.
pub fn boxdot(cc: &CCategory, r: &Relation, t: &Relation) -> Result<Relation> {
    if r.base != t.base {
        return Err(Error::BaseMismatch(format!("{} vs {}", r.base, t.base)));
    }
    let s = &cc.structure;
    let a = r.base.size;
    let (ia, ea) = (s.id(a), cc.epsilon(a)?);
    let arrow = compose_all(&[
        &tensor(&s.gamma(a)?, &s.beta(a)?)?,
        &tensor(&tensor(&ia, &ea)?, &tensor(&ea, &ia)?)?,
        &tensor(&r.arrow, &t.arrow)?,
    ])?;
    Relation::unchecked(r.base, arrow)
}

/// The restricted product `δ⊗ᴬγ` together with its inclusion into `B⊗E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorResult {
    pub lhs: Bicomodule,
    pub rhs: Bicomodule,
    pub product: Bicomodule,
    pub pi: Mor,
    /// Whether `1_A⊗π` and `π⊗1_A` are mono, which the coactions rely on.
    pub flat: bool,
}

/// Equalizes `δʳ⊗1_E` and `α∘(1_B⊗γˡ)` and restricts the box product
/// coactions along the inclusion.
pub fn tensor_relations(cc: &CCategory, d: &Bicomodule, g: &Bicomodule) -> Result<TensorResult> {
    same_base(d, g)?;
    let s = &cc.structure;
    let (a, b, e) = (d.base.size, d.carrier.size, g.carrier.size);
    let through_left = tensor(&d.right, &s.id(e))?;
    let through_right = s.alpha(b, a, e)?.after(&tensor(&s.id(b), &g.left)?)?;
    let (_, pi) = equalizer(&through_left, &through_right)?;
    let boxed = box_product(cc, d, g)?;
    let ia = s.id(a);
    let (left_mono, right_mono) = (tensor(&ia, &pi)?, tensor(&pi, &ia)?);
    let flat = left_mono.is_mono() && right_mono.is_mono();
    let left = factor_through_mono(&left_mono, &boxed.left.after(&pi)?)?;
    let right = factor_through_mono(&right_mono, &boxed.right.after(&pi)?)?;
    let product = Bicomodule::new(d.base, left, right)?;
    Ok(TensorResult { lhs: d.clone(), rhs: g.clone(), product, pi, flat })
}

/// The coactions of the restricted product written with the chosen comonoid
/// of the carrier: `Θˡ = (L⊗1)∘δ_X` with `L = γ∘(1⊗ε_{B⊗E})∘⊠ˡ∘π`, and the
/// mirror image on the right.
pub fn theta_via_counits(cc: &CCategory, t: &TensorResult) -> Result<(Mor, Mor)> {
    let s = &cc.structure;
    let (a, b, e) = (t.lhs.base.size, t.lhs.carrier.size, t.rhs.carrier.size);
    let x = t.pi.dom().size;
    let boxed = box_product(cc, &t.lhs, &t.rhs)?;
    let eps_be = cc.product_comonoid(b, e)?.epsilon;
    let ia = s.id(a);
    let l = compose_all(&[&s.gamma(a)?, &tensor(&ia, &eps_be)?, &boxed.left, &t.pi])?;
    let m = compose_all(&[&s.beta(a)?, &tensor(&eps_be, &ia)?, &boxed.right, &t.pi])?;
    let dx = cc.delta(x)?;
    let ix = s.id(x);
    Ok((tensor(&l, &ix)?.after(&dx)?, tensor(&ix, &m)?.after(&dx)?))
}

/// `r⊙s = (r⊡s)∘π`, on the carrier of `Φ(r)⊗ᴬΦ(s)`.
pub fn odot(cc: &CCategory, r: &Relation, t: &Relation) -> Result<(Relation, TensorResult)> {
    let tr = tensor_relations(cc, &phi(cc, r)?, &phi(cc, t)?)?;
    let arrow = boxdot(cc, r, t)?.arrow.after(&tr.pi)?;
    Ok((Relation::unchecked(r.base, arrow)?, tr))
}

/// `f⊗ᴬg`: the unique map with `π_dst∘(f⊗ᴬg) = (f⊗g)∘π_src`.
pub fn tensor_morphisms(f: &Mor, g: &Mor, src: &TensorResult, dst: &TensorResult) -> Result<Mor> {
    factor_through_mono(&dst.pi, &tensor(f, g)?.after(&src.pi)?)
}

/// The induced associator `m: X_{δ,γρ} → X_{δγ,ρ}` with the tensors it is
/// built from.
#[derive(Clone, Debug)]
pub struct Associator {
    /// `γ⊗ᴬρ`
    pub inner_right: TensorResult,
    /// `δ⊗ᴬγ`
    pub inner_left: TensorResult,
    /// `δ⊗ᴬ(γ⊗ᴬρ)`
    pub source: TensorResult,
    /// `(δ⊗ᴬγ)⊗ᴬρ`
    pub target: TensorResult,
    pub map: Mor,
}

/// Solves `(π_{δγ}⊗1)∘π_{δγ,ρ}∘m = α∘(1⊗π_{γρ})∘π_{δ,γρ}`.
pub fn associator(cc: &CCategory, d: &Bicomodule, g: &Bicomodule, r: &Bicomodule) -> Result<Associator> {
    let s = &cc.structure;
    let inner_right = tensor_relations(cc, g, r)?;
    let inner_left = tensor_relations(cc, d, g)?;
    let source = tensor_relations(cc, d, &inner_right.product)?;
    let target = tensor_relations(cc, &inner_left.product, r)?;
    let (b, e, dd) = (d.carrier.size, g.carrier.size, r.carrier.size);
    let mono = tensor(&inner_left.pi, &s.id(dd))?.after(&target.pi)?;
    let image = compose_all(&[&s.alpha(b, e, dd)?, &tensor(&s.id(b), &inner_right.pi)?, &source.pi])?;
    let map = factor_through_mono(&mono, &image).map_err(|err| match err {
        Error::FactorizationFailure(msg) => Error::InducedConstraintFailure(format!("associator does not restrict: {msg}")),
        other => other,
    })?;
    Ok(Associator { inner_right, inner_left, source, target, map })
}

/// `l_δ = β_B∘(ε_A⊗1_B)∘π_{a,δ}` on `a⊗ᴬδ`.
pub fn left_unitor(cc: &CCategory, d: &Bicomodule) -> Result<(TensorResult, Mor)> {
    let s = &cc.structure;
    let (a, b) = (d.base.size, d.carrier.size);
    let t = tensor_relations(cc, &unit_bicomodule(cc, a)?, d)?;
    let l = compose_all(&[&s.beta(b)?, &tensor(&cc.epsilon(a)?, &s.id(b))?, &t.pi])?;
    Ok((t, l))
}

/// `r_δ = γ_B∘(1_B⊗ε_A)∘π_{δ,a}` on `δ⊗ᴬa`.
pub fn right_unitor(cc: &CCategory, d: &Bicomodule) -> Result<(TensorResult, Mor)> {
    let s = &cc.structure;
    let (a, b) = (d.base.size, d.carrier.size);
    let t = tensor_relations(cc, d, &unit_bicomodule(cc, a)?)?;
    let r = compose_all(&[&s.gamma(b)?, &tensor(&s.id(b), &cc.epsilon(a)?)?, &t.pi])?;
    Ok((t, r))
}

fn is_bimorphism(from: &Bicomodule, to: &Bicomodule, map: &Mor) -> Result<bool> {
    BicomoduleMorphism::new(from.clone(), to.clone(), map.clone())?.commutes()
}

fn record_tensor(rep: &mut Report, t: &TensorResult, label: &str) {
    rep.record("pi_mono", t.pi.is_mono(), || label.to_string());
    rep.record("flatness", t.flat, || label.to_string());
}

pub const CONSTRAINT_LAWS: [&str; 17] = [
    "pi_mono",
    "flatness",
    "m_square",
    "m_iso",
    "m_bicomodule",
    "l_square",
    "l_iso",
    "l_bicomodule",
    "r_square",
    "r_iso",
    "r_bicomodule",
    "unit",
    "triangle",
    "pentagon",
    "theta_counit_form",
    "box_bicomodule",
    "tensor_bicomodule",
];

/// Coherence of the induced constraints on the given bicomodules. The
/// pentagon uses `w` as its fourth factor, defaulting to `d`.
pub fn check_induced_constraints(
    cc: &CCategory,
    d: &Bicomodule,
    g: &Bicomodule,
    r: &Bicomodule,
    w: Option<&Bicomodule>,
) -> Result<Report> {
    same_base(d, g)?;
    same_base(d, r)?;
    let w = w.unwrap_or(d);
    same_base(d, w)?;
    let mut rep = Report::new(format!("induced constraints over {}", d.base));
    for law in CONSTRAINT_LAWS {
        rep.declare(law);
    }
    let s = &cc.structure;
    let a = d.base.size;
    let unit = unit_bicomodule(cc, a)?;

    for (name, x, y) in [("(1,2)", d, g), ("(2,3)", g, r)] {
        let t = tensor_relations(cc, x, y)?;
        record_tensor(&mut rep, &t, name);
        let boxed = box_product(cc, x, y)?;
        let laws = crate::relation::check_bicomodule(cc, &boxed)?;
        rep.record("box_bicomodule", laws.passed(), || name.to_string());
        let laws = crate::relation::check_bicomodule(cc, &t.product)?;
        rep.record("tensor_bicomodule", laws.passed(), || name.to_string());
        if cc.ambient() != crate::category::Ambient::FinVectTensor {
            let (l, rr) = theta_via_counits(cc, &t)?;
            rep.record("theta_counit_form", l == t.product.left && rr == t.product.right, || name.to_string());
        }
    }

    let asc = associator(cc, d, g, r)?;
    for (t, label) in [(&asc.source, "source"), (&asc.target, "target")] {
        record_tensor(&mut rep, t, label);
    }
    let (b, e, dd) = (d.carrier.size, g.carrier.size, r.carrier.size);
    let lhs = compose_all(&[&tensor(&asc.inner_left.pi, &s.id(dd))?, &asc.target.pi, &asc.map])?;
    let rhs = compose_all(&[&s.alpha(b, e, dd)?, &tensor(&s.id(b), &asc.inner_right.pi)?, &asc.source.pi])?;
    rep.record("m_square", lhs == rhs, || "(1,2,3)".into());
    rep.record("m_iso", asc.map.is_iso(), || "(1,2,3)".into());
    let ok = is_bimorphism(&asc.source.product, &asc.target.product, &asc.map)?;
    rep.record("m_bicomodule", ok, || "(1,2,3)".into());

    for (name, x) in [("1", d), ("2", g), ("3", r)] {
        let (tl, l) = left_unitor(cc, x)?;
        record_tensor(&mut rep, &tl, name);
        rep.record("l_square", x.left.after(&l)? == tl.pi, || name.to_string());
        rep.record("l_iso", l.is_iso(), || name.to_string());
        rep.record("l_bicomodule", is_bimorphism(&tl.product, x, &l)?, || name.to_string());
        let (tr, rr) = right_unitor(cc, x)?;
        record_tensor(&mut rep, &tr, name);
        rep.record("r_square", x.right.after(&rr)? == tr.pi, || name.to_string());
        rep.record("r_iso", rr.is_iso(), || name.to_string());
        rep.record("r_bicomodule", is_bimorphism(&tr.product, x, &rr)?, || name.to_string());
    }
    let (_, la) = left_unitor(cc, &unit)?;
    let (_, ra) = right_unitor(cc, &unit)?;
    rep.record("unit", la == ra, || "l_a and r_a differ".into());

    for (name, x, y) in [("(1,2)", d, g), ("(2,3)", g, r)] {
        rep.record("triangle", triangle_holds(cc, x, y)?, || name.to_string());
    }
    rep.record("pentagon", pentagon_holds(cc, d, g, r, w)?, || "(1,2,3,4)".into());
    Ok(rep)
}

/// `(r_δ⊗ᴬ1_γ)∘m_{δ,a,γ} = 1_δ⊗ᴬl_γ`.
pub fn triangle_holds(cc: &CCategory, d: &Bicomodule, g: &Bicomodule) -> Result<bool> {
    let unit = unit_bicomodule(cc, d.base.size)?;
    let asc = associator(cc, d, &unit, g)?;
    let (_, rd) = right_unitor(cc, d)?;
    let (_, lg) = left_unitor(cc, g)?;
    let dg = tensor_relations(cc, d, g)?;
    let lhs = tensor_morphisms(&rd, &Mor::identity(g.carrier), &asc.target, &dg)?.after(&asc.map)?;
    let rhs = tensor_morphisms(&Mor::identity(d.carrier), &lg, &asc.source, &dg)?;
    Ok(lhs == rhs)
}

/// `m_{δγ,ρ,τ}∘m_{δ,γ,ρτ} = (m_{δ,γ,ρ}⊗ᴬ1_τ)∘m_{δ,γρ,τ}∘(1_δ⊗ᴬm_{γ,ρ,τ})`.
pub fn pentagon_holds(cc: &CCategory, d: &Bicomodule, g: &Bicomodule, r: &Bicomodule, w: &Bicomodule) -> Result<bool> {
    let rw = tensor_relations(cc, r, w)?;
    let dg = tensor_relations(cc, d, g)?;
    let gr = tensor_relations(cc, g, r)?;
    let a1 = associator(cc, d, g, &rw.product)?;
    let a2 = associator(cc, &dg.product, r, w)?;
    let a3 = associator(cc, g, r, w)?;
    let a4 = associator(cc, d, &gr.product, w)?;
    let a5 = associator(cc, d, g, r)?;
    let lhs = a2.map.after(&a1.map)?;
    let one_m = tensor_morphisms(&Mor::identity(d.carrier), &a3.map, &a1.source, &a4.source)?;
    let m_one = tensor_morphisms(&a5.map, &Mor::identity(w.carrier), &a4.target, &a2.target)?;
    let rhs = compose_all(&[&m_one, &a4.map, &one_m])?;
    Ok(lhs == rhs)
}

/// The induced symmetry `s: X_{δ,γ} → X_{γ*,δ*}`, solving `π_{γ*,δ*}∘s = σ_{B,E}∘π_{δ,γ}`.
#[derive(Clone, Debug)]
pub struct Symmetry {
    pub source: TensorResult,
    pub target: TensorResult,
    pub map: Mor,
}

pub fn induced_symmetry(cc: &CCategory, d: &Bicomodule, g: &Bicomodule) -> Result<Symmetry> {
    let s = &cc.structure;
    let source = tensor_relations(cc, d, g)?;
    let target = tensor_relations(cc, &star(cc, g)?, &star(cc, d)?)?;
    let swapped = s.sigma(d.carrier.size, g.carrier.size)?.after(&source.pi)?;
    let map = factor_through_mono(&target.pi, &swapped)?;
    Ok(Symmetry { source, target, map })
}

pub const SYMMETRY_LAWS: [&str; 10] = [
    "s_square",
    "s_bicomodule",
    "involution",
    "unit_left",
    "unit_right",
    "hexagon",
    "star_unit",
    "external_hexagon",
    "external_involution",
    "external_bicomodule",
];

/// Symmetry identities for the induced and the external symmetry on a pair
/// of bicomodules; the hexagon uses `r` as third factor, defaulting to `d`.
pub fn check_symmetry(cc: &CCategory, d: &Bicomodule, g: &Bicomodule, r: Option<&Bicomodule>) -> Result<Report> {
    same_base(d, g)?;
    let r = r.unwrap_or(d);
    same_base(d, r)?;
    let s = &cc.structure;
    let a = d.base.size;
    let unit = unit_bicomodule(cc, a)?;
    let mut rep = Report::new(format!("symmetry over {}", d.base));
    for law in SYMMETRY_LAWS {
        rep.declare(law);
    }

    let sym = induced_symmetry(cc, d, g)?;
    let lhs = sym.target.pi.after(&sym.map)?;
    let rhs = s.sigma(d.carrier.size, g.carrier.size)?.after(&sym.source.pi)?;
    rep.record("s_square", lhs == rhs, || "(1,2)".into());
    let starred = star(cc, &sym.target.product)?;
    rep.record("s_bicomodule", is_bimorphism(&sym.source.product, &starred, &sym.map)?, || "(1,2)".into());
    let back = induced_symmetry(cc, &star(cc, g)?, &star(cc, d)?)?;
    let round = back.map.after(&sym.map)?;
    rep.record("involution", round == Mor::identity(round.dom()), || "(1,2)".into());

    for (name, x) in [("1", d), ("2", g)] {
        let xs = star(cc, x)?;
        // l_{δ*}∘s_{δ,a} = r_δ
        let s_da = induced_symmetry(cc, x, &unit)?;
        let (_, l_star) = left_unitor(cc, &xs)?;
        let (_, r_x) = right_unitor(cc, x)?;
        rep.record("unit_left", l_star.after(&s_da.map)? == r_x, || name.to_string());
        // r_{δ*}∘s_{a,δ} = l_δ
        let s_ad = induced_symmetry(cc, &unit, x)?;
        let (_, r_star) = right_unitor(cc, &xs)?;
        let (_, l_x) = left_unitor(cc, x)?;
        rep.record("unit_right", r_star.after(&s_ad.map)? == l_x, || name.to_string());
    }
    rep.record("star_unit", star(cc, &unit)? == unit, || format!("object {a}"));
    rep.record("hexagon", hexagon_holds(cc, d, g, r)?, || "(1,2,3)".into());

    // External symmetry σ_{B,E} on the box product.
    let (b, e, dd) = (d.carrier.size, g.carrier.size, r.carrier.size);
    let lhs = compose_all(&[
        &s.alpha(dd, e, b)?,
        &tensor(&s.id(dd), &s.sigma(b, e)?)?,
        &s.sigma(s.t(b, e), dd)?,
        &s.alpha(b, e, dd)?,
    ])?;
    let rhs = tensor(&s.sigma(e, dd)?, &s.id(b))?.after(&s.sigma(b, s.t(e, dd))?)?;
    rep.record("external_hexagon", lhs == rhs, || "(1,2,3)".into());
    let round = s.sigma(e, b)?.after(&s.sigma(b, e)?)?;
    rep.record("external_involution", round == s.id(s.t(b, e)), || "(1,2)".into());
    let boxed = box_product(cc, d, g)?;
    let target = star(cc, &box_product(cc, &star(cc, g)?, &star(cc, d)?)?)?;
    rep.record("external_bicomodule", is_bimorphism(&boxed, &target, &s.sigma(b, e)?)?, || "(1,2)".into());
    Ok(rep)
}

/// `m_{ρ*,γ*,δ*}∘(1⊗ᴬs_{δ,γ})∘s_{δγ,ρ}∘m_{δ,γ,ρ} = (s_{γ,ρ}⊗ᴬ1)∘s_{δ,γρ}`.
pub fn hexagon_holds(cc: &CCategory, d: &Bicomodule, g: &Bicomodule, r: &Bicomodule) -> Result<bool> {
    let (ds, gs, rs) = (star(cc, d)?, star(cc, g)?, star(cc, r)?);
    let m1 = associator(cc, d, g, r)?;
    let s_dg = induced_symmetry(cc, d, g)?;
    let s_dg_r = induced_symmetry(cc, &s_dg.source.product, r)?;
    let gs_ds = tensor_relations(cc, &gs, &ds)?;
    let one_s = tensor_morphisms(&Mor::identity(r.carrier), &s_dg.map, &s_dg_r.target, &tensor_relations(cc, &rs, &gs_ds.product)?)?;
    let m2 = associator(cc, &rs, &gs, &ds)?;
    let lhs = compose_all(&[&m2.map, &one_s, &s_dg_r.map, &m1.map])?;

    let s_gr = induced_symmetry(cc, g, r)?;
    let s_d_gr = induced_symmetry(cc, d, &s_gr.source.product)?;
    let s_one = tensor_morphisms(&s_gr.map, &Mor::identity(d.carrier), &s_d_gr.target, &m2.target)?;
    let rhs = s_one.after(&s_d_gr.map)?;
    Ok(lhs == rhs)
}
