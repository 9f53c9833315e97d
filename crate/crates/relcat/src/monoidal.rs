//! Symmetric monoidal structures on the ambient categories and their law
//! checker. Associators go `X⊗(Y⊗Z) → (X⊗Y)⊗Z`, left unitors `e⊗Y → Y`,
//! right unitors `X⊗e → X`, symmetries `X⊗Y → Y⊗X`.

use std::collections::{BTreeMap, BTreeSet};

use crate::category::{compose_all, tensor, Ambient, Mor, Obj};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Q};
use crate::report::Report;

use num::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Alpha,
    Beta,
    Gamma,
    Sigma,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Alpha => "alpha",
            Kind::Beta => "beta",
            Kind::Gamma => "gamma",
            Kind::Sigma => "sigma",
        }
    }

    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "alpha" => Ok(Kind::Alpha),
            "beta" => Ok(Kind::Beta),
            "gamma" => Ok(Kind::Gamma),
            "sigma" => Ok(Kind::Sigma),
            _ => Err(Error::Malformed(format!("unknown constraint kind {s:?}"))),
        }
    }
}

/// Explicit component tables keyed by object sizes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Components {
    pub alpha: BTreeMap<(usize, usize, usize), Mor>,
    pub beta: BTreeMap<usize, Mor>,
    pub gamma: BTreeMap<usize, Mor>,
    pub sigma: BTreeMap<(usize, usize), Mor>,
}

impl Components {
    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty() && self.gamma.is_empty() && self.sigma.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalStructure {
    ambient: Ambient,
    overrides: Components,
    /// When set, components missing from the tables are an error rather than
    /// falling back to the built-in ones.
    complete: bool,
}

impl MonoidalStructure {
    pub fn builtin(ambient: Ambient) -> Self {
        MonoidalStructure { ambient, overrides: Components::default(), complete: false }
    }

    pub fn with_tables(ambient: Ambient, tables: Components, complete: bool) -> Result<Self> {
        let s = MonoidalStructure { ambient, overrides: Components::default(), complete: false };
        for (&(x, y, z), m) in &tables.alpha {
            s.expect_shape(m, s.ambient.obj(s.t3r(x, y, z)), s.ambient.obj(s.t3l(x, y, z)), "alpha")?;
        }
        for (&y, m) in &tables.beta {
            s.expect_shape(m, s.ambient.obj(s.t(s.e(), y)), s.ambient.obj(y), "beta")?;
        }
        for (&x, m) in &tables.gamma {
            s.expect_shape(m, s.ambient.obj(s.t(x, s.e())), s.ambient.obj(x), "gamma")?;
        }
        for (&(x, y), m) in &tables.sigma {
            s.expect_shape(m, s.ambient.obj(s.t(x, y)), s.ambient.obj(s.t(y, x)), "sigma")?;
        }
        Ok(MonoidalStructure { ambient, overrides: tables, complete })
    }

    fn expect_shape(&self, m: &Mor, dom: Obj, cod: Obj, kind: &str) -> Result<()> {
        if m.dom() != dom || m.cod() != cod {
            return Err(Error::Shape(format!("{kind} component {} → {} should be {dom} → {cod}", m.dom(), m.cod())));
        }
        Ok(())
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn overrides(&self) -> &Components {
        &self.overrides
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn unit(&self) -> Obj {
        self.ambient.unit()
    }

    pub fn e(&self) -> usize {
        self.ambient.unit_size()
    }

    pub fn obj(&self, n: usize) -> Obj {
        self.ambient.obj(n)
    }

    pub fn id(&self, n: usize) -> Mor {
        Mor::identity(self.obj(n))
    }

    /// Size of `x ⊗ y`.
    pub fn t(&self, x: usize, y: usize) -> usize {
        self.ambient.tensor_size(x, y)
    }

    fn t3l(&self, x: usize, y: usize, z: usize) -> usize {
        self.t(self.t(x, y), z)
    }

    fn t3r(&self, x: usize, y: usize, z: usize) -> usize {
        self.t(x, self.t(y, z))
    }

    fn missing(&self, kind: Kind, objs: String) -> Error {
        Error::MissingComponent { kind: kind.name().into(), objs }
    }

    pub fn alpha(&self, x: usize, y: usize, z: usize) -> Result<Mor> {
        match self.overrides.alpha.get(&(x, y, z)) {
            Some(m) => Ok(m.clone()),
            None if self.complete => Err(self.missing(Kind::Alpha, format!("({x},{y},{z})"))),
            None => Ok(self.id(self.t3r(x, y, z))),
        }
    }

    pub fn alpha_inv(&self, x: usize, y: usize, z: usize) -> Result<Mor> {
        self.alpha(x, y, z)?.inverse()
    }

    pub fn beta(&self, y: usize) -> Result<Mor> {
        match self.overrides.beta.get(&y) {
            Some(m) => Ok(m.clone()),
            None if self.complete => Err(self.missing(Kind::Beta, format!("({y})"))),
            None => Ok(self.id(y)),
        }
    }

    pub fn gamma(&self, x: usize) -> Result<Mor> {
        match self.overrides.gamma.get(&x) {
            Some(m) => Ok(m.clone()),
            None if self.complete => Err(self.missing(Kind::Gamma, format!("({x})"))),
            None => Ok(self.id(x)),
        }
    }

    pub fn sigma(&self, x: usize, y: usize) -> Result<Mor> {
        match self.overrides.sigma.get(&(x, y)) {
            Some(m) => Ok(m.clone()),
            None if self.complete => Err(self.missing(Kind::Sigma, format!("({x},{y})"))),
            None => Ok(builtin_sigma(self.ambient, x, y)),
        }
    }

    /// Uniform access by kind. Unitors accept either one object or a pair, in
    /// which case the component only depends on the non-unit slot.
    pub fn constraint(&self, kind: Kind, objs: &[usize]) -> Result<Mor> {
        let arity = |n: usize| -> Result<()> {
            if objs.len() == n {
                Ok(())
            } else {
                Err(Error::Malformed(format!("{} takes {n} objects, got {}", kind.name(), objs.len())))
            }
        };
        match kind {
            Kind::Alpha => {
                arity(3)?;
                self.alpha(objs[0], objs[1], objs[2])
            }
            Kind::Sigma => {
                arity(2)?;
                self.sigma(objs[0], objs[1])
            }
            Kind::Beta => match objs {
                [y] | [_, y] => self.beta(*y),
                _ => Err(Error::Malformed(format!("beta takes 1 or 2 objects, got {}", objs.len()))),
            },
            Kind::Gamma => match objs {
                [x] | [x, _] => self.gamma(*x),
                _ => Err(Error::Malformed(format!("gamma takes 1 or 2 objects, got {}", objs.len()))),
            },
        }
    }

    /// Materializes every component over the universe into a complete table.
    pub fn tabulate(&self, u: &Universe) -> Result<Components> {
        let mut c = Components::default();
        for (x, y, z) in u.triples() {
            c.alpha.insert((x, y, z), self.alpha(x, y, z)?);
        }
        for x in u.sizes() {
            c.beta.insert(x, self.beta(x)?);
            c.gamma.insert(x, self.gamma(x)?);
        }
        for (x, y) in u.pairs() {
            c.sigma.insert((x, y), self.sigma(x, y)?);
        }
        Ok(c)
    }
}

/// The swap `X⊗Y → Y⊗X` under the fixed pairing conventions.
pub fn builtin_sigma(ambient: Ambient, m: usize, n: usize) -> Mor {
    let dom = ambient.obj(ambient.tensor_size(m, n));
    let cod = ambient.obj(ambient.tensor_size(n, m));
    let image: Vec<usize> = match ambient {
        Ambient::FinVectSum => (0..m + n).map(|i| if i < m { n + i } else { i - m }).collect(),
        _ => (0..m * n).map(|i| (i % n) * m + i / n).collect(),
    };
    match ambient {
        Ambient::FinSet => Mor::table(dom, cod, image).expect("swap table"),
        _ => {
            let mat = Matrix::from_fn(cod.size, dom.size, |r, c| if image[c] == r { Q::one() } else { Q::zero() });
            Mor::matrix(dom, cod, mat).expect("swap matrix")
        }
    }
}

/// A finite set of object sizes closed under the tensor up to a bound. Tuples
/// whose tensors exceed the bound are skipped; a tensor within the bound that
/// is absent means the universe is not closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    ambient: Ambient,
    sizes: BTreeSet<usize>,
    bound: usize,
}

impl Universe {
    pub fn new(ambient: Ambient, sizes: impl IntoIterator<Item = usize>, bound: Option<usize>) -> Self {
        let mut sizes: BTreeSet<usize> = sizes.into_iter().collect();
        sizes.insert(ambient.unit_size());
        let bound = bound.unwrap_or_else(|| *sizes.iter().max().expect("unit present"));
        Universe { ambient, sizes, bound }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sizes.iter().copied().collect()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.sizes.contains(&n)
    }

    pub fn objs(&self) -> Vec<Obj> {
        self.sizes.iter().map(|&n| self.ambient.obj(n)).collect()
    }

    /// Whether every size is available; sizes over the bound make the tuple
    /// inadmissible, a missing size within the bound is an error.
    pub fn admit(&self, needed: &[usize], law: &str) -> Result<bool> {
        let mut ok = true;
        for &n in needed {
            if self.contains(n) {
                continue;
            }
            if n > self.bound {
                ok = false;
            } else {
                return Err(Error::UniverseNotClosed { size: n, law: law.into() });
            }
        }
        Ok(ok)
    }

    fn t(&self, x: usize, y: usize) -> usize {
        self.ambient.tensor_size(x, y)
    }

    /// Pairs whose tensor lies in the universe.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let s = self.sizes();
        let mut out = Vec::new();
        for &x in &s {
            for &y in &s {
                if self.contains(self.t(x, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Triples whose partial tensors all lie in the universe.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let s = self.sizes();
        let mut out = Vec::new();
        for &x in &s {
            for &y in &s {
                for &z in &s {
                    let need = [self.t(x, y), self.t(y, z), self.t(self.t(x, y), z)];
                    if need.iter().all(|&n| self.contains(n)) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    pub fn check_closed(&self, law: &str) -> Result<()> {
        let s = self.sizes();
        for &x in &s {
            for &y in &s {
                self.admit(&[self.t(x, y)], law)?;
            }
        }
        Ok(())
    }
}

fn same(lhs: &Mor, rhs: &Mor) -> bool {
    lhs == rhs
}

fn diff_note(lhs: &Mor, rhs: &Mor) -> String {
    match lhs.first_difference(rhs) {
        Some(i) => format!("sides differ at input {i}"),
        None => String::new(),
    }
}

pub const STRUCTURE_LAWS: [&str; 12] = [
    "iso",
    "pentagon",
    "triangle",
    "unit_coherence",
    "unit_symmetry",
    "yang_baxter",
    "braid",
    "involution",
    "naturality_alpha",
    "naturality_beta",
    "naturality_gamma",
    "naturality_sigma",
];

/// Verifies every symmetric monoidal law at every admissible object tuple of
/// the universe, with naturality tested against `generators` (identities of
/// universe objects are added for the symmetry's two-variable naturality).
pub fn check_symmetric_monoidal(s: &MonoidalStructure, u: &Universe, generators: &[Mor]) -> Result<Report> {
    if u.ambient() != s.ambient() {
        return Err(Error::Ambient("universe and structure live in different ambients".into()));
    }
    for g in generators {
        if g.ambient() != s.ambient() {
            return Err(Error::Ambient(format!("generator {g} is not in {}", s.ambient().name())));
        }
    }
    let mut rep = Report::new(format!("symmetric monoidal structure on {}", s.ambient().name()));
    for law in STRUCTURE_LAWS {
        rep.declare(law);
    }
    let sizes = u.sizes();
    let e = s.e();
    let t = |a, b| s.t(a, b);
    let id = |n| s.id(n);

    for &x in &sizes {
        if u.admit(&[t(e, x), t(x, e)], "iso")? {
            let b = s.beta(x)?;
            rep.record("iso", b.is_iso(), || format!("beta at ({x})"));
            let g = s.gamma(x)?;
            rep.record("iso", g.is_iso(), || format!("gamma at ({x})"));
        }
        for &y in &sizes {
            if u.admit(&[t(x, y), t(y, x)], "iso")? {
                let m = s.sigma(x, y)?;
                rep.record("iso", m.is_iso(), || format!("sigma at ({x},{y})"));
            }
            for &z in &sizes {
                if u.admit(&[t(x, y), t(y, z), t(t(x, y), z)], "iso")? {
                    let m = s.alpha(x, y, z)?;
                    rep.record("iso", m.is_iso(), || format!("alpha at ({x},{y},{z})"));
                }
            }
        }
    }
    if !rep.passed() {
        // The remaining laws invert components.
        return Ok(rep);
    }

    for &x in &sizes {
        // triangle: (γ_X⊗1_Y)∘α_{X,e,Y} = 1_X⊗β_Y
        for &y in &sizes {
            if u.admit(&[t(x, e), t(e, y), t(x, y)], "triangle")? {
                let lhs = compose_all(&[&tensor(&s.gamma(x)?, &id(y))?, &s.alpha(x, e, y)?])?;
                let rhs = tensor(&id(x), &s.beta(y)?)?;
                rep.record("triangle", same(&lhs, &rhs), || format!("({x},{y}) {}", diff_note(&lhs, &rhs)));
            }
        }
        // β_Y = γ_Y∘σ_{e,Y} and γ_X = β_X∘σ_{X,e}
        if u.admit(&[t(e, x), t(x, e)], "unit_symmetry")? {
            let lhs = s.beta(x)?;
            let rhs = s.gamma(x)?.after(&s.sigma(e, x)?)?;
            rep.record("unit_symmetry", same(&lhs, &rhs), || format!("left unit at ({x})"));
            let lhs = s.gamma(x)?;
            let rhs = s.beta(x)?.after(&s.sigma(x, e)?)?;
            rep.record("unit_symmetry", same(&lhs, &rhs), || format!("right unit at ({x})"));
        }
    }
    let (be, ge) = (s.beta(e)?, s.gamma(e)?);
    rep.record("unit_coherence", be == ge, || format!("beta and gamma differ at the unit ({e})"));

    for &x in &sizes {
        for &y in &sizes {
            if u.admit(&[t(x, y), t(y, x)], "involution")? {
                let lhs = s.sigma(y, x)?.after(&s.sigma(x, y)?)?;
                rep.record("involution", same(&lhs, &id(t(x, y))), || format!("({x},{y})"));
            }
            for &z in &sizes {
                let need = [t(x, y), t(y, x), t(y, z), t(z, y), t(x, z), t(z, x), t(t(x, y), z)];
                if !u.admit(&need, "yang_baxter")? {
                    continue;
                }
                let lhs = compose_all(&[
                    &tensor(&id(z), &s.sigma(x, y)?)?,
                    &s.alpha_inv(z, x, y)?,
                    &tensor(&s.sigma(x, z)?, &id(y))?,
                    &s.alpha(x, z, y)?,
                    &tensor(&id(x), &s.sigma(y, z)?)?,
                ])?;
                let rhs = compose_all(&[
                    &s.alpha_inv(z, y, x)?,
                    &tensor(&s.sigma(y, z)?, &id(x))?,
                    &s.alpha(y, z, x)?,
                    &tensor(&id(y), &s.sigma(x, z)?)?,
                    &s.alpha_inv(y, x, z)?,
                    &tensor(&s.sigma(x, y)?, &id(z))?,
                    &s.alpha(x, y, z)?,
                ])?;
                rep.record("yang_baxter", same(&lhs, &rhs), || format!("({x},{y},{z}) {}", diff_note(&lhs, &rhs)));

                // σ_{X,Z⊗Y}∘(1_X⊗σ_{Y,Z}) = α_{Z,Y,X}∘σ_{Y⊗X,Z}∘(σ_{X,Y}⊗1_Z)∘α_{X,Y,Z}
                let lhs = compose_all(&[&s.sigma(x, t(z, y))?, &tensor(&id(x), &s.sigma(y, z)?)?])?;
                let rhs = compose_all(&[
                    &s.alpha(z, y, x)?,
                    &s.sigma(t(y, x), z)?,
                    &tensor(&s.sigma(x, y)?, &id(z))?,
                    &s.alpha(x, y, z)?,
                ])?;
                rep.record("braid", same(&lhs, &rhs), || format!("({x},{y},{z}) {}", diff_note(&lhs, &rhs)));

                for &w in &sizes {
                    let need = [t(z, w), t(t(y, z), w), t(t(x, y), t(z, w)), t(t(t(x, y), z), w)];
                    if !u.admit(&need, "pentagon")? {
                        continue;
                    }
                    let (xy, yz, zw) = (t(x, y), t(y, z), t(z, w));
                    let lhs = compose_all(&[&s.alpha(xy, z, w)?, &s.alpha(x, y, zw)?])?;
                    let rhs = compose_all(&[
                        &tensor(&s.alpha(x, y, z)?, &id(w))?,
                        &s.alpha(x, yz, w)?,
                        &tensor(&id(x), &s.alpha(y, z, w)?)?,
                    ])?;
                    rep.record("pentagon", same(&lhs, &rhs), || {
                        format!("({x},{y},{z},{w}) {}", diff_note(&lhs, &rhs))
                    });
                }
            }
        }
    }

    check_naturality(s, u, generators, &mut rep)?;
    Ok(rep)
}

fn check_naturality(s: &MonoidalStructure, u: &Universe, generators: &[Mor], rep: &mut Report) -> Result<()> {
    let sizes = u.sizes();
    let e = s.e();
    let t = |a, b| s.t(a, b);
    let id = |n| s.id(n);
    let in_u = |f: &Mor| u.contains(f.dom().size) && u.contains(f.cod().size);
    let gens: Vec<(usize, &Mor)> = generators.iter().enumerate().filter(|(_, f)| in_u(f)).collect();

    for &(gi, f) in &gens {
        let (a, b) = (f.dom().size, f.cod().size);
        // β_{B}∘(1_e⊗f) = f∘β_A, γ_B∘(f⊗1_e) = f∘γ_A
        if u.admit(&[t(e, a), t(e, b)], "naturality_beta")? {
            let lhs = s.beta(b)?.after(&tensor(&id(e), f)?)?;
            let rhs = f.after(&s.beta(a)?)?;
            rep.record("naturality_beta", lhs == rhs, || format!("generator {gi} ({f})"));
        }
        if u.admit(&[t(a, e), t(b, e)], "naturality_gamma")? {
            let lhs = s.gamma(b)?.after(&tensor(f, &id(e))?)?;
            let rhs = f.after(&s.gamma(a)?)?;
            rep.record("naturality_gamma", lhs == rhs, || format!("generator {gi} ({f})"));
        }
        for &p in &sizes {
            for &q in &sizes {
                for slot in 0..3 {
                    let (src, dst) = match slot {
                        0 => ((a, p, q), (b, p, q)),
                        1 => ((p, a, q), (p, b, q)),
                        _ => ((p, q, a), (p, q, b)),
                    };
                    let need = [
                        t(src.0, src.1),
                        t(src.1, src.2),
                        t(t(src.0, src.1), src.2),
                        t(dst.0, dst.1),
                        t(dst.1, dst.2),
                        t(t(dst.0, dst.1), dst.2),
                    ];
                    if !u.admit(&need, "naturality_alpha")? {
                        continue;
                    }
                    let leg = |k: usize, n: usize| if k == slot { f.clone() } else { id(n) };
                    let (f0, f1, f2) = (leg(0, src.0), leg(1, src.1), leg(2, src.2));
                    let lhs = s.alpha(dst.0, dst.1, dst.2)?.after(&tensor(&f0, &tensor(&f1, &f2)?)?)?;
                    let rhs = tensor(&tensor(&f0, &f1)?, &f2)?.after(&s.alpha(src.0, src.1, src.2)?)?;
                    rep.record("naturality_alpha", lhs == rhs, || {
                        format!("generator {gi} ({f}) in slot {slot} of ({},{},{})", src.0, src.1, src.2)
                    });
                }
            }
        }
    }

    // σ_{A',B'}∘(f⊗g) = (g⊗f)∘σ_{A,B} over generators and identities.
    let idents: Vec<Mor> = sizes.iter().map(|&n| id(n)).collect();
    let mut pool: Vec<(String, &Mor)> = gens.iter().map(|&(gi, f)| (format!("generator {gi} ({f})"), f)).collect();
    pool.extend(idents.iter().map(|f| (format!("identity on {}", f.dom()), f)));
    for (fname, f) in &pool {
        for (gname, g) in &pool {
            let (a, b, c, d) = (f.dom().size, g.dom().size, f.cod().size, g.cod().size);
            if !u.admit(&[t(a, b), t(b, a), t(c, d), t(d, c)], "naturality_sigma")? {
                continue;
            }
            let lhs = s.sigma(c, d)?.after(&tensor(f, g)?)?;
            let rhs = tensor(g, f)?.after(&s.sigma(a, b)?)?;
            rep.record("naturality_sigma", lhs == rhs, || format!("{fname} with {gname}"));
        }
    }
    Ok(())
}
