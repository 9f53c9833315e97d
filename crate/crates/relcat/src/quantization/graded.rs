//! A Z/2-graded extension of the triple action on the monoidal part
//! `(α, β, γ)`. Even elements are families `ρ_{X,Y}: X⊗Y → X⊗Y`, odd ones
//! families `τ_{X,Y}: X⊗Y → Y⊗X`.

use std::collections::BTreeMap;

use crate::category::{compose_all, tensor, Mor};
use crate::error::{Error, Result};
use crate::monoidal::{check_symmetric_monoidal, Components, MonoidalStructure, Universe};
use crate::report::Report;

pub type Family = BTreeMap<(usize, usize), Mor>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedElement {
    Even(Family),
    Odd(Family),
}

fn get(f: &Family, x: usize, y: usize) -> Result<Mor> {
    f.get(&(x, y))
        .cloned()
        .ok_or_else(|| Error::MissingComponent { kind: "graded".into(), objs: format!("({x},{y})") })
}

/// `(tf)_{X,Y} = f_{Y,X}`.
pub fn transpose(f: &Family) -> Family {
    f.iter().map(|(&(x, y), m)| ((y, x), m.clone())).collect()
}

/// `(a·b)_{X,Y} = a_{X,Y}∘b_{X,Y}`.
fn dot(a: &Family, b: &Family) -> Result<Family> {
    b.iter().map(|(&(x, y), m)| Ok(((x, y), get(a, x, y)?.after(m)?))).collect()
}

impl GradedElement {
    pub fn is_odd(&self) -> bool {
        matches!(self, GradedElement::Odd(_))
    }

    /// The element acting as `self` followed by `next`.
    pub fn then(&self, next: &GradedElement) -> Result<GradedElement> {
        use GradedElement::*;
        Ok(match (self, next) {
            (Even(r1), Even(r2)) => Even(dot(r1, r2)?),
            (Even(r1), Odd(s1)) => Odd(dot(&transpose(r1), s1)?),
            (Odd(s1), Even(r1)) => Odd(dot(s1, r1)?),
            (Odd(s1), Odd(s2)) => Even(dot(&transpose(s1), s2)?),
        })
    }

    /// Acts on the monoidal part of `s`; the symmetry is carried over.
    pub fn act(&self, s: &MonoidalStructure, u: &Universe) -> Result<MonoidalStructure> {
        let t = |a, b| s.t(a, b);
        let id = |n| s.id(n);
        let e = s.e();
        let mut c = Components::default();
        match self {
            GradedElement::Even(r) => {
                for (x, y, z) in u.triples() {
                    let m = compose_all(&[
                        &tensor(&get(r, x, y)?.inverse()?, &id(z))?,
                        &get(r, t(x, y), z)?.inverse()?,
                        &s.alpha(x, y, z)?,
                        &get(r, x, t(y, z))?,
                        &tensor(&id(x), &get(r, y, z)?)?,
                    ])?;
                    c.alpha.insert((x, y, z), m);
                }
                for x in u.sizes() {
                    c.beta.insert(x, s.beta(x)?.after(&get(r, e, x)?)?);
                    c.gamma.insert(x, s.gamma(x)?.after(&get(r, x, e)?)?);
                }
            }
            GradedElement::Odd(g) => {
                for (x, y, z) in u.triples() {
                    let m = compose_all(&[
                        &tensor(&get(g, x, y)?.inverse()?, &id(z))?,
                        &get(g, t(y, x), z)?.inverse()?,
                        &s.alpha_inv(z, y, x)?,
                        &get(g, x, t(z, y))?,
                        &tensor(&id(x), &get(g, y, z)?)?,
                    ])?;
                    c.alpha.insert((x, y, z), m);
                }
                for x in u.sizes() {
                    c.beta.insert(x, s.gamma(x)?.after(&get(g, e, x)?)?);
                    c.gamma.insert(x, s.beta(x)?.after(&get(g, x, e)?)?);
                }
            }
        }
        for (x, y) in u.pairs() {
            c.sigma.insert((x, y), s.sigma(x, y)?);
        }
        MonoidalStructure::with_tables(s.ambient(), c, true)
    }
}

pub const MONOIDAL_LAWS: [&str; 7] =
    ["iso", "pentagon", "triangle", "unit_coherence", "naturality_alpha", "naturality_beta", "naturality_gamma"];

/// The laws that involve only `(α, β, γ)`.
pub fn check_monoidal(s: &MonoidalStructure, u: &Universe, generators: &[Mor]) -> Result<Report> {
    let full = check_symmetric_monoidal(s, u, generators)?;
    let mut rep = Report::new(format!("monoidal structure on {}", s.ambient().name()));
    for c in full.checks {
        if MONOIDAL_LAWS.contains(&c.law.as_str()) {
            rep.checks.push(c);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Ambient;
    use crate::matrix::{q, Matrix, Q};
    use crate::monoidal::builtin_sigma;

    fn setup() -> (MonoidalStructure, Universe) {
        (MonoidalStructure::builtin(Ambient::FinVectTensor), Universe::new(Ambient::FinVectTensor, [1, 2, 4], None))
    }

    fn odd_builtin(u: &Universe) -> GradedElement {
        GradedElement::Odd(u.pairs().into_iter().map(|(x, y)| ((x, y), builtin_sigma(u.ambient(), x, y))).collect())
    }

    fn even_scalar(u: &Universe, c: i64) -> GradedElement {
        GradedElement::Even(
            u.pairs()
                .into_iter()
                .map(|(x, y)| {
                    let o = u.ambient().obj(x * y);
                    ((x, y), Mor::matrix(o, o, Matrix::diagonal(&vec![q(c); x * y])).unwrap())
                })
                .collect(),
        )
    }

    // ρ_{X,Y} = D_X⊗D_Y with D_4 invariant under the swap of 2⊗2, so ρ is
    // natural for the symmetry.
    fn even_diag(u: &Universe) -> GradedElement {
        let d = |n: usize| -> Mor {
            let v: Vec<Q> = match n {
                1 => vec![q(7)],
                2 => vec![q(2), q(3)],
                _ => vec![q(2), q(5), q(5), q(-1)],
            };
            let o = u.ambient().obj(n);
            Mor::matrix(o, o, Matrix::diagonal(&v)).unwrap()
        };
        GradedElement::Even(u.pairs().into_iter().map(|(x, y)| ((x, y), tensor(&d(x), &d(y)).unwrap())).collect())
    }

    #[test]
    fn builtin_is_fixed_by_its_own_swap() {
        let (s, u) = setup();
        let out = odd_builtin(&u).act(&s, &u).unwrap();
        assert_eq!(out.tabulate(&u).unwrap(), s.tabulate(&u).unwrap());
    }

    #[test]
    fn composites_match_sequential_action() {
        let (s, u) = setup();
        let elems = [odd_builtin(&u), even_scalar(&u, 3), even_diag(&u)];
        for a in &elems {
            for b in &elems {
                let seq = b.act(&a.act(&s, &u).unwrap(), &u).unwrap();
                let once = a.then(b).unwrap().act(&s, &u).unwrap();
                assert_eq!(seq.tabulate(&u).unwrap(), once.tabulate(&u).unwrap());
                assert_eq!(a.then(b).unwrap().is_odd(), a.is_odd() != b.is_odd());
            }
        }
    }

    #[test]
    fn odd_action_preserves_monoidal_laws() {
        let (s, u) = setup();
        let out = even_scalar(&u, 2).then(&odd_builtin(&u)).unwrap().act(&s, &u).unwrap();
        assert!(check_monoidal(&out, &u, &[]).unwrap().passed());
    }
}
