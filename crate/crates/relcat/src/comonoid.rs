//! Comonoids and cosemigroups: law checks, the standard constructions on each
//! ambient, and a brute-force solver for small structures over prime fields.

use crate::category::{compose_all, tensor, Ambient, Mor, Obj};
use crate::error::{Error, Result};
use crate::matrix::{q, Fp, Matrix, Q};
use crate::monoidal::MonoidalStructure;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComonoidData {
    pub carrier: Obj,
    pub delta: Mor,
    pub epsilon: Mor,
}

impl ComonoidData {
    pub fn new(carrier: Obj, delta: Mor, epsilon: Mor) -> Result<Self> {
        let pair = carrier.tensor(carrier)?;
        if delta.dom() != carrier || delta.cod() != pair {
            return Err(Error::Shape(format!("coproduct must be {carrier} → {pair}, got {} → {}", delta.dom(), delta.cod())));
        }
        if epsilon.dom() != carrier || epsilon.cod() != carrier.unit() {
            return Err(Error::Shape(format!(
                "counit must be {carrier} → {}, got {} → {}",
                carrier.unit(),
                epsilon.dom(),
                epsilon.cod()
            )));
        }
        Ok(ComonoidData { carrier, delta, epsilon })
    }

    pub fn ambient(&self) -> Ambient {
        self.carrier.ambient
    }
}

fn coassociativity(s: &MonoidalStructure, c: &ComonoidData, rep: &mut Report) -> Result<()> {
    let n = c.carrier.size;
    let id = Mor::identity(c.carrier);
    let lhs = compose_all(&[&s.alpha(n, n, n)?, &tensor(&id, &c.delta)?, &c.delta])?;
    let rhs = tensor(&c.delta, &id)?.after(&c.delta)?;
    rep.record("coassociativity", lhs == rhs, || witness(&lhs, &rhs));
    Ok(())
}

fn witness(lhs: &Mor, rhs: &Mor) -> String {
    match lhs.first_difference(rhs) {
        Some(i) => format!("at element {i}"),
        None => "sides differ".into(),
    }
}

/// Coassociativity and both counit laws, relative to the given structure.
pub fn check_comonoid_in(s: &MonoidalStructure, c: &ComonoidData) -> Result<Report> {
    let mut rep = Report::new(format!("comonoid on {}", c.carrier));
    coassociativity(s, c, &mut rep)?;
    let n = c.carrier.size;
    let id = Mor::identity(c.carrier);
    let left = compose_all(&[&s.beta(n)?, &tensor(&c.epsilon, &id)?, &c.delta])?;
    rep.record("left_counit", left == id, || witness(&left, &id));
    let right = compose_all(&[&s.gamma(n)?, &tensor(&id, &c.epsilon)?, &c.delta])?;
    rep.record("right_counit", right == id, || witness(&right, &id));
    Ok(rep)
}

pub fn check_comonoid(c: &ComonoidData) -> Result<Report> {
    check_comonoid_in(&MonoidalStructure::builtin(c.ambient()), c)
}

/// Only the coassociativity law; the counit is ignored.
pub fn check_cosemigroup(c: &ComonoidData) -> Result<Report> {
    let mut rep = Report::new(format!("cosemigroup on {}", c.carrier));
    coassociativity(&MonoidalStructure::builtin(c.ambient()), c, &mut rep)?;
    Ok(rep)
}

pub fn is_sigma_commutative_in(s: &MonoidalStructure, c: &ComonoidData) -> Result<bool> {
    let n = c.carrier.size;
    Ok(s.sigma(n, n)?.after(&c.delta)? == c.delta)
}

pub fn is_sigma_commutative(c: &ComonoidData) -> Result<bool> {
    is_sigma_commutative_in(&MonoidalStructure::builtin(c.ambient()), c)
}

pub fn check_coproduct_mono(c: &ComonoidData) -> bool {
    c.delta.is_mono()
}

/// The copying comonoid: diagonal in FinSet and FinVectSum, group-like on the
/// standard basis in FinVectTensor.
pub fn diagonal(x: Obj) -> Result<ComonoidData> {
    let n = x.size;
    let pair = x.tensor(x)?;
    match x.ambient {
        Ambient::FinSet => {
            let delta = Mor::table(x, pair, (0..n).map(|i| i * n + i).collect())?;
            ComonoidData::new(x, delta, Mor::to_unit(x)?)
        }
        Ambient::FinVectSum => {
            let i = Matrix::<Q>::identity(n);
            let delta = Mor::matrix(x, pair, i.vstack(&i))?;
            ComonoidData::new(x, delta, Mor::to_unit(x)?)
        }
        Ambient::FinVectTensor => grouplike(n),
    }
}

/// `δ(eᵢ) = eᵢ⊗eᵢ`, `ε(eᵢ) = 1`.
pub fn grouplike(n: usize) -> Result<ComonoidData> {
    let x = Ambient::FinVectTensor.obj(n);
    let d = Matrix::from_fn(n * n, n, |r, c| if r == c * n + c { q(1) } else { q(0) });
    let delta = Mor::matrix(x, x.tensor(x)?, d)?;
    let epsilon = Mor::matrix(x, x.unit(), Matrix::from_fn(1, n, |_, _| q(1)))?;
    ComonoidData::new(x, delta, epsilon)
}

/// One-parameter family of two-dimensional comonoids:
/// `δ(a₁) = a₁⊗a₁`, `δ(a₂) = −x·a₁⊗a₁ + a₁⊗a₂ + a₂⊗a₁`, `ε = (1, x)`.
pub fn dim2_family(x: &Q) -> ComonoidData {
    let obj = Ambient::FinVectTensor.obj(2);
    let mut d = Matrix::zeros(4, 2);
    d.set(0, 0, q(1));
    d.set(0, 1, -x.clone());
    d.set(1, 1, q(1));
    d.set(2, 1, q(1));
    let delta = Mor::matrix(obj, obj.tensor(obj).expect("same ambient"), d).expect("4x2");
    let epsilon = Mor::matrix(obj, obj.unit(), Matrix::from_rows(vec![vec![q(1), x.clone()]], 2)).expect("1x2");
    ComonoidData { carrier: obj, delta, epsilon }
}

/// Checks a multiplication table for the group axioms, returning the identity.
pub fn validate_group(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {a} has {} entries, expected {n}", row.len())));
        }
        if let Some(b) = row.iter().position(|&v| v >= n) {
            return Err(Error::NotAGroup(format!("closure: {a}·{b} = {} is not an element", row[b])));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for (a, row) in table.iter().enumerate() {
        if !(0..n).any(|b| row[b] == e && table[b][a] == e) {
            return Err(Error::NotAGroup(format!("element {a} has no inverse")));
        }
    }
    Ok(e)
}

/// The coalgebra of functions on a finite group, in the basis of point masses:
/// `δ(e_z) = Σ_{xy=z} eₓ⊗e_y`, `ε(e_z) = [z = 1]`.
pub fn function_coalgebra(table: &[Vec<usize>]) -> Result<ComonoidData> {
    let unit = validate_group(table)?;
    let n = table.len();
    let x = Ambient::FinVectTensor.obj(n);
    let d = Matrix::from_fn(n * n, n, |r, z| if table[r / n][r % n] == z { q(1) } else { q(0) });
    let eps = Matrix::from_fn(1, n, |_, z| if z == unit { q(1) } else { q(0) });
    ComonoidData::new(x, Mor::matrix(x, x.tensor(x)?, d)?, Mor::matrix(x, x.unit(), eps)?)
}

/// Cosemigroup `a ↦ (f(a), g(a))` on a direct-sum object from two commuting
/// idempotents. The counit slot holds the zero map to the unit.
pub fn projector_cosemigroup(f: &Mor, g: &Mor) -> Result<ComonoidData> {
    let x = f.dom();
    if x.ambient != Ambient::FinVectSum || g.ambient() != Ambient::FinVectSum {
        return Err(Error::Ambient("projector cosemigroups live in finvect_sum".into()));
    }
    if f.cod() != x || g.dom() != x || g.cod() != x {
        return Err(Error::Shape("projectors must be endomorphisms of one object".into()));
    }
    if f.after(f)? != *f {
        return Err(Error::NotProjectors("f∘f ≠ f".into()));
    }
    if g.after(g)? != *g {
        return Err(Error::NotProjectors("g∘g ≠ g".into()));
    }
    if f.after(g)? != g.after(f)? {
        return Err(Error::NotCommuting("f∘g ≠ g∘f".into()));
    }
    let delta = Mor::matrix(x, x.tensor(x)?, f.to_matrix().vstack(&g.to_matrix()))?;
    ComonoidData::new(x, delta, Mor::to_unit(x)?)
}

/// A comonoid over the prime field with `p` elements, stored as residues.
/// `delta[j·dim + k][i]` is the coefficient of `a_j⊗a_k` in `δ(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModComonoid {
    pub p: u32,
    pub dim: usize,
    pub delta: Vec<Vec<u32>>,
    pub epsilon: Vec<u32>,
}

impl ModComonoid {
    /// Reduces a rational comonoid on FinVectTensor modulo `p`.
    pub fn reduce(c: &ComonoidData, p: u32) -> Result<Self> {
        if c.ambient() != Ambient::FinVectTensor {
            return Err(Error::Ambient("only finvect_tensor comonoids reduce to coefficient tables".into()));
        }
        let red = |v: &Q| -> Result<u32> {
            let pb = num::BigInt::from(p);
            let den = v.denom() % &pb;
            if num::Zero::is_zero(&den) {
                return Err(Error::Malformed(format!("denominator of {v} vanishes mod {p}")));
            }
            let to_u = |b: num::BigInt| -> i64 { i64::try_from(((b % &pb) + &pb) % &pb).expect("small residue") };
            let (n, d) = (to_u(v.numer().clone()), to_u(den));
            let inv = (1..p as i64).find(|k| (d * k) % p as i64 == 1).expect("prime modulus");
            Ok(((n * inv) % p as i64) as u32)
        };
        let dm = c.delta.to_matrix();
        let em = c.epsilon.to_matrix();
        let delta = (0..dm.rows()).map(|r| (0..dm.cols()).map(|i| red(dm.get(r, i))).collect()).collect::<Result<_>>()?;
        let epsilon = (0..em.cols()).map(|i| red(em.get(0, i))).collect::<Result<_>>()?;
        Ok(ModComonoid { p, dim: c.carrier.size, delta, epsilon })
    }
}

fn mod_report<const P: u32>(c: &ModComonoid) -> Report {
    let n = c.dim;
    let d = Matrix::from_fn(n * n, n, |r, i| Fp::<P>::new(c.delta[r][i] as i64));
    let e = Matrix::from_fn(1, n, |_, i| Fp::<P>::new(c.epsilon[i] as i64));
    let id = Matrix::<Fp<P>>::identity(n);
    let mut rep = Report::new(format!("comonoid of dimension {n} over F_{P}"));
    let lhs = id.kron(&d).mul(&d);
    let rhs = d.kron(&id).mul(&d);
    rep.record("coassociativity", lhs == rhs, || "coefficients differ".into());
    let left = e.kron(&id).mul(&d);
    rep.record("left_counit", left == id, || "coefficients differ".into());
    let right = id.kron(&e).mul(&d);
    rep.record("right_counit", right == id, || "coefficients differ".into());
    rep
}

/// Comonoid laws evaluated with prime-field matrices.
pub fn check_mod_comonoid(c: &ModComonoid) -> Result<Report> {
    match c.p {
        2 => Ok(mod_report::<2>(c)),
        3 => Ok(mod_report::<3>(c)),
        5 => Ok(mod_report::<5>(c)),
        p => Err(Error::Unsupported(format!("modulus {p}"))),
    }
}

pub const SOLVER_MAX_DIM: usize = 2;
pub const SOLVER_MAX_FIELD: u32 = 5;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn tuples(len: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as usize).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = (code % p as usize) as u32;
            code /= p as usize;
        }
        v
    })
}

/// Every comonoid structure on a space of dimension `dim` over the field with
/// `p` elements, by exhaustive search over structure constants. Counits are
/// enumerated first and each coproduct column is filtered by the counit laws
/// before coassociativity is imposed on the combinations.
pub fn solve_comonoid_equations(dim: usize, p: u32) -> Result<Vec<ModComonoid>> {
    if !is_prime(p) {
        return Err(Error::Malformed(format!("{p} is not prime")));
    }
    if dim > SOLVER_MAX_DIM || p > SOLVER_MAX_FIELD {
        return Err(Error::BoundsExceeded(format!(
            "solver handles dimension ≤ {SOLVER_MAX_DIM} over fields of size ≤ {SOLVER_MAX_FIELD}"
        )));
    }
    let n = dim;
    let md = |v: u32| v % p;
    let mut out = Vec::new();
    for q in tuples(n, p) {
        // columns[i]: admissible r^i as a vector indexed by j·n+k.
        let columns: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|i| {
                tuples(n * n, p)
                    .filter(|r| {
                        (0..n).all(|k| md((0..n).map(|j| r[j * n + k] * q[j]).sum()) == u32::from(k == i))
                            && (0..n).all(|j| md((0..n).map(|k| r[j * n + k] * q[k]).sum()) == u32::from(j == i))
                    })
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; n];
        if columns.iter().any(|c| c.is_empty()) {
            continue;
        }
        loop {
            let r = |i: usize, j: usize, k: usize| columns[i][choice[i]][j * n + k];
            let coassoc = (0..n).all(|i| {
                (0..n).all(|k| {
                    (0..n).all(|l| {
                        (0..n).all(|m| {
                            let a: u32 = (0..n).map(|j| r(i, j, k) * r(j, l, m)).sum();
                            let b: u32 = (0..n).map(|j| r(i, l, j) * r(j, m, k)).sum();
                            md(a) == md(b)
                        })
                    })
                })
            });
            if coassoc {
                let delta = (0..n * n).map(|row| (0..n).map(|i| columns[i][choice[i]][row]).collect()).collect();
                out.push(ModComonoid { p, dim: n, delta, epsilon: q.clone() });
            }
            // Advance the mixed-radix counter over column choices.
            let mut pos = 0;
            while pos < n {
                choice[pos] += 1;
                if choice[pos] < columns[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q_frac;

    fn set(n: usize) -> Obj {
        Ambient::FinSet.obj(n)
    }

    #[test]
    fn diagonal_is_the_comonoid_on_sets() {
        let c = diagonal(set(3)).unwrap();
        assert!(check_comonoid(&c).unwrap().passed());
        assert!(is_sigma_commutative(&c).unwrap());
        assert!(check_coproduct_mono(&c));
    }

    #[test]
    fn skewed_set_cosemigroup_fails_counit() {
        // δ(a)=(a,a), δ(b)=(b,a), δ(c)=(a,c)
        let a = set(3);
        let delta = Mor::table(a, set(9), vec![0, 3, 2]).unwrap();
        let c = ComonoidData::new(a, delta, Mor::to_unit(a).unwrap()).unwrap();
        assert!(check_cosemigroup(&c).unwrap().passed());
        let rep = check_comonoid(&c).unwrap();
        assert_eq!(rep.law_passed("left_counit"), Some(false));
        let w = rep.checks.iter().find(|c| c.law == "left_counit").unwrap().witness.clone();
        assert_eq!(w.as_deref(), Some("at element 1"));
        assert!(!is_sigma_commutative(&c).unwrap());
    }

    #[test]
    fn pointed_set_is_only_a_cosemigroup() {
        let a = set(2);
        let delta = Mor::table(a, set(4), vec![0, 1]).unwrap();
        let c = ComonoidData::new(a, delta, Mor::to_unit(a).unwrap()).unwrap();
        assert!(check_cosemigroup(&c).unwrap().passed());
        assert!(!check_comonoid(&c).unwrap().passed());
    }

    #[test]
    fn dim2_family_points() {
        for x in [q(0), q(1), q_frac(-3, 2), q(2)] {
            let c = dim2_family(&x);
            assert!(check_comonoid(&c).unwrap().passed(), "x = {x}");
            assert!(is_sigma_commutative(&c).unwrap());
            assert!(check_coproduct_mono(&c));
        }
    }

    #[test]
    fn group_coalgebras() {
        let z2 = vec![vec![0, 1], vec![1, 0]];
        let c = function_coalgebra(&z2).unwrap();
        let d = c.delta.as_matrix().unwrap();
        assert_eq!(d.column(0), vec![q(1), q(0), q(0), q(1)]);
        assert_eq!(d.column(1), vec![q(0), q(1), q(1), q(0)]);
        assert!(check_comonoid(&c).unwrap().passed());
        assert!(is_sigma_commutative(&c).unwrap());
        let s3 = s3_table();
        let c = function_coalgebra(&s3).unwrap();
        assert!(check_comonoid(&c).unwrap().passed());
        assert!(!is_sigma_commutative(&c).unwrap());
        let trivial = function_coalgebra(&[vec![0]]).unwrap();
        assert_eq!(trivial, grouplike(1).unwrap());
        assert!(matches!(function_coalgebra(&[vec![0, 0], vec![0, 1]]), Err(Error::NotAGroup(_))));
    }

    fn s3_table() -> Vec<Vec<usize>> {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
        perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect()
    }

    #[test]
    fn projector_examples() {
        let v = Ambient::FinVectSum.obj(2);
        let id = Mor::identity(v);
        let c = projector_cosemigroup(&id, &id).unwrap();
        assert_eq!(c, diagonal(v).unwrap());
        assert!(check_comonoid(&c).unwrap().passed());
        let diag = |a, b| Mor::matrix(v, v, Matrix::diagonal(&[q(a), q(b)])).unwrap();
        let c = projector_cosemigroup(&diag(1, 0), &diag(0, 1)).unwrap();
        assert!(check_cosemigroup(&c).unwrap().passed());
        assert!(!check_comonoid(&c).unwrap().passed());
        let f = Mor::matrix(v, v, Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(0)]], 2)).unwrap();
        let c = projector_cosemigroup(&f, &id).unwrap();
        assert!(check_cosemigroup(&c).unwrap().passed());
        assert!(!check_comonoid(&c).unwrap().passed());
        assert!(matches!(projector_cosemigroup(&diag(2, 0), &id), Err(Error::NotProjectors(_))));
        let p = Mor::matrix(v, v, Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(1), q(0)]], 2)).unwrap();
        assert!(matches!(projector_cosemigroup(&diag(1, 0), &p), Err(Error::NotCommuting(_))));
    }

    #[test]
    fn solver_small_cases() {
        let one = solve_comonoid_equations(1, 2).unwrap();
        assert_eq!(one, vec![ModComonoid { p: 2, dim: 1, delta: vec![vec![1]], epsilon: vec![1] }]);
        let sols = solve_comonoid_equations(2, 2).unwrap();
        for x in [0, 1] {
            let pt = ModComonoid::reduce(&dim2_family(&q(x)), 2).unwrap();
            assert!(sols.contains(&pt));
        }
        for s in &sols {
            assert!(check_mod_comonoid(s).unwrap().passed());
        }
        assert!(matches!(solve_comonoid_equations(3, 2), Err(Error::BoundsExceeded(_))));
        assert!(matches!(solve_comonoid_equations(1, 7), Err(Error::BoundsExceeded(_))));
        assert!(matches!(solve_comonoid_equations(1, 4), Err(Error::Malformed(_))));
    }
}
