//! The three concrete ambient categories: finite sets with cartesian product,
//! and finite-dimensional rational vector spaces with direct sum or tensor
//! product. Objects are size-indexed; pairs are flattened row-major.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    FinSet,
    FinVectSum,
    FinVectTensor,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::FinSet => "finset",
            Ambient::FinVectSum => "finvect_sum",
            Ambient::FinVectTensor => "finvect_tensor",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "finset" => Ok(Ambient::FinSet),
            "finvect_sum" => Ok(Ambient::FinVectSum),
            "finvect_tensor" => Ok(Ambient::FinVectTensor),
            other => Err(Error::Malformed(format!("unknown ambient {other:?}"))),
        }
    }

    pub fn unit(self) -> Obj {
        Obj { ambient: self, size: self.unit_size() }
    }

    pub fn unit_size(self) -> usize {
        match self {
            Ambient::FinVectSum => 0,
            _ => 1,
        }
    }

    pub fn obj(self, size: usize) -> Obj {
        Obj { ambient: self, size }
    }

    pub fn tensor_size(self, a: usize, b: usize) -> usize {
        match self {
            Ambient::FinVectSum => a + b,
            _ => a * b,
        }
    }

    pub fn is_linear(self) -> bool {
        self != Ambient::FinSet
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj {
    pub ambient: Ambient,
    pub size: usize,
}

impl Obj {
    pub fn new(ambient: Ambient, size: usize) -> Self {
        Obj { ambient, size }
    }

    pub fn tensor(self, other: Obj) -> Result<Obj> {
        same_ambient(self.ambient, other.ambient)?;
        Ok(Obj { ambient: self.ambient, size: self.ambient.tensor_size(self.size, other.size) })
    }

    pub fn unit(self) -> Obj {
        self.ambient.unit()
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.size)
    }
}

fn same_ambient(a: Ambient, b: Ambient) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Ambient(format!("{} vs {}", a.name(), b.name())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Body {
    Table(Vec<usize>),
    Matrix(Matrix<Q>),
}

/// A morphism with explicit endpoints. Function tables live in FinSet,
/// `cod.size × dom.size` matrices in the two linear ambients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mor {
    dom: Obj,
    cod: Obj,
    body: Body,
}

impl Mor {
    pub fn table(dom: Obj, cod: Obj, table: Vec<usize>) -> Result<Mor> {
        same_ambient(dom.ambient, cod.ambient)?;
        if dom.ambient != Ambient::FinSet {
            return Err(Error::Shape("function tables only live in finset".into()));
        }
        if table.len() != dom.size {
            return Err(Error::Shape(format!("table has {} entries, domain size is {}", table.len(), dom.size)));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod.size) {
            return Err(Error::Shape(format!("table entry {bad} out of range for codomain size {}", cod.size)));
        }
        Ok(Mor { dom, cod, body: Body::Table(table) })
    }

    pub fn matrix(dom: Obj, cod: Obj, m: Matrix<Q>) -> Result<Mor> {
        same_ambient(dom.ambient, cod.ambient)?;
        if !dom.ambient.is_linear() {
            return Err(Error::Shape("matrices only live in the linear ambients".into()));
        }
        if m.rows() != cod.size || m.cols() != dom.size {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                cod.size,
                dom.size
            )));
        }
        Ok(Mor { dom, cod, body: Body::Matrix(m) })
    }

    pub fn identity(x: Obj) -> Mor {
        match x.ambient {
            Ambient::FinSet => Mor { dom: x, cod: x, body: Body::Table((0..x.size).collect()) },
            _ => Mor { dom: x, cod: x, body: Body::Matrix(Matrix::identity(x.size)) },
        }
    }

    /// The map sending everything to the unit (terminal in FinSet, zero in
    /// FinVectSum). Not available in FinVectTensor, where it is not canonical.
    pub fn to_unit(x: Obj) -> Result<Mor> {
        let e = x.unit();
        match x.ambient {
            Ambient::FinSet => Mor::table(x, e, vec![0; x.size]),
            Ambient::FinVectSum => Mor::matrix(x, e, Matrix::zeros(0, x.size)),
            Ambient::FinVectTensor => Err(Error::Unsupported("no canonical map to the unit in finvect_tensor".into())),
        }
    }

    pub fn dom(&self) -> Obj {
        self.dom
    }

    pub fn cod(&self) -> Obj {
        self.cod
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn ambient(&self) -> Ambient {
        self.dom.ambient
    }

    pub fn as_table(&self) -> Option<&[usize]> {
        match &self.body {
            Body::Table(t) => Some(t),
            Body::Matrix(_) => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix<Q>> {
        match &self.body {
            Body::Matrix(m) => Some(m),
            Body::Table(_) => None,
        }
    }

    /// Matrix of the linear extension; for tables this is the 0/1 matrix.
    pub fn to_matrix(&self) -> Matrix<Q> {
        match &self.body {
            Body::Matrix(m) => m.clone(),
            Body::Table(t) => Matrix::from_fn(self.cod.size, self.dom.size, |i, j| {
                if t[j] == i {
                    Q::one()
                } else {
                    Q::zero()
                }
            }),
        }
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Mor) -> Result<Mor> {
        compose(self, f)
    }

    pub fn scale(&self, c: &Q) -> Result<Mor> {
        match &self.body {
            Body::Matrix(m) => Mor::matrix(self.dom, self.cod, m.scale(c)),
            Body::Table(_) => Err(Error::Shape("cannot scale a function table".into())),
        }
    }

    pub fn is_mono(&self) -> bool {
        match &self.body {
            Body::Table(t) => {
                let mut seen = vec![false; self.cod.size];
                t.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            }
            Body::Matrix(m) => m.rank() == self.dom.size,
        }
    }

    pub fn is_iso(&self) -> bool {
        self.dom.size == self.cod.size && self.is_mono()
    }

    pub fn inverse(&self) -> Result<Mor> {
        if !self.is_iso() {
            return Err(Error::Shape("morphism is not invertible".into()));
        }
        match &self.body {
            Body::Table(t) => {
                let mut inv = vec![0; t.len()];
                for (i, &v) in t.iter().enumerate() {
                    inv[v] = i;
                }
                Mor::table(self.cod, self.dom, inv)
            }
            Body::Matrix(m) => Mor::matrix(self.cod, self.dom, m.inverse().expect("full rank square")),
        }
    }

    /// First domain element (FinSet) or basis vector (linear) on which the two
    /// parallel morphisms disagree.
    pub fn first_difference(&self, other: &Mor) -> Option<usize> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some(0);
        }
        match (&self.body, &other.body) {
            (Body::Table(a), Body::Table(b)) => a.iter().zip(b).position(|(x, y)| x != y),
            _ => {
                let (a, b) = (self.to_matrix(), other.to_matrix());
                (0..self.dom.size).find(|&j| a.column(j) != b.column(j))
            }
        }
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Table(t) => write!(f, "{}→{} {:?}", self.dom, self.cod, t),
            Body::Matrix(m) => write!(f, "{}→{} {:?}", self.dom, self.cod, m),
        }
    }
}

/// `g ∘ f`.
pub fn compose(g: &Mor, f: &Mor) -> Result<Mor> {
    same_ambient(f.ambient(), g.ambient())?;
    if f.cod != g.dom {
        return Err(Error::Composition(format!("codomain {} does not match domain {}", f.cod, g.dom)));
    }
    let body = match (&g.body, &f.body) {
        (Body::Table(gt), Body::Table(ft)) => Body::Table(ft.iter().map(|&x| gt[x]).collect()),
        (Body::Matrix(gm), Body::Matrix(fm)) => Body::Matrix(gm.mul(fm)),
        _ => unreachable!("bodies follow the ambient"),
    };
    Ok(Mor { dom: f.dom, cod: g.cod, body })
}

/// Composite of a chain written left to right as in `h ∘ g ∘ f`.
pub fn compose_all(chain: &[&Mor]) -> Result<Mor> {
    let mut iter = chain.iter().rev();
    let first = iter.next().ok_or_else(|| Error::Composition("empty chain".into()))?;
    let mut acc = (*first).clone();
    for m in iter {
        acc = compose(m, &acc)?;
    }
    Ok(acc)
}

pub fn tensor(f: &Mor, g: &Mor) -> Result<Mor> {
    same_ambient(f.ambient(), g.ambient())?;
    let dom = f.dom.tensor(g.dom)?;
    let cod = f.cod.tensor(g.cod)?;
    let body = match (&f.body, &g.body) {
        (Body::Table(ft), Body::Table(gt)) => {
            let (gd, gc) = (g.dom.size, g.cod.size);
            Body::Table((0..dom.size).map(|i| ft[i / gd] * gc + gt[i % gd]).collect())
        }
        (Body::Matrix(fm), Body::Matrix(gm)) => match f.ambient() {
            Ambient::FinVectSum => Body::Matrix(fm.block_diag(gm)),
            _ => Body::Matrix(fm.kron(gm)),
        },
        _ => unreachable!("bodies follow the ambient"),
    };
    Ok(Mor { dom, cod, body })
}

pub fn tensor_all(ms: &[&Mor]) -> Result<Mor> {
    let mut iter = ms.iter();
    let first = iter.next().ok_or_else(|| Error::Shape("empty tensor".into()))?;
    let mut acc = (*first).clone();
    for m in iter {
        acc = tensor(&acc, m)?;
    }
    Ok(acc)
}

pub fn sub(f: &Mor, g: &Mor) -> Result<Matrix<Q>> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::Shape("difference of non-parallel morphisms".into()));
    }
    Ok(f.to_matrix().sub(&g.to_matrix()))
}

/// Equalizer of a parallel pair as a subobject with its inclusion. FinSet keeps
/// the agreeing points in ascending order; the linear ambients use the
/// echelon kernel basis of `f − g` as columns.
pub fn equalizer(f: &Mor, g: &Mor) -> Result<(Obj, Mor)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::Shape("equalizer of non-parallel morphisms".into()));
    }
    match (&f.body, &g.body) {
        (Body::Table(ft), Body::Table(gt)) => {
            let pts: Vec<usize> = (0..f.dom.size).filter(|&i| ft[i] == gt[i]).collect();
            let x = Obj::new(Ambient::FinSet, pts.len());
            Ok((x, Mor::table(x, f.dom, pts)?))
        }
        _ => {
            let k = sub(f, g)?.kernel();
            let x = Obj::new(f.ambient(), k.cols());
            Ok((x, Mor::matrix(x, f.dom, k)?))
        }
    }
}

/// The unique `k` with `m ∘ k = g`, for a monomorphism `m`.
pub fn factor_through_mono(m: &Mor, g: &Mor) -> Result<Mor> {
    if m.cod != g.cod {
        return Err(Error::FactorizationFailure(format!("codomains {} and {} differ", m.cod, g.cod)));
    }
    if !m.is_mono() {
        return Err(Error::FactorizationFailure("factoring map is not mono".into()));
    }
    match (&m.body, &g.body) {
        (Body::Table(mt), Body::Table(gt)) => {
            let mut pre = vec![usize::MAX; m.cod.size];
            for (i, &v) in mt.iter().enumerate() {
                pre[v] = i;
            }
            let mut k = Vec::with_capacity(gt.len());
            for (i, &v) in gt.iter().enumerate() {
                if pre[v] == usize::MAX {
                    return Err(Error::FactorizationFailure(format!("element {i} maps outside the image")));
                }
                k.push(pre[v]);
            }
            Mor::table(g.dom, m.dom, k)
        }
        _ => {
            let (mm, gm) = (m.to_matrix(), g.to_matrix());
            let k = mm
                .solve(&gm)
                .ok_or_else(|| Error::FactorizationFailure("map does not land in the image".into()))?;
            Mor::matrix(g.dom, m.dom, k)
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q;

    fn set(n: usize) -> Obj {
        Obj::new(Ambient::FinSet, n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(), cols)
    }

    #[test]
    fn table_composition() {
        let f = Mor::table(set(2), set(2), vec![1, 0]).unwrap();
        assert_eq!(compose(&f, &f).unwrap(), Mor::identity(set(2)));
        let f = Mor::table(set(3), set(2), vec![0, 0, 1]).unwrap();
        let g = Mor::table(set(2), set(1), vec![0, 0]).unwrap();
        assert_eq!(compose(&g, &f).unwrap().as_table().unwrap(), &[0, 0, 0]);
    }

    #[test]
    fn sum_composition() {
        let v = |n| Obj::new(Ambient::FinVectSum, n);
        let f = Mor::matrix(v(2), v(2), qm(&[&[1, 1], &[0, 1]])).unwrap();
        let g = Mor::matrix(v(2), v(2), qm(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(compose(&g, &f).unwrap().as_matrix().unwrap(), &qm(&[&[2, 2], &[0, 3]]));
    }

    #[test]
    fn tensor_examples() {
        let id = tensor(&Mor::identity(set(2)), &Mor::identity(set(3))).unwrap();
        assert_eq!(id, Mor::identity(set(6)));
        let t = |n| Obj::new(Ambient::FinVectTensor, n);
        let a = Mor::matrix(t(1), t(1), qm(&[&[2]])).unwrap();
        let b = Mor::matrix(t(1), t(1), qm(&[&[3]])).unwrap();
        assert_eq!(tensor(&a, &b).unwrap().as_matrix().unwrap(), &qm(&[&[6]]));
        let f = Mor::table(set(2), set(2), vec![1, 0]).unwrap();
        let g = Mor::table(set(1), set(1), vec![0]).unwrap();
        assert_eq!(tensor(&f, &g).unwrap().as_table().unwrap(), &[1, 0]);
    }

    #[test]
    fn equalizer_examples() {
        let f = Mor::table(set(3), set(2), vec![0, 1, 1]).unwrap();
        let g = Mor::table(set(3), set(2), vec![0, 0, 1]).unwrap();
        let (x, h) = equalizer(&f, &g).unwrap();
        assert_eq!(x.size, 2);
        assert_eq!(h.as_table().unwrap(), &[0, 2]);
        let v = |n| Obj::new(Ambient::FinVectSum, n);
        let f = Mor::matrix(v(2), v(1), qm(&[&[1, 0]])).unwrap();
        let g = Mor::matrix(v(2), v(1), qm(&[&[0, 1]])).unwrap();
        let (x, h) = equalizer(&f, &g).unwrap();
        assert_eq!(x.size, 1);
        assert_eq!(h.as_matrix().unwrap(), &qm(&[&[1], &[1]]));
        let (x, h) = equalizer(&f, &f).unwrap();
        assert_eq!(x, f.dom());
        assert_eq!(h, Mor::identity(f.dom()));
    }

    #[test]
    fn factorization() {
        let m = Mor::table(set(2), set(4), vec![3, 1]).unwrap();
        let g = Mor::table(set(3), set(4), vec![1, 1, 3]).unwrap();
        let k = factor_through_mono(&m, &g).unwrap();
        assert_eq!(k.as_table().unwrap(), &[1, 1, 0]);
        let bad = Mor::table(set(1), set(4), vec![0]).unwrap();
        assert!(matches!(factor_through_mono(&m, &bad), Err(Error::FactorizationFailure(_))));
    }

    #[test]
    fn shape_validation() {
        assert!(Mor::table(set(2), set(2), vec![0, 2]).is_err());
        assert!(Mor::table(set(2), set(2), vec![0]).is_err());
        let v = |n| Obj::new(Ambient::FinVectSum, n);
        assert!(Mor::matrix(v(2), v(1), qm(&[&[1], &[1]])).is_err());
        let t = Obj::new(Ambient::FinVectTensor, 1);
        assert!(matches!(compose(&Mor::identity(t), &Mor::identity(set(1))), Err(Error::Ambient(_))));
    }
}
