#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relcat::category::{Ambient, Mor};
use relcat::matrix::{q, q_frac, Matrix, Q};
use relcat::monoidal::{builtin_sigma, Universe};
use relcat::quantization::{MonoidObject, QuantTriple};
use relcat::relation::Relation;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Seed for randomized suites; `RELCAT_SEED` overrides the fixed default.
pub fn seed() -> u64 {
    std::env::var("RELCAT_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Q {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-5..=5);
    }
    q_frac(p, rng.gen_range(1..=4))
}

pub fn any_rat(rng: &mut ChaCha8Rng) -> Q {
    q_frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// An arbitrary FinSet relation: every arrow gets a random source and target.
pub fn random_finset_relation(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Relation {
    let amb = Ambient::FinSet;
    let table = (0..b).map(|_| rng.gen_range(0..a * a)).collect();
    Relation::unchecked(amb.obj(a), Mor::table(amb.obj(b), amb.obj(a * a), table).unwrap()).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, a: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..a {
        for y in 0..a {
            if rng.gen_bool(0.35) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Classical relational composition by a double loop.
pub fn compose_pairs(r: &[(usize, usize)], s: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &(x, y) in r {
        for &(y2, z) in s {
            if y == y2 {
                out.insert((x, z));
            }
        }
    }
    out.into_iter().collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Q> {
    let entries = (0..rows).map(|_| (0..cols).map(|_| any_rat(rng)).collect()).collect();
    Matrix::from_rows(entries, cols)
}

pub fn diag(amb: Ambient, d: Vec<Q>) -> Mor {
    let o = amb.obj(d.len());
    Mor::matrix(o, o, Matrix::diagonal(&d)).unwrap()
}

pub fn tensor_universe() -> Universe {
    Universe::new(Ambient::FinVectTensor, [1, 2, 4], None)
}

pub fn swap22() -> Mor {
    builtin_sigma(Ambient::FinVectTensor, 2, 2)
}

/// Scalar `λ = c`, arbitrary invertible `η`.
pub fn scalar_triple(rng: &mut ChaCha8Rng) -> QuantTriple {
    let u = tensor_universe();
    let c = nonzero_rat(rng);
    let mut t = QuantTriple::scalar(u.clone(), &c, vec![swap22()]).unwrap();
    t.eta = diag(Ambient::FinVectTensor, vec![nonzero_rat(rng)]);
    QuantTriple::new(t.universe, t.lambda, t.mu, t.eta, t.generators).unwrap()
}

/// Diagonal `λ`, arbitrary on `(2,2)` and the unit pairs of 2, and invariant
/// under the swap of `2⊗2` wherever 4 is a factor.
pub fn diagonal_triple(rng: &mut ChaCha8Rng) -> QuantTriple {
    let amb = Ambient::FinVectTensor;
    let u = tensor_universe();
    let mut lambda = BTreeMap::new();
    for (x, y) in u.pairs() {
        let n = x * y;
        let d = if x == 4 || y == 4 {
            let (a, b, c) = (nonzero_rat(rng), nonzero_rat(rng), nonzero_rat(rng));
            vec![a, b.clone(), b, c]
        } else {
            (0..n).map(|_| nonzero_rat(rng)).collect()
        };
        lambda.insert((x, y), diag(amb, d));
    }
    let id = QuantTriple::identity(u.clone(), vec![]);
    QuantTriple::new(u, lambda, id.mu, diag(amb, vec![nonzero_rat(rng)]), vec![swap22()]).unwrap()
}

fn sign(rng: &mut ChaCha8Rng) -> Q {
    if rng.gen_bool(0.5) {
        q(1)
    } else {
        q(-1)
    }
}

/// `λ = 1`, `η = 1`, `μ` diagonal with ±1 entries, swap-invariant on 4.
pub fn sign_triple(rng: &mut ChaCha8Rng) -> QuantTriple {
    let amb = Ambient::FinVectTensor;
    let u = tensor_universe();
    let mut t = QuantTriple::identity(u, vec![swap22()]);
    t.mu.insert(2, diag(amb, vec![sign(rng), sign(rng)]));
    let b = sign(rng);
    t.mu.insert(4, diag(amb, vec![sign(rng), b.clone(), b, sign(rng)]));
    QuantTriple::new(t.universe, t.lambda, t.mu, t.eta, t.generators).unwrap()
}

pub fn sampled_triple(rng: &mut ChaCha8Rng, i: usize) -> QuantTriple {
    match i % 3 {
        0 => scalar_triple(rng),
        1 => diagonal_triple(rng),
        _ => sign_triple(rng),
    }
}

/// Digit sum modulo `n` of a basis index of `X^k`, `X` of dimension `n`.
pub fn digit_sum(mut idx: usize, n: usize, k: usize) -> usize {
    let mut s = 0;
    for _ in 0..k {
        s += idx % n;
        idx /= n;
    }
    s % n
}

pub fn log_n(size: usize, n: usize) -> usize {
    let (mut k, mut p) = (0, 1);
    while p < size {
        p *= n;
        k += 1;
    }
    assert_eq!(p, size, "{size} is not a power of {n}");
    k
}

/// The group algebra of `Z/n` in FinVectTensor with its generators.
pub fn cyclic_group_algebra(n: usize) -> (MonoidObject, Vec<Mor>) {
    let amb = Ambient::FinVectTensor;
    let o = |k| amb.obj(k);
    let nu = Mor::matrix(o(n * n), o(n), Matrix::from_fn(n, n * n, |r, c| if (c / n + c % n) % n == r { q(1) } else { q(0) }))
        .unwrap();
    let unit = Mor::matrix(o(1), o(n), Matrix::from_fn(n, 1, |r, _| if r == 0 { q(1) } else { q(0) })).unwrap();
    let gens = vec![nu.clone(), unit.clone(), builtin_sigma(amb, n, n), builtin_sigma(amb, n, n * n)];
    (MonoidObject { carrier: n, mult: nu, unit }, gens)
}

/// `λ_{X^a,X^b} = w(Σxs, Σys)` and `μ_{X^k} = χ(Σxs)` with `χ(0) = 1`.
pub fn group_graded_triple(rng: &mut ChaCha8Rng, n: usize, gens: Vec<Mor>) -> QuantTriple {
    let amb = Ambient::FinVectTensor;
    let u = Universe::new(amb, [1, n, n * n, n * n * n], None);
    let w: Vec<Vec<Q>> = (0..n).map(|_| (0..n).map(|_| nonzero_rat(rng)).collect()).collect();
    let mut chi = vec![q(1)];
    chi.extend((1..n).map(|_| sign(rng)));
    let mut lambda = BTreeMap::new();
    for (x, y) in u.pairs() {
        let (ka, kb) = (log_n(x, n), log_n(y, n));
        let d = (0..x * y).map(|i| w[digit_sum(i / y, n, ka)][digit_sum(i % y, n, kb)].clone()).collect();
        lambda.insert((x, y), diag(amb, d));
    }
    let mut mu = BTreeMap::new();
    for x in u.sizes() {
        let k = log_n(x, n);
        mu.insert(x, diag(amb, (0..x).map(|i| chi[digit_sum(i, n, k)].clone()).collect()));
    }
    QuantTriple::new(u, lambda, mu, diag(amb, vec![nonzero_rat(rng)]), gens).unwrap()
}

/// Every string of `k` composable arrows, as arrow indices in path order.
pub fn paths_of_length(edges: &[(usize, usize)], k: usize) -> Vec<Vec<usize>> {
    fn extend(edges: &[(usize, usize)], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for (i, e) in edges.iter().enumerate() {
            if cur.last().is_none_or(|&j| edges[j].1 == e.0) {
                cur.push(i);
                extend(edges, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(edges, k, &mut Vec::new(), &mut out);
    out
}
