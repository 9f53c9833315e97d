//! The nine acceptance criteria, each reported on its own line. Runs
//! without the libtest harness so the lines always reach the output.

mod common;

use std::collections::BTreeSet;

use rand::Rng;
use relcat::algebra::{check_commutative, monoid_from_preorder};
use relcat::category::{Ambient, Mor};
use relcat::ccat::CCategory;
use relcat::comonoid::{self, ModComonoid};
use relcat::matrix::{q, Matrix};
use relcat::monoidal::{check_symmetric_monoidal, MonoidalStructure};
use relcat::products::{check_induced_constraints, check_symmetry, odot, tensor_relations};
use relcat::quantization::{check_h_membership, check_monoid, hat_transform, quantize_monoid, FunctorData};
use relcat::relation::{phi, psi, star, unit_bicomodule, Relation};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn phi_psi() -> Outcome {
    let mut rng = rng(1);
    let sets = CCategory::standard(Ambient::FinSet);
    for i in 0..200 {
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(0..=6));
        let r = random_finset_relation(&mut rng, a, b);
        let m = phi(&sets, &r).map_err(|e| e.to_string())?;
        ensure(psi(&sets, &m).map_err(|e| e.to_string())? == r, || format!("finset case {i}: psi(phi(r)) != r"))?;
        ensure(phi(&sets, &psi(&sets, &m).unwrap()).unwrap() == m, || format!("finset case {i}: phi(psi(m)) != m"))?;
    }
    let sums = CCategory::standard(Ambient::FinVectSum);
    let amb = Ambient::FinVectSum;
    for i in 0..50 {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let arrow = Mor::matrix(amb.obj(b), amb.obj(2 * a), random_matrix(&mut rng, 2 * a, b)).unwrap();
        let r = Relation::new(&sums, amb.obj(a), arrow).map_err(|e| e.to_string())?;
        let m = phi(&sums, &r).map_err(|e| e.to_string())?;
        ensure(psi(&sums, &m).map_err(|e| e.to_string())? == r, || format!("finvect_sum case {i}: psi(phi(r)) != r"))?;
        ensure(phi(&sums, &psi(&sums, &m).unwrap()).unwrap() == m, || format!("finvect_sum case {i}: phi(psi(m)) != m"))?;
    }
    Ok("200 finset and 50 finvect_sum relations round-trip exactly".into())
}

fn composition_oracle() -> Outcome {
    let mut rng = rng(2);
    let cc = CCategory::standard(Ambient::FinSet);
    let mut nonempty = 0;
    for i in 0..100 {
        let a = rng.gen_range(1..=5);
        let (b, e) = (random_subset(&mut rng, a), random_subset(&mut rng, a));
        let r = Relation::from_edges(a, &b).unwrap();
        let s = Relation::from_edges(a, &e).unwrap();
        let (out, _) = odot(&cc, &r, &s).map_err(|x| x.to_string())?;
        let expected = compose_pairs(&b, &e);
        nonempty += usize::from(!expected.is_empty());
        ensure(out.image().unwrap() == expected, || format!("case {i}: image differs from the double loop"))?;
    }
    Ok(format!("100 random subset pairs agree with the double loop ({nonempty} nonempty)"))
}

fn coherence() -> Outcome {
    let mut rng = rng(3);
    let cc = CCategory::standard(Ambient::FinSet);
    let mut checked = 0;
    for a in 1..=3 {
        let pool: Vec<_> = (0..3)
            .map(|_| {
                let b = rng.gen_range(1..=4);
                phi(&cc, &random_finset_relation(&mut rng, a, b)).unwrap()
            })
            .collect();
        for d in &pool {
            for g in &pool {
                for r in &pool {
                    let w = &pool[rng.gen_range(0..pool.len())];
                    let rep = check_induced_constraints(&cc, d, g, r, Some(w)).map_err(|e| e.to_string())?;
                    if let Some(f) = rep.failures().next() {
                        return Err(format!("|A| = {a}: {} fails at {}", f.law, f.witness.clone().unwrap_or_default()));
                    }
                    let t = tensor_relations(&cc, d, g).unwrap();
                    ensure(t.pi.is_mono(), || "pi is not mono".into())?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} bicomodule triples pass pentagon, triangle, unit and induced squares"))
}

fn symmetry() -> Outcome {
    let mut rng = rng(4);
    let cc = CCategory::standard(Ambient::FinSet);
    for i in 0..50 {
        let a = rng.gen_range(1..=3);
        let (b1, b2, b3) = (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=4));
        let d = phi(&cc, &random_finset_relation(&mut rng, a, b1)).unwrap();
        let g = phi(&cc, &random_finset_relation(&mut rng, a, b2)).unwrap();
        let r = phi(&cc, &random_finset_relation(&mut rng, a, b3)).unwrap();
        let rep = check_symmetry(&cc, &d, &g, Some(&r)).map_err(|e| e.to_string())?;
        if let Some(f) = rep.failures().next() {
            return Err(format!("pair {i}: {} fails", f.law));
        }
        let unit = unit_bicomodule(&cc, a).unwrap();
        ensure(star(&cc, &unit).unwrap() == unit, || format!("pair {i}: a* != a"))?;
    }
    Ok("50 random pairs satisfy every symmetry identity; a* = a".into())
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // Restricted growth strings.
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            cur.push(b);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn equivalence_monoids() -> Outcome {
    let cc = CCategory::standard(Ambient::FinSet);
    let cells: Vec<(usize, usize)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
    let mut preorders = 0;
    let mut found = BTreeSet::new();
    for mask in 0u32..512 {
        let edges: Vec<(usize, usize)> = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
        let has = |x: usize, y: usize| edges.contains(&(x, y));
        let reflexive = (0..3).all(|x| has(x, x));
        let transitive = edges.iter().all(|&(x, y)| (0..3).all(|z| !has(y, z) || has(x, z)));
        match monoid_from_preorder(&cc, 3, &edges) {
            Ok(m) => {
                ensure(reflexive && transitive, || format!("mask {mask}: accepted a non-preorder"))?;
                preorders += 1;
                let c = check_commutative(&cc, &m, 9).map_err(|e| e.to_string())?;
                let symmetric = edges.iter().all(|&(x, y)| has(y, x));
                ensure(c.witness.is_some() == symmetric, || format!("mask {mask}: witness {:?}", c.witness))?;
                ensure(c.report.passed() == symmetric, || format!("mask {mask}: report disagrees"))?;
                if c.witness.is_some() {
                    found.insert(edges);
                }
            }
            Err(_) => ensure(!(reflexive && transitive), || format!("mask {mask}: rejected a preorder"))?,
        }
    }
    let oracle: BTreeSet<Vec<(usize, usize)>> = set_partitions(3)
        .into_iter()
        .map(|p| cells.iter().copied().filter(|&(x, y)| p[x] == p[y]).collect())
        .collect();
    ensure(oracle.len() == 5, || "partition oracle miscounted".into())?;
    ensure(found == oracle, || format!("commutative monoids {found:?} differ from partitions"))?;
    Ok(format!("512 subsets: {preorders} preorders, commutative exactly on the 5 equivalence relations"))
}

fn permutation_group(n: usize) -> Vec<Vec<usize>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }
    let elems = perms(n);
    let index = |p: &Vec<usize>| elems.iter().position(|x| x == p).unwrap();
    elems.iter().map(|a| elems.iter().map(|b| index(&(0..n).map(|i| a[b[i]]).collect())).collect()).collect()
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn comonoids() -> Outcome {
    let mut rng = rng(6);
    for i in 0..20 {
        let x = any_rat(&mut rng);
        let c = comonoid::dim2_family(&x);
        ensure(comonoid::check_comonoid(&c).unwrap().passed(), || format!("family point {i} ({x}) fails"))?;
        ensure(comonoid::is_sigma_commutative(&c).unwrap(), || format!("family point {i} ({x}) not commutative"))?;
    }
    for (name, table) in [("Z2", cyclic(2)), ("Z3", cyclic(3)), ("S3", permutation_group(3))] {
        let c = comonoid::function_coalgebra(&table).map_err(|e| e.to_string())?;
        ensure(comonoid::check_comonoid(&c).unwrap().passed(), || format!("function coalgebra of {name} fails"))?;
    }
    let sols = comonoid::solve_comonoid_equations(2, 2).map_err(|e| e.to_string())?;
    for s in &sols {
        ensure(comonoid::check_mod_comonoid(s).unwrap().passed(), || format!("solver returned a non-comonoid {s:?}"))?;
    }
    for x in [0, 1] {
        let point = ModComonoid::reduce(&comonoid::dim2_family(&q(x)), 2).unwrap();
        ensure(sols.contains(&point), || format!("family point x = {x} missing from the solver output"))?;
    }
    Ok(format!("20 family points, Z2/Z3/S3 coalgebras, {} solutions over F2 all pass", sols.len()))
}

fn quantization_action() -> Outcome {
    let mut rng = rng(7);
    let s = MonoidalStructure::builtin(Ambient::FinVectTensor);
    let u = tensor_universe();
    let triples: Vec<_> = (0..20).map(|i| sampled_triple(&mut rng, i)).collect();
    for (i, t) in triples.iter().enumerate() {
        ensure(check_h_membership(t).unwrap().passed(), || format!("triple {i} not in the subgroup"))?;
        let h = hat_transform(&s, t).map_err(|e| format!("triple {i}: {e}"))?;
        let rep = check_symmetric_monoidal(&h, &u, &t.generators).unwrap();
        if let Some(f) = rep.failures().next() {
            return Err(format!("triple {i}: transformed structure fails {}", f.law));
        };
    }
    for i in 0..triples.len() {
        let (t1, t2) = (&triples[i], &triples[(i + 1) % triples.len()]);
        let twice = hat_transform(&hat_transform(&s, t1).unwrap(), t2).map_err(|e| e.to_string())?;
        let once = hat_transform(&s, &t1.product(t2).unwrap()).map_err(|e| e.to_string())?;
        ensure(twice.tabulate(&u).unwrap() == once.tabulate(&u).unwrap(), || format!("action law fails for pair {i}"))?;
    }
    Ok("20 scalar/diagonal/sign triples: transformed structures valid, action law exact".into())
}

fn monoid_transport() -> Outcome {
    let mut rng = rng(8);
    for n in [2, 3] {
        let (m, gens) = cyclic_group_algebra(n);
        let s = MonoidalStructure::builtin(Ambient::FinVectTensor);
        let phi_id = Mor::identity(Ambient::FinVectTensor.obj(n));
        for i in 0..20 {
            let t = group_graded_triple(&mut rng, n, gens.clone());
            let fd = FunctorData::identity_functor(t.clone());
            let out = quantize_monoid(&s, &m, Some(&phi_id), &fd).map_err(|e| e.to_string())?;
            if let Some(f) = out.report.failures().next() {
                return Err(format!("Z{n} triple {i}: {} fails", f.law));
            }
            let h = hat_transform(&s, &t).map_err(|e| format!("Z{n} triple {i}: {e}"))?;
            ensure(check_monoid(&h, &out.monoid).unwrap().passed(), || format!("Z{n} triple {i}: not a monoid"))?;
            ensure(out.witness.as_ref() == Some(&t.mu[&n]), || format!("Z{n} triple {i}: witness is not F(φ)∘μ"))?;
        }
    }
    Ok("Z2 and Z3 group algebras: 40 transported monoids and witnesses pass".into())
}

fn free_category() -> Outcome {
    let mut rng = rng(9);
    let cc = CCategory::standard(Ambient::FinSet);
    let mut total = 0;
    for g in 0..20 {
        let a = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=6);
        let edges: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(0..a), rng.gen_range(0..a))).collect();
        let r = Relation::from_edges(a, &edges).unwrap();
        let stages = relcat::algebra::generate_category(&cc, &r, None, 4).map_err(|e| e.to_string())?;
        for (j, st) in stages.iter().enumerate() {
            let expected: BTreeSet<Vec<usize>> = paths_of_length(&edges, j + 1).into_iter().collect();
            let got: BTreeSet<Vec<usize>> = st.paths.iter().cloned().collect();
            ensure(st.paths.len() == expected.len(), || format!("graph {g} stage {}: count differs", j + 1))?;
            ensure(got == expected, || format!("graph {g} stage {}: paths differ", j + 1))?;
            let ends = st.relation.edges().unwrap();
            for (p, e) in st.paths.iter().zip(ends) {
                ensure(e == (edges[p[0]].0, edges[*p.last().unwrap()].1), || format!("graph {g}: endpoints wrong"))?;
            }
            total += expected.len();
        }
    }
    Ok(format!("20 random graphs, stages 1-4 match the path oracle ({total} paths)"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("phi/psi isomorphism", phi_psi),
        ("composition oracle", composition_oracle),
        ("induced constraint coherence", coherence),
        ("symmetry identities", symmetry),
        ("equivalence relations as commutative monoids", equivalence_monoids),
        ("comonoid laws", comonoids),
        ("quantization action", quantization_action),
        ("monoid transport", monoid_transport),
        ("free category generation", free_category),
    ];
    println!("seed {}", seed());
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match f() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg} ({:.1?})", i + 1, start.elapsed()),
            Err(msg) => {
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    worked_composition_example();
    println!("worked composition example: PASS");
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

fn worked_composition_example() {
    let cc = CCategory::standard(Ambient::FinSet);
    let r = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let s = Relation::from_edges(3, &[(1, 2), (2, 0)]).unwrap();
    let (out, t) = odot(&cc, &r, &s).unwrap();
    assert_eq!(out.image().unwrap(), vec![(0, 2), (1, 0)]);
    assert_eq!(t.product.carrier.size, 2);

    let sums = CCategory::standard(Ambient::FinVectSum);
    let amb = Ambient::FinVectSum;
    let graph = |m: Vec<Vec<i64>>| {
        let rows: Vec<Vec<_>> = [vec![vec![1, 0], vec![0, 1]], m].concat().into_iter().map(|r| r.into_iter().map(q).collect()).collect();
        Relation::new(&sums, amb.obj(2), Mor::matrix(amb.obj(2), amb.obj(4), Matrix::from_rows(rows, 2)).unwrap()).unwrap()
    };
    let (comp, _) = odot(&sums, &graph(vec![vec![1, 1], vec![0, 1]]), &graph(vec![vec![2, 0], vec![0, 3]])).unwrap();
    let expected = graph(vec![vec![2, 2], vec![0, 3]]).arrow.to_matrix();
    let got = comp.arrow.to_matrix();
    assert_eq!(got.rank(), 2);
    let mut both = got.clone();
    both = both.hstack(&expected);
    assert_eq!(both.rank(), 2, "image is not the graph of the composite");
}
