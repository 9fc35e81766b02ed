//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact rational equalities; wall-clock limits are listed per criterion.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use mackey::burnside::{idempotent_gluck, idempotents, idempotents_via_marks, tables, BurnsideElement};
use mackey::classify::{classify_iso, diagonal_check, diagonal_dimension, free_functor, random_functor, split};
use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{
    burnside_mackey, check_axioms, coconstant, constant, dual, fp_functor, fq_functor, Axiom, MackeyFunctor,
};
use mackey::monoidal::{box_functor, box_idempotent_check, box_unit_iso, forget_monoidal_check};
use mackey::qlin::{QMatrix, WModule, Q};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn coeffs(lat: &Arc<SubgroupLattice>, pairs: &[(&str, Q)]) -> BurnsideElement {
    let g = lat.whole();
    let t = tables(lat, g);
    let mut c = vec![Q::from(0); t.len()];
    for (name, v) in pairs {
        let k = lat.find(name).unwrap();
        c[t.class_of[k].unwrap()] = v.clone();
    }
    BurnsideElement::from_coeffs(lat, g, c).unwrap()
}

fn frac(p: i64, q: i64) -> Q {
    Q::from(p) / Q::from(q)
}

/// C6 products and idempotents.
fn criterion_1() -> Outcome {
    let lat = c6();
    let g = lat.whole();
    let b = |n: &str| BurnsideElement::basis(&lat, g, lat.find(n).unwrap()).unwrap();
    let products = [
        ("C1", "C1", vec![("C1", q(6))]),
        ("C1", "C3", vec![("C1", q(2))]),
        ("C1", "C2", vec![("C1", q(3))]),
        ("C3", "C3", vec![("C3", q(2))]),
        ("C2", "C3", vec![("C1", q(1))]),
        ("C2", "C2", vec![("C2", q(3))]),
    ];
    for (x, y, expected) in products {
        let p = b(x).mul(&b(y)).map_err(err)?;
        let e = coeffs(&lat, &expected);
        ensure(p == e, || format!("[C6/{x}]·[C6/{y}] = {p}, expected {e}"))?;
    }
    let expected = [
        ("C1", vec![("C1", frac(1, 6))]),
        ("C2", vec![("C2", frac(1, 3)), ("C1", frac(-1, 6))]),
        ("C3", vec![("C3", frac(1, 2)), ("C1", frac(-1, 6))]),
        ("C6", vec![("C6", q(1)), ("C2", frac(-1, 3)), ("C3", frac(-1, 2)), ("C1", frac(1, 6))]),
    ];
    let es: Vec<BurnsideElement> = expected
        .iter()
        .map(|(h, _)| idempotent_gluck(&lat, g, lat.find(h).unwrap()).unwrap())
        .collect();
    for ((h, c), e) in expected.iter().zip(&es) {
        let want = coeffs(&lat, c);
        ensure(*e == want, || format!("e_{h} = {e}, expected {want}"))?;
    }
    let mut sum = BurnsideElement::zero(&lat, g);
    for e in &es {
        sum = sum.add(e).map_err(err)?;
    }
    ensure(sum == BurnsideElement::one(&lat, g), || "idempotents do not sum to 1".into())?;
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            let p = a.mul(b).map_err(err)?;
            let want = if i == j { a.clone() } else { BurnsideElement::zero(&lat, g) };
            ensure(p == want, || format!("e_{i}·e_{j} = {p}"))?;
        }
    }
    Ok(())
}

/// Gluck's formula against inverting the table of marks, whole corpus,
/// every subgroup as ambient group.
fn criterion_2() -> Outcome {
    for g in builtin::corpus() {
        let name = g.name().to_string();
        let lat = SubgroupLattice::new(g);
        for a in lat.ids() {
            let x = idempotents(&lat, a);
            let y = idempotents_via_marks(&lat, a);
            ensure(x == y, || format!("{name}: idempotents of A({}) disagree", lat.name(a)))?;
        }
    }
    Ok(())
}

/// Restriction of `e_H^G` to `A` is the sum of `e_K^A` over `A`-classes of
/// subgroups `K` that are `G`-conjugate to `H`, the latter computed from
/// marks.
fn criterion_3() -> Outcome {
    let mut triples = 0;
    for g in builtin::corpus() {
        let name = g.name().to_string();
        let lat = SubgroupLattice::new(g);
        for h in lat.class_reps() {
            let e = idempotent_gluck(&lat, lat.whole(), h).map_err(err)?;
            for a in lat.ids() {
                let t = tables(&lat, a);
                let via_marks = idempotents_via_marks(&lat, a);
                let mut expected = BurnsideElement::zero(&lat, a);
                for (j, v) in via_marks.iter().enumerate() {
                    if lat.is_conjugate(t.rep(j), h) {
                        expected = expected.add(v).map_err(err)?;
                    }
                }
                let got = e.restrict(a).map_err(err)?;
                ensure(got == expected, || {
                    format!("{name}: R^G_{} e_{} = {got}, expected {expected}", lat.name(a), lat.name(h))
                })?;
                triples += 1;
            }
        }
    }
    ensure(triples > 0, || "no triples".into())
}

/// The free functor diagrams over C6, `F_3(Q[C6/C3])`, and
/// `F_1(Q[C6]) ≅ FP_{Q[C6]}`.
fn criterion_4() -> Outcome {
    let lat = c6();
    let f = |n: &str| lat.find(n).unwrap();
    let (c1, c2, c3, c6) = (f("C1"), f("C2"), f("C3"), f("C6"));
    let index = |k, h| lat.index(k, h).unwrap() as i64;
    let trivial = |h| WModule::trivial(lat.weyl(h).group.clone(), 1);
    // levels present in F_H(Q): subgroups containing H
    for h in [c1, c2, c3, c6] {
        let got = free_functor(&lat, h, &trivial(h)).map_err(err)?;
        let present = |k| lat.leq(h, k);
        let dims: Vec<usize> = lat.ids().map(|k| present(k) as usize).collect();
        let expected = from_covers(
            &lat,
            dims.clone(),
            |a, b| if present(b) { scalar(1) } else { QMatrix::zeros(dims[b], dims[a]) },
            |b, a| if present(b) { scalar(index(b, a)) } else { QMatrix::zeros(dims[a], dims[b]) },
            |_, k| QMatrix::identity(dims[k]),
        );
        ensure(got == expected, || format!("F_{}(Q) differs from its diagram", lat.name(h)))?;
        ensure(check_axioms(&got).passed(), || format!("F_{}(Q) fails the axioms", lat.name(h)))?;
    }

    let w = lat.weyl(c3).group.clone();
    let f3 = Arc::new(free_functor(&lat, c3, &WModule::regular(w)).map_err(err)?);
    let dims = vec![0, 0, 2, 1];
    let expected = Arc::new(from_covers(
        &lat,
        dims.clone(),
        |a, b| if (a, b) == (c6, c3) { QMatrix::from_i64(&[&[1], &[1]]) } else { QMatrix::zeros(dims[b], dims[a]) },
        |b, a| if (b, a) == (c3, c6) { QMatrix::from_i64(&[&[1, 1]]) } else { QMatrix::zeros(dims[a], dims[b]) },
        |_, k| if k == c3 { QMatrix::from_i64(&[&[0, 1], &[1, 0]]) } else { QMatrix::identity(dims[k]) },
    ));
    ensure(check_axioms(&expected).passed(), || "fix/aug diagram is not a Mackey functor".into())?;
    ensure(f3.dims() == expected.dims(), || format!("F_3(Q[C6/C3]) dims {:?}", f3.dims()))?;
    ensure(find_iso(&f3, &expected).is_some(), || "F_3(Q[C6/C3]) is not the fix/aug diagram".into())?;

    let g = lat.group().clone();
    let f1 = Arc::new(free_functor(&lat, c1, &WModule::regular(lat.weyl(c1).group.clone())).map_err(err)?);
    let fp = Arc::new(fp_functor(&lat, &WModule::regular(g)).map_err(err)?);
    ensure(f1.dims() == [6, 3, 2, 1], || format!("F_1(Q[C6]) dims {:?}", f1.dims()))?;
    ensure(find_iso(&f1, &fp).is_some(), || "F_1(Q[C6]) is not isomorphic to FP".into())
}

/// `A_Q(C6)` splits into four trivial lines and reassembles.
fn criterion_5() -> Outcome {
    let lat = c6();
    let a = Arc::new(burnside_mackey(&lat));
    let s = split(&a).map_err(err)?;
    ensure(s.dims() == vec![1, 1, 1, 1], || format!("split dims {:?}", s.dims()))?;
    for p in &s.parts {
        ensure(p.module.generator_matrices().iter().all(QMatrix::is_identity), || {
            format!("V_{} is not trivial", lat.name(p.subgroup))
        })?;
    }
    let c = classify_iso(&a).map_err(err)?;
    ensure(c.determinants.iter().all(|d| *d != Q::from(0)), || "singular level".into())?;
    ensure(c.iso.is_isomorphism(), || "assembled map is not an isomorphism".into())
}

type Corpus = Vec<(String, Vec<Arc<MackeyFunctor>>)>;

fn random_corpus() -> Result<Corpus, String> {
    let mut out = Vec::new();
    for (i, g) in builtin::corpus().into_iter().enumerate() {
        let name = g.name().to_string();
        let lat = SubgroupLattice::new(g);
        let mut r = rng(1000 + i as u64);
        let fs = (0..50)
            .map(|_| random_functor(&mut r, &lat, 4).map(Arc::new).map_err(err))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((name, fs));
    }
    Ok(out)
}

/// Classification of 50 random functors per corpus group.
fn criterion_6(corpus: &[(String, Vec<Arc<MackeyFunctor>>)]) -> Outcome {
    for (name, fs) in corpus {
        for (i, m) in fs.iter().enumerate() {
            ensure(m.dims().iter().all(|&d| d <= 4), || format!("{name} #{i}: dims {:?}", m.dims()))?;
            let c = classify_iso(m).map_err(|e| format!("{name} #{i}: {e}"))?;
            ensure(c.determinants.iter().all(|d| *d != Q::from(0)), || format!("{name} #{i}: singular"))?;
        }
    }
    Ok(())
}

/// The diagonal decomposition on every pair `K ≤ H` of every random functor,
/// and the S4 example.
fn criterion_7(corpus: &[(String, Vec<Arc<MackeyFunctor>>)]) -> Outcome {
    for (name, fs) in corpus {
        for (i, m) in fs.iter().enumerate() {
            let lat = m.lattice();
            for h in lat.ids() {
                for k in lat.subgroups_of(h) {
                    let d = diagonal_check(m, k, h).map_err(err)?;
                    ensure(d.isomorphism && d.left_dim == d.right_dim, || {
                        format!("{name} #{i}: diagonal map at {} > {} fails", lat.name(h), lat.name(k))
                    })?;
                }
                let predicted = diagonal_dimension(m, h).map_err(err)?;
                ensure(predicted == m.dim(h), || {
                    format!("{name} #{i}: dim at {} is {} but the diagonal sum is {predicted}", lat.name(h), m.dim(h))
                })?;
            }
        }
    }
    let g = builtin::symmetric(4);
    let t12 = g.find_label("(1 2)").unwrap();
    let t34 = g.find_label("(3 4)").unwrap();
    let lat = SubgroupLattice::new(g);
    let k = lat.generated(&[t12]);
    let h = lat.generated(&[t12, t34]);
    ensure(lat.normalizer(k) == h, || "N_G K is not H".into())?;
    ensure(lat.fixed_cosets(h, k).len() == 2, || "(G/H)^K does not have two points".into())?;
    let f = free_functor(&lat, k, &WModule::regular(lat.weyl(k).group.clone())).map_err(err)?;
    let image = (f.ind(k, h) * f.res(h, k)).rank();
    let d = diagonal_check(&f, k, h).map_err(err)?;
    ensure(image == 1 && d.left_dim == 1 && d.right_dim == 1 && d.isomorphism, || {
        format!("S4 example: image rank {image}, report {d:?}")
    })
}

/// Corrupted fixtures are rejected with the expected axiom named.
fn criterion_8() -> Outcome {
    for g in builtin::corpus() {
        let lat = SubgroupLattice::new(g);
        let v = WModule::regular(lat.group().clone());
        let constructed = [
            burnside_mackey(&lat),
            constant(&lat, 2),
            coconstant(&lat, 1),
            dual(&burnside_mackey(&lat)),
            fp_functor(&lat, &v).map_err(err)?,
            fq_functor(&lat, &v).map_err(err)?,
        ];
        for m in &constructed {
            ensure(check_axioms(m).passed(), || format!("{m:?} fails the axioms"))?;
        }
    }
    let mut fixtures: Vec<(&str, MackeyFunctor, Axiom)> = Vec::new();
    let c2 = lattice("C2");
    fixtures.push(("C2 constant with I = id", constant(&c2, 1).with_induction(0, 1, scalar(1)), Axiom::Mackey));
    let s3 = lattice("S3");
    let a = burnside_mackey(&s3);
    let top = s3.whole();
    fixtures.push((
        "scaled R^G_G",
        a.with_restriction(top, top, a.res(top, top).scale(&q(2))),
        Axiom::Identity,
    ));
    let l6 = c6();
    let a6 = burnside_mackey(&l6);
    fixtures.push((
        "scaled R^C6_C1",
        a6.with_restriction(l6.whole(), 0, a6.res(l6.whole(), 0).scale(&q(3))),
        Axiom::Transitivity,
    ));
    fixtures.push(("C6 generator acting by 2 at C1", a6.with_conjugation(0, 0, scalar(2)), Axiom::Associativity));
    let fp = fp_functor(&s3, &WModule::regular(s3.group().clone())).map_err(err)?;
    let mut twisted = fp.clone();
    for (pos, &s) in s3.group().generators().iter().enumerate() {
        let sign = if s3.group().element_order(s) == 2 { -1 } else { 1 };
        twisted = twisted.with_conjugation(pos, 0, fp.conj_gen(pos, 0).scale(&q(sign)));
    }
    fixtures.push(("S3 FP with sign-twisted conjugation at e", twisted, Axiom::Equivariance));
    let mut dims = a6.dims().to_vec();
    dims[1] += 1;
    fixtures.push(("wrong dimension at C2", a6.with_dims_unchecked(dims), Axiom::Shape));
    for (label, m, axiom) in &fixtures {
        let report = check_axioms(m);
        let violated: BTreeSet<Axiom> = report.violated();
        ensure(violated.contains(axiom), || format!("{label}: expected {axiom}, got {violated:?}"))?;
        println!("    {label}: {}", violated.iter().map(Axiom::to_string).collect::<Vec<_>>().join(", "));
    }
    ensure(fixtures.len() >= 5, || "too few fixtures".into())
}

fn free_basis(lat: &Arc<SubgroupLattice>) -> Result<Vec<Arc<MackeyFunctor>>, String> {
    let mut out = Vec::new();
    for h in lat.class_reps() {
        let w = lat.weyl(h).group.clone();
        out.push(Arc::new(free_functor(lat, h, &WModule::trivial(w.clone(), 1)).map_err(err)?));
        if w.order() > 1 {
            out.push(Arc::new(free_functor(lat, h, &WModule::regular(w)).map_err(err)?));
        }
    }
    Ok(out)
}

/// Unit law on C2, C6 and S3, box of idempotent parts and monoidality of
/// `U_H` over C6.
fn criterion_9() -> Outcome {
    for name in ["C2", "C6", "S3"] {
        let lat = lattice(name);
        for m in free_basis(&lat)? {
            let u = box_unit_iso(&m).map_err(|e| format!("{name}, {m:?}: {e}"))?;
            ensure(u.is_isomorphism(), || format!("{name}: unit map not invertible"))?;
        }
    }
    let lat = c6();
    let mut functors = free_basis(&lat)?;
    functors.push(Arc::new(burnside_mackey(&lat)));
    functors.push(Arc::new(constant(&lat, 1)));
    let sample: Vec<&Arc<MackeyFunctor>> = functors.iter().step_by(2).collect();
    for m in &sample {
        for n in &sample {
            for h in lat.class_reps() {
                let r = box_idempotent_check(m, n, h).map_err(err)?;
                ensure(r.holds(), || format!("{m:?} □ {n:?} at {}: {r:?}", lat.name(h)))?;
                let u = forget_monoidal_check(m, n, h).map_err(err)?;
                ensure(u.holds(), || format!("U_{} on {m:?} □ {n:?}: {u:?}", lat.name(h)))?;
            }
        }
    }
    let a = Arc::new(burnside_mackey(&lat));
    let c2 = lat.find("C2").unwrap();
    let r = box_idempotent_check(&a, &a, c2).map_err(err)?;
    ensure(r.box_of_parts_dims[c2] == 1, || "A □ A at C6/C2 is not a line".into())
}

/// The C6 consequence of the Mackey formula on every C6 functor at hand.
fn criterion_10() -> Outcome {
    let lat = c6();
    let mut functors: Vec<Arc<MackeyFunctor>> = free_basis(&lat)?;
    let g = lat.group().clone();
    functors.push(Arc::new(burnside_mackey(&lat)));
    functors.push(Arc::new(constant(&lat, 2)));
    functors.push(Arc::new(coconstant(&lat, 1)));
    functors.push(Arc::new(dual(&burnside_mackey(&lat))));
    functors.push(Arc::new(fp_functor(&lat, &WModule::regular(g.clone())).map_err(err)?));
    functors.push(Arc::new(fq_functor(&lat, &WModule::regular(g)).map_err(err)?));
    let a = Arc::new(burnside_mackey(&lat));
    functors.push(Arc::new(box_functor(&a, &a).map_err(err)?));
    let mut r = rng(10);
    for _ in 0..20 {
        functors.push(Arc::new(random_functor(&mut r, &lat, 4).map_err(err)?));
    }
    for m in &functors {
        ensure(c6_mackey_consequence(m), || format!("{m:?} violates R I = I R"))?;
    }
    Ok(())
}

fn main() {
    let mut failures = 0;
    let mut report = |n: usize, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(()) => println!("criterion {n:>2}: PASS ({elapsed:.2?})"),
            Err(e) => {
                failures += 1;
                println!("criterion {n:>2}: FAIL ({elapsed:.2?}): {e}");
            }
        }
    };
    report(1, Some(Duration::from_secs(1)), &mut criterion_1);
    report(2, Some(Duration::from_secs(30)), &mut criterion_2);
    report(3, None, &mut criterion_3);
    report(4, None, &mut criterion_4);
    report(5, None, &mut criterion_5);
    let mut corpus = Vec::new();
    report(6, Some(Duration::from_secs(120)), &mut || {
        corpus = random_corpus()?;
        criterion_6(&corpus)
    });
    report(7, None, &mut || criterion_7(&corpus));
    report(8, None, &mut criterion_8);
    report(9, Some(Duration::from_secs(120)), &mut criterion_9);
    report(10, None, &mut criterion_10);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
