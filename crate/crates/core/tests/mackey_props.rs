mod common;

use std::sync::Arc;

use common::*;
use mackey::classify::{free_functor, random_functor, random_module};
use mackey::grp::{builtin, GSet, SubgroupLattice};
use mackey::mackey::io::{from_json, to_json, MackeyJson};
use mackey::mackey::{
    burnside_mackey, check_axioms, coconstant, constant, direct_sum, dual, eps_lower, eps_upper, evaluate_at_set,
    fp_functor, fp_to_fq, fp_unit, fq_functor, hom_space, i_lower, i_upper, morphism_at_set, pullback, pushforward,
    MackeyFunctor, QuotientLattice,
};
use mackey::qlin::WModule;
use proptest::prelude::*;

thread_local! {
    static CORPUS: Vec<Arc<SubgroupLattice>> = builtin::corpus().into_iter().map(SubgroupLattice::new).collect();
}

fn with_lattice<T>(i: usize, f: impl FnOnce(&Arc<SubgroupLattice>) -> T) -> T {
    CORPUS.with(|c| f(&c[i % c.len()]))
}

#[test]
fn constructions_satisfy_the_axioms() {
    let mut r = rng(3);
    for g in builtin::corpus() {
        let lat = SubgroupLattice::new(g);
        let v = random_module(&mut r, lat.group(), 3);
        let mut fs: Vec<MackeyFunctor> = vec![
            burnside_mackey(&lat),
            constant(&lat, 1),
            coconstant(&lat, 2),
            dual(&burnside_mackey(&lat)),
            fp_functor(&lat, &v).unwrap(),
            fq_functor(&lat, &v).unwrap(),
            direct_sum(&constant(&lat, 1), &coconstant(&lat, 1)).unwrap(),
        ];
        for h in lat.class_reps() {
            let w = lat.weyl(h).group.clone();
            fs.push(free_functor(&lat, h, &WModule::regular(w)).unwrap());
        }
        for m in &fs {
            let report = check_axioms(m);
            assert!(report.passed(), "{m:?}: {report}");
        }
    }
}

#[test]
fn change_of_group_functors_satisfy_the_axioms() {
    for name in ["S3", "D8", "A4"] {
        let lat = lattice(name);
        let a = burnside_mackey(&lat);
        for h in lat.class_reps() {
            let down = i_lower(&a, h).unwrap();
            assert!(check_axioms(&down).passed(), "{name}: i_# at {}", lat.name(h));
            let up = i_upper(&lat, h, &down).unwrap();
            assert!(check_axioms(&up).passed(), "{name}: i^# at {}", lat.name(h));
            // (i^# i_# A)(G/G) = A(G ×_H pt) = A(H)
            assert_eq!(up.dim(lat.whole()), a.dim(h));
        }
    }
}

/// `G/N` for the normal Klein four subgroup of S4 is S3; inflation and
/// fixed points along it invert each other.
#[test]
fn inflation_round_trip_through_s4_mod_v4() {
    let lat = lattice("S4");
    let v4 = lat
        .ids()
        .find(|&k| lat.order_of(k) == 4 && lat.is_normal_in(k, lat.whole()))
        .unwrap();
    let q = QuotientLattice::new(&lat, v4).unwrap();
    assert_eq!(q.lattice.group().order(), 6);
    assert_eq!(q.lattice.len(), 6);
    let small = burnside_mackey(&q.lattice);
    let big = eps_lower(&small, &lat, &q).unwrap();
    assert!(check_axioms(&big).passed());
    assert_eq!(eps_upper(&big, &q).unwrap(), small);
    let f = free_functor(&lat, v4, &WModule::regular(lat.weyl(v4).group.clone())).unwrap();
    let back = eps_lower(&eps_upper(&f, &q).unwrap(), &lat, &q).unwrap();
    assert_eq!(back, f);
    assert!(eps_upper(&burnside_mackey(&lat), &q).is_err());
}

#[test]
fn counit_after_unit_is_the_identity_on_sets() {
    for name in ["S3", "D8", "S4"] {
        let lat = lattice(name);
        for k in lat.class_reps() {
            let x = GSet::coset_space(lat.clone(), k);
            for h in lat.class_reps() {
                let ind = GSet::induce(&lat, h, &x.restrict(h)).unwrap();
                let counit = ind.counit(&x);
                for p in 0..x.len() {
                    assert_eq!(counit[ind.eta[p]], p);
                }
                for g in 0..lat.group().order() {
                    for p in 0..ind.set.len() {
                        assert_eq!(counit[ind.set.act(g, p)], x.act(g, counit[p]));
                    }
                }
            }
        }
    }
}

#[test]
fn fixed_points_and_coinvariants_agree() {
    let mut r = rng(11);
    for g in builtin::corpus() {
        let lat = SubgroupLattice::new(g);
        for _ in 0..3 {
            let v = random_module(&mut r, lat.group(), 4);
            let f = fp_to_fq(&lat, &v).unwrap();
            assert!(f.is_isomorphism());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dual_is_an_involution(g in 0usize..10, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let m = random_functor(&mut rng(seed), lat, 3).unwrap();
            prop_assert!(check_axioms(&dual(&m)).passed());
            prop_assert_eq!(dual(&dual(&m)), m);
            Ok(())
        })?;
    }

    /// `Hom(A_Q, M) ≅ M(G/G)`.
    #[test]
    fn burnside_functor_represents_the_top_level(g in 0usize..6, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let m = Arc::new(random_functor(&mut rng(seed), lat, 3).unwrap());
            let a = Arc::new(burnside_mackey(lat));
            let hom = hom_space(&a, &m).unwrap();
            prop_assert_eq!(hom.len(), m.dim(lat.whole()));
            for f in &hom {
                prop_assert!(f.is_morphism());
            }
            Ok(())
        })?;
    }

    /// Both adjunctions between restriction and induction to a subgroup,
    /// compared through hom space dimensions.
    #[test]
    fn restriction_and_induction_are_adjoint(g in 0usize..5, h in 0usize..16, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let h = lat.class_reps()[h % lat.class_reps().len()];
            let sub = lat.sublattice(h).clone();
            let mut r = rng(seed);
            let m = Arc::new(random_functor(&mut r, lat, 2).unwrap());
            let n = random_functor(&mut r, &sub, 2).unwrap();
            let up = Arc::new(i_upper(lat, h, &n).unwrap());
            let down = Arc::new(i_lower(&m, h).unwrap());
            let n = Arc::new(n);
            prop_assert_eq!(hom_space(&m, &up).unwrap().len(), hom_space(&down, &n).unwrap().len());
            prop_assert_eq!(hom_space(&up, &m).unwrap().len(), hom_space(&n, &down).unwrap().len());
            Ok(())
        })?;
    }

    /// A morphism evaluated on G-sets commutes with pullback and pushforward
    /// along the projection `G/K → G/H`.
    #[test]
    fn morphisms_are_natural_on_sets(g in 0usize..10, pair in 0usize..256, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let m = Arc::new(random_functor(&mut rng(seed), lat, 3).unwrap());
            let f = fp_unit(&m).unwrap();
            let pairs: Vec<(usize, usize)> =
                lat.ids().flat_map(|h| lat.subgroups_of(h).into_iter().map(move |k| (k, h))).collect();
            let (k, h) = pairs[pair % pairs.len()];
            let x = GSet::coset_space(lat.clone(), k);
            let y = GSet::coset_space(lat.clone(), h);
            let cx = lat.left_cosets(lat.whole(), k);
            let cy = lat.left_cosets(lat.whole(), h);
            let proj: Vec<usize> = cx.iter().map(|&a| cy.binary_search(&lat.coset_rep(a, h)).unwrap()).collect();
            let (fx, fy) = (morphism_at_set(&f, &x).unwrap(), morphism_at_set(&f, &y).unwrap());
            let (src, dst) = (&f.source, &f.target);
            prop_assert_eq!(
                &fx * &pullback(src, &x, &y, &proj).unwrap(),
                &pullback(dst, &x, &y, &proj).unwrap() * &fy
            );
            prop_assert_eq!(
                &fy * &pushforward(src, &x, &y, &proj).unwrap(),
                &pushforward(dst, &x, &y, &proj).unwrap() * &fx
            );
            prop_assert_eq!(evaluate_at_set(src, &x).unwrap().dim, src.dim(k));
            Ok(())
        })?;
    }

    #[test]
    fn json_round_trip(g in 0usize..10, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let m = random_functor(&mut rng(seed), lat, 3).unwrap();
            let text = serde_json::to_string(&to_json(&m)).unwrap();
            let back: MackeyJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(from_json(&back, lat).unwrap(), m);
            Ok(())
        })?;
    }
}
