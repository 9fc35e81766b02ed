mod common;

use std::sync::Arc;

use common::*;
use mackey::classify::{
    assemble, classify_iso, comparison_map, diagonal_dimension, forget, free_functor, free_functor_idempotent_check,
    random_functor, random_module, random_split, split,
};
use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{check_axioms, direct_sum};
use proptest::prelude::*;

thread_local! {
    static CORPUS: Vec<Arc<SubgroupLattice>> = builtin::corpus().into_iter().map(SubgroupLattice::new).collect();
}

fn with_lattice<T>(i: usize, f: impl FnOnce(&Arc<SubgroupLattice>) -> T) -> T {
    CORPUS.with(|c| f(&c[i % c.len()]))
}

#[test]
fn free_functor_vanishes_away_from_supergroups_of_conjugates() {
    let mut r = rng(5);
    for g in builtin::corpus() {
        let lat = SubgroupLattice::new(g);
        for h in lat.class_reps() {
            let v = random_module(&mut r, &lat.weyl(h).group, 3);
            let f = free_functor(&lat, h, &v).unwrap();
            assert!(check_axioms(&f).passed());
            for k in lat.ids() {
                if !lat.is_subconjugate(h, k) {
                    assert_eq!(f.dim(k), 0, "F_{}(V) at {}", lat.name(h), lat.name(k));
                }
            }
            assert_eq!(f.dim(h), v.dim());
        }
    }
}

/// `e_C^B` kills `F_A(V)(G/B)` unless `A` and `C` are conjugate.
#[test]
fn free_functors_are_local_at_their_idempotent() {
    for name in ["C6", "S3", "D8", "A4"] {
        let lat = lattice(name);
        for a in lat.class_reps() {
            let v = mackey::qlin::WModule::regular(lat.weyl(a).group.clone());
            for b in lat.ids() {
                for c in lat.subgroups_of(b) {
                    let r = free_functor_idempotent_check(&lat, a, b, c, &v).unwrap();
                    assert!(r.holds(), "{name}: A={} B={} C={}: {r:?}", lat.name(a), lat.name(b), lat.name(c));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `U_H F_H(V) ≅ V` and `U_K F_H(V) = 0` for `K` not conjugate to `H`.
    #[test]
    fn forgetting_a_free_functor_recovers_its_module(g in 0usize..10, h in 0usize..16, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let reps = lat.class_reps();
            let h = reps[h % reps.len()];
            let v = random_module(&mut rng(seed), &lat.weyl(h).group, 4);
            let f = free_functor(lat, h, &v).unwrap();
            for &k in &reps {
                let (u, _) = forget(&f, k).unwrap();
                if k == h {
                    prop_assert!(u.is_isomorphic(&v));
                } else {
                    prop_assert_eq!(u.dim(), 0);
                }
            }
            Ok(())
        })?;
    }

    #[test]
    fn split_recovers_the_modules_it_was_assembled_from(g in 0usize..10, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let s = random_split(&mut rng(seed), lat, 4).unwrap();
            let m = assemble(&s).unwrap();
            let back = split(&m).unwrap();
            for (p, q) in s.parts.iter().zip(&back.parts) {
                prop_assert_eq!(p.subgroup, q.subgroup);
                prop_assert!(p.module.is_isomorphic(&q.module));
            }
            Ok(())
        })?;
    }

    #[test]
    fn split_is_additive(g in 0usize..10, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let mut r = rng(seed);
            let m = random_functor(&mut r, lat, 2).unwrap();
            let n = random_functor(&mut r, lat, 2).unwrap();
            let sum = split(&direct_sum(&m, &n).unwrap()).unwrap();
            let (sm, sn) = (split(&m).unwrap(), split(&n).unwrap());
            for ((a, b), c) in sm.parts.iter().zip(&sn.parts).zip(&sum.parts) {
                prop_assert!(a.module.direct_sum(&b.module).unwrap().is_isomorphic(&c.module));
            }
            Ok(())
        })?;
    }

    /// The comparison map for `H` has rank `dim F_H(V_H)(G/K)` at every level
    /// and the stacked maps are invertible.
    #[test]
    fn comparison_maps_have_the_expected_ranks(g in 0usize..10, seed in any::<u64>()) {
        with_lattice(g, |lat| {
            let m = Arc::new(random_functor(&mut rng(seed), lat, 4).unwrap());
            let c = classify_iso(&m).unwrap();
            prop_assert!(c.iso.is_isomorphism());
            for p in &c.split.parts {
                let kappa = comparison_map(&m, p.subgroup).unwrap();
                prop_assert_eq!(kappa.ranks(), kappa.target.dims().to_vec());
            }
            for h in lat.ids() {
                prop_assert_eq!(diagonal_dimension(&m, h).unwrap(), m.dim(h));
            }
            Ok(())
        })?;
    }
}
