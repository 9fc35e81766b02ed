mod common;

use std::sync::Arc;

use common::*;
use mackey::classify::{forget, random_functor};
use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{burnside_mackey, check_axioms, constant, zero};
use mackey::monoidal::{
    box_product, box_swap, box_unit_iso, green_check, green_from_json, green_to_json, GreenLaw, GreenStructure,
};
use mackey::qlin::Q;
use proptest::prelude::*;

#[test]
fn burnside_and_constant_green_functors() {
    for g in builtin::corpus() {
        let lat = SubgroupLattice::new(g);
        let a = GreenStructure::burnside(&lat);
        let report = green_check(&a);
        assert!(report.passed(), "{}: {:?}", lat.group().name(), report.violations);
        assert!(green_check(&GreenStructure::constant(&lat)).passed());
    }
}

#[test]
fn scaled_multiplication_is_reported() {
    let lat = lattice("C6");
    let bad = GreenStructure::burnside(&lat).with_scaled_mult(lat.find("C3").unwrap(), &Q::from(3));
    let laws = green_check(&bad).violated();
    assert!(laws.contains(&GreenLaw::RestrictionMultiplicative), "{laws:?}");
    assert!(laws.contains(&GreenLaw::Unit));
    assert!(!laws.contains(&GreenLaw::Associativity));
}

#[test]
fn green_json_round_trip() {
    let lat = lattice("S3");
    let s = GreenStructure::burnside(&lat);
    let text = serde_json::to_string(&green_to_json(&s)).unwrap();
    let back = green_from_json(s.base.clone(), &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back.mult, s.mult);
    assert_eq!(back.unit, s.unit);
}

#[test]
fn box_with_zero_and_with_the_unit() {
    for name in ["C2", "C3", "S3", "D8"] {
        let lat = lattice(name);
        let a = Arc::new(burnside_mackey(&lat));
        let z = Arc::new(zero(&lat));
        assert!(box_product(&a, &z).unwrap().functor.is_zero());
        let aa = box_product(&a, &a).unwrap();
        assert_eq!(aa.functor.dims(), a.dims());
        assert!(check_axioms(&aa.functor).passed());
        box_unit_iso(&Arc::new(constant(&lat, 2))).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn box_is_symmetric_and_unital(g in 0usize..4, seed in any::<u64>()) {
        let name = ["C2", "C3", "C6", "S3"][g];
        let lat = lattice(name);
        let mut r = rng(seed);
        let m = Arc::new(random_functor(&mut r, &lat, 2).unwrap());
        let n = Arc::new(random_functor(&mut r, &lat, 2).unwrap());
        let mn = box_product(&m, &n).unwrap();
        prop_assert!(check_axioms(&mn.functor).passed());
        let s = box_swap(&m, &n).unwrap();
        prop_assert!(s.is_isomorphism());
        prop_assert!(box_unit_iso(&m).unwrap().is_isomorphism());
        // U_H(M□N) ≅ U_H M ⊗ U_H N in dimension
        for h in lat.class_reps() {
            let (um, _) = forget(&m, h).unwrap();
            let (un, _) = forget(&n, h).unwrap();
            let (umn, _) = forget(&mn.functor, h).unwrap();
            prop_assert_eq!(umn.dim(), um.dim() * un.dim());
        }
    }
}
