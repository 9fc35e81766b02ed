//! Standard Mackey functors over S3, and a broken one caught by the checker.

use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{burnside_mackey, check_axioms, coconstant, constant, dual, fp_functor, fq_functor, fp_to_fq};
use mackey::qlin::{QMatrix, WModule};

fn main() -> mackey::error::Result<()> {
    let lat = SubgroupLattice::new(builtin::symmetric(3));
    let v = WModule::regular(lat.group().clone());
    let named = [
        ("burnside", burnside_mackey(&lat)),
        ("constant", constant(&lat, 1)),
        ("coconstant", coconstant(&lat, 1)),
        ("dual burnside", dual(&burnside_mackey(&lat))),
        ("fixed points of Q[S3]", fp_functor(&lat, &v)?),
        ("coinvariants of Q[S3]", fq_functor(&lat, &v)?),
    ];
    for (name, m) in &named {
        let report = check_axioms(m);
        println!("{name:<24} dims {:?}  passed: {}", m.class_dims(), report.passed());
    }
    println!("FP -> FQ is an isomorphism: {}", fp_to_fq(&lat, &v)?.is_isomorphism());

    let c2 = lat.ids().find(|&h| lat.order_of(h) == 2).unwrap();
    let bad = constant(&lat, 1).with_induction(c2, lat.whole(), QMatrix::identity(1));
    println!("constant with I = id violates {:?}", check_axioms(&bad).violated());
    Ok(())
}
