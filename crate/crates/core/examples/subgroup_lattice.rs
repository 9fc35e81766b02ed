//! Conjugacy classes, Weyl groups and the Möbius function of S4.

use mackey::grp::{builtin, SubgroupLattice};

fn main() {
    let lat = SubgroupLattice::new(builtin::symmetric(4));
    println!("{} subgroups in {} classes", lat.len(), lat.classes().len());
    for h in lat.class_reps() {
        let w = lat.weyl(h);
        println!(
            "{:<28} order {:>2}  class size {}  |W| = {:>2}  mu(1, H) = {}",
            lat.name(h),
            lat.order_of(h),
            lat.classes()[lat.class_of(h)].len(),
            w.order(),
            lat.mobius(lat.trivial(), h),
        );
    }

    let a4 = lat.ids().find(|&h| lat.order_of(h) == 12).unwrap();
    let v4 = lat.ids().find(|&h| lat.order_of(h) == 4 && lat.is_normal_in(h, lat.whole())).unwrap();
    println!("double cosets V4\\S4/A4: {}", lat.double_cosets(v4, lat.whole(), a4).len());
}
