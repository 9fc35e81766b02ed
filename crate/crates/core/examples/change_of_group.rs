//! Restriction, induction and inflation of Mackey functors.

use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{burnside_mackey, check_axioms, eps_lower, eps_upper, i_lower, i_upper, QuotientLattice};

fn main() -> mackey::error::Result<()> {
    let lat = SubgroupLattice::new(builtin::symmetric(4));
    let a = burnside_mackey(&lat);
    for h in lat.class_reps() {
        let down = i_lower(&a, h)?;
        let up = i_upper(&lat, h, &down)?;
        println!(
            "{:<28} i_# A at top {:>2}  i^# i_# A at top {:>2}  ok {}",
            lat.name(h),
            down.dim(down.lattice().whole()),
            up.dim(lat.whole()),
            check_axioms(&up).passed()
        );
    }

    let v4 = lat.ids().find(|&h| lat.order_of(h) == 4 && lat.is_normal_in(h, lat.whole())).unwrap();
    let q = QuotientLattice::new(&lat, v4)?;
    let small = burnside_mackey(&q.lattice);
    let big = eps_lower(&small, &lat, &q)?;
    println!("inflated from S4/V4: dims {:?}", big.class_dims());
    println!("round trip: {}", eps_upper(&big, &q)? == small);
    Ok(())
}
