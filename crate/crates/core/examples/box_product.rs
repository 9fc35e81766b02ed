//! Box products over C6 and the Green structure on the Burnside functor.

use std::sync::Arc;

use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{burnside_mackey, check_axioms, constant};
use mackey::monoidal::{box_product, box_swap, box_unit_iso, green_check, GreenStructure};
use mackey::qlin::Q;

fn main() -> mackey::error::Result<()> {
    let lat = SubgroupLattice::new(builtin::cyclic(6));
    let a = Arc::new(burnside_mackey(&lat));
    let k = Arc::new(constant(&lat, 1));

    let ak = box_product(&a, &k)?;
    println!("A box Q: dims {:?}, axioms {}", ak.functor.dims(), check_axioms(&ak.functor).passed());
    println!("unit iso: {}", box_unit_iso(&k)?.is_isomorphism());

    let kk = box_product(&k, &k)?;
    println!("Q box Q: dims {:?}", kk.functor.dims());
    println!("swap is iso: {}", box_swap(&k, &a)?.is_isomorphism());

    let green = GreenStructure::burnside(&lat);
    println!("burnside green check: {:?}", green_check(&green).violated());
    let c3 = lat.find("C3").unwrap();
    let scaled = green.with_scaled_mult(c3, &Q::from(3));
    println!("scaled at C3: {:?}", green_check(&scaled).violated());
    Ok(())
}
