//! Products and primitive idempotents in the rational Burnside ring of C6.

use mackey::burnside::{idempotents, table_of_marks, BurnsideElement};
use mackey::grp::{builtin, SubgroupLattice};

fn main() -> mackey::error::Result<()> {
    let lat = SubgroupLattice::new(builtin::cyclic(6));
    let g = lat.whole();
    println!("table of marks:\n{}", table_of_marks(&lat, g));

    let x = |name: &str| BurnsideElement::basis(&lat, g, lat.find(name).unwrap());
    let c2 = x("C2")?;
    let c3 = x("C3")?;
    println!("[G/C2]·[G/C3] = {}", c2.mul(&c3)?);
    println!("[G/C2]·[G/C2] = {}", c2.mul(&c2)?);

    let es = idempotents(&lat, g);
    let mut sum = BurnsideElement::zero(&lat, g);
    for (i, e) in es.iter().enumerate() {
        assert!(e.is_idempotent());
        println!("e_{} = {}", lat.name(lat.class_rep(i)), e);
        sum = sum.add(e)?;
    }
    println!("sum = {sum}");

    // restriction to C3 is still an idempotent there
    let c3_id = lat.find("C3").unwrap();
    let r = es[c3_id].restrict(c3_id)?;
    println!("res to C3 of e_C3 = {r}");
    Ok(())
}
