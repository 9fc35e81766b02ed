//! Split a random Mackey functor into modules over Weyl groups and
//! certify the comparison isomorphism.

use std::sync::Arc;

use mackey::classify::{classify_iso, random_functor};
use mackey::grp::{builtin, SubgroupLattice};
use rand::SeedableRng;

fn main() -> mackey::error::Result<()> {
    let lat = SubgroupLattice::new(builtin::dihedral8());
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let m = Arc::new(random_functor(&mut rng, &lat, 3)?);
    println!("M over {}: dims {:?}", lat.group().name(), m.class_dims());

    let c = classify_iso(&m)?;
    for p in &c.split.parts {
        println!(
            "  V at {:<14} dim {}  trivial part {}",
            lat.name(p.subgroup),
            p.module.dim(),
            p.module.trivial_multiplicity()
        );
    }
    let dets: Vec<String> = c.determinants.iter().map(|d| d.to_string()).collect();
    println!("determinants per level: {}", dets.join(", "));
    println!("isomorphism: {}", c.iso.is_isomorphism());
    Ok(())
}
