//! The restriction-induced map e_K^H M(G/H) -> (e_K^K M(G/K))^{W_H K}
//! for K = <(1 2)> inside H = <(1 2), (3 4)> in S4.

use mackey::classify::{diagonal_check, diagonal_dimension, free_functor};
use mackey::grp::{builtin, SubgroupLattice};
use mackey::qlin::WModule;

fn main() -> mackey::error::Result<()> {
    let g = builtin::symmetric(4);
    let t12 = g.find_label("(1 2)").unwrap();
    let t34 = g.find_label("(3 4)").unwrap();
    let lat = SubgroupLattice::new(g);
    let k = lat.generated(&[t12]);
    let h = lat.generated(&[t12, t34]);

    let f = free_functor(&lat, k, &WModule::regular(lat.weyl(k).group.clone()))?;
    let d = diagonal_check(&f, k, h)?;
    println!("left {} right {} iso {}", d.left_dim, d.right_dim, d.isomorphism);
    println!("{}", d.matrix);

    for x in lat.class_reps() {
        println!("{:<22} dim {}  via idempotents {}", lat.name(x), f.dim(x), diagonal_dimension(&f, x)?);
    }
    Ok(())
}
