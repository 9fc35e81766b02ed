//! Prints the Lewis diagram of the Burnside functor of C6 as DOT.
//!
//!     cargo run --example lewis_diagram | dot -Tsvg > c6.svg

use mackey::grp::{builtin, SubgroupLattice};
use mackey::mackey::{burnside_mackey, lewis_dot};

fn main() {
    let lat = SubgroupLattice::new(builtin::cyclic(6));
    print!("{}", lewis_dot(&burnside_mackey(&lat), "A(C6)"));
}
