//! Lewis diagrams as DOT graphs.

use std::fmt::Write;

use super::MackeyFunctor;

/// One node per conjugacy class labelled `"H: dim"`, a downward `R` and an
/// upward `I` edge for every covering relation between classes, and a loop
/// per node labelled with the Weyl group order.
pub fn lewis_dot(m: &MackeyFunctor, title: &str) -> String {
    let lat = m.lattice();
    let reps = lat.class_reps();
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, &h) in reps.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}: {}\"];", escape(lat.name(h)), m.dim(h)).unwrap();
    }
    for (i, &h) in reps.iter().enumerate() {
        let mut below: Vec<usize> = lat.maximal_subgroups(h).into_iter().map(|k| lat.class_of(k)).collect();
        below.sort_unstable();
        below.dedup();
        for j in below {
            writeln!(out, "  n{i} -> n{j} [label=\"R\"];").unwrap();
            writeln!(out, "  n{j} -> n{i} [label=\"I\"];").unwrap();
        }
    }
    for (i, &h) in reps.iter().enumerate() {
        writeln!(out, "  n{i} -> n{i} [label=\"W: {}\"];", lat.weyl(h).order()).unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{builtin, SubgroupLattice};
    use crate::mackey::burnside_mackey;

    #[test]
    fn c6_diagram_shape() {
        let l = SubgroupLattice::new(builtin::cyclic(6));
        let dot = lewis_dot(&burnside_mackey(&l), "A(C6)");
        assert_eq!(dot.matches("[label=\"R\"]").count(), 4);
        assert_eq!(dot.matches("[label=\"I\"]").count(), 4);
        assert_eq!(dot.matches("[label=\"W: ").count(), 4);
        assert!(dot.contains("n3 [label=\"C6: 4\"]"));
    }
}
