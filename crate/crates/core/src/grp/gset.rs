//! Finite G-sets given by an explicit action table.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::lattice::{SubgroupId, SubgroupLattice};

#[derive(Clone, Debug)]
pub struct GSet {
    lattice: Arc<SubgroupLattice>,
    points: usize,
    // action[g][x] = g·x
    action: Vec<Vec<usize>>,
}

/// An orbit `G·rep ≅ G/stabilizer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest point of the orbit.
    pub rep: usize,
    pub stabilizer: SubgroupId,
    /// Points of the orbit, ascending.
    pub points: Vec<usize>,
    /// For each point `x` of the orbit (same order as `points`), the
    /// smallest `g` with `g·rep = x`.
    pub transporters: Vec<usize>,
}

impl GSet {
    /// Validates an action table: one permutation of the points per group
    /// element, compatible with the multiplication.
    pub fn new(lattice: Arc<SubgroupLattice>, points: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        let g = lattice.group().clone();
        if action.len() != g.order() || action.iter().any(|r| r.len() != points || r.iter().any(|&x| x >= points)) {
            return Err(Error::Shape("action table must be |G| x points".into()));
        }
        for (x, &y) in action[g.identity()].iter().enumerate() {
            if y != x {
                return Err(Error::Precondition("identity must act trivially".into()));
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                if (0..points).any(|x| action[ab][x] != action[a][action[b][x]]) {
                    return Err(Error::Precondition(format!("action is not compatible at {a}, {b}")));
                }
            }
        }
        Ok(GSet { lattice, points, action })
    }

    pub fn empty(lattice: Arc<SubgroupLattice>) -> Self {
        let n = lattice.group().order();
        GSet { lattice, points: 0, action: vec![Vec::new(); n] }
    }

    /// `G/K`, with points the cosets in ascending order of their smallest
    /// representatives.
    pub fn coset_space(lattice: Arc<SubgroupLattice>, k: SubgroupId) -> Self {
        let g = lattice.group().clone();
        let reps = lattice.left_cosets(lattice.whole(), k);
        let action = (0..g.order())
            .map(|a| {
                reps.iter()
                    .map(|&x| {
                        let r = lattice.coset_rep(g.mul(a, x), k);
                        reps.binary_search(&r).expect("coset representative")
                    })
                    .collect()
            })
            .collect();
        GSet { lattice, points: reps.len(), action }
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    /// Points of `other` are numbered after those of `self`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        if !Arc::ptr_eq(&self.lattice, &other.lattice) {
            return Err(Error::GroupMismatch);
        }
        let n = self.points;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&x| x + n)).collect())
            .collect();
        Ok(GSet { lattice: self.lattice.clone(), points: n + other.points, action })
    }

    pub fn orbits(&self) -> Vec<Orbit> {
        let g = self.lattice.group();
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for rep in 0..self.points {
            if seen[rep] {
                continue;
            }
            let mut transporter = vec![usize::MAX; self.points];
            let mut stab = Vec::new();
            for a in 0..g.order() {
                let x = self.action[a][rep];
                if transporter[x] == usize::MAX {
                    transporter[x] = a;
                }
                if x == rep {
                    stab.push(a);
                }
            }
            let points: Vec<usize> = (0..self.points).filter(|&x| transporter[x] != usize::MAX).collect();
            for &x in &points {
                seen[x] = true;
            }
            out.push(Orbit {
                rep,
                stabilizer: self.lattice.id_of(&stab).expect("stabilizer is a subgroup"),
                transporters: points.iter().map(|&x| transporter[x]).collect(),
                points,
            });
        }
        out
    }

    /// Restriction to a subgroup `H`, as a set over [`SubgroupLattice::sublattice`].
    pub fn restrict(&self, h: SubgroupId) -> GSet {
        let (_, emb) = self.lattice.subgroup_group(h);
        let action = emb.iter().map(|&g| self.action[g].clone()).collect();
        GSet { lattice: self.lattice.sublattice(h).clone(), points: self.points, action }
    }

    /// `G ×_H B` for an `H`-set `B` over the sublattice of `h`.
    pub fn induce(lattice: &Arc<SubgroupLattice>, h: SubgroupId, b: &GSet) -> Result<Induced> {
        let sub = lattice.sublattice(h);
        if !Arc::ptr_eq(sub, &b.lattice) {
            return Err(Error::GroupMismatch);
        }
        let g = lattice.group().clone();
        let (_, emb) = lattice.subgroup_group(h);
        let reps = lattice.left_cosets(lattice.whole(), h);
        let nb = b.points;
        let local = |x: usize| emb.binary_search(&x).expect("element of H");
        // a·(x, y) = (x', h'·y) where a x = x' h'
        let action = (0..g.order())
            .map(|a| {
                let mut row = vec![0; reps.len() * nb];
                for (ci, &x) in reps.iter().enumerate() {
                    let ax = g.mul(a, x);
                    let x2 = lattice.coset_rep(ax, h);
                    let cj = reps.binary_search(&x2).expect("coset");
                    let hh = local(g.mul(g.inv(x2), ax));
                    for y in 0..nb {
                        row[ci * nb + y] = cj * nb + b.action[hh][y];
                    }
                }
                row
            })
            .collect();
        let set = GSet { lattice: lattice.clone(), points: reps.len() * nb, action };
        let base = reps.binary_search(&lattice.coset_rep(g.identity(), h)).expect("identity coset");
        let e_rep = reps[base];
        // (e, y) = (e_rep, e_rep⁻¹·y) with e_rep ∈ H
        let shift = local(g.inv(e_rep));
        let eta = (0..nb).map(|y| base * nb + b.action[shift][y]).collect();
        Ok(Induced { set, coset_reps: reps, fiber: nb, eta })
    }
}

/// `G ×_H B` with the unit map `B → G ×_H B`, `y ↦ [e, y]`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub set: GSet,
    /// Representatives of `G/H`; point `i·|B| + y` is `[coset_reps[i], y]`.
    pub coset_reps: Vec<usize>,
    pub fiber: usize,
    pub eta: Vec<usize>,
}

impl Induced {
    /// The counit `G ×_H i*A → A`, `[g, a] ↦ g·a`, for a `G`-set `A` whose
    /// restriction was induced.
    pub fn counit(&self, a: &GSet) -> Vec<usize> {
        (0..self.set.points)
            .map(|p| {
                let (ci, y) = (p / self.fiber, p % self.fiber);
                a.act(self.coset_reps[ci], y)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::builtin;

    #[test]
    fn coset_space_orbits() {
        let l = SubgroupLattice::new(builtin::cyclic(6));
        let x = GSet::coset_space(l.clone(), 1);
        assert_eq!(x.len(), 3);
        let orbits = x.orbits();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].stabilizer, 1);
    }

    #[test]
    fn restricted_orbits_cover_all_points() {
        let l = SubgroupLattice::new(builtin::symmetric(4));
        let g = l.group().clone();
        let t12 = g.find_label("(1 2)").unwrap();
        let t34 = g.find_label("(3 4)").unwrap();
        let k = l.generated(&[t12]);
        let h = l.generated(&[t12, t34]);
        let x = GSet::coset_space(l.clone(), k).restrict(h);
        let total: usize = x.orbits().iter().map(|o| o.points.len()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn induction_of_a_point_is_a_coset_space() {
        let l = SubgroupLattice::new(builtin::symmetric(3));
        let h = l.generated(&[1]);
        let sub = l.sublattice(h).clone();
        let point = GSet::coset_space(sub.clone(), sub.whole());
        let ind = GSet::induce(&l, h, &point).unwrap();
        assert_eq!(ind.set.len(), 3);
        let orbits = ind.set.orbits();
        assert_eq!(orbits.len(), 1);
        assert!(l.is_conjugate(orbits[0].stabilizer, h));
        GSet::new(l.clone(), ind.set.len(), (0..6).map(|a| (0..3).map(|p| ind.set.act(a, p)).collect()).collect())
            .unwrap();
    }

    #[test]
    fn counit_is_equivariant() {
        let l = SubgroupLattice::new(builtin::cyclic(6));
        let a = GSet::coset_space(l.clone(), 1).disjoint_union(&GSet::coset_space(l.clone(), 0)).unwrap();
        let ind = GSet::induce(&l, 2, &a.restrict(2)).unwrap();
        let eps = ind.counit(&a);
        for g in 0..6 {
            for p in 0..ind.set.len() {
                assert_eq!(eps[ind.set.act(g, p)], a.act(g, eps[p]));
            }
        }
        for (y, &p) in ind.eta.iter().enumerate() {
            assert_eq!(eps[p], y);
        }
    }
}
