#![allow(dead_code)]

use std::sync::Arc;

use mackey::grp::{builtin, SubgroupId, SubgroupLattice};
use mackey::mackey::{hom_space, MackeyFunctor, MackeyMorphism};
use mackey::qlin::{QMatrix, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn lattice(name: &str) -> Arc<SubgroupLattice> {
    SubgroupLattice::new(builtin::by_name(name).expect("built-in group"))
}

pub fn c6() -> Arc<SubgroupLattice> {
    lattice("C6")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Q {
    Q::from(n)
}

pub fn scalar(n: i64) -> QMatrix {
    QMatrix::from_i64(&[&[n]])
}

/// Searches the hom space for an isomorphism by random integer
/// combinations of its basis.
pub fn find_iso(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>) -> Option<MackeyMorphism> {
    if m.dims() != n.dims() {
        return None;
    }
    let basis = hom_space(m, n).ok()?;
    let mut r = rng(7);
    for _ in 0..20 {
        let coeffs: Vec<Q> = basis.iter().map(|_| q(r.gen_range(-5..=5))).collect();
        let maps: Vec<QMatrix> = m
            .lattice()
            .ids()
            .map(|k| {
                let mut acc = QMatrix::zeros(n.dim(k), m.dim(k));
                for (f, c) in basis.iter().zip(&coeffs) {
                    acc = &acc + &f.maps[k].scale(c);
                }
                acc
            })
            .collect();
        let f = MackeyMorphism::new(m.clone(), n.clone(), maps).ok()?;
        if f.is_isomorphism() {
            return Some(f);
        }
    }
    None
}

/// Builds a functor from the structure maps on covering pairs `K ⋖ H`,
/// composing along chains for the rest. Conjugation is given per
/// generator position and level.
pub fn from_covers(
    lat: &Arc<SubgroupLattice>,
    dims: Vec<usize>,
    res_cover: impl Fn(SubgroupId, SubgroupId) -> QMatrix,
    ind_cover: impl Fn(SubgroupId, SubgroupId) -> QMatrix,
    conj: impl Fn(usize, SubgroupId) -> QMatrix,
) -> MackeyFunctor {
    fn step(lat: &SubgroupLattice, k: SubgroupId, h: SubgroupId) -> SubgroupId {
        *lat.maximal_subgroups(h).iter().find(|&&m| lat.leq(k, m)).expect("chain")
    }
    fn res(lat: &SubgroupLattice, d: &[usize], f: &dyn Fn(SubgroupId, SubgroupId) -> QMatrix, h: SubgroupId, k: SubgroupId) -> QMatrix {
        if h == k {
            return QMatrix::identity(d[h]);
        }
        let m = step(lat, k, h);
        &res(lat, d, f, m, k) * &f(h, m)
    }
    fn ind(lat: &SubgroupLattice, d: &[usize], f: &dyn Fn(SubgroupId, SubgroupId) -> QMatrix, k: SubgroupId, h: SubgroupId) -> QMatrix {
        if h == k {
            return QMatrix::identity(d[h]);
        }
        let m = step(lat, k, h);
        &f(m, h) * &ind(lat, d, f, k, m)
    }
    let g = lat.group().clone();
    let d = dims.clone();
    MackeyFunctor::from_fns(
        lat,
        dims,
        |h, k| res(lat, &d, &res_cover, h, k),
        |k, h| ind(lat, &d, &ind_cover, k, h),
        |s, h| conj(g.generators().iter().position(|&x| x == s).unwrap(), h),
    )
    .expect("shapes")
}

/// `R^{C6}_{C3} I^{C6}_{C2} = I^{C3}_{C1} R^{C2}_{C1}` and the same with
/// `C2` and `C3` exchanged.
pub fn c6_mackey_consequence(m: &MackeyFunctor) -> bool {
    let lat = m.lattice();
    let f = |n: &str| lat.find(n).unwrap();
    let (c1, c2, c3, c6) = (f("C1"), f("C2"), f("C3"), f("C6"));
    m.res(c6, c3) * m.ind(c2, c6) == m.ind(c1, c3) * m.res(c2, c1)
        && m.res(c6, c2) * m.ind(c3, c6) == m.ind(c1, c2) * m.res(c3, c1)
}
