//! Change of group: restriction to and induction from a subgroup, inflation
//! and fixed points along a quotient, and evaluation at the free orbit.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::{GSet, SubgroupId, SubgroupLattice};
use crate::qlin::{QMatrix, WModule};

use super::constructions::{coords, fp_bases, fp_functor};
use super::sets::{evaluate_at_set, pullback, pushforward};
use super::{MackeyFunctor, MackeyMorphism};

/// `i_# M` for `H ≤ G`: the functor over `H` with `(i_# M)(H/K) = M(G/K)`.
/// The result lives over [`SubgroupLattice::sublattice`]`(h)`.
pub fn i_lower(m: &MackeyFunctor, h: SubgroupId) -> Result<MackeyFunctor> {
    let lat = m.lattice();
    let sub = lat.sublattice(h).clone();
    let global: Vec<SubgroupId> = sub.ids().map(|k| lat.from_sublattice(h, k)).collect();
    let (_, emb) = lat.subgroup_group(h);
    MackeyFunctor::from_fns(
        &sub,
        global.iter().map(|&k| m.dim(k)).collect(),
        |a, b| m.res(global[a], global[b]).clone(),
        |b, a| m.ind(global[b], global[a]).clone(),
        |s, a| m.conj(emb[s], global[a]).clone(),
    )
}

/// `i^# N` for a functor `N` over the sublattice of `h`: the functor over
/// `G` with `(i^# N)(G/K) = N(i*(G/K))`, computed on orbit decompositions of
/// the restricted coset spaces.
pub fn i_upper(lattice: &Arc<SubgroupLattice>, h: SubgroupId, n: &MackeyFunctor) -> Result<MackeyFunctor> {
    let sub = lattice.sublattice(h);
    if !Arc::ptr_eq(sub, n.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let g = lattice.group();
    let spaces: Vec<GSet> = lattice.ids().map(|k| GSet::coset_space(lattice.clone(), k)).collect();
    let restricted: Vec<GSet> = spaces.iter().map(|x| x.restrict(h)).collect();
    let dims = restricted.iter().map(|x| evaluate_at_set(n, x).map(|v| v.dim)).collect::<Result<Vec<_>>>()?;
    let cosets: Vec<Vec<usize>> = lattice.ids().map(|k| lattice.left_cosets(lattice.whole(), k)).collect();
    // G/K → G/L, xK ↦ xL for K ≤ L
    let projection = |k: SubgroupId, l: SubgroupId| -> Vec<usize> {
        cosets[k].iter().map(|&x| cosets[l].binary_search(&lattice.coset_rep(x, l)).expect("coset")).collect()
    };
    // G/K → G/gKg⁻¹, xK ↦ xg⁻¹(gKg⁻¹)
    let translation = |s: usize, k: SubgroupId| -> Vec<usize> {
        let t = lattice.conj(s, k);
        cosets[k]
            .iter()
            .map(|&x| cosets[t].binary_search(&lattice.coset_rep(g.mul(x, g.inv(s)), t)).expect("coset"))
            .collect()
    };
    MackeyFunctor::from_fns(
        lattice,
        dims,
        |l, k| pullback(n, &restricted[k], &restricted[l], &projection(k, l)).expect("equivariant"),
        |k, l| pushforward(n, &restricted[k], &restricted[l], &projection(k, l)).expect("equivariant"),
        |s, k| {
            let t = lattice.conj(s, k);
            pushforward(n, &restricted[k], &restricted[t], &translation(s, k)).expect("equivariant")
        },
    )
}

/// The quotient `G/N` with its subgroup lattice and the correspondence with
/// subgroups of `G` containing `N`.
#[derive(Clone, Debug)]
pub struct QuotientLattice {
    pub normal: SubgroupId,
    pub lattice: Arc<SubgroupLattice>,
    /// Image in `G/N` of every element of `G`.
    pub projection: Vec<usize>,
    /// Preimage in `G` of each subgroup of `G/N`.
    pub preimage: Vec<SubgroupId>,
}

impl QuotientLattice {
    pub fn new(lattice: &SubgroupLattice, n: SubgroupId) -> Result<Self> {
        let g = lattice.group();
        let name = format!("{}/{}", g.name(), lattice.name(n));
        let q = g.quotient(&name, lattice.elements(n))?;
        let ql = SubgroupLattice::new(q.group);
        let preimage = ql
            .ids()
            .map(|k| {
                let elems: Vec<usize> = (0..g.order()).filter(|&x| ql.contains(k, q.projection[x])).collect();
                lattice.id_of(&elems).expect("preimage is a subgroup")
            })
            .collect();
        Ok(QuotientLattice { normal: n, lattice: ql, projection: q.projection, preimage })
    }

    /// The subgroup `K/N` for `K ⊇ N`.
    pub fn image(&self, k: SubgroupId) -> Option<SubgroupId> {
        self.preimage.iter().position(|&p| p == k)
    }
}

/// `ε^# M` for a functor vanishing below `N`: the functor over `G/N` with
/// value `M(G/K)` at `K/N`.
pub fn eps_upper(m: &MackeyFunctor, q: &QuotientLattice) -> Result<MackeyFunctor> {
    let lat = m.lattice();
    for k in lat.ids() {
        if !lat.leq(q.normal, k) && m.dim(k) != 0 {
            return Err(Error::Precondition(format!(
                "M(G/{}) is nonzero but {} does not contain {}",
                lat.name(k),
                lat.name(k),
                lat.name(q.normal)
            )));
        }
    }
    let g = lat.group();
    let ql = &q.lattice;
    let lift = |w: usize| (0..g.order()).find(|&x| q.projection[x] == w).expect("surjective");
    MackeyFunctor::from_fns(
        ql,
        ql.ids().map(|k| m.dim(q.preimage[k])).collect(),
        |a, b| m.res(q.preimage[a], q.preimage[b]).clone(),
        |b, a| m.ind(q.preimage[b], q.preimage[a]).clone(),
        |w, a| m.conj(lift(w), q.preimage[a]).clone(),
    )
}

/// `ε_# M'` for a functor over `G/N`: the functor over `G` with value
/// `M'((G/N)/(K/N))` at `K ⊇ N` and zero elsewhere.
pub fn eps_lower(m: &MackeyFunctor, lattice: &Arc<SubgroupLattice>, q: &QuotientLattice) -> Result<MackeyFunctor> {
    if !Arc::ptr_eq(m.lattice(), &q.lattice) {
        return Err(Error::GroupMismatch);
    }
    let img: Vec<Option<SubgroupId>> = lattice.ids().map(|k| q.image(k)).collect();
    let dim = |k: SubgroupId| img[k].map_or(0, |a| m.dim(a));
    MackeyFunctor::from_fns(
        lattice,
        lattice.ids().map(dim).collect(),
        |h, k| match (img[h], img[k]) {
            (Some(a), Some(b)) => m.res(a, b).clone(),
            _ => QMatrix::zeros(dim(k), dim(h)),
        },
        |k, h| match (img[k], img[h]) {
            (Some(b), Some(a)) => m.ind(b, a).clone(),
            _ => QMatrix::zeros(dim(h), dim(k)),
        },
        |s, h| match img[h] {
            Some(a) => m.conj(q.projection[s], a).clone(),
            None => QMatrix::zeros(0, 0),
        },
    )
}

/// `M(G/e)` with `G` acting by conjugation.
pub fn evaluate_bottom(m: &MackeyFunctor) -> Result<WModule> {
    let lat = m.lattice();
    let e = lat.trivial();
    let action = (0..lat.group().generators().len()).map(|pos| m.conj_gen(pos, e).clone()).collect();
    WModule::new(lat.group().clone(), m.dim(e), action)
}

/// The unit `M → FP(M(G/e))`, `x ↦ R^H_e x` at level `H`.
pub fn fp_unit(m: &Arc<MackeyFunctor>) -> Result<MackeyMorphism> {
    let lat = m.lattice();
    let v = evaluate_bottom(m)?;
    let fp = Arc::new(fp_functor(lat, &v)?);
    let bases = fp_bases(lat, &v);
    let e = lat.trivial();
    let maps = lat.ids().map(|h| coords(&bases[h], m.res(h, e))).collect();
    MackeyMorphism::new(m.clone(), fp, maps)
}
