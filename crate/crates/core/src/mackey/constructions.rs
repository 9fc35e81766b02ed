use std::sync::Arc;

use crate::burnside::{self, BurnsideElement};
use crate::error::{Error, Result};
use crate::grp::{SubgroupId, SubgroupLattice};
use crate::qlin::{quotient_space, QMatrix, Quotient, WModule, Q};

use super::{MackeyFunctor, MackeyMorphism};

pub fn zero(lattice: &Arc<SubgroupLattice>) -> MackeyFunctor {
    let z = |_, _| QMatrix::zeros(0, 0);
    MackeyFunctor::from_fns(lattice, vec![0; lattice.len()], z, z, z).expect("zero shapes")
}

/// Restriction and conjugation are identities, `I^H_K` is multiplication by
/// the index.
pub fn constant(lattice: &Arc<SubgroupLattice>, dim: usize) -> MackeyFunctor {
    let index = |k, h| Q::from(lattice.index(k, h).expect("K ≤ H"));
    MackeyFunctor::from_fns(
        lattice,
        vec![dim; lattice.len()],
        |_, _| QMatrix::identity(dim),
        |k, h| QMatrix::scalar(dim, &index(k, h)),
        |_, _| QMatrix::identity(dim),
    )
    .expect("constant shapes")
}

/// Induction and conjugation are identities, `R^H_K` is multiplication by
/// the index.
pub fn coconstant(lattice: &Arc<SubgroupLattice>, dim: usize) -> MackeyFunctor {
    let index = |k, h| Q::from(lattice.index(k, h).expect("K ≤ H"));
    MackeyFunctor::from_fns(
        lattice,
        vec![dim; lattice.len()],
        |h, k| QMatrix::scalar(dim, &index(k, h)),
        |_, _| QMatrix::identity(dim),
        |_, _| QMatrix::identity(dim),
    )
    .expect("coconstant shapes")
}

/// Levelwise dual: restriction and induction swap roles and transpose,
/// `C_g` becomes the transpose of `C_{g⁻¹}`.
pub fn dual(m: &MackeyFunctor) -> MackeyFunctor {
    let lat = m.lattice();
    let g = lat.group();
    MackeyFunctor::from_fns(
        lat,
        m.dims().to_vec(),
        |h, k| m.ind(k, h).transpose(),
        |k, h| m.res(h, k).transpose(),
        |s, h| m.conj(g.inv(s), lat.conj(s, h)).transpose(),
    )
    .expect("dual shapes")
}

pub fn direct_sum(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyFunctor> {
    let lat = m.lattice();
    if !Arc::ptr_eq(lat, n.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let g = lat.group();
    let pos = |s: usize| g.generators().iter().position(|&x| x == s).expect("generator");
    MackeyFunctor::from_fns(
        lat,
        lat.ids().map(|h| m.dim(h) + n.dim(h)).collect(),
        |h, k| m.res(h, k).direct_sum(n.res(h, k)),
        |k, h| m.ind(k, h).direct_sum(n.ind(k, h)),
        |s, h| m.conj_gen(pos(s), h).direct_sum(n.conj_gen(pos(s), h)),
    )
}

/// Direct sum of a list of functors over the same lattice.
pub fn direct_sum_all(lattice: &Arc<SubgroupLattice>, parts: &[MackeyFunctor]) -> Result<MackeyFunctor> {
    let mut out = zero(lattice);
    for p in parts {
        out = direct_sum(&out, p)?;
    }
    Ok(out)
}

/// Transports `m` along new bases: the columns of `bases[H]` are the new
/// basis of `M(H)` written in the old one. Returns the new functor and the
/// isomorphism from it to `m`.
pub fn change_basis(m: &Arc<MackeyFunctor>, bases: &[QMatrix]) -> Result<(Arc<MackeyFunctor>, MackeyMorphism)> {
    let lat = m.lattice();
    let inv: Vec<QMatrix> = bases.iter().map(QMatrix::inverse).collect::<Result<_>>()?;
    let pos = |s: usize| lat.group().generators().iter().position(|&x| x == s).expect("generator");
    let n = Arc::new(MackeyFunctor::from_fns(
        lat,
        m.dims().to_vec(),
        |h, k| &(&inv[k] * m.res(h, k)) * &bases[h],
        |k, h| &(&inv[h] * m.ind(k, h)) * &bases[k],
        |s, h| &(&inv[lat.conj(s, h)] * m.conj_gen(pos(s), h)) * &bases[h],
    )?);
    let iso = MackeyMorphism::new_unchecked(n.clone(), m.clone(), bases.to_vec());
    Ok((n, iso))
}

/// Coordinates of the columns of `vectors` in the basis `basis`, which must
/// span them.
pub(crate) fn coords(basis: &QMatrix, vectors: &QMatrix) -> QMatrix {
    basis.coordinates(vectors).expect("vectors lie in the span of the basis")
}

fn check_over_group(lattice: &Arc<SubgroupLattice>, v: &WModule) -> Result<()> {
    if **v.group() != **lattice.group() {
        return Err(Error::BadRepresentation("module is not over the lattice's group".into()));
    }
    Ok(())
}

/// Fixed point functor `FP_V`: level `H` is `V^H` in the canonical kernel
/// basis, restriction is inclusion of fixed points, induction sums over
/// `H/K`, conjugation is the action.
pub fn fp_functor(lattice: &Arc<SubgroupLattice>, v: &WModule) -> Result<MackeyFunctor> {
    check_over_group(lattice, v)?;
    let bases = fp_bases(lattice, v);
    MackeyFunctor::from_fns(
        lattice,
        bases.iter().map(QMatrix::cols).collect(),
        |h, k| coords(&bases[k], &bases[h]),
        |k, h| {
            let mut sum = QMatrix::zeros(v.dim(), v.dim());
            for x in lattice.left_cosets(h, k) {
                sum = &sum + v.matrix(x);
            }
            coords(&bases[h], &(&sum * &bases[k]))
        },
        |s, h| coords(&bases[lattice.conj(s, h)], &(v.matrix(s) * &bases[h])),
    )
}

/// Basis of `V^H` for every subgroup.
pub fn fp_bases(lattice: &SubgroupLattice, v: &WModule) -> Vec<QMatrix> {
    lattice.ids().map(|h| v.fixed_subspace(lattice.elements(h))).collect()
}

/// Coinvariants `V_H = V / ⟨hv − v⟩` for every subgroup.
pub fn fq_quotients(lattice: &SubgroupLattice, v: &WModule) -> Vec<Quotient> {
    let id = QMatrix::identity(v.dim());
    lattice
        .ids()
        .map(|h| {
            let parts: Vec<QMatrix> = lattice.elements(h).iter().map(|&x| v.matrix(x) - &id).collect();
            quotient_space(v.dim(), &QMatrix::hstack_all(&parts, v.dim()))
        })
        .collect()
}

/// Orbit functor `FQ_V`: level `H` is the coinvariants `V_H`, induction is
/// the projection `V_K → V_H`, restriction is `[v] ↦ Σ_{hK∈H/K} [h⁻¹v]`.
pub fn fq_functor(lattice: &Arc<SubgroupLattice>, v: &WModule) -> Result<MackeyFunctor> {
    check_over_group(lattice, v)?;
    let g = lattice.group();
    let qs = fq_quotients(lattice, v);
    MackeyFunctor::from_fns(
        lattice,
        qs.iter().map(Quotient::dim).collect(),
        |h, k| {
            let mut sum = QMatrix::zeros(v.dim(), v.dim());
            for x in lattice.left_cosets(h, k) {
                sum = &sum + v.matrix(g.inv(x));
            }
            &(&qs[k].projection * &sum) * &qs[h].section
        },
        |k, h| &qs[h].projection * &qs[k].section,
        |s, h| &(&qs[lattice.conj(s, h)].projection * v.matrix(s)) * &qs[h].section,
    )
}

/// The isomorphism `FP_V → FQ_V`, `x ↦ (1/|H|)[x]` at level `H`.
pub fn fp_to_fq(lattice: &Arc<SubgroupLattice>, v: &WModule) -> Result<MackeyMorphism> {
    let fp = Arc::new(fp_functor(lattice, v)?);
    let fq = Arc::new(fq_functor(lattice, v)?);
    let bases = fp_bases(lattice, v);
    let qs = fq_quotients(lattice, v);
    let maps = lattice
        .ids()
        .map(|h| (&qs[h].projection * &bases[h]).scale(&Q::new(1, lattice.order_of(h) as i64)))
        .collect();
    MackeyMorphism::new(fp, fq, maps)
}

/// The Burnside ring functor: level `H` is `A_Q(H)` in its basis of
/// `H`-sets `[H/K]`, with restriction, induction and conjugation of sets.
pub fn burnside_mackey(lattice: &Arc<SubgroupLattice>) -> MackeyFunctor {
    let dims: Vec<usize> = lattice.ids().map(|h| burnside::tables(lattice, h).len()).collect();
    let columns = |n: usize, cols: Vec<Vec<Q>>| QMatrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone());
    let basis = |a: SubgroupId, i: usize| {
        let mut c = vec![Q::zero(); dims[a]];
        c[i] = Q::one();
        BurnsideElement::from_coeffs(lattice, a, c).expect("shape")
    };
    MackeyFunctor::from_fns(
        lattice,
        dims.clone(),
        |h, k| {
            let cols = (0..dims[h]).map(|i| basis(h, i).restrict(k).expect("K ≤ H").coeffs().to_vec()).collect();
            columns(dims[k], cols)
        },
        |k, h| {
            let cols = (0..dims[k]).map(|i| basis(k, i).induce(h).expect("K ≤ H").coeffs().to_vec()).collect();
            columns(dims[h], cols)
        },
        |s, h| {
            let t = lattice.conj(s, h);
            let cols = (0..dims[h]).map(|i| basis(h, i).conjugate(s).coeffs().to_vec()).collect();
            columns(dims[t], cols)
        },
    )
    .expect("burnside shapes")
}

/// Action of `a ∈ A_Q(H)` on `M(H)`: `[H/K] ↦ I^H_K R^H_K`.
pub fn burnside_action(m: &MackeyFunctor, a: &BurnsideElement) -> Result<QMatrix> {
    if !Arc::ptr_eq(m.lattice(), a.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let h = a.ambient();
    let d = m.dim(h);
    let mut out = QMatrix::zeros(d, d);
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = a.tables().rep(i);
        out = &out + &(m.ind(k, h) * m.res(h, k)).scale(c);
    }
    Ok(out)
}

/// `eM` for an idempotent `e ∈ A_Q(G)`: level `H` is the image of the action
/// of `R^G_H(e)`. Also returns the inclusion `eM → M`.
pub fn idempotent_part(e: &BurnsideElement, m: &Arc<MackeyFunctor>) -> Result<(Arc<MackeyFunctor>, MackeyMorphism)> {
    let lat = m.lattice();
    if !Arc::ptr_eq(lat, e.lattice()) {
        return Err(Error::GroupMismatch);
    }
    if e.ambient() != lat.whole() {
        return Err(Error::Precondition("idempotent must live in the Burnside ring of G".into()));
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let bases: Vec<QMatrix> = lat
        .ids()
        .map(|h| Ok(burnside_action(m, &e.restrict(h)?)?.image()))
        .collect::<Result<_>>()?;
    let pos = |s: usize| lat.group().generators().iter().position(|&x| x == s).expect("generator");
    let part = Arc::new(MackeyFunctor::from_fns(
        lat,
        bases.iter().map(QMatrix::cols).collect(),
        |h, k| coords(&bases[k], &(m.res(h, k) * &bases[h])),
        |k, h| coords(&bases[h], &(m.ind(k, h) * &bases[k])),
        |s, h| coords(&bases[lat.conj(s, h)], &(m.conj_gen(pos(s), h) * &bases[h])),
    )?);
    let inclusion = MackeyMorphism::new_unchecked(part.clone(), m.clone(), bases);
    Ok((part, inclusion))
}
