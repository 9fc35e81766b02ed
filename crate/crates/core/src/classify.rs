//! Splitting of rational Mackey functors into Weyl group modules: the
//! functors `F_H` and `U_H`, the comparison maps, the assembled
//! classification isomorphism and the diagonal decomposition.

use std::sync::Arc;

use rand::Rng;

use crate::burnside::idempotent_gluck;
use crate::error::{Error, Result};
use crate::grp::{SubgroupId, SubgroupLattice};
use crate::mackey::{burnside_action, change_basis, direct_sum_all, MackeyFunctor, MackeyMorphism};
use crate::qlin::{QMatrix, WModule, Q};

/// The permutation action of `W_G H` on `(G/K)^H`, `w·xK = nxK` for a lift
/// `n` of `w`, as point images per Weyl element.
fn weyl_on_fixed_cosets(lat: &SubgroupLattice, h: SubgroupId, k: SubgroupId, cosets: &[usize]) -> Vec<Vec<usize>> {
    let g = lat.group();
    let weyl = lat.weyl(h);
    (0..weyl.order())
        .map(|w| {
            let n = weyl.lift(w);
            cosets
                .iter()
                .map(|&x| cosets.binary_search(&lat.coset_rep(g.mul(n, x), k)).expect("fixed coset"))
                .collect()
        })
        .collect()
}

fn permutation_matrix(images: &[usize], n: usize) -> QMatrix {
    let mut p = QMatrix::zeros(n, n);
    for (x, &y) in images.iter().enumerate() {
        p[(y, x)] = Q::one();
    }
    p
}

/// Level data of `F_H(V)`: the fixed cosets and the basis of the invariants
/// inside `Q[(G/K)^H] ⊗ V` (coordinate `x·dim V + v`).
struct FreeLevel {
    cosets: Vec<usize>,
    basis: QMatrix,
}

fn free_levels(lat: &SubgroupLattice, h: SubgroupId, v: &WModule) -> Vec<FreeLevel> {
    let weyl = lat.weyl(h);
    lat.ids()
        .map(|k| {
            let cosets = lat.fixed_cosets(k, h);
            let n = cosets.len() * v.dim();
            let action = weyl_on_fixed_cosets(lat, h, k, &cosets);
            let id = QMatrix::identity(n);
            let parts: Vec<QMatrix> = weyl
                .group
                .generators()
                .iter()
                .map(|&w| &permutation_matrix(&action[w], cosets.len()).kron(v.matrix(w)) - &id)
                .collect();
            let basis = if parts.is_empty() { id } else { QMatrix::vstack_all(&parts, n).kernel() };
            FreeLevel { cosets, basis }
        })
        .collect()
}

fn check_weyl(lat: &SubgroupLattice, h: SubgroupId, v: &WModule) -> Result<()> {
    if **v.group() != *lat.weyl(h).group {
        return Err(Error::WeylMismatch);
    }
    Ok(())
}

/// `F_H(V)(G/K) = (Q[(G/K)^H] ⊗ V)^{W_G H}`.
///
/// Restriction sends a fixed coset `yL` to the sum of the fixed cosets
/// `xK ⊆ yL`, induction is the projection `xK ↦ xL`, and `C_g` sends `xK`
/// to `xg⁻¹(gKg⁻¹)`.
pub fn free_functor(lattice: &Arc<SubgroupLattice>, h: SubgroupId, v: &WModule) -> Result<MackeyFunctor> {
    check_weyl(lattice, h, v)?;
    let lat = lattice;
    let g = lat.group();
    let d = v.dim();
    let levels = free_levels(lat, h, v);
    let idv = QMatrix::identity(d);
    let coords = |k: SubgroupId, vectors: &QMatrix| {
        levels[k].basis.coordinates(vectors).expect("invariant vectors")
    };
    let project = |k: SubgroupId, l: SubgroupId| {
        // Q[(G/K)^H] → Q[(G/L)^H], xK ↦ xL
        let (ck, cl) = (&levels[k].cosets, &levels[l].cosets);
        let mut p = QMatrix::zeros(cl.len(), ck.len());
        for (i, &x) in ck.iter().enumerate() {
            let j = cl.binary_search(&lat.coset_rep(x, l)).expect("image of a fixed coset is fixed");
            p[(j, i)] = Q::one();
        }
        p
    };
    MackeyFunctor::from_fns(
        lat,
        levels.iter().map(|l| l.basis.cols()).collect(),
        |l, k| coords(k, &(&project(k, l).transpose().kron(&idv) * &levels[l].basis)),
        |k, l| coords(l, &(&project(k, l).kron(&idv) * &levels[k].basis)),
        |s, k| {
            let t = lat.conj(s, k);
            let (ck, ct) = (&levels[k].cosets, &levels[t].cosets);
            let si = g.inv(s);
            let mut p = QMatrix::zeros(ct.len(), ck.len());
            for (i, &x) in ck.iter().enumerate() {
                let j = ct.binary_search(&lat.coset_rep(g.mul(x, si), t)).expect("fixed coset");
                p[(j, i)] = Q::one();
            }
            coords(t, &(&p.kron(&idv) * &levels[k].basis))
        },
    )
}

/// `U_H(M)`: the image of `e_H^H` acting on `M(G/H)`, with `W_G H` acting
/// through conjugation by lifts. Returns the module and the basis (columns
/// in `M(G/H)`) it is written in.
pub fn forget(m: &MackeyFunctor, h: SubgroupId) -> Result<(WModule, QMatrix)> {
    let lat = m.lattice();
    let weyl = lat.weyl(h);
    let e = idempotent_gluck(lat, h, h)?;
    let basis = burnside_action(m, &e)?.image();
    let action = weyl
        .group
        .generators()
        .iter()
        .map(|&w| {
            basis
                .coordinates(&(m.conj(weyl.lift(w), h) * &basis))
                .ok_or_else(|| Error::Verification("e_H^H M(G/H) is not Weyl-stable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((WModule::new(weyl.group.clone(), basis.cols(), action)?, basis))
}

/// The comparison map `κ: M → F_H(U_H M)`. At level `K` it sends `x` to
/// `Σ_{gK∈(G/K)^H} [gK] ⊗ e_H^H C_g R^K_{g⁻¹Hg}(x)`. The result is verified
/// to be natural; failure is an error.
pub fn comparison_map(m: &Arc<MackeyFunctor>, h: SubgroupId) -> Result<MackeyMorphism> {
    let lat = m.lattice();
    let g = lat.group();
    let (u, ubasis) = forget(m, h)?;
    let target = Arc::new(free_functor(lat, h, &u)?);
    let levels = free_levels(lat, h, &u);
    let e_action = burnside_action(m, &idempotent_gluck(lat, h, h)?)?;
    let to_u = |vectors: &QMatrix| ubasis.coordinates(&(&e_action * vectors)).expect("image of e_H^H");
    let maps = lat
        .ids()
        .map(|k| {
            let level = &levels[k];
            let blocks: Vec<QMatrix> = level
                .cosets
                .iter()
                .map(|&x| {
                    let hx = lat.conj(g.inv(x), h);
                    to_u(&(m.conj(x, hx) * m.res(k, hx)))
                })
                .collect();
            let stacked = QMatrix::vstack_all(&blocks, m.dim(k));
            level
                .basis
                .coordinates(&stacked)
                .ok_or_else(|| Error::NotEquivariant(format!("comparison map at {} is not invariant", lat.name(k))))
        })
        .collect::<Result<Vec<_>>>()?;
    MackeyMorphism::new(m.clone(), target, maps)
}

/// One classified piece: the class representative `H`, the module
/// `V_H = U_H(M)` and the basis of `e_H^H M(G/H)` it is written in.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub subgroup: SubgroupId,
    pub module: WModule,
    pub basis: QMatrix,
}

#[derive(Clone, Debug)]
pub struct SplitData {
    pub lattice: Arc<SubgroupLattice>,
    /// One part per conjugacy class, in class order.
    pub parts: Vec<SplitPart>,
}

impl SplitData {
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.module.dim()).collect()
    }
}

pub fn split(m: &MackeyFunctor) -> Result<SplitData> {
    let lat = m.lattice();
    let parts = lat
        .class_reps()
        .into_iter()
        .map(|h| {
            let (module, basis) = forget(m, h)?;
            Ok(SplitPart { subgroup: h, module, basis })
        })
        .collect::<Result<_>>()?;
    Ok(SplitData { lattice: lat.clone(), parts })
}

/// `⊕_{(H)} F_H(V_H)`.
pub fn assemble(s: &SplitData) -> Result<MackeyFunctor> {
    let parts: Vec<MackeyFunctor> =
        s.parts.iter().map(|p| free_functor(&s.lattice, p.subgroup, &p.module)).collect::<Result<_>>()?;
    direct_sum_all(&s.lattice, &parts)
}

/// The isomorphism `M → assemble(split(M))` with its levelwise determinants.
#[derive(Clone, Debug)]
pub struct Classification {
    pub split: SplitData,
    pub iso: MackeyMorphism,
    pub determinants: Vec<Q>,
}

/// Stacks the comparison maps of all classes and certifies the result
/// invertible at every level by an exact determinant.
pub fn classify_iso(m: &Arc<MackeyFunctor>) -> Result<Classification> {
    let lat = m.lattice();
    let s = split(m)?;
    let target = Arc::new(assemble(&s)?);
    let kappas: Vec<MackeyMorphism> =
        s.parts.iter().map(|p| comparison_map(m, p.subgroup)).collect::<Result<_>>()?;
    let maps: Vec<QMatrix> = lat
        .ids()
        .map(|k| {
            let blocks: Vec<QMatrix> = kappas.iter().map(|f| f.maps[k].clone()).collect();
            QMatrix::vstack_all(&blocks, m.dim(k))
        })
        .collect();
    let iso = MackeyMorphism::new(m.clone(), target, maps)?;
    let mut determinants = Vec::with_capacity(lat.len());
    for (k, f) in iso.maps.iter().enumerate() {
        let d = f.determinant()?;
        if d.is_zero() {
            return Err(Error::Verification(format!("classification map is singular at {}", lat.name(k))));
        }
        determinants.push(d);
    }
    Ok(Classification { split: s, iso, determinants })
}

/// Both sides of `e_K^H M(G/H) ≅ (e_K^K M(G/K))^{W_H K}` and the map
/// `R^H_K` between them in the chosen bases.
#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub matrix: QMatrix,
    pub isomorphism: bool,
}

pub fn diagonal_check(m: &MackeyFunctor, k: SubgroupId, h: SubgroupId) -> Result<DiagonalReport> {
    let lat = m.lattice();
    if !lat.leq(k, h) {
        return Err(Error::NotSubgroup(format!("{} in {}", lat.name(k), lat.name(h))));
    }
    let left = burnside_action(m, &idempotent_gluck(lat, h, k)?)?.image();
    let ek = burnside_action(m, &idempotent_gluck(lat, k, k)?)?.image();
    let n = lat.normalizer_in(h, k);
    let id = QMatrix::identity(ek.cols());
    let parts: Vec<QMatrix> = lat
        .elements(n)
        .iter()
        .map(|&x| {
            let c = ek.coordinates(&(m.conj(x, k) * &ek)).expect("e_K^K part is normalizer-stable");
            &c - &id
        })
        .collect();
    let fixed = QMatrix::vstack_all(&parts, ek.cols()).kernel();
    let right = &ek * &fixed;
    let image = m.res(h, k) * &left;
    let matrix = right
        .coordinates(&image)
        .ok_or_else(|| Error::Verification("R^H_K does not land in the fixed part".into()))?;
    let isomorphism = matrix.is_square() && matrix.rank() == matrix.rows();
    Ok(DiagonalReport { left_dim: left.cols(), right_dim: right.cols(), matrix, isomorphism })
}

/// `dim M(G/H)` predicted by the diagonal decomposition: the sum over
/// `H`-classes `(K)` of subgroups of `H` of `dim (e_K^K M(G/K))^{W_H K}`.
pub fn diagonal_dimension(m: &MackeyFunctor, h: SubgroupId) -> Result<usize> {
    let t = crate::burnside::tables(m.lattice(), h);
    let mut total = 0;
    for i in 0..t.len() {
        total += diagonal_check(m, t.rep(i), h)?.right_dim;
    }
    Ok(total)
}

/// Rank of `e_C^B` acting on `F_A(V)(G/B)` and whether `A` and `C` are
/// conjugate; the rank must vanish when they are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeIdempotentReport {
    pub rank: usize,
    pub conjugate: bool,
}

impl FreeIdempotentReport {
    pub fn holds(&self) -> bool {
        self.conjugate || self.rank == 0
    }
}

pub fn free_functor_idempotent_check(
    lattice: &Arc<SubgroupLattice>,
    a: SubgroupId,
    b: SubgroupId,
    c: SubgroupId,
    v: &WModule,
) -> Result<FreeIdempotentReport> {
    if !lattice.leq(c, b) {
        return Err(Error::NotSubgroup(format!("{} in {}", lattice.name(c), lattice.name(b))));
    }
    let f = free_functor(lattice, a, v)?;
    let action = burnside_action(&f, &idempotent_gluck(lattice, b, c)?)?;
    Ok(FreeIdempotentReport { rank: action.rank(), conjugate: lattice.is_conjugate(a, c) })
}

/// Random invertible integer matrix as a product of unitriangular factors.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let mut lower = QMatrix::identity(n);
    let mut upper = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = Q::from_int(rng.gen_range(-1..=1));
            upper[(j, i)] = Q::from_int(rng.gen_range(-1..=1));
        }
    }
    let perm: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    };
    &permutation_matrix(&perm, n) * &(&lower * &upper)
}

/// A random module over a finite group: a sum of permutation modules on
/// cosets of random cyclic subgroups, in a random basis, of dimension at
/// most `max_dim`.
pub fn random_module<R: Rng>(rng: &mut R, group: &Arc<crate::grp::FiniteGroup>, max_dim: usize) -> WModule {
    let mut module = WModule::zero(group.clone());
    let summands = rng.gen_range(0..=2);
    for _ in 0..summands {
        let x = rng.gen_range(0..group.order());
        let sub = group.closure(&[x]);
        let index = group.order() / sub.len();
        let piece = if index + module.dim() <= max_dim && rng.gen_bool(0.5) {
            WModule::coset_module(group.clone(), &sub).expect("cyclic subgroup")
        } else if module.dim() < max_dim {
            WModule::trivial(group.clone(), 1)
        } else {
            continue;
        };
        module = module.direct_sum(&piece).expect("same group");
    }
    let p = random_invertible(rng, module.dim());
    module.change_basis(&p).expect("invertible")
}

/// Random split data whose assembled functor has all levels of dimension at
/// most `max_level`.
pub fn random_split<R: Rng>(rng: &mut R, lattice: &Arc<SubgroupLattice>, max_level: usize) -> Result<SplitData> {
    loop {
        let parts = lattice
            .class_reps()
            .into_iter()
            .map(|h| {
                let module = if rng.gen_bool(0.5) {
                    random_module(rng, &lattice.weyl(h).group, 2)
                } else {
                    WModule::zero(lattice.weyl(h).group.clone())
                };
                SplitPart { subgroup: h, basis: QMatrix::identity(module.dim()), module }
            })
            .collect();
        let s = SplitData { lattice: lattice.clone(), parts };
        let dims_ok = lattice.ids().all(|k| {
            s.parts
                .iter()
                .map(|p| lattice.fixed_cosets(k, p.subgroup).len() * p.module.dim())
                .sum::<usize>()
                <= max_level * 4
        });
        if !dims_ok {
            continue;
        }
        let m = assemble(&s)?;
        if m.dims().iter().all(|&d| d <= max_level) {
            return Ok(s);
        }
    }
}

/// A random Mackey functor with levels of dimension at most `max_level`:
/// an assembled split datum in a random basis at every level.
pub fn random_functor<R: Rng>(rng: &mut R, lattice: &Arc<SubgroupLattice>, max_level: usize) -> Result<MackeyFunctor> {
    let s = random_split(rng, lattice, max_level)?;
    let m = Arc::new(assemble(&s)?);
    let bases: Vec<QMatrix> = lattice.ids().map(|k| random_invertible(rng, m.dim(k))).collect();
    let (n, _) = change_basis(&m, &bases)?;
    Ok(Arc::try_unwrap(n).unwrap_or_else(|a| (*a).clone()))
}
