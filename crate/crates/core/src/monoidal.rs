//! The box product of Mackey functors, Green functors, and the monoidal
//! compatibility of the splitting.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::burnside::{idempotent_gluck, tables, BurnsideElement};
use crate::classify::forget;
use crate::error::{Error, Result};
use crate::grp::{SubgroupId, SubgroupLattice};
use crate::mackey::{burnside_action, burnside_mackey, idempotent_part, MackeyFunctor, MackeyMorphism};
use crate::qlin::{quotient_space, QMatrix, Quotient, Q};

/// `T(H) = ⊕_{K≤H} M(G/K) ⊗ N(G/K)`, blocks in lattice order.
struct Level {
    blocks: Vec<(SubgroupId, usize)>,
    dim: usize,
    quotient: Quotient,
}

impl Level {
    fn offset(&self, k: SubgroupId) -> usize {
        self.blocks.iter().find(|(b, _)| *b == k).expect("block").1
    }
}

/// `M □ N` together with the presentation of each level as `T(H)/I(H)`.
pub struct BoxProduct {
    pub functor: Arc<MackeyFunctor>,
    pub left: Arc<MackeyFunctor>,
    pub right: Arc<MackeyFunctor>,
    levels: Vec<Level>,
}

impl BoxProduct {
    /// Class in `(M□N)(G/H)` of `x ⊗ y` placed in block `K` of `T(H)`, as
    /// a matrix on `M(G/K) ⊗ N(G/K)`.
    pub fn block_map(&self, h: SubgroupId, k: SubgroupId) -> QMatrix {
        let level = &self.levels[h];
        let d = self.left.dim(k) * self.right.dim(k);
        level.quotient.projection.block(0, level.offset(k), level.quotient.dim(), d)
    }

    /// Representative in `T(H)` of each class.
    pub fn section(&self, h: SubgroupId) -> &QMatrix {
        &self.levels[h].quotient.section
    }

    pub fn projection(&self, h: SubgroupId) -> &QMatrix {
        &self.levels[h].quotient.projection
    }

    /// Dimension of `T(H)`.
    pub fn ambient_dim(&self, h: SubgroupId) -> usize {
        self.levels[h].dim
    }
}

fn tensor_dim(m: &MackeyFunctor, n: &MackeyFunctor, k: SubgroupId) -> usize {
    m.dim(k) * n.dim(k)
}

/// Level `H` of `M □ N` is `T(H)` modulo the restriction/induction
/// relations for `L ≤ K ≤ H` in both factors and the conjugation relations
/// `C_h x ⊗ y − x ⊗ C_{h⁻¹} y` for `h ∈ H`, `K ≤ H`.
pub fn box_product(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>) -> Result<BoxProduct> {
    let lat = m.lattice();
    if !Arc::ptr_eq(lat, n.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let g = lat.group();
    let levels: Vec<Level> = lat
        .ids()
        .map(|h| {
            let mut blocks = Vec::new();
            let mut dim = 0;
            for k in lat.subgroups_of(h) {
                blocks.push((k, dim));
                dim += tensor_dim(m, n, k);
            }
            let level = Level { blocks, dim, quotient: quotient_space(0, &QMatrix::zeros(0, 0)) };
            let mut rels: Vec<QMatrix> = Vec::new();
            let mut relation = |a: SubgroupId, pa: QMatrix, b: SubgroupId, pb: QMatrix| {
                let mut r = QMatrix::zeros(dim, pa.cols());
                r.add_block(level.offset(a), 0, &pa);
                r.add_block(level.offset(b), 0, &(-&pb));
                rels.push(r);
            };
            for k in lat.subgroups_of(h) {
                for l in lat.subgroups_of(k) {
                    if l == k {
                        continue;
                    }
                    let (im, rm) = (m.ind(l, k), m.res(k, l));
                    let (in_, rn) = (n.ind(l, k), n.res(k, l));
                    // I(a) ⊗ b − a ⊗ R(b), a ∈ M(L), b ∈ N(K)
                    relation(
                        k,
                        im.kron(&QMatrix::identity(n.dim(k))),
                        l,
                        QMatrix::identity(m.dim(l)).kron(rn),
                    );
                    // a ⊗ I(b) − R(a) ⊗ b, a ∈ M(K), b ∈ N(L)
                    relation(
                        k,
                        QMatrix::identity(m.dim(k)).kron(in_),
                        l,
                        rm.kron(&QMatrix::identity(n.dim(l))),
                    );
                }
                for &x in lat.elements(h) {
                    let xk = lat.conj(x, k);
                    // C_x(a) ⊗ b − a ⊗ C_{x⁻¹}(b), a ∈ M(K), b ∈ N(xKx⁻¹)
                    relation(
                        xk,
                        m.conj(x, k).kron(&QMatrix::identity(n.dim(xk))),
                        k,
                        QMatrix::identity(m.dim(k)).kron(n.conj(g.inv(x), xk)),
                    );
                }
            }
            let all = QMatrix::hstack_all(&rels, dim);
            Level { quotient: quotient_space(dim, &all), ..level }
        })
        .collect();

    let pos = |s: usize| g.generators().iter().position(|&x| x == s).expect("generator");
    let functor = MackeyFunctor::from_fns(
        lat,
        levels.iter().map(|l| l.quotient.dim()).collect(),
        |h, k| {
            // R^H_K [L, x⊗y] = Σ_{g∈[K\H/L]} [K∩gLg⁻¹, R C_g x ⊗ R C_g y]
            let mut t = QMatrix::zeros(levels[k].dim, levels[h].dim);
            for &(l, off) in &levels[h].blocks {
                for x in lat.double_cosets(k, h, l) {
                    let xl = lat.conj(x, l);
                    let j = lat.intersect(k, xl);
                    let a = m.res(xl, j) * m.conj(x, l);
                    let b = n.res(xl, j) * n.conj(x, l);
                    t.add_block(levels[k].offset(j), off, &a.kron(&b));
                }
            }
            &(&levels[k].quotient.projection * &t) * &levels[h].quotient.section
        },
        |k, h| {
            let mut t = QMatrix::zeros(levels[h].dim, levels[k].dim);
            for &(l, off) in &levels[k].blocks {
                t.add_block(levels[h].offset(l), off, &QMatrix::identity(tensor_dim(m, n, l)));
            }
            &(&levels[h].quotient.projection * &t) * &levels[k].quotient.section
        },
        |s, h| {
            let sh = lat.conj(s, h);
            let p = pos(s);
            let mut t = QMatrix::zeros(levels[sh].dim, levels[h].dim);
            for &(l, off) in &levels[h].blocks {
                let sl = lat.conj(s, l);
                t.add_block(levels[sh].offset(sl), off, &m.conj_gen(p, l).kron(n.conj_gen(p, l)));
            }
            &(&levels[sh].quotient.projection * &t) * &levels[h].quotient.section
        },
    )?;
    Ok(BoxProduct { functor: Arc::new(functor), left: m.clone(), right: n.clone(), levels })
}

pub fn box_functor(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>) -> Result<MackeyFunctor> {
    Ok((*box_product(m, n)?.functor).clone())
}

/// `f □ g : M □ N → M' □ N'`, blockwise `f_K ⊗ g_K`.
pub fn box_map(src: &BoxProduct, dst: &BoxProduct, f: &MackeyMorphism, g: &MackeyMorphism) -> Result<MackeyMorphism> {
    let lat = src.functor.lattice();
    let maps = lat
        .ids()
        .map(|h| {
            let mut t = QMatrix::zeros(dst.levels[h].dim, src.levels[h].dim);
            for &(l, off) in &src.levels[h].blocks {
                t.add_block(dst.levels[h].offset(l), off, &f.maps[l].kron(&g.maps[l]));
            }
            &(&dst.levels[h].quotient.projection * &t) * &src.levels[h].quotient.section
        })
        .collect();
    MackeyMorphism::new(src.functor.clone(), dst.functor.clone(), maps)
}

/// The unit map `A □ M → M`, `a ⊗ x ↦ I^H_K(a·x)` on block `K`, certified
/// to be an isomorphism.
pub fn box_unit_iso(m: &Arc<MackeyFunctor>) -> Result<MackeyMorphism> {
    let lat = m.lattice();
    let a = Arc::new(burnside_mackey(lat));
    let bp = box_product(&a, m)?;
    let maps = lat
        .ids()
        .map(|h| {
            let mut t = QMatrix::zeros(m.dim(h), bp.levels[h].dim);
            for &(k, off) in &bp.levels[h].blocks {
                let d = m.dim(k);
                let n = tables(lat, k).len();
                for i in 0..n {
                    let mut c = vec![Q::zero(); n];
                    c[i] = Q::one();
                    let act = burnside_action(m, &BurnsideElement::from_coeffs(lat, k, c)?)?;
                    let img = m.ind(k, h) * &act;
                    // column i·d + j is [K/L_i] ⊗ x_j
                    t.set_block(0, off + i * d, &img);
                }
            }
            Ok(&t * &bp.levels[h].quotient.section)
        })
        .collect::<Result<Vec<_>>>()?;
    let f = MackeyMorphism::new(bp.functor.clone(), m.clone(), maps)?;
    if !f.is_isomorphism() {
        return Err(Error::Verification("unit map A □ M → M is not invertible".into()));
    }
    Ok(f)
}

/// The symmetry `M □ N → N □ M`, blockwise `x ⊗ y ↦ y ⊗ x`.
pub fn box_swap(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>) -> Result<MackeyMorphism> {
    let mn = box_product(m, n)?;
    let nm = box_product(n, m)?;
    let lat = m.lattice();
    let maps = lat
        .ids()
        .map(|h| {
            let mut t = QMatrix::zeros(nm.levels[h].dim, mn.levels[h].dim);
            for &(l, off) in &mn.levels[h].blocks {
                let (p, q) = (m.dim(l), n.dim(l));
                let off2 = nm.levels[h].offset(l);
                for i in 0..p {
                    for j in 0..q {
                        t[(off2 + j * p + i, off + i * q + j)] = Q::one();
                    }
                }
            }
            &(&nm.levels[h].quotient.projection * &t) * &mn.levels[h].quotient.section
        })
        .collect();
    MackeyMorphism::new(mn.functor.clone(), nm.functor.clone(), maps)
}

/// Outcome of comparing `e_H(M□N)` with `(e_H M) □ (e_H N)`.
#[derive(Clone, Debug, Serialize)]
pub struct BoxIdempotentReport {
    pub part_dims: Vec<usize>,
    pub box_of_parts_dims: Vec<usize>,
    /// The map `(e_H M) □ (e_H N) → e_H(M□N)` induced by the inclusions is
    /// invertible at every level.
    pub induced_iso: bool,
    /// `dim ((e_H M)□(e_H N))(G/H) = dim e_H M(G/H) · dim e_H N(G/H)`.
    pub tensor_at_h: bool,
}

impl BoxIdempotentReport {
    pub fn holds(&self) -> bool {
        self.part_dims == self.box_of_parts_dims && self.induced_iso && self.tensor_at_h
    }
}

pub fn box_idempotent_check(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>, h: SubgroupId) -> Result<BoxIdempotentReport> {
    let lat = m.lattice();
    let e = idempotent_gluck(lat, lat.whole(), h)?;
    let mn = box_product(m, n)?;
    let (part, part_inc) = idempotent_part(&e, &mn.functor)?;
    let (em, em_inc) = idempotent_part(&e, m)?;
    let (en, en_inc) = idempotent_part(&e, n)?;
    let parts_box = box_product(&em, &en)?;
    let induced = box_map(&parts_box, &mn, &em_inc, &en_inc)?;
    let into_part: Vec<QMatrix> = lat
        .ids()
        .map(|k| {
            part_inc.maps[k]
                .coordinates(&induced.maps[k])
                .ok_or_else(|| Error::Verification("induced map leaves the idempotent part".into()))
        })
        .collect::<Result<_>>()?;
    let induced_iso = into_part.iter().all(|f| f.is_square() && f.rank() == f.rows());
    Ok(BoxIdempotentReport {
        part_dims: part.dims().to_vec(),
        box_of_parts_dims: parts_box.functor.dims().to_vec(),
        induced_iso,
        tensor_at_h: parts_box.functor.dim(h) == em.dim(h) * en.dim(h),
    })
}

/// Outcome of comparing `U_H(M□N)` with `U_H M ⊗ U_H N`.
#[derive(Clone, Debug, Serialize)]
pub struct MonoidalReport {
    pub box_dim: usize,
    pub tensor_dim: usize,
    pub equivariant: bool,
    pub invertible: bool,
}

impl MonoidalReport {
    pub fn holds(&self) -> bool {
        self.box_dim == self.tensor_dim && self.equivariant && self.invertible
    }
}

/// The map `U_H M ⊗ U_H N → U_H(M□N)`, `u ⊗ v ↦ e_H^H [u ⊗ v]` in block
/// `H`, checked to be an equivariant isomorphism.
pub fn forget_monoidal_check(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>, h: SubgroupId) -> Result<MonoidalReport> {
    let lat = m.lattice();
    let bp = box_product(m, n)?;
    let (um, bm) = forget(m, h)?;
    let (un, bn) = forget(n, h)?;
    let (umn, bmn) = forget(&bp.functor, h)?;
    let tensor = um.tensor(&un)?;
    let e = burnside_action(&bp.functor, &idempotent_gluck(lat, h, h)?)?;
    let vectors = &(&e * &bp.block_map(h, h)) * &bm.kron(&bn);
    let f = bmn
        .coordinates(&vectors)
        .ok_or_else(|| Error::Verification("image leaves e_H^H part".into()))?;
    Ok(MonoidalReport {
        box_dim: umn.dim(),
        tensor_dim: tensor.dim(),
        equivariant: tensor.is_equivariant(&umn, &f),
        invertible: f.is_square() && f.rank() == f.rows(),
    })
}

/// A Green functor structure on a Mackey functor: a multiplication
/// `M(H) ⊗ M(H) → M(H)` and a unit at every level.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    pub base: Arc<MackeyFunctor>,
    /// `d x d²` per level.
    pub mult: Vec<QMatrix>,
    /// `d x 1` per level.
    pub unit: Vec<QMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum GreenLaw {
    Shape,
    Associativity,
    Unit,
    RestrictionMultiplicative,
    ConjugationMultiplicative,
    Frobenius,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GreenReport {
    pub violations: Vec<(GreenLaw, String)>,
}

impl GreenReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self) -> Vec<GreenLaw> {
        let mut v: Vec<GreenLaw> = self.violations.iter().map(|(l, _)| *l).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl GreenStructure {
    /// The Burnside functor with its ring structure.
    pub fn burnside(lattice: &Arc<SubgroupLattice>) -> Self {
        let base = Arc::new(burnside_mackey(lattice));
        let mut mult = Vec::new();
        let mut unit = Vec::new();
        for h in lattice.ids() {
            let t = tables(lattice, h);
            let d = t.len();
            mult.push(QMatrix::from_fn(d, d * d, |k, c| t.products[c / d][c % d][k].clone()));
            unit.push(QMatrix::column_vector(BurnsideElement::one(lattice, h).coeffs().to_vec()));
        }
        GreenStructure { base, mult, unit }
    }

    /// The constant functor `Q` with the multiplication of `Q`.
    pub fn constant(lattice: &Arc<SubgroupLattice>) -> Self {
        let base = Arc::new(crate::mackey::constant(lattice, 1));
        let one = QMatrix::identity(1);
        GreenStructure { base, mult: vec![one.clone(); lattice.len()], unit: vec![one; lattice.len()] }
    }

    /// Copy with the multiplication at one level scaled, for negative tests.
    pub fn with_scaled_mult(&self, h: SubgroupId, q: &Q) -> Self {
        let mut out = self.clone();
        out.mult[h] = out.mult[h].scale(q);
        out
    }
}

/// Verifies associativity, unitality, multiplicativity of restriction and
/// conjugation and both Frobenius relations at all levels and pairs.
pub fn green_check(s: &GreenStructure) -> GreenReport {
    let mut report = GreenReport::default();
    let m = &s.base;
    let lat = m.lattice();
    let name = |h| lat.name(h);
    for h in lat.ids() {
        let d = m.dim(h);
        if s.mult.get(h).map(QMatrix::shape) != Some((d, d * d)) || s.unit.get(h).map(QMatrix::shape) != Some((d, 1)) {
            report.violations.push((GreenLaw::Shape, format!("multiplication or unit at {}", name(h))));
        }
    }
    if !report.passed() {
        return report;
    }
    for h in lat.ids() {
        let d = m.dim(h);
        let id = QMatrix::identity(d);
        let mu = &s.mult[h];
        if mu * &mu.kron(&id) != mu * &id.kron(mu) {
            report.violations.push((GreenLaw::Associativity, format!("at {}", name(h))));
        }
        if mu * &s.unit[h].kron(&id) != id || mu * &id.kron(&s.unit[h]) != id {
            report.violations.push((GreenLaw::Unit, format!("at {}", name(h))));
        }
        for k in lat.subgroups_of(h) {
            let r = m.res(h, k);
            let i = m.ind(k, h);
            let idk = QMatrix::identity(m.dim(k));
            if r * mu != &s.mult[k] * &r.kron(r) || r * &s.unit[h] != s.unit[k] {
                report
                    .violations
                    .push((GreenLaw::RestrictionMultiplicative, format!("R^{}_{}", name(h), name(k))));
            }
            // x·I(y) = I(R(x)·y)
            if mu * &id.kron(i) != i * &(&s.mult[k] * &r.kron(&idk)) {
                report.violations.push((GreenLaw::Frobenius, format!("x·I(y) at {} > {}", name(h), name(k))));
            }
            // I(y)·x = I(y·R(x))
            if mu * &i.kron(&id) != i * &(&s.mult[k] * &idk.kron(r)) {
                report.violations.push((GreenLaw::Frobenius, format!("I(y)·x at {} > {}", name(h), name(k))));
            }
        }
        for (pos, &g) in lat.group().generators().iter().enumerate() {
            let gh = lat.conj(g, h);
            let c = m.conj_gen(pos, h);
            if c * mu != &s.mult[gh] * &c.kron(c) || c * &s.unit[h] != s.unit[gh] {
                report.violations.push((
                    GreenLaw::ConjugationMultiplicative,
                    format!("C_{} at {}", lat.group().label(g), name(h)),
                ));
            }
        }
    }
    report
}

/// JSON form of a Green structure: per-level multiplication rows and unit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GreenJson {
    pub mult: BTreeMap<String, Vec<Vec<Q>>>,
    pub unit: BTreeMap<String, Vec<Q>>,
}

pub fn green_to_json(s: &GreenStructure) -> GreenJson {
    let lat = s.base.lattice();
    GreenJson {
        mult: lat.ids().map(|h| (lat.name(h).to_string(), s.mult[h].to_rows())).collect(),
        unit: lat.ids().map(|h| (lat.name(h).to_string(), s.unit[h].column(0))).collect(),
    }
}

pub fn green_from_json(base: Arc<MackeyFunctor>, json: &GreenJson) -> Result<GreenStructure> {
    let lat = base.lattice().clone();
    let mut mult = Vec::new();
    let mut unit = Vec::new();
    for h in lat.ids() {
        let d = base.dim(h);
        let name = lat.name(h);
        let rows = json.mult.get(name).cloned().unwrap_or_default();
        let cols = rows.first().map_or(d * d, Vec::len);
        mult.push(QMatrix::from_rows_shaped(rows.clone(), rows.len(), cols)?);
        let u = json.unit.get(name).cloned().unwrap_or_default();
        unit.push(QMatrix::from_rows_shaped(u.iter().map(|q| vec![q.clone()]).collect(), u.len(), 1)?);
    }
    for key in json.mult.keys().chain(json.unit.keys()) {
        lat.find_or_err(key)?;
    }
    Ok(GreenStructure { base, mult, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::free_functor;
    use crate::grp::builtin;
    use crate::mackey::check_axioms;
    use crate::qlin::WModule;

    #[test]
    fn burnside_square_over_c2() {
        let l = SubgroupLattice::new(builtin::cyclic(2));
        let a = Arc::new(burnside_mackey(&l));
        let bp = box_product(&a, &a).unwrap();
        assert_eq!(bp.ambient_dim(1), 5);
        assert_eq!(bp.functor.dim(1), 2);
        assert!(check_axioms(&bp.functor).passed());
    }

    #[test]
    fn unit_law_for_f2_over_c6() {
        let l = SubgroupLattice::new(builtin::cyclic(6));
        let v = WModule::trivial(l.weyl(1).group.clone(), 1);
        let f = Arc::new(free_functor(&l, 1, &v).unwrap());
        let u = box_unit_iso(&f).unwrap();
        assert_eq!(u.source.dims(), f.dims());
    }

    #[test]
    fn zero_is_absorbing() {
        let l = SubgroupLattice::new(builtin::symmetric(3));
        let z = Arc::new(crate::mackey::zero(&l));
        let a = Arc::new(burnside_mackey(&l));
        assert!(box_functor(&z, &a).unwrap().is_zero());
    }

    #[test]
    fn swap_is_natural() {
        let l = SubgroupLattice::new(builtin::cyclic(3));
        let a = Arc::new(burnside_mackey(&l));
        let c = Arc::new(crate::mackey::constant(&l, 1));
        assert!(box_swap(&a, &c).unwrap().is_isomorphism());
    }

    #[test]
    fn green_structures() {
        let l = SubgroupLattice::new(builtin::symmetric(3));
        assert!(green_check(&GreenStructure::burnside(&l)).passed());
        assert!(green_check(&GreenStructure::constant(&l)).passed());
        let bad = GreenStructure::burnside(&l).with_scaled_mult(l.whole(), &Q::from(2));
        let report = green_check(&bad);
        assert!(report.violated().contains(&GreenLaw::RestrictionMultiplicative));
    }

    #[test]
    fn idempotent_and_monoidal_checks_over_c6() {
        let l = SubgroupLattice::new(builtin::cyclic(6));
        let a = Arc::new(burnside_mackey(&l));
        let r = box_idempotent_check(&a, &a, 1).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.box_of_parts_dims[3], 1);
        for h in l.ids() {
            assert!(forget_monoidal_check(&a, &a, h).unwrap().holds());
        }
    }
}
