use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qlin::{QMatrix, Q};

use super::MackeyFunctor;

/// A natural transformation between Mackey functors over the same group:
/// one matrix per subgroup commuting with restriction, induction and
/// conjugation.
#[derive(Clone, Debug)]
pub struct MackeyMorphism {
    pub source: Arc<MackeyFunctor>,
    pub target: Arc<MackeyFunctor>,
    pub maps: Vec<QMatrix>,
}

impl MackeyMorphism {
    /// Builds a morphism and verifies naturality.
    pub fn new(source: Arc<MackeyFunctor>, target: Arc<MackeyFunctor>, maps: Vec<QMatrix>) -> Result<Self> {
        let f = MackeyMorphism { source, target, maps };
        f.verify()?;
        Ok(f)
    }

    pub fn new_unchecked(source: Arc<MackeyFunctor>, target: Arc<MackeyFunctor>, maps: Vec<QMatrix>) -> Self {
        MackeyMorphism { source, target, maps }
    }

    pub fn identity(m: Arc<MackeyFunctor>) -> Self {
        let maps = m.lattice().ids().map(|h| QMatrix::identity(m.dim(h))).collect();
        MackeyMorphism { source: m.clone(), target: m, maps }
    }

    pub fn zero(source: Arc<MackeyFunctor>, target: Arc<MackeyFunctor>) -> Self {
        let maps = source.lattice().ids().map(|h| QMatrix::zeros(target.dim(h), source.dim(h))).collect();
        MackeyMorphism { source, target, maps }
    }

    /// Checks shapes and commutation with every structure map.
    pub fn verify(&self) -> Result<()> {
        let (m, n) = (&self.source, &self.target);
        let lat = m.lattice();
        if !Arc::ptr_eq(lat, n.lattice()) {
            return Err(Error::GroupMismatch);
        }
        if self.maps.len() != lat.len() {
            return Err(Error::Shape("one map per subgroup required".into()));
        }
        for h in lat.ids() {
            if self.maps[h].shape() != (n.dim(h), m.dim(h)) {
                return Err(Error::Shape(format!("map at {} has shape {:?}", lat.name(h), self.maps[h].shape())));
            }
        }
        let f = &self.maps;
        for h in lat.ids() {
            for k in lat.subgroups_of(h) {
                if &f[k] * m.res(h, k) != n.res(h, k) * &f[h] {
                    return Err(Error::Verification(format!(
                        "not natural for R^{}_{}",
                        lat.name(h),
                        lat.name(k)
                    )));
                }
                if &f[h] * m.ind(k, h) != n.ind(k, h) * &f[k] {
                    return Err(Error::Verification(format!(
                        "not natural for I^{}_{}",
                        lat.name(h),
                        lat.name(k)
                    )));
                }
            }
        }
        let g = lat.group();
        for (pos, &s) in g.generators().iter().enumerate() {
            for h in lat.ids() {
                let sh = lat.conj(s, h);
                if &f[sh] * m.conj_gen(pos, h) != n.conj_gen(pos, h) * &f[h] {
                    return Err(Error::Verification(format!(
                        "not natural for C_{} at {}",
                        g.label(s),
                        lat.name(h)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_morphism(&self) -> bool {
        self.verify().is_ok()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &MackeyMorphism) -> Result<MackeyMorphism> {
        if self.maps.len() != other.maps.len() {
            return Err(Error::GroupMismatch);
        }
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| b.try_mul(a)).collect::<Result<_>>()?;
        Ok(MackeyMorphism { source: self.source.clone(), target: other.target.clone(), maps })
    }

    /// Levelwise ranks.
    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(QMatrix::rank).collect()
    }

    /// Levelwise determinants, `None` at levels where the map is not square.
    pub fn determinants(&self) -> Vec<Option<Q>> {
        self.maps.iter().map(|m| m.determinant().ok()).collect()
    }

    /// Whether every level is square with nonzero determinant.
    pub fn is_isomorphism(&self) -> bool {
        self.determinants().iter().all(|d| d.as_ref().is_some_and(|d| !d.is_zero()))
    }

    pub fn inverse(&self) -> Result<MackeyMorphism> {
        let maps = self.maps.iter().map(QMatrix::inverse).collect::<Result<_>>()?;
        Ok(MackeyMorphism { source: self.target.clone(), target: self.source.clone(), maps })
    }
}

/// Basis of the space of morphisms `M → N`, as the kernel of the linear
/// naturality constraints. Constraints are imposed on maximal pairs and on
/// generators only, which suffices when both functors satisfy the axioms.
pub fn hom_space(m: &Arc<MackeyFunctor>, n: &Arc<MackeyFunctor>) -> Result<Vec<MackeyMorphism>> {
    let lat = m.lattice();
    if !Arc::ptr_eq(lat, n.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let mut offsets = Vec::with_capacity(lat.len());
    let mut total = 0;
    for h in lat.ids() {
        offsets.push(total);
        total += n.dim(h) * m.dim(h);
    }
    let var = |h: usize, i: usize, j: usize| offsets[h] + i * m.dim(h) + j;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    // Adds the rows of  F_b · A − B · F_a = 0  where A: M(a) → M(b) and
    // B: N(a) → N(b).
    let mut constrain = |a: usize, b: usize, ma: &QMatrix, nb: &QMatrix| {
        for i in 0..n.dim(b) {
            for j in 0..m.dim(a) {
                let mut row = vec![Q::zero(); total];
                for k in 0..m.dim(b) {
                    let c = &ma[(k, j)];
                    if !c.is_zero() {
                        row[var(b, i, k)] += c;
                    }
                }
                for k in 0..n.dim(a) {
                    let c = &nb[(i, k)];
                    if !c.is_zero() {
                        row[var(a, k, j)] -= c;
                    }
                }
                if row.iter().any(|q| !q.is_zero()) {
                    rows.push(row);
                }
            }
        }
    };
    for h in lat.ids() {
        for k in lat.maximal_subgroups(h) {
            constrain(h, k, m.res(h, k), n.res(h, k));
            constrain(k, h, m.ind(k, h), n.ind(k, h));
        }
    }
    let g = lat.group();
    for pos in 0..g.generators().len() {
        let s = g.generators()[pos];
        for h in lat.ids() {
            constrain(h, lat.conj(s, h), m.conj_gen(pos, h), n.conj_gen(pos, h));
        }
    }
    let system = QMatrix::from_rows_shaped(rows.clone(), rows.len(), total)?;
    let kernel = system.kernel();
    Ok((0..kernel.cols())
        .map(|c| {
            let maps = lat
                .ids()
                .map(|h| QMatrix::from_fn(n.dim(h), m.dim(h), |i, j| kernel[(var(h, i, j), c)].clone()))
                .collect();
            MackeyMorphism::new_unchecked(m.clone(), n.clone(), maps)
        })
        .collect())
}
