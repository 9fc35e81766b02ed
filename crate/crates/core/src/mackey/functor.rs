use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::grp::{FiniteGroup, SubgroupId, SubgroupLattice};
use crate::qlin::QMatrix;

/// A Mackey functor for a finite group `G`: a rational vector space per
/// subgroup with restriction and induction for every pair `K ≤ H` and
/// conjugation by each generator of `G`.
///
/// Vectors are columns, so `R^H_K` is a `dim(K) x dim(H)` matrix.
#[derive(Clone)]
pub struct MackeyFunctor {
    lattice: Arc<SubgroupLattice>,
    dims: Vec<usize>,
    // (H, K) -> R^H_K
    restriction: HashMap<(SubgroupId, SubgroupId), QMatrix>,
    // (K, H) -> I^H_K
    induction: HashMap<(SubgroupId, SubgroupId), QMatrix>,
    // [generator position][H] -> C_s : M(H) -> M(sHs⁻¹)
    conjugation: Vec<Vec<QMatrix>>,
    all_conj: OnceLock<Vec<Vec<QMatrix>>>,
}

impl std::fmt::Debug for MackeyFunctor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let levels: Vec<String> =
            self.lattice.ids().map(|h| format!("{}: {}", self.lattice.name(h), self.dims[h])).collect();
        write!(f, "MackeyFunctor({}; {})", self.lattice.group().name(), levels.join(", "))
    }
}

impl PartialEq for MackeyFunctor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice)
            && self.dims == other.dims
            && self.restriction == other.restriction
            && self.induction == other.induction
            && self.conjugation == other.conjugation
    }
}

impl MackeyFunctor {
    /// Assembles a functor from closures giving `R^H_K`, `I^H_K` (called
    /// with `(K, H)`) and `C_g` at level `H` for each generator `g`. Shapes
    /// are checked; the axioms are not.
    pub fn from_fns(
        lattice: &Arc<SubgroupLattice>,
        dims: Vec<usize>,
        mut restriction: impl FnMut(SubgroupId, SubgroupId) -> QMatrix,
        mut induction: impl FnMut(SubgroupId, SubgroupId) -> QMatrix,
        mut conjugation: impl FnMut(usize, SubgroupId) -> QMatrix,
    ) -> Result<Self> {
        let mut r = HashMap::new();
        let mut i = HashMap::new();
        for h in lattice.ids() {
            for k in lattice.subgroups_of(h) {
                r.insert((h, k), restriction(h, k));
                i.insert((k, h), induction(k, h));
            }
        }
        let c = lattice
            .group()
            .generators()
            .iter()
            .map(|&s| lattice.ids().map(|h| conjugation(s, h)).collect())
            .collect();
        let m = Self::from_parts_unchecked(lattice.clone(), dims, r, i, c);
        m.check_shapes()?;
        Ok(m)
    }

    /// Raw constructor that performs no validation, for fixtures and
    /// deserialization; [`crate::mackey::check_axioms`] reports bad shapes.
    pub fn from_parts_unchecked(
        lattice: Arc<SubgroupLattice>,
        dims: Vec<usize>,
        restriction: HashMap<(SubgroupId, SubgroupId), QMatrix>,
        induction: HashMap<(SubgroupId, SubgroupId), QMatrix>,
        conjugation: Vec<Vec<QMatrix>>,
    ) -> Self {
        MackeyFunctor { lattice, dims, restriction, induction, conjugation, all_conj: OnceLock::new() }
    }

    /// Describes the first shape inconsistency, if any.
    pub fn check_shapes(&self) -> Result<()> {
        let lat = &self.lattice;
        let bad = |s: String| Err(Error::Shape(s));
        if self.dims.len() != lat.len() {
            return bad(format!("{} levels for {} subgroups", self.dims.len(), lat.len()));
        }
        for h in lat.ids() {
            for k in lat.subgroups_of(h) {
                match self.restriction.get(&(h, k)) {
                    Some(m) if m.shape() == (self.dims[k], self.dims[h]) => {}
                    Some(m) => return bad(format!("R^{}_{} has shape {:?}", lat.name(h), lat.name(k), m.shape())),
                    None => return bad(format!("R^{}_{} missing", lat.name(h), lat.name(k))),
                }
                match self.induction.get(&(k, h)) {
                    Some(m) if m.shape() == (self.dims[h], self.dims[k]) => {}
                    Some(m) => return bad(format!("I^{}_{} has shape {:?}", lat.name(h), lat.name(k), m.shape())),
                    None => return bad(format!("I^{}_{} missing", lat.name(h), lat.name(k))),
                }
            }
        }
        let g = lat.group();
        if self.conjugation.len() != g.generators().len() {
            return bad("conjugation data must cover every generator".into());
        }
        for (pos, &s) in g.generators().iter().enumerate() {
            if self.conjugation[pos].len() != lat.len() {
                return bad(format!("conjugation by {} must cover every level", g.label(s)));
            }
            for h in lat.ids() {
                let m = &self.conjugation[pos][h];
                let target = lat.conj(s, h);
                if m.shape() != (self.dims[target], self.dims[h]) {
                    return bad(format!("C_{} at {} has shape {:?}", g.label(s), lat.name(h), m.shape()));
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    pub fn dim(&self, h: SubgroupId) -> usize {
        self.dims[h]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimensions at the class representatives, in class order.
    pub fn class_dims(&self) -> Vec<usize> {
        self.lattice.class_reps().iter().map(|&h| self.dims[h]).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `R^H_K : M(H) → M(K)` for `K ≤ H`.
    pub fn res(&self, h: SubgroupId, k: SubgroupId) -> &QMatrix {
        self.restriction.get(&(h, k)).unwrap_or_else(|| {
            panic!("no restriction {} -> {}", self.lattice.name(h), self.lattice.name(k))
        })
    }

    /// `I^H_K : M(K) → M(H)` for `K ≤ H`.
    pub fn ind(&self, k: SubgroupId, h: SubgroupId) -> &QMatrix {
        self.induction.get(&(k, h)).unwrap_or_else(|| {
            panic!("no induction {} -> {}", self.lattice.name(k), self.lattice.name(h))
        })
    }

    /// `C_s` at level `H` for the generator in position `pos`.
    pub fn conj_gen(&self, pos: usize, h: SubgroupId) -> &QMatrix {
        &self.conjugation[pos][h]
    }

    /// `C_g : M(H) → M(gHg⁻¹)` for any element, expanded along the word of
    /// `g` in the generators.
    pub fn conj(&self, g: usize, h: SubgroupId) -> &QMatrix {
        &self.all_conj.get_or_init(|| self.expand_conjugations())[g][h]
    }

    fn expand_conjugations(&self) -> Vec<Vec<QMatrix>> {
        let lat = &self.lattice;
        let grp = lat.group();
        let mut out: Vec<Vec<QMatrix>> = vec![Vec::new(); grp.order()];
        out[grp.identity()] = lat.ids().map(|h| QMatrix::identity(self.dims[h])).collect();
        for &g in grp.bfs_order() {
            if let Some((p, pos)) = grp.parent(g) {
                let s = grp.generators()[pos];
                // C_{ps} = C_p ∘ C_s
                out[g] = lat
                    .ids()
                    .map(|h| &out[p][lat.conj(s, h)] * &self.conjugation[pos][h])
                    .collect();
            }
        }
        out
    }

    /// Copy with one restriction matrix replaced, for building fixtures.
    pub fn with_restriction(&self, h: SubgroupId, k: SubgroupId, m: QMatrix) -> Self {
        let mut out = self.clone();
        out.restriction.insert((h, k), m);
        out.all_conj = OnceLock::new();
        out
    }

    /// Copy with one induction matrix replaced, for building fixtures.
    pub fn with_induction(&self, k: SubgroupId, h: SubgroupId, m: QMatrix) -> Self {
        let mut out = self.clone();
        out.induction.insert((k, h), m);
        out.all_conj = OnceLock::new();
        out
    }

    /// Copy with one generator conjugation replaced, for building fixtures.
    pub fn with_conjugation(&self, pos: usize, h: SubgroupId, m: QMatrix) -> Self {
        let mut out = self.clone();
        out.conjugation[pos][h] = m;
        out.all_conj = OnceLock::new();
        out
    }

    /// Copy with different level dimensions and no other change, for
    /// building shape fixtures.
    pub fn with_dims_unchecked(&self, dims: Vec<usize>) -> Self {
        let mut out = self.clone();
        out.dims = dims;
        out.all_conj = OnceLock::new();
        out
    }
}
