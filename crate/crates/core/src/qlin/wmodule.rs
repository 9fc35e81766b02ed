//! Finite-dimensional rational representations of a finite group.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::grp::FiniteGroup;
use crate::qlin::{QMatrix, Q};

/// A representation stored by the matrices of the group's generators.
/// Matrices of other elements are expanded on first use.
#[derive(Clone, Debug)]
pub struct WModule {
    group: Arc<FiniteGroup>,
    dim: usize,
    action: Vec<QMatrix>,
    elements: OnceLock<Vec<QMatrix>>,
}

impl PartialEq for WModule {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.dim == other.dim && self.action == other.action
    }
}

impl WModule {
    /// Builds a module from one matrix per generator of `group` and checks
    /// that the expansion to all elements is a homomorphism.
    pub fn new(group: Arc<FiniteGroup>, dim: usize, action: Vec<QMatrix>) -> Result<Self> {
        if action.len() != group.generators().len() {
            return Err(Error::BadRepresentation(format!(
                "{} generator matrices for {} generators",
                action.len(),
                group.generators().len()
            )));
        }
        if action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::BadRepresentation(format!("generator matrix is not {dim}x{dim}")));
        }
        let m = WModule { group, dim, action, elements: OnceLock::new() };
        m.validate()?;
        Ok(m)
    }

    /// Builds a module from a matrix for every element, which must be a
    /// homomorphism.
    pub fn from_element_matrices(group: Arc<FiniteGroup>, dim: usize, mats: Vec<QMatrix>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::BadRepresentation("one matrix per element required".into()));
        }
        let action = group.generators().iter().map(|&s| mats[s].clone()).collect();
        let m = WModule::new(group, dim, action)?;
        if m.element_matrices() != mats.as_slice() {
            return Err(Error::BadRepresentation("element matrices disagree with generators".into()));
        }
        Ok(m)
    }

    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> Self {
        let action = vec![QMatrix::identity(dim); group.generators().len()];
        WModule { group, dim, action, elements: OnceLock::new() }
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        Self::trivial(group, 0)
    }

    /// Permutation module on a set with `points` elements, where `act(g, x)`
    /// is a left action.
    pub fn permutation(group: Arc<FiniteGroup>, points: usize, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let action = group
            .generators()
            .iter()
            .map(|&s| {
                let mut m = QMatrix::zeros(points, points);
                for x in 0..points {
                    m[(act(s, x), x)] = Q::one();
                }
                m
            })
            .collect();
        WModule::new(group, points, action)
    }

    /// The regular representation Q[W], basis indexed by elements.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let g2 = group.clone();
        Self::permutation(group, n, move |g, x| g2.mul(g, x)).expect("regular action")
    }

    /// Permutation module Q[W/S] on left cosets of a subgroup given by its
    /// elements, cosets ordered by smallest member.
    pub fn coset_module(group: Arc<FiniteGroup>, subgroup: &[usize]) -> Result<Self> {
        if !group.is_subgroup(&{
            let mut s = subgroup.to_vec();
            s.sort_unstable();
            s
        }) {
            return Err(Error::NotSubgroup(format!("{subgroup:?}")));
        }
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut count = 0;
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for &s in subgroup {
                    coset_of[group.mul(g, s)] = count;
                }
                count += 1;
            }
        }
        let reps: Vec<usize> = (0..count).map(|c| coset_of.iter().position(|&x| x == c).unwrap()).collect();
        let g2 = group.clone();
        Self::permutation(group, count, move |g, c| coset_of[g2.mul(g, reps[c])])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[QMatrix] {
        &self.action
    }

    /// Matrix of every group element, indexed by element.
    pub fn element_matrices(&self) -> &[QMatrix] {
        self.elements.get_or_init(|| {
            let g = &self.group;
            let mut mats = vec![QMatrix::zeros(0, 0); g.order()];
            mats[g.identity()] = QMatrix::identity(self.dim);
            for &x in g.bfs_order() {
                if let Some((p, s)) = g.parent(x) {
                    mats[x] = &mats[p] * &self.action[s];
                }
            }
            mats
        })
    }

    pub fn matrix(&self, g: usize) -> &QMatrix {
        &self.element_matrices()[g]
    }

    fn validate(&self) -> Result<()> {
        for (i, m) in self.action.iter().enumerate() {
            if m.rank() != self.dim {
                return Err(Error::BadRepresentation(format!("generator {i} acts singularly")));
            }
        }
        let mats = self.element_matrices();
        let g = &self.group;
        for a in 0..g.order() {
            for &s in g.generators() {
                if mats[g.mul(a, s)] != &mats[a] * &mats[s] {
                    return Err(Error::BadRepresentation(format!(
                        "relation fails at {} * {}",
                        g.label(a),
                        g.label(s)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Basis (columns) of the vectors fixed by every element of `subset`.
    pub fn fixed_subspace(&self, subset: &[usize]) -> QMatrix {
        let id = QMatrix::identity(self.dim);
        let parts: Vec<QMatrix> = subset.iter().map(|&s| self.matrix(s) - &id).collect();
        QMatrix::vstack_all(&parts, self.dim).kernel()
    }

    /// `(1/|S|) Σ_{s∈S} ρ(s)` for a subgroup `S`.
    pub fn averaging_projector(&self, subgroup: &[usize]) -> QMatrix {
        let mut sum = QMatrix::zeros(self.dim, self.dim);
        for &s in subgroup {
            sum = &sum + self.matrix(s);
        }
        sum.scale(&Q::new(1, subgroup.len() as i64))
    }

    /// Multiplicity of the trivial representation via the character.
    pub fn trivial_multiplicity(&self) -> Q {
        let total: Q = self.element_matrices().iter().map(QMatrix::trace).sum();
        total / Q::from(self.group.order())
    }

    pub fn tensor(&self, other: &WModule) -> Result<WModule> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.kron(b)).collect();
        Ok(WModule {
            group: self.group.clone(),
            dim: self.dim * other.dim,
            action,
            elements: OnceLock::new(),
        })
    }

    pub fn direct_sum(&self, other: &WModule) -> Result<WModule> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(WModule {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            action,
            elements: OnceLock::new(),
        })
    }

    /// The same module in new coordinates: `ρ'(g) = P⁻¹ ρ(g) P`, where the
    /// columns of `p` are the new basis.
    pub fn change_basis(&self, p: &QMatrix) -> Result<WModule> {
        let inv = p.inverse()?;
        let action = self.action.iter().map(|a| &(&inv * a) * p).collect();
        Ok(WModule { group: self.group.clone(), dim: self.dim, action, elements: OnceLock::new() })
    }

    /// Submodule spanned by the columns of `basis`, which must be invariant
    /// and linearly independent.
    pub fn submodule(&self, basis: &QMatrix) -> Result<WModule> {
        let action = self
            .action
            .iter()
            .map(|a| {
                basis
                    .coordinates(&(a * basis))
                    .ok_or_else(|| Error::BadRepresentation("subspace is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WModule { group: self.group.clone(), dim: basis.cols(), action, elements: OnceLock::new() })
    }

    /// Whether `f: self → other` (a `other.dim x self.dim` matrix) commutes
    /// with the actions.
    pub fn is_equivariant(&self, other: &WModule, f: &QMatrix) -> bool {
        f.shape() == (other.dim, self.dim)
            && self.action.iter().zip(&other.action).all(|(a, b)| (f * a) == (b * f))
    }

    /// Whether the two modules are isomorphic, decided by comparing the
    /// fixed-point dimensions of every cyclic subgroup (rational characters
    /// are determined by these).
    pub fn is_isomorphic(&self, other: &WModule) -> bool {
        if self.group != other.group || self.dim != other.dim {
            return false;
        }
        let g = &self.group;
        (0..g.order()).all(|x| {
            let c = g.closure(&[x]);
            self.fixed_subspace(&c).cols() == other.fixed_subspace(&c).cols()
        })
    }
}
