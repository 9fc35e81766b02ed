//! Extension of a Mackey functor to finite G-sets through orbit
//! decompositions.

use crate::error::{Error, Result};
use crate::grp::{GSet, Orbit};
use crate::qlin::QMatrix;

use super::{MackeyFunctor, MackeyMorphism};

/// `M(X) = ⊕_O M(G/K_O)` over the orbits of `X`, where the orbit `O`
/// through its smallest point `x` is identified with `G/K_O` by `gK_O ↦ g·x`.
#[derive(Clone, Debug)]
pub struct SetValue {
    pub orbits: Vec<Orbit>,
    /// Start of each orbit's block in `M(X)`.
    pub offsets: Vec<usize>,
    pub dim: usize,
}

impl SetValue {
    fn orbit_of(&self, x: usize) -> (usize, usize) {
        for (i, o) in self.orbits.iter().enumerate() {
            if let Ok(p) = o.points.binary_search(&x) {
                return (i, p);
            }
        }
        panic!("point {x} lies in no orbit")
    }
}

pub fn evaluate_at_set(m: &MackeyFunctor, x: &GSet) -> Result<SetValue> {
    if !std::sync::Arc::ptr_eq(m.lattice(), x.lattice()) {
        return Err(Error::GroupMismatch);
    }
    let orbits = x.orbits();
    let mut offsets = Vec::with_capacity(orbits.len());
    let mut dim = 0;
    for o in &orbits {
        offsets.push(dim);
        dim += m.dim(o.stabilizer);
    }
    Ok(SetValue { orbits, offsets, dim })
}

fn check_map(x: &GSet, y: &GSet, f: &[usize]) -> Result<()> {
    if f.len() != x.len() || f.iter().any(|&p| p >= y.len()) {
        return Err(Error::Shape("map of G-sets has the wrong size".into()));
    }
    let g = x.lattice().group();
    for a in 0..g.order() {
        for p in 0..x.len() {
            if f[x.act(a, p)] != y.act(a, f[p]) {
                return Err(Error::NotEquivariant(format!("map of G-sets at point {p}")));
            }
        }
    }
    Ok(())
}

/// Blocks of `f` between orbits: for each orbit `O` of `X`, the orbit `P` of
/// `Y` hit and the element `t` with `f(x_O) = t·y_P`, so that `f` restricted
/// to `O` is `G/K_O → G/K_P`, `eK_O ↦ tK_P`.
fn blocks(vx: &SetValue, vy: &SetValue, f: &[usize]) -> Vec<(usize, usize, usize)> {
    vx.orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let (j, p) = vy.orbit_of(f[o.rep]);
            (i, j, vy.orbits[j].transporters[p])
        })
        .collect()
}

/// `f^* : M(Y) → M(X)` for an equivariant `f: X → Y`; on an orbit block
/// `eK ↦ tL` it is `R^{tLt⁻¹}_K ∘ C_t`.
pub fn pullback(m: &MackeyFunctor, x: &GSet, y: &GSet, f: &[usize]) -> Result<QMatrix> {
    check_map(x, y, f)?;
    let (vx, vy) = (evaluate_at_set(m, x)?, evaluate_at_set(m, y)?);
    let lat = m.lattice();
    let mut out = QMatrix::zeros(vx.dim, vy.dim);
    for (i, j, t) in blocks(&vx, &vy, f) {
        let k = vx.orbits[i].stabilizer;
        let l = vy.orbits[j].stabilizer;
        let tl = lat.conj(t, l);
        out.add_block(vx.offsets[i], vy.offsets[j], &(m.res(tl, k) * m.conj(t, l)));
    }
    Ok(out)
}

/// `f_* : M(X) → M(Y)` for an equivariant `f: X → Y`; on an orbit block
/// `eK ↦ tL` it is `C_{t⁻¹} ∘ I^{tLt⁻¹}_K`.
pub fn pushforward(m: &MackeyFunctor, x: &GSet, y: &GSet, f: &[usize]) -> Result<QMatrix> {
    check_map(x, y, f)?;
    let (vx, vy) = (evaluate_at_set(m, x)?, evaluate_at_set(m, y)?);
    let lat = m.lattice();
    let g = lat.group();
    let mut out = QMatrix::zeros(vy.dim, vx.dim);
    for (i, j, t) in blocks(&vx, &vy, f) {
        let k = vx.orbits[i].stabilizer;
        let l = vy.orbits[j].stabilizer;
        let tl = lat.conj(t, l);
        out.add_block(vy.offsets[j], vx.offsets[i], &(m.conj(g.inv(t), tl) * m.ind(k, tl)));
    }
    Ok(out)
}

/// A morphism evaluated on a G-set: block diagonal over orbits.
pub fn morphism_at_set(f: &MackeyMorphism, x: &GSet) -> Result<QMatrix> {
    let vs = evaluate_at_set(&f.source, x)?;
    let vt = evaluate_at_set(&f.target, x)?;
    let mut out = QMatrix::zeros(vt.dim, vs.dim);
    for (i, o) in vs.orbits.iter().enumerate() {
        out.set_block(vt.offsets[i], vs.offsets[i], &f.maps[o.stabilizer]);
    }
    Ok(out)
}
