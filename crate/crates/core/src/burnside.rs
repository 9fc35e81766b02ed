//! The rational Burnside ring `A_Q(H)` of any subgroup `H` of the lattice's
//! group: basis arithmetic, marks, idempotents, restriction and induction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::{SubgroupId, SubgroupLattice};
use crate::qlin::{QMatrix, Q};

/// Per-ambient data: classes of subgroups up to conjugacy in the ambient,
/// table of marks and multiplication constants.
#[derive(Debug)]
pub struct RingTables {
    /// Conjugacy classes in the ambient, each sorted; ordered by representative.
    pub classes: Vec<Vec<SubgroupId>>,
    /// Class index of every subgroup of the ambient, `None` for the rest.
    pub class_of: Vec<Option<usize>>,
    /// `marks[i][j] = |(A/K_i)^{K_j}|`
    pub marks: QMatrix,
    pub marks_inv: QMatrix,
    /// `products[i][j]` = coefficients of `[A/K_i]·[A/K_j]`.
    pub products: Vec<Vec<Vec<Q>>>,
}

impl RingTables {
    fn build(lat: &SubgroupLattice, a: SubgroupId) -> Self {
        let subs = lat.subgroups_of(a);
        let a_elems = lat.elements(a);
        let mut class_of = vec![None; lat.len()];
        let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
        for &k in &subs {
            if class_of[k].is_some() {
                continue;
            }
            let mut members: Vec<SubgroupId> = a_elems.iter().map(|&g| lat.conj(g, k)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = Some(classes.len());
            }
            classes.push(members);
        }
        let n = classes.len();
        let reps: Vec<SubgroupId> = classes.iter().map(|c| c[0]).collect();
        let marks = QMatrix::from_fn(n, n, |i, j| Q::from(lat.fixed_cosets_in(a, reps[i], reps[j]).len()));
        let marks_inv = marks.inverse().expect("table of marks is invertible");
        let products = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut c = vec![Q::zero(); n];
                        let (k, l) = (reps[i], reps[j]);
                        for x in lat.double_cosets(k, a, l) {
                            let m = lat.intersect(k, lat.conj(x, l));
                            c[class_of[m].expect("subgroup of ambient")] += Q::one();
                        }
                        c
                    })
                    .collect()
            })
            .collect();
        RingTables { classes, class_of, marks, marks_inv, products }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, i: usize) -> SubgroupId {
        self.classes[i][0]
    }
}

/// Cached ring tables of `A_Q(A)`.
pub fn tables(lat: &SubgroupLattice, a: SubgroupId) -> Arc<RingTables> {
    lat.ring_tables[a].get_or_init(|| Arc::new(RingTables::build(lat, a))).clone()
}

/// Table of marks of `A_Q(A)`, rows and columns in class order.
pub fn table_of_marks(lat: &SubgroupLattice, a: SubgroupId) -> QMatrix {
    tables(lat, a).marks.clone()
}

/// An element of `A_Q(A)` for a subgroup `A` (the ambient) of the lattice's
/// group, with one coefficient per `A`-conjugacy class of subgroups of `A`.
#[derive(Clone)]
pub struct BurnsideElement {
    lattice: Arc<SubgroupLattice>,
    ambient: SubgroupId,
    tables: Arc<RingTables>,
    coeffs: Vec<Q>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) && self.ambient == other.ambient && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl BurnsideElement {
    pub fn from_coeffs(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, coeffs: Vec<Q>) -> Result<Self> {
        let tables = tables(lattice, ambient);
        if coeffs.len() != tables.len() {
            return Err(Error::Shape(format!("{} coefficients for {} classes", coeffs.len(), tables.len())));
        }
        Ok(BurnsideElement { lattice: lattice.clone(), ambient, tables, coeffs })
    }

    pub fn zero(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId) -> Self {
        let n = tables(lattice, ambient).len();
        Self::from_coeffs(lattice, ambient, vec![Q::zero(); n]).expect("shape")
    }

    /// The unit `[A/A]`.
    pub fn one(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId) -> Self {
        Self::basis(lattice, ambient, ambient).expect("A ≤ A")
    }

    /// `[A/K]` for `K ≤ A`.
    pub fn basis(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, k: SubgroupId) -> Result<Self> {
        let mut e = Self::zero(lattice, ambient);
        let i = e.tables.class_of[k].ok_or_else(|| {
            Error::NotSubgroup(format!("{} in {}", lattice.name(k), lattice.name(ambient)))
        })?;
        e.coeffs[i] = Q::one();
        Ok(e)
    }

    /// The element with the given marks.
    pub fn from_marks(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, marks: &[Q]) -> Result<Self> {
        let t = tables(lattice, ambient);
        if marks.len() != t.len() {
            return Err(Error::Shape("marks vector length".into()));
        }
        let row = QMatrix::from_rows_shaped(vec![marks.to_vec()], 1, t.len())?;
        let coeffs = (&row * &t.marks_inv).row(0).to_vec();
        Self::from_coeffs(lattice, ambient, coeffs)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn ambient(&self) -> SubgroupId {
        self.ambient
    }

    pub fn tables(&self) -> &Arc<RingTables> {
        &self.tables
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of the class of `k`.
    pub fn coeff_of(&self, k: SubgroupId) -> Option<&Q> {
        self.tables.class_of[k].map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.lattice, &other.lattice) || self.ambient != other.ambient {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<Q>) -> Self {
        BurnsideElement { lattice: self.lattice.clone(), ambient: self.ambient, tables: self.tables.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, q: &Q) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a * q).collect())
    }

    /// Product via the double coset formula for `[A/K]·[A/L]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.tables.products[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        Ok(self.with_coeffs(out))
    }

    /// Marks `|X^{K_j}|` at each class.
    pub fn marks(&self) -> Vec<Q> {
        let row = QMatrix::from_rows_shaped(vec![self.coeffs.clone()], 1, self.coeffs.len()).expect("shape");
        (&row * &self.tables.marks).row(0).to_vec()
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Restriction to `B ≤ A`: `[A/K] ↦ Σ_{x∈[B\A/K]} [B/(B ∩ xKx⁻¹)]`.
    pub fn restrict(&self, b: SubgroupId) -> Result<Self> {
        let lat = &self.lattice;
        if !lat.leq(b, self.ambient) {
            return Err(Error::NotSubgroup(format!("{} in {}", lat.name(b), lat.name(self.ambient))));
        }
        let mut out = Self::zero(lat, b);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.tables.rep(i);
            for x in lat.double_cosets(b, self.ambient, k) {
                let m = lat.intersect(b, lat.conj(x, k));
                let j = out.tables.class_of[m].expect("subgroup of B");
                out.coeffs[j] += c;
            }
        }
        Ok(out)
    }

    /// Induction to `C ≥ A`: `[A/K] ↦ [C/K]`.
    pub fn induce(&self, c: SubgroupId) -> Result<Self> {
        let lat = &self.lattice;
        if !lat.leq(self.ambient, c) {
            return Err(Error::NotSubgroup(format!("{} in {}", lat.name(self.ambient), lat.name(c))));
        }
        let mut out = Self::zero(lat, c);
        for (i, q) in self.coeffs.iter().enumerate() {
            let j = out.tables.class_of[self.tables.rep(i)].expect("subgroup of C");
            out.coeffs[j] += q;
        }
        Ok(out)
    }

    /// Transport along `g`: `[A/K] ↦ [gAg⁻¹/gKg⁻¹]`.
    pub fn conjugate(&self, g: usize) -> Self {
        let lat = &self.lattice;
        let target = lat.conj(g, self.ambient);
        let mut out = Self::zero(lat, target);
        for (i, q) in self.coeffs.iter().enumerate() {
            let j = out.tables.class_of[lat.conj(g, self.tables.rep(i))].expect("conjugate subgroup");
            out.coeffs[j] += q;
        }
        out
    }

    /// Name of the basis element of class `i`, e.g. `[C6/C3]`.
    pub fn class_name(&self, i: usize) -> String {
        format!("[{}/{}]", self.lattice.name(self.ambient), self.lattice.name(self.tables.rep(i)))
    }

    /// Coefficients keyed by class name.
    pub fn to_json(&self) -> BTreeMap<String, Q> {
        (0..self.coeffs.len()).map(|i| (self.class_name(i), self.coeffs[i].clone())).collect()
    }
}

impl fmt::Display for BurnsideElement {
    /// Nonzero terms from the largest class down, e.g.
    /// `1/2*[C6/C3] - 1/6*[C6/C1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if mag.is_one() { self.class_name(i) } else { format!("{mag}*{}", self.class_name(i)) };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Gluck's formula: `e_H^A = Σ_{L≤H} (|L|/|N_A H|) μ(L,H) [A/L]`.
pub fn idempotent_gluck(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, h: SubgroupId) -> Result<BurnsideElement> {
    let mut e = BurnsideElement::zero(lattice, ambient);
    if !lattice.leq(h, ambient) {
        return Err(Error::NotSubgroup(format!("{} in {}", lattice.name(h), lattice.name(ambient))));
    }
    let n = lattice.order_of(lattice.normalizer_in(ambient, h)) as i64;
    for l in lattice.subgroups_of(h) {
        let mu = lattice.mobius(l, h);
        if mu == 0 {
            continue;
        }
        let i = e.tables.class_of[l].expect("subgroup of ambient");
        e.coeffs[i] += Q::new(lattice.order_of(l) as i64 * mu, n);
    }
    Ok(e)
}

/// All primitive idempotents of `A_Q(A)` in class order, by inverting the
/// table of marks.
pub fn idempotents_via_marks(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId) -> Vec<BurnsideElement> {
    let t = tables(lattice, ambient);
    (0..t.len())
        .map(|j| {
            BurnsideElement::from_coeffs(lattice, ambient, t.marks_inv.row(j).to_vec()).expect("shape")
        })
        .collect()
}

/// All primitive idempotents of `A_Q(A)` in class order, by Gluck's formula.
pub fn idempotents(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId) -> Vec<BurnsideElement> {
    let t = tables(lattice, ambient);
    (0..t.len()).map(|i| idempotent_gluck(lattice, ambient, t.rep(i)).expect("class rep")).collect()
}

/// Coefficients `c_L` with `[A/K] = Σ_{(L)} c_L e_L^A`, namely
/// `c_L = |N_A L|/|K|` summed over the `A`-conjugates of `L` inside `K`.
pub fn express_in_idempotents(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, k: SubgroupId) -> Result<Vec<Q>> {
    let t = tables(lattice, ambient);
    if t.class_of[k].is_none() {
        return Err(Error::NotSubgroup(format!("{} in {}", lattice.name(k), lattice.name(ambient))));
    }
    let mut c = vec![Q::zero(); t.len()];
    for l in lattice.subgroups_of(k) {
        let i = t.class_of[l].expect("subgroup of ambient");
        c[i] += Q::new(lattice.order_of(lattice.normalizer_in(ambient, l)) as i64, lattice.order_of(k) as i64);
    }
    Ok(c)
}

/// `Σ_i c_i e_i` for coefficients in class order.
pub fn from_idempotent_coeffs(lattice: &Arc<SubgroupLattice>, ambient: SubgroupId, c: &[Q]) -> BurnsideElement {
    let mut out = BurnsideElement::zero(lattice, ambient);
    for (e, q) in idempotents(lattice, ambient).iter().zip(c) {
        out = out.add(&e.scale(q)).expect("same ring");
    }
    out
}
