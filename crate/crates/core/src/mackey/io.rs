//! JSON form of Mackey functors.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grp::{builtin, FiniteGroup, GroupSpec, SubgroupLattice};
use crate::qlin::{QMatrix, Q};

use super::MackeyFunctor;

/// A group given by name (built-in or registered) or inline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Spec(GroupSpec),
}

impl GroupRef {
    /// Refers to built-in groups by name and embeds everything else.
    pub fn for_group(g: &FiniteGroup) -> Self {
        match builtin::by_name(g.name()) {
            Some(b) if b.spec() == g.spec() => GroupRef::Name(g.name().to_string()),
            _ => GroupRef::Spec(g.spec().clone()),
        }
    }

    /// Loads the group; names are looked up with `lookup` first and then
    /// among the built-in groups.
    pub fn resolve(&self, cap: usize, lookup: impl Fn(&str) -> Option<GroupSpec>) -> Result<FiniteGroup> {
        match self {
            GroupRef::Spec(s) => FiniteGroup::load(s, cap),
            GroupRef::Name(n) => {
                if let Some(spec) = lookup(n) {
                    return FiniteGroup::load(&spec, cap);
                }
                let g = builtin::by_name(n).ok_or_else(|| Error::UnknownName(format!("group {n}")))?;
                if g.order() > cap {
                    return Err(Error::CapExceeded { order: g.order(), cap });
                }
                Ok(g)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MackeyJson {
    pub group: GroupRef,
    pub levels: BTreeMap<String, usize>,
    /// Keys `"H>K"`.
    pub restriction: BTreeMap<String, Vec<Vec<Q>>>,
    /// Keys `"K<H"`.
    pub induction: BTreeMap<String, Vec<Vec<Q>>>,
    /// Keys `"g@H"` for each generator `g`.
    pub conjugation: BTreeMap<String, Vec<Vec<Q>>>,
}

pub fn to_json(m: &MackeyFunctor) -> MackeyJson {
    let lat = m.lattice();
    let g = lat.group();
    let name = |h| lat.name(h).to_string();
    let mut restriction = BTreeMap::new();
    let mut induction = BTreeMap::new();
    for h in lat.ids() {
        for k in lat.subgroups_of(h) {
            restriction.insert(format!("{}>{}", name(h), name(k)), m.res(h, k).to_rows());
            induction.insert(format!("{}<{}", name(k), name(h)), m.ind(k, h).to_rows());
        }
    }
    let mut conjugation = BTreeMap::new();
    for (pos, &s) in g.generators().iter().enumerate() {
        for h in lat.ids() {
            conjugation.insert(format!("{}@{}", g.label(s), name(h)), m.conj_gen(pos, h).to_rows());
        }
    }
    MackeyJson {
        group: GroupRef::for_group(g),
        levels: lat.ids().map(|h| (name(h), m.dim(h))).collect(),
        restriction,
        induction,
        conjugation,
    }
}

/// Splits `"A<sep>B"` at the separator occurrence whose sides are both
/// subgroup names; names may themselves contain the separator.
fn split_pair(lat: &SubgroupLattice, key: &str, sep: char) -> Result<(usize, usize)> {
    for (i, c) in key.char_indices() {
        if c != sep {
            continue;
        }
        if let (Some(a), Some(b)) = (lat.find(&key[..i]), lat.find(&key[i + 1..])) {
            return Ok((a, b));
        }
    }
    Err(Error::Parse(format!("key {key:?} is not of the form A{sep}B with subgroup names")))
}

fn matrix(rows: &[Vec<Q>], expected_cols: usize) -> Result<QMatrix> {
    let cols = rows.first().map_or(expected_cols, Vec::len);
    QMatrix::from_rows_shaped(rows.to_vec(), rows.len(), cols)
}

/// Reads a functor over `lattice`, whose group must be the one referenced
/// in the JSON. Shapes are not validated here; the axiom checker reports
/// them.
pub fn from_json(json: &MackeyJson, lattice: &Arc<SubgroupLattice>) -> Result<MackeyFunctor> {
    let lat = lattice;
    let g = lat.group();
    let mut dims = vec![0; lat.len()];
    for (name, &d) in &json.levels {
        dims[lat.find_or_err(name)?] = d;
    }
    let mut restriction = HashMap::new();
    for (key, rows) in &json.restriction {
        let (h, k) = split_pair(lat, key, '>')?;
        if !lat.leq(k, h) {
            return Err(Error::Parse(format!("restriction {key}: not a subgroup pair")));
        }
        restriction.insert((h, k), matrix(rows, dims[h])?);
    }
    let mut induction = HashMap::new();
    for (key, rows) in &json.induction {
        let (k, h) = split_pair(lat, key, '<')?;
        if !lat.leq(k, h) {
            return Err(Error::Parse(format!("induction {key}: not a subgroup pair")));
        }
        induction.insert((k, h), matrix(rows, dims[k])?);
    }
    let mut conjugation: Vec<Vec<Option<QMatrix>>> = vec![vec![None; lat.len()]; g.generators().len()];
    for (key, rows) in &json.conjugation {
        let (label, level) =
            key.split_once('@').ok_or_else(|| Error::Parse(format!("conjugation key {key:?} lacks '@'")))?;
        let x = g.find_label(label).ok_or_else(|| Error::UnknownName(format!("element {label}")))?;
        let h = lat.find_or_err(level)?;
        if let Some(pos) = g.generators().iter().position(|&s| s == x) {
            conjugation[pos][h] = Some(matrix(rows, dims[h])?);
        }
    }
    let conjugation = conjugation
        .into_iter()
        .enumerate()
        .map(|(pos, levels)| {
            levels
                .into_iter()
                .enumerate()
                .map(|(h, m)| {
                    m.ok_or_else(|| {
                        Error::Parse(format!(
                            "missing conjugation {}@{}",
                            g.label(g.generators()[pos]),
                            lat.name(h)
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MackeyFunctor::from_parts_unchecked(lat.clone(), dims, restriction, induction, conjugation))
}
