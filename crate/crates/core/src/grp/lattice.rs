//! The lattice of subgroups of a finite group with its conjugation action,
//! normalizers, Weyl groups and Möbius function.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::burnside::RingTables;
use crate::error::{Error, Result};

use super::group::FiniteGroup;

/// Index of a subgroup in its lattice.
pub type SubgroupId = usize;

/// The Weyl group `N_G H / H` with its projection from the normalizer.
#[derive(Clone, Debug)]
pub struct Weyl {
    pub group: Arc<FiniteGroup>,
    /// Image in the Weyl group of each element of `G`, `None` outside `N_G H`.
    pub projection: Vec<Option<usize>>,
    /// Smallest element of `G` in each coset `nH`.
    pub lifts: Vec<usize>,
}

impl Weyl {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn project(&self, g: usize) -> Option<usize> {
        self.projection[g]
    }

    pub fn lift(&self, w: usize) -> usize {
        self.lifts[w]
    }
}

pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Vec<usize>>,
    member: Vec<Vec<bool>>,
    index: HashMap<Vec<usize>, SubgroupId>,
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    // conj[g][h] = id of g H g^-1
    conj: Vec<Vec<SubgroupId>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
    normalizer: Vec<SubgroupId>,
    weyl: Vec<OnceLock<Weyl>>,
    subgroup_groups: Vec<OnceLock<(Arc<FiniteGroup>, Vec<usize>)>>,
    sublattices: Vec<OnceLock<Arc<SubgroupLattice>>>,
    mobius: OnceLock<Vec<Vec<i64>>>,
    pub(crate) ring_tables: Vec<OnceLock<Arc<RingTables>>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.name())
            .field("subgroups", &self.names)
            .finish()
    }
}

impl SubgroupLattice {
    pub fn new(group: FiniteGroup) -> Arc<Self> {
        Self::from_arc(Arc::new(group))
    }

    /// Enumerates all subgroups by seeding with the cyclic subgroups and
    /// closing under joins with one cyclic subgroup at a time.
    pub fn from_arc(group: Arc<FiniteGroup>) -> Arc<Self> {
        let n = group.order();
        let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
        for g in 0..n {
            let c = group.closure(&[g]);
            if !cyclic.iter().any(|(_, e)| *e == c) {
                cyclic.push((g, c));
            }
        }
        let mut found: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for (g, c) in &cyclic {
            let gens = if *g == group.identity() { vec![] } else { vec![*g] };
            if found.insert(c.clone(), gens).is_none() {
                queue.push(c.clone());
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let a = queue[i].clone();
            let gens_a = found[&a].clone();
            let mut member = vec![false; n];
            for &x in &a {
                member[x] = true;
            }
            for (g, _) in &cyclic {
                if member[*g] {
                    continue;
                }
                let mut gens = gens_a.clone();
                gens.push(*g);
                let j = group.closure(&gens);
                if !found.contains_key(&j) {
                    found.insert(j.clone(), gens);
                    queue.push(j);
                }
            }
            i += 1;
        }
        let mut subgroups: Vec<Vec<usize>> = found.into_keys().collect();
        subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Self::from_subgroups(group, subgroups)
    }

    fn from_subgroups(group: Arc<FiniteGroup>, subgroups: Vec<Vec<usize>>) -> Arc<Self> {
        let n = group.order();
        let m = subgroups.len();
        let index: HashMap<Vec<usize>, SubgroupId> =
            subgroups.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let member: Vec<Vec<bool>> = subgroups
            .iter()
            .map(|s| {
                let mut b = vec![false; n];
                for &x in s {
                    b[x] = true;
                }
                b
            })
            .collect();
        let leq: Vec<Vec<bool>> = (0..m)
            .map(|k| (0..m).map(|h| subgroups[k].iter().all(|&x| member[h][x])).collect())
            .collect();
        let conj: Vec<Vec<SubgroupId>> = (0..n)
            .map(|g| {
                subgroups
                    .iter()
                    .map(|s| {
                        let mut c: Vec<usize> = s.iter().map(|&x| group.conjugate(g, x)).collect();
                        c.sort_unstable();
                        index[&c]
                    })
                    .collect()
            })
            .collect();
        let mut class_of = vec![usize::MAX; m];
        let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
        for h in 0..m {
            if class_of[h] != usize::MAX {
                continue;
            }
            let mut members: Vec<SubgroupId> = (0..n).map(|g| conj[g][h]).collect();
            members.sort_unstable();
            members.dedup();
            for &k in &members {
                class_of[k] = classes.len();
            }
            classes.push(members);
        }
        let normalizer: Vec<SubgroupId> = (0..m)
            .map(|h| {
                let mut nh: Vec<usize> = (0..n).filter(|&g| conj[g][h] == h).collect();
                nh.sort_unstable();
                index[&nh]
            })
            .collect();
        let names = name_subgroups(&group, &subgroups);
        Arc::new(SubgroupLattice {
            group,
            member,
            index,
            names,
            leq,
            conj,
            class_of,
            classes,
            normalizer,
            weyl: (0..m).map(|_| OnceLock::new()).collect(),
            subgroup_groups: (0..m).map(|_| OnceLock::new()).collect(),
            sublattices: (0..m).map(|_| OnceLock::new()).collect(),
            mobius: OnceLock::new(),
            ring_tables: (0..m).map(|_| OnceLock::new()).collect(),
            subgroups,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Number of subgroups.
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> std::ops::Range<SubgroupId> {
        0..self.subgroups.len()
    }

    /// Sorted elements of a subgroup.
    pub fn elements(&self, h: SubgroupId) -> &[usize] {
        &self.subgroups[h]
    }

    pub fn order_of(&self, h: SubgroupId) -> usize {
        self.subgroups[h].len()
    }

    pub fn contains(&self, h: SubgroupId, g: usize) -> bool {
        self.member[h][g]
    }

    pub fn name(&self, h: SubgroupId) -> &str {
        &self.names[h]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find(&self, name: &str) -> Option<SubgroupId> {
        let name = name.trim();
        self.names.iter().position(|n| n == name)
    }

    pub fn find_or_err(&self, name: &str) -> Result<SubgroupId> {
        self.find(name).ok_or_else(|| Error::UnknownName(format!("subgroup {name}")))
    }

    pub fn id_of(&self, elements: &[usize]) -> Option<SubgroupId> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        self.index.get(&e).copied()
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> SubgroupId {
        self.index[&self.group.closure(gens)]
    }

    pub fn trivial(&self) -> SubgroupId {
        0
    }

    pub fn whole(&self) -> SubgroupId {
        self.subgroups.len() - 1
    }

    /// `K ≤ H`
    pub fn leq(&self, k: SubgroupId, h: SubgroupId) -> bool {
        self.leq[k][h]
    }

    /// Subgroups of `h`, in lattice order.
    pub fn subgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        (0..self.len()).filter(|&k| self.leq[k][h]).collect()
    }

    /// Subgroups containing `k`, in lattice order.
    pub fn supergroups_of(&self, k: SubgroupId) -> Vec<SubgroupId> {
        (0..self.len()).filter(|&h| self.leq[k][h]).collect()
    }

    /// Maximal proper subgroups of `h`.
    pub fn maximal_subgroups(&self, h: SubgroupId) -> Vec<SubgroupId> {
        let below: Vec<SubgroupId> = self.subgroups_of(h).into_iter().filter(|&k| k != h).collect();
        below
            .iter()
            .copied()
            .filter(|&k| !below.iter().any(|&l| l != k && self.leq[k][l]))
            .collect()
    }

    /// `g H g⁻¹`
    pub fn conj(&self, g: usize, h: SubgroupId) -> SubgroupId {
        self.conj[g][h]
    }

    pub fn intersect(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let e: Vec<usize> = self.subgroups[a].iter().copied().filter(|&x| self.member[b][x]).collect();
        self.index[&e]
    }

    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut gens = self.subgroups[a].clone();
        gens.extend_from_slice(&self.subgroups[b]);
        self.generated(&gens)
    }

    /// `|H : K|` for `K ≤ H`.
    pub fn index(&self, k: SubgroupId, h: SubgroupId) -> Result<usize> {
        if !self.leq[k][h] {
            return Err(Error::NotSubgroup(format!("{} in {}", self.names[k], self.names[h])));
        }
        Ok(self.order_of(h) / self.order_of(k))
    }

    /// Some `g` with `g K g⁻¹ ≤ H`.
    pub fn subconjugating_element(&self, k: SubgroupId, h: SubgroupId) -> Option<usize> {
        (0..self.group.order()).find(|&g| self.leq[self.conj[g][k]][h])
    }

    pub fn is_subconjugate(&self, k: SubgroupId, h: SubgroupId) -> bool {
        self.subconjugating_element(k, h).is_some()
    }

    pub fn is_conjugate(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_of(&self, h: SubgroupId) -> usize {
        self.class_of[h]
    }

    /// `G`-conjugacy classes, each sorted, in order of their representatives.
    pub fn classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    /// Representative of a class: its lexicographically smallest member.
    pub fn class_rep(&self, c: usize) -> SubgroupId {
        self.classes[c][0]
    }

    pub fn class_reps(&self) -> Vec<SubgroupId> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        self.normalizer[h]
    }

    /// `N_A H = N_G H ∩ A`.
    pub fn normalizer_in(&self, a: SubgroupId, h: SubgroupId) -> SubgroupId {
        self.intersect(self.normalizer[h], a)
    }

    pub fn is_normal_in(&self, k: SubgroupId, h: SubgroupId) -> bool {
        self.leq[k][h] && self.leq[h][self.normalizer[k]]
    }

    /// A subgroup realized as a group of its own, with the embedding of its
    /// elements (its element `i` is `embedding[i]` in `G`).
    pub fn subgroup_group(&self, h: SubgroupId) -> &(Arc<FiniteGroup>, Vec<usize>) {
        self.subgroup_groups[h].get_or_init(|| {
            let (g, emb) = self
                .group
                .subgroup_group(&self.names[h], &self.subgroups[h])
                .expect("lattice member is a subgroup");
            (Arc::new(g), emb)
        })
    }

    /// Subgroup lattice of `H` regarded as a group via [`Self::subgroup_group`].
    pub fn sublattice(&self, h: SubgroupId) -> &Arc<SubgroupLattice> {
        self.sublattices[h].get_or_init(|| SubgroupLattice::from_arc(self.subgroup_group(h).0.clone()))
    }

    /// Id in [`Self::sublattice`] of a subgroup `K ≤ H`.
    pub fn to_sublattice(&self, h: SubgroupId, k: SubgroupId) -> SubgroupId {
        let (_, emb) = self.subgroup_group(h);
        let local: Vec<usize> = self.subgroups[k]
            .iter()
            .map(|g| emb.binary_search(g).expect("K ≤ H"))
            .collect();
        self.sublattice(h).id_of(&local).expect("subgroup of H")
    }

    /// Id in `self` of a subgroup of [`Self::sublattice`]`(h)`.
    pub fn from_sublattice(&self, h: SubgroupId, local: SubgroupId) -> SubgroupId {
        let (_, emb) = self.subgroup_group(h);
        let global: Vec<usize> = self.sublattice(h).elements(local).iter().map(|&i| emb[i]).collect();
        self.id_of(&global).expect("subgroup of G")
    }

    /// `W_G H = N_G H / H`.
    pub fn weyl(&self, h: SubgroupId) -> &Weyl {
        self.weyl[h].get_or_init(|| self.weyl_in(self.whole(), h))
    }

    /// `W_A H = N_A H / H` for `H ≤ A`, computed afresh.
    pub fn weyl_in(&self, a: SubgroupId, h: SubgroupId) -> Weyl {
        assert!(self.leq[h][a], "weyl_in requires H ≤ A");
        let n = self.normalizer_in(a, h);
        let (ngroup, emb) = self.subgroup_group(n);
        let pos: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let h_local: Vec<usize> = self.subgroups[h].iter().map(|g| pos[g]).collect();
        let name = if a == self.whole() {
            format!("W({})", self.names[h])
        } else {
            format!("W_{}({})", self.names[a], self.names[h])
        };
        let q = ngroup.quotient(&name, &h_local).expect("H is normal in its normalizer");
        let mut projection = vec![None; self.group.order()];
        for (i, &g) in emb.iter().enumerate() {
            projection[g] = Some(q.projection[i]);
        }
        let lifts = q.lifts.iter().map(|&i| emb[i]).collect();
        Weyl { group: Arc::new(q.group), projection, lifts }
    }

    /// Möbius function `μ(K, H)` of the subgroup poset; zero unless `K ≤ H`.
    pub fn mobius(&self, k: SubgroupId, h: SubgroupId) -> i64 {
        self.mobius.get_or_init(|| self.mobius_table())[k][h]
    }

    #[allow(clippy::needless_range_loop)]
    fn mobius_table(&self) -> Vec<Vec<i64>> {
        let m = self.len();
        let mut mu = vec![vec![0i64; m]; m];
        for h in 0..m {
            mu[h][h] = 1;
            for k in (0..h).rev() {
                if !self.leq[k][h] {
                    continue;
                }
                let s: i64 = (k + 1..=h).filter(|&l| self.leq[k][l] && self.leq[l][h]).map(|l| mu[l][h]).sum();
                mu[k][h] = -s;
            }
        }
        mu
    }

    /// Möbius function by alternating chain counts: `Σ (-1)^c` over strictly
    /// increasing chains `K = L_0 < ... < L_c = H`.
    pub fn mobius_by_chains(&self, k: SubgroupId, h: SubgroupId) -> i64 {
        if !self.leq[k][h] {
            return 0;
        }
        // signed[l] = Σ over chains from k to l of (-1)^length
        let mut signed = vec![0i64; self.len()];
        signed[k] = 1;
        for l in k + 1..=h {
            if self.leq[k][l] && self.leq[l][h] {
                signed[l] = -(k..l).filter(|&p| self.leq[p][l] && self.leq[k][p]).map(|p| signed[p]).sum::<i64>();
            }
        }
        signed[h]
    }

    /// Representatives of the double cosets `K \ A / L` for `K, L ≤ A`, each
    /// the smallest element of its double coset, ascending.
    pub fn double_cosets(&self, k: SubgroupId, a: SubgroupId, l: SubgroupId) -> Vec<usize> {
        let g = &self.group;
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for &x in &self.subgroups[a] {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for &u in &self.subgroups[k] {
                let ux = g.mul(u, x);
                for &v in &self.subgroups[l] {
                    seen[g.mul(ux, v)] = true;
                }
            }
        }
        reps
    }

    /// Representatives of the left cosets `A / K`, each the smallest element
    /// of its coset, ascending.
    pub fn left_cosets(&self, a: SubgroupId, k: SubgroupId) -> Vec<usize> {
        let g = &self.group;
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for &x in &self.subgroups[a] {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for &u in &self.subgroups[k] {
                seen[g.mul(x, u)] = true;
            }
        }
        reps
    }

    /// Smallest element of the coset `xK`.
    pub fn coset_rep(&self, x: usize, k: SubgroupId) -> usize {
        self.subgroups[k].iter().map(|&u| self.group.mul(x, u)).min().expect("nonempty subgroup")
    }

    /// Cosets `gK ∈ A/K` fixed by `H` (those with `g⁻¹Hg ≤ K`), as smallest
    /// representatives, ascending.
    pub fn fixed_cosets_in(&self, a: SubgroupId, k: SubgroupId, h: SubgroupId) -> Vec<usize> {
        let g = &self.group;
        self.left_cosets(a, k).into_iter().filter(|&x| self.leq[self.conj[g.inv(x)][h]][k]).collect()
    }

    /// `(G/K)^H`
    pub fn fixed_cosets(&self, k: SubgroupId, h: SubgroupId) -> Vec<usize> {
        self.fixed_cosets_in(self.whole(), k, h)
    }
}

fn name_subgroups(group: &FiniteGroup, subgroups: &[Vec<usize>]) -> Vec<String> {
    let mut names: Vec<String> = Vec::with_capacity(subgroups.len());
    let whole = subgroups.len() - 1;
    for (i, s) in subgroups.iter().enumerate() {
        let gens = greedy_generators(group, s);
        let order = s.len();
        let unique_order = subgroups.iter().filter(|t| t.len() == order).count() == 1;
        let candidate = if i == whole {
            group.name().to_string()
        } else if order == 1 {
            "C1".to_string()
        } else if gens.len() == 1 && unique_order {
            format!("C{order}")
        } else {
            String::new()
        };
        let name = if candidate.is_empty() || names.contains(&candidate) {
            let labels: Vec<&str> = gens.iter().map(|&g| group.label(g)).collect();
            format!("<{}>", labels.join(", "))
        } else {
            candidate
        };
        names.push(name);
    }
    names
}

fn greedy_generators(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![group.identity()];
    for &x in elements {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = group.closure(&gens);
        }
    }
    gens
}
