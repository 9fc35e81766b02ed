//! Finite groups given by a complete multiplication table.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the order of groups accepted by the loaders.
pub const DEFAULT_CAP: usize = 64;

/// Group description as accepted on input: either a full Cayley table or a
/// list of permutation generators in 1-based cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        name: String,
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Permutations {
        name: String,
        degree: usize,
        generators: Vec<String>,
    },
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<usize>,
    // g = parent.0 * generators[parent.1]
    parent: Vec<Option<(usize, usize)>>,
    bfs: Vec<usize>,
    spec: GroupSpec,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn load(spec: &GroupSpec, cap: usize) -> Result<Self> {
        match spec {
            GroupSpec::Table { name, order, table, labels } => {
                if table.len() != *order {
                    return Err(Error::BadTable(format!(
                        "declared order {order} but table has {} rows",
                        table.len()
                    )));
                }
                let mut g = Self::from_table(name, table.clone(), cap)?;
                if let Some(labels) = labels {
                    if labels.len() != g.order {
                        return Err(Error::BadTable("label count differs from order".into()));
                    }
                    g.labels = labels.clone();
                }
                g.spec = spec.clone();
                Ok(g)
            }
            GroupSpec::Permutations { name, degree, generators } => {
                let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
                Self::from_permutations(name, *degree, &gens, cap)
            }
        }
    }

    /// Validates a Cayley table: square, closed, associative, with a
    /// two-sided identity and inverses.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        if n > cap {
            return Err(Error::CapExceeded { order: n, cap });
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::BadTable("table is not an n x n array over 0..n".into()));
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let m = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let mut inverse = vec![0; n];
        for (g, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&h| m(g, h) == identity && m(h, g) == identity)
                .ok_or(Error::NotInvertible(g))?;
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let spec = GroupSpec::Table { name: name.to_string(), order: n, table, labels: None };
        let mut g = FiniteGroup {
            name: name.to_string(),
            order: n,
            table: flat,
            identity,
            inverse,
            labels,
            generators: Vec::new(),
            parent: Vec::new(),
            bfs: Vec::new(),
            spec,
        };
        let gens = g.greedy_generators((0..n).collect::<Vec<_>>().as_slice());
        g.set_generators(gens);
        Ok(g)
    }

    /// Closes a set of permutations of `{1..degree}` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order starting from
    /// the identity, multiplying by the generators on the right in the order
    /// given. Composition applies the right factor first.
    pub fn from_permutations(name: &str, degree: usize, generators: &[&str], cap: usize) -> Result<Self> {
        let gens: Vec<Vec<usize>> =
            generators.iter().map(|s| parse_cycles(s, degree)).collect::<Result<_>>()?;
        let id: Vec<usize> = (0..degree).collect();
        let mut distinct: Vec<Vec<usize>> = Vec::new();
        for g in gens {
            if g != id && !distinct.contains(&g) {
                distinct.push(g);
            }
        }
        let mut perms = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut parent = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for (pos, s) in distinct.iter().enumerate() {
                let h = compose(&perms[g], s);
                if !index.contains_key(&h) {
                    if perms.len() == cap {
                        return Err(Error::CapExceeded { order: cap + 1, cap });
                    }
                    index.insert(h.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(h);
                    parent.push(Some((g, pos)));
                }
            }
        }
        let n = perms.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&perms[a], &perms[b])];
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("closed under inverses");
        }
        let generators: Vec<usize> = distinct.iter().map(|s| index[s]).collect();
        let spec = GroupSpec::Permutations {
            name: name.to_string(),
            degree,
            generators: generators_to_strings(generators.iter().map(|&g| &perms[g])),
        };
        Ok(FiniteGroup {
            name: name.to_string(),
            order: n,
            table,
            identity: 0,
            inverse,
            labels: perms.iter().map(|p| cycle_string(p)).collect(),
            generators,
            bfs: (0..n).collect(),
            parent,
            spec,
        })
    }

    fn greedy_generators(&self, candidates: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for &c in candidates {
            if !span.contains(&c) {
                gens.push(c);
                span = self.closure(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    fn set_generators(&mut self, gens: Vec<usize>) {
        let n = self.order;
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut bfs = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < bfs.len() {
            let g = bfs[i];
            for (pos, &s) in gens.iter().enumerate() {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    parent[h] = Some((g, pos));
                    bfs.push(h);
                }
            }
            i += 1;
        }
        debug_assert_eq!(bfs.len(), n);
        self.generators = gens;
        self.parent = parent;
        self.bfs = bfs;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        let trimmed = label.trim();
        self.labels.iter().position(|l| l == trimmed)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `(p, i)` with `g = p * generators[i]`, or `None` for the identity.
    pub fn parent(&self, g: usize) -> Option<(usize, usize)> {
        self.parent[g]
    }

    /// Elements in breadth-first order from the identity; every element
    /// appears after its parent.
    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs
    }

    /// Word in the generators (as positions into [`FiniteGroup::generators`])
    /// whose left-to-right product is `g`.
    pub fn word(&self, mut g: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, s)) = self.parent[g] {
            w.push(s);
            g = p;
        }
        w.reverse();
        w
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < out.len() {
            let g = out[i];
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether a sorted element list is closed under products and inverses.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elements {
            if e >= self.order {
                return false;
            }
            member[e] = true;
        }
        member[self.identity]
            && elements.iter().all(|&a| member[self.inv(a)] && elements.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// The description this group was loaded from, or a labelled table for
    /// derived groups.
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Materializes a subgroup as a group in its own right. Returns the group
    /// and the embedding of its elements into `self`.
    pub fn subgroup_group(&self, name: &str, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::NotSubgroup(format!("{elems:?}")));
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let table: Vec<Vec<usize>> =
            elems.iter().map(|&a| elems.iter().map(|&b| pos[&self.mul(a, b)]).collect()).collect();
        let labels: Vec<String> = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let mut g = Self::from_table(name, table.clone(), usize::MAX)?;
        g.labels = labels.clone();
        g.spec = GroupSpec::Table { name: name.to_string(), order: elems.len(), table, labels: Some(labels) };
        Ok((g, elems))
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their smallest
    /// element, with the identity coset first.
    pub fn quotient(&self, name: &str, normal: &[usize]) -> Result<Quotient> {
        let mut n_elems = normal.to_vec();
        n_elems.sort_unstable();
        if !self.is_subgroup(&n_elems) {
            return Err(Error::NotSubgroup(format!("{n_elems:?}")));
        }
        let mut member = vec![false; self.order];
        for &e in &n_elems {
            member[e] = true;
        }
        for g in 0..self.order {
            if n_elems.iter().any(|&x| !member[self.conjugate(g, x)]) {
                return Err(Error::NotNormal(format!("{n_elems:?}")));
            }
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut lifts = vec![self.identity];
        for &x in &n_elems {
            projection[x] = 0;
        }
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let idx = lifts.len();
            lifts.push(g);
            for &x in &n_elems {
                projection[self.mul(g, x)] = idx;
            }
        }
        let k = lifts.len();
        let table: Vec<Vec<usize>> =
            (0..k).map(|a| (0..k).map(|b| projection[self.mul(lifts[a], lifts[b])]).collect()).collect();
        let labels: Vec<String> = lifts.iter().map(|&g| format!("[{}]", self.labels[g])).collect();
        let mut q = Self::from_table(name, table.clone(), usize::MAX)?;
        q.labels = labels.clone();
        q.spec = GroupSpec::Table { name: name.to_string(), order: k, table, labels: Some(labels) };
        Ok(Quotient { group: q, projection, lifts })
    }
}

/// A quotient group with its projection and chosen lifts.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Image of each element of the ambient group.
    pub projection: Vec<usize>,
    /// Smallest ambient element in each coset.
    pub lifts: Vec<usize>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// Parses 1-based cycle notation such as `"(1 2)(3 4)"` or `"(1 2 3) (4 5)"`.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let bad = |why: &str| Error::BadPermutation(format!("{s:?}: {why}"));
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = &open[..close];
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_>>()?;
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad("point out of range"));
            }
            if seen[p - 1] {
                return Err(bad("point repeated"));
            }
            seen[p - 1] = true;
        }
        for (i, &p) in points.iter().enumerate() {
            perm[p - 1] = points[(i + 1) % points.len()] - 1;
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

/// 1-based cycle notation, fixed points omitted, `()` for the identity.
pub fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn generators_to_strings<'a>(perms: impl Iterator<Item = &'a Vec<usize>>) -> Vec<String> {
    perms.map(|p| cycle_string(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn cyclic_table_of_order_six() {
        let g = FiniteGroup::from_table("C6", cyclic_table(6), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(), "C6");
        assert_eq!(g.generators(), &[1]);
        assert_eq!(g.inv(2), 4);
        for x in 0..6 {
            let w = g.word(x);
            let prod = w.iter().fold(g.identity(), |acc, &s| g.mul(acc, g.generators()[s]));
            assert_eq!(prod, x);
        }
    }

    #[test]
    fn transposition_generates_c2() {
        let g = FiniteGroup::from_permutations("C2", 2, &["(1 2)"], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(1), "(1 2)");
    }

    #[test]
    fn s4_from_two_generators() {
        let g = FiniteGroup::from_permutations("S4", 4, &["(1 2)", "(1 2 3 4)"], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.label(0), "()");
        assert_eq!(g.label(1), "(1 2)");
        assert_eq!(g.label(2), "(1 2 3 4)");
        assert!(!g.is_abelian());
    }

    #[test]
    fn rejects_non_associative_table() {
        // x*y = x - y mod 3 has a right identity only and is not associative.
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        assert!(matches!(FiniteGroup::from_table("bad", t, 64), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rejects_missing_inverse() {
        // Multiplicative monoid of integers mod 2 with identity 1: 0 has no inverse.
        let t = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table("m", t, 64), Err(Error::NotInvertible(0))));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FiniteGroup::from_permutations("S5", 5, &["(1 2)", "(1 2 3 4 5)"], 64),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table("C8", cyclic_table(8), 4),
            Err(Error::CapExceeded { order: 8, cap: 4 })
        ));
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycles("(1 3)(2 4 5)", 5).unwrap();
        assert_eq!(cycle_string(&p), "(1 3)(2 4 5)");
        assert_eq!(parse_cycles("()", 3).unwrap(), vec![0, 1, 2]);
        assert!(parse_cycles("(1 1)", 3).is_err());
        assert!(parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn quotient_of_c6_by_c3() {
        let g = FiniteGroup::from_table("C6", cyclic_table(6), DEFAULT_CAP).unwrap();
        let q = g.quotient("C6/C3", &[0, 2, 4]).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection, vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(q.lifts, vec![0, 1]);
    }

    #[test]
    fn spec_json_forms() {
        let table: GroupSpec =
            serde_json::from_str(r#"{"name":"C2","order":2,"table":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(table, GroupSpec::Table { .. }));
        let perms: GroupSpec =
            serde_json::from_str(r#"{"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}"#).unwrap();
        let g = FiniteGroup::load(&perms, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
    }
}
