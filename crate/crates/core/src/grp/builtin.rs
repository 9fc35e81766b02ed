//! The built-in group corpus.

use super::group::{FiniteGroup, GroupSpec, DEFAULT_CAP};

/// Names of the corpus groups, in increasing order.
pub const CORPUS: [&str; 10] = ["C2", "C3", "C6", "C8", "S3", "D8", "Q8", "A4", "D12", "S4"];

/// Cyclic group of order `n` as the table of addition mod `n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(&format!("C{n}"), table, usize::MAX).expect("cyclic table")
}

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_table("C1", vec![vec![0]], usize::MAX).expect("trivial table")
}

fn perm_group(name: &str, degree: usize, gens: &[&str]) -> FiniteGroup {
    FiniteGroup::from_permutations(name, degree, gens, DEFAULT_CAP).expect("corpus group")
}

/// `S3` or `S4` generated by a transposition and a long cycle.
pub fn symmetric(n: usize) -> FiniteGroup {
    match n {
        3 => perm_group("S3", 3, &["(1 2)", "(1 2 3)"]),
        4 => perm_group("S4", 4, &["(1 2)", "(1 2 3 4)"]),
        _ => panic!("only S3 and S4 are built in"),
    }
}

/// Dihedral group of order 8 acting on the vertices of a square.
pub fn dihedral8() -> FiniteGroup {
    perm_group("D8", 4, &["(1 2 3 4)", "(1 3)"])
}

/// Dihedral group of order 12 acting on the vertices of a hexagon.
pub fn dihedral12() -> FiniteGroup {
    perm_group("D12", 6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"])
}

pub fn alternating4() -> FiniteGroup {
    perm_group("A4", 4, &["(1 2 3)", "(2 3 4)"])
}

/// Quaternion group with elements `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit) for units 1, i, j, k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (neg, u) = UNIT[a / 2][b / 2];
                    let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                    2 * u + usize::from(sign)
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    let spec = GroupSpec::Table { name: "Q8".into(), order: 8, table, labels: Some(labels) };
    FiniteGroup::load(&spec, DEFAULT_CAP).expect("quaternion table")
}

/// Looks up a corpus group (plus `C1` and any `Cn`) by name.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    Some(match name {
        "C1" => trivial(),
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "D8" => dihedral8(),
        "D12" => dihedral12(),
        "Q8" => quaternion(),
        "A4" => alternating4(),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            if n == 0 || n > DEFAULT_CAP {
                return None;
            }
            cyclic(n)
        }
    })
}

pub fn corpus() -> Vec<FiniteGroup> {
    CORPUS.iter().map(|n| by_name(n).expect("corpus name")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders() {
        let orders: Vec<usize> = corpus().iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, vec![2, 3, 6, 8, 6, 8, 8, 12, 12, 24]);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (i, j, k, m1) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.element_order(i), 4);
        assert!(!q.is_abelian());
    }
}
