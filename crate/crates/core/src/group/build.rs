//! Multiplication-table builders for each group family.
//!
//! Every family has a normal form for its elements (a word in the
//! generators); the table is produced by multiplying normal forms and
//! renormalizing. The identity always sits at index 0 for constructed
//! families; raw tables keep whatever identity index they declare.

use std::fs;

use super::{Group, GroupError, GroupSpec};

/// Guard against accidentally huge orders: tables are O(n^2) memory and the
/// raw-table axiom check is O(n^3).
const MAX_ORDER: u64 = 5000;

pub(super) fn build_group(spec: &GroupSpec) -> Result<Group, GroupError> {
    match spec {
        GroupSpec::Cyclic(n) => {
            check_order(*n)?;
            Ok(cyclic(*n as usize))
        }
        GroupSpec::Dihedral(m) => {
            check_order(*m)?;
            Ok(dihedral(*m as usize / 2))
        }
        GroupSpec::GeneralizedQuaternion(m) => {
            check_order(*m)?;
            Ok(quaternion(*m as usize / 4))
        }
        GroupSpec::ElementaryAbelian2(r) => {
            if *r >= 13 {
                return Err(GroupError::InvalidSpec(format!(
                    "E2:{r} exceeds the supported order {MAX_ORDER}"
                )));
            }
            Ok(elementary_abelian2(*r))
        }
        GroupSpec::SemidirectCyclic { m, k, t } => {
            check_order(m.checked_mul(*k).ok_or_else(|| {
                GroupError::InvalidSpec("semidirect order overflows".into())
            })?)?;
            Ok(semidirect(*m as usize, *k as usize, *t))
        }
        GroupSpec::RawTable { path } => raw_table_from_file(path),
        GroupSpec::DirectProduct(factors) => {
            let built: Vec<Group> = factors
                .iter()
                .map(build_group)
                .collect::<Result<_, _>>()?;
            let order = built
                .iter()
                .try_fold(1u64, |acc, g| acc.checked_mul(g.order() as u64))
                .ok_or_else(|| GroupError::InvalidSpec("product order overflows".into()))?;
            check_order(order)?;
            Ok(direct_product(&built))
        }
    }
}

fn check_order(n: u64) -> Result<(), GroupError> {
    if n > MAX_ORDER {
        Err(GroupError::InvalidSpec(format!(
            "order {n} exceeds the supported maximum {MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

fn pow_label(gen: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => gen.to_string(),
        _ => format!("{gen}^{e}"),
    }
}

fn or_identity(word: String) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word
    }
}

fn cyclic(n: usize) -> Group {
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u32;
        }
    }
    let labels = (0..n).map(|i| or_identity(pow_label("x", i))).collect();
    Group::from_parts(0, table, labels)
}

/// Dihedral group of order 2n: rotations a^i at indices 0..n, reflections
/// a^i b at indices n..2n.
fn dihedral(n: usize) -> Group {
    let size = 2 * n;
    let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
    let mut table = vec![0u32; size * size];
    for i in 0..size {
        let (ri, fi) = (i % n, i >= n);
        for j in 0..size {
            let (rj, fj) = (j % n, j >= n);
            // b a^j = a^-j b
            let rot = if fi { (ri + n - rj) % n } else { (ri + rj) % n };
            table[i * size + j] = idx(rot, fi ^ fj) as u32;
        }
    }
    let labels = (0..size)
        .map(|i| {
            let word = pow_label("a", i % n);
            if i >= n {
                format!("{word}b")
            } else {
                or_identity(word)
            }
        })
        .collect();
    Group::from_parts(0, table, labels)
}

/// Generalized quaternion group of order 4n: x^i at indices 0..2n,
/// x^i y at indices 2n..4n, subject to x^n = y^2, x^{2n} = e and
/// y^{-1} x y = x^{-1}.
fn quaternion(n: usize) -> Group {
    let half = 2 * n;
    let size = 4 * n;
    let mut table = vec![0u32; size * size];
    for i in 0..size {
        let (ri, fi) = (i % half, i >= half);
        for j in 0..size {
            let (rj, fj) = (j % half, j >= half);
            let v = match (fi, fj) {
                (false, false) => (ri + rj) % half,
                (false, true) => half + (ri + rj) % half,
                (true, false) => half + (ri + half - rj) % half,
                // (x^i y)(x^j y) = x^{i-j} y^2 = x^{i-j+n}
                (true, true) => (ri + half - rj + n) % half,
            };
            table[i * size + j] = v as u32;
        }
    }
    let labels = (0..size)
        .map(|i| {
            let word = pow_label("x", i % half);
            if i >= half {
                format!("{word}y")
            } else {
                or_identity(word)
            }
        })
        .collect();
    Group::from_parts(0, table, labels)
}

fn elementary_abelian2(rank: u32) -> Group {
    let size = 1usize << rank;
    let mut table = vec![0u32; size * size];
    for i in 0..size {
        for j in 0..size {
            table[i * size + j] = (i ^ j) as u32;
        }
    }
    let labels = (0..size)
        .map(|mask| {
            let word: String = (0..rank)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| format!("g{}", b + 1))
                .collect();
            or_identity(word)
        })
        .collect();
    Group::from_parts(0, table, labels)
}

/// Z_m acting on Z_k: elements a^i b^j at index i*k + j, with
/// a^{-1} b a = b^t, i.e. b^j a^i = a^i b^{j t^i}.
fn semidirect(m: usize, k: usize, t: u64) -> Group {
    let size = m * k;
    // powers of t mod k
    let mut tpow = vec![1u64 % k as u64; m];
    for i in 1..m {
        tpow[i] = tpow[i - 1] * t % k as u64;
    }
    let mut table = vec![0u32; size * size];
    for i1 in 0..m {
        for j1 in 0..k {
            let row = i1 * k + j1;
            for i2 in 0..m {
                for j2 in 0..k {
                    let i = (i1 + i2) % m;
                    let j = (j1 as u64 * tpow[i2] + j2 as u64) % k as u64;
                    table[row * size + i2 * k + j2] = (i * k + j as usize) as u32;
                }
            }
        }
    }
    let labels = (0..size)
        .map(|v| or_identity(format!("{}{}", pow_label("a", v / k), pow_label("b", v % k))))
        .collect();
    Group::from_parts(0, table, labels)
}

fn direct_product(factors: &[Group]) -> Group {
    let size: usize = factors.iter().map(|g| g.order()).product();
    let decode = |mut v: usize| -> Vec<usize> {
        let mut coords = vec![0usize; factors.len()];
        for (i, g) in factors.iter().enumerate().rev() {
            coords[i] = v % g.order();
            v /= g.order();
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        factors
            .iter()
            .zip(coords)
            .fold(0usize, |acc, (g, &c)| acc * g.order() + c)
    };
    let mut table = vec![0u32; size * size];
    for a in 0..size {
        let ca = decode(a);
        for b in 0..size {
            let cb = decode(b);
            let prod: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, g)| g.mul(ca[i], cb[i]))
                .collect();
            table[a * size + b] = encode(&prod) as u32;
        }
    }
    let labels = (0..size)
        .map(|v| {
            let coords = decode(v);
            let parts: Vec<&str> = factors
                .iter()
                .zip(&coords)
                .map(|(g, &c)| g.label(c))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Group::from_parts(0, table, labels)
}

fn raw_table_from_file(path: &str) -> Result<Group, GroupError> {
    let text = fs::read_to_string(path).map_err(|source| GroupError::TableIo {
        path: path.to_string(),
        source,
    })?;
    raw_table_from_str(&text)
}

/// Parses and fully validates a multiplication table: first line n, then n
/// lines of n space-separated indices. The identity is detected, not assumed
/// to be index 0.
pub fn raw_table_from_str(text: &str) -> Result<Group, GroupError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: u64 = lines
        .next()
        .ok_or_else(|| GroupError::NotAGroup("empty table file".into()))?
        .trim()
        .parse()
        .map_err(|_| GroupError::NotAGroup("first line must be the order".into()))?;
    if n == 0 {
        return Err(GroupError::NotAGroup("order must be at least 1".into()));
    }
    check_order(n)?;
    let n = n as usize;
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| GroupError::NotAGroup(format!("missing table row {row}")))?;
        let entries: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| GroupError::NotAGroup(format!("bad entry `{tok}` in row {row}")))
            })
            .collect::<Result<_, _>>()?;
        if entries.len() != n {
            return Err(GroupError::NotAGroup(format!(
                "row {row} has {} entries, expected {n}",
                entries.len()
            )));
        }
        table.extend(entries);
    }
    for &v in &table {
        if v as usize >= n {
            return Err(GroupError::NotAGroup(format!(
                "entry {v} out of range for order {n}"
            )));
        }
    }
    let identity = (0..n)
        .find(|&e| {
            (0..n).all(|x| {
                table[e * n + x] as usize == x && table[x * n + e] as usize == x
            })
        })
        .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;
    let labels = (0..n)
        .map(|i| if i == identity { "e".to_string() } else { format!("g{i}") })
        .collect();
    // from_parts computes element orders by iterating powers, which only
    // terminates on genuine groups; check the axioms on a shell first.
    let candidate = ValidationShell { n, identity, table: &table };
    candidate.validate()?;
    Ok(Group::from_parts(identity, table, labels))
}

struct ValidationShell<'a> {
    n: usize,
    identity: usize,
    table: &'a [u32],
}

impl ValidationShell<'_> {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.n;
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                row_seen[self.mul(a, b)] = true;
                col_seen[self.mul(b, a)] = true;
            }
            if row_seen.iter().any(|&s| !s) || col_seen.iter().any(|&s| !s) {
                return Err(GroupError::NotAGroup(format!(
                    "row or column {a} is not a permutation"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let e = self.identity;
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e) {
                return Err(GroupError::NotAGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_labels_and_table() {
        let g = cyclic(6);
        assert_eq!(g.label(0), "e");
        assert_eq!(g.label(1), "x");
        assert_eq!(g.label(5), "x^5");
        assert_eq!(g.mul(4, 5), 3);
    }

    #[test]
    fn dihedral_relations() {
        let g = dihedral(6); // D:12
        let a = 1;
        let b = 6;
        assert_eq!(g.label(b), "b");
        assert_eq!(g.label(7), "ab");
        assert_eq!(g.label(8), "a^2b");
        // b a b = a^-1
        assert_eq!(g.mul(g.mul(b, a), b), g.inverse(a));
        assert_eq!(g.element_order(a), 6);
        assert_eq!(g.element_order(b), 2);
    }

    #[test]
    fn quaternion_labels() {
        let g = quaternion(2); // Q:8
        assert_eq!(g.label(1), "x");
        assert_eq!(g.label(4), "y");
        assert_eq!(g.label(5), "xy");
        // unique involution x^2
        let invs: Vec<usize> = (0..8).filter(|&v| g.element_order(v) == 2).collect();
        assert_eq!(invs, vec![2]);
    }

    #[test]
    fn raw_table_accepts_klein_four() {
        let text = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
        let g = raw_table_from_str(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.identity(), 0);
        assert!(g.validate().is_ok());
    }

    #[test]
    fn raw_table_detects_shifted_identity() {
        // Z_3 with elements relabeled so the identity is index 2
        let text = "3\n1 2 0\n2 0 1\n0 1 2\n";
        let g = raw_table_from_str(text).unwrap();
        assert_eq!(g.identity(), 2);
        assert_eq!(g.element_order(2), 1);
        assert_eq!(g.element_order(0), 3);
    }

    #[test]
    fn raw_table_rejects_nonassociative_loop() {
        // a Latin square with identity 0 and two-sided inverses that is not
        // associative: (1*1)*2 = 2 but 1*(1*2) = 4
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = raw_table_from_str(text).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn raw_table_rejects_malformed_input() {
        assert!(raw_table_from_str("").is_err());
        assert!(raw_table_from_str("2\n0 1\n1 1\n").is_err()); // not Latin
        assert!(raw_table_from_str("2\n0 1\n").is_err()); // missing row
        assert!(raw_table_from_str("2\n0 5\n1 0\n").is_err()); // out of range
        assert!(raw_table_from_str("3\n1 2 0\n2 0 1\n0 2 1\n").is_err()); // no identity
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            GroupSpec::Cyclic(100_000).build(),
            Err(GroupError::InvalidSpec(_))
        ));
        assert!(matches!(
            GroupSpec::parse("Z:80 x Z:80").unwrap().build(),
            Err(GroupError::InvalidSpec(_))
        ));
    }
}
