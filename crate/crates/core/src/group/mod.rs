//! Finite groups as explicit multiplication tables.
//!
//! Every group is stored as an n-by-n table over element indices, with
//! human-readable labels kept purely for display. Equality of elements is
//! index equality, never label comparison. Tables at this scale (a few
//! hundred elements) make every query exhaustively checkable.

mod build;
mod spec;

pub use spec::GroupSpec;

use crate::arith;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot read table file {path}: {source}")]
    TableIo {
        path: String,
        source: std::io::Error,
    },
}

/// A finite group over element indices `0..order`.
#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    identity: usize,
    /// Row-major: `table[a * order + b]` is the index of `a * b`.
    table: Vec<u32>,
    labels: Vec<String>,
    /// Cached order of each element.
    orders: Vec<u64>,
}

impl Group {
    /// Assembles a group from a table known to satisfy the axioms.
    /// Family constructors use this; untrusted tables go through
    /// [`Group::validate`] first.
    pub(crate) fn from_parts(identity: usize, table: Vec<u32>, labels: Vec<String>) -> Group {
        let order = labels.len();
        assert_eq!(table.len(), order * order);
        let mut g = Group {
            order,
            identity,
            table,
            labels,
            orders: Vec::new(),
        };
        g.orders = (0..order).map(|x| g.compute_order(x)).collect();
        g
    }

    fn compute_order(&self, x: usize) -> u64 {
        let mut acc = x;
        let mut k = 1u64;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("every element has an inverse")
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Least k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> u64 {
        self.orders[x]
    }

    /// The cyclic subgroup <x> = {x^k}, sorted by element index.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut members = vec![self.identity];
        let mut acc = x;
        while acc != self.identity {
            members.push(acc);
            acc = self.mul(acc, x);
        }
        members.sort_unstable();
        members
    }

    /// The generators of <x>, i.e. all y with <y> = <x>, sorted by index.
    /// Its size is always phi(|x|).
    pub fn generator_class(&self, x: usize) -> Vec<usize> {
        let d = self.orders[x];
        self.cyclic_subgroup(x)
            .into_iter()
            .filter(|&y| self.orders[y] == d)
            .collect()
    }

    /// Involutions x whose only containing cyclic subgroup is <x> itself,
    /// found by scanning every cyclic subgroup of the group.
    pub fn maximal_involutions(&self) -> Vec<usize> {
        let mut covered = vec![false; self.order];
        for y in 0..self.order {
            if self.orders[y] > 2 {
                for z in self.cyclic_subgroup(y) {
                    if self.orders[z] == 2 {
                        covered[z] = true;
                    }
                }
            }
        }
        (0..self.order)
            .filter(|&x| self.orders[x] == 2 && !covered[x])
            .collect()
    }

    /// Number of subgroups of order p: the count of order-p elements
    /// divided by p - 1. Returns 0 when p does not divide the group order.
    pub fn count_order_p_subgroups(&self, p: u64) -> Result<u64, GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let elements = self.orders.iter().filter(|&&d| d == p).count() as u64;
        Ok(elements / (p - 1))
    }

    /// Map p -> s_p over all primes dividing the group order.
    pub fn subgroup_counts_by_prime(&self) -> Vec<(u64, u64)> {
        arith::factorize(self.order as u64)
            .into_iter()
            .map(|(p, _)| {
                let s = self
                    .count_order_p_subgroups(p)
                    .expect("prime from factorization");
                (p, s)
            })
            .collect()
    }

    /// Finite-group nilpotency via the classical criterion: every pair of
    /// elements with coprime orders commutes.
    pub fn is_nilpotent(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if arith::gcd(self.orders[a], self.orders[b]) == 1
                    && self.mul(a, b) != self.mul(b, a)
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&(self.order as u64))
    }

    /// All maximal cyclic subgroups, each as a sorted element list, the
    /// list of lists sorted lexicographically.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        let mut subgroups: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.order {
            let s = self.cyclic_subgroup(x);
            if !subgroups.contains(&s) {
                subgroups.push(s);
            }
        }
        let mut maximal: Vec<Vec<usize>> = subgroups
            .iter()
            .filter(|s| {
                !subgroups
                    .iter()
                    .any(|t| t.len() > s.len() && is_sorted_subset(s, t))
            })
            .cloned()
            .collect();
        maximal.sort();
        maximal
    }

    /// Full axiom check: identity, Latin square, two-sided inverses,
    /// associativity. Quadratic in size except associativity, which is cubic.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        for &v in &self.table {
            if v as usize >= n {
                return Err(GroupError::NotAGroup(format!(
                    "table entry {v} out of range for order {n}"
                )));
            }
        }
        let e = self.identity;
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(GroupError::NotAGroup(format!(
                    "element {e} is not a two-sided identity"
                )));
            }
        }
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
        for a in 0..n {
            let has_inverse =
                (0..n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e);
            if !has_inverse {
                return Err(GroupError::NotAGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        Ok(())
    }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
