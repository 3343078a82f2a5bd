//! Concrete vertex groups: finite groups given by a Cayley table, finite
//! cyclic groups, and the integers, each with a positive integer length
//! function and bounded enumeration.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A vertex-group element. For table-backed and cyclic groups this is an
/// element id in `0..n` with id 0 the identity; for the integers it is the
/// integer itself.
pub type GroupElem = i64;

/// Identity element of every vertex-group kind.
pub const IDENTITY: GroupElem = 0;

/// A finite group presented by its multiplication table, with an optional
/// per-element length override.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    mult: Vec<Vec<u32>>,
    inv: Vec<u32>,
    length: Vec<u64>,
}

impl CayleyTable {
    /// Builds and fully validates a table-backed group. `mult[a][b]` is the
    /// product `a*b`; id 0 must act as the identity. When `length` is
    /// `None`, the default length (0 for the identity, 1 otherwise) is used;
    /// an explicit table is re-validated against the length-function axioms.
    pub fn new(mult: Vec<Vec<u32>>, length: Option<Vec<u64>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::GroupAxiom("empty multiplication table".into()));
        }
        for (a, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &p in row {
                if p as usize >= n {
                    return Err(Error::GroupAxiom(format!(
                        "product entry {p} out of range in row {a}"
                    )));
                }
            }
        }
        for (a, row) in mult.iter().enumerate() {
            if mult[0][a] != a as u32 || row[0] != a as u32 {
                return Err(Error::GroupAxiom(format!(
                    "id 0 is not a two-sided identity at element {a}"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab_c = mult[mult[a][b] as usize][c];
                    let a_bc = mult[a][mult[b][c] as usize];
                    if ab_c != a_bc {
                        return Err(Error::GroupAxiom(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mult[a][b] == 0 && mult[b][a] == 0) {
                Some(b) => inv[a] = b as u32,
                None => {
                    return Err(Error::GroupAxiom(format!("element {a} has no inverse")));
                }
            }
        }
        let length = match length {
            Some(table) => {
                if table.len() != n {
                    return Err(Error::LengthAxiom(format!(
                        "length table has {} entries, expected {n}",
                        table.len()
                    )));
                }
                table
            }
            None => (0..n).map(|a| if a == 0 { 0 } else { 1 }).collect(),
        };
        let group = CayleyTable { mult, inv, length };
        group.validate_length()?;
        Ok(group)
    }

    fn validate_length(&self) -> Result<()> {
        let n = self.order();
        if self.length[0] != 0 {
            return Err(Error::LengthAxiom("length of the identity must be 0".into()));
        }
        for a in 1..n {
            if self.length[a] == 0 {
                return Err(Error::LengthAxiom(format!(
                    "non-identity element {a} has length 0"
                )));
            }
        }
        for a in 0..n {
            if self.length[self.inv[a] as usize] != self.length[a] {
                return Err(Error::LengthAxiom(format!(
                    "length not symmetric at element {a}"
                )));
            }
            for b in 0..n {
                let ab = self.mult[a][b] as usize;
                if self.length[ab] > self.length[a] + self.length[b] {
                    return Err(Error::LengthAxiom(format!(
                        "subadditivity fails at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }
}

/// A vertex group `G_v` together with its length function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum VertexGroup {
    /// Finite group on element ids `0..n` with an explicit Cayley table.
    Table(CayleyTable),
    /// Cyclic group of order `n` under addition mod `n`, length `min(a, n-a)`.
    Cyclic(u32),
    /// The integers under addition, length `|a|`.
    Integers,
}

impl VertexGroup {
    pub fn cyclic(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::GroupAxiom("cyclic group must have order >= 1".into()));
        }
        Ok(VertexGroup::Cyclic(order))
    }

    /// Number of elements, `None` for the integers.
    pub fn order(&self) -> Option<u64> {
        match self {
            VertexGroup::Table(t) => Some(t.order() as u64),
            VertexGroup::Cyclic(n) => Some(u64::from(*n)),
            VertexGroup::Integers => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Checks that `a` denotes an element of this group.
    pub fn contains(&self, a: GroupElem) -> bool {
        match self {
            VertexGroup::Table(t) => (0..t.order() as i64).contains(&a),
            VertexGroup::Cyclic(n) => (0..i64::from(*n)).contains(&a),
            VertexGroup::Integers => true,
        }
    }

    pub fn multiply(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        debug_assert!(self.contains(a) && self.contains(b));
        match self {
            VertexGroup::Table(t) => i64::from(t.mult[a as usize][b as usize]),
            VertexGroup::Cyclic(n) => (a + b) % i64::from(*n),
            VertexGroup::Integers => a + b,
        }
    }

    pub fn invert(&self, a: GroupElem) -> GroupElem {
        debug_assert!(self.contains(a));
        match self {
            VertexGroup::Table(t) => i64::from(t.inv[a as usize]),
            VertexGroup::Cyclic(n) => (i64::from(*n) - a) % i64::from(*n),
            VertexGroup::Integers => -a,
        }
    }

    /// The vertex length `ℓ_v`.
    pub fn length(&self, a: GroupElem) -> u64 {
        debug_assert!(self.contains(a));
        match self {
            VertexGroup::Table(t) => t.length[a as usize],
            VertexGroup::Cyclic(n) => (a.min(i64::from(*n) - a)) as u64,
            VertexGroup::Integers => a.unsigned_abs(),
        }
    }

    /// All elements with `ℓ_v(y) <= cap`, sorted, no duplicates. Always
    /// finite: infinite groups are only ever enumerated through a cap.
    pub fn enumerate_up_to_length(&self, cap: u64) -> Vec<GroupElem> {
        match self {
            VertexGroup::Table(t) => (0..t.order() as i64)
                .filter(|&a| self.length(a) <= cap)
                .collect(),
            VertexGroup::Cyclic(n) => (0..i64::from(*n))
                .filter(|&a| self.length(a) <= cap)
                .collect(),
            VertexGroup::Integers => {
                let cap = cap.min(i64::MAX as u64) as i64;
                (-cap..=cap).collect()
            }
        }
    }

    /// Non-identity elements with `ℓ_v(y) <= cap`; the syllable alphabet
    /// drawn from this vertex when enumerating a ball.
    pub fn nontrivial_up_to_length(&self, cap: u64) -> Vec<GroupElem> {
        self.enumerate_up_to_length(cap)
            .into_iter()
            .filter(|&a| a != IDENTITY)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_table() -> CayleyTable {
        CayleyTable::new(vec![vec![0, 1], vec![1, 0]], None).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let c5 = VertexGroup::cyclic(5).unwrap();
        assert_eq!(c5.multiply(2, 4), 1);
        assert_eq!(VertexGroup::Integers.multiply(3, -3), 0);
        let z2 = VertexGroup::Table(z2_table());
        assert_eq!(z2.multiply(1, 1), 0);
    }

    #[test]
    fn vertex_length_examples() {
        assert_eq!(VertexGroup::Integers.length(-7), 7);
        let c5 = VertexGroup::cyclic(5).unwrap();
        assert_eq!(c5.length(4), 1);
        assert_eq!(c5.length(0), 0);
        let z2 = VertexGroup::Table(z2_table());
        assert_eq!(z2.length(0), 0);
    }

    /// Brute-force word length of `a` in cyclic(n) over the generators {1, n-1}.
    fn cyclic_word_length(n: u32, a: i64) -> u64 {
        let n = i64::from(n);
        let mut dist = vec![u64::MAX; n as usize];
        dist[0] = 0;
        let mut frontier = vec![0i64];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for step in [1, n - 1] {
                    let y = (x + step) % n;
                    if dist[y as usize] == u64::MAX {
                        dist[y as usize] = d;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        dist[a as usize]
    }

    #[test]
    fn cyclic_length_is_word_length_over_plus_minus_one() {
        for n in 1..=9u32 {
            let g = VertexGroup::cyclic(n).unwrap();
            for a in 0..i64::from(n) {
                assert_eq!(g.length(a), cyclic_word_length(n, a), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            VertexGroup::Integers.enumerate_up_to_length(2),
            vec![-2, -1, 0, 1, 2]
        );
        let c2 = VertexGroup::cyclic(2).unwrap();
        assert_eq!(c2.enumerate_up_to_length(5), vec![0, 1]);
        // frozen from brute force over all 6 elements with length min(a, 6-a)
        let c6 = VertexGroup::cyclic(6).unwrap();
        assert_eq!(c6.enumerate_up_to_length(2), vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn enumeration_nested_and_consistent_with_length() {
        for g in [
            VertexGroup::cyclic(7).unwrap(),
            VertexGroup::Integers,
            VertexGroup::Table(z2_table()),
        ] {
            for cap in 0..5u64 {
                let small = g.enumerate_up_to_length(cap);
                let large = g.enumerate_up_to_length(cap + 1);
                for &a in &small {
                    assert!(large.contains(&a));
                    assert!(g.length(a) <= cap);
                }
            }
        }
    }

    #[test]
    fn length_axioms_exact_on_bounded_sets() {
        for g in [
            VertexGroup::cyclic(6).unwrap(),
            VertexGroup::cyclic(5).unwrap(),
            VertexGroup::Integers,
            VertexGroup::Table(z2_table()),
        ] {
            let elems = g.enumerate_up_to_length(6);
            assert_eq!(g.length(IDENTITY), 0);
            for &a in &elems {
                assert_eq!(g.length(g.invert(a)), g.length(a));
                if a != IDENTITY {
                    assert!(g.length(a) >= 1);
                }
                for &b in &elems {
                    assert!(g.length(g.multiply(a, b)) <= g.length(a) + g.length(b));
                }
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive_for_small_tables() {
        // Klein four-group as a table; constructing it validates everything.
        let klein = CayleyTable::new(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
            None,
        )
        .unwrap();
        assert_eq!(klein.order(), 4);
    }

    #[test]
    fn bad_tables_are_rejected() {
        // 0 not an identity
        assert!(CayleyTable::new(vec![vec![1, 0], vec![0, 1]], None).is_err());
        // non-associative magma on 3 elements
        let bad = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(CayleyTable::new(bad, None).is_err());
    }

    #[test]
    fn length_override_validation() {
        // valid override on Z/3 as a table: both non-identity elements weight 2
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert!(CayleyTable::new(z3.clone(), Some(vec![0, 2, 2])).is_ok());
        // asymmetric override: 1 and 2 are mutually inverse but get distinct lengths
        assert!(CayleyTable::new(z3.clone(), Some(vec![0, 1, 2])).is_err());
        // zero length on a non-identity element
        assert!(CayleyTable::new(z3, Some(vec![0, 0, 0])).is_err());
    }
}
