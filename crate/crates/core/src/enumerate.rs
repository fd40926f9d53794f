//! Exhaustive enumeration of all topologies on small ground sets.
//!
//! Finite topologies correspond bijectively to preorders: the specialization
//! preorder recovers the topology whose opens are the up-sets. Enumerating
//! reflexive transitive relations is feasible at n = 5, where raw search
//! over ∪/∩-closed set families is not; the raw search is kept as an
//! independent reference enumerator for cross-checks.

use thiserror::Error;

use crate::set::Subset;
use crate::topo::{topology_from_opens, FiniteTopology};
use crate::universe::Universe;

/// Preorder enumeration is bounded here; counts grow as A000798.
pub const ENUMERATION_MAX: usize = 5;
/// The reference enumerator scans all 2^(2^n) subset families.
pub const FAMILY_ORACLE_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration supports at most {max} points, got {got}")]
    TooLarge { got: usize, max: usize },
}

/// A reflexive, transitive Boolean relation on `0..n`, stored as one
/// adjacency mask per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    n: usize,
    rows: Vec<u32>,
}

impl Preorder {
    pub fn new(n: usize, rows: Vec<u32>) -> Option<Preorder> {
        let p = Preorder { n, rows };
        p.is_reflexive_transitive().then_some(p)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    fn is_reflexive_transitive(&self) -> bool {
        if self.rows.len() != self.n {
            return false;
        }
        for (i, &row) in self.rows.iter().enumerate() {
            if row >> i & 1 == 0 {
                return false;
            }
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                // i ≤ j forces row(j) ⊆ row(i)
                if self.rows[j] & !row != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The Alexandrov topology of the preorder: opens are the up-sets.
    pub fn to_topology(&self) -> FiniteTopology {
        let u = Universe::Finite(self.n);
        let mut opens = Vec::new();
        'mask: for mask in 0u64..(1 << self.n) {
            for i in 0..self.n {
                if mask >> i & 1 == 1 && u64::from(self.rows[i]) & !mask != 0 {
                    continue 'mask;
                }
            }
            opens.push(Subset::from_mask(u, mask));
        }
        // up-sets always contain ∅ and X and are closed under ∪ and ∩
        topology_from_opens(u, opens).expect("up-set family is a topology")
    }
}

/// All preorders on `n` points, in ascending order of their off-diagonal
/// bit pattern.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Preorder>, EnumerateError> {
    if n > ENUMERATION_MAX {
        return Err(EnumerateError::TooLarge {
            got: n,
            max: ENUMERATION_MAX,
        });
    }
    let off_diag = n * n.saturating_sub(1);
    let mut out = Vec::new();
    for pattern in 0u64..(1 << off_diag) {
        let mut rows = vec![0u32; n];
        let mut bit = 0;
        for (i, row) in rows.iter_mut().enumerate() {
            *row |= 1 << i;
            for j in 0..n {
                if i == j {
                    continue;
                }
                if pattern >> bit & 1 == 1 {
                    *row |= 1 << j;
                }
                bit += 1;
            }
        }
        if let Some(p) = Preorder::new(n, rows) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Every topology on `Finite(n)`, exactly once, via the preorder
/// correspondence. Deterministic order.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteTopology>, EnumerateError> {
    Ok(enumerate_preorders(n)?
        .iter()
        .map(Preorder::to_topology)
        .collect())
}

/// Independent reference enumerator: scan all families of subsets of
/// `Finite(n)` and keep the ones that are topologies. Exponential in 2^n;
/// usable for n ≤ 4.
pub fn enumerate_topologies_by_family_scan(
    n: usize,
) -> Result<Vec<FiniteTopology>, EnumerateError> {
    if n > FAMILY_ORACLE_MAX {
        return Err(EnumerateError::TooLarge {
            got: n,
            max: FAMILY_ORACLE_MAX,
        });
    }
    let u = Universe::Finite(n);
    let subset_count = 1usize << n;
    let whole = (1u64 << n) - 1;
    let mut out = Vec::new();
    'family: for fam in 0u64..(1 << subset_count) {
        // ∅ is subset id 0; X is subset id 2^n - 1
        if fam & 1 == 0 || fam >> whole & 1 == 0 {
            continue;
        }
        let members: Vec<u64> = (0..subset_count as u64).filter(|&s| fam >> s & 1 == 1).collect();
        for (ai, &a) in members.iter().enumerate() {
            for &b in &members[ai + 1..] {
                if fam >> (a | b) & 1 == 0 || fam >> (a & b) & 1 == 0 {
                    continue 'family;
                }
            }
        }
        let opens = members.iter().map(|&m| Subset::from_mask(u, m)).collect();
        out.push(topology_from_opens(u, opens).expect("scan emits closed families"));
    }
    Ok(out)
}

/// Specialization preorder of a finite topology: `a ≤ b` when every open
/// containing `a` contains `b`. Inverse of [`Preorder::to_topology`].
pub fn specialization_preorder(t: &FiniteTopology) -> Preorder {
    let n = t.point_count();
    let masks = t.open_masks();
    let mut rows = vec![0u32; n];
    for (a, row) in rows.iter_mut().enumerate() {
        for b in 0..n {
            if masks
                .iter()
                .all(|&m| m >> a & 1 == 0 || m >> b & 1 == 1)
            {
                *row |= 1 << b;
            }
        }
    }
    Preorder { n, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts_match_a000798() {
        for (n, expect) in [(0usize, 1usize), (1, 1), (2, 4), (3, 29), (4, 355)] {
            assert_eq!(enumerate_preorders(n).unwrap().len(), expect, "n = {n}");
        }
    }

    #[test]
    fn topology_count_matches_family_scan_small() {
        for n in 0..=3 {
            let fast = enumerate_topologies(n).unwrap();
            let scan = enumerate_topologies_by_family_scan(n).unwrap();
            assert_eq!(fast.len(), scan.len(), "count at n = {n}");
            let mut fast_keys: Vec<Vec<u64>> =
                fast.iter().map(FiniteTopology::open_masks).collect();
            let mut scan_keys: Vec<Vec<u64>> =
                scan.iter().map(FiniteTopology::open_masks).collect();
            fast_keys.sort();
            scan_keys.sort();
            assert_eq!(fast_keys, scan_keys, "families at n = {n}");
        }
    }

    #[test]
    fn n_too_large_is_rejected() {
        assert!(enumerate_topologies(6).is_err());
        assert!(enumerate_topologies_by_family_scan(5).is_err());
    }

    #[test]
    fn specialization_round_trips() {
        for p in enumerate_preorders(3).unwrap() {
            let t = p.to_topology();
            assert_eq!(specialization_preorder(&t), p);
        }
    }
}
