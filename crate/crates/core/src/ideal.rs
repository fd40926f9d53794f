//! Ideals of the subset ring, Boolean subrings, Spec, and the Stone map.
//!
//! Every finitely generated ideal of the subset ring is principal with
//! support the union of the generators, so ideals are stored as a single
//! support set. Finite Boolean subrings are stored as the partition of the
//! ground set into their atoms; the subring's elements are exactly the
//! unions of blocks.

use std::fmt;

use thiserror::Error;

use crate::set::{complement, intersect, sym_diff, union, SetError, Subset};
use crate::topo::{
    is_continuous, quasi_components, topology_from_opens, FiniteTopology, Topology,
    TopologyError,
};
use crate::universe::{Point, PointMap, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: Universe, right: Universe },
    #[error("point {point} is not a member of {universe}")]
    PointOutOfRange { universe: Universe, point: Point },
    #[error("{0} has no Fréchet ideal (it is not countable)")]
    NotCountableUniverse(Universe),
    #[error("operation needs a finite universe, got {0}")]
    NotFiniteUniverse(Universe),
    #[error("no principal restriction: the ideal is {0}")]
    NotPrincipal(String),
    #[error("blocks do not form a partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// A finitely generated ideal of the subset ring in canonical form: the
/// full power set of its support. Membership is containment in the
/// support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeal {
    support: Subset,
}

impl PrincipalIdeal {
    pub fn from_support(support: Subset) -> Self {
        PrincipalIdeal { support }
    }

    pub fn zero(u: Universe) -> Self {
        PrincipalIdeal {
            support: Subset::empty(u),
        }
    }

    pub fn universe(&self) -> Universe {
        self.support.universe()
    }

    pub fn support(&self) -> &Subset {
        &self.support
    }

    pub fn contains(&self, s: &Subset) -> Result<bool, IdealError> {
        Ok(s.is_subset_of(&self.support)?)
    }

    pub fn is_proper(&self) -> bool {
        !self.support.is_whole()
    }

    /// Maximal exactly when the support misses a single point.
    pub fn is_maximal(&self) -> bool {
        complement(&self.support).len() == Some(1)
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.support)
    }
}

/// The ideal generated by finitely many subsets: the power set of their
/// union.
pub fn ideal_from_generators(
    u: Universe,
    gens: &[Subset],
) -> Result<PrincipalIdeal, IdealError> {
    let mut support = Subset::empty(u);
    for g in gens {
        if g.universe() != u {
            return Err(IdealError::UniverseMismatch {
                left: u,
                right: g.universe(),
            });
        }
        support = union(&support, g)?;
    }
    Ok(PrincipalIdeal { support })
}

/// The single idempotent generating the same ideal as the pair: in
/// characteristic 2, `f1 + f2 + f1·f2`, which is the union.
pub fn pair_generator(f1: &Subset, f2: &Subset) -> Result<Subset, IdealError> {
    let s = sym_diff(f1, f2)?;
    Ok(sym_diff(&s, &intersect(f1, f2)?)?)
}

/// Ideal sum; proper unless the supports cover the universe.
pub fn ideal_sum(i: &PrincipalIdeal, j: &PrincipalIdeal) -> Result<PrincipalIdeal, IdealError> {
    if i.universe() != j.universe() {
        return Err(IdealError::UniverseMismatch {
            left: i.universe(),
            right: j.universe(),
        });
    }
    Ok(PrincipalIdeal {
        support: union(&i.support, &j.support)?,
    })
}

/// A maximal ideal of the subset ring, to the extent one can be named
/// constructively: the principal ideal of all sets missing a point, or
/// (over a countable universe) any maximal ideal containing every finite
/// set. Members of the latter class are indistinguishable on the
/// finite/cofinite algebra, so they are represented once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalIdeal {
    universe: Universe,
    kind: MaximalIdealKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalIdealKind {
    /// All subsets missing the point.
    Principal(Point),
    /// Any maximal ideal containing all finite sets.
    Frechet,
}

impl MaximalIdeal {
    pub fn frechet(u: Universe) -> Result<Self, IdealError> {
        if u.is_finite() {
            return Err(IdealError::NotCountableUniverse(u));
        }
        Ok(MaximalIdeal {
            universe: u,
            kind: MaximalIdealKind::Frechet,
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn kind(&self) -> MaximalIdealKind {
        self.kind
    }

    pub fn point(&self) -> Option<Point> {
        match self.kind {
            MaximalIdealKind::Principal(p) => Some(p),
            MaximalIdealKind::Frechet => None,
        }
    }

    /// Ideal membership, decided on the finite/cofinite algebra: a set is
    /// in the Fréchet class exactly when it is finite.
    pub fn contains(&self, s: &Subset) -> Result<bool, IdealError> {
        if s.universe() != self.universe {
            return Err(IdealError::UniverseMismatch {
                left: self.universe,
                right: s.universe(),
            });
        }
        Ok(match self.kind {
            MaximalIdealKind::Principal(x) => !s.contains(x),
            MaximalIdealKind::Frechet => s.is_finite_set(),
        })
    }

    /// The dual ultrafilter view: `s` is in the ultrafilter exactly when
    /// it is not in the ideal.
    pub fn in_dual_ultrafilter(&self, s: &Subset) -> Result<bool, IdealError> {
        Ok(!self.contains(s)?)
    }

    pub fn describe(&self) -> String {
        match self.kind {
            MaximalIdealKind::Principal(p) => format!("m_{p}"),
            MaximalIdealKind::Frechet => "frechet".to_string(),
        }
    }
}

impl fmt::Display for MaximalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// The maximal ideal of all subsets missing `x`.
pub fn maximal_ideal_at(u: Universe, x: Point) -> Result<MaximalIdeal, IdealError> {
    if !u.contains(x) {
        return Err(IdealError::PointOutOfRange { universe: u, point: x });
    }
    Ok(MaximalIdeal {
        universe: u,
        kind: MaximalIdealKind::Principal(x),
    })
}

/// Maximal ideals of the subset ring of `u`.
#[derive(Debug, Clone)]
pub struct MaximalIdealFamily {
    pub ideals: Vec<MaximalIdeal>,
    /// For finite universes the listing is complete (every maximal ideal is
    /// principal). For countable ones it is the principal family up to a
    /// cutoff plus the Fréchet class, which does not exhaust the ring's
    /// maximal ideals; it does exhaust their convergence behavior on the
    /// supported symbolic topologies.
    pub exhaustive: bool,
}

pub fn enumerate_maximal_ideals(u: Universe, cutoff: usize) -> MaximalIdealFamily {
    match u {
        Universe::Finite(n) => MaximalIdealFamily {
            ideals: (0..n)
                .map(|x| maximal_ideal_at(u, Point::Nat(x)).expect("label in range"))
                .collect(),
            exhaustive: true,
        },
        Universe::Countable { infinity } => {
            let mut ideals: Vec<MaximalIdeal> = (0..cutoff)
                .map(|x| maximal_ideal_at(u, Point::Nat(x)).expect("label in range"))
                .collect();
            if infinity {
                ideals.push(maximal_ideal_at(u, Point::Infinity).expect("infinity in range"));
            }
            ideals.push(MaximalIdeal::frechet(u).expect("countable universe"));
            MaximalIdealFamily {
                ideals,
                exhaustive: false,
            }
        }
    }
}

/// A finite Boolean subring of the subset ring, stored as its atom
/// partition: blocks are disjoint, nonempty, cover the ground set, and the
/// subring's elements are exactly the unions of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanSubring {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl BooleanSubring {
    /// The subring generated by the given sets (together with ∅ and X):
    /// its atoms are the nonempty classes of the common-refinement
    /// partition, points grouped by generator membership signature.
    pub fn generated(u: Universe, gens: &[Subset]) -> Result<Self, IdealError> {
        let n = u
            .size()
            .ok_or(IdealError::NotFiniteUniverse(u))?;
        for g in gens {
            if g.universe() != u {
                return Err(IdealError::UniverseMismatch {
                    left: u,
                    right: g.universe(),
                });
            }
        }
        let mut groups: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
        for p in 0..n {
            let sig: Vec<bool> = gens.iter().map(|g| g.contains(Point::Nat(p))).collect();
            match groups.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => members.push(p),
                None => groups.push((sig, vec![p])),
            }
        }
        let mut blocks: Vec<Subset> = groups
            .into_iter()
            .map(|(_, members)| Subset::from_labels(u, members).expect("labels in range"))
            .collect();
        blocks.sort_by_key(|b| b.iter_points().first().map(|p| p.expect_nat()));
        Ok(BooleanSubring { universe: u, blocks })
    }

    /// The smallest subring, {∅, X}.
    pub fn indiscrete(u: Universe) -> Result<Self, IdealError> {
        BooleanSubring::generated(u, &[])
    }

    /// The full subset ring, atoms all singletons.
    pub fn full(u: Universe) -> Result<Self, IdealError> {
        let n = u.size().ok_or(IdealError::NotFiniteUniverse(u))?;
        let gens: Vec<Subset> = (0..n)
            .map(|p| Subset::from_labels(u, [p]).expect("label in range"))
            .collect();
        BooleanSubring::generated(u, &gens)
    }

    /// A subring directly from its partition, validated.
    pub fn from_blocks(u: Universe, blocks: Vec<Subset>) -> Result<Self, IdealError> {
        if !u.is_finite() {
            return Err(IdealError::NotFiniteUniverse(u));
        }
        let mut seen = Subset::empty(u);
        for b in &blocks {
            if b.universe() != u {
                return Err(IdealError::UniverseMismatch {
                    left: u,
                    right: b.universe(),
                });
            }
            if b.is_empty() {
                return Err(IdealError::InvalidPartition("empty block".to_string()));
            }
            if !intersect(&seen, b)?.is_empty() {
                return Err(IdealError::InvalidPartition(format!(
                    "block {b} overlaps an earlier one"
                )));
            }
            seen = union(&seen, b)?;
        }
        if !seen.is_whole() {
            return Err(IdealError::InvalidPartition(
                "blocks do not cover the ground set".to_string(),
            ));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.iter_points().first().map(|p| p.expect_nat()));
        Ok(BooleanSubring { universe: u, blocks })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, p: Point) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(p))
    }

    /// Ring membership: the set is a union of blocks.
    pub fn contains_element(&self, s: &Subset) -> Result<bool, IdealError> {
        if s.universe() != self.universe {
            return Err(IdealError::UniverseMismatch {
                left: self.universe,
                right: s.universe(),
            });
        }
        for b in &self.blocks {
            let meet = intersect(b, s)?;
            if !meet.is_empty() && meet != *b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All 2^k elements, in block-mask order.
    pub fn elements(&self) -> Vec<Subset> {
        let k = self.blocks.len();
        assert!(k <= 20, "element listing capped at 20 atoms");
        (0..(1u64 << k))
            .map(|mask| {
                let mut acc = Subset::empty(self.universe);
                for (i, b) in self.blocks.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc = union(&acc, b).expect("same universe");
                    }
                }
                acc
            })
            .collect()
    }

    /// `self` is a subring of `other` when every element of `self` is an
    /// element of `other`, i.e. other's partition refines this one.
    pub fn is_subring_of(&self, other: &BooleanSubring) -> bool {
        if self.universe != other.universe {
            return false;
        }
        other.blocks.iter().all(|fine| {
            self.blocks
                .iter()
                .any(|coarse| fine.is_subset_of(coarse).unwrap_or(false))
        })
    }

    /// The join: the smallest subring containing both, with the common
    /// refinement as its partition.
    pub fn join(&self, other: &BooleanSubring) -> Result<BooleanSubring, IdealError> {
        if self.universe != other.universe {
            return Err(IdealError::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        let mut gens = self.blocks.clone();
        gens.extend_from_slice(&other.blocks);
        BooleanSubring::generated(self.universe, &gens)
    }
}

impl fmt::Display for BooleanSubring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subring[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Spec of a finite Boolean subring: one point per atom, carrying the
/// topology generated by the basic opens `D(f) = {p : f ∉ p}`.
#[derive(Debug, Clone)]
pub struct SpecSpace {
    pub ring: BooleanSubring,
    pub topology: FiniteTopology,
}

impl SpecSpace {
    pub fn point_count(&self) -> usize {
        self.ring.block_count()
    }

    /// `D(f)` as a subset of the Spec point labels: the points (blocks)
    /// whose maximal ideal does not contain `f`, i.e. the blocks inside
    /// `f`.
    pub fn d_of(&self, f: &Subset) -> Result<Subset, IdealError> {
        let k = self.ring.block_count();
        let labels = self
            .ring
            .blocks()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_subset_of(f).unwrap_or(false))
            .map(|(i, _)| i);
        Ok(Subset::from_labels(Universe::Finite(k), labels).expect("labels in range"))
    }

    /// The maximal ideal at a Spec point, viewed inside the ambient subset
    /// ring: the principal ideal of sets avoiding the block.
    pub fn point_ideal(&self, index: usize) -> PrincipalIdeal {
        PrincipalIdeal::from_support(complement(&self.ring.blocks()[index]))
    }
}

/// Build Spec with its `D(f)` topology; discrete for finite rings.
pub fn spec(r: &BooleanSubring) -> SpecSpace {
    let k = r.block_count();
    let u = Universe::Finite(k);
    let opens: Vec<Subset> = r
        .elements()
        .iter()
        .map(|f| {
            let labels = r
                .blocks()
                .iter()
                .enumerate()
                .filter(|(_, b)| b.is_subset_of(f).unwrap_or(false))
                .map(|(i, _)| i);
            Subset::from_labels(u, labels).expect("labels in range")
        })
        .collect();
    let topology = topology_from_opens(u, opens).expect("D(f) family is a topology");
    SpecSpace {
        ring: r.clone(),
        topology,
    }
}

/// Contract a principal maximal ideal of the ambient ring to a Spec point
/// of the subring: the block containing the point.
pub fn restrict_maximal(m: &MaximalIdeal, r: &BooleanSubring) -> Result<usize, IdealError> {
    if m.universe() != r.universe() {
        return Err(IdealError::UniverseMismatch {
            left: m.universe(),
            right: r.universe(),
        });
    }
    match m.kind() {
        MaximalIdealKind::Principal(x) => r
            .block_of(x)
            .ok_or(IdealError::PointOutOfRange {
                universe: r.universe(),
                point: x,
            }),
        MaximalIdealKind::Frechet => Err(IdealError::NotPrincipal("frechet".to_string())),
    }
}

/// The ring of clopen sets of a finite space, as a subring with the
/// quasi-components as atoms.
pub fn clop_ring(t: &FiniteTopology) -> BooleanSubring {
    BooleanSubring {
        universe: t.universe(),
        blocks: quasi_components(t),
    }
}

/// The Stone comparison map `x ↦ m_x ∩ Clop(X)` into Spec(Clop(X)), with
/// its homeomorphism verdict.
#[derive(Debug, Clone)]
pub struct StoneMap {
    pub map: PointMap,
    pub spec: SpecSpace,
    pub bijective: bool,
    pub continuous: bool,
    pub closed: bool,
}

impl StoneMap {
    pub fn homeomorphism(&self) -> bool {
        self.bijective && self.continuous && self.closed
    }
}

pub fn stone_map(t: &FiniteTopology) -> Result<StoneMap, IdealError> {
    let ring = clop_ring(t);
    let sp = spec(&ring);
    let n = t.point_count();
    let k = ring.block_count();
    let table: Vec<Point> = (0..n)
        .map(|x| {
            Point::Nat(
                ring.block_of(Point::Nat(x))
                    .expect("blocks cover the ground set"),
            )
        })
        .collect();
    let map = PointMap::table(t.universe(), Universe::Finite(k), table)
        .expect("valid stone table");

    let bijective = n == k; // surjective by construction; injective iff sizes match
    let continuous = is_continuous(
        &map,
        &Topology::Finite(t.clone()),
        &Topology::Finite(sp.topology.clone()),
    )?;
    let mut closed = true;
    'outer: for open in t.opens() {
        let c = complement(open);
        // image of the closed set c
        let img_labels: Vec<usize> = ring
            .blocks()
            .iter()
            .enumerate()
            .filter(|(_, b)| !intersect(b, &c).map(|m| m.is_empty()).unwrap_or(true))
            .map(|(i, _)| i)
            .collect();
        let img = Subset::from_labels(Universe::Finite(k), img_labels).expect("labels in range");
        if !sp.topology.is_closed(&img) {
            closed = false;
            break 'outer;
        }
    }
    Ok(StoneMap {
        map,
        spec: sp,
        bijective,
        continuous,
        closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::{clopens, topology_from_subbasis};

    fn fin(n: usize, labels: &[usize]) -> Subset {
        Subset::from_labels(Universe::Finite(n), labels.iter().copied()).unwrap()
    }

    /// Brute-force span of a generator list: all sums of multiples.
    fn span(u: Universe, gens: &[Subset]) -> Vec<Subset> {
        let n = u.size().unwrap();
        let all: Vec<Subset> = (0..(1u64 << n)).map(|m| Subset::from_mask(u, m)).collect();
        let mut members = vec![Subset::empty(u)];
        // closure of {r·g} under addition reaches every Σ r_i·g_i
        let mut frontier = vec![Subset::empty(u)];
        while let Some(cur) = frontier.pop() {
            for g in gens {
                for r in &all {
                    let next = sym_diff(&cur, &intersect(r, g).unwrap()).unwrap();
                    if !members.contains(&next) {
                        members.push(next.clone());
                        frontier.push(next);
                    }
                }
            }
        }
        members.sort();
        members
    }

    #[test]
    fn ideal_from_generators_matches_span() {
        let u = Universe::Finite(3);
        let gens = vec![fin(3, &[0]), fin(3, &[1])];
        let ideal = ideal_from_generators(u, &gens).unwrap();
        assert_eq!(ideal.support(), &fin(3, &[0, 1]));
        let spanned = span(u, &gens);
        for s in (0..8u64).map(|m| Subset::from_mask(u, m)) {
            assert_eq!(
                ideal.contains(&s).unwrap(),
                spanned.binary_search(&s).is_ok(),
                "membership of {s}"
            );
        }
    }

    #[test]
    fn empty_generators_give_zero_ideal() {
        let u = Universe::Finite(3);
        let ideal = ideal_from_generators(u, &[]).unwrap();
        assert_eq!(ideal.support(), &Subset::empty(u));
        assert!(ideal.is_proper());
    }

    #[test]
    fn covering_generators_give_improper_ideal() {
        let u = Universe::Finite(3);
        let ideal = ideal_from_generators(u, &[fin(3, &[0, 1]), fin(3, &[1, 2])]).unwrap();
        assert!(!ideal.is_proper());
        assert_eq!(ideal.support(), &Subset::whole(u));
    }

    #[test]
    fn pair_generator_is_union_and_generates_same_ideal() {
        let u = Universe::Finite(3);
        let f1 = fin(3, &[0, 1]);
        let f2 = fin(3, &[1, 2]);
        let g = pair_generator(&f1, &f2).unwrap();
        assert_eq!(g, fin(3, &[0, 1, 2]));
        assert_eq!(
            span(u, &[f1.clone(), f2.clone()]),
            span(u, std::slice::from_ref(&g))
        );
        assert_eq!(pair_generator(&Subset::empty(u), &f1).unwrap(), f1);
        assert_eq!(pair_generator(&f1, &f1).unwrap(), f1);
    }

    #[test]
    fn ideal_sum_examples() {
        let u = Universe::Finite(3);
        let i = PrincipalIdeal::from_support(fin(3, &[0]));
        let j = PrincipalIdeal::from_support(fin(3, &[1, 2]));
        let s = ideal_sum(&i, &j).unwrap();
        assert!(!s.is_proper());
        let z = PrincipalIdeal::zero(u);
        assert_eq!(ideal_sum(&i, &z).unwrap(), i);
        let k = PrincipalIdeal::from_support(fin(3, &[1]));
        let m = PrincipalIdeal::from_support(fin(3, &[0, 1]));
        assert_eq!(ideal_sum(&m, &k).unwrap(), m);
    }

    #[test]
    fn maximal_ideal_membership() {
        let u = Universe::Finite(2);
        let m0 = maximal_ideal_at(u, Point::Nat(0)).unwrap();
        assert!(m0.contains(&fin(2, &[1])).unwrap());
        assert!(m0.contains(&Subset::empty(u)).unwrap());
        assert!(!m0.contains(&fin(2, &[0, 1])).unwrap());
        assert!(maximal_ideal_at(u, Point::Nat(2)).is_err());

        let m5 = maximal_ideal_at(Universe::NAT, Point::Nat(5)).unwrap();
        let cof5 = Subset::cofinite(Universe::NAT, [Point::Nat(5)]).unwrap();
        assert!(m5.contains(&cof5).unwrap());
    }

    #[test]
    fn frechet_membership_is_the_finiteness_tag() {
        let fr = MaximalIdeal::frechet(Universe::NAT).unwrap();
        assert!(fr.contains(&Subset::from_labels(Universe::NAT, [0, 7]).unwrap()).unwrap());
        assert!(!fr
            .contains(&Subset::cofinite(Universe::NAT, [Point::Nat(0)]).unwrap())
            .unwrap());
        assert!(!fr.contains(&Subset::whole(Universe::NAT)).unwrap());
        assert!(MaximalIdeal::frechet(Universe::Finite(2)).is_err());
    }

    #[test]
    fn enumerate_ideals_finite_and_countable() {
        let fam = enumerate_maximal_ideals(Universe::Finite(3), 0);
        assert!(fam.exhaustive);
        assert_eq!(
            fam.ideals.iter().map(|m| m.describe()).collect::<Vec<_>>(),
            vec!["m_0", "m_1", "m_2"]
        );

        let fam = enumerate_maximal_ideals(Universe::NAT, 2);
        assert!(!fam.exhaustive);
        assert_eq!(
            fam.ideals.iter().map(|m| m.describe()).collect::<Vec<_>>(),
            vec!["m_0", "m_1", "frechet"]
        );

        let fam = enumerate_maximal_ideals(Universe::NAT_INFINITY, 1);
        assert_eq!(
            fam.ideals.iter().map(|m| m.describe()).collect::<Vec<_>>(),
            vec!["m_0", "m_inf", "frechet"]
        );
    }

    /// Brute-force closure of a generating set under + and ·.
    fn ring_closure(u: Universe, gens: &[Subset]) -> Vec<Subset> {
        let mut elems = vec![Subset::empty(u), Subset::whole(u)];
        elems.extend_from_slice(gens);
        elems.sort();
        elems.dedup();
        loop {
            let mut grew = false;
            let snapshot = elems.clone();
            for a in &snapshot {
                for b in &snapshot {
                    for c in [sym_diff(a, b).unwrap(), intersect(a, b).unwrap()] {
                        if elems.binary_search(&c).is_err() {
                            let pos = elems.binary_search(&c).unwrap_err();
                            elems.insert(pos, c);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return elems;
            }
        }
    }

    #[test]
    fn subring_generated_matches_ring_closure() {
        let u = Universe::Finite(4);
        let gens = vec![fin(4, &[0, 1]), fin(4, &[2])];
        let r = BooleanSubring::generated(u, &gens).unwrap();
        assert_eq!(
            r.blocks(),
            &[fin(4, &[0, 1]), fin(4, &[2]), fin(4, &[3])]
        );
        let mut elements = r.elements();
        elements.sort();
        assert_eq!(elements.len(), 8);
        assert_eq!(elements, ring_closure(u, &gens));
    }

    #[test]
    fn subring_edge_cases() {
        let u = Universe::Finite(3);
        let trivial = BooleanSubring::generated(u, &[]).unwrap();
        assert_eq!(trivial.blocks(), &[Subset::whole(u)]);
        assert_eq!(trivial.elements().len(), 2);

        let full = BooleanSubring::full(u).unwrap();
        assert_eq!(full.block_count(), 3);
        assert_eq!(full.elements().len(), 8);
    }

    #[test]
    fn subring_join_is_common_refinement() {
        let u = Universe::Finite(3);
        let a = BooleanSubring::generated(u, &[fin(3, &[0, 1])]).unwrap();
        let b = BooleanSubring::generated(u, &[fin(3, &[0])]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j, BooleanSubring::full(u).unwrap());
        assert_eq!(a.join(&a).unwrap(), a);
        let bottom = BooleanSubring::indiscrete(u).unwrap();
        assert_eq!(a.join(&bottom).unwrap(), a);
        assert!(a.is_subring_of(&j));
        assert!(b.is_subring_of(&j));
    }

    #[test]
    fn spec_is_discrete_with_one_point_per_block() {
        let u = Universe::Finite(4);
        let r = BooleanSubring::generated(u, &[fin(4, &[0, 1]), fin(4, &[2])]).unwrap();
        let sp = spec(&r);
        assert_eq!(sp.point_count(), 3);
        assert!(sp.topology.is_discrete());

        let one = BooleanSubring::indiscrete(Universe::Finite(2)).unwrap();
        assert_eq!(spec(&one).point_count(), 1);

        let full = BooleanSubring::full(Universe::Finite(2)).unwrap();
        assert_eq!(spec(&full).point_count(), 2);
    }

    #[test]
    fn d_respects_multiplication() {
        let u = Universe::Finite(4);
        let r = BooleanSubring::generated(u, &[fin(4, &[0, 1]), fin(4, &[2])]).unwrap();
        let sp = spec(&r);
        for f in r.elements() {
            for g in r.elements() {
                let lhs = sp.d_of(&intersect(&f, &g).unwrap()).unwrap();
                let rhs = intersect(&sp.d_of(&f).unwrap(), &sp.d_of(&g).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn restrict_maximal_examples() {
        let u = Universe::Finite(3);
        let r = BooleanSubring::generated(u, &[fin(3, &[0, 1])]).unwrap();
        let m1 = maximal_ideal_at(u, Point::Nat(1)).unwrap();
        let idx = restrict_maximal(&m1, &r).unwrap();
        assert_eq!(r.blocks()[idx], fin(3, &[0, 1]));
        let m2 = maximal_ideal_at(u, Point::Nat(2)).unwrap();
        let idx = restrict_maximal(&m2, &r).unwrap();
        assert_eq!(r.blocks()[idx], fin(3, &[2]));

        // element-wise contraction agrees: M ∩ R = elements of R avoiding the block
        for m in [&m1, &m2] {
            let idx = restrict_maximal(m, &r).unwrap();
            let contracted: Vec<Subset> = r
                .elements()
                .into_iter()
                .filter(|f| m.contains(f).unwrap())
                .collect();
            let block_ideal: Vec<Subset> = r
                .elements()
                .into_iter()
                .filter(|f| spec(&r).point_ideal(idx).contains(f).unwrap())
                .collect();
            assert_eq!(contracted, block_ideal);
        }

        let bottom = BooleanSubring::indiscrete(u).unwrap();
        assert_eq!(restrict_maximal(&m1, &bottom).unwrap(), 0);
    }

    #[test]
    fn clop_ring_examples() {
        // Sierpiński: only ∅ and X are clopen
        let s = FiniteTopology::sierpinski();
        let r = clop_ring(&s);
        assert_eq!(r.blocks(), &[Subset::whole(Universe::Finite(2))]);
        let mut elems = r.elements();
        elems.sort();
        let mut clp = clopens(&s);
        clp.sort();
        assert_eq!(elems, clp);

        let d3 = FiniteTopology::discrete(3);
        assert_eq!(clop_ring(&d3).block_count(), 3);

        // disjoint union of two Sierpiński pairs
        let u = Universe::Finite(4);
        let t = topology_from_subbasis(
            u,
            &[fin(4, &[1]), fin(4, &[3]), fin(4, &[0, 1]), fin(4, &[2, 3])],
        )
        .unwrap();
        let r = clop_ring(&t);
        assert_eq!(r.blocks(), &[fin(4, &[0, 1]), fin(4, &[2, 3])]);
        let mut elems = r.elements();
        elems.sort();
        let mut clp = clopens(&t);
        clp.sort();
        assert_eq!(elems, clp);
    }

    #[test]
    fn stone_map_verdicts() {
        let d3 = FiniteTopology::discrete(3);
        let st = stone_map(&d3).unwrap();
        assert!(st.bijective && st.continuous && st.closed);
        assert!(st.homeomorphism());
        assert_eq!(st.spec.point_count(), 3);

        let s = FiniteTopology::sierpinski();
        let st = stone_map(&s).unwrap();
        assert_eq!(st.spec.point_count(), 1);
        assert!(!st.bijective);
        assert!(!st.homeomorphism());

        let ind = FiniteTopology::indiscrete(2);
        let st = stone_map(&ind).unwrap();
        assert!(!st.homeomorphism());
    }
}
