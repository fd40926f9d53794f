//! Finite topological spaces and three named infinite ones.
//!
//! Finite topologies are explicit open families, validated and kept in a
//! canonical sorted form. Infinite spaces are a closed enumeration of three
//! symbolic topologies (discrete ℕ, cofinite ℕ, and the one-point
//! compactification of discrete ℕ) whose open-set predicate and
//! neighborhood bases live inside the finite/cofinite algebra, so every
//! question asked of them is decidable.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::set::{
    complement, difference, intersect, preimage_hom, union, SetError, Subset,
};
use crate::universe::{MapRule, Point, PointMap, Universe};

/// Largest open family any constructor will materialize.
const OPENS_CAP: usize = 1 << 20;
/// Largest ground set the brute-force connectivity oracle will scan.
pub const CONNECTIVITY_ORACLE_MAX: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("open families need a finite universe, got {0}")]
    NotFiniteUniverse(Universe),
    #[error("subset over {got} cannot belong to a topology over {expected}")]
    UniverseMismatch { expected: Universe, got: Universe },
    #[error("open family must contain the empty set and the whole set")]
    MissingEmptyOrWhole,
    #[error("family is not closed under union: {left} ∪ {right} is missing")]
    NotClosedUnderUnion { left: Subset, right: Subset },
    #[error("family is not closed under intersection: {left} ∩ {right} is missing")]
    NotClosedUnderIntersection { left: Subset, right: Subset },
    #[error("construction would exceed the size cap ({0} elements)")]
    SizeOverflow(usize),
    #[error("operation undecidable for {0} (outside the finite/cofinite algebra)")]
    Undecidable(String),
    #[error("operation needs a finite topology, got a symbolic one")]
    NeedsFinite,
    #[error("continuity is not decidable for this domain/codomain pairing")]
    ContinuityUnsupported,
    #[error(transparent)]
    Set(#[from] SetError),
}

/// A validated finite topology: a canonical open family containing the
/// empty and whole sets and closed under union and intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    universe: Universe,
    opens: Vec<Subset>,
}

impl FiniteTopology {
    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn point_count(&self) -> usize {
        self.universe.size().expect("finite topology")
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, a: &Subset) -> bool {
        self.opens.binary_search(a).is_ok()
    }

    pub fn is_closed(&self, a: &Subset) -> bool {
        self.is_open(&complement(a))
    }

    /// Open sets as masks; ground sets are at most 64 points.
    pub fn open_masks(&self) -> Vec<u64> {
        self.opens.iter().map(Subset::mask).collect()
    }

    pub fn discrete(n: usize) -> FiniteTopology {
        let u = Universe::Finite(n);
        assert!(n <= 20, "explicit discrete topology capped at 20 points");
        let opens = (0..(1u64 << n)).map(|m| Subset::from_mask(u, m)).collect();
        FiniteTopology { universe: u, opens }
    }

    pub fn indiscrete(n: usize) -> FiniteTopology {
        let u = Universe::Finite(n);
        let mut opens = vec![Subset::empty(u), Subset::whole(u)];
        opens.sort();
        opens.dedup();
        FiniteTopology { universe: u, opens }
    }

    /// The two-point space with opens ∅, {1}, X.
    pub fn sierpinski() -> FiniteTopology {
        let u = Universe::Finite(2);
        topology_from_opens(
            u,
            vec![
                Subset::empty(u),
                Subset::from_labels(u, [1]).unwrap(),
                Subset::whole(u),
            ],
        )
        .unwrap()
    }

    pub fn is_discrete(&self) -> bool {
        let n = self.point_count();
        // no representable open family reaches 2^64 members
        n < 64 && self.opens.len() == (1usize << n)
    }
}

/// The three named infinite spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolicSpace {
    /// ℕ with the discrete topology.
    DiscreteNat,
    /// ℕ with the cofinite topology: opens are ∅ and the cofinite sets.
    CofiniteNat,
    /// ℕ ∪ {∞} where every subset of ℕ is open and the neighborhoods of ∞
    /// are the cofinite sets containing it.
    OnePointCompactification,
}

impl SymbolicSpace {
    pub fn universe(&self) -> Universe {
        match self {
            SymbolicSpace::DiscreteNat | SymbolicSpace::CofiniteNat => Universe::NAT,
            SymbolicSpace::OnePointCompactification => Universe::NAT_INFINITY,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SymbolicSpace::DiscreteNat => "discrete-nat",
            SymbolicSpace::CofiniteNat => "cofinite-nat",
            SymbolicSpace::OnePointCompactification => "one-point",
        }
    }

    pub fn is_open(&self, a: &Subset) -> Result<bool, TopologyError> {
        if a.universe() != self.universe() {
            return Err(TopologyError::UniverseMismatch {
                expected: self.universe(),
                got: a.universe(),
            });
        }
        Ok(match self {
            SymbolicSpace::DiscreteNat => true,
            SymbolicSpace::CofiniteNat => a.is_empty() || !a.is_finite_set(),
            SymbolicSpace::OnePointCompactification => {
                !a.contains(Point::Infinity) || !a.is_finite_set()
            }
        })
    }
}

impl fmt::Display for SymbolicSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A topological space: an explicit finite one or a named symbolic one.
#[derive(Debug, Clone, PartialEq)]
pub enum Topology {
    Finite(FiniteTopology),
    Symbolic(SymbolicSpace),
}

impl Topology {
    pub fn universe(&self) -> Universe {
        match self {
            Topology::Finite(t) => t.universe(),
            Topology::Symbolic(s) => s.universe(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteTopology> {
        match self {
            Topology::Finite(t) => Some(t),
            Topology::Symbolic(_) => None,
        }
    }

    pub fn expect_finite(&self) -> Result<&FiniteTopology, TopologyError> {
        self.as_finite().ok_or(TopologyError::NeedsFinite)
    }

    pub fn is_open(&self, a: &Subset) -> Result<bool, TopologyError> {
        match self {
            Topology::Finite(t) => {
                if a.universe() != t.universe() {
                    return Err(TopologyError::UniverseMismatch {
                        expected: t.universe(),
                        got: a.universe(),
                    });
                }
                Ok(t.is_open(a))
            }
            Topology::Symbolic(s) => s.is_open(a),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Topology::Finite(t) => format!(
                "finite({} points, {} opens)",
                t.point_count(),
                t.opens().len()
            ),
            Topology::Symbolic(s) => s.name().to_string(),
        }
    }
}

impl From<FiniteTopology> for Topology {
    fn from(t: FiniteTopology) -> Self {
        Topology::Finite(t)
    }
}

impl From<SymbolicSpace> for Topology {
    fn from(s: SymbolicSpace) -> Self {
        Topology::Symbolic(s)
    }
}

/// Validate an explicit open family and return it in canonical form.
pub fn topology_from_opens(
    u: Universe,
    opens: Vec<Subset>,
) -> Result<FiniteTopology, TopologyError> {
    if !u.is_finite() {
        return Err(TopologyError::NotFiniteUniverse(u));
    }
    let mut family = opens;
    for s in &family {
        if s.universe() != u {
            return Err(TopologyError::UniverseMismatch {
                expected: u,
                got: s.universe(),
            });
        }
    }
    family.sort();
    family.dedup();
    let empty = Subset::empty(u);
    let whole = Subset::whole(u);
    if family.binary_search(&empty).is_err() || family.binary_search(&whole).is_err() {
        return Err(TopologyError::MissingEmptyOrWhole);
    }
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            let un = union(&family[i], &family[j])?;
            if family.binary_search(&un).is_err() {
                return Err(TopologyError::NotClosedUnderUnion {
                    left: family[i].clone(),
                    right: family[j].clone(),
                });
            }
            let inter = intersect(&family[i], &family[j])?;
            if family.binary_search(&inter).is_err() {
                return Err(TopologyError::NotClosedUnderIntersection {
                    left: family[i].clone(),
                    right: family[j].clone(),
                });
            }
        }
    }
    Ok(FiniteTopology { universe: u, opens: family })
}

/// The smallest topology containing the given subbasis: close under finite
/// intersections (the empty intersection is the whole set), then unions.
pub fn topology_from_subbasis(
    u: Universe,
    subbasis: &[Subset],
) -> Result<FiniteTopology, TopologyError> {
    let n = match u {
        Universe::Finite(n) => n,
        _ => return Err(TopologyError::NotFiniteUniverse(u)),
    };
    assert!(n <= 64, "subbasis closure works on mask-sized ground sets");
    for s in subbasis {
        if s.universe() != u {
            return Err(TopologyError::UniverseMismatch {
                expected: u,
                got: s.universe(),
            });
        }
    }
    let sub_masks: Vec<u64> = subbasis.iter().map(Subset::mask).collect();
    let whole = Subset::whole(u).mask();

    // all finite intersections of subbasis sets
    let mut basis: BTreeSet<u64> = BTreeSet::new();
    basis.insert(whole);
    let mut queue: Vec<u64> = vec![whole];
    while let Some(m) = queue.pop() {
        for &s in &sub_masks {
            let next = m & s;
            if basis.insert(next) {
                if basis.len() > OPENS_CAP {
                    return Err(TopologyError::SizeOverflow(OPENS_CAP));
                }
                queue.push(next);
            }
        }
    }

    // close the basis under unions
    let mut opens: BTreeSet<u64> = basis.clone();
    opens.insert(0);
    let mut queue: Vec<u64> = opens.iter().copied().collect();
    while let Some(m) = queue.pop() {
        for &b in &basis {
            let next = m | b;
            if opens.insert(next) {
                if opens.len() > OPENS_CAP {
                    return Err(TopologyError::SizeOverflow(OPENS_CAP));
                }
                queue.push(next);
            }
        }
    }

    let opens = opens.into_iter().map(|m| Subset::from_mask(u, m)).collect();
    Ok(FiniteTopology { universe: u, opens })
}

/// Smallest closed superset of `a`.
pub fn closure(t: &Topology, a: &Subset) -> Result<Subset, TopologyError> {
    match t {
        Topology::Finite(ft) => {
            if a.universe() != ft.universe() {
                return Err(TopologyError::UniverseMismatch {
                    expected: ft.universe(),
                    got: a.universe(),
                });
            }
            let mut acc = Subset::whole(ft.universe());
            for open in ft.opens() {
                let closed = complement(open);
                if a.is_subset_of(&closed)? {
                    acc = intersect(&acc, &closed)?;
                }
            }
            Ok(acc)
        }
        Topology::Symbolic(s) => {
            if a.universe() != s.universe() {
                return Err(TopologyError::UniverseMismatch {
                    expected: s.universe(),
                    got: a.universe(),
                });
            }
            Ok(match s {
                SymbolicSpace::DiscreteNat => a.clone(),
                SymbolicSpace::CofiniteNat => {
                    if a.is_finite_set() {
                        a.clone()
                    } else {
                        Subset::whole(a.universe())
                    }
                }
                SymbolicSpace::OnePointCompactification => {
                    if a.is_finite_set() || a.contains(Point::Infinity) {
                        a.clone()
                    } else {
                        let inf = Subset::from_points(a.universe(), [Point::Infinity])?;
                        union(a, &inf)?
                    }
                }
            })
        }
    }
}

/// Largest open subset of `a`.
pub fn interior(t: &Topology, a: &Subset) -> Result<Subset, TopologyError> {
    match t {
        Topology::Finite(ft) => {
            if a.universe() != ft.universe() {
                return Err(TopologyError::UniverseMismatch {
                    expected: ft.universe(),
                    got: a.universe(),
                });
            }
            let mut acc = Subset::empty(ft.universe());
            for open in ft.opens() {
                if open.is_subset_of(a)? {
                    acc = union(&acc, open)?;
                }
            }
            Ok(acc)
        }
        Topology::Symbolic(s) => {
            if a.universe() != s.universe() {
                return Err(TopologyError::UniverseMismatch {
                    expected: s.universe(),
                    got: a.universe(),
                });
            }
            Ok(match s {
                SymbolicSpace::DiscreteNat => a.clone(),
                SymbolicSpace::CofiniteNat => {
                    if a.is_finite_set() {
                        Subset::empty(a.universe())
                    } else {
                        a.clone()
                    }
                }
                SymbolicSpace::OnePointCompactification => {
                    if a.is_finite_set() {
                        let inf = Subset::from_points(a.universe(), [Point::Infinity])?;
                        difference(a, &inf)?
                    } else {
                        a.clone()
                    }
                }
            })
        }
    }
}

/// A product of finite spaces with its projection maps.
///
/// Ground labels use mixed-radix encoding with the leftmost factor most
/// significant: for sizes `[n0, n1, n2]`, the tuple `(p0, p1, p2)` encodes
/// as `(p0·n1 + p1)·n2 + p2`.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    pub topology: FiniteTopology,
    pub factor_sizes: Vec<usize>,
    pub projections: Vec<PointMap>,
}

impl ProductSpace {
    pub fn encode(&self, tuple: &[usize]) -> usize {
        encode_mixed_radix(&self.factor_sizes, tuple)
    }

    pub fn decode(&self, label: usize) -> Vec<usize> {
        decode_mixed_radix(&self.factor_sizes, label)
    }
}

pub fn encode_mixed_radix(sizes: &[usize], tuple: &[usize]) -> usize {
    debug_assert_eq!(sizes.len(), tuple.len());
    let mut label = 0;
    for (&n, &p) in sizes.iter().zip(tuple) {
        debug_assert!(p < n);
        label = label * n + p;
    }
    label
}

pub fn decode_mixed_radix(sizes: &[usize], mut label: usize) -> Vec<usize> {
    let mut tuple = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        tuple[i] = label % sizes[i];
        label /= sizes[i];
    }
    tuple
}

/// The product topology of finitely many finite spaces (ground set at most
/// 64 points), generated by preimages of factor opens under projections.
pub fn product(factors: &[&FiniteTopology]) -> Result<ProductSpace, TopologyError> {
    let sizes: Vec<usize> = factors.iter().map(|t| t.point_count()).collect();
    let total = sizes.iter().try_fold(1usize, |acc, &n| {
        acc.checked_mul(n).filter(|&t| t <= 64)
    });
    let total = total.ok_or(TopologyError::SizeOverflow(64))?;
    let u = Universe::Finite(total);

    let mut projections = Vec::with_capacity(factors.len());
    for i in 0..factors.len() {
        let table = (0..total)
            .map(|label| Point::Nat(decode_mixed_radix(&sizes, label)[i]))
            .collect();
        projections.push(
            PointMap::table(u, Universe::Finite(sizes[i]), table).expect("valid projection"),
        );
    }

    let mut subbasis = Vec::new();
    for (i, t) in factors.iter().enumerate() {
        for open in t.opens() {
            subbasis.push(preimage_hom(&projections[i], open)?);
        }
    }
    let topology = topology_from_subbasis(u, &subbasis)?;
    Ok(ProductSpace {
        topology,
        factor_sizes: sizes,
        projections,
    })
}

/// A subspace with its trace back to the ambient space: `points[new]` is
/// the ambient label of subspace point `new`.
#[derive(Debug, Clone)]
pub struct SubspaceView {
    pub topology: FiniteTopology,
    pub points: Vec<usize>,
}

/// The induced topology on `s`, relabeled densely in ambient label order.
pub fn subspace(t: &FiniteTopology, s: &Subset) -> Result<SubspaceView, TopologyError> {
    if s.universe() != t.universe() {
        return Err(TopologyError::UniverseMismatch {
            expected: t.universe(),
            got: s.universe(),
        });
    }
    let points: Vec<usize> = s.iter_points().iter().map(|p| p.expect_nat()).collect();
    let u = Universe::Finite(points.len());
    let mut opens: Vec<Subset> = Vec::new();
    for open in t.opens() {
        let trace = Subset::from_labels(
            u,
            points
                .iter()
                .enumerate()
                .filter(|(_, &amb)| open.contains(Point::Nat(amb)))
                .map(|(new, _)| new),
        )?;
        opens.push(trace);
    }
    opens.sort();
    opens.dedup();
    Ok(SubspaceView {
        topology: FiniteTopology { universe: u, opens },
        points,
    })
}

/// Continuity: every open of the codomain pulls back to an open of the
/// domain. Decidable for finite-to-finite maps and for maps out of a
/// symbolic space into a finite one.
pub fn is_continuous(f: &PointMap, x: &Topology, y: &Topology) -> Result<bool, TopologyError> {
    if f.domain() != x.universe() {
        return Err(TopologyError::UniverseMismatch {
            expected: x.universe(),
            got: f.domain(),
        });
    }
    if f.codomain() != y.universe() {
        return Err(TopologyError::UniverseMismatch {
            expected: y.universe(),
            got: f.codomain(),
        });
    }
    match y {
        Topology::Finite(yt) => {
            for open in yt.opens() {
                let pre = preimage_hom(f, open)?;
                if !x.is_open(&pre)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Topology::Symbolic(ys) => match (x, f.rule()) {
            (Topology::Symbolic(xs), MapRule::Identity) if xs == ys => Ok(true),
            _ => Err(TopologyError::ContinuityUnsupported),
        },
    }
}

/// Hausdorff verdict with a violating pair when separation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HausdorffReport {
    pub hausdorff: bool,
    pub violating_pair: Option<(Point, Point)>,
}

pub fn is_hausdorff(t: &Topology) -> Result<HausdorffReport, TopologyError> {
    match t {
        Topology::Finite(ft) => {
            let n = ft.point_count();
            let masks = ft.open_masks();
            for a in 0..n {
                'pair: for b in (a + 1)..n {
                    for &u in &masks {
                        if u >> a & 1 == 0 {
                            continue;
                        }
                        for &v in &masks {
                            if v >> b & 1 == 1 && u & v == 0 {
                                continue 'pair;
                            }
                        }
                    }
                    return Ok(HausdorffReport {
                        hausdorff: false,
                        violating_pair: Some((Point::Nat(a), Point::Nat(b))),
                    });
                }
            }
            Ok(HausdorffReport {
                hausdorff: true,
                violating_pair: None,
            })
        }
        Topology::Symbolic(s) => Ok(match s {
            SymbolicSpace::DiscreteNat | SymbolicSpace::OnePointCompactification => {
                HausdorffReport {
                    hausdorff: true,
                    violating_pair: None,
                }
            }
            // any two nonempty opens are cofinite and intersect
            SymbolicSpace::CofiniteNat => HausdorffReport {
                hausdorff: false,
                violating_pair: Some((Point::Nat(0), Point::Nat(1))),
            },
        }),
    }
}

/// Evidence attached to a quasi-compactness verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactnessEvidence {
    /// Finite spaces: every open cover is itself a finite subcover.
    FiniteSpace,
    /// Cofinite ℕ: one nonempty open plus one open per excluded point.
    CofiniteExtraction,
    /// One-point compactification: a neighborhood of ∞ is cofinite and the
    /// finitely many remaining points each take one more open.
    InfinityNeighborhoodRule,
    /// Discrete ℕ: the cover by singletons has no finite subcover, since a
    /// finite union of singletons is a finite set.
    SingletonCoverWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactnessReport {
    pub quasi_compact: bool,
    pub evidence: CompactnessEvidence,
}

pub fn is_quasi_compact_direct(t: &Topology) -> CompactnessReport {
    match t {
        Topology::Finite(_) => CompactnessReport {
            quasi_compact: true,
            evidence: CompactnessEvidence::FiniteSpace,
        },
        Topology::Symbolic(SymbolicSpace::DiscreteNat) => CompactnessReport {
            quasi_compact: false,
            evidence: CompactnessEvidence::SingletonCoverWitness,
        },
        Topology::Symbolic(SymbolicSpace::CofiniteNat) => CompactnessReport {
            quasi_compact: true,
            evidence: CompactnessEvidence::CofiniteExtraction,
        },
        Topology::Symbolic(SymbolicSpace::OnePointCompactification) => CompactnessReport {
            quasi_compact: true,
            evidence: CompactnessEvidence::InfinityNeighborhoodRule,
        },
    }
}

fn clopen_masks(t: &FiniteTopology) -> Vec<u64> {
    let n = t.point_count();
    let whole = if n >= 64 { !0u64 } else { (1u64 << n) - 1 };
    let masks: BTreeSet<u64> = t.open_masks().into_iter().collect();
    masks
        .iter()
        .copied()
        .filter(|m| masks.contains(&(!m & whole)))
        .collect()
}

/// The clopen subsets of a finite space.
pub fn clopens(t: &FiniteTopology) -> Vec<Subset> {
    clopen_masks(t)
        .into_iter()
        .map(|m| Subset::from_mask(t.universe(), m))
        .collect()
}

/// Quasi-components: the intersection of all clopens through each point,
/// i.e. the blocks of the partition induced by the clopen algebra. Blocks
/// are ordered by least member.
pub fn quasi_components(t: &FiniteTopology) -> Vec<Subset> {
    let n = t.point_count();
    let whole = if n >= 64 { !0u64 } else { (1u64 << n) - 1 };
    let clp = clopen_masks(t);
    let mut blocks: Vec<u64> = Vec::new();
    let mut seen = 0u64;
    for p in 0..n {
        if seen >> p & 1 == 1 {
            continue;
        }
        let mut block = whole;
        for &c in &clp {
            if c >> p & 1 == 1 {
                block &= c;
            }
        }
        seen |= block;
        blocks.push(block);
    }
    blocks
        .into_iter()
        .map(|m| Subset::from_mask(t.universe(), m))
        .collect()
}

/// Brute-force connected components: a subset is connected when no pair of
/// opens splits it into two nonempty disjoint relatively open pieces; the
/// component of a point is the union of all connected subsets containing
/// it. Limited to ground sets of [`CONNECTIVITY_ORACLE_MAX`] points.
pub fn components_oracle(t: &FiniteTopology) -> Result<Vec<Subset>, TopologyError> {
    let n = t.point_count();
    if n > CONNECTIVITY_ORACLE_MAX {
        return Err(TopologyError::SizeOverflow(CONNECTIVITY_ORACLE_MAX));
    }
    let opens = t.open_masks();
    let is_connected = |s: u64| -> bool {
        for &u in &opens {
            let tu = u & s;
            if tu == 0 || tu == s {
                continue;
            }
            for &v in &opens {
                let tv = v & s;
                if tv != 0 && tu & tv == 0 && tu | tv == s {
                    return false;
                }
            }
        }
        true
    };
    let connected: Vec<u64> = (1u64..(1 << n)).filter(|&s| is_connected(s)).collect();
    let mut out: Vec<Subset> = Vec::new();
    let mut seen = 0u64;
    for p in 0..n {
        if seen >> p & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << p;
        for &s in &connected {
            if s >> p & 1 == 1 {
                comp |= s;
            }
        }
        seen |= comp;
        out.push(Subset::from_mask(t.universe(), comp));
    }
    Ok(out)
}

/// Components by both methods. The oracle runs when the ground set is
/// small enough; finite spaces are locally connected, so the two methods
/// must agree whenever both run.
#[derive(Debug, Clone)]
pub struct ComponentsReport {
    pub quasi_components: Vec<Subset>,
    pub oracle_components: Option<Vec<Subset>>,
    pub agree: Option<bool>,
}

pub fn components(t: &FiniteTopology) -> ComponentsReport {
    let quasi = quasi_components(t);
    let oracle = components_oracle(t).ok();
    let agree = oracle.as_ref().map(|o| {
        let mut a = o.clone();
        let mut b = quasi.clone();
        a.sort();
        b.sort();
        a == b
    });
    ComponentsReport {
        quasi_components: quasi,
        oracle_components: oracle,
        agree,
    }
}

pub fn is_totally_disconnected(t: &Topology) -> Result<bool, TopologyError> {
    match t {
        Topology::Finite(ft) => Ok(quasi_components(ft)
            .iter()
            .all(|b| b.len() == Some(1))),
        Topology::Symbolic(SymbolicSpace::DiscreteNat) => Ok(true),
        // any two nonempty opens meet, so the whole space is connected
        Topology::Symbolic(SymbolicSpace::CofiniteNat) => Ok(false),
        // every {n} is clopen and the quasi-component of ∞ is {∞}
        Topology::Symbolic(SymbolicSpace::OnePointCompactification) => Ok(true),
    }
}
