//! Zariski convergence and the characterization theorems.
//!
//! A maximal ideal M of the subset ring converges to a point x when no
//! open neighborhood of x belongs to M. Quasi-compactness is "every
//! maximal ideal converges somewhere", Hausdorffness is "every maximal
//! ideal converges to at most one point", and compactness is the
//! conjunction: exactly one point. The checkers here compute both sides of
//! each equivalence and report agreement; disagreement would be a bug, not
//! a discovery.

use serde_json::json;
use thiserror::Error;

use crate::ideal::{
    enumerate_maximal_ideals, maximal_ideal_at, IdealError, MaximalIdeal, MaximalIdealKind,
};
use crate::report::{LimitEntry, TheoremReport};
use crate::set::{intersect, union, SetError, Subset};
use crate::topo::{
    closure, is_hausdorff, is_quasi_compact_direct, product, FiniteTopology, ProductSpace,
    SymbolicSpace, Topology, TopologyError,
};
use crate::universe::{MapRule, Point, PointMap, Universe};

/// Cutoff for listing principal ideals of countable universes in reports.
const SYMBOLIC_PRINCIPAL_SAMPLE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvergeError {
    #[error("ideal over {ideal} queried against a topology over {space}")]
    UniverseMismatch { ideal: Universe, space: Universe },
    #[error("point {point} is not a member of {universe}")]
    PointOutOfRange { universe: Universe, point: Point },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// Does the ideal converge to `x` in `t`? True exactly when every open
/// neighborhood of `x` avoids the ideal; on a neighborhood basis this is
/// equivalent by downward closure of ideals.
pub fn converges(m: &MaximalIdeal, x: Point, t: &Topology) -> Result<bool, ConvergeError> {
    if m.universe() != t.universe() {
        return Err(ConvergeError::UniverseMismatch {
            ideal: m.universe(),
            space: t.universe(),
        });
    }
    if !t.universe().contains(x) {
        return Err(ConvergeError::PointOutOfRange {
            universe: t.universe(),
            point: x,
        });
    }
    match t {
        Topology::Finite(ft) => {
            for open in ft.opens() {
                if open.contains(x) && m.contains(open)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Topology::Symbolic(s) => Ok(refuting_neighborhood(*s, x, m)?.is_none()),
    }
}

/// An open neighborhood of `x` lying in `m`, when one exists. The witness
/// is drawn from the per-space neighborhood basis, all of whose members
/// lie in the finite/cofinite algebra.
pub fn refuting_neighborhood(
    space: SymbolicSpace,
    x: Point,
    m: &MaximalIdeal,
) -> Result<Option<Subset>, ConvergeError> {
    let u = space.universe();
    let singleton = |p: Point| Subset::from_points(u, [p]).map_err(ConvergeError::from);
    match space {
        // basis at x is {{x}}
        SymbolicSpace::DiscreteNat => {
            let s = singleton(x)?;
            Ok(if m.contains(&s)? { Some(s) } else { None })
        }
        // basis at x is the cofinite sets containing x; only a principal
        // ideal at another point can catch one
        SymbolicSpace::CofiniteNat => match m.kind() {
            MaximalIdealKind::Principal(y) if y != x => {
                Ok(Some(Subset::cofinite(u, [y])?))
            }
            _ => Ok(None),
        },
        // basis at a natural n is {{n}}; basis at ∞ is the cofinite sets
        // containing ∞
        SymbolicSpace::OnePointCompactification => match x {
            Point::Nat(_) => {
                let s = singleton(x)?;
                Ok(if m.contains(&s)? { Some(s) } else { None })
            }
            Point::Infinity => match m.kind() {
                MaximalIdealKind::Principal(y) if y != Point::Infinity => {
                    Ok(Some(Subset::cofinite(u, [y])?))
                }
                _ => Ok(None),
            },
        },
    }
}

/// The set of points an ideal converges to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitSet {
    pub ideal: MaximalIdeal,
    pub points: LimitPoints,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitPoints {
    /// Exact point set (finite spaces).
    Finite(Subset),
    /// Converges nowhere.
    None,
    /// Converges to exactly this point.
    Single(Point),
    /// Converges to every point of the space.
    All,
}

impl LimitPoints {
    pub fn is_empty(&self) -> bool {
        match self {
            LimitPoints::Finite(s) => s.is_empty(),
            LimitPoints::None => true,
            LimitPoints::Single(_) | LimitPoints::All => false,
        }
    }

    pub fn is_singleton(&self) -> bool {
        match self {
            LimitPoints::Finite(s) => s.len() == Some(1),
            LimitPoints::Single(_) => true,
            LimitPoints::None | LimitPoints::All => false,
        }
    }

    pub fn at_most_one(&self) -> bool {
        self.is_empty() || self.is_singleton()
    }

    pub fn contains(&self, p: Point) -> bool {
        match self {
            LimitPoints::Finite(s) => s.contains(p),
            LimitPoints::None => false,
            LimitPoints::Single(q) => *q == p,
            LimitPoints::All => true,
        }
    }
}

/// Every point the ideal converges to. For a principal ideal at x this is
/// the closure of {x}: y is a limit exactly when every neighborhood of y
/// meets {x}.
pub fn limit_set(m: &MaximalIdeal, t: &Topology) -> Result<LimitSet, ConvergeError> {
    if m.universe() != t.universe() {
        return Err(ConvergeError::UniverseMismatch {
            ideal: m.universe(),
            space: t.universe(),
        });
    }
    let points = match t {
        Topology::Finite(ft) => {
            let hits = ft
                .universe()
                .points()
                .filter(|&p| converges(m, p, t).expect("validated inputs"))
                .map(|p| p.expect_nat());
            LimitPoints::Finite(Subset::from_labels(ft.universe(), hits)?)
        }
        Topology::Symbolic(s) => match (m.kind(), s) {
            // singletons are closed in all three spaces, so a principal
            // ideal converges exactly to its own point
            (MaximalIdealKind::Principal(y), _) => {
                debug_assert!(converges(m, y, t)?);
                LimitPoints::Single(y)
            }
            (MaximalIdealKind::Frechet, SymbolicSpace::DiscreteNat) => LimitPoints::None,
            (MaximalIdealKind::Frechet, SymbolicSpace::CofiniteNat) => LimitPoints::All,
            (MaximalIdealKind::Frechet, SymbolicSpace::OnePointCompactification) => {
                debug_assert!(converges(m, Point::Infinity, t)?);
                LimitPoints::Single(Point::Infinity)
            }
        },
    };
    Ok(LimitSet {
        ideal: m.clone(),
        points,
    })
}

/// Contract an ideal along a map: the preimage of the ideal under the
/// power set functor, again maximal. A principal ideal at x contracts to
/// the principal ideal at f(x); the Fréchet class contracts to the ideal
/// of the tail class under a tail collapse.
pub fn pushforward(m: &MaximalIdeal, f: &PointMap) -> Result<MaximalIdeal, ConvergeError> {
    if m.universe() != f.domain() {
        return Err(ConvergeError::UniverseMismatch {
            ideal: m.universe(),
            space: f.domain(),
        });
    }
    match m.kind() {
        MaximalIdealKind::Principal(x) => Ok(maximal_ideal_at(f.codomain(), f.apply(x))?),
        MaximalIdealKind::Frechet => match f.rule() {
            MapRule::Identity => Ok(MaximalIdeal::frechet(f.codomain())?),
            // a set's preimage is finite exactly when the set misses the
            // tail label
            MapRule::CollapseTail { window } => {
                Ok(maximal_ideal_at(f.codomain(), Point::Nat(*window))?)
            }
            MapRule::Table(_) => Err(ConvergeError::Unsupported(
                "frechet ideal over a finite domain".to_string(),
            )),
        },
    }
}

fn limit_entries(t: &Topology, ideals: &[MaximalIdeal]) -> Result<Vec<LimitEntry>, ConvergeError> {
    ideals
        .iter()
        .map(|m| Ok(LimitEntry::from_limit_set(&limit_set(m, t)?)))
        .collect()
}

/// The maximal-ideal family a checker sweeps: complete for finite
/// universes, the principal-sample-plus-Fréchet class family for countable
/// ones.
fn checker_ideals(t: &Topology) -> Vec<MaximalIdeal> {
    enumerate_maximal_ideals(t.universe(), SYMBOLIC_PRINCIPAL_SAMPLE).ideals
}

/// Quasi-compact ⇔ every maximal ideal converges to at least one point.
pub fn check_theorem_i(t: &Topology) -> Result<TheoremReport, ConvergeError> {
    let direct = is_quasi_compact_direct(t).quasi_compact;
    let ideals = checker_ideals(t);
    let mut ring = true;
    let mut witness = None;
    for m in &ideals {
        let ls = limit_set(m, t)?;
        if ls.points.is_empty() {
            ring = false;
            witness = Some(json!({ "ideal": m.describe(), "limit": "empty" }));
            break;
        }
    }
    let mut report = TheoremReport::new(t.describe(), "I", direct, ring)
        .with_limits(limit_entries(t, &ideals)?);
    if !report.agree {
        report = report.with_witness(witness.unwrap_or_else(|| json!({})));
    } else if let Some(w) = witness {
        report = report.with_witness(w);
    }
    Ok(report)
}

/// Hausdorff ⇔ every maximal ideal converges to at most one point.
pub fn check_theorem_iii(t: &Topology) -> Result<TheoremReport, ConvergeError> {
    let direct = is_hausdorff(t)?.hausdorff;
    let ideals = checker_ideals(t);
    let mut ring = true;
    let mut witness = None;
    for m in &ideals {
        let ls = limit_set(m, t)?;
        if !ls.points.at_most_one() {
            ring = false;
            witness = Some(json!({ "ideal": m.describe(), "limit": "multiple" }));
            break;
        }
    }
    let mut report = TheoremReport::new(t.describe(), "III", direct, ring)
        .with_limits(limit_entries(t, &ideals)?);
    if !report.agree {
        report = report.with_witness(witness.unwrap_or_else(|| json!({})));
    } else if let Some(w) = witness {
        report = report.with_witness(w);
    }
    Ok(report)
}

/// Compact ⇔ every maximal ideal converges to exactly one point.
pub fn check_compact_corollary(t: &Topology) -> Result<TheoremReport, ConvergeError> {
    let direct =
        is_quasi_compact_direct(t).quasi_compact && is_hausdorff(t)?.hausdorff;
    let ideals = checker_ideals(t);
    let mut ring = true;
    let mut witness = None;
    for m in &ideals {
        let ls = limit_set(m, t)?;
        if !ls.points.is_singleton() {
            ring = false;
            witness = Some(json!({ "ideal": m.describe(), "limit": "not a singleton" }));
            break;
        }
    }
    let mut report = TheoremReport::new(t.describe(), "compact", direct, ring)
        .with_limits(limit_entries(t, &ideals)?);
    if !report.agree {
        report = report.with_witness(witness.unwrap_or_else(|| json!({})));
    } else if let Some(w) = witness {
        report = report.with_witness(w);
    }
    Ok(report)
}

/// The product-compactness certificate: contract each maximal ideal of the
/// product along the projections, pick a factor limit for each coordinate,
/// and verify the ideal converges to the assembled tuple.
pub fn tychonoff_check(factors: &[&FiniteTopology]) -> Result<TheoremReport, ConvergeError> {
    let prod = product(factors)?;
    let space = Topology::Finite(prod.topology.clone());
    let direct = is_quasi_compact_direct(&space).quasi_compact;
    let total = prod.topology.point_count();

    let mut ring = true;
    let mut witness = None;
    let mut limits = Vec::new();
    'ideals: for p in 0..total {
        let m = maximal_ideal_at(prod.topology.universe(), Point::Nat(p))?;
        limits.push(LimitEntry::from_limit_set(&limit_set(&m, &space)?));
        let mut tuple = Vec::with_capacity(factors.len());
        for (i, factor) in factors.iter().enumerate() {
            let contracted = pushforward(&m, &prod.projections[i])?;
            let ls = limit_set(&contracted, &Topology::Finite((*factor).clone()))?;
            let first = match &ls.points {
                LimitPoints::Finite(s) => s.iter_points().first().copied(),
                _ => unreachable!("finite factor"),
            };
            match first {
                Some(x) => tuple.push(x.expect_nat()),
                None => {
                    ring = false;
                    witness = Some(json!({
                        "ideal": m.describe(),
                        "factor": i,
                        "failure": "empty factor limit set",
                    }));
                    break 'ideals;
                }
            }
        }
        let assembled = Point::Nat(prod.encode(&tuple));
        if !converges(&m, assembled, &space)? {
            ring = false;
            witness = Some(json!({
                "ideal": m.describe(),
                "tuple": tuple,
                "failure": "ideal does not converge to the assembled tuple",
            }));
            break 'ideals;
        }
    }

    let space_desc = format!(
        "product({})",
        factors
            .iter()
            .map(|f| Topology::Finite((*f).clone()).describe())
            .collect::<Vec<_>>()
            .join(" x ")
    );
    let mut report = TheoremReport::new(space_desc, "tychonoff", direct, ring).with_limits(limits);
    if let Some(w) = witness {
        report = report.with_witness(w);
    }
    Ok(report)
}

/// The product space built by [`tychonoff_check`], exposed for callers
/// that need the projections.
pub fn tychonoff_product(factors: &[&FiniteTopology]) -> Result<ProductSpace, ConvergeError> {
    Ok(product(factors)?)
}

/// A subbasis together with a cover selected from it.
#[derive(Debug, Clone)]
pub struct SubbasisCover {
    subbasis: Vec<Subset>,
    cover: Vec<usize>,
}

impl SubbasisCover {
    pub fn new(subbasis: Vec<Subset>, cover: Vec<usize>) -> Result<Self, ConvergeError> {
        for &i in &cover {
            if i >= subbasis.len() {
                return Err(ConvergeError::Unsupported(format!(
                    "cover index {i} out of range"
                )));
            }
        }
        Ok(SubbasisCover { subbasis, cover })
    }

    /// A cover consisting of the whole subbasis.
    pub fn whole(subbasis: Vec<Subset>) -> Self {
        let cover = (0..subbasis.len()).collect();
        SubbasisCover { subbasis, cover }
    }

    pub fn subbasis(&self) -> &[Subset] {
        &self.subbasis
    }

    pub fn cover_sets(&self) -> Vec<&Subset> {
        self.cover.iter().map(|&i| &self.subbasis[i]).collect()
    }
}

/// Result of subcover extraction: indices into the cover list, or an
/// uncovered point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlexanderOutcome {
    Subcover { cover_indices: Vec<usize> },
    NonCover { uncovered: Point },
}

/// Extract a finite subcover from a subbasis cover (greedy by largest
/// uncovered gain; ties by least uncovered label, then list position), or
/// exhibit an uncovered point. Supports finite spaces and cofinite ℕ with
/// cofinite cover elements.
pub fn alexander_subcover(
    t: &Topology,
    sc: &SubbasisCover,
) -> Result<AlexanderOutcome, ConvergeError> {
    for s in &sc.subbasis {
        if !t.is_open(s)? {
            return Err(ConvergeError::Unsupported(format!(
                "subbasis element {s} is not open in the space"
            )));
        }
    }
    match t {
        Topology::Finite(ft) => {
            let sets = sc.cover_sets();
            let mut covered = Subset::empty(ft.universe());
            for s in &sets {
                covered = union(&covered, s)?;
            }
            if !covered.is_whole() {
                let miss = ft
                    .universe()
                    .points()
                    .find(|&p| !covered.contains(p))
                    .expect("some point uncovered");
                return Ok(AlexanderOutcome::NonCover { uncovered: miss });
            }
            let mut remaining = Subset::whole(ft.universe());
            let mut chosen: Vec<usize> = Vec::new();
            while !remaining.is_empty() {
                let mut best: Option<(usize, usize, usize)> = None; // (gain, min-label, idx)
                for (idx, s) in sets.iter().enumerate() {
                    if chosen.contains(&idx) {
                        continue;
                    }
                    let fresh = intersect(s, &remaining)?;
                    let gain = fresh.len().expect("finite universe");
                    if gain == 0 {
                        continue;
                    }
                    let min_label = fresh.iter_points()[0].expect_nat();
                    let better = match best {
                        None => true,
                        Some((g, ml, bi)) => {
                            gain > g || (gain == g && (min_label < ml || (min_label == ml && idx < bi)))
                        }
                    };
                    if better {
                        best = Some((gain, min_label, idx));
                    }
                }
                let (_, _, idx) = best.expect("cover reaches every point");
                chosen.push(idx);
                remaining = intersect(&remaining, &crate::set::complement(sets[idx]))?;
            }
            Ok(AlexanderOutcome::Subcover { cover_indices: chosen })
        }
        Topology::Symbolic(SymbolicSpace::CofiniteNat) => {
            let sets = sc.cover_sets();
            // candidate uncovered points lie in every cofinite member's
            // excluded set
            let mut candidates: Option<Vec<Point>> = None;
            for s in &sets {
                if let Some(excl) = s.excluded_points() {
                    candidates = Some(match candidates {
                        None => excl,
                        Some(prev) => prev.into_iter().filter(|p| excl.contains(p)).collect(),
                    });
                }
            }
            let candidates = match candidates {
                // no cofinite member at all: nothing infinite is covered
                None => return Ok(AlexanderOutcome::NonCover { uncovered: Point::Nat(0) }),
                Some(c) => c,
            };
            if let Some(&miss) = candidates
                .iter()
                .find(|&&p| !sets.iter().any(|s| s.contains(p)))
            {
                return Ok(AlexanderOutcome::NonCover { uncovered: miss });
            }
            // one cofinite set, then one more element per excluded point
            let first = sets
                .iter()
                .enumerate()
                .filter_map(|(i, s)| s.excluded_points().map(|e| (e.len(), i)))
                .min()
                .map(|(_, i)| i)
                .expect("a cofinite member exists");
            let mut chosen = vec![first];
            for p in sets[first].excluded_points().expect("cofinite member") {
                if chosen.iter().any(|&i| sets[i].contains(p)) {
                    continue;
                }
                let extra = sets
                    .iter()
                    .position(|s| s.contains(p))
                    .expect("covering was verified");
                if !chosen.contains(&extra) {
                    chosen.push(extra);
                }
            }
            Ok(AlexanderOutcome::Subcover { cover_indices: chosen })
        }
        Topology::Symbolic(other) => Err(ConvergeError::Unsupported(format!(
            "alexander extraction on {other}"
        ))),
    }
}

/// Key law behind the sweeps: the limit set of a principal ideal is the
/// closure of its point.
pub fn principal_limit_is_closure(t: &Topology, x: Point) -> Result<bool, ConvergeError> {
    let m = maximal_ideal_at(t.universe(), x)?;
    let ls = limit_set(&m, t)?;
    let singleton = Subset::from_points(t.universe(), [x])?;
    let cl = closure(t, &singleton)?;
    Ok(match ls.points {
        LimitPoints::Finite(s) => s == cl,
        LimitPoints::Single(p) => cl == Subset::from_points(t.universe(), [p])?,
        LimitPoints::None => cl.is_empty(),
        LimitPoints::All => cl.is_whole(),
    })
}
