//! The ring of subsets of a ground set.
//!
//! Subsets of a common universe form a commutative ring with symmetric
//! difference as addition and intersection as multiplication; the zero and
//! unit are the empty set and the whole set. Finite universes use packed
//! bitsets; countable universes are restricted to the finite/cofinite
//! algebra, the decidable fragment on which maximal-ideal membership can be
//! settled exactly.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::universe::{MapRule, Point, PointMap, Universe};

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: Universe, right: Universe },
    #[error("point {point} is not a member of {universe}")]
    PointOutOfRange { universe: Universe, point: Point },
    #[error("subset lies over {got}, expected {expected}")]
    WrongUniverse { expected: Universe, got: Universe },
    #[error("exhaustive ring-axiom check is limited to finite universes with at most {max} points; pass an explicit sample for {universe}")]
    SampleRequired { universe: Universe, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Finite universe: one bit per point, tail bits of the last word zero.
    Bits(Vec<u64>),
    /// Countable universe: an explicit finite set, sorted and duplicate-free.
    Finite(Vec<Point>),
    /// Countable universe: complement of an explicit finite set.
    Cofinite(Vec<Point>),
}

/// A subset of a ground set; an element of the subset ring.
///
/// Representations are canonical at construction (sorted labels, zeroed
/// tail bits, bitsets only over finite universes, cofinite sets only over
/// countable ones), so structural equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: Universe,
    repr: Repr,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

fn sorted_dedup(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    pts
}

/// Symmetric difference of two sorted, duplicate-free label vectors.
fn sym_diff_labels(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn intersect_labels(a: &[Point], b: &[Point]) -> Vec<Point> {
    a.iter().filter(|p| b.binary_search(p).is_ok()).copied().collect()
}

fn union_labels(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    sorted_dedup(out)
}

fn diff_labels(a: &[Point], b: &[Point]) -> Vec<Point> {
    a.iter().filter(|p| b.binary_search(p).is_err()).copied().collect()
}

impl Subset {
    pub fn empty(u: Universe) -> Self {
        match u {
            Universe::Finite(n) => Subset {
                universe: u,
                repr: Repr::Bits(vec![0; words_for(n)]),
            },
            Universe::Countable { .. } => Subset {
                universe: u,
                repr: Repr::Finite(Vec::new()),
            },
        }
    }

    pub fn whole(u: Universe) -> Self {
        match u {
            Universe::Finite(n) => {
                let mut words = vec![!0u64; words_for(n)];
                zero_tail(&mut words, n);
                Subset {
                    universe: u,
                    repr: Repr::Bits(words),
                }
            }
            Universe::Countable { .. } => Subset {
                universe: u,
                repr: Repr::Cofinite(Vec::new()),
            },
        }
    }

    /// An explicit set of points over any universe. Over a countable
    /// universe the result is a finite-kind set.
    pub fn from_points<I>(u: Universe, points: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = Point>,
    {
        let pts = sorted_dedup(points.into_iter().collect());
        for &p in &pts {
            if !u.contains(p) {
                return Err(SetError::PointOutOfRange { universe: u, point: p });
            }
        }
        Ok(match u {
            Universe::Finite(n) => {
                let mut words = vec![0u64; words_for(n)];
                for p in pts {
                    let k = p.expect_nat();
                    words[k / WORD_BITS] |= 1 << (k % WORD_BITS);
                }
                Subset {
                    universe: u,
                    repr: Repr::Bits(words),
                }
            }
            Universe::Countable { .. } => Subset {
                universe: u,
                repr: Repr::Finite(pts),
            },
        })
    }

    /// Shorthand for finite universes: a set of natural labels.
    pub fn from_labels<I>(u: Universe, labels: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = usize>,
    {
        Subset::from_points(u, labels.into_iter().map(Point::Nat))
    }

    /// The complement of an explicit finite set over a countable universe.
    pub fn cofinite<I>(u: Universe, excluded: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = Point>,
    {
        if u.is_finite() {
            return Err(SetError::WrongUniverse {
                expected: Universe::NAT,
                got: u,
            });
        }
        let pts = sorted_dedup(excluded.into_iter().collect());
        for &p in &pts {
            if !u.contains(p) {
                return Err(SetError::PointOutOfRange { universe: u, point: p });
            }
        }
        Ok(Subset {
            universe: u,
            repr: Repr::Cofinite(pts),
        })
    }

    /// A subset of a finite universe with at most 64 points, from its mask.
    pub fn from_mask(u: Universe, mask: u64) -> Self {
        let n = u.size().expect("mask subsets need a finite universe");
        assert!(n <= WORD_BITS, "mask constructor is limited to 64 points");
        debug_assert!(n == WORD_BITS || mask >> n == 0, "mask has bits beyond the universe");
        let mut words = vec![0u64; words_for(n)];
        if let Some(w) = words.first_mut() {
            *w = mask;
        }
        zero_tail(&mut words, n);
        Subset {
            universe: u,
            repr: Repr::Bits(words),
        }
    }

    /// The mask of a subset of a finite universe with at most 64 points.
    pub fn mask(&self) -> u64 {
        match &self.repr {
            Repr::Bits(words) => {
                assert!(words.len() <= 1, "mask view is limited to 64 points");
                words.first().copied().unwrap_or(0)
            }
            _ => panic!("mask view needs a finite universe"),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn contains(&self, p: Point) -> bool {
        if !self.universe.contains(p) {
            return false;
        }
        match &self.repr {
            Repr::Bits(words) => {
                let k = p.expect_nat();
                words[k / WORD_BITS] >> (k % WORD_BITS) & 1 == 1
            }
            Repr::Finite(pts) => pts.binary_search(&p).is_ok(),
            Repr::Cofinite(pts) => pts.binary_search(&p).is_err(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.repr {
            Repr::Bits(words) => words.iter().all(|&w| w == 0),
            Repr::Finite(pts) => pts.is_empty(),
            Repr::Cofinite(_) => false,
        }
    }

    pub fn is_whole(&self) -> bool {
        *self == Subset::whole(self.universe)
    }

    /// True when the set itself is finite (always over finite universes;
    /// the finite-kind tag over countable ones).
    pub fn is_finite_set(&self) -> bool {
        !matches!(self.repr, Repr::Cofinite(_))
    }

    /// Number of points for finite sets; `None` for cofinite sets.
    pub fn len(&self) -> Option<usize> {
        match &self.repr {
            Repr::Bits(words) => Some(words.iter().map(|w| w.count_ones() as usize).sum()),
            Repr::Finite(pts) => Some(pts.len()),
            Repr::Cofinite(_) => None,
        }
    }

    /// Points of a finite set, in order. Panics on cofinite sets.
    pub fn iter_points(&self) -> Vec<Point> {
        match &self.repr {
            Repr::Bits(words) => {
                let mut out = Vec::new();
                for (wi, &w) in words.iter().enumerate() {
                    let mut bits = w;
                    while bits != 0 {
                        let b = bits.trailing_zeros() as usize;
                        out.push(Point::Nat(wi * WORD_BITS + b));
                        bits &= bits - 1;
                    }
                }
                out
            }
            Repr::Finite(pts) => pts.clone(),
            Repr::Cofinite(_) => panic!("cofinite sets have no finite point listing"),
        }
    }

    /// The excluded points of a cofinite set; empty for finite-kind sets of
    /// a countable universe.
    pub fn excluded_points(&self) -> Option<Vec<Point>> {
        match &self.repr {
            Repr::Cofinite(pts) => Some(pts.clone()),
            _ => None,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool, SetError> {
        check_same_universe(self, other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => a.iter().zip(b).all(|(x, y)| x & !y == 0),
            (Repr::Finite(a), Repr::Finite(b)) => a.iter().all(|p| b.binary_search(p).is_ok()),
            // finite ⊆ cofinite(excl E) ⇔ no point of the set is excluded
            (Repr::Finite(a), Repr::Cofinite(e)) => a.iter().all(|p| e.binary_search(p).is_err()),
            // an infinite set is never inside a finite one
            (Repr::Cofinite(_), Repr::Finite(_)) => false,
            // ~E ⊆ ~F ⇔ F ⊆ E
            (Repr::Cofinite(e), Repr::Cofinite(f)) => {
                f.iter().all(|p| e.binary_search(p).is_ok())
            }
            _ => unreachable!("mixed representations over one universe"),
        })
    }

    /// Canonical total order: by universe, then kind tag, then payload. For
    /// bitsets this is the numeric order of the mask, so families sort the
    /// way their binary codes do.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        fn tag(r: &Repr) -> u8 {
            match r {
                Repr::Bits(_) => 0,
                Repr::Finite(_) => 1,
                Repr::Cofinite(_) => 2,
            }
        }
        let key = |u: &Universe| match u {
            Universe::Finite(n) => (0usize, *n),
            Universe::Countable { infinity } => (1, usize::from(*infinity)),
        };
        key(&self.universe)
            .cmp(&key(&other.universe))
            .then_with(|| tag(&self.repr).cmp(&tag(&other.repr)))
            .then_with(|| match (&self.repr, &other.repr) {
                (Repr::Bits(a), Repr::Bits(b)) => {
                    a.iter().rev().cmp(b.iter().rev())
                }
                (Repr::Finite(a), Repr::Finite(b)) | (Repr::Cofinite(a), Repr::Cofinite(b)) => {
                    a.cmp(b)
                }
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

fn zero_tail(words: &mut [u64], n: usize) {
    if !n.is_multiple_of(WORD_BITS) {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (n % WORD_BITS)) - 1;
        }
    }
}

fn check_same_universe(a: &Subset, b: &Subset) -> Result<(), SetError> {
    if a.universe != b.universe {
        return Err(SetError::UniverseMismatch {
            left: a.universe,
            right: b.universe,
        });
    }
    Ok(())
}

/// Ring addition: the symmetric difference.
///
/// Closed on the finite/cofinite algebra; the result tag is the xor of the
/// operand tags and the finite payload is always the symmetric difference
/// of the two explicit label vectors.
pub fn sym_diff(a: &Subset, b: &Subset) -> Result<Subset, SetError> {
    check_same_universe(a, b)?;
    let repr = match (&a.repr, &b.repr) {
        (Repr::Bits(x), Repr::Bits(y)) => {
            Repr::Bits(x.iter().zip(y).map(|(p, q)| p ^ q).collect())
        }
        (Repr::Finite(x), Repr::Finite(y)) | (Repr::Cofinite(x), Repr::Cofinite(y)) => {
            Repr::Finite(sym_diff_labels(x, y))
        }
        (Repr::Finite(x), Repr::Cofinite(y)) | (Repr::Cofinite(x), Repr::Finite(y)) => {
            Repr::Cofinite(sym_diff_labels(x, y))
        }
        _ => unreachable!("mixed representations over one universe"),
    };
    Ok(Subset {
        universe: a.universe,
        repr,
    })
}

/// Ring multiplication: the intersection.
pub fn intersect(a: &Subset, b: &Subset) -> Result<Subset, SetError> {
    check_same_universe(a, b)?;
    let repr = match (&a.repr, &b.repr) {
        (Repr::Bits(x), Repr::Bits(y)) => {
            Repr::Bits(x.iter().zip(y).map(|(p, q)| p & q).collect())
        }
        (Repr::Finite(x), Repr::Finite(y)) => Repr::Finite(intersect_labels(x, y)),
        (Repr::Finite(x), Repr::Cofinite(y)) => Repr::Finite(diff_labels(x, y)),
        (Repr::Cofinite(x), Repr::Finite(y)) => Repr::Finite(diff_labels(y, x)),
        (Repr::Cofinite(x), Repr::Cofinite(y)) => Repr::Cofinite(union_labels(x, y)),
        _ => unreachable!("mixed representations over one universe"),
    };
    Ok(Subset {
        universe: a.universe,
        repr,
    })
}

/// Set union; equals `a + b + a·b` in the ring.
pub fn union(a: &Subset, b: &Subset) -> Result<Subset, SetError> {
    check_same_universe(a, b)?;
    let repr = match (&a.repr, &b.repr) {
        (Repr::Bits(x), Repr::Bits(y)) => {
            Repr::Bits(x.iter().zip(y).map(|(p, q)| p | q).collect())
        }
        (Repr::Finite(x), Repr::Finite(y)) => Repr::Finite(union_labels(x, y)),
        (Repr::Finite(x), Repr::Cofinite(y)) => Repr::Cofinite(diff_labels(y, x)),
        (Repr::Cofinite(x), Repr::Finite(y)) => Repr::Cofinite(diff_labels(x, y)),
        (Repr::Cofinite(x), Repr::Cofinite(y)) => Repr::Cofinite(intersect_labels(x, y)),
        _ => unreachable!("mixed representations over one universe"),
    };
    Ok(Subset {
        universe: a.universe,
        repr,
    })
}

/// Complement within the universe; equals `1 + a` in the ring.
pub fn complement(a: &Subset) -> Subset {
    let repr = match &a.repr {
        Repr::Bits(words) => {
            let n = a.universe.size().expect("bitsets live over finite universes");
            let mut out: Vec<u64> = words.iter().map(|w| !w).collect();
            zero_tail(&mut out, n);
            Repr::Bits(out)
        }
        Repr::Finite(pts) => Repr::Cofinite(pts.clone()),
        Repr::Cofinite(pts) => Repr::Finite(pts.clone()),
    };
    Subset {
        universe: a.universe,
        repr,
    }
}

/// Set difference `a ∖ b`.
pub fn difference(a: &Subset, b: &Subset) -> Result<Subset, SetError> {
    intersect(a, &complement(b))
}

/// The power set functor on maps: `a` over the codomain of `f` pulls back
/// to `f⁻¹(a)` over the domain. A morphism of rings.
pub fn preimage_hom(f: &PointMap, a: &Subset) -> Result<Subset, SetError> {
    if a.universe != f.codomain() {
        return Err(SetError::WrongUniverse {
            expected: f.codomain(),
            got: a.universe,
        });
    }
    match f.rule() {
        MapRule::Table(table) => {
            let pts = table
                .iter()
                .enumerate()
                .filter(|(_, &img)| a.contains(img))
                .map(|(i, _)| Point::Nat(i));
            Subset::from_points(f.domain(), pts)
        }
        MapRule::Identity => Ok(Subset {
            universe: f.domain(),
            repr: a.repr.clone(),
        }),
        MapRule::CollapseTail { window } => {
            let window_pts: Vec<Point> = (0..*window)
                .map(Point::Nat)
                .filter(|&k| a.contains(k))
                .collect();
            if a.contains(Point::Nat(*window)) {
                // tail included: cofinite, excluding the window points not in a
                let excl = (0..*window)
                    .map(Point::Nat)
                    .filter(|&k| !a.contains(k));
                Subset::cofinite(f.domain(), excl)
            } else {
                Subset::from_points(f.domain(), window_pts)
            }
        }
    }
}

impl fmt::Display for Subset {
    /// Set literal format: `{0,2,5}` for explicit sets, `~{0,2}` for
    /// cofinite sets, with `inf` for the point at infinity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_labels(f: &mut fmt::Formatter<'_>, pts: &[Point]) -> fmt::Result {
            write!(f, "{{")?;
            for (i, p) in pts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")
        }
        match &self.repr {
            Repr::Bits(_) => write_labels(f, &self.iter_points()),
            Repr::Finite(pts) => write_labels(f, pts),
            Repr::Cofinite(pts) => {
                write!(f, "~")?;
                write_labels(f, pts)
            }
        }
    }
}

/// Outcome of a ring-axiom validation run.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub universe: Universe,
    pub cases_checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct AxiomFailure {
    pub law: RingLaw,
    pub witness: Vec<Subset>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at", self.law)?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingLaw {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    Characteristic2,
    MulAssociative,
    MulCommutative,
    MulIdempotent,
    MulIdentity,
    Distributive,
}

/// Check the commutative-ring and Boolean-ring laws on the subset ring of
/// `u`, exhaustively for finite universes with at most 4 points, otherwise
/// over the supplied sample.
pub fn validate_ring_axioms(u: Universe, sample: Option<&[Subset]>) -> Result<AxiomReport, SetError> {
    validate_ring_axioms_with(u, sample, &|a, b| sym_diff(a, b).unwrap(), &|a, b| {
        intersect(a, b).unwrap()
    })
}

/// Same as [`validate_ring_axioms`] but over injected operations, so a
/// corrupted operation can be shown to produce a counterexample witness.
pub fn validate_ring_axioms_with(
    u: Universe,
    sample: Option<&[Subset]>,
    add: &dyn Fn(&Subset, &Subset) -> Subset,
    mul: &dyn Fn(&Subset, &Subset) -> Subset,
) -> Result<AxiomReport, SetError> {
    const EXHAUSTIVE_MAX: usize = 4;
    let elements: Vec<Subset> = match (u, sample) {
        (_, Some(s)) => {
            for x in s {
                if x.universe != u {
                    return Err(SetError::WrongUniverse {
                        expected: u,
                        got: x.universe,
                    });
                }
            }
            s.to_vec()
        }
        (Universe::Finite(n), None) if n <= EXHAUSTIVE_MAX => (0..(1u64 << n))
            .map(|mask| Subset::from_mask(u, mask))
            .collect(),
        _ => {
            return Err(SetError::SampleRequired {
                universe: u,
                max: EXHAUSTIVE_MAX,
            })
        }
    };

    let zero = Subset::empty(u);
    let one = Subset::whole(u);
    let mut failures = Vec::new();
    let mut cases = 0usize;
    let record = |law: RingLaw, witness: Vec<Subset>, failures: &mut Vec<AxiomFailure>| {
        if !failures.iter().any(|f| f.law == law) {
            failures.push(AxiomFailure { law, witness });
        }
    };

    for a in &elements {
        cases += 1;
        if add(a, &zero) != *a {
            record(RingLaw::AddIdentity, vec![a.clone()], &mut failures);
        }
        if add(a, a) != zero {
            record(RingLaw::Characteristic2, vec![a.clone()], &mut failures);
        }
        if mul(a, a) != *a {
            record(RingLaw::MulIdempotent, vec![a.clone()], &mut failures);
        }
        if mul(a, &one) != *a {
            record(RingLaw::MulIdentity, vec![a.clone()], &mut failures);
        }
        for b in &elements {
            cases += 1;
            if add(a, b) != add(b, a) {
                record(RingLaw::AddCommutative, vec![a.clone(), b.clone()], &mut failures);
            }
            if mul(a, b) != mul(b, a) {
                record(RingLaw::MulCommutative, vec![a.clone(), b.clone()], &mut failures);
            }
            for c in &elements {
                cases += 1;
                if add(&add(a, b), c) != add(a, &add(b, c)) {
                    record(
                        RingLaw::AddAssociative,
                        vec![a.clone(), b.clone(), c.clone()],
                        &mut failures,
                    );
                }
                if mul(&mul(a, b), c) != mul(a, &mul(b, c)) {
                    record(
                        RingLaw::MulAssociative,
                        vec![a.clone(), b.clone(), c.clone()],
                        &mut failures,
                    );
                }
                if mul(a, &add(b, c)) != add(&mul(a, b), &mul(a, c)) {
                    record(
                        RingLaw::Distributive,
                        vec![a.clone(), b.clone(), c.clone()],
                        &mut failures,
                    );
                }
            }
        }
    }

    Ok(AxiomReport {
        universe: u,
        cases_checked: cases,
        failures,
    })
}
