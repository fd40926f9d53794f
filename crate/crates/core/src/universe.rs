//! Ground sets, points, and point maps.

use std::fmt;

use thiserror::Error;

/// Error raised by ground-set and point-map constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("point {point} is not a member of {universe}")]
    PointOutOfRange { universe: Universe, point: Point },
    #[error("expected a map table with {expected} entries, got {got}")]
    TableArity { expected: usize, got: usize },
    #[error("rule {rule} requires a {need} universe, got {universe}")]
    RuleUniverseMismatch {
        rule: &'static str,
        need: &'static str,
        universe: Universe,
    },
    #[error("cannot compose maps: codomain {codomain} differs from domain {domain}")]
    ComposeMismatch { codomain: Universe, domain: Universe },
}

/// A point of a ground set: a natural-number label, or the distinguished
/// point at infinity of an extended countable universe.
///
/// `Nat` sorts before `Infinity`, so sorted label vectors put ∞ last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Nat(usize),
    Infinity,
}

impl Point {
    /// The natural label, if this is not ∞.
    pub fn nat(self) -> Option<usize> {
        match self {
            Point::Nat(k) => Some(k),
            Point::Infinity => None,
        }
    }

    /// The natural label; panics on ∞. For use on finite universes where ∞
    /// cannot occur.
    pub fn expect_nat(self) -> usize {
        match self {
            Point::Nat(k) => k,
            Point::Infinity => panic!("expected a natural point label, found ∞"),
        }
    }
}

impl From<usize> for Point {
    fn from(k: usize) -> Self {
        Point::Nat(k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Nat(k) => write!(f, "{k}"),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

/// The ground set over which subsets and topologies live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Universe {
    /// A finite ground set with points labeled `0..n`.
    Finite(usize),
    /// A countable ground set (the naturals), optionally extended by a
    /// distinguished point ∞.
    Countable { infinity: bool },
}

impl Universe {
    /// The naturals.
    pub const NAT: Universe = Universe::Countable { infinity: false };
    /// The naturals plus a point at infinity.
    pub const NAT_INFINITY: Universe = Universe::Countable { infinity: true };

    pub fn is_finite(&self) -> bool {
        matches!(self, Universe::Finite(_))
    }

    /// Number of points for finite universes.
    pub fn size(&self) -> Option<usize> {
        match self {
            Universe::Finite(n) => Some(*n),
            Universe::Countable { .. } => None,
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        match (self, p) {
            (Universe::Finite(n), Point::Nat(k)) => k < *n,
            (Universe::Finite(_), Point::Infinity) => false,
            (Universe::Countable { .. }, Point::Nat(_)) => true,
            (Universe::Countable { infinity }, Point::Infinity) => *infinity,
        }
    }

    /// All points of a finite universe, in label order.
    pub fn points(&self) -> impl Iterator<Item = Point> {
        let n = self.size().unwrap_or(0);
        (0..n).map(Point::Nat)
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Finite(n) => write!(f, "finite({n})"),
            Universe::Countable { infinity: false } => write!(f, "nat"),
            Universe::Countable { infinity: true } => write!(f, "nat+inf"),
        }
    }
}

/// How a [`PointMap`] acts on point labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapRule {
    /// Finite domain: point `i` maps to `table[i]`.
    Table(Vec<Point>),
    /// The identity on a countable universe.
    Identity,
    /// Collapse the tail of a countable universe onto one point of
    /// `Finite(window + 1)`: `k < window` maps to `k`; every other point
    /// (including ∞) maps to `window`.
    CollapseTail { window: usize },
}

impl fmt::Display for MapRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapRule::Table(t) => {
                write!(f, "table[")?;
                for (i, p) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
            MapRule::Identity => write!(f, "identity"),
            MapRule::CollapseTail { window } => write!(f, "collapse-tail({window})"),
        }
    }
}

/// A total function between ground sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    domain: Universe,
    codomain: Universe,
    rule: MapRule,
}

impl PointMap {
    /// A map from a finite domain given by its value table.
    pub fn table(
        domain: Universe,
        codomain: Universe,
        table: Vec<Point>,
    ) -> Result<Self, UniverseError> {
        let n = match domain {
            Universe::Finite(n) => n,
            _ => {
                return Err(UniverseError::RuleUniverseMismatch {
                    rule: "table",
                    need: "finite",
                    universe: domain,
                })
            }
        };
        if table.len() != n {
            return Err(UniverseError::TableArity {
                expected: n,
                got: table.len(),
            });
        }
        for &p in &table {
            if !codomain.contains(p) {
                return Err(UniverseError::PointOutOfRange {
                    universe: codomain,
                    point: p,
                });
            }
        }
        Ok(PointMap {
            domain,
            codomain,
            rule: MapRule::Table(table),
        })
    }

    /// The identity map on any universe.
    pub fn identity(u: Universe) -> Self {
        match u {
            Universe::Finite(n) => PointMap {
                domain: u,
                codomain: u,
                rule: MapRule::Table((0..n).map(Point::Nat).collect()),
            },
            Universe::Countable { .. } => PointMap {
                domain: u,
                codomain: u,
                rule: MapRule::Identity,
            },
        }
    }

    /// The quotient of a countable universe onto `Finite(window + 1)` that
    /// keeps the window `0..window` and collapses the whole tail (and ∞,
    /// when present) onto the label `window`.
    pub fn collapse_tail(domain: Universe, window: usize) -> Result<Self, UniverseError> {
        if domain.is_finite() {
            return Err(UniverseError::RuleUniverseMismatch {
                rule: "collapse-tail",
                need: "countable",
                universe: domain,
            });
        }
        Ok(PointMap {
            domain,
            codomain: Universe::Finite(window + 1),
            rule: MapRule::CollapseTail { window },
        })
    }

    /// A constant map from any universe onto one point of the codomain.
    pub fn constant(
        domain: Universe,
        codomain: Universe,
        value: Point,
    ) -> Result<Self, UniverseError> {
        if !codomain.contains(value) {
            return Err(UniverseError::PointOutOfRange {
                universe: codomain,
                point: value,
            });
        }
        match domain {
            Universe::Finite(n) => PointMap::table(domain, codomain, vec![value; n]),
            Universe::Countable { .. } => match (codomain, value) {
                // Constant countable maps are only needed into finite
                // codomains, where collapse with window 0 relabels.
                (Universe::Finite(1), Point::Nat(0)) => {
                    Ok(PointMap::collapse_tail(domain, 0).expect("countable domain"))
                }
                _ => Err(UniverseError::RuleUniverseMismatch {
                    rule: "constant",
                    need: "finite",
                    universe: domain,
                }),
            },
        }
    }

    pub fn domain(&self) -> Universe {
        self.domain
    }

    pub fn codomain(&self) -> Universe {
        self.codomain
    }

    pub fn rule(&self) -> &MapRule {
        &self.rule
    }

    pub fn apply(&self, p: Point) -> Point {
        debug_assert!(self.domain.contains(p), "point {p} outside {}", self.domain);
        match &self.rule {
            MapRule::Table(t) => t[p.expect_nat()],
            MapRule::Identity => p,
            MapRule::CollapseTail { window } => match p {
                Point::Nat(k) if k < *window => Point::Nat(k),
                _ => Point::Nat(*window),
            },
        }
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &PointMap) -> Result<PointMap, UniverseError> {
        if self.codomain != other.domain {
            return Err(UniverseError::ComposeMismatch {
                codomain: self.codomain,
                domain: other.domain,
            });
        }
        match &self.rule {
            MapRule::Table(t) => PointMap::table(
                self.domain,
                other.codomain,
                t.iter().map(|&p| other.apply(p)).collect(),
            ),
            MapRule::Identity => Ok(PointMap {
                domain: self.domain,
                codomain: other.codomain,
                rule: other.rule.clone(),
            }),
            MapRule::CollapseTail { .. } => Err(UniverseError::RuleUniverseMismatch {
                rule: "compose",
                need: "finite-or-identity",
                universe: self.domain,
            }),
        }
    }
}

impl fmt::Display for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.domain, self.codomain, self.rule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_order_puts_infinity_last() {
        let mut pts = vec![Point::Infinity, Point::Nat(3), Point::Nat(0)];
        pts.sort();
        assert_eq!(pts, vec![Point::Nat(0), Point::Nat(3), Point::Infinity]);
    }

    #[test]
    fn universe_membership() {
        assert!(Universe::Finite(3).contains(Point::Nat(2)));
        assert!(!Universe::Finite(3).contains(Point::Nat(3)));
        assert!(!Universe::Finite(3).contains(Point::Infinity));
        assert!(Universe::NAT.contains(Point::Nat(1_000_000)));
        assert!(!Universe::NAT.contains(Point::Infinity));
        assert!(Universe::NAT_INFINITY.contains(Point::Infinity));
    }

    #[test]
    fn table_map_validates() {
        let err = PointMap::table(
            Universe::Finite(2),
            Universe::Finite(2),
            vec![Point::Nat(0), Point::Nat(5)],
        )
        .unwrap_err();
        assert!(matches!(err, UniverseError::PointOutOfRange { .. }));
        let err = PointMap::table(Universe::Finite(2), Universe::Finite(2), vec![Point::Nat(0)])
            .unwrap_err();
        assert!(matches!(err, UniverseError::TableArity { .. }));
    }

    #[test]
    fn collapse_tail_sends_window_and_tail() {
        let q = PointMap::collapse_tail(Universe::NAT_INFINITY, 4).unwrap();
        assert_eq!(q.apply(Point::Nat(2)), Point::Nat(2));
        assert_eq!(q.apply(Point::Nat(4)), Point::Nat(4));
        assert_eq!(q.apply(Point::Nat(99)), Point::Nat(4));
        assert_eq!(q.apply(Point::Infinity), Point::Nat(4));
        assert_eq!(q.codomain(), Universe::Finite(5));
    }

    #[test]
    fn composition_matches_pointwise() {
        let f = PointMap::table(
            Universe::Finite(3),
            Universe::Finite(2),
            vec![Point::Nat(0), Point::Nat(1), Point::Nat(1)],
        )
        .unwrap();
        let g = PointMap::table(
            Universe::Finite(2),
            Universe::Finite(2),
            vec![Point::Nat(1), Point::Nat(0)],
        )
        .unwrap();
        let gf = f.then(&g).unwrap();
        for k in 0..3 {
            assert_eq!(gf.apply(Point::Nat(k)), g.apply(f.apply(Point::Nat(k))));
        }
    }
}
