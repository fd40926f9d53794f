//! Fixture text formats, JSON projections, and DOT export.
//!
//! Set literals: `{0,2,5}`, cofinite `~{0,2}`, with `inf` for the point at
//! infinity; `{}` and `~{}` are the zero and unit of a countable universe.
//! Topologies: `universe 3; opens {} {1} {0,1} {0,1,2}` or
//! `symbolic cofinite-nat`. Rings: `universe 4; gens {0,1} {2}`. Inverse
//! systems are line-based: `indices`, `order`, `space`, and `trans` lines.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::ideal::{BooleanSubring, SpecSpace};
use crate::profinite::{build_system, IndexPoset, InverseSystem, LimitSpace, SystemError};
use crate::set::{SetError, Subset};
use crate::topo::{topology_from_opens, SymbolicSpace, Topology, TopologyError};
use crate::universe::{Point, PointMap, Universe};
use crate::IdealError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("malformed set literal: {0}")]
    BadSetLiteral(String),
    #[error("malformed point label: {0}")]
    BadPoint(String),
    #[error("malformed fixture: {0}")]
    BadFixture(String),
    #[error("unknown symbolic space: {0}")]
    UnknownSymbolic(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("invalid topology: {0}")]
    Topology(#[from] TopologyError),
    #[error("invalid ring: {0}")]
    Ideal(#[from] IdealError),
    #[error("invalid system: {0}")]
    System(String),
}

impl From<SystemError> for ParseError {
    fn from(e: SystemError) -> Self {
        ParseError::System(e.to_string())
    }
}

pub fn parse_point(s: &str) -> Result<Point, ParseError> {
    if s == "inf" {
        return Ok(Point::Infinity);
    }
    s.parse::<usize>()
        .map(Point::Nat)
        .map_err(|_| ParseError::BadPoint(s.to_string()))
}

/// Parse a set literal over the given universe.
pub fn parse_subset(text: &str, u: Universe) -> Result<Subset, ParseError> {
    let text = text.trim();
    let (cofinite, body) = match text.strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let inner = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| ParseError::BadSetLiteral(text.to_string()))?;
    let mut points = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        points.push(parse_point(part)?);
    }
    if cofinite {
        Ok(Subset::cofinite(u, points)?)
    } else {
        Ok(Subset::from_points(u, points)?)
    }
}

pub fn parse_symbolic(name: &str) -> Result<SymbolicSpace, ParseError> {
    match name {
        "discrete-nat" => Ok(SymbolicSpace::DiscreteNat),
        "cofinite-nat" => Ok(SymbolicSpace::CofiniteNat),
        "one-point" => Ok(SymbolicSpace::OnePointCompactification),
        other => Err(ParseError::UnknownSymbolic(other.to_string())),
    }
}

/// Parse a topology fixture: `universe N; opens <set>*` or
/// `symbolic <name>`.
pub fn parse_topology(text: &str) -> Result<Topology, ParseError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("symbolic") {
        return Ok(Topology::Symbolic(parse_symbolic(rest.trim())?));
    }
    let (universe_part, opens_part) = text
        .split_once(';')
        .ok_or_else(|| ParseError::BadFixture("expected `universe N; opens ...`".to_string()))?;
    let n = parse_universe_clause(universe_part)?;
    let u = Universe::Finite(n);
    let opens_part = opens_part.trim();
    let sets_text = opens_part
        .strip_prefix("opens")
        .ok_or_else(|| ParseError::BadFixture("expected `opens` clause".to_string()))?;
    let mut opens = Vec::new();
    for tok in sets_text.split_whitespace() {
        opens.push(parse_subset(tok, u)?);
    }
    Ok(Topology::Finite(topology_from_opens(u, opens)?))
}

fn parse_universe_clause(text: &str) -> Result<usize, ParseError> {
    let rest = text
        .trim()
        .strip_prefix("universe")
        .ok_or_else(|| ParseError::BadFixture("expected `universe N`".to_string()))?;
    rest.trim()
        .parse::<usize>()
        .map_err(|_| ParseError::BadFixture(format!("bad universe size: {rest}")))
}

pub fn format_topology(t: &Topology) -> String {
    match t {
        Topology::Finite(ft) => {
            let opens: Vec<String> = ft.opens().iter().map(|s| s.to_string()).collect();
            format!(
                "universe {}; opens {}",
                ft.point_count(),
                opens.join(" ")
            )
        }
        Topology::Symbolic(s) => format!("symbolic {}", s.name()),
    }
}

/// Parse a ring presentation: `universe N; gens <set>*`.
pub fn parse_ring(text: &str) -> Result<BooleanSubring, ParseError> {
    let (universe_part, gens_part) = text
        .trim()
        .split_once(';')
        .ok_or_else(|| ParseError::BadFixture("expected `universe N; gens ...`".to_string()))?;
    let n = parse_universe_clause(universe_part)?;
    let u = Universe::Finite(n);
    let sets_text = gens_part
        .trim()
        .strip_prefix("gens")
        .ok_or_else(|| ParseError::BadFixture("expected `gens` clause".to_string()))?;
    let mut gens = Vec::new();
    for tok in sets_text.split_whitespace() {
        gens.push(parse_subset(tok, u)?);
    }
    Ok(BooleanSubring::generated(u, &gens)?)
}

/// Parse an inverse-system fixture. Line-based; `#` starts a comment.
///
/// ```text
/// indices a b c
/// order a <= c
/// order b <= c
/// space a 1
/// space b 2
/// space c 2
/// trans c a 0 0
/// trans c b 0 1
/// ```
///
/// A `trans` line is required for every strictly comparable pair after
/// transitive closure.
pub fn parse_inverse_system(text: &str) -> Result<InverseSystem, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut order_pairs: Vec<(String, String)> = Vec::new();
    let mut sizes: BTreeMap<String, usize> = BTreeMap::new();
    let mut trans_lines: Vec<(String, String, Vec<usize>)> = Vec::new();

    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("indices") => {
                labels = words.map(str::to_string).collect();
            }
            Some("order") => {
                let toks: Vec<&str> = words.collect();
                if toks.len() != 3 || toks[1] != "<=" {
                    return Err(ParseError::BadFixture(format!(
                        "order line must read `order j <= i`: {line}"
                    )));
                }
                order_pairs.push((toks[0].to_string(), toks[2].to_string()));
            }
            Some("space") => {
                let name = words
                    .next()
                    .ok_or_else(|| ParseError::BadFixture(format!("bad space line: {line}")))?;
                let size: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| ParseError::BadFixture(format!("bad space line: {line}")))?;
                sizes.insert(name.to_string(), size);
            }
            Some("trans") => {
                let from = words
                    .next()
                    .ok_or_else(|| ParseError::BadFixture(format!("bad trans line: {line}")))?;
                let to = words
                    .next()
                    .ok_or_else(|| ParseError::BadFixture(format!("bad trans line: {line}")))?;
                let vals: Result<Vec<usize>, _> = words.map(str::parse).collect();
                let vals = vals
                    .map_err(|_| ParseError::BadFixture(format!("bad trans table: {line}")))?;
                trans_lines.push((from.to_string(), to.to_string(), vals));
            }
            Some(other) => {
                return Err(ParseError::BadFixture(format!("unknown directive: {other}")))
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    if labels.is_empty() {
        return Err(ParseError::BadFixture("missing `indices` line".to_string()));
    }
    let find = |name: &str| -> Result<usize, ParseError> {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| ParseError::BadFixture(format!("unknown index: {name}")))
    };
    let mut pairs = Vec::new();
    for (lo, hi) in &order_pairs {
        pairs.push((find(lo)?, find(hi)?));
    }
    let index = IndexPoset::new(labels.clone(), &pairs)?;
    let mut spaces = Vec::new();
    for l in &labels {
        let size = sizes
            .get(l)
            .ok_or_else(|| ParseError::BadFixture(format!("missing `space {l} N` line")))?;
        if *size > 12 {
            return Err(ParseError::BadFixture(format!(
                "space {l} has {size} points; explicit discrete spaces are capped at 12"
            )));
        }
        spaces.push(crate::topo::FiniteTopology::discrete(*size));
    }
    let mut transitions = BTreeMap::new();
    for (from, to, vals) in trans_lines {
        let (i, j) = (find(&from)?, find(&to)?);
        let map = PointMap::table(
            Universe::Finite(sizes[&from]),
            Universe::Finite(sizes[&to]),
            vals.into_iter().map(Point::Nat).collect(),
        )
        .map_err(|e| ParseError::BadFixture(format!("trans {from} {to}: {e}")))?;
        transitions.insert((i, j), map);
    }
    Ok(build_system(index, spaces, transitions)?)
}

pub fn subset_labels_json(s: &Subset) -> Value {
    Value::Array(
        s.iter_points()
            .into_iter()
            .map(crate::report::point_to_json)
            .collect(),
    )
}

/// Topology as JSON, mirroring the fixture structure.
pub fn topology_json(t: &Topology) -> Value {
    match t {
        Topology::Finite(ft) => json!({
            "universe": ft.point_count(),
            "opens": ft.opens().iter().map(subset_labels_json).collect::<Vec<_>>(),
        }),
        Topology::Symbolic(s) => json!({ "symbolic": s.name() }),
    }
}

/// Partition as JSON: blocks as sorted label arrays.
pub fn partition_json(r: &BooleanSubring) -> Value {
    json!({
        "universe": r.universe().size(),
        "blocks": r.blocks().iter().map(subset_labels_json).collect::<Vec<_>>(),
    })
}

pub fn spec_json(sp: &SpecSpace) -> Value {
    json!({
        "points": sp.point_count(),
        "blocks": sp.ring.blocks().iter().map(subset_labels_json).collect::<Vec<_>>(),
        "discrete": sp.topology.is_discrete(),
        "opens": sp.topology.opens().len(),
    })
}

/// DOT graph of a Spec space: one node per point, labeled by its block.
pub fn dot_spec(sp: &SpecSpace) -> String {
    let mut out = String::from("graph spec {\n  node [shape=box];\n");
    for (i, b) in sp.ring.blocks().iter().enumerate() {
        out.push_str(&format!("  p{i} [label=\"{b}\"];\n"));
    }
    out.push_str("}\n");
    out
}

fn hasse_pairs(index: &IndexPoset) -> Vec<(usize, usize)> {
    // covering pairs: lo < hi with nothing strictly between
    let mut out = Vec::new();
    for (hi, lo) in index.strict_pairs() {
        let middle = (0..index.len()).any(|m| {
            m != hi && m != lo && index.leq(lo, m) && index.leq(m, hi)
        });
        if !middle {
            out.push((lo, hi));
        }
    }
    out
}

/// DOT graph of a system's index poset, nodes annotated with space sizes.
pub fn dot_poset(sys: &InverseSystem) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for i in 0..sys.index().len() {
        out.push_str(&format!(
            "  n{i} [label=\"{} ({} pts)\"];\n",
            sys.index().label(i),
            sys.spaces()[i].point_count()
        ));
    }
    for (lo, hi) in hasse_pairs(sys.index()) {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT graph of a limit: per-index point columns, transition edges along
/// covering pairs, and one colored path per thread.
pub fn dot_threads(lim: &LimitSpace) -> String {
    let sys = &lim.system;
    let mut out = String::from("digraph threads {\n  rankdir=LR;\n");
    for i in 0..sys.index().len() {
        out.push_str(&format!(
            "  subgraph cluster_{i} {{ label=\"{}\";",
            sys.index().label(i)
        ));
        for p in 0..sys.spaces()[i].point_count() {
            out.push_str(&format!(" x{i}_{p} [label=\"{p}\"];"));
        }
        out.push_str(" }\n");
    }
    for (lo, hi) in hasse_pairs(sys.index()) {
        let map = sys.transition(hi, lo);
        for p in 0..sys.spaces()[hi].point_count() {
            let q = map.apply(Point::Nat(p)).expect_nat();
            out.push_str(&format!("  x{hi}_{p} -> x{lo}_{q};\n"));
        }
    }
    for (t, thread) in lim.threads.iter().enumerate() {
        out.push_str(&format!(
            "  // thread {t}: ({})\n",
            thread
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_literals_round_trip() {
        let u = Universe::Finite(6);
        for text in ["{}", "{0,2,5}", "{1}"] {
            let s = parse_subset(text, u).unwrap();
            assert_eq!(s.to_string(), text);
        }
        let s = parse_subset("~{0,2}", Universe::NAT).unwrap();
        assert_eq!(s.to_string(), "~{0,2}");
        let s = parse_subset("~{}", Universe::NAT).unwrap();
        assert!(s.is_whole());
        let s = parse_subset("{3,inf}", Universe::NAT_INFINITY).unwrap();
        assert!(s.contains(Point::Infinity));
        assert!(parse_subset("~{0}", Universe::Finite(2)).is_err());
        assert!(parse_subset("0,1", Universe::Finite(2)).is_err());
    }

    #[test]
    fn topology_fixture_round_trip() {
        let text = "universe 3; opens {} {1} {0,1} {0,1,2}";
        let t = parse_topology(text).unwrap();
        assert_eq!(format_topology(&t), text);
        let t = parse_topology("symbolic cofinite-nat").unwrap();
        assert_eq!(format_topology(&t), "symbolic cofinite-nat");
        assert!(parse_topology("universe 3; opens {0}").is_err());
        assert!(parse_topology("symbolic euclidean").is_err());
    }

    #[test]
    fn ring_fixture_parses() {
        let r = parse_ring("universe 4; gens {0,1} {2}").unwrap();
        assert_eq!(r.block_count(), 3);
        let r = parse_ring("universe 3; gens").unwrap();
        assert_eq!(r.block_count(), 1);
    }

    #[test]
    fn inverse_system_fixture_parses() {
        let text = "\
# two-level chain
indices a b
order a <= b
space a 1
space b 2
trans b a 0 0
";
        let sys = parse_inverse_system(text).unwrap();
        assert_eq!(sys.index().len(), 2);
        assert_eq!(sys.space_sizes(), vec![1, 2]);
        let lim = crate::profinite::limit(&sys, 1 << 16).unwrap();
        assert_eq!(lim.threads.len(), 2);
    }

    #[test]
    fn dot_outputs_contain_nodes() {
        let r = parse_ring("universe 3; gens {0}").unwrap();
        let sp = crate::ideal::spec(&r);
        let dot = dot_spec(&sp);
        assert!(dot.contains("p0"));
        assert!(dot.contains("p1"));

        let sys = parse_inverse_system(
            "indices a b\norder a <= b\nspace a 1\nspace b 2\ntrans b a 0 0\n",
        )
        .unwrap();
        assert!(dot_poset(&sys).contains("n0 -> n1"));
        let lim = crate::profinite::limit(&sys, 1 << 16).unwrap();
        assert!(dot_threads(&lim).contains("x1_0 -> x0_0"));
    }
}
