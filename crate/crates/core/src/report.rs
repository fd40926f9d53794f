//! Theorem reports: the agreement record between a direct topological
//! predicate and its ideal-convergence counterpart.
//!
//! JSON schema:
//! `{ "space": ..., "theorem": "I"|"III"|"compact"|"tychonoff"|"alexander",
//!    "direct": bool, "ring": bool, "agree": bool, "witness": {...}?,
//!    "limits": [{"ideal": ..., "points": [...]}] }`
//! The profinite verifiers reuse the same shape with theorem tags
//! `lemma1`, `lemma2`, and `theorem2`.

use serde::Serialize;
use serde_json::Value;

use crate::converge::{LimitPoints, LimitSet};
use crate::universe::Point;

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub space: String,
    pub theorem: String,
    pub direct: bool,
    pub ring: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub limits: Vec<LimitEntry>,
}

impl TheoremReport {
    pub fn new(space: String, theorem: &str, direct: bool, ring: bool) -> Self {
        TheoremReport {
            space,
            theorem: theorem.to_string(),
            direct,
            ring,
            agree: direct == ring,
            witness: None,
            limits: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_limits(mut self, limits: Vec<LimitEntry>) -> Self {
        self.limits = limits;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitEntry {
    pub ideal: String,
    pub points: LimitPointsJson,
}

impl LimitEntry {
    pub fn from_limit_set(ls: &LimitSet) -> Self {
        LimitEntry {
            ideal: ls.ideal.describe(),
            points: LimitPointsJson::from(&ls.points),
        }
    }
}

/// Either an explicit point list or the marker `"all"`.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum LimitPointsJson {
    All(&'static str),
    Points(Vec<Value>),
}

pub fn point_to_json(p: Point) -> Value {
    match p {
        Point::Nat(k) => Value::from(k),
        Point::Infinity => Value::from("inf"),
    }
}

impl From<&LimitPoints> for LimitPointsJson {
    fn from(lp: &LimitPoints) -> Self {
        match lp {
            LimitPoints::All => LimitPointsJson::All("all"),
            LimitPoints::None => LimitPointsJson::Points(Vec::new()),
            LimitPoints::Single(p) => LimitPointsJson::Points(vec![point_to_json(*p)]),
            LimitPoints::Finite(s) => LimitPointsJson::Points(
                s.iter_points().into_iter().map(point_to_json).collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_field_order_and_names() {
        let rep = TheoremReport::new("sierpinski".into(), "III", false, false);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["space"], "sierpinski");
        assert_eq!(json["theorem"], "III");
        assert_eq!(json["direct"], false);
        assert_eq!(json["ring"], false);
        assert_eq!(json["agree"], true);
        assert!(json.get("witness").is_none());
        assert!(json["limits"].as_array().unwrap().is_empty());
    }

    #[test]
    fn all_marker_serializes_as_string() {
        let entry = LimitEntry {
            ideal: "frechet".into(),
            points: LimitPointsJson::All("all"),
        };
        assert_eq!(
            serde_json::to_string(&entry).unwrap(),
            r#"{"ideal":"frechet","points":"all"}"#
        );
    }
}
