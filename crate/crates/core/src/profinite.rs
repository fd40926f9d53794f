//! Inverse systems of finite discrete spaces and their limits.
//!
//! A system is a directed poset of indices, one finite discrete space per
//! index, and compatible transition maps downward. Its limit is the set of
//! threads (tuples consistent with every transition) carrying the subspace
//! topology of the product. Spec of a finite Boolean ring is presented as
//! the limit of the Spec spaces of its subrings; conversely a compact
//! totally disconnected space is recovered from its clopen ring through
//! the Stone map.

use std::collections::BTreeMap;

use serde_json::json;
use thiserror::Error;

use crate::converge::{converges, limit_set, pushforward, ConvergeError, LimitPoints};
use crate::ideal::{
    clop_ring, maximal_ideal_at, spec, stone_map, BooleanSubring, IdealError, SpecSpace,
};
use crate::report::{LimitEntry, TheoremReport};
use crate::set::{complement, SetError, Subset};
use crate::topo::{
    is_continuous, is_hausdorff, is_quasi_compact_direct, is_totally_disconnected, product,
    subspace, topology_from_subbasis, FiniteTopology, SymbolicSpace, Topology, TopologyError,
};
use crate::universe::{Point, PointMap, Universe};

/// Default cap on the product scanned during thread filtering.
pub const LIMIT_SCAN_CAP: usize = 1 << 16;
/// Raised cap used by the Lemma I verifier (covers the 4-atom case).
const LEMMA1_SCAN_CAP: usize = 1 << 19;
/// Thread counts beyond this would make the limit topology unmanageable.
const LIMIT_TOPOLOGY_MAX_THREADS: usize = 16;
/// Atom bound for subring-poset enumeration (Bell(5) = 52 subrings).
pub const LEMMA1_ATOM_MAX: usize = 5;
/// Explicit truncation models are materialized up to this size.
const EXPLICIT_MODEL_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("index relation violates poset axioms: {0}")]
    PosetAxiom(String),
    #[error("index poset is not directed: {left} and {right} have no upper bound")]
    NotDirected { left: String, right: String },
    #[error("space at index {0} is not discrete")]
    NotDiscrete(String),
    #[error("missing transition map {from} -> {to}")]
    MissingTransition { from: String, to: String },
    #[error("transition {from} -> {to} has wrong domain or codomain")]
    TransitionMismatch { from: String, to: String },
    #[error("transition for {from} -> {to} given, but {to} is not below {from}")]
    TransitionNotComparable { from: String, to: String },
    #[error("incompatible transitions on the chain {i} ≥ {j} ≥ {k}")]
    IncompatibleTransitions { i: String, j: String, k: String },
    #[error("construction exceeds the size cap of {0}")]
    SizeOverflow(usize),
    #[error("subring-poset verification supports at most {max} atoms, got {got}")]
    AtomLimit { got: usize, max: usize },
    #[error("unsupported space for this verification: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Converge(#[from] ConvergeError),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// A finite poset of index labels, closed reflexively and transitively at
/// construction and checked for antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPoset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl IndexPoset {
    /// Build from covering pairs `(lo, hi)` meaning `lo ≤ hi`.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, SystemError> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in pairs {
            if lo >= n || hi >= n {
                return Err(SystemError::PosetAxiom(format!(
                    "pair ({lo}, {hi}) out of range"
                )));
            }
            leq[lo][hi] = true;
        }
        // transitive closure
        for k in 0..n {
            let row_k = leq[k].clone();
            for row_a in leq.iter_mut() {
                if row_a[k] {
                    for (b, &through) in row_k.iter().enumerate() {
                        if through {
                            row_a[b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(SystemError::PosetAxiom(format!(
                        "{} and {} are mutually below each other",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        Ok(IndexPoset { labels, leq })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// First pair with no upper bound, if any.
    pub fn directedness_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if !(0..n).any(|c| self.leq[a][c] && self.leq[b][c]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The greatest element, when one exists.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|i| self.leq[i][t]))
    }

    /// All ordered comparable pairs `(hi, lo)` with `lo < hi` in the order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for hi in 0..n {
            for lo in 0..n {
                if hi != lo && self.leq[lo][hi] {
                    out.push((hi, lo));
                }
            }
        }
        out
    }
}

/// An inverse system of finite discrete spaces over a directed index
/// poset. `transitions` maps `(i, j)` with `j < i` to the map `X_i → X_j`.
#[derive(Debug, Clone)]
pub struct InverseSystem {
    index: IndexPoset,
    spaces: Vec<FiniteTopology>,
    transitions: BTreeMap<(usize, usize), PointMap>,
}

impl InverseSystem {
    pub fn index(&self) -> &IndexPoset {
        &self.index
    }

    pub fn spaces(&self) -> &[FiniteTopology] {
        &self.spaces
    }

    pub fn space_sizes(&self) -> Vec<usize> {
        self.spaces.iter().map(FiniteTopology::point_count).collect()
    }

    /// The transition map `X_i → X_j` for `j ≤ i` (identity when equal).
    pub fn transition(&self, i: usize, j: usize) -> PointMap {
        if i == j {
            PointMap::identity(self.spaces[i].universe())
        } else {
            self.transitions[&(i, j)].clone()
        }
    }

    /// A linear system: index `0 < 1 < … < k-1`, with `steps[i]` the map
    /// from level `i+1` down to level `i`; longer transitions compose.
    pub fn chain(
        spaces: Vec<FiniteTopology>,
        steps: Vec<PointMap>,
    ) -> Result<InverseSystem, SystemError> {
        let k = spaces.len();
        let labels = (0..k).map(|i| format!("level{i}")).collect();
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        let index = IndexPoset::new(labels, &pairs)?;
        let mut transitions = BTreeMap::new();
        for hi in 0..k {
            for lo in 0..hi {
                let mut map = steps
                    .get(hi - 1)
                    .ok_or(SystemError::MissingTransition {
                        from: format!("level{hi}"),
                        to: format!("level{}", hi - 1),
                    })?
                    .clone();
                for step in (lo..hi - 1).rev() {
                    map = map.then(&steps[step]).map_err(|_| {
                        SystemError::TransitionMismatch {
                            from: format!("level{}", step + 1),
                            to: format!("level{step}"),
                        }
                    })?;
                }
                transitions.insert((hi, lo), map);
            }
        }
        build_system(index, spaces, transitions)
    }
}

/// Validate and assemble an inverse system: discrete spaces, a directed
/// index, transitions exactly on the strict comparable pairs, identity
/// consistency, and the composition law `f_jk ∘ f_ij = f_ik`.
pub fn build_system(
    index: IndexPoset,
    spaces: Vec<FiniteTopology>,
    transitions: BTreeMap<(usize, usize), PointMap>,
) -> Result<InverseSystem, SystemError> {
    let n = index.len();
    if spaces.len() != n {
        return Err(SystemError::PosetAxiom(format!(
            "{} spaces for {} indices",
            spaces.len(),
            n
        )));
    }
    for (i, s) in spaces.iter().enumerate() {
        if !s.is_discrete() {
            return Err(SystemError::NotDiscrete(index.label(i).to_string()));
        }
    }
    if let Some((a, b)) = index.directedness_violation() {
        return Err(SystemError::NotDirected {
            left: index.label(a).to_string(),
            right: index.label(b).to_string(),
        });
    }
    for (&(i, j), map) in &transitions {
        if i == j || !index.leq(j, i) {
            return Err(SystemError::TransitionNotComparable {
                from: index.label(i).to_string(),
                to: index.label(j).to_string(),
            });
        }
        if map.domain() != spaces[i].universe() || map.codomain() != spaces[j].universe() {
            return Err(SystemError::TransitionMismatch {
                from: index.label(i).to_string(),
                to: index.label(j).to_string(),
            });
        }
    }
    for (hi, lo) in index.strict_pairs() {
        if !transitions.contains_key(&(hi, lo)) {
            return Err(SystemError::MissingTransition {
                from: index.label(hi).to_string(),
                to: index.label(lo).to_string(),
            });
        }
    }
    let sys = InverseSystem {
        index,
        spaces,
        transitions,
    };
    // composition law on every chain k ≤ j ≤ i of distinct indices
    let n = sys.index.len();
    for i in 0..n {
        for j in 0..n {
            if i == j || !sys.index.leq(j, i) {
                continue;
            }
            for k in 0..n {
                if k == j || k == i || !sys.index.leq(k, j) {
                    continue;
                }
                let ij = sys.transition(i, j);
                let jk = sys.transition(j, k);
                let ik = sys.transition(i, k);
                let size_i = sys.spaces[i].point_count();
                for p in 0..size_i {
                    let via = jk.apply(ij.apply(Point::Nat(p)));
                    if via != ik.apply(Point::Nat(p)) {
                        return Err(SystemError::IncompatibleTransitions {
                            i: sys.index.label(i).to_string(),
                            j: sys.index.label(j).to_string(),
                            k: sys.index.label(k).to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(sys)
}

/// The inverse limit: threads with the subspace topology of the product.
#[derive(Debug, Clone)]
pub struct LimitSpace {
    pub system: InverseSystem,
    /// Compatible tuples, sorted by their mixed-radix product code.
    pub threads: Vec<Vec<usize>>,
    /// Topology on the thread labels; always discrete for finite systems.
    pub topology: FiniteTopology,
}

impl LimitSpace {
    /// Projection onto factor `i` as a map on thread labels.
    pub fn projection(&self, i: usize) -> PointMap {
        let table = self
            .threads
            .iter()
            .map(|t| Point::Nat(t[i]))
            .collect();
        PointMap::table(
            self.topology.universe(),
            self.system.spaces()[i].universe(),
            table,
        )
        .expect("thread coordinates are in range")
    }
}

fn check_thread(sys: &InverseSystem, tuple: &[usize], pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(hi, lo)| {
        sys.transition(hi, lo).apply(Point::Nat(tuple[hi])) == Point::Nat(tuple[lo])
    })
}

/// Scan the whole product and keep the compatible tuples.
pub fn enumerate_threads_by_scan(
    sys: &InverseSystem,
    cap: usize,
) -> Result<Vec<Vec<usize>>, SystemError> {
    let sizes = sys.space_sizes();
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n))
        .filter(|&t| t <= cap)
        .ok_or(SystemError::SizeOverflow(cap))?;
    if total == 0 {
        return Ok(Vec::new());
    }
    // flat transition tables, one per strict pair
    let pairs: Vec<(usize, usize, Vec<usize>)> = sys
        .index()
        .strict_pairs()
        .into_iter()
        .map(|(hi, lo)| {
            let map = sys.transition(hi, lo);
            let table = (0..sizes[hi])
                .map(|p| map.apply(Point::Nat(p)).expect_nat())
                .collect();
            (hi, lo, table)
        })
        .collect();
    let mut threads = Vec::new();
    let k = sizes.len();
    let mut tuple = vec![0usize; k];
    loop {
        if pairs
            .iter()
            .all(|(hi, lo, table)| table[tuple[*hi]] == tuple[*lo])
        {
            threads.push(tuple.clone());
        }
        // odometer step, rightmost digit least significant
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(threads);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < sizes[pos] {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Enumerate threads through a greatest index: every thread is determined
/// by its coordinate there, so the candidates are exactly the tuples
/// pushed down from top points, filtered by the compatibility equations.
pub fn enumerate_threads_via_top(sys: &InverseSystem) -> Option<Vec<Vec<usize>>> {
    let top = sys.index().top()?;
    let n = sys.index().len();
    let pairs = sys.index().strict_pairs();
    let sizes = sys.space_sizes();
    let mut threads: Vec<Vec<usize>> = Vec::new();
    for x in 0..sizes[top] {
        let tuple: Vec<usize> = (0..n)
            .map(|i| sys.transition(top, i).apply(Point::Nat(x)).expect_nat())
            .collect();
        if check_thread(sys, &tuple, &pairs) {
            threads.push(tuple);
        }
    }
    // lexicographic tuple order is the mixed-radix product-code order
    threads.sort();
    Some(threads)
}

fn assemble_limit(sys: &InverseSystem, threads: Vec<Vec<usize>>) -> Result<LimitSpace, SystemError> {
    if threads.len() > LIMIT_TOPOLOGY_MAX_THREADS {
        return Err(SystemError::SizeOverflow(LIMIT_TOPOLOGY_MAX_THREADS));
    }
    let u = Universe::Finite(threads.len());
    // traces of the subbasic product opens: fixing one coordinate suffices
    // for discrete factors
    let mut subbasis = Vec::new();
    for i in 0..sys.index().len() {
        for v in 0..sys.spaces()[i].point_count() {
            subbasis.push(Subset::from_labels(
                u,
                threads
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t[i] == v)
                    .map(|(idx, _)| idx),
            )?);
        }
    }
    let topology = topology_from_subbasis(u, &subbasis)?;
    Ok(LimitSpace {
        system: sys.clone(),
        threads,
        topology,
    })
}

/// Compute the limit by product scan-and-filter, bounded by `cap`.
pub fn limit(sys: &InverseSystem, cap: usize) -> Result<LimitSpace, SystemError> {
    let threads = enumerate_threads_by_scan(sys, cap)?;
    assemble_limit(sys, threads)
}

/// Outcome of presenting Spec(R) as an inverse limit over the full
/// subring poset.
#[derive(Debug, Clone)]
pub struct LemmaOneOutcome {
    pub report: TheoremReport,
    pub system: InverseSystem,
    pub limit: LimitSpace,
    pub spec_space: SpecSpace,
    pub subring_count: usize,
    pub bijective: bool,
    pub homeomorphism: bool,
}

/// All partitions of `0..k` as restricted-growth strings, in generation
/// order.
pub fn partitions_rgs(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; k];
    fn rec(current: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=max_used + 1 {
            current[pos] = v;
            rec(current, pos + 1, max_used.max(v), out);
        }
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    current[0] = 0;
    rec(&mut current, 1, 0, &mut out);
    out
}

/// All subrings of a finite Boolean ring, i.e. all coarsenings of its atom
/// partition.
pub fn enumerate_subrings(r: &BooleanSubring) -> Result<Vec<BooleanSubring>, SystemError> {
    let k = r.block_count();
    if k > LEMMA1_ATOM_MAX {
        return Err(SystemError::AtomLimit {
            got: k,
            max: LEMMA1_ATOM_MAX,
        });
    }
    let mut out = Vec::new();
    for rgs in partitions_rgs(k) {
        let parts = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Subset> = Vec::with_capacity(parts);
        for part in 0..parts {
            let mut acc = Subset::empty(r.universe());
            for (atom, &assigned) in rgs.iter().enumerate() {
                if assigned == part {
                    acc = crate::set::union(&acc, &r.blocks()[atom])?;
                }
            }
            blocks.push(acc);
        }
        out.push(BooleanSubring::from_blocks(r.universe(), blocks)?);
    }
    Ok(out)
}

/// Build the inverse system of Spec spaces over the full subring poset of
/// `r`, with contraction transitions.
pub fn subring_spec_system(r: &BooleanSubring) -> Result<(InverseSystem, Vec<BooleanSubring>), SystemError> {
    let subrings = enumerate_subrings(r)?;
    let n = subrings.len();
    let labels = (0..n).map(|i| format!("r{i}")).collect();
    let mut pairs = Vec::new();
    for lo in 0..n {
        for hi in 0..n {
            if lo != hi && subrings[lo].is_subring_of(&subrings[hi]) {
                pairs.push((lo, hi));
            }
        }
    }
    let index = IndexPoset::new(labels, &pairs)?;
    let spaces: Vec<FiniteTopology> = subrings.iter().map(|s| spec(s).topology).collect();
    let mut transitions = BTreeMap::new();
    for (hi, lo) in index.strict_pairs() {
        // Spec(R_hi) → Spec(R_lo): a block maps to the block containing it
        let table = subrings[hi]
            .blocks()
            .iter()
            .map(|b| {
                let witness = b.iter_points()[0];
                Point::Nat(
                    subrings[lo]
                        .block_of(witness)
                        .expect("blocks cover the ground set"),
                )
            })
            .collect();
        transitions.insert(
            (hi, lo),
            PointMap::table(spaces[hi].universe(), spaces[lo].universe(), table)
                .expect("valid contraction table"),
        );
    }
    Ok((build_system(index, spaces, transitions)?, subrings))
}

/// Spec(R) is the limit of the Spec spaces of the subrings of R: build the
/// system, compute the limit, and verify the canonical map M ↦ (M ∩ R_i)
/// is a homeomorphism.
pub fn verify_lemma_i(r: &BooleanSubring) -> Result<LemmaOneOutcome, SystemError> {
    let (sys, subrings) = subring_spec_system(r)?;
    let sizes = sys.space_sizes();
    let product_size = sizes.iter().try_fold(1usize, |a, &b| a.checked_mul(b));
    let threads = match product_size {
        Some(total) if total <= LEMMA1_SCAN_CAP => {
            enumerate_threads_by_scan(&sys, LEMMA1_SCAN_CAP)?
        }
        _ => enumerate_threads_via_top(&sys)
            .ok_or_else(|| SystemError::Unsupported("subring poset has no top".to_string()))?,
    };
    let lim = assemble_limit(&sys, threads)?;

    let spec_space = spec(r);
    // canonical map: the maximal ideal at an atom contracts to the block
    // containing that atom in each subring
    let canonical: Vec<Vec<usize>> = r
        .blocks()
        .iter()
        .map(|atom| {
            let witness = atom.iter_points()[0];
            subrings
                .iter()
                .map(|s| s.block_of(witness).expect("blocks cover the ground set"))
                .collect()
        })
        .collect();

    let mut image_sorted = canonical.clone();
    image_sorted.sort();
    image_sorted.dedup();
    let mut threads_sorted = lim.threads.clone();
    threads_sorted.sort();
    let bijective =
        image_sorted.len() == canonical.len() && image_sorted == threads_sorted;

    // continuity and closedness of the canonical map; automatic on finite
    // discrete spaces, checked anyway
    let homeomorphism = if bijective {
        let table = canonical
            .iter()
            .map(|tuple| {
                Point::Nat(
                    lim.threads
                        .iter()
                        .position(|t| t == tuple)
                        .expect("bijectivity puts every image among the threads"),
                )
            })
            .collect();
        let map = PointMap::table(
            spec_space.topology.universe(),
            lim.topology.universe(),
            table,
        )
        .expect("valid canonical table");
        let forward = is_continuous(
            &map,
            &Topology::Finite(spec_space.topology.clone()),
            &Topology::Finite(lim.topology.clone()),
        )?;
        let closed = spec_space.topology.opens().iter().all(|open| {
            let c = complement(open);
            let img = Subset::from_labels(
                lim.topology.universe(),
                c.iter_points().iter().map(|p| map.apply(*p).expect_nat()),
            )
            .expect("canonical images are thread labels");
            lim.topology.is_closed(&img)
        });
        forward && closed
    } else {
        false
    };

    let direct = {
        let t = Topology::Finite(spec_space.topology.clone());
        is_quasi_compact_direct(&t).quasi_compact
            && is_hausdorff(&t)?.hausdorff
            && is_totally_disconnected(&t)?
    };
    let ring = bijective && homeomorphism && lim.threads.len() == r.block_count();
    let mut report = TheoremReport::new(format!("Spec({r})"), "lemma1", direct, ring);
    report = report.with_witness(json!({
        "atoms": r.block_count(),
        "subrings": subrings.len(),
        "threads": lim.threads.len(),
        "bijective": bijective,
    }));
    Ok(LemmaOneOutcome {
        report,
        subring_count: subrings.len(),
        system: sys,
        limit: lim,
        spec_space,
        bijective,
        homeomorphism,
    })
}

/// Subspaces of products of Hausdorff totally disconnected spaces are
/// Hausdorff and totally disconnected. Precondition failures are reported,
/// not asserted.
pub fn verify_lemma_ii(
    factors: &[&FiniteTopology],
    s: &Subset,
) -> Result<TheoremReport, SystemError> {
    let space_desc = format!(
        "subspace({} factors, {s})",
        factors.len()
    );
    for (i, f) in factors.iter().enumerate() {
        let t = Topology::Finite((*f).clone());
        let h = is_hausdorff(&t)?.hausdorff;
        let td = is_totally_disconnected(&t)?;
        if !h || !td {
            let mut failed = Vec::new();
            if !h {
                failed.push("hausdorff");
            }
            if !td {
                failed.push("totally-disconnected");
            }
            return Ok(TheoremReport::new(space_desc, "lemma2", false, false)
                .with_witness(json!({
                    "precondition_failed": { "factor": i, "hypotheses": failed },
                })));
        }
    }
    let total: usize = factors.iter().map(|f| f.point_count()).product();
    if total > 16 {
        return Err(SystemError::SizeOverflow(16));
    }
    let prod = product(factors)?;
    let view = subspace(&prod.topology, s)?;
    let t = Topology::Finite(view.topology.clone());
    let h = is_hausdorff(&t)?;
    let td = is_totally_disconnected(&t)?;
    let ring = h.hausdorff && td;
    let mut report = TheoremReport::new(space_desc, "lemma2", true, ring);
    if let Some((a, b)) = h.violating_pair {
        report = report.with_witness(json!({
            "violating_pair": [a.to_string(), b.to_string()],
        }));
    }
    Ok(report)
}

/// Forward direction of the profinite characterization: the limit of an
/// inverse system is compact and totally disconnected, with each maximal
/// ideal converging to exactly the thread assembled from its projections.
pub fn profinite_is_compact_totdisc(sys: &InverseSystem) -> Result<TheoremReport, SystemError> {
    let lim = limit(sys, LIMIT_SCAN_CAP)?;
    let t = Topology::Finite(lim.topology.clone());
    let direct = is_quasi_compact_direct(&t).quasi_compact
        && is_hausdorff(&t)?.hausdorff
        && is_totally_disconnected(&t)?;

    let mut ring = true;
    let mut witness = None;
    let mut limits = Vec::new();
    'ideals: for (idx, thread) in lim.threads.iter().enumerate() {
        let m = maximal_ideal_at(lim.topology.universe(), Point::Nat(idx))?;
        let ls = limit_set(&m, &t)?;
        limits.push(LimitEntry::from_limit_set(&ls));

        // contract along every projection and re-assemble the tuple
        let mut coords = Vec::with_capacity(sys.index().len());
        for i in 0..sys.index().len() {
            let contracted = pushforward(&m, &lim.projection(i))?;
            coords.push(contracted.point().expect("principal contraction").expect_nat());
        }
        for (hi, lo) in sys.index().strict_pairs() {
            if sys.transition(hi, lo).apply(Point::Nat(coords[hi])) != Point::Nat(coords[lo]) {
                ring = false;
                witness = Some(json!({
                    "ideal": m.describe(),
                    "failure": "projection coordinates incompatible",
                }));
                break 'ideals;
            }
        }
        if coords != *thread {
            ring = false;
            witness = Some(json!({
                "ideal": m.describe(),
                "failure": "assembled tuple is not the thread",
            }));
            break 'ideals;
        }
        if !converges(&m, Point::Nat(idx), &t)?
            || ls.points != LimitPoints::Finite(Subset::from_labels(
                lim.topology.universe(),
                [idx],
            )?)
        {
            ring = false;
            witness = Some(json!({
                "ideal": m.describe(),
                "failure": "ideal does not converge uniquely to its thread",
            }));
            break 'ideals;
        }
    }

    let mut report = TheoremReport::new(
        format!(
            "limit({} indices, sizes {:?})",
            sys.index().len(),
            sys.space_sizes()
        ),
        "theorem2",
        direct,
        ring,
    )
    .with_limits(limits);
    if let Some(w) = witness {
        report = report.with_witness(w);
    }
    Ok(report)
}

/// Backward direction: a compact totally disconnected space is presented
/// as an inverse limit through its clopen ring and the Stone map.
#[derive(Debug)]
pub struct TheoremTwoBackward {
    pub report: TheoremReport,
    pub presentation: Option<LemmaOneOutcome>,
}

/// Verify `compact + totally disconnected ⇒ profinite` on a finite space,
/// or on the one-point compactification via truncation models using the
/// partition `{{0},…,{N−1}, tail ∪ {∞}}`.
pub fn compact_totdisc_is_profinite(
    t: &Topology,
    truncation_sizes: &[usize],
) -> Result<TheoremTwoBackward, SystemError> {
    match t {
        Topology::Finite(ft) => {
            let space = Topology::Finite(ft.clone());
            let qc = is_quasi_compact_direct(&space).quasi_compact;
            let h = is_hausdorff(&space)?.hausdorff;
            let td = is_totally_disconnected(&space)?;
            if !(qc && h && td) {
                let mut failed = Vec::new();
                if !qc {
                    failed.push("quasi-compact");
                }
                if !h {
                    failed.push("hausdorff");
                }
                if !td {
                    failed.push("totally-disconnected");
                }
                let report = TheoremReport::new(space.describe(), "theorem2", false, false)
                    .with_witness(json!({ "failed_hypotheses": failed }));
                return Ok(TheoremTwoBackward {
                    report,
                    presentation: None,
                });
            }
            let st = stone_map(ft)?;
            let outcome = verify_lemma_i(&clop_ring(ft))?;
            let ring = st.homeomorphism()
                && outcome.bijective
                && outcome.limit.threads.len() == ft.point_count();
            let report = TheoremReport::new(space.describe(), "theorem2", true, ring)
                .with_witness(json!({
                    "stone_bijective": st.bijective,
                    "stone_continuous": st.continuous,
                    "stone_closed": st.closed,
                    "subrings": outcome.subring_count,
                    "threads": outcome.limit.threads.len(),
                }));
            Ok(TheoremTwoBackward {
                report,
                presentation: Some(outcome),
            })
        }
        Topology::Symbolic(SymbolicSpace::OnePointCompactification) => {
            let mut model_results = Vec::new();
            let mut ring = true;
            for &n in truncation_sizes {
                if n <= EXPLICIT_MODEL_MAX {
                    // quotient model: the tail class collapses to one point
                    // of a discrete space
                    let model = truncation_model(SymbolicSpace::OnePointCompactification, n)?;
                    let st = stone_map(&model)?;
                    let ok = st.homeomorphism() && st.spec.point_count() == n + 1;
                    ring &= ok;
                    model_results.push(json!({
                        "size": n,
                        "mode": "explicit",
                        "spec_points": st.spec.point_count(),
                        "stone_homeomorphism": st.homeomorphism(),
                    }));
                } else {
                    // algebra-level check: the partition classes are clopen
                    // in the symbolic space
                    let u = Universe::NAT_INFINITY;
                    let sym = SymbolicSpace::OnePointCompactification;
                    let mut all_clopen = true;
                    for k in 0..n {
                        let s = Subset::from_labels(u, [k])?;
                        all_clopen &= sym.is_open(&s)? && sym.is_open(&complement(&s))?;
                    }
                    let tail = Subset::cofinite(u, (0..n).map(Point::Nat))?;
                    all_clopen &= sym.is_open(&tail)? && sym.is_open(&complement(&tail))?;
                    ring &= all_clopen;
                    model_results.push(json!({
                        "size": n,
                        "mode": "algebra",
                        "partition_classes_clopen": all_clopen,
                    }));
                }
            }
            let qc = is_quasi_compact_direct(t).quasi_compact;
            let h = is_hausdorff(t)?.hausdorff;
            let td = is_totally_disconnected(t)?;
            let report = TheoremReport::new(t.describe(), "theorem2", qc && h && td, ring)
                .with_witness(json!({ "truncations": model_results }));
            Ok(TheoremTwoBackward {
                report,
                presentation: None,
            })
        }
        Topology::Symbolic(sym) => {
            let qc = is_quasi_compact_direct(t).quasi_compact;
            let h = is_hausdorff(t)?.hausdorff;
            let td = is_totally_disconnected(t)?;
            let mut failed = Vec::new();
            if !qc {
                failed.push("quasi-compact");
            }
            if !h {
                failed.push("hausdorff");
            }
            if !td {
                failed.push("totally-disconnected");
            }
            let report = TheoremReport::new(sym.name().to_string(), "theorem2", false, false)
                .with_witness(json!({ "failed_hypotheses": failed }));
            Ok(TheoremTwoBackward {
                report,
                presentation: None,
            })
        }
    }
}

/// The finite quotient of a symbolic space along the tail collapse
/// `k ↦ min(k, n)`: points `0..n` plus one tail class. Discrete ℕ and the
/// one-point compactification quotient to `discrete(n+1)`; cofinite ℕ
/// quotients to the particular-point topology at the tail.
pub fn truncation_model(space: SymbolicSpace, n: usize) -> Result<FiniteTopology, SystemError> {
    if n > EXPLICIT_MODEL_MAX {
        return Err(SystemError::SizeOverflow(EXPLICIT_MODEL_MAX));
    }
    let u = Universe::Finite(n + 1);
    Ok(match space {
        SymbolicSpace::DiscreteNat | SymbolicSpace::OnePointCompactification => {
            FiniteTopology::discrete(n + 1)
        }
        SymbolicSpace::CofiniteNat => {
            let mut opens = vec![Subset::empty(u)];
            for mask in 0u64..(1 << (n + 1)) {
                if mask >> n & 1 == 1 {
                    opens.push(Subset::from_mask(u, mask));
                }
            }
            crate::topo::topology_from_opens(u, opens)?
        }
    })
}
