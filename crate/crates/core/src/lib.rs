//! Computable point-set topology through the ring of subsets.
//!
//! The power set of a ground set is a Boolean ring under symmetric
//! difference and intersection. This crate makes the ring-theoretic view of
//! topology executable at desk scale: ideals and maximal ideals of the
//! subset ring, Zariski convergence of maximal ideals in a topology, Spec
//! of finite Boolean subrings with the `D(f)` topology, the Stone map, and
//! inverse limits of finite discrete spaces. Theorem checkers compare the
//! direct topological predicates (quasi-compact, Hausdorff, compact,
//! profinite) against their ideal-convergence counterparts and report
//! agreement, exhaustively over all topologies on small ground sets and in
//! closed form (validated by finite truncations) for three named infinite
//! spaces.

pub mod converge;
pub mod enumerate;
pub mod ideal;
pub mod profinite;
pub mod report;
pub mod sample;
pub mod set;
pub mod text;
pub mod topo;
pub mod truncate;
pub mod universe;

pub use converge::{
    alexander_subcover, check_compact_corollary, check_theorem_i, check_theorem_iii, converges,
    limit_set, principal_limit_is_closure, pushforward, tychonoff_check, AlexanderOutcome,
    ConvergeError, LimitPoints, LimitSet, SubbasisCover,
};
pub use enumerate::{
    enumerate_preorders, enumerate_topologies, enumerate_topologies_by_family_scan, Preorder,
};
pub use ideal::{
    clop_ring, enumerate_maximal_ideals, ideal_from_generators, ideal_sum, maximal_ideal_at,
    pair_generator, restrict_maximal, spec, stone_map, BooleanSubring, IdealError, MaximalIdeal,
    MaximalIdealKind, PrincipalIdeal, SpecSpace, StoneMap,
};
pub use profinite::{
    build_system, compact_totdisc_is_profinite, limit, profinite_is_compact_totdisc,
    verify_lemma_i, verify_lemma_ii, IndexPoset, InverseSystem, LemmaOneOutcome, LimitSpace,
    SystemError,
};
pub use report::TheoremReport;
pub use sample::SplitMix64;
pub use set::{
    complement, difference, intersect, preimage_hom, sym_diff, union, validate_ring_axioms,
    validate_ring_axioms_with, SetError, Subset,
};
pub use topo::{
    closure, components, interior, is_continuous, is_hausdorff, is_quasi_compact_direct,
    is_totally_disconnected, product, quasi_components, subspace, topology_from_opens,
    topology_from_subbasis, FiniteTopology, SymbolicSpace, Topology, TopologyError,
};
pub use truncate::{validate_symbolic_truncation, TruncationReport};
pub use universe::{MapRule, Point, PointMap, Universe};
