//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The sweeps run every topology on 1..=4 points (1 + 4 + 29 + 355
//! spaces) through the theorem checkers, pin the symbolic closed forms to
//! truncation models, and verify the ideal algebra, Stone duality, and the
//! profinite presentations against independent brute-force oracles.

use std::collections::BTreeSet;
use std::time::Instant;

use ringtop::enumerate::{enumerate_topologies, enumerate_topologies_by_family_scan};
use ringtop::profinite::compact_totdisc_is_profinite;
use ringtop::truncate::validate_symbolic_truncation;
use ringtop::{
    check_compact_corollary, check_theorem_i, check_theorem_iii, closure, ideal_from_generators,
    is_hausdorff, is_quasi_compact_direct, limit_set, maximal_ideal_at, pair_generator, spec,
    stone_map, tychonoff_check, verify_lemma_i, verify_lemma_ii, BooleanSubring, FiniteTopology,
    LimitPoints, MaximalIdeal, Point, SplitMix64, Subset, SymbolicSpace, Topology, Universe,
};

fn criterion(name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("acceptance {name}: PASS ({detail})"),
        Err(e) => {
            println!("acceptance {name}: FAIL ({e})");
            panic!("acceptance {name} failed: {e}");
        }
    }
}

fn sweep_counts() -> Vec<(usize, Vec<FiniteTopology>)> {
    let expected = [1usize, 4, 29, 355];
    (1..=4)
        .map(|n| {
            let ts = enumerate_topologies(n).unwrap();
            assert_eq!(ts.len(), expected[n - 1], "topology count at n = {n}");
            (n, ts)
        })
        .collect()
}

#[test]
fn criterion_01_theorem_i_sweep() {
    criterion("1 (theorem I sweep, n = 1..4)", || {
        let start = Instant::now();
        let mut reports = 0usize;
        for (_, topologies) in sweep_counts() {
            for t in topologies {
                let rep = check_theorem_i(&Topology::Finite(t)).map_err(|e| e.to_string())?;
                if !(rep.agree && rep.direct && rep.ring) {
                    return Err(format!("disagreement on {}", rep.space));
                }
                reports += 1;
            }
        }
        let elapsed = start.elapsed();
        if reports != 1 + 4 + 29 + 355 {
            return Err(format!("expected 389 reports, got {reports}"));
        }
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("sweep took {elapsed:?}, budget 10 s"));
        }
        Ok(format!("389 agreeing reports in {elapsed:?}"))
    });
}

#[test]
fn criterion_02_theorem_iii_sweep() {
    criterion("2 (theorem III sweep + T2 ⇔ discrete)", || {
        for (_, topologies) in sweep_counts() {
            for t in topologies {
                let discrete = t.is_discrete();
                let rep =
                    check_theorem_iii(&Topology::Finite(t.clone())).map_err(|e| e.to_string())?;
                if !rep.agree {
                    return Err(format!("disagreement on {}", rep.space));
                }
                if rep.direct != discrete {
                    return Err(format!(
                        "hausdorff = {} but discrete = {discrete} on {}",
                        rep.direct, rep.space
                    ));
                }
            }
        }
        Ok("389 agreeing reports; finite T2 = discrete".to_string())
    });
}

#[test]
fn criterion_03_compact_corollary_sweep() {
    criterion("3 (compactness corollary sweep)", || {
        for (_, topologies) in sweep_counts() {
            for t in topologies {
                let rep =
                    check_compact_corollary(&Topology::Finite(t)).map_err(|e| e.to_string())?;
                if !rep.agree {
                    return Err(format!("disagreement on {}", rep.space));
                }
            }
        }
        Ok("389 agreeing reports".to_string())
    });
}

#[test]
fn criterion_04_closure_law() {
    criterion("4 (limit_set(m_x) = closure({x}))", || {
        let mut equalities = 0usize;
        for (n, topologies) in sweep_counts() {
            for t in topologies {
                let space = Topology::Finite(t);
                for x in 0..n {
                    let m = maximal_ideal_at(Universe::Finite(n), Point::Nat(x))
                        .map_err(|e| e.to_string())?;
                    let ls = limit_set(&m, &space).map_err(|e| e.to_string())?;
                    let cl = closure(
                        &space,
                        &Subset::from_labels(Universe::Finite(n), [x]).unwrap(),
                    )
                    .map_err(|e| e.to_string())?;
                    match ls.points {
                        LimitPoints::Finite(s) if s == cl => equalities += 1,
                        other => {
                            return Err(format!(
                                "limit {other:?} differs from closure {cl} at x = {x}"
                            ))
                        }
                    }
                }
            }
        }
        let expected = 355 * 4 + 29 * 3 + 4 * 2 + 1;
        if equalities != expected {
            return Err(format!("checked {equalities} equalities, expected {expected}"));
        }
        Ok(format!("{equalities} exact equalities"))
    });
}

#[test]
fn criterion_05_symbolic_spaces() {
    criterion("5 (symbolic closed forms + truncations)", || {
        // discrete ℕ: not quasi-compact, Fréchet limit set empty
        let disc = Topology::Symbolic(SymbolicSpace::DiscreteNat);
        if is_quasi_compact_direct(&disc).quasi_compact {
            return Err("discrete ℕ reported quasi-compact".to_string());
        }
        let fr = MaximalIdeal::frechet(Universe::NAT).unwrap();
        if limit_set(&fr, &disc).map_err(|e| e.to_string())?.points != LimitPoints::None {
            return Err("discrete ℕ: Fréchet limit set not empty".to_string());
        }
        let rep = check_theorem_i(&disc).map_err(|e| e.to_string())?;
        if !(rep.agree && !rep.direct) {
            return Err("discrete ℕ theorem I report wrong".to_string());
        }

        // cofinite ℕ: quasi-compact, not Hausdorff, Fréchet limit = all
        let cof = Topology::Symbolic(SymbolicSpace::CofiniteNat);
        if !is_quasi_compact_direct(&cof).quasi_compact {
            return Err("cofinite ℕ reported non-quasi-compact".to_string());
        }
        if is_hausdorff(&cof).map_err(|e| e.to_string())?.hausdorff {
            return Err("cofinite ℕ reported Hausdorff".to_string());
        }
        if limit_set(&fr, &cof).map_err(|e| e.to_string())?.points != LimitPoints::All {
            return Err("cofinite ℕ: Fréchet limit set not AllPoints".to_string());
        }

        // one-point compactification: compact, every limit set a singleton
        let one = Topology::Symbolic(SymbolicSpace::OnePointCompactification);
        let rep = check_compact_corollary(&one).map_err(|e| e.to_string())?;
        if !(rep.agree && rep.direct && rep.ring) {
            return Err("one-point compactification not reported compact".to_string());
        }
        let fr_inf = MaximalIdeal::frechet(Universe::NAT_INFINITY).unwrap();
        if limit_set(&fr_inf, &one).map_err(|e| e.to_string())?.points
            != LimitPoints::Single(Point::Infinity)
        {
            return Err("one-point: Fréchet does not converge to ∞ alone".to_string());
        }

        // truncation models at the pinned sizes, zero mismatches
        let mut checks = 0usize;
        for space in [
            SymbolicSpace::DiscreteNat,
            SymbolicSpace::CofiniteNat,
            SymbolicSpace::OnePointCompactification,
        ] {
            for n in [8usize, 32, 100] {
                let rep = validate_symbolic_truncation(space, n).map_err(|e| e.to_string())?;
                if !rep.pass() {
                    let names: Vec<&str> = rep
                        .mismatches()
                        .iter()
                        .map(|c| c.name.as_str())
                        .collect();
                    return Err(format!("{space} at N = {n}: mismatches {names:?}"));
                }
                checks += rep.checks.len();
            }
        }
        Ok(format!(
            "closed forms hold; {checks} truncation checks with zero mismatches"
        ))
    });
}

/// Independent span oracle on raw masks: the set of subset-ids reachable
/// as r1·g1 + r2·g2 over all coefficient pairs.
fn span_bitmap(n: usize, g1: u64, g2: u64) -> Vec<bool> {
    let count = 1usize << n;
    let mut reachable = vec![false; count];
    for r1 in 0..count as u64 {
        for r2 in 0..count as u64 {
            let sum = (r1 & g1) ^ (r2 & g2);
            reachable[sum as usize] = true;
        }
    }
    reachable
}

#[test]
fn criterion_06_ideal_algebra() {
    criterion("6 (ideal algebra vs span oracle)", || {
        let mut cases = 0usize;
        for n in 0..=4usize {
            let u = Universe::Finite(n);
            let count = 1u64 << n;
            for g1 in 0..count {
                for g2 in 0..count {
                    let span = span_bitmap(n, g1, g2);
                    let s1 = Subset::from_mask(u, g1);
                    let s2 = Subset::from_mask(u, g2);
                    let ideal = ideal_from_generators(u, &[s1.clone(), s2.clone()])
                        .map_err(|e| e.to_string())?;
                    let pair = pair_generator(&s1, &s2).map_err(|e| e.to_string())?;
                    if pair.mask() != g1 | g2 {
                        return Err(format!("pair generator wrong at n={n} g1={g1} g2={g2}"));
                    }
                    for b in 0..count {
                        let member = ideal
                            .contains(&Subset::from_mask(u, b))
                            .map_err(|e| e.to_string())?;
                        if member != span[b as usize] {
                            return Err(format!(
                                "membership mismatch n={n} g1={g1} g2={g2} b={b}"
                            ));
                        }
                        // (f1, f2) = (f1 + f2 + f1·f2): same span
                        if span[b as usize] != (b & !(g1 | g2) == 0) {
                            return Err(format!("span is not P(g1 ∪ g2) at n={n}"));
                        }
                    }
                    cases += 1;
                }
            }
        }

        // three generators, exhaustively on small ground sets
        for n in 0..=3usize {
            let u = Universe::Finite(n);
            let count = 1u64 << n;
            for g1 in 0..count {
                for g2 in 0..count {
                    for g3 in 0..count {
                        let ideal = ideal_from_generators(
                            u,
                            &[
                                Subset::from_mask(u, g1),
                                Subset::from_mask(u, g2),
                                Subset::from_mask(u, g3),
                            ],
                        )
                        .map_err(|e| e.to_string())?;
                        // reachable sums: (r1·g1 + r2·g2) + r3·g3 over all
                        // coefficients, via the pair oracle twice
                        let two = span_bitmap(n, g1, g2);
                        for b in 0..count {
                            let reachable = (0..count).any(|mid| {
                                two[mid as usize]
                                    && (0..count).any(|r3| mid ^ (r3 & g3) == b)
                            });
                            let member = ideal
                                .contains(&Subset::from_mask(u, b))
                                .map_err(|e| e.to_string())?;
                            if member != reachable {
                                return Err(format!(
                                    "triple mismatch n={n} ({g1},{g2},{g3}) b={b}"
                                ));
                            }
                        }
                        cases += 1;
                    }
                }
            }
        }

        // n = 5, sampled with a recorded seed
        let mut rng = SplitMix64::new(0xACCE5);
        let n = 5usize;
        let u = Universe::Finite(n);
        let count = 1u64 << n;
        let sampled = 10_000usize;
        for _ in 0..sampled {
            let g1 = rng.below(count);
            let g2 = rng.below(count);
            let b = rng.below(count);
            let span = span_bitmap(n, g1, g2);
            let ideal = ideal_from_generators(
                u,
                &[Subset::from_mask(u, g1), Subset::from_mask(u, g2)],
            )
            .map_err(|e| e.to_string())?;
            let member = ideal
                .contains(&Subset::from_mask(u, b))
                .map_err(|e| e.to_string())?;
            if member != span[b as usize] {
                return Err(format!("sampled mismatch g1={g1} g2={g2} b={b}"));
            }
            let pair = pair_generator(&Subset::from_mask(u, g1), &Subset::from_mask(u, g2))
                .map_err(|e| e.to_string())?;
            if pair.mask() != g1 | g2 {
                return Err(format!("sampled pair generator wrong g1={g1} g2={g2}"));
            }
            cases += 1;
        }
        Ok(format!(
            "{cases} cases (exhaustive pairs through n = 4, {sampled} seeded at n = 5)"
        ))
    });
}

#[test]
fn criterion_07_stone_duality() {
    criterion("7 (stone map ⇔ discrete; D(f·g) law)", || {
        for t in enumerate_topologies(4).unwrap() {
            let discrete = t.is_discrete();
            let st = stone_map(&t).map_err(|e| e.to_string())?;
            if st.homeomorphism() != discrete {
                return Err(format!(
                    "stone verdict {} vs discrete {discrete}",
                    st.homeomorphism()
                ));
            }
        }
        // every Boolean subring with at most 4 atoms, over every ground set
        // up to 4 points
        let mut rings = 0usize;
        for n in 1..=4usize {
            let u = Universe::Finite(n);
            let full = BooleanSubring::full(u).map_err(|e| e.to_string())?;
            for r in ringtop::profinite::enumerate_subrings(&full).map_err(|e| e.to_string())? {
                let sp = spec(&r);
                if sp.point_count() != r.block_count() {
                    return Err(format!("|Spec| = {} for {} atoms", sp.point_count(), r.block_count()));
                }
                for f in r.elements() {
                    for g in r.elements() {
                        let fg = ringtop::intersect(&f, &g).map_err(|e| e.to_string())?;
                        let lhs = sp.d_of(&fg).map_err(|e| e.to_string())?;
                        let rhs = ringtop::intersect(
                            &sp.d_of(&f).map_err(|e| e.to_string())?,
                            &sp.d_of(&g).map_err(|e| e.to_string())?,
                        )
                        .map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return Err(format!("D(f·g) ≠ D(f)∩D(g) at f={f} g={g}"));
                        }
                    }
                }
                rings += 1;
            }
        }
        Ok(format!(
            "355 stone verdicts match discreteness; D-law on {rings} rings"
        ))
    });
}

#[test]
fn criterion_08_lemma_i() {
    criterion("8 (Spec(R) as inverse limit over the subring poset)", || {
        let start = Instant::now();
        let expected_subrings = [(2usize, 2usize), (3, 5), (4, 15)];
        for (atoms, subrings) in expected_subrings {
            let r = BooleanSubring::full(Universe::Finite(atoms)).map_err(|e| e.to_string())?;
            let out = verify_lemma_i(&r).map_err(|e| e.to_string())?;
            if out.subring_count != subrings {
                return Err(format!(
                    "{atoms} atoms: {} subrings, expected {subrings}",
                    out.subring_count
                ));
            }
            if out.limit.threads.len() != atoms || !out.bijective || !out.homeomorphism {
                return Err(format!(
                    "{atoms} atoms: threads {}, bijective {}, homeo {}",
                    out.limit.threads.len(),
                    out.bijective,
                    out.homeomorphism
                ));
            }
            if !(out.report.agree && out.report.ring) {
                return Err(format!("{atoms} atoms: report does not agree"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 5.0 {
            return Err(format!("took {elapsed:?}, budget 5 s"));
        }
        Ok(format!("2/5/15 subrings, limits ≅ Spec(R), in {elapsed:?}"))
    });
}

#[test]
fn criterion_09_tychonoff_pairs() {
    criterion("9 (tychonoff certificate on all 29×29 pairs)", || {
        let threes = enumerate_topologies(3).unwrap();
        if threes.len() != 29 {
            return Err(format!("expected 29 topologies, got {}", threes.len()));
        }
        let mut pairs = 0usize;
        for a in &threes {
            for b in &threes {
                let rep = tychonoff_check(&[a, b]).map_err(|e| e.to_string())?;
                if !(rep.agree && rep.direct && rep.ring) {
                    return Err(format!("certificate failed on pair {pairs}: {:?}", rep.witness));
                }
                pairs += 1;
            }
        }
        if pairs != 29 * 29 {
            return Err(format!("ran {pairs} pairs"));
        }
        Ok(format!("{pairs} products certified"))
    });
}

#[test]
fn criterion_10_lemma_ii_and_theorem_ii() {
    criterion("10 (lemma II subsets + theorem II round trip)", || {
        // all 16 subsets of discrete(2) × discrete(2)
        let d2 = FiniteTopology::discrete(2);
        for mask in 0u64..16 {
            let s = Subset::from_mask(Universe::Finite(4), mask);
            let rep = verify_lemma_ii(&[&d2, &d2], &s).map_err(|e| e.to_string())?;
            if !(rep.direct && rep.ring && rep.agree) {
                return Err(format!("lemma II failed on subset {s}"));
            }
        }

        // discrete spaces round-trip through the backward direction
        for n in 1..=4usize {
            let t = Topology::Finite(FiniteTopology::discrete(n));
            let out = compact_totdisc_is_profinite(&t, &[]).map_err(|e| e.to_string())?;
            let pres = out
                .presentation
                .ok_or_else(|| format!("no presentation for discrete({n})"))?;
            // a limit with n points and the discrete topology is
            // homeomorphic to discrete(n)
            if !(out.report.ring
                && out.report.agree
                && pres.limit.threads.len() == n
                && pres.limit.topology.is_discrete())
            {
                return Err(format!("round trip failed for discrete({n})"));
            }
        }

        // every non-discrete space on up to 4 points is rejected with a
        // named hypothesis
        let mut rejected = 0usize;
        for n in 1..=4usize {
            for t in enumerate_topologies(n).unwrap() {
                if t.is_discrete() {
                    continue;
                }
                let out = compact_totdisc_is_profinite(&Topology::Finite(t), &[])
                    .map_err(|e| e.to_string())?;
                if out.report.direct || !out.report.agree {
                    return Err("non-discrete space not rejected".to_string());
                }
                let named = out
                    .report
                    .witness
                    .as_ref()
                    .and_then(|w| w["failed_hypotheses"].as_array())
                    .map(|a| !a.is_empty())
                    .unwrap_or(false);
                if !named {
                    return Err("rejection without a named hypothesis".to_string());
                }
                rejected += 1;
            }
        }
        Ok(format!(
            "16 subsets pass; discrete 1..4 round-trip; {rejected} non-discrete spaces rejected"
        ))
    });
}

#[test]
fn criterion_11_enumeration_integrity() {
    criterion("11 (enumeration vs family-scan oracle)", || {
        let expected = [(1usize, 1usize), (2, 4), (3, 29)];
        for (n, count) in expected {
            let fast = enumerate_topologies(n).unwrap();
            let scan = enumerate_topologies_by_family_scan(n).unwrap();
            if fast.len() != count || scan.len() != count {
                return Err(format!(
                    "n = {n}: preorder {} vs scan {} vs expected {count}",
                    fast.len(),
                    scan.len()
                ));
            }
            let keys = |ts: &[FiniteTopology]| -> BTreeSet<Vec<u64>> {
                ts.iter().map(FiniteTopology::open_masks).collect()
            };
            if keys(&fast) != keys(&scan) {
                return Err(format!("n = {n}: family sets differ"));
            }
        }
        let four = enumerate_topologies(4).unwrap();
        if four.len() != 355 {
            return Err(format!("n = 4 count {}", four.len()));
        }
        let distinct: BTreeSet<Vec<u64>> = four.iter().map(FiniteTopology::open_masks).collect();
        if distinct.len() != 355 {
            return Err("duplicate families at n = 4".to_string());
        }
        for t in &four {
            ringtop::topology_from_opens(t.universe(), t.opens().to_vec())
                .map_err(|e| format!("emitted family fails validation: {e}"))?;
        }
        Ok("counts 1/4/29 match the oracle; n = 4 yields 355 valid, duplicate-free".to_string())
    });
}
