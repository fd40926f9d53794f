//! Command-line surface: sweeps over enumerated topologies, single-space
//! checks, Stone/Spec computations, inverse limits, and report emission.
//!
//! Exit codes: 0 when every check agrees, 1 on any theorem-disagreement
//! witness (the theorems are proved, so this signals a defect), 2 on usage
//! errors. Reports embed the tool version, the configuration echo, and the
//! seed, and are byte-identical for identical configurations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ringtop::profinite::{
    compact_totdisc_is_profinite, limit, profinite_is_compact_totdisc, LIMIT_SCAN_CAP,
};
use ringtop::text::{
    dot_poset, dot_spec, dot_threads, format_topology, parse_inverse_system, parse_ring,
    parse_subset, parse_topology, partition_json, spec_json, topology_json,
};
use ringtop::truncate::validate_symbolic_truncation;
use ringtop::{
    alexander_subcover, check_compact_corollary, check_theorem_i, check_theorem_iii,
    enumerate_topologies, spec, stone_map, tychonoff_check, verify_lemma_i, verify_lemma_ii,
    AlexanderOutcome, BooleanSubring, SplitMix64, SubbasisCover, Subset, SymbolicSpace,
    TheoremReport, Topology, Universe,
};

const N_MAX: usize = 5;
const TRUNCATION_MIN: usize = 4;
/// Sampled topologies per sweep at n = 5 (6942 total) unless --exhaustive.
const SWEEP_SAMPLE: usize = 500;

#[derive(Parser)]
#[command(name = "ringtop", version, about = "ring-theoretic topology checks at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Sampling seed for sweeps that sample (recorded in every report).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Window size for symbolic truncation validation (at least 4).
    #[arg(long, global = true, default_value_t = 32)]
    truncation: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "III", alias = "iii")]
    Iii,
    Compact,
    All,
}

impl TheoremArg {
    fn name(self) -> &'static str {
        match self {
            TheoremArg::I => "I",
            TheoremArg::Iii => "III",
            TheoremArg::Compact => "compact",
            TheoremArg::All => "all",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DemoName {
    Cofinite,
    DiscreteNat,
    OnePoint,
}

#[derive(Subcommand)]
enum Command {
    /// Run a theorem checker over every topology on n points.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TheoremArg::All)]
        theorem: TheoremArg,
        /// Check all topologies even at n = 5 (default samples 500).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check one theorem on one space (fixture file or inline text).
    Check {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
    },
    /// Compute the Stone map of a finite space and its verdict.
    Stone {
        #[arg(long)]
        space: String,
    },
    /// Compute Spec of a Boolean subring presentation.
    Spec {
        #[arg(long)]
        ring: String,
    },
    /// Compute the inverse limit of a system fixture.
    Limit {
        #[arg(long)]
        system: String,
    },
    /// Present Spec(R) as the limit over the full subring poset.
    Lemma1 {
        /// Use the full subset ring on this many atoms.
        #[arg(long, conflicts_with = "ring")]
        atoms: Option<usize>,
        /// Or a ring presentation (file or inline).
        #[arg(long)]
        ring: Option<String>,
    },
    /// Check that a subspace of a product of discrete factors stays
    /// Hausdorff and totally disconnected.
    Lemma2 {
        /// Factor fixtures (files or inline), at least one.
        #[arg(long, required = true, num_args = 1..)]
        factors: Vec<String>,
        /// One subset literal over the product; default sweeps all subsets
        /// (product of at most 8 points).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Run the product-compactness certificate.
    Tychonoff {
        /// Factor fixtures (files or inline).
        #[arg(long, num_args = 1.., conflicts_with = "n")]
        factors: Option<Vec<String>>,
        /// Or sweep all pairs of topologies on n points (n at most 3).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Extract a finite subcover from a subbasis cover.
    Alexander {
        #[arg(long)]
        space: String,
        /// Whitespace-separated set literals.
        #[arg(long)]
        subbasis: String,
        /// Subset of the subbasis used as the cover (defaults to all).
        #[arg(long)]
        cover: Option<String>,
    },
    /// Closed-form verdicts for a symbolic space plus truncation checks.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
    /// Enumerate all topologies on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

/// Errors that map to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Outcome {
    body: Value,
    text: String,
    dot: Option<String>,
    agree: bool,
}

fn load_text(arg: &str) -> Result<String, UsageError> {
    if Path::new(arg).is_file() {
        Ok(fs::read_to_string(arg).map_err(|e| UsageError(format!("{arg}: {e}")))?)
    } else {
        Ok(arg.to_string())
    }
}

fn load_topology(arg: &str) -> Result<Topology, UsageError> {
    Ok(parse_topology(&load_text(arg)?)?)
}

fn load_finite_topology(arg: &str) -> Result<ringtop::FiniteTopology, UsageError> {
    match load_topology(arg)? {
        Topology::Finite(t) => Ok(t),
        Topology::Symbolic(s) => Err(UsageError(format!(
            "this command needs a finite space, got symbolic {s}"
        ))),
    }
}

fn load_ring(arg: &str) -> Result<BooleanSubring, UsageError> {
    Ok(parse_ring(&load_text(arg)?)?)
}

fn report_line(rep: &TheoremReport) -> String {
    format!(
        "{} theorem={} direct={} ring={} space={}",
        if rep.agree { "agree " } else { "MISMATCH" },
        rep.theorem,
        rep.direct,
        rep.ring,
        rep.space,
    )
}

fn reports_outcome(reports: Vec<TheoremReport>, summary: String) -> Outcome {
    let agree = reports.iter().all(|r| r.agree);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&report_line(r));
        text.push('\n');
    }
    text.push_str(&format!(
        "{summary}: {} reports, {}\n",
        reports.len(),
        if agree { "all agree" } else { "DISAGREEMENT FOUND" }
    ));
    Outcome {
        body: json!({ "reports": reports, "summary": summary }),
        text,
        dot: None,
        agree,
    }
}

fn checker(theorem: TheoremArg) -> Vec<TheoremArg> {
    match theorem {
        TheoremArg::All => vec![TheoremArg::I, TheoremArg::Iii, TheoremArg::Compact],
        one => vec![one],
    }
}

fn run_checker(theorem: TheoremArg, t: &Topology) -> Result<TheoremReport, UsageError> {
    Ok(match theorem {
        TheoremArg::I => check_theorem_i(t)?,
        TheoremArg::Iii => check_theorem_iii(t)?,
        TheoremArg::Compact => check_compact_corollary(t)?,
        TheoremArg::All => unreachable!("expanded by checker()"),
    })
}

fn cmd_sweep(
    n: usize,
    theorem: TheoremArg,
    exhaustive: bool,
    seed: u64,
) -> Result<Outcome, UsageError> {
    if n > N_MAX {
        return Err(UsageError(format!("--n must be at most {N_MAX}, got {n}")));
    }
    let all = enumerate_topologies(n)?;
    let picked: Vec<usize> = if n == N_MAX && !exhaustive {
        SplitMix64::new(seed).sample_indices(all.len(), SWEEP_SAMPLE)
    } else {
        (0..all.len()).collect()
    };
    let mut reports = Vec::new();
    for &i in &picked {
        let space = Topology::Finite(all[i].clone());
        for th in checker(theorem) {
            reports.push(run_checker(th, &space)?);
        }
    }
    let mode = if picked.len() == all.len() {
        "exhaustive".to_string()
    } else {
        format!("sampled {} of {}", picked.len(), all.len())
    };
    Ok(reports_outcome(
        reports,
        format!("sweep n={n} theorem={} {mode}", theorem.name()),
    ))
}

fn cmd_check(space: &str, theorem: TheoremArg) -> Result<Outcome, UsageError> {
    let t = load_topology(space)?;
    let mut reports = Vec::new();
    for th in checker(theorem) {
        reports.push(run_checker(th, &t)?);
    }
    Ok(reports_outcome(reports, format!("check {}", t.describe())))
}

fn cmd_stone(space: &str) -> Result<Outcome, UsageError> {
    let t = load_finite_topology(space)?;
    let st = stone_map(&t)?;
    let body = json!({
        "space": format_topology(&Topology::Finite(t)),
        "spec": spec_json(&st.spec),
        "bijective": st.bijective,
        "continuous": st.continuous,
        "closed": st.closed,
        "homeomorphism": st.homeomorphism(),
    });
    let text = format!(
        "stone map onto {} spec points: bijective={} continuous={} closed={} homeomorphism={}\n",
        st.spec.point_count(),
        st.bijective,
        st.continuous,
        st.closed,
        st.homeomorphism()
    );
    Ok(Outcome {
        dot: Some(dot_spec(&st.spec)),
        body,
        text,
        agree: true,
    })
}

fn cmd_spec(ring: &str) -> Result<Outcome, UsageError> {
    let r = load_ring(ring)?;
    let sp = spec(&r);
    let body = json!({
        "ring": partition_json(&r),
        "spec": spec_json(&sp),
    });
    let text = format!(
        "ring with {} atoms: |Spec| = {}, topology discrete = {}\n",
        r.block_count(),
        sp.point_count(),
        sp.topology.is_discrete()
    );
    Ok(Outcome {
        dot: Some(dot_spec(&sp)),
        body,
        text,
        agree: true,
    })
}

fn cmd_limit(system: &str) -> Result<Outcome, UsageError> {
    let sys = parse_inverse_system(&load_text(system)?)?;
    let lim = limit(&sys, LIMIT_SCAN_CAP)?;
    let forward = profinite_is_compact_totdisc(&sys)?;
    let body = json!({
        "indices": sys.index().len(),
        "sizes": sys.space_sizes(),
        "threads": lim.threads,
        "discrete": lim.topology.is_discrete(),
        "theorem2": forward,
    });
    let mut text = format!(
        "limit of {} spaces (sizes {:?}): {} threads, discrete = {}\n",
        sys.index().len(),
        sys.space_sizes(),
        lim.threads.len(),
        lim.topology.is_discrete()
    );
    for t in &lim.threads {
        text.push_str(&format!("  thread {t:?}\n"));
    }
    text.push_str(&report_line(&forward));
    text.push('\n');
    Ok(Outcome {
        dot: Some(dot_threads(&lim)),
        body,
        text,
        agree: forward.agree,
    })
}

fn cmd_lemma1(atoms: Option<usize>, ring: Option<String>) -> Result<Outcome, UsageError> {
    let r = match (atoms, ring) {
        (Some(k), None) => BooleanSubring::full(Universe::Finite(k))?,
        (None, Some(text)) => load_ring(&text)?,
        _ => return Err(UsageError("pass exactly one of --atoms or --ring".to_string())),
    };
    let out = verify_lemma_i(&r)?;
    let agree = out.report.agree;
    let text = format!(
        "{}\nsubrings={} threads={} bijective={} homeomorphism={}\n",
        report_line(&out.report),
        out.subring_count,
        out.limit.threads.len(),
        out.bijective,
        out.homeomorphism
    );
    Ok(Outcome {
        dot: Some(dot_poset(&out.system)),
        body: json!({ "report": out.report, "subrings": out.subring_count,
                      "threads": out.limit.threads }),
        text,
        agree,
    })
}

fn cmd_lemma2(factors: &[String], subset: Option<String>) -> Result<Outcome, UsageError> {
    let parsed: Vec<ringtop::FiniteTopology> = factors
        .iter()
        .map(|f| load_finite_topology(f))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&ringtop::FiniteTopology> = parsed.iter().collect();
    let total: usize = refs.iter().map(|t| t.point_count()).product();
    let u = Universe::Finite(total);
    let subsets: Vec<Subset> = match subset {
        Some(text) => vec![parse_subset(&text, u)?],
        None => {
            if total > 8 {
                return Err(UsageError(format!(
                    "product has {total} points; pass --subset to pick one subspace"
                )));
            }
            (0..(1u64 << total)).map(|m| Subset::from_mask(u, m)).collect()
        }
    };
    let mut reports = Vec::new();
    for s in &subsets {
        reports.push(verify_lemma_ii(&refs, s)?);
    }
    Ok(reports_outcome(
        reports,
        format!("lemma2 over {} factors", refs.len()),
    ))
}

fn cmd_tychonoff(
    factors: Option<Vec<String>>,
    n: Option<usize>,
) -> Result<Outcome, UsageError> {
    match (factors, n) {
        (Some(files), None) => {
            let parsed: Vec<ringtop::FiniteTopology> = files
                .iter()
                .map(|f| load_finite_topology(f))
                .collect::<Result<_, _>>()?;
            let refs: Vec<&ringtop::FiniteTopology> = parsed.iter().collect();
            let rep = tychonoff_check(&refs)?;
            Ok(reports_outcome(vec![rep], "tychonoff".to_string()))
        }
        (None, Some(k)) => {
            if k > 3 {
                return Err(UsageError("--n is capped at 3 for the pair sweep".to_string()));
            }
            let all = enumerate_topologies(k)?;
            let mut reports = Vec::new();
            for a in &all {
                for b in &all {
                    reports.push(tychonoff_check(&[a, b])?);
                }
            }
            Ok(reports_outcome(
                reports,
                format!("tychonoff pairs sweep n={k}"),
            ))
        }
        _ => Err(UsageError("pass exactly one of --factors or --n".to_string())),
    }
}

fn cmd_alexander(
    space: &str,
    subbasis: &str,
    cover: Option<String>,
) -> Result<Outcome, UsageError> {
    let t = load_topology(space)?;
    let u = t.universe();
    let parse_sets = |text: &str| -> Result<Vec<Subset>, UsageError> {
        text.split_whitespace()
            .map(|tok| parse_subset(tok, u).map_err(UsageError::from))
            .collect()
    };
    let subbasis_sets = parse_sets(subbasis)?;
    let sc = match cover {
        None => SubbasisCover::whole(subbasis_sets),
        Some(text) => {
            let cover_sets = parse_sets(&text)?;
            let indices = cover_sets
                .iter()
                .map(|c| {
                    subbasis_sets
                        .iter()
                        .position(|s| s == c)
                        .ok_or_else(|| UsageError(format!("cover set {c} is not in the subbasis")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            SubbasisCover::new(subbasis_sets, indices)?
        }
    };
    let outcome = alexander_subcover(&t, &sc)?;
    let (direct, ring, body, text) = match &outcome {
        AlexanderOutcome::Subcover { cover_indices } => {
            let chosen: Vec<String> = cover_indices
                .iter()
                .map(|&i| sc.cover_sets()[i].to_string())
                .collect();
            (
                true,
                true,
                json!({ "subcover": chosen, "indices": cover_indices }),
                format!("finite subcover: {}\n", chosen.join(" ")),
            )
        }
        AlexanderOutcome::NonCover { uncovered } => (
            false,
            false,
            json!({ "uncovered": uncovered.to_string() }),
            format!("not a cover: point {uncovered} is uncovered\n"),
        ),
    };
    let mut rep = TheoremReport::new(t.describe(), "alexander", direct, ring);
    rep.witness = Some(body);
    let agree = rep.agree;
    Ok(Outcome {
        body: json!({ "reports": [rep] }),
        text,
        dot: None,
        agree,
    })
}

fn cmd_demo(name: DemoName, truncation: usize) -> Result<Outcome, UsageError> {
    let space = match name {
        DemoName::Cofinite => SymbolicSpace::CofiniteNat,
        DemoName::DiscreteNat => SymbolicSpace::DiscreteNat,
        DemoName::OnePoint => SymbolicSpace::OnePointCompactification,
    };
    let t = Topology::Symbolic(space);
    let reports = vec![
        check_theorem_i(&t)?,
        check_theorem_iii(&t)?,
        check_compact_corollary(&t)?,
    ];
    let sizes = [8usize, truncation];
    let mut truncations = Vec::new();
    let mut truncation_pass = true;
    for &n in &sizes {
        let rep = validate_symbolic_truncation(space, n)?;
        truncation_pass &= rep.pass();
        truncations.push(json!({
            "size": n,
            "pass": rep.pass(),
            "checks": rep.checks.iter().map(|c| json!({
                "name": c.name, "pass": c.pass,
            })).collect::<Vec<_>>(),
        }));
    }
    let backward = compact_totdisc_is_profinite(&t, &sizes)?;
    let agree = reports.iter().all(|r| r.agree) && truncation_pass && backward.report.agree;
    let mut text = String::new();
    for r in &reports {
        text.push_str(&report_line(r));
        text.push('\n');
    }
    text.push_str(&format!(
        "profinite (theorem2): direct={} ring={}\n",
        backward.report.direct, backward.report.ring
    ));
    text.push_str(&format!(
        "truncations at {:?}: {}\n",
        sizes,
        if truncation_pass { "zero mismatches" } else { "MISMATCHES" }
    ));
    Ok(Outcome {
        body: json!({
            "reports": reports,
            "theorem2": backward.report,
            "truncations": truncations,
        }),
        text,
        dot: None,
        agree,
    })
}

fn cmd_enumerate(n: usize) -> Result<Outcome, UsageError> {
    if n > N_MAX {
        return Err(UsageError(format!("--n must be at most {N_MAX}, got {n}")));
    }
    let all = enumerate_topologies(n)?;
    let mut text = String::new();
    let mut entries = Vec::with_capacity(all.len());
    for t in &all {
        let space = Topology::Finite(t.clone());
        text.push_str(&format_topology(&space));
        text.push('\n');
        entries.push(topology_json(&space));
    }
    text.push_str(&format!("{} topologies on {n} points\n", all.len()));
    Ok(Outcome {
        body: json!({ "n": n, "count": all.len(), "topologies": entries }),
        text,
        dot: None,
        agree: true,
    })
}

fn config_echo(cli: &Cli) -> Value {
    let (command, extra) = match &cli.command {
        Command::Sweep { n, theorem, exhaustive } => (
            "sweep",
            json!({ "n": n, "theorem": theorem.name(), "exhaustive": exhaustive }),
        ),
        Command::Check { space, theorem } => {
            ("check", json!({ "space": space, "theorem": theorem.name() }))
        }
        Command::Stone { space } => ("stone", json!({ "space": space })),
        Command::Spec { ring } => ("spec", json!({ "ring": ring })),
        Command::Limit { system } => ("limit", json!({ "system": system })),
        Command::Lemma1 { atoms, ring } => ("lemma1", json!({ "atoms": atoms, "ring": ring })),
        Command::Lemma2 { factors, subset } => {
            ("lemma2", json!({ "factors": factors, "subset": subset }))
        }
        Command::Tychonoff { factors, n } => {
            ("tychonoff", json!({ "factors": factors, "n": n }))
        }
        Command::Alexander { space, subbasis, cover } => (
            "alexander",
            json!({ "space": space, "subbasis": subbasis, "cover": cover }),
        ),
        Command::Demo { name } => (
            "demo",
            json!({ "name": match name {
                DemoName::Cofinite => "cofinite",
                DemoName::DiscreteNat => "discrete-nat",
                DemoName::OnePoint => "one-point",
            }}),
        ),
        Command::Enumerate { n } => ("enumerate", json!({ "n": n })),
    };
    json!({
        "command": command,
        "args": extra,
        "seed": cli.seed,
        "truncation": cli.truncation,
        "format": match cli.format {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
        },
    })
}

fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    if cli.truncation < TRUNCATION_MIN {
        return Err(UsageError(format!(
            "--truncation must be at least {TRUNCATION_MIN}"
        )));
    }
    match &cli.command {
        Command::Sweep { n, theorem, exhaustive } => {
            cmd_sweep(*n, *theorem, *exhaustive, cli.seed)
        }
        Command::Check { space, theorem } => cmd_check(space, *theorem),
        Command::Stone { space } => cmd_stone(space),
        Command::Spec { ring } => cmd_spec(ring),
        Command::Limit { system } => cmd_limit(system),
        Command::Lemma1 { atoms, ring } => cmd_lemma1(*atoms, ring.clone()),
        Command::Lemma2 { factors, subset } => cmd_lemma2(factors, subset.clone()),
        Command::Tychonoff { factors, n } => cmd_tychonoff(factors.clone(), *n),
        Command::Alexander { space, subbasis, cover } => {
            cmd_alexander(space, subbasis, cover.clone())
        }
        Command::Demo { name } => cmd_demo(*name, cli.truncation),
        Command::Enumerate { n } => cmd_enumerate(*n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => {
            let envelope = json!({
                "tool": "ringtop",
                "version": env!("CARGO_PKG_VERSION"),
                "config": config_echo(&cli),
                "agree": outcome.agree,
                "body": outcome.body,
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!(
                "ringtop {} seed={} truncation={}\n",
                env!("CARGO_PKG_VERSION"),
                cli.seed,
                cli.truncation
            );
            s.push_str(&outcome.text);
            s
        }
        Format::Dot => match &outcome.dot {
            Some(d) => d.clone(),
            None => {
                eprintln!("error: this command has no DOT rendering");
                return ExitCode::from(2);
            }
        },
    };
    if let Some(path) = &cli.output {
        if let Err(e) = fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    if outcome.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
