//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use comaximal::catalog::bundled_catalog;
use comaximal::invariants::{domination_number, independence_lower_bound, independence_number};
use comaximal::properties::is_supersolvable;
use comaximal::verify::{Suite, Verdict, VerificationReport, Verifier, DOMINATION_ORDER_LIMIT};
use comaximal::{Budget, ComaximalGraph, Group, PropertyProfile, SubgroupLattice};

type Outcome = Result<String, String>;

const A5_LIMIT: Duration = Duration::from_secs(10);
const SUPERSOLVABLE_LIMIT: Duration = Duration::from_secs(30);
const NILPOTENT_LIMIT: Duration = Duration::from_secs(10);
const SCAN_LIMIT: Duration = Duration::from_secs(300);
const FLOOR_LIMIT: Duration = Duration::from_secs(60);
const DOMINATION_LIMIT: Duration = Duration::from_secs(600);

/// Exact `α` of each nilpotency exception, confirmed by exhaustive search.
const NILPOTENT_ALPHAS: [(&str, usize); 5] = [
    ("S3", 3),
    ("D5", 5),
    ("Z3:Z4", 4),
    ("Z3:Z8", 5),
    ("Dic5", 6),
];

struct Measured {
    group: Group,
    lattice: SubgroupLattice,
    graph: ComaximalGraph,
    profile: PropertyProfile,
}

fn measure(name: &str) -> Result<Measured, String> {
    let group = bundled_catalog().build(name).map_err(|e| e.to_string())?;
    let lattice = SubgroupLattice::enumerate(&group).map_err(|e| e.to_string())?;
    let graph = ComaximalGraph::build(&group, &lattice);
    let profile = PropertyProfile::compute(&group, &lattice);
    Ok(Measured {
        group,
        lattice,
        graph,
        profile,
    })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn clean(report: &VerificationReport) -> Result<(), String> {
    let s = report.summary();
    ensure(s.fail == 0 && s.inexact == 0, || {
        let first = report
            .records
            .iter()
            .find(|r| matches!(r.verdict, Verdict::Fail | Verdict::Inexact))
            .map(|r| format!("{} {} = {}", r.group, r.metric, r.value))
            .unwrap_or_default();
        format!(
            "{}: {} fail, {} inexact; first: {first}",
            report.suite, s.fail, s.inexact
        )
    })
}

fn a5_golden() -> Outcome {
    let start = Instant::now();
    let m = measure("A5")?;
    let sig = m.graph.signature();
    let parts = m.graph.deleted().signature().complete_bipartite_parts;
    let a = independence_number(m.graph.graph(), Budget::default());
    ensure(m.lattice.count() == 59, || {
        format!("Sub = {}", m.lattice.count())
    })?;
    ensure(
        sig.vertex_count == 57 && sig.edge_count == 60 && sig.isolated_count == 40,
        || format!("{sig:?}"),
    )?;
    ensure(parts == Some((5, 12)), || {
        format!("deleted graph parts {parts:?}")
    })?;
    ensure(a.exact && a.alpha == 52, || {
        format!("alpha = {} exact = {}", a.alpha, a.exact)
    })?;
    ensure(!m.profile.is_solvable, || "A5 reported solvable".into())?;
    let t = within(start, A5_LIMIT)?;
    Ok(format!("Sub=59, 57 vertices, 60 edges, 40 isolated, K(5,12), alpha=52 exact, non-solvable in {t:.2?}"))
}

fn supersolvability_exceptions() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (name, want) in [
        ("A4", 7),
        ("SL23", 12),
        ("Z2^2:Z9", 11),
        ("A4xZ5", 15),
        ("A4xZ7", 15),
    ] {
        let m = measure(name)?;
        let a = independence_number(m.graph.graph(), Budget::default());
        ensure(a.exact && a.alpha == want, || {
            format!("{name}: alpha = {} exact = {}", a.alpha, a.exact)
        })?;
        ensure(!m.profile.is_supersolvable, || {
            format!("{name} reported supersolvable")
        })?;
        seen.push(format!("{name}={}", a.alpha));
    }
    let t = within(start, SUPERSOLVABLE_LIMIT)?;
    Ok(format!(
        "{} non-supersolvable, exact, in {t:.2?}",
        seen.join(" ")
    ))
}

fn nilpotency_exceptions() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (name, want) in NILPOTENT_ALPHAS {
        let m = measure(name)?;
        let a = independence_number(m.graph.graph(), Budget::default());
        let oracle = common::exhaustive_alpha(m.graph.graph());
        ensure(a.exact && a.alpha == oracle && oracle == want, || {
            format!(
                "{name}: alpha = {} exact = {}, oracle {oracle}, fixture {want}",
                a.alpha, a.exact
            )
        })?;
        ensure(a.alpha <= 6 && !m.profile.is_nilpotent, || {
            format!("{name} fails alpha <= 6 and non-nilpotent")
        })?;
        seen.push(format!("{name}={}", a.alpha));
    }
    let m = measure("S3xZ5")?;
    let a = independence_number(m.graph.graph(), Budget::default());
    ensure(a.exact && a.alpha == 7 && !m.profile.is_nilpotent, || {
        format!(
            "S3xZ5: alpha = {} exact = {} nilpotent = {}",
            a.alpha, a.exact, m.profile.is_nilpotent
        )
    })?;
    let t = within(start, NILPOTENT_LIMIT)?;
    Ok(format!(
        "{}, S3xZ5=7; all non-nilpotent, oracle-confirmed, in {t:.2?}",
        seen.join(" ")
    ))
}

fn threshold_scans(v: &Verifier, measured_in: Duration) -> Outcome {
    let start = Instant::now();
    for suite in [Suite::Solvable, Suite::Supersolvable, Suite::Nilpotent] {
        clean(&v.run(suite))?;
    }
    let t = within(start, SCAN_LIMIT.saturating_sub(measured_in))? + measured_in;
    Ok(format!(
        "{} groups, zero failures across three thresholds in {t:.2?}",
        v.measurements().len()
    ))
}

fn non_solvable_floor() -> Outcome {
    let start = Instant::now();
    let m = measure("PSL27")?;
    ensure(!m.profile.is_solvable && m.group.order() == 168, || {
        "PSL27 is not the order-168 simple group".into()
    })?;
    let lb = independence_lower_bound(&m.graph, 52).map_err(|e| e.to_string())?;
    ensure(
        m.graph.graph().is_independent(&lb.certificate) && lb.alpha >= 52,
        || "bad certificate".into(),
    )?;
    let t = within(start, FLOOR_LIMIT)?;
    Ok(format!(
        "alpha(PSL(2,7)) >= {} certified in {t:.2?}",
        lb.alpha
    ))
}

fn property_suites(v: &Verifier) -> Outcome {
    let report = v.run(Suite::Props);
    clean(&report)?;
    for name in ["Q8", "Z3^2"] {
        let r = report
            .records
            .iter()
            .find(|r| r.group == name && r.metric == "sub floor");
        ensure(r.is_some_and(|r| r.value == "6 (equality)"), || {
            format!("{name}: {r:?}")
        })?;
    }
    Ok(format!(
        "{} checks, zero violations; Q8 and Z3^2 meet the floor at 6",
        report.summary().pass
    ))
}

fn oracle_equivalences() -> Outcome {
    let groups = common::bundled_groups();
    let (mut lattices, mut graphs, mut deciders) = (0, 0, 0);
    for g in &groups {
        let l = SubgroupLattice::enumerate(g).map_err(|e| e.to_string())?;
        if g.order() <= 24 {
            ensure(
                common::lattice_masks(&l) == common::naive_subgroups(g),
                || format!("{} lattice", g.name()),
            )?;
            lattices += 1;
        }
        let gamma = ComaximalGraph::build(g, &l);
        if gamma.vertex_count() <= 20 {
            let a = independence_number(gamma.graph(), Budget::default());
            let d = domination_number(gamma.graph(), Budget::default());
            ensure(
                a.exact && a.alpha == common::exhaustive_alpha(gamma.graph()),
                || format!("{} alpha", g.name()),
            )?;
            ensure(
                d.exact && d.gamma == common::exhaustive_gamma(gamma.graph()),
                || format!("{} gamma", g.name()),
            )?;
            graphs += 1;
        }
        if g.order() <= 100 {
            ensure(
                is_supersolvable(&l) == common::supersolvable_by_normal_series(g, &l),
                || format!("{} supersolvability", g.name()),
            )?;
            deciders += 1;
        }
    }
    Ok(format!(
        "{lattices} lattices, {graphs} graphs, {deciders} supersolvability decisions agree"
    ))
}

fn a5_uniqueness(v: &Verifier) -> Outcome {
    let report = v.run(Suite::A5);
    clean(&report)?;
    let matching: Vec<&str> = v
        .measurements()
        .iter()
        .filter(|m| m.graph.matches_a5_signature())
        .map(|m| m.name())
        .collect();
    ensure(matching == ["A5"], || {
        format!("matching groups: {matching:?}")
    })?;
    Ok(format!(
        "only A5 of {} groups matches",
        v.measurements().len()
    ))
}

fn domination_scan(v: &Verifier) -> Outcome {
    let start = Instant::now();
    let report = v.run(Suite::Domination);
    let t = within(start, DOMINATION_LIMIT)?;
    let expected = v
        .measurements()
        .iter()
        .filter(|m| m.order() <= DOMINATION_ORDER_LIMIT)
        .count();
    ensure(report.records.len() == expected, || {
        format!("{} of {expected} groups reported", report.records.len())
    })?;
    let gamma_of = |name: &str| {
        report
            .records
            .iter()
            .find(|r| r.group == name)
            .map(|r| r.value.split(' ').next().unwrap_or("?").to_string())
            .ok_or_else(|| format!("{name} missing"))
    };
    let candidates = report
        .records
        .iter()
        .filter(|r| r.value.contains("candidate"))
        .count();
    Ok(format!(
        "{expected} groups in {t:.2?}; gamma(A4)={} gamma(SL23)={}; {candidates} candidate counterexamples; {} inexact",
        gamma_of("A4")?,
        gamma_of("SL23")?,
        report.summary().inexact
    ))
}

fn main() {
    let start = Instant::now();
    let verifier = Verifier::new(&bundled_catalog(), Budget::default());
    let measured_in = start.elapsed();

    let mut results: Vec<(&str, Outcome)> = vec![
        ("A5 golden run", a5_golden()),
        ("supersolvability exceptions", supersolvability_exceptions()),
        ("nilpotency exceptions", nilpotency_exceptions()),
    ];
    match &verifier {
        Ok(v) => {
            results.push(("threshold scans", threshold_scans(v, measured_in)));
            results.push(("non-solvable floor", non_solvable_floor()));
            results.push(("property suites", property_suites(v)));
            results.push(("oracle equivalences", oracle_equivalences()));
            results.push(("A5 signature uniqueness", a5_uniqueness(v)));
            results.push(("domination scan", domination_scan(v)));
        }
        Err(e) => {
            results.push(("threshold scans", Err(e.to_string())));
            results.push(("non-solvable floor", non_solvable_floor()));
            results.push(("property suites", Err(e.to_string())));
            results.push(("oracle equivalences", oracle_equivalences()));
            results.push(("A5 signature uniqueness", Err(e.to_string())));
            results.push(("domination scan", Err(e.to_string())));
        }
    }

    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
