use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use comaximal::catalog::{bundled_catalog, parse_catalog_after, Catalog};
use comaximal::invariants::{domination_number, independence_lower_bound, independence_number};
use comaximal::verify::{Suite, Verifier};
use comaximal::{Budget, ComaximalGraph, Error, Group, PropertyProfile, SubgroupLattice};

/// A check reported a counterexample.
const EXIT_CHECK_FAILED: u8 = 3;
/// A search ran out of budget, so a result is a bound rather than exact.
const EXIT_INEXACT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "comaximal",
    version,
    about = "Comaximal subgroup graphs of finite groups"
)]
struct Cli {
    /// Extra catalog file, loaded after the bundled one (repeatable).
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Vec<PathBuf>,
    /// Node budget for each search.
    #[arg(long, global = true, value_name = "N")]
    nodes: Option<u64>,
    /// Time budget for each search, in seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    time: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog groups.
    List,
    /// Order, subgroup count and structural properties.
    Props { group: String },
    /// Shape of the comaximal subgroup graph.
    Graph { group: String },
    /// Independence number of the comaximal subgroup graph.
    Alpha {
        group: String,
        /// Only certify alpha >= K.
        #[arg(long, value_name = "K")]
        target: Option<usize>,
    },
    /// Domination number of the comaximal subgroup graph.
    Gamma { group: String },
    /// Run a verification suite over the catalog.
    Verify {
        /// solvable, supersolvable, nilpotent, a5, props, domination or all.
        suite: String,
        /// Tab-separated records instead of the text report.
        #[arg(long)]
        records: bool,
    },
    /// Write the graph as an edge list or DOT file.
    Export {
        group: String,
        format: Format,
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::CheckFailed(_)) => ExitCode::from(EXIT_CHECK_FAILED),
                Some(Error::TargetNotReached { .. }) => ExitCode::from(EXIT_INEXACT),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::default();
    if let Some(n) = cli.nodes {
        b.max_nodes = n;
    }
    if let Some(t) = cli.time {
        b.max_time = Duration::from_secs(t);
    }
    b
}

fn load_catalog(cli: &Cli) -> anyhow::Result<Catalog> {
    let mut catalog = bundled_catalog();
    for path in &cli.catalog {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let extra = parse_catalog_after(&text, &catalog)
            .with_context(|| format!("parsing {}", path.display()))?;
        catalog
            .extend(extra)
            .with_context(|| format!("loading {}", path.display()))?;
    }
    Ok(catalog)
}

fn exact_code(exact: bool) -> ExitCode {
    if exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INEXACT)
    }
}

fn graph_of(group: &Group) -> anyhow::Result<ComaximalGraph> {
    let lattice = SubgroupLattice::enumerate(group)?;
    Ok(ComaximalGraph::build(group, &lattice))
}

fn run(cli: &Cli, out: &mut String) -> anyhow::Result<ExitCode> {
    let catalog = load_catalog(cli)?;
    match &cli.command {
        Command::List => {
            for (e, g) in catalog.entries().iter().zip(catalog.build_all()?) {
                let order = g.order();
                let tags = if e.tags.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", e.tags.join(", "))
                };
                writeln!(out, "{:<12} {order:>4}  {}{tags}", e.name, e.recipe_line())?;
            }
        }
        Command::Props { group } => {
            let g = catalog.build(group)?;
            let l = SubgroupLattice::enumerate(&g)?;
            let p = PropertyProfile::compute(&g, &l);
            writeln!(out, "order={} sub={}", g.order(), l.count())?;
            writeln!(
                out,
                "abelian={} cyclic={} nilpotent={} supersolvable={} solvable={} clt={}",
                p.is_abelian,
                p.is_cyclic,
                p.is_nilpotent,
                p.is_supersolvable,
                p.is_solvable,
                p.is_clt
            )?;
            if let Some(w) = &p.witness {
                writeln!(out, "witness: {w}")?;
            }
        }
        Command::Graph { group } => {
            let gamma = graph_of(&catalog.build(group)?)?;
            let s = gamma.signature();
            writeln!(
                out,
                "vertices={} edges={} isolated={}",
                s.vertex_count, s.edge_count, s.isolated_count
            )?;
            writeln!(
                out,
                "components={:?} bipartite={}",
                s.component_sizes, s.bipartite
            )?;
            match s.complete_bipartite_parts {
                Some((a, b)) => writeln!(out, "deleted=K({a},{b})")?,
                None => writeln!(out, "deleted=other")?,
            }
            writeln!(out, "a5_signature={}", gamma.matches_a5_signature())?;
        }
        Command::Alpha { group, target } => {
            let gamma = graph_of(&catalog.build(group)?)?;
            let r = match target {
                Some(k) => independence_lower_bound(&gamma, *k)?,
                None => independence_number(gamma.graph(), budget(cli)),
            };
            let rel = if target.is_some() { ">=" } else { "=" };
            writeln!(
                out,
                "alpha{rel}{} exact={} certificate_size={}",
                r.alpha,
                r.exact,
                r.certificate.len()
            )?;
            eprintln!("nodes={} elapsed={:.3?}", r.nodes_explored, r.elapsed);
            if target.is_some() {
                return Ok(ExitCode::SUCCESS);
            }
            return Ok(exact_code(r.exact));
        }
        Command::Gamma { group } => {
            let gamma = graph_of(&catalog.build(group)?)?;
            let r = domination_number(gamma.graph(), budget(cli));
            writeln!(
                out,
                "gamma={} exact={} certificate_size={}",
                r.gamma,
                r.exact,
                r.certificate.len()
            )?;
            eprintln!("nodes={} elapsed={:.3?}", r.nodes_explored, r.elapsed);
            return Ok(exact_code(r.exact));
        }
        Command::Verify { suite, records } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let verifier = Verifier::new(&catalog, budget(cli))?;
            let mut exact = true;
            let mut first_failure = None;
            for s in suites {
                let report = verifier.run(s);
                if *records {
                    out.push_str(&report.to_records());
                } else {
                    out.push_str(&report.to_text());
                }
                exact &= report.is_exact();
                if first_failure.is_none() {
                    first_failure = report.ensure_passed().err();
                }
            }
            if let Some(e) = first_failure {
                return Err(e.into());
            }
            return Ok(exact_code(exact));
        }
        Command::Export {
            group,
            format,
            path,
        } => {
            let g = catalog.build(group)?;
            let gamma = graph_of(&g)?;
            let text = match format {
                Format::Edgelist => gamma.to_edge_list(),
                Format::Dot => gamma.to_dot(g.name()),
            };
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "wrote {} vertices, {} edges to {}",
                gamma.vertex_count(),
                gamma.edge_count(),
                path.display()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
