//! `clusterd`: exact cluster-variable computations from the command line.
//!
//! Every subcommand writes one JSON document to stdout (or `--output`) and a
//! one-line summary to stderr. Exit status: 0 when the computation completed
//! and nothing was violated, 1 when a violation was found, 2 on bad input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use clusterd::oracles::verify_rank2_against_bfs;
use clusterd::presets::{preset, NAMES};
use clusterd::properties::{replay, Checker, PropertyId, PropertyReport, SearchOutcome, SourceSinkReport};
use clusterd::seeds::{explore, ExploreLimits};
use clusterd::vectors::{Route, VectorOracle};
use clusterd::{ExchangeMatrix, TreePath};

#[derive(Parser, Debug)]
#[command(name = "clusterd", version, about = "Exact d-vectors, m-vectors and duality checks for cluster algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Omit the timestamp so identical runs give identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatrixSource {
    /// Exchange matrix as JSON rows, e.g. '[[0,1],[-1,0]]'.
    #[arg(long = "b", value_name = "ROWS")]
    inline: Option<String>,

    /// JSON file of the form {"n": 2, "B": [[0,1],[-1,0]]}.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Named exchange matrix.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(NAMES))]
    preset: Option<String>,
}

impl MatrixSource {
    fn load(&self) -> anyhow::Result<ExchangeMatrix> {
        if let Some(rows) = &self.inline {
            let rows: Vec<Vec<i64>> = serde_json::from_str(rows).context("--b expects JSON rows")?;
            return Ok(ExchangeMatrix::from_rows(&rows)?);
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()));
        }
        let name = self.preset.as_deref().expect("clap enforces one source");
        Ok(preset(name)?)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Laurent,
    Recursion,
    Specialized,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Laurent => Route::Laurent,
            RouteArg::Recursion => Route::Recursion,
            RouteArg::Specialized => Route::Specialized,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckProperty {
    D,
    R,
    M,
    SourceSink,
    #[value(name = "MDinit", alias = "mdinit")]
    MdInit,
    #[value(name = "DRM", alias = "drm")]
    Drm,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchProperty {
    D,
    R,
    M,
    SourceSink,
    Sigma,
    #[value(name = "MDinit", alias = "mdinit")]
    MdInit,
}

impl From<SearchProperty> for PropertyId {
    fn from(p: SearchProperty) -> PropertyId {
        match p {
            SearchProperty::D => PropertyId::D,
            SearchProperty::R => PropertyId::R,
            SearchProperty::M => PropertyId::M,
            SearchProperty::SourceSink => PropertyId::RSourceSink,
            SearchProperty::Sigma => PropertyId::Sigma,
            SearchProperty::MdInit => PropertyId::MdInit,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mutate an exchange matrix along a word.
    Mutate {
        #[command(flatten)]
        matrix: MatrixSource,
        /// Comma-separated one-based directions, e.g. "1,2,1".
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Laurent expansions, D-matrix and M-matrix of the seed at a walk.
    Expand {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Check a property at one walk (--path) or at every walk up to --depth.
    Check {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, ignore_case = true)]
        property: CheckProperty,
        #[arg(long, conflicts_with = "path")]
        depth: Option<usize>,
        #[arg(long)]
        path: Option<String>,
        /// One-based direction; all applicable directions when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "laurent")]
        route: RouteArg,
    },
    /// Breadth-first exploration of the exchange graph.
    Explore {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        max_seeds: usize,
    },
    /// Closed-form rank-two D-matrices against exact expansions.
    Rank2 {
        b: u32,
        c: u32,
        k_max: usize,
    },
    /// First violation of a property anywhere in the cluster pattern.
    Search {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long, ignore_case = true)]
        property: SearchProperty,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, value_enum, default_value = "recursion")]
        route: RouteArg,
    },
}

/// A finished run: the JSON document, a summary line, and whether a
/// violation was found.
struct Outcome {
    report: Value,
    summary: String,
    violation: bool,
}

fn parse_path(text: &str, n: usize) -> anyhow::Result<TreePath> {
    let path: TreePath = text.parse()?;
    path.validate(n)?;
    Ok(path)
}

fn parse_k(k: Option<usize>, n: usize) -> anyhow::Result<Option<usize>> {
    match k {
        None => Ok(None),
        Some(k) if (1..=n).contains(&k) => Ok(Some(k - 1)),
        Some(k) => bail!("--k {k} outside 1..={n}"),
    }
}

fn mutate(b0: ExchangeMatrix, path: &str) -> anyhow::Result<Outcome> {
    let path = parse_path(path, b0.rank())?;
    let b = b0.mutate_along(path.letters())?;
    Ok(Outcome {
        summary: format!("mutated along [{path}]"),
        report: json!({ "B0": b0, "path": path, "B": b }),
        violation: false,
    })
}

fn expand(b0: ExchangeMatrix, path: &str) -> anyhow::Result<Outcome> {
    let path = parse_path(path, b0.rank())?;
    let oracle = VectorOracle::new(Route::Laurent);
    let seed = oracle.seed(&b0, &path)?;
    let cluster: Vec<Value> = seed
        .cluster()
        .iter()
        .map(|x| json!({ "text": x.to_string(), "polynomial": x }))
        .collect();
    let d = oracle.d_matrix(&b0, &path)?;
    let m = oracle.m_matrix(&b0, &path)?;
    Ok(Outcome {
        summary: format!("seed at [{path}]: {} terms in total", seed.cluster().iter().map(|x| x.num_terms()).sum::<usize>()),
        report: json!({ "B0": b0, "path": path, "B": seed.exchange_matrix(), "cluster": cluster, "D": d, "M": m }),
        violation: false,
    })
}

fn directions(b0: &ExchangeMatrix, k: Option<usize>, property: CheckProperty) -> anyhow::Result<Vec<usize>> {
    let all: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..b0.rank()).collect(),
    };
    if property != CheckProperty::SourceSink {
        return Ok(all);
    }
    if let Some(k) = k {
        if !b0.is_source_sink(k)? {
            bail!("direction {} is neither a source nor a sink", k + 1);
        }
    }
    let ks: Vec<usize> = all.into_iter().filter(|&k| b0.is_source_sink(k).unwrap_or(false)).collect();
    if ks.is_empty() {
        bail!("the exchange matrix has no source or sink direction");
    }
    Ok(ks)
}

/// Source-sink instances fail when the `|B|` form fails, or when the column
/// signs satisfy the hypothesis and the `sigma_k` form fails or disagrees.
fn source_sink_violated(r: &SourceSinkReport) -> bool {
    !r.abs_form.holds || (r.signed_columns && (!r.sigma_form.holds || !r.forms_agree))
}

fn check(
    b0: ExchangeMatrix,
    property: CheckProperty,
    depth: Option<usize>,
    path: Option<&str>,
    k: Option<usize>,
    route: Route,
) -> anyhow::Result<Outcome> {
    let n = b0.rank();
    let k = parse_k(k, n)?;
    let checker = Checker::new(route);
    let paths = match (depth, path) {
        (_, Some(p)) => vec![parse_path(p, n)?],
        (Some(d), None) => TreePath::all_up_to(n, d),
        (None, None) => bail!("check needs --depth or --path"),
    };

    if property == CheckProperty::Drm {
        let depth = depth.context("DRM needs --depth")?;
        let summary = checker.drm_equivalence(&b0, depth)?;
        let violation = !summary.all_total() || !summary.implications_hold();
        return Ok(Outcome {
            summary: format!(
                "DRM to depth {depth}: {} walks, D/R/M failures {}/{}/{}",
                summary.paths,
                summary.d_failures.len(),
                summary.r_failures.len(),
                summary.m_failures.len()
            ),
            report: serde_json::to_value(&summary)?,
            violation,
        });
    }

    if property == CheckProperty::SourceSink {
        let ks = directions(&b0, k, property)?;
        let reports: Vec<SourceSinkReport> = paths
            .par_iter()
            .map(|p| ks.iter().map(|&k| checker.source_sink(&b0, k, p)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        let failures: Vec<&SourceSinkReport> = reports.iter().filter(|r| source_sink_violated(r)).collect();
        let unsigned_sigma_failures =
            reports.iter().filter(|r| !r.signed_columns && !r.sigma_form.holds).count();
        let report = json!({
            "property": PropertyId::RSourceSink,
            "B0": b0,
            "depth": depth,
            "directions": ks.iter().map(|k| k + 1).collect::<Vec<_>>(),
            "instances": reports.len(),
            "failures": failures.len(),
            "unsigned_sigma_failures": unsigned_sigma_failures,
            "holds": failures.is_empty(),
            "first_failure": failures.first(),
        });
        return Ok(Outcome {
            summary: format!("source-sink: {} instances, {} failures", reports.len(), failures.len()),
            report,
            violation: !failures.is_empty(),
        });
    }

    let id = match property {
        CheckProperty::D => PropertyId::D,
        CheckProperty::R => PropertyId::R,
        CheckProperty::M => PropertyId::M,
        CheckProperty::MdInit => PropertyId::MdInit,
        CheckProperty::SourceSink | CheckProperty::Drm => unreachable!("handled above"),
    };
    let ks = if id.takes_direction() { directions(&b0, k, property)? } else { vec![0] };
    let reports: Vec<PropertyReport> = paths
        .par_iter()
        .map(|p| ks.iter().map(|&k| checker.check(id, &b0, p, k)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let failures: Vec<&PropertyReport> = reports.iter().filter(|r| !r.holds).collect();
    let report = if depth.is_none() && reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        json!({
            "property": id,
            "B0": b0,
            "depth": depth,
            "instances": reports.len(),
            "failures": failures.len(),
            "holds": failures.is_empty(),
            "first_failure": failures.first(),
        })
    };
    Ok(Outcome {
        summary: format!("{}: {} instances, {} failures", id.name(), reports.len(), failures.len()),
        report,
        violation: !failures.is_empty(),
    })
}

fn explore_cmd(b0: ExchangeMatrix, depth: usize, max_seeds: usize) -> anyhow::Result<Outcome> {
    if max_seeds == 0 {
        bail!("--max-seeds must be positive");
    }
    let exploration = explore(&b0, ExploreLimits { max_depth: depth, max_seeds })?;
    let report = exploration.report();
    Ok(Outcome {
        summary: format!(
            "{} seeds, {} cluster variables, {} edges ({})",
            report.num_seeds,
            report.num_vars,
            report.num_edges,
            if report.closed { "closed" } else { "not closed within bounds" }
        ),
        report: serde_json::to_value(&report)?,
        violation: false,
    })
}

fn rank2(b: u32, c: u32, k_max: usize) -> anyhow::Result<Outcome> {
    let report = verify_rank2_against_bfs(b, c, k_max)?;
    Ok(Outcome {
        summary: if report.all_match {
            format!("all match for b={b}, c={c} up to t_{k_max}")
        } else {
            format!("mismatch for b={b}, c={c}")
        },
        violation: !report.all_match,
        report: serde_json::to_value(&report)?,
    })
}

fn search(b0: ExchangeMatrix, property: PropertyId, depth: usize, budget: usize, route: Route) -> anyhow::Result<Outcome> {
    if budget == 0 {
        bail!("--budget must be positive");
    }
    let outcome = Checker::new(route).search_counterexample(&b0, property, depth, budget)?;
    let mut report = json!({ "B0": b0, "property": property, "depth": depth, "budget": budget });
    let (summary, violation) = match &outcome {
        SearchOutcome::Found { initial_walk, witness, examined } => {
            let replayed = replay(witness)?;
            if replayed.holds {
                bail!("witness did not replay from the Laurent expansions");
            }
            report["replayed"] = json!(replayed == **witness);
            (
                format!(
                    "{} fails with t0 at [{initial_walk}] and t at [{}] from t0 ({examined} examined)",
                    property.name(),
                    witness.path
                ),
                true,
            )
        }
        SearchOutcome::NoneFound { examined, budget_exhausted } => (
            format!(
                "none found up to depth {depth} ({examined} examined{})",
                if *budget_exhausted { ", budget exhausted" } else { "" }
            ),
            false,
        ),
    };
    report["result"] = serde_json::to_value(&outcome)?;
    Ok(Outcome { report, summary, violation })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Mutate { matrix, path } => mutate(matrix.load()?, path),
        Command::Expand { matrix, path } => expand(matrix.load()?, path),
        Command::Check { matrix, property, depth, path, k, route } => {
            check(matrix.load()?, *property, *depth, path.as_deref(), *k, (*route).into())
        }
        Command::Explore { matrix, depth, max_seeds } => explore_cmd(matrix.load()?, *depth, *max_seeds),
        Command::Rank2 { b, c, k_max } => rank2(*b, *c, *k_max),
        Command::Search { matrix, property, depth, budget, route } => {
            search(matrix.load()?, (*property).into(), *depth, *budget, (*route).into())
        }
    }
}

fn emit(cli: &Cli, mut outcome: Outcome) -> anyhow::Result<()> {
    if !cli.deterministic {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        if let Value::Object(map) = &mut outcome.report {
            map.insert("generated_at".into(), json!(secs));
        }
    }
    let mut text = serde_json::to_string(&outcome.report)?;
    text.push('\n');
    match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    eprintln!("{}", outcome.summary);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let built = (threads > 0)
            .then(|| rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().ok())
            .flatten();
        if built.is_none() {
            eprintln!("error: --threads must be a positive integer");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|outcome| {
        let violation = outcome.violation;
        emit(&cli, outcome).map(|_| violation)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
