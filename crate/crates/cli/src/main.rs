use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_likelihood::report::{
    census_csv, plain, BoundsJson, CensusRow, LikelihoodReport, PathJson, PathsReport,
    RationalJson, SimulationReport,
};
use graph_likelihood::verify::{run_suite, Suite, VerifyOptions};
use graph_likelihood::{
    automorphism_count_with_limit, cycle_from_path_relation,
    enumerate_path_constructions_with_limit, estimate_likelihood, factorial, family_closed_form,
    likelihood_bounds_with_limit, likelihood_census_with_limit, likelihood_exact_with_limits,
    make_family, parse_graph6, path_tree, to_graph6, Error, FamilyKind, FamilySpec, Graph, Limits,
    Rational,
};
use serde_json::json;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_DATA: u8 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "graph-likelihood",
    version,
    about = "Exact likelihood of graphs under uniform random vertex addition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

/// Raising any of these lets exponential-time routines run on larger graphs.
#[derive(Args, Debug)]
struct LimitArgs {
    /// Largest order for the subset dynamic program.
    #[arg(long, global = true)]
    max_dp: Option<usize>,
    /// Largest order for enumeration of all orderings.
    #[arg(long, global = true)]
    max_oracle: Option<usize>,
    /// Largest order for path-construction enumeration.
    #[arg(long, global = true)]
    max_paths: Option<usize>,
    /// Largest order for a census.
    #[arg(long, global = true)]
    max_census: Option<usize>,
    /// Largest order for canonical labeling.
    #[arg(long, global = true)]
    max_canonical: Option<usize>,
    /// Largest order for automorphism counting.
    #[arg(long, global = true)]
    max_automorphism: Option<usize>,
    /// Largest order for the labeled-process enumeration.
    #[arg(long, global = true)]
    max_process: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact likelihood, automorphism count and bounds.
    Compute(GraphInput),
    /// List path constructions, one per coset of the automorphism group.
    Paths {
        #[command(flatten)]
        input: GraphInput,
        /// Also print the tree of intermediate graphs.
        #[arg(long)]
        tree: bool,
    },
    /// Automorphism bounds on the likelihood.
    Bounds(GraphInput),
    /// Closed form of a named family next to the exact value.
    Family {
        /// complete, star, path, cycle, empty, matching or one-edge.
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long)]
        order: usize,
        /// Number of edges for `matching`.
        #[arg(long, default_value_t = 0)]
        size: usize,
    },
    /// Monte Carlo estimate of the likelihood.
    Simulate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Report (p_hat - exact) / stderr and fail outside 4 standard errors.
        #[arg(long)]
        compare: bool,
    },
    /// Likelihood of every isomorphism class of one order.
    Census {
        #[arg(long)]
        order: usize,
    },
    /// Run self-check suites (all of them by default).
    Verify {
        /// figure1, normalization, definition, oracle, complement, bounds,
        /// paths, closed-forms, monte-carlo.
        suites: Vec<Suite>,
        /// Samples per order for monte-carlo.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    graph: Option<String>,
    /// File holding a JSON edge list or a graph6 line.
    #[arg(long, short)]
    file: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Limit(String),
    /// A requested check ran and did not hold; the report is already printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            Error::InvalidParameter(_) | Error::InvalidSubsetSize { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Data(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = resolve_limits(&cli.limits).and_then(|limits| run(&cli, &limits));
    let (out, code) = match result {
        Ok(out) => (Some(out), 0),
        Err((out, Failure::Check)) => (out, EXIT_CHECK_FAILED),
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            (None, EXIT_USAGE)
        }
        Err((_, Failure::Data(msg))) => {
            eprintln!("error: {msg}");
            (None, EXIT_DATA)
        }
        Err((_, Failure::Limit(msg))) => {
            eprintln!("error: {msg}");
            (None, EXIT_LIMIT)
        }
    };
    if let Some(out) = out {
        print!("{out}");
    }
    ExitCode::from(code)
}

fn resolve_limits(args: &LimitArgs) -> Result<Limits, (Option<String>, Failure)> {
    let mut limits = Limits::DEFAULT;
    let fields = [
        ("--max-dp", args.max_dp, &mut limits.dp, Limits::HARD.dp),
        (
            "--max-oracle",
            args.max_oracle,
            &mut limits.oracle,
            Limits::HARD.oracle,
        ),
        (
            "--max-paths",
            args.max_paths,
            &mut limits.paths,
            Limits::HARD.paths,
        ),
        (
            "--max-census",
            args.max_census,
            &mut limits.census,
            Limits::HARD.census,
        ),
        (
            "--max-canonical",
            args.max_canonical,
            &mut limits.canonical,
            Limits::HARD.canonical,
        ),
        (
            "--max-automorphism",
            args.max_automorphism,
            &mut limits.automorphism,
            Limits::HARD.automorphism,
        ),
        (
            "--max-process",
            args.max_process,
            &mut limits.process,
            Limits::HARD.process,
        ),
    ];
    for (flag, value, slot, hard) in fields {
        let Some(v) = value else { continue };
        if v > hard {
            return Err((
                None,
                Failure::Usage(format!("{flag} {v} is above the hard ceiling of {hard}")),
            ));
        }
        if v > *slot {
            eprintln!(
                "warning: {flag} {v} raises the default of {}; running time grows exponentially with the order",
                *slot
            );
        }
        *slot = v;
    }
    Ok(limits)
}

fn run(cli: &Cli, limits: &Limits) -> Result<String, (Option<String>, Failure)> {
    let format = cli.format;
    let plain_err = |f: Failure| (None, f);
    match &cli.command {
        Command::Compute(input) => {
            compute(&load(input).map_err(plain_err)?, limits, format).map_err(plain_err)
        }
        Command::Paths { input, tree } => {
            paths(&load(input).map_err(plain_err)?, *tree, limits, format).map_err(plain_err)
        }
        Command::Bounds(input) => {
            bounds(&load(input).map_err(plain_err)?, limits, format).map_err(plain_err)
        }
        Command::Family { kind, order, size } => family(
            FamilySpec {
                kind: *kind,
                order: *order,
                size: *size,
            },
            limits,
            format,
        ),
        Command::Simulate {
            input,
            samples,
            seed,
            compare,
        } => simulate(
            &load(input).map_err(plain_err)?,
            *samples,
            *seed,
            *compare,
            limits,
            format,
        ),
        Command::Census { order } => census(*order, limits, format),
        Command::Verify {
            suites,
            samples,
            seed,
        } => verify(suites, *samples, *seed, format),
    }
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.graph, &input.file) {
        (Some(text), None) => Ok(parse_graph6(text)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))?;
            if text.trim_start().starts_with('{') {
                Ok(Graph::from_json(&text)?)
            } else {
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                Ok(parse_graph6(line.trim())?)
            }
        }
        _ => Err(Failure::Usage("give exactly one of GRAPH or --file".into())),
    }
}

fn g6(g: &Graph) -> Result<String, Failure> {
    Ok(to_graph6(g)?)
}

fn json_line(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn compute(g: &Graph, limits: &Limits, format: Format) -> Outcome {
    let likelihood = likelihood_exact_with_limits(g, limits)?;
    let aut = automorphism_count_with_limit(g, limits.automorphism)?;
    let bounds = likelihood_bounds_with_limit(g, limits.automorphism)?;
    let report = LikelihoodReport {
        graph6: g6(g)?,
        likelihood: (&likelihood).into(),
        aut,
        paths: (factorial(g.order()) / aut).to_string(),
        bounds: BoundsJson::from(&bounds),
    };
    Ok(match format {
        Format::Json => json_line(&report),
        Format::Csv => format!(
            "graph6,num,den,aut,paths,lower,upper\n{},{},{},{},{},{},{}\n",
            report.graph6,
            report.likelihood.num,
            report.likelihood.den,
            aut,
            report.paths,
            plain(&bounds.lower),
            plain(&bounds.upper)
        ),
        Format::Plain => format!(
            "graph6 {}\nlikelihood {}\naut {}\npaths {}\nbounds {} {}\n",
            report.graph6,
            plain(&likelihood),
            aut,
            report.paths,
            plain(&bounds.lower),
            plain(&bounds.upper)
        ),
    })
}

fn joined(xs: &[usize], sep: &str) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn paths(g: &Graph, tree: bool, limits: &Limits, format: Format) -> Outcome {
    let list = enumerate_path_constructions_with_limit(g, limits.paths)?;
    let total: Rational = list.iter().map(|p| &p.weight).sum();
    let tree = tree.then(|| path_tree(g, &list));
    let mut out = String::new();
    match format {
        Format::Json => {
            let report = PathsReport {
                graph6: g6(g)?,
                count: list.len(),
                paths: list.iter().map(PathJson::from).collect(),
                likelihood: (&total).into(),
            };
            let mut value = serde_json::to_value(&report).expect("report serializes");
            if let Some(tree) = &tree {
                value["tree"] = tree
                    .nodes
                    .iter()
                    .map(|n| {
                        json!({
                            "level": n.level,
                            "parent": n.parent,
                            "children": n.children,
                            "graph6": n.graph6,
                            "path": n.path,
                        })
                    })
                    .collect();
            }
            out = json_line(&value);
        }
        Format::Csv => {
            out.push_str("ordering,back_degrees,num,den\n");
            for p in &list {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    joined(&p.ordering, " "),
                    joined(&p.back_degrees, " "),
                    p.weight.numer(),
                    p.weight.denom()
                );
            }
        }
        Format::Plain => {
            let _ = writeln!(out, "graph6 {}\ncount {}", g6(g)?, list.len());
            for p in &list {
                let _ = writeln!(
                    out,
                    "ordering {} back {} weight {}",
                    joined(&p.ordering, ","),
                    joined(&p.back_degrees, ","),
                    plain(&p.weight)
                );
            }
            let _ = writeln!(out, "likelihood {}", plain(&total));
            if let Some(tree) = &tree {
                let _ = writeln!(out, "tree");
                write_tree(&mut out, tree, 0);
            }
        }
    }
    Ok(out)
}

fn write_tree(out: &mut String, tree: &graph_likelihood::PathTree, node: usize) {
    let n = &tree.nodes[node];
    let indent = "  ".repeat(n.level);
    match n.path {
        Some(p) => {
            let _ = writeln!(out, "{indent}{} path {p}", n.graph6);
        }
        None => {
            let _ = writeln!(out, "{indent}{}", n.graph6);
        }
    }
    for &c in &n.children {
        write_tree(out, tree, c);
    }
}

fn bounds(g: &Graph, limits: &Limits, format: Format) -> Outcome {
    let b = likelihood_bounds_with_limit(g, limits.automorphism)?;
    let graph6 = g6(g)?;
    Ok(match format {
        Format::Json => json_line(&json!({ "graph6": graph6, "bounds": BoundsJson::from(&b) })),
        Format::Csv => format!(
            "graph6,lower_num,lower_den,upper_num,upper_den\n{graph6},{},{},{},{}\n",
            b.lower.numer(),
            b.lower.denom(),
            b.upper.numer(),
            b.upper.denom()
        ),
        Format::Plain => format!(
            "graph6 {graph6}\nlower {}\nupper {}\n",
            plain(&b.lower),
            plain(&b.upper)
        ),
    })
}

fn family(
    spec: FamilySpec,
    limits: &Limits,
    format: Format,
) -> Result<String, (Option<String>, Failure)> {
    let fail = |f: Failure| (None, f);
    let g = make_family(spec).map_err(|e| fail(e.into()))?;
    let closed = match spec.kind {
        FamilyKind::Path => None,
        FamilyKind::Cycle => {
            Some(cycle_from_path_relation(spec.order).map_err(|e| fail(e.into()))?)
        }
        _ => Some(family_closed_form(spec).map_err(|e| fail(e.into()))?),
    };
    let dp = likelihood_exact_with_limits(&g, limits).map_err(|e| fail(e.into()))?;
    let equal = closed.as_ref().map(|c| *c == dp);
    let graph6 = g6(&g).map_err(fail)?;
    let out = match format {
        Format::Json => json_line(&json!({
            "family": spec.kind.name(),
            "order": spec.order,
            "size": spec.size,
            "graph6": graph6,
            "closed_form": closed.as_ref().map(RationalJson::from),
            "dp": RationalJson::from(&dp),
            "equal": equal,
        })),
        Format::Csv => format!(
            "family,order,size,graph6,closed_form,dp,equal\n{},{},{},{graph6},{},{},{}\n",
            spec.kind.name(),
            spec.order,
            spec.size,
            closed.as_ref().map(plain).unwrap_or_default(),
            plain(&dp),
            equal.map(|e| e.to_string()).unwrap_or_default()
        ),
        Format::Plain => format!(
            "family {} order {} size {}\ngraph6 {graph6}\nclosed_form {}\ndp {}\nequal {}\n",
            spec.kind.name(),
            spec.order,
            spec.size,
            closed.as_ref().map(plain).unwrap_or_else(|| "none".into()),
            plain(&dp),
            equal.map(|e| e.to_string()).unwrap_or_else(|| "n/a".into())
        ),
    };
    if equal == Some(false) {
        Err((Some(out), Failure::Check))
    } else {
        Ok(out)
    }
}

fn simulate(
    g: &Graph,
    samples: u64,
    seed: u64,
    compare: bool,
    limits: &Limits,
    format: Format,
) -> Result<String, (Option<String>, Failure)> {
    let fail = |f: Failure| (None, f);
    if samples == 0 {
        return Err(fail(Failure::Usage("--samples must be at least 1".into())));
    }
    let est = estimate_likelihood(g, samples, seed).map_err(|e| fail(e.into()))?;
    let mut report = SimulationReport::new(g6(g).map_err(fail)?, seed, &est);
    let exact = if g.order() <= limits.dp {
        Some(likelihood_exact_with_limits(g, limits).map_err(|e| fail(e.into()))?)
    } else if compare {
        return Err(fail(Failure::Limit(format!(
            "--compare needs the exact value, but order {} exceeds --max-dp {}",
            g.order(),
            limits.dp
        ))));
    } else {
        None
    };
    report.exact = exact.as_ref().map(RationalJson::from);
    if compare {
        report.z = exact.as_ref().map(|x| est.z_score(x));
    }
    let out = match format {
        Format::Json => json_line(&report),
        Format::Csv => format!(
            "target,samples,seed,hits,p_hat,stderr,exact,z\n{},{},{},{},{},{},{},{}\n",
            report.target,
            report.samples,
            report.seed,
            report.hits,
            report.p_hat,
            report.stderr,
            exact.as_ref().map(plain).unwrap_or_default(),
            report.z.map(|z| z.to_string()).unwrap_or_default()
        ),
        Format::Plain => {
            let mut s = format!(
                "target {}\nsamples {}\nseed {}\nhits {}\np_hat {}\nstderr {}\n",
                report.target,
                report.samples,
                report.seed,
                report.hits,
                report.p_hat,
                report.stderr
            );
            if let Some(x) = &exact {
                let _ = writeln!(s, "exact {}", plain(x));
            }
            if let Some(z) = report.z {
                let _ = writeln!(s, "z {z}");
            }
            s
        }
    };
    match report.z {
        Some(z) if z.abs() > 4.0 => Err((Some(out), Failure::Check)),
        _ => Ok(out),
    }
}

fn census(
    order: usize,
    limits: &Limits,
    format: Format,
) -> Result<String, (Option<String>, Failure)> {
    let entries =
        likelihood_census_with_limit(order, limits.census).map_err(|e| (None, e.into()))?;
    let sum: Rational = entries.iter().map(|e| &e.likelihood).sum();
    let normalized = sum == Rational::from_integer(1.into());
    let out = match format {
        Format::Json => json_line(&json!({
            "order": order,
            "classes": entries.len(),
            "sum": RationalJson::from(&sum),
            "normalized": normalized,
            "rows": entries.iter().map(CensusRow::from).collect::<Vec<_>>(),
        })),
        Format::Csv => census_csv(&entries),
        Format::Plain => {
            let mut s = String::new();
            for e in &entries {
                let _ = writeln!(s, "{} {} {}", e.key, plain(&e.likelihood), e.automorphisms);
            }
            let _ = writeln!(s, "classes {}\nsum {}", entries.len(), plain(&sum));
            s
        }
    };
    if normalized {
        Ok(out)
    } else {
        Err((Some(out), Failure::Check))
    }
}

fn verify(
    suites: &[Suite],
    samples: u64,
    seed: u64,
    format: Format,
) -> Result<String, (Option<String>, Failure)> {
    if samples == 0 {
        return Err((None, Failure::Usage("--samples must be at least 1".into())));
    }
    let options = VerifyOptions {
        samples,
        seed,
        ..VerifyOptions::default()
    };
    let chosen: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let mut reports = Vec::new();
    for suite in chosen {
        reports.push(run_suite(suite, &options).map_err(|e| (None, e.into()))?);
    }
    let all_passed = reports.iter().all(|r| r.passed());
    let mut out = String::new();
    match format {
        Format::Json => {
            let value: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.name(),
                        "passed": r.passed(),
                        "checks": r.checks.iter().map(|c| json!({
                            "name": c.name,
                            "passed": c.passed,
                            "detail": c.detail,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            out = json_line(&value);
        }
        Format::Csv => {
            out.push_str("suite,check,passed,detail\n");
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        r.suite,
                        csv_field(&c.name),
                        c.passed,
                        csv_field(&c.detail)
                    );
                }
            }
        }
        Format::Plain => {
            for r in &reports {
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{mark} {}: {} [{}]", r.suite, c.name, c.detail);
                }
                let passed = r.checks.iter().filter(|c| c.passed).count();
                let mark = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{mark} {} {passed}/{} checks", r.suite, r.checks.len());
            }
        }
    }
    if all_passed {
        Ok(out)
    } else {
        Err((Some(out), Failure::Check))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
