use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twinreduce::groups::{build_group_graph, drop_isolated, summarize, GraphKind, GraphSummary};
use twinreduce::json::{CographDocument, GroupGraphDocument, ReduceDocument, SeriesDocument};
use twinreduce::{
    parse_generators, parse_graph, parse_partition, parse_trace, write_edge_list, write_graph6, write_partition,
    write_trace, FormatError,
};
use twinreduce_core::{
    build_cotree, complete_twin_reduction, enumerate_group, normal_series_report, replay_trace, verify_theorem3,
    CotreeError, Graph, MergePolicy, Partition, SiblingViolation, DEFAULT_GROUP_CAP,
};

#[derive(Parser)]
#[command(
    name = "twinreduce",
    version,
    about = "Twin reduction, cographs and sibling partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file (graph6 or edge list), or `-` for stdin.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "g6")]
    input: Option<PathBuf>,
    /// Inline graph6 code.
    #[arg(long)]
    g6: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    Det,
    Rand,
}

#[derive(Subcommand)]
enum Command {
    /// Complete twin reduction: reduced graph, maximal sibling partition, trace.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "det")]
        policy: Policy,
        /// Seed for `--policy rand`.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Cograph test: cotree on success, induced P4 otherwise (exit 1).
    Cograph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Checks one partition for the sibling rules, or joins two.
    Siblings {
        #[command(flatten)]
        input: Input,
        /// Partition file; give it twice to join two partitions.
        #[arg(long = "partition", value_name = "PATH", required = true, num_args = 1)]
        partitions: Vec<PathBuf>,
    },
    /// Staged open/closed reduction and the automorphism normal-series report.
    Series {
        #[command(flatten)]
        input: Input,
        /// Brute-force automorphism checks (small graphs only).
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Power-type graphs of a permutation group given by generators.
    Groupgraph {
        /// Generator file in cycle notation.
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "difference")]
        kind: GraphKind,
        /// Run twin reduction and summarise the result.
        #[arg(long)]
        reduce: bool,
        /// Remove isolated vertices before reducing.
        #[arg(long)]
        drop_isolated: bool,
        /// Fail with exit 5 unless the group has this order.
        #[arg(long, value_name = "N")]
        expect_order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Replays a reduction trace (text or JSON) against a graph.
    CheckTrace {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "PATH")]
        trace: PathBuf,
    },
}

enum Failure {
    Parse(String),
    Io(String),
    Guard(String),
    Order { expected: usize, actual: usize },
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Io(_) => 3,
            Failure::Guard(_) => 4,
            Failure::Order { .. } => 5,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<twinreduce_core::Error> for Failure {
    fn from(e: twinreduce_core::Error) -> Self {
        match e {
            twinreduce_core::Error::SizeGuard { .. } | twinreduce_core::Error::CapExceeded(_) => {
                Failure::Guard(e.to_string())
            }
            other => Failure::Parse(other.to_string()),
        }
    }
}

fn read_path(path: &PathBuf) -> Result<String, Failure> {
    let result = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    match (&input.input, &input.g6) {
        (_, Some(code)) => Ok(twinreduce::parse_graph6(code)?),
        (Some(path), None) => Ok(parse_graph(&read_path(path)?)?),
        (None, None) => Err(Failure::Parse("no input: pass --in PATH or --g6 CODE".into())),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialise") + "\n"
}

fn violation_line(v: &SiblingViolation) -> String {
    match v {
        SiblingViolation::P4InsidePart { path: [a, b, c, d] } => format!("P4-inside-part {a} {b} {c} {d}"),
        SiblingViolation::MixedEdges {
            outside,
            adjacent,
            nonadjacent,
        } => {
            format!("mixed-edges-between-parts {outside} {adjacent} {nonadjacent}")
        }
    }
}

fn reduce(input: &Input, format: Format, policy: Policy, seed: Option<u64>) -> Result<(String, u8), Failure> {
    if policy == Policy::Det && seed.is_some() {
        return Err(Failure::Parse("--seed only applies to --policy rand".into()));
    }
    let g = read_graph(input)?;
    let merge_policy = match policy {
        Policy::Det => MergePolicy::Deterministic,
        Policy::Rand => MergePolicy::Randomized(seed.unwrap_or(0)),
    };
    let r = complete_twin_reduction(&g, merge_policy);
    let out = match format {
        Format::Graph6 => write_graph6(&r.graph) + "\n",
        Format::Edgelist => write_edge_list(&r.graph),
        Format::Json => {
            let name = if policy == Policy::Det { "det" } else { "rand" };
            let seed = (policy == Policy::Rand).then(|| seed.unwrap_or(0));
            json(&ReduceDocument::new(&r, name, seed))
        }
        Format::Text => format!("# reduced {}\n{}", write_graph6(&r.graph), write_trace(&r.trace)),
    };
    Ok((out, 0))
}

fn cograph(input: &Input, format: Format) -> Result<(String, u8), Failure> {
    let g = read_graph(input)?;
    let result = match build_cotree(&g) {
        Ok(tree) => Ok(tree),
        Err(CotreeError::NotCograph(path)) => Err(path),
        Err(e) => return Err(Failure::Parse(e.to_string())),
    };
    let code = if result.is_ok() { 0 } else { 1 };
    let out = match (format, &result) {
        (Format::Json, _) => json(&CographDocument::new(&result)),
        (_, Ok(tree)) => format!("cograph\n{tree}\n"),
        (_, Err([a, b, c, d])) => format!("not cograph\n{a} {b} {c} {d}\n"),
    };
    Ok((out, code))
}

fn siblings(input: &Input, paths: &[PathBuf]) -> Result<(String, u8), Failure> {
    let g = read_graph(input)?;
    let parts: Vec<Partition> = paths
        .iter()
        .map(|p| Ok(parse_partition(&read_path(p)?, g.n())?))
        .collect::<Result<_, Failure>>()?;
    let (target, mut out) = match parts.as_slice() {
        [p] => (p.clone(), String::new()),
        [p, q] => {
            let joined = p.join(q)?;
            let text = format!("join\n{}", write_partition(&joined));
            (joined, text)
        }
        _ => return Err(Failure::Parse("expected one or two --partition files".into())),
    };
    let code = match target.sibling_violation(&g)? {
        None => {
            out.push_str("sibling\n");
            0
        }
        Some(v) => {
            writeln!(out, "not sibling\n{}", violation_line(&v)).unwrap();
            1
        }
    };
    Ok((out, code))
}

fn series(input: &Input, verify: bool, format: Format) -> Result<(String, u8), Failure> {
    let g = read_graph(input)?;
    let report = normal_series_report(&g);
    let check = if verify { Some(verify_theorem3(&g)?) } else { None };
    let code = if check.as_ref().is_some_and(|c| !c.passed()) {
        1
    } else {
        0
    };
    if format == Format::Json {
        return Ok((json(&SeriesDocument::new(&report, check.as_ref())), code));
    }
    let mut out = String::new();
    if report.stages.is_empty() {
        out.push_str("no stages, |N| = 1\n");
    } else {
        let rows: Vec<[String; 4]> = report
            .stages
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let sizes: Vec<String> = s.class_sizes.iter().map(ToString::to_string).collect();
                [
                    i.to_string(),
                    s.kind.to_string(),
                    sizes.join(" "),
                    s.factor_order.to_string(),
                ]
            })
            .collect();
        let header = [
            "stage".to_string(),
            "kind".into(),
            "class sizes".into(),
            "factor".into(),
        ];
        let widths: Vec<usize> = (0..4)
            .map(|c| rows.iter().chain([&header]).map(|r| r[c].len()).max().unwrap())
            .collect();
        for row in [&header].into_iter().chain(rows.iter()) {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        writeln!(out, "|N| bound (product of stage factors) = {}", report.n_order).unwrap();
    }
    writeln!(
        out,
        "reduced graph: {} vertices, graph6 {}",
        report.reduced.n(),
        write_graph6(&report.reduced)
    )
    .unwrap();
    if let Some(c) = &check {
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(out, "|Aut| = {}", c.aut_order).unwrap();
        writeln!(out, "kernel |N| = {}", c.kernel_order).unwrap();
        writeln!(out, "kernel is a normal subgroup: {}", verdict(c.kernel_is_normal())).unwrap();
        writeln!(
            out,
            "|Aut|/|N| divides |Aut(reduced)| = {}: {}",
            c.reduced_aut_order,
            verdict(c.quotient_divides)
        )
        .unwrap();
        writeln!(
            out,
            "first open stage subgroup {} = {}: {}",
            c.first_stage_actual,
            c.first_stage_expected,
            verdict(c.first_stage_matches())
        )
        .unwrap();
        writeln!(out, "verify: {}", verdict(c.passed())).unwrap();
    }
    Ok((out, code))
}

fn summary_text(out: &mut String, s: &GraphSummary) {
    writeln!(out, "reduced: {} vertices, {} edges", s.vertices, s.edges).unwrap();
    let census: Vec<String> = s
        .component_census
        .iter()
        .map(|(size, count)| format!("{size}x{count}"))
        .collect();
    writeln!(out, "components (size x count): {}", census.join(" ")).unwrap();
    let l = &s.largest;
    writeln!(out, "largest component: {} vertices, {} edges", l.vertices, l.edges).unwrap();
    match (&l.class_sizes, &l.class_degrees) {
        (Some([a, b]), Some([da, db])) => {
            writeln!(out, "bipartite: yes ({a} + {b})").unwrap();
            writeln!(out, "class degrees: {da:?} | {db:?}").unwrap();
        }
        _ => writeln!(out, "bipartite: no").unwrap(),
    }
    writeln!(out, "degrees: {:?}", l.degrees).unwrap();
    writeln!(out, "semiregular: {}", if l.semiregular { "yes" } else { "no" }).unwrap();
    match l.girth {
        Some(k) => writeln!(out, "girth: {k}").unwrap(),
        None => writeln!(out, "girth: infinite").unwrap(),
    }
}

#[allow(clippy::too_many_arguments)]
fn groupgraph(
    path: &PathBuf,
    kind: GraphKind,
    reduce: bool,
    strip: bool,
    expect_order: Option<usize>,
    cap: usize,
    jobs: usize,
    format: Option<Format>,
) -> Result<(String, u8), Failure> {
    let generators = parse_generators(&read_path(path)?)?;
    let group = enumerate_group(&generators, cap)?;
    if let Some(expected) = expect_order {
        if group.order() != expected {
            return Err(Failure::Order {
                expected,
                actual: group.order(),
            });
        }
    }
    let mut g = build_group_graph(&group, kind, jobs)?;
    if strip {
        g = drop_isolated(&g).0;
    }
    let reduced = reduce.then(|| complete_twin_reduction(&g, MergePolicy::Deterministic).graph);
    let emitted = reduced.as_ref().unwrap_or(&g);
    let format = format.unwrap_or(if reduce { Format::Text } else { Format::Graph6 });
    let out = match format {
        Format::Graph6 => write_graph6(emitted) + "\n",
        Format::Edgelist => write_edge_list(emitted),
        Format::Json => json(&GroupGraphDocument {
            schema: GroupGraphDocument::schema(),
            group_order: group.order(),
            kind,
            vertices: g.n(),
            edges: g.edge_count(),
            dropped_isolated: strip,
            graph6: Some(write_graph6(emitted)),
            reduced: reduced.as_ref().map(summarize),
        }),
        Format::Text => {
            let mut out = format!("group order {}\n", group.order());
            let name = kind
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            writeln!(out, "{name} graph: {} vertices, {} edges", g.n(), g.edge_count()).unwrap();
            match &reduced {
                Some(r) => summary_text(&mut out, &summarize(r)),
                None => writeln!(out, "graph6 {}", write_graph6(&g)).unwrap(),
            }
            out
        }
    };
    Ok((out, 0))
}

fn check_trace(input: &Input, trace_path: &PathBuf) -> Result<(String, u8), Failure> {
    let g = read_graph(input)?;
    let text = read_path(trace_path)?;
    let trace = if text.trim_start().starts_with('{') {
        serde_json::from_str::<ReduceDocument>(&text)
            .map_err(FormatError::from)?
            .trace()?
    } else {
        parse_trace(&text)?
    };
    Ok(match replay_trace(&g, &trace) {
        Ok(history) => (
            format!(
                "trace ok: {} steps\n{}",
                history.len() - 1,
                write_partition(&trace.partition)
            ),
            0,
        ),
        Err(e) => (format!("trace invalid: {e}\n"), 1),
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Reduce {
            input,
            format,
            policy,
            seed,
        } => reduce(&input, format, policy, seed),
        Command::Cograph { input, format } => cograph(&input, format),
        Command::Siblings { input, partitions } => siblings(&input, &partitions),
        Command::Series { input, verify, format } => series(&input, verify, format),
        Command::Groupgraph {
            input,
            kind,
            reduce,
            drop_isolated,
            expect_order,
            cap,
            jobs,
            format,
        } => groupgraph(&input, kind, reduce, drop_isolated, expect_order, cap, jobs, format),
        Command::CheckTrace { input, trace } => check_trace(&input, &trace),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            if io::stdout().write_all(out.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            let message = match &failure {
                Failure::Parse(m) | Failure::Io(m) | Failure::Guard(m) => m.clone(),
                Failure::Order { expected, actual } => format!("group order {actual}, expected {expected}"),
            };
            eprintln!("twinreduce: {message}");
            ExitCode::from(failure.code())
        }
    }
}
