use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use edgering::checks::{run_checks, FixtureSet, DEFAULT_MAX_DEGREE, SUITES};
use edgering::graph::{build_triangular_cactus, CactusSpec, Graph, GraphError};
use edgering::holes::{classify, HoleError};
use edgering::io::{graph_to_text, parse_cactus_spec, parse_graph_any};
use edgering::report::{analyze, AnalysisReport};
use edgering::semigroup::SemigroupError;

const EXIT_ACCEPTANCE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DECOMPOSITION: u8 = 3;
const EXIT_METHOD: u8 = 4;

/// Environment variable capping the truncation degree of every enumeration.
const DEGREE_CAP_VAR: &str = "EDGERING_MAX_DEGREE";

#[derive(Parser)]
#[command(name = "edgering", version, about = "Normality and (S2) analysis of edge rings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a triangular cactus around a hub and write it in text format.
    Gen {
        /// Number of triangles through the hub.
        #[arg(long)]
        n: Option<usize>,
        /// Pendant triangle counts at x1..x2n, comma separated.
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
        /// JSON cactus spec `{"n":..,"s":[..]}` instead of --n/--s.
        #[arg(long, conflicts_with_all = ["n", "s"])]
        spec: Option<PathBuf>,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full pipeline on a graph file (text, graph JSON or cactus spec).
    Analyze {
        graph: PathBuf,
        /// Truncation degree for hole enumeration.
        #[arg(long, default_value_t = 8)]
        degree: i64,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = 12)]
        max_d: usize,
    },
    /// Run the reproduction checks and print a pass/fail table.
    VerifyPaper {
        /// Run a single suite.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        only: Option<String>,
        /// Directory with replacement fixture files (`t1min.txt`, `bowtie.txt`, ...).
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Also write the results as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { n, s, spec, output } => cmd_gen(n, s, spec.as_deref(), output.as_deref()),
        Command::Analyze { graph, degree, json, max_d } => cmd_analyze(&graph, degree, json.as_deref(), max_d),
        Command::VerifyPaper { only, fixtures, json } => {
            cmd_verify_paper(only.as_deref(), fixtures.as_deref(), json.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn degree_cap() -> Result<i64, Failure> {
    match std::env::var(DEGREE_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::input(format!("{DEGREE_CAP_VAR} must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn graph_error(e: GraphError) -> Failure {
    Failure::input(format!("{e:?}: {e}"))
}

fn cmd_gen(n: Option<usize>, s: Vec<usize>, spec: Option<&Path>, output: Option<&Path>) -> Result<(), Failure> {
    let spec = match (spec, n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            parse_cactus_spec(&text).map_err(Failure::input)?
        }
        (None, Some(n)) => CactusSpec::new(n, s),
        (None, None) => return Err(Failure::input("give --n and --s, or --spec")),
    };
    let g = build_triangular_cactus(&spec).map_err(graph_error)?;
    let text = graph_to_text(&g);
    let summary = gen_summary(&g)?;
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn gen_summary(g: &Graph) -> Result<String, Failure> {
    let diameter = g.diameter().map_err(graph_error)?;
    let ty = classify(g).map_err(Failure::input)?;
    Ok(format!("d={} diameter={diameter} type={:?}", g.vertex_count(), ty.tag))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_graph_any(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn analysis_failure(e: HoleError) -> Failure {
    match e {
        HoleError::DecompositionMismatch(report) => {
            let mut message = format!("{}", HoleError::DecompositionMismatch(report.clone()));
            for x in report.missing.iter().take(5) {
                message.push_str(&format!("\n  uncovered hole {:?}", x.coords()));
            }
            for x in report.extra.iter().take(5) {
                message.push_str(&format!("\n  family point not a hole {:?}", x.coords()));
            }
            Failure { code: EXIT_DECOMPOSITION, message }
        }
        HoleError::Semigroup(e @ SemigroupError::MethodMismatch { .. }) => {
            Failure { code: EXIT_METHOD, message: e.to_string() }
        }
        HoleError::Graph(e) => graph_error(e),
        other => Failure::input(other),
    }
}

fn cmd_analyze(path: &Path, degree: i64, json: Option<&Path>, max_d: usize) -> Result<(), Failure> {
    let g = read_graph(path)?;
    if g.vertex_count() > max_d {
        return Err(Failure::input(format!(
            "graph has {} vertices, above the --max-d bound of {max_d}",
            g.vertex_count()
        )));
    }
    if degree < 0 {
        return Err(Failure::input(format!("--degree must be nonnegative, got {degree}")));
    }
    let cap = degree_cap()?;
    let degree = if degree > cap {
        eprintln!("note: degree {degree} capped at {cap} by {DEGREE_CAP_VAR}");
        cap
    } else {
        degree
    };
    let report = analyze(&g, degree).map_err(analysis_failure)?;
    print!("{}", render_report(&report));
    if let Some(out) = json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        fs::write(out, text + "\n").map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    }
    Ok(())
}

fn render_report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let g = &r.graph;
    let diameter = g.diameter.map_or("inf".to_string(), |d| d.to_string());
    out.push_str(&format!(
        "graph: d={} edges={} diameter={diameter} triangular_cactus={} type={:?}",
        g.vertices, g.edges, g.triangular_cactus, g.type_tag
    ));
    if let Some(hub) = &g.hub {
        out.push_str(&format!(" hub={hub}"));
    }
    out.push('\n');
    out.push_str(&format!("normal: {}\n", r.normality.normal));
    for [a, b] in &r.normality.exceptional_pairs {
        out.push_str(&format!("  exceptional pair {{{}}} {{{}}}\n", a.join(","), b.join(",")));
    }
    match &r.facets {
        Some(f) => {
            out.push_str(&format!("regular vertices: {{{}}}\n", f.regular_vertices.join(",")));
            out.push_str(&format!("fundamental sets: {}\n", f.fundamental_sets.len()));
            for t in &f.fundamental_sets {
                out.push_str(&format!("  {{{}}}\n", t.join(",")));
            }
        }
        None => out.push_str("facets: none (bipartite graph)\n"),
    }
    if let Some(h) = &r.holes {
        out.push_str(&format!("holes up to degree {}: {}\n", h.max_degree, h.total));
        for c in &h.per_degree {
            out.push_str(&format!("  degree {:>2}: {}\n", c.degree, c.count));
        }
    }
    if !r.families.is_empty() {
        out.push_str("families:\n");
        for f in &r.families {
            let facet = serde_json::to_string(&f.facet).expect("record serializes");
            out.push_str(&format!(
                "  shift {{{}}} facet {facet} dim {}\n",
                f.shift_support.join(","),
                f.dimension
            ));
        }
    }
    out.push_str(&format!("s2: {} ({:?})\n", r.verdict.s2, r.verdict.s2_status));
    out
}

fn cmd_verify_paper(only: Option<&str>, fixtures: Option<&Path>, json: Option<&Path>) -> Result<(), Failure> {
    let set = match fixtures {
        Some(dir) => FixtureSet::from_dir(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?,
        None => FixtureSet::bundled(),
    };
    let cap = degree_cap()?;
    let results = run_checks(&set, only, cap).map_err(Failure::input)?;
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if let Some(out) = json {
        let text = serde_json::to_string_pretty(&results).expect("results serialize");
        fs::write(out, text + "\n").map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    }
    if failed > 0 {
        return Err(Failure { code: EXIT_ACCEPTANCE, message: format!("{failed} criteria failed") });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgering::holes::{DecompositionReport, TypeTag};
    use edgering::semigroup::LatticeVector;

    #[test]
    fn failure_exit_codes() {
        let report = DecompositionReport {
            max_degree: 6,
            type_tag: TypeTag::Type1,
            vertex_count: 3,
            families: Vec::new(),
            holes_per_degree: Vec::new(),
            hole_count: 1,
            union_count: 0,
            missing: vec![LatticeVector::new(vec![2, 2, 2])],
            extra: Vec::new(),
            slabs: Vec::new(),
        };
        let f = analysis_failure(HoleError::DecompositionMismatch(Box::new(report)));
        assert_eq!(f.code, EXIT_DECOMPOSITION);
        assert!(f.message.contains("uncovered hole [2, 2, 2]"));
        let f = analysis_failure(HoleError::Semigroup(SemigroupError::MethodMismatch { only_a: 1, only_b: 0 }));
        assert_eq!(f.code, EXIT_METHOD);
        assert_eq!(analysis_failure(HoleError::Graph(GraphError::Disconnected)).code, EXIT_INPUT);
    }
}
