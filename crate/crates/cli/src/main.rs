//! `g2srg` — build and verify the srg(36,14,4,6) construction from the
//! unitary geometry on GF(4)³.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use g2srg::aut::{automorphism_group_with, rank_and_subdegrees, AutOptions};
use g2srg::graph::Graph;
use g2srg::pipeline::{self, GammaConstruction};
use g2srg::two_graph::associated_two_graph;
use g2srg::verify::{run_full_verification, VerifyOptions, DEFAULT_SEED};
use g2srg::{graph6, PermGroup};

#[derive(Parser)]
#[command(
    name = "g2srg",
    version,
    about = "Construction and exhaustive verification of the rank-3 srg(36,14,4,6) \
             via Seidel switching in the unitary geometry over GF(4)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Construct Γ, Γ' and the complement and emit them
    Build(BuildArgs),
    /// Run the full verification suite and emit the report
    Verify(VerifyArgs),
    /// Scan all 924 six-class switching candidates
    SearchSwitch(SearchSwitchArgs),
    /// Automorphism group (order, generators, orbits) of graph6 input
    Aut(AutArgs),
    /// Classify the complement edges of Γ' by the three types
    ClassifyEdges(ClassifyArgs),
    /// Export geometry, graphs, Seidel matrices, two-graph summary and generators
    Export(ExportArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Directory to write into (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// File to write the report to (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the randomized property suites
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct SearchSwitchArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AutArgs {
    /// File with one graph6 string per line
    graph_file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Disable orbit pruning in the search (oracle mode; small graphs only)
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Directory to write the export into
    #[arg(long, default_value = "g2srg-export")]
    out: PathBuf,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Build(args) => build(args),
        Command::Verify(args) => verify(args),
        Command::SearchSwitch(args) => search_switch(args),
        Command::Aut(args) => aut(args),
        Command::ClassifyEdges(args) => classify_edges(args),
        Command::Export(args) => export(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

struct Pipeline {
    construction: GammaConstruction,
    gamma: Graph,
    w: g2srg::VertexSet,
    class_indices: Vec<usize>,
    gamma_prime: Graph,
    complement: Graph,
}

fn run_pipeline() -> Pipeline {
    let construction = GammaConstruction::new();
    let canonical =
        pipeline::canonical_switch_candidate(&construction).expect("a valid switch exists");
    let gamma = construction.graph().clone();
    let gamma_prime = gamma.switch(canonical.vertex_set);
    let complement = gamma_prime.complement();
    Pipeline {
        construction,
        gamma,
        w: canonical.vertex_set,
        class_indices: canonical.class_indices,
        gamma_prime,
        complement,
    }
}

fn build(args: BuildArgs) -> Result<()> {
    let p = run_pipeline();
    let graphs = [
        ("gamma", &p.gamma),
        ("gamma-prime", &p.gamma_prime),
        ("complement", &p.complement),
    ];
    match args.format {
        Format::Graph6 => match &args.out {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                for (name, g) in graphs {
                    write_file(dir, &format!("{name}.g6"), &(graph6::encode(g) + "\n"))?;
                }
                eprintln!("wrote gamma.g6, gamma-prime.g6, complement.g6 to {}", dir.display());
            }
            None => {
                for (name, g) in graphs {
                    println!("{name}\t{}", graph6::encode(g));
                }
            }
        },
        Format::Json => {
            let value = json!({
                "gamma": p.gamma.to_json(),
                "gamma_prime": p.gamma_prime.to_json(),
                "complement": p.complement.to_json(),
                "w_vertices": p.w.indices(),
                "w_class_indices": p.class_indices,
            });
            let text = serde_json::to_string_pretty(&value)? + "\n";
            match &args.out {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    write_file(dir, "graphs.json", &text)?;
                }
                None => print!("{text}"),
            }
        }
        Format::Text => {
            let mut text = String::new();
            for (name, g) in graphs {
                text.push_str(&format!(
                    "{name}: n = {}, edges = {}, {} , graph6 = {}\n",
                    g.n(),
                    g.edge_count(),
                    match g.check_srg().params() {
                        Some(p) => p.to_string(),
                        None => "not strongly regular".into(),
                    },
                    graph6::encode(g),
                ));
            }
            text.push_str(&format!("W (18 vertices): {:?}\n", p.w.indices()));
            emit(&args.out, &text)?;
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<()> {
    if args.format == Format::Graph6 {
        bail!("verify emits a report; use --format text or json");
    }
    let report = run_full_verification(&VerifyOptions { seed: args.seed });
    let content = match args.format {
        Format::Json => report.to_json_string() + "\n",
        _ => report.render_text(),
    };
    emit(&args.out, &content)?;
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}

fn search_switch(args: SearchSwitchArgs) -> Result<()> {
    if args.format == Format::Graph6 {
        bail!("search-switch emits per-candidate results; use --format text or json");
    }
    let construction = GammaConstruction::new();
    let scan = pipeline::scan_switch_candidates(&construction);
    let valid = scan.iter().filter(|c| c.is_target()).count();
    let content = match args.format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "examined": scan.len(),
                "valid": valid,
                "candidates": scan,
            }))? + "\n"
        }
        _ => {
            let mut text = String::new();
            for (i, cand) in scan.iter().enumerate() {
                text.push_str(&format!(
                    "{i:3}  classes {:?}  {}\n",
                    cand.class_indices,
                    match cand.result_params {
                        Some(p) => format!("-> {p}"),
                        None => match cand.regular_degree {
                            Some(d) => format!("{d}-regular, not strongly regular"),
                            None => "not regular".into(),
                        },
                    }
                ));
            }
            text.push_str(&format!("examined {} candidates, {} valid\n", scan.len(), valid));
            text
        }
    };
    emit(&args.out, &content)
}

fn aut(args: AutArgs) -> Result<()> {
    if args.format == Format::Graph6 {
        bail!("aut emits group data; use --format text or json");
    }
    let input = fs::read_to_string(&args.graph_file)
        .with_context(|| format!("reading {}", args.graph_file.display()))?;
    let options = AutOptions {
        orbit_pruning: !args.no_prune,
    };
    let mut results = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let graph = graph6::decode(line)
            .with_context(|| format!("line {}: invalid graph6", lineno + 1))?;
        let group: PermGroup = automorphism_group_with(&graph, &options)
            .with_context(|| format!("line {}: group order overflow", lineno + 1))?;
        let rank = rank_and_subdegrees(&group, &graph).ok();
        results.push((graph, group, rank));
    }
    let content = match args.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|(graph, group, rank)| {
                    json!({
                        "graph6": graph6::encode(graph),
                        "n": graph.n(),
                        "group": group.to_json(),
                        "rank": rank.as_ref().map(|r| r.rank),
                        "subdegrees": rank.as_ref().map(|r| r.subdegrees.clone()),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items)? + "\n"
        }
        _ => {
            let mut text = String::new();
            for (graph, group, rank) in &results {
                text.push_str(&format!(
                    "graph on {} vertices: |Aut| = {}, {} generators, {} orbit(s)\n",
                    graph.n(),
                    group.order(),
                    group.generators().len(),
                    group.orbits().len(),
                ));
                if let Some(info) = rank {
                    text.push_str(&format!(
                        "  transitive, rank {}, subdegrees {:?}\n",
                        info.rank, info.subdegrees
                    ));
                } else {
                    text.push_str(&format!("  orbits: {:?}\n", group.orbits()));
                }
                for gen in group.generators() {
                    text.push_str(&format!("  {}\n", gen.cycle_notation()));
                }
            }
            text
        }
    };
    emit(&args.out, &content)
}

fn classify_edges(args: ClassifyArgs) -> Result<()> {
    if args.format == Format::Graph6 {
        bail!("classify-edges emits a tally; use --format text or json");
    }
    let p = run_pipeline();
    let tally = pipeline::classify_complement_edges(&p.construction, &p.gamma_prime, p.w);
    let content = match args.format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "w_class_indices": p.class_indices,
                "both_in_w": tally.both_in_w,
                "both_outside_w": tally.both_outside_w,
                "crossing": tally.crossing,
                "total": tally.total_classified(),
                "violations": tally.violations,
            }))? + "\n"
        }
        _ => format!(
            "complement edges by type (W = classes {:?}):\n\
             \x20 both ends in W,  h in {{w,W}}: {}\n\
             \x20 both ends in ~W, h in {{w,W}}: {}\n\
             \x20 one end in each, h = 1      : {}\n\
             \x20 total {} / violations {}\n",
            p.class_indices,
            tally.both_in_w,
            tally.both_outside_w,
            tally.crossing,
            tally.total_classified(),
            tally.violations.len(),
        ),
    };
    emit(&args.out, &content)
}

fn export(args: ExportArgs) -> Result<()> {
    let p = run_pipeline();
    let dir = &args.out;
    fs::create_dir_all(dir)?;

    write_file(dir, "v1.json", &(serde_json::to_string_pretty(&g2srg::geometry::v1_export())? + "\n"))?;
    write_file(dir, "gamma.g6", &(graph6::encode(&p.gamma) + "\n"))?;
    write_file(dir, "gamma-prime.g6", &(graph6::encode(&p.gamma_prime) + "\n"))?;
    write_file(dir, "complement.g6", &(graph6::encode(&p.complement) + "\n"))?;
    write_file(dir, "seidel-gamma.txt", &p.gamma.seidel_matrix().render_text())?;
    write_file(dir, "seidel-gamma-prime.txt", &p.gamma_prime.seidel_matrix().render_text())?;

    let two_graph = associated_two_graph(&p.gamma);
    write_file(dir, "two-graph.json", &(serde_json::to_string_pretty(&two_graph.summary_json())? + "\n"))?;

    for (name, graph) in [("gamma", &p.gamma), ("gamma-prime", &p.gamma_prime)] {
        let group = g2srg::automorphism_group(graph).context("group order overflow")?;
        write_file(
            dir,
            &format!("aut-{name}.json"),
            &(serde_json::to_string_pretty(&group.to_json())? + "\n"),
        )?;
    }

    let construction = &p.construction;
    let scan = pipeline::scan_switch_candidates(construction);
    write_file(
        dir,
        "switch-candidates.json",
        &(serde_json::to_string_pretty(&json!({
            "examined": scan.len(),
            "valid": scan.iter().filter(|c| c.is_target()).count(),
            "candidates": scan,
        }))? + "\n"),
    )?;

    eprintln!("exported to {}", dir.display());
    Ok(())
}

fn write_file(dir: &Path, name: &str, content: &str) -> Result<()> {
    let path = dir.join(name);
    let mut file =
        fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
    file.write_all(content.as_bytes())?;
    Ok(())
}
