//! Command-line front end: every solver and constructor in the library,
//! with reproducible machine-readable certificates.
//!
//! Exit status: 0 for an answer, 2 for a verified negative (an exhausted
//! embedding search or a failed embedding verification), 1 for any error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tdim::embedding::{
    check_w_resolved, embedding_from_resolving_set, exists_w_resolved_embedding, LatticeEmbedding,
};
use tdim::families::{self, FamilySpec};
use tdim::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use tdim::graph::Graph;
use tdim::metric::{
    is_resolving, log_lower_bound, metric_dimension_exact, neighbourhood_lower_bound,
};
use tdim::threshold::{
    g_function, hernando_tau_lower_bound, star_method, threshold_via_embeddings_jobs,
    threshold_via_supergraphs, EdgeAdditionPlan, Progress,
};
use tdim::tree::tree_anatomy;

#[derive(Parser)]
#[command(name = "tdim", version, about = "Exact metric and threshold dimension with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Where the graph comes from: a file or a family spec, exactly one.
#[derive(Args)]
struct Input {
    /// Read the graph from this file
    #[arg(long)]
    file: Option<PathBuf>,

    /// Input file format
    #[arg(long, value_enum, default_value = "edge-list")]
    format: Format,

    /// Build a named family instead, e.g. "star:6", "l3n:4", "t_k:5",
    /// "subdivided_star:6:2,1,1,1,1,1", "random_tree:8:42"
    #[arg(long, alias = "graph")]
    family: Option<String>,

    /// Seed override for random_tree
    #[arg(long)]
    seed: Option<u64>,
}

impl Input {
    fn load(&self) -> Result<Graph, String> {
        match (&self.file, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
                let g = match self.format {
                    Format::EdgeList => parse_edge_list(&text),
                    Format::Graph6 => parse_graph6(&text),
                };
                g.map_err(|e| e.to_string())
            }
            (None, Some(spec)) => {
                let mut spec: FamilySpec = spec.parse().map_err(|e: tdim::Error| e.to_string())?;
                if let (FamilySpec::RandomTree { n, .. }, Some(seed)) = (&spec, self.seed) {
                    spec = FamilySpec::RandomTree { n: *n, seed };
                }
                families::make(&spec).map_err(|e| e.to_string())
            }
            _ => Err("provide exactly one of --file or --family".into()),
        }
    }

    fn family_spec(&self) -> Result<FamilySpec, String> {
        match &self.family {
            Some(spec) => spec.parse().map_err(|e: tdim::Error| e.to_string()),
            None => Err("this verb needs --family".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact metric dimension with a resolving certificate
    Dim {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Exact threshold dimension (embedding search by default)
    Threshold {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
        /// Use the brute-force supergraph sweep instead
        #[arg(long)]
        oracle: bool,
        /// Refuse the sweep beyond this many complement edges
        #[arg(long, default_value_t = 22)]
        cap: usize,
        /// Worker threads for the embedding search
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Trace every candidate to stderr
        #[arg(long)]
        progress: bool,
    },
    /// One added edge reducing a tree's dimension by one
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Two added edges taking a dimension-4 tree to dimension 2
    Reduce4 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Build or search for a landmark-resolved lattice embedding
    Embed {
        #[command(flatten)]
        input: Input,
        /// Comma-separated landmark vertices, in order
        #[arg(long, value_delimiter = ',', required = true)]
        landmarks: Vec<usize>,
        /// Run the complete backtracking search instead of the
        /// distance-vector construction
        #[arg(long)]
        search: bool,
        /// Grid side for the search (default: diameter + 1)
        #[arg(long)]
        side: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Check an embedding JSON file against a graph
    VerifyEmbed {
        #[command(flatten)]
        input: Input,
        /// Embedding JSON file
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// The g(n)-landmark edge-addition construction for trees
    StarMethod {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// All implemented lower bounds plus g(n)
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Emit a named family graph (optionally with its packaged embedding)
    Family {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
        /// Also emit the packaged verified embedding, if the family has one
        #[arg(long)]
        with_embedding: bool,
    },
    /// Major vertices, terminal degrees, limbs and core of a tree
    Anatomy {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if e.kind() == ErrorKind::DisplayHelp
                || e.kind() == ErrorKind::DisplayVersion
                || e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn plan_lines(plan: &EdgeAdditionPlan) -> String {
    let edges: Vec<String> = plan
        .added_edges()
        .iter()
        .map(|(u, v)| format!("{}-{}", u, v))
        .collect();
    format!(
        "added edges: {}\nresolving set: {:?}\ndimension: {}",
        if edges.is_empty() {
            "(none)".to_string()
        } else {
            edges.join(" ")
        },
        plan.claimed_resolving_set(),
        plan.claimed_dimension()
    )
}

/// Re-checks a plan against its graph; printing always happens after this.
fn reverify_plan(g: &Graph, plan: &EdgeAdditionPlan) -> Result<(), String> {
    let h = g
        .add_edges(plan.added_edges())
        .map_err(|e| e.to_string())?;
    match is_resolving(&h, plan.claimed_resolving_set()) {
        Ok(Some(_)) => Ok(()),
        Ok(None) => Err("internal: plan failed re-verification".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Dim { input, output } => {
            let g = input.load()?;
            let md = metric_dimension_exact(&g).map_err(|e| e.to_string())?;
            if is_resolving(&g, &md.basis).map_err(|e| e.to_string())?.is_none() {
                return Err("internal: basis failed re-verification".into());
            }
            match output {
                Output::Json => println!(
                    "{}",
                    serde_json::to_string(&md.certificate).expect("serializes")
                ),
                Output::Text => {
                    println!("beta = {}", md.beta);
                    println!("basis = {:?}", md.basis);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Threshold {
            input,
            output,
            oracle,
            cap,
            jobs,
            progress,
        } => {
            let g = input.load()?;
            let trace = |line: &str| eprintln!("{}", line);
            let sink: Progress = if progress { Some(&trace) } else { None };
            let cert = if oracle {
                threshold_via_supergraphs(&g, cap, sink)
            } else {
                threshold_via_embeddings_jobs(&g, jobs.max(1), sink)
            }
            .map_err(|e| e.to_string())?;
            let h = g
                .add_edges(&cert.witness_edges)
                .map_err(|e| e.to_string())?;
            if is_resolving(&h, &cert.witness_basis)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                return Err("internal: threshold witness failed re-verification".into());
            }
            match output {
                Output::Json => println!("{}", cert.to_json()),
                Output::Text => {
                    println!("tau = {}", cert.tau);
                    println!("witness edges = {:?}", cert.witness_edges);
                    println!("witness basis = {:?}", cert.witness_basis);
                    println!("examined = {}", cert.examined);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { input, output } => {
            let g = input.load()?;
            let plan = tdim::reduction::reduce_once(&g).map_err(|e| e.to_string())?;
            reverify_plan(&g, &plan)?;
            match output {
                Output::Json => println!("{}", plan.to_json()),
                Output::Text => println!("{}", plan_lines(&plan)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce4 { input, output } => {
            let g = input.load()?;
            let plan = tdim::reduction::reduce_dim4_to_2(&g).map_err(|e| e.to_string())?;
            reverify_plan(&g, &plan)?;
            match output {
                Output::Json => println!("{}", plan.to_json()),
                Output::Text => println!("{}", plan_lines(&plan)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            input,
            landmarks,
            search,
            side,
            output,
        } => {
            let g = input.load()?;
            let side = match side {
                Some(s) => s,
                None => g.diameter().map_err(|e| e.to_string())? as usize + 1,
            };
            let emb = if search {
                match exists_w_resolved_embedding(&g, &landmarks, side)
                    .map_err(|e| e.to_string())?
                {
                    Some(emb) => emb,
                    None => {
                        println!("unsat: no landmark-resolved embedding in side-{} grid", side);
                        return Ok(ExitCode::from(2));
                    }
                }
            } else {
                embedding_from_resolving_set(&g, &landmarks).map_err(|e| e.to_string())?
            };
            if check_w_resolved(&g, &emb).is_err() {
                return Err("internal: embedding failed re-verification".into());
            }
            match output {
                Output::Json => println!("{}", emb.to_json()),
                Output::Text => {
                    println!("landmarks = {:?}", emb.landmarks);
                    println!("side = {}", emb.side);
                    for (v, c) in emb.coords.iter().enumerate() {
                        println!("{} -> {:?}", v, c);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyEmbed {
            input,
            embedding,
            output,
        } => {
            let g = input.load()?;
            let text = std::fs::read_to_string(&embedding)
                .map_err(|e| format!("cannot read {}: {}", embedding.display(), e))?;
            let emb = LatticeEmbedding::from_json(&text).map_err(|e| e.to_string())?;
            match check_w_resolved(&g, &emb) {
                Ok(()) => {
                    match output {
                        Output::Json => println!("{{\"resolved\":true}}"),
                        Output::Text => println!("resolved"),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(failure) => {
                    match output {
                        Output::Json => println!(
                            "{}",
                            serde_json::json!({
                                "resolved": false,
                                "diagnostic": failure.to_string(),
                            })
                        ),
                        Output::Text => println!("not resolved: {}", failure),
                    }
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::StarMethod { input, output } => {
            let g = input.load()?;
            let plan = star_method(&g).map_err(|e| e.to_string())?;
            reverify_plan(&g, &plan)?;
            match output {
                Output::Json => println!("{}", plan.to_json()),
                Output::Text => println!("{}", plan_lines(&plan)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { input, output } => {
            let g = input.load()?;
            let n = g.n() as u64;
            let d = g.diameter().map_err(|e| e.to_string())?.max(1) as u64;
            let log = if n >= 2 { log_lower_bound(n, d) } else { 0 };
            let nb = neighbourhood_lower_bound(&g).map_err(|e| e.to_string())?;
            let hern = hernando_tau_lower_bound(&g).map_err(|e| e.to_string())?;
            let gval = g_function(n.max(1));
            match output {
                Output::Json => println!(
                    "{}",
                    serde_json::json!({
                        "g": gval,
                        "hernando_tau_lower_bound": hern,
                        "log_lower_bound": log,
                        "neighbourhood_lower_bound": nb,
                    })
                ),
                Output::Text => {
                    println!("log lower bound = {}", log);
                    println!("neighbourhood lower bound = {}", nb);
                    println!("hernando tau lower bound = {}", hern);
                    println!("g(n) = {}", gval);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            input,
            output,
            with_embedding,
        } => {
            let spec = input.family_spec()?;
            let g = input.load()?;
            let emb = if with_embedding {
                Some(packaged_embedding(&spec, &g)?)
            } else {
                None
            };
            match output {
                Output::Json => {
                    let mut obj = serde_json::json!({
                        "n": g.n(),
                        "edges": g.edges(),
                        "graph6": write_graph6(&g),
                    });
                    if let Some(emb) = emb {
                        obj["embedding"] =
                            serde_json::from_str(&emb.to_json()).expect("round-trips");
                    }
                    println!("{}", obj);
                }
                Output::Text => {
                    print!("{}", write_edge_list(&g));
                    if let Some(emb) = emb {
                        println!("{}", emb.to_json());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Anatomy { input, output } => {
            let g = input.load()?;
            let anatomy = tree_anatomy(&g).map_err(|e| e.to_string())?;
            match output {
                Output::Json => {
                    println!("{}", serde_json::to_string(&anatomy).expect("serializes"))
                }
                Output::Text => {
                    println!("majors = {:?}", anatomy.majors);
                    println!("exterior majors = {:?}", anatomy.exterior_majors);
                    for (v, t) in &anatomy.terminal_degree {
                        println!("ter({}) = {}", v, t);
                    }
                    for limb in &anatomy.limbs {
                        println!("limb at {}: {:?}", limb.anchor, limb.path);
                    }
                    println!("core = {:?}", anatomy.core_vertices);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Packaged embeddings for the families that ship one; everything is
/// verified against the freshly built graph before being returned.
fn packaged_embedding(spec: &FamilySpec, g: &Graph) -> Result<LatticeEmbedding, String> {
    let emb = match spec {
        FamilySpec::L3n { n } => families::l3n_embedding(*n).map_err(|e| e.to_string())?,
        FamilySpec::TK { k: 5 } => families::t5_embedding(),
        FamilySpec::SubdividedStar { legs } => {
            families::k16_subdivision_embedding(legs).map_err(|e| e.to_string())?
        }
        _ => return Err("no packaged embedding for this family".into()),
    };
    match check_w_resolved(g, &emb) {
        Ok(()) => Ok(emb),
        Err(e) => Err(format!("packaged embedding failed verification: {}", e)),
    }
}
