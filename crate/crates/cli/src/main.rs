use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use eocd::claims::run_all;
use eocd::domination::{cover_defect, find_eocd, gamma, gamma_t, EocdCertificate, Neighborhood, SearchMode};
use eocd::edgelist::{parse_edge_list, write_edge_list};
use eocd::empty_pd::recognize_empty_pd;
use eocd::families::Family;
use eocd::graph::{Graph, VertexSet};
use eocd::reduction::{build_reduction, CnfFormula};
use eocd::sierpinski::sierpinski_with_cap;
use eocd::tree::{decompose, random_eocd_tree, TreeOpSequence};

#[derive(Parser)]
#[command(name = "eocd", version, about = "Efficient open and closed domination toolkit")]
struct Cli {
    /// Refuse exact search on graphs with more vertices than this.
    #[arg(long, global = true, env = "EOCD_MAX_VERTICES", default_value_t = 4096)]
    max_vertices: usize,
    /// Print vertex labels instead of ids where the graph has them.
    #[arg(long, global = true)]
    labels: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph: path N, cycle N, bipartite R T, hypercube N, sierpinski P N, reduction CNFFILE.
    Generate {
        kind: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for an EOD set D and an ECD set P.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "any")]
        mode: SearchMode,
        /// Also compute the domination number.
        #[arg(long)]
        gamma: bool,
        /// Also compute the total domination number.
        #[arg(long)]
        gamma_t: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check that D is an EOD set and P an ECD set.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        sets: Sets,
    },
    /// Decide in polynomial time whether a certificate with P a subset of D exists.
    RecognizeEmptyPd { file: PathBuf },
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Build the graph of a one-in-three 3-SAT formula in DIMACS form.
    Reduce {
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Search the graph for a certificate.
        #[arg(long)]
        solve: bool,
        /// Read a satisfying assignment off the certificate; implies --solve.
        #[arg(long)]
        extract: bool,
    },
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Write the operation sequence that builds the tree from K2.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        sets: Sets,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a tree from an operation sequence.
    Replay {
        sequence: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Grow a random EOCD tree.
    Random {
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the operation sequence here.
        #[arg(long)]
        sequence: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Run every acceptance check and print one line per check.
    PaperClaims {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Sets {
    /// Comma-separated ids or labels of D.
    #[arg(long = "d", value_name = "IDS")]
    d: String,
    /// Comma-separated ids or labels of P.
    #[arg(long = "p", value_name = "IDS")]
    p: String,
}

struct Ctx {
    max_vertices: usize,
    labels: bool,
}

impl Ctx {
    fn guard(&self, graph: &Graph) -> Result<()> {
        if graph.n() > self.max_vertices {
            bail!(
                "graph has {} vertices, above --max-vertices {}",
                graph.n(),
                self.max_vertices
            );
        }
        Ok(())
    }

    fn names(&self, graph: &Graph, set: &VertexSet) -> String {
        let items: Vec<String> = set
            .iter()
            .map(|v| match graph.label(v) {
                Some(l) if self.labels => l.to_string(),
                _ => v.to_string(),
            })
            .collect();
        format!("{{{}}}", items.join(","))
    }

    fn print_certificate(&self, graph: &Graph, cert: &EocdCertificate) {
        println!("D = {}", self.names(graph, cert.d()));
        println!("P = {}", self.names(graph, cert.p()));
        println!("D ∩ P = {}", self.names(graph, &cert.dp()));
        println!("D - P = {}", self.names(graph, &cert.d_only()));
        println!("P - D = {}", self.names(graph, &cert.p_only()));
        println!("R = {}", self.names(graph, &cert.r()));
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read(path)?).with_context(|| format!("malformed edge list {}", path.display()))
}

fn read_cnf(path: &Path) -> Result<CnfFormula> {
    CnfFormula::parse_dimacs(&read(path)?).with_context(|| format!("malformed DIMACS file {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_set(graph: &Graph, list: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new(graph.n());
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = match token.parse::<usize>() {
            Ok(v) => v,
            Err(_) => graph
                .vertex_by_label(token)
                .with_context(|| format!("unknown vertex `{token}`"))?,
        };
        if v >= graph.n() {
            bail!("vertex `{token}` is out of range for {} vertices", graph.n());
        }
        set.insert(v);
    }
    Ok(set)
}

fn parse_params(params: &[String]) -> Result<Vec<usize>> {
    params
        .iter()
        .map(|p| {
            p.parse()
                .with_context(|| format!("parameter `{p}` is not a non-negative integer"))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx {
        max_vertices: cli.max_vertices,
        labels: cli.labels,
    };
    match cli.command {
        Command::Generate { kind, params, output } => {
            let graph = match kind.as_str() {
                "sierpinski" => match parse_params(&params)?[..] {
                    [p, n] => sierpinski_with_cap(p, n, ctx.max_vertices)?,
                    _ => bail!("sierpinski needs two parameters p n"),
                },
                "reduction" => match &params[..] {
                    [file] => build_reduction(&read_cnf(Path::new(file))?).graph,
                    _ => bail!("reduction needs one CNF file"),
                },
                other => {
                    let family: Family = other.parse()?;
                    family.build(&parse_params(&params)?)?
                }
            };
            emit(output.as_deref(), &write_edge_list(&graph))?;
            Ok(true)
        }
        Command::Solve {
            file,
            mode,
            gamma: want_gamma,
            gamma_t: want_gamma_t,
            json,
        } => {
            let graph = read_graph(&file)?;
            ctx.guard(&graph)?;
            let cert = find_eocd(&graph, mode);
            let g = want_gamma.then(|| gamma(&graph));
            let gt = if want_gamma_t { Some(gamma_t(&graph)?) } else { None };
            if json {
                let value = serde_json::json!({
                    "mode": mode.to_string(),
                    "certificate": cert.as_ref().map(EocdCertificate::record),
                    "gamma": g,
                    "gamma_t": gt,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                match &cert {
                    Some(cert) => ctx.print_certificate(&graph, cert),
                    None => println!("no certificate in mode {mode}"),
                }
                if let Some(g) = g {
                    println!("gamma = {g}");
                }
                if let Some(gt) = gt {
                    println!("gamma_t = {gt}");
                }
            }
            Ok(cert.is_some())
        }
        Command::Verify { file, sets } => {
            let graph = read_graph(&file)?;
            let d = parse_set(&graph, &sets.d)?;
            let p = parse_set(&graph, &sets.p)?;
            let mut ok = true;
            for (name, set, kind, what) in [
                ("D", &d, Neighborhood::Open, "EOD"),
                ("P", &p, Neighborhood::Closed, "ECD"),
            ] {
                match cover_defect(&graph, set, kind) {
                    None => println!("{name} is an {what} set"),
                    Some(defect) => {
                        ok = false;
                        println!("{name} is not an {what} set: {defect}");
                    }
                }
            }
            Ok(ok)
        }
        Command::RecognizeEmptyPd { file } => {
            let graph = read_graph(&file)?;
            match recognize_empty_pd(&graph) {
                Some(cert) => {
                    ctx.print_certificate(&graph, &cert);
                    Ok(true)
                }
                None => {
                    println!("no certificate with P - D empty");
                    Ok(false)
                }
            }
        }
        Command::Tree(TreeCommand::Decompose { file, sets, output }) => {
            let graph = read_graph(&file)?;
            let d = parse_set(&graph, &sets.d)?;
            let p = parse_set(&graph, &sets.p)?;
            let seq = decompose(&graph, &d, &p)?;
            emit(output.as_deref(), &seq.to_text())?;
            Ok(true)
        }
        Command::Tree(TreeCommand::Replay { sequence, output }) => {
            let seq = TreeOpSequence::parse(&read(&sequence)?)?;
            let state = seq.replay_relabelled()?;
            let text = format!(
                "{}# D = {}\n# P = {}\n",
                write_edge_list(&state.tree),
                ctx.names(&state.tree, &state.d),
                ctx.names(&state.tree, &state.p)
            );
            emit(output.as_deref(), &text)?;
            Ok(true)
        }
        Command::Tree(TreeCommand::Random {
            steps,
            seed,
            output,
            sequence,
        }) => {
            let t = random_eocd_tree(steps, seed);
            let text = format!(
                "{}# D = {}\n# P = {}\n",
                write_edge_list(&t.state.tree),
                ctx.names(&t.state.tree, &t.state.d),
                ctx.names(&t.state.tree, &t.state.p)
            );
            emit(output.as_deref(), &text)?;
            if let Some(path) = sequence {
                emit(Some(&path), &t.sequence.to_text())?;
            }
            Ok(true)
        }
        Command::Reduce {
            cnf,
            output,
            solve,
            extract,
        } => {
            let formula = read_cnf(&cnf)?;
            let reduction = build_reduction(&formula);
            emit(Some(&output), &write_edge_list(&reduction.graph))?;
            if !(solve || extract) {
                return Ok(true);
            }
            ctx.guard(&reduction.graph)?;
            let Some(cert) = find_eocd(&reduction.graph, SearchMode::Any) else {
                println!("no certificate: the formula has no one-in-three assignment");
                return Ok(false);
            };
            let ctx = Ctx { labels: true, ..ctx };
            ctx.print_certificate(&reduction.graph, &cert);
            if extract {
                let assignment = reduction.assignment_from_witness(cert.d(), cert.p())?;
                let values: Vec<String> = assignment
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| format!("x{}={}", i + 1, if b { 1 } else { 0 }))
                    .collect();
                println!("assignment {}", values.join(" "));
            }
            Ok(true)
        }
        Command::Report(ReportCommand::PaperClaims { json }) => {
            let outcomes = run_all();
            if json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            } else {
                for outcome in &outcomes {
                    println!("{outcome}");
                }
            }
            Ok(outcomes.iter().all(|o| o.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
