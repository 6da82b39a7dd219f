//! `snarkforge`: build, certify and count snarks, verify the counting
//! identities for Kászonyi numbers, and drive the search ledger.
//!
//! Exit codes: 0 on success or a passing verdict, 1 when a certificate or
//! identity check fails, 2 on usage or domain errors.

use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use snarkforge::analyze::{
    certify_snark, condition_k, orthogonal_pairs, verify_thm_3_3, verify_thm_3_7, verify_thm_4_5,
    verify_thm_4_8, verify_thm_5_3, TheoremReport,
};
use snarkforge::color::{are_orthogonal, psi_with, ColoringSearch, PsiMode};
use snarkforge::construct::{parse_recipe, Recipe};
use snarkforge::graph::{contract_removed_edge, edge_orbits, encode_graph6, list_pentagons, to_dot};
use snarkforge::ledger::{search, Budget, Family, Ledger, PsiRecord};
use snarkforge::{EdgeId, Graph, Result};

#[derive(Parser)]
#[command(name = "snarkforge", version, about = "Snark construction and Kászonyi number toolkit")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Construction recipe, e.g. "(superpose52 (petersen) e=0 (petersen) u=0 v=5)".
    #[arg(long)]
    recipe: Option<String>,
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
}

impl Input {
    fn recipe(&self) -> Result<Recipe> {
        match (&self.recipe, &self.graph6) {
            (Some(text), _) => parse_recipe(text),
            (None, Some(g6)) => Ok(Recipe::Graph6(g6.clone())),
            (None, None) => unreachable!("clap requires one input"),
        }
    }

    fn graph(&self) -> Result<Graph> {
        self.recipe()?.build()
    }
}

#[derive(Args, Clone)]
struct LedgerPath {
    /// Ledger file (one JSON record per line).
    #[arg(long, env = "SNARKFORGE_LEDGER")]
    ledger: PathBuf,
}

#[derive(Args, Clone)]
struct SearchBudget {
    /// Graphs with more edges are recorded as truncated.
    #[arg(long, default_value_t = Budget::default().max_edges)]
    budget_edges: usize,
    /// Backtracking nodes per psi count.
    #[arg(long, default_value_t = Budget::default().max_nodes)]
    budget_nodes: u64,
    /// Recipes evaluated in parallel.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SearchBudget {
    fn budget(&self) -> Budget {
        Budget {
            max_edges: self.budget_edges,
            max_nodes: self.budget_nodes,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Refuse graphs that are not snarks.
    Strict,
    /// Skip the snark check.
    Asserted,
    /// Compute the formula on any cubic graph and flag non-snarks.
    Extension,
}

impl From<Mode> for PsiMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => PsiMode::Strict,
            Mode::Asserted => PsiMode::Asserted,
            Mode::Extension => PsiMode::Extension,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "3.3")]
    T33,
    #[value(name = "3.7")]
    T37,
    #[value(name = "4.5")]
    T45,
    #[value(name = "4.8")]
    T48,
    #[value(name = "5.3")]
    T53,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// Flower snarks J_5, J_7, ... up to --max-n.
    Flowers,
    /// Repeated superposition into a fresh Petersen graph, --depth steps.
    Chain,
    /// Pentagon joins among the Petersen graph and J_5.
    Joins,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print its graph6 string, order and size.
    Build {
        #[command(flatten)]
        input: Input,
        /// Print Graphviz DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Check girth >= 5, cyclic edge connectivity and uncolorability.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Cyclic edge connectivity level to check.
        #[arg(long, default_value_t = 4)]
        level: usize,
    },
    /// Count edge-3-colorings (EC) and 3-edge-decompositions (ED).
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
    /// Kászonyi number psi(G, e).
    Psi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        edge: usize,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
    /// Orthogonal edge pairs. With --edge, works on G_e and reports
    /// Condition K for the two new edges.
    Orthogonal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        edge: Option<usize>,
        /// Test one pair instead of listing all of them.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<usize>>,
    },
    /// Verify one counting identity. Without --edge or --pentagon, every
    /// edge orbit or pentagon is checked.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        edge: Option<usize>,
        #[arg(long)]
        pentagon: Option<usize>,
    },
    /// List pentagons by index.
    Pentagons {
        #[command(flatten)]
        input: Input,
    },
    /// List edge orbits under the automorphism group.
    Orbits {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a recipe family and append the results to the ledger.
    Search {
        #[command(flatten)]
        ledger: LedgerPath,
        #[arg(long, value_enum)]
        family: Option<FamilyName>,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Extra recipes, evaluated after the family.
        #[arg(long)]
        recipe: Vec<String>,
        #[command(flatten)]
        budget: SearchBudget,
    },
    /// Evaluate graph6 lines from a file ("-" for stdin) into the ledger.
    Import {
        #[command(flatten)]
        ledger: LedgerPath,
        file: PathBuf,
        #[command(flatten)]
        budget: SearchBudget,
    },
    /// Write the CSV summary of achieved values.
    Export {
        #[command(flatten)]
        ledger: LedgerPath,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Witnesses for psi = N, or the achieved values when N is omitted.
    Query {
        #[command(flatten)]
        ledger: LedgerPath,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Rebuild stored records from their recipes and compare.
    Reverify {
        #[command(flatten)]
        ledger: LedgerPath,
        #[arg(long)]
        id: Option<u64>,
    },
}

fn usage_error(message: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, message).exit()
}

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        if self.json {
            println!("{}", value());
        } else {
            println!("{}", text());
        }
    }
}

fn to_json(v: &impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { json: cli.json };
    match run(cli.command, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand; `Ok(false)` means a check was evaluated and failed.
fn run(command: Command, out: &Out) -> Result<bool> {
    match command {
        Command::Build { input, dot } => {
            let g = input.graph()?;
            let g6 = encode_graph6(&g);
            if dot && !out.json {
                print!("{}", to_dot(&g, None));
            } else {
                out.emit(
                    || format!("graph6 {g6}\nvertices {}\nedges {}", g.order(), g.size()),
                    || json!({"graph6": g6, "vertices": g.order(), "edges": g.size()}),
                );
            }
            Ok(true)
        }
        Command::Certify { input, level } => {
            let cert = certify_snark(&input.graph()?, level)?;
            let mut value = to_json(&cert);
            value["snark"] = json!(cert.passes());
            out.emit(|| cert.summary(), || value);
            Ok(cert.passes())
        }
        Command::Count {
            input,
            budget_nodes,
        } => {
            let g = input.graph()?;
            let ec = ColoringSearch::new(&g)?.budget(budget_nodes).count()?;
            let ed = match g.first_trivalent() {
                Some(v) => ColoringSearch::new(&g)?
                    .fix_vertex(v)?
                    .budget(budget_nodes)
                    .count()?,
                None => return Err(snarkforge::Error::NoTrivalentVertex),
            };
            out.emit(|| format!("ec = {ec}\ned = {ed}"), || json!({"ec": ec, "ed": ed}));
            Ok(true)
        }
        Command::Psi {
            input,
            edge,
            mode,
            budget_nodes,
        } => {
            let g = input.graph()?;
            let p = psi_with(&g, EdgeId(edge), mode.into(), budget_nodes)?;
            out.emit(
                || {
                    let mut s = format!("psi = {}", p.value);
                    if p.formula_extension {
                        s.push_str("\nnote: graph is not a snark; value is the formula extension");
                    }
                    s
                },
                || to_json(&p),
            );
            Ok(true)
        }
        Command::Orthogonal { input, edge, pair } => {
            let g = input.graph()?;
            orthogonal(&g, edge, pair, out)
        }
        Command::Verify {
            input,
            theorem,
            edge,
            pentagon,
        } => {
            let reports = verify(&input, theorem, edge, pentagon)?;
            let pass = reports.iter().all(|r| r.pass);
            out.emit(
                || {
                    reports
                        .iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join("\n\n")
                },
                || to_json(&reports),
            );
            Ok(pass)
        }
        Command::Pentagons { input } => {
            let g = input.graph()?;
            let pentagons = list_pentagons(&g);
            out.emit(
                || {
                    let mut lines = vec![format!("pentagons: {}", pentagons.len())];
                    for (i, p) in pentagons.iter().enumerate() {
                        lines.push(format!(
                            "pentagon {i}: vertices {} edges {}",
                            join(p.vertices()),
                            join(p.edges(&g).iter().map(|e| e.0))
                        ));
                    }
                    lines.join("\n")
                },
                || {
                    json!(pentagons
                        .iter()
                        .map(|p| json!({
                            "vertices": p.vertices(),
                            "edges": p.edges(&g).iter().map(|e| e.0).collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>())
                },
            );
            Ok(true)
        }
        Command::Orbits { input } => {
            let g = input.graph()?;
            let orbits: Vec<Vec<usize>> = edge_orbits(&g)
                .into_iter()
                .map(|o| o.into_iter().map(|e| e.0).collect())
                .collect();
            out.emit(
                || {
                    let mut lines = vec![format!("orbits: {}", orbits.len())];
                    for (i, o) in orbits.iter().enumerate() {
                        lines.push(format!("orbit {i} (size {}): {}", o.len(), join(o)));
                    }
                    lines.join("\n")
                },
                || json!(orbits),
            );
            Ok(true)
        }
        Command::Search {
            ledger,
            family,
            max_n,
            depth,
            recipe,
            budget,
        } => {
            let mut recipes = match family {
                Some(FamilyName::Flowers) => Family::Flowers { max_n }.recipes()?,
                Some(FamilyName::Chain) => Family::SuperposeChain { depth }.recipes()?,
                Some(FamilyName::Joins) => Family::PentagonJoins.recipes()?,
                None => Vec::new(),
            };
            for text in &recipe {
                recipes.push(parse_recipe(text)?);
            }
            run_search(&ledger, &recipes, &budget, out)
        }
        Command::Import {
            ledger,
            file,
            budget,
        } => {
            let reader: Box<dyn BufRead> = if file.as_os_str() == "-" {
                Box::new(std::io::stdin().lock())
            } else {
                Box::new(BufReader::new(std::fs::File::open(&file)?))
            };
            let mut recipes = Vec::new();
            for line in reader.lines() {
                let line = line?;
                let line = line.trim();
                if !line.is_empty() {
                    recipes.push(Recipe::Graph6(line.to_string()));
                }
            }
            run_search(&ledger, &recipes, &budget, out)
        }
        Command::Export { ledger, out: path } => {
            let ledger = Ledger::open(&ledger.ledger)?;
            match path {
                Some(p) => ledger.export_csv(std::fs::File::create(p)?)?,
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    ledger.export_csv(&mut lock)?;
                    lock.flush()?;
                }
            }
            Ok(true)
        }
        Command::Query { ledger, n } => {
            let ledger = Ledger::open(&ledger.ledger)?;
            match n {
                None => {
                    let achieved = ledger.achieved();
                    out.emit(|| format!("achieved: {}", join(&achieved)), || json!(achieved));
                }
                Some(n) => {
                    let hits = ledger.query(n);
                    out.emit(
                        || {
                            let mut lines = vec![format!("witnesses for psi = {n}: {}", hits.len())];
                            lines.extend(hits.iter().map(|r| describe_record(r)));
                            lines.join("\n")
                        },
                        || to_json(&hits),
                    );
                }
            }
            Ok(true)
        }
        Command::Reverify { ledger, id } => {
            let ledger = Ledger::open(&ledger.ledger)?;
            let ids: Vec<u64> = match id {
                Some(id) => vec![id],
                None => ledger.records().iter().map(|r| r.id).collect(),
            };
            let mut results = Vec::new();
            for id in ids {
                let r = ledger.reverify(id)?;
                results.push((id, r));
            }
            let pass = results.iter().all(|(_, r)| r.ok());
            out.emit(
                || {
                    results
                        .iter()
                        .map(|(id, r)| {
                            format!(
                                "record {id}: graph6 {} psi {}",
                                same(r.graph6_identical),
                                same(r.psi_identical)
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
                || {
                    json!(results
                        .iter()
                        .map(|(id, r)| json!({
                            "id": id,
                            "graph6_identical": r.graph6_identical,
                            "psi_identical": r.psi_identical,
                        }))
                        .collect::<Vec<_>>())
                },
            );
            Ok(pass)
        }
    }
}

fn same(ok: bool) -> &'static str {
    if ok {
        "identical"
    } else {
        "DIFFERS"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

fn describe_record(r: &PsiRecord) -> String {
    let kind = to_json(&r.kind);
    let status = to_json(&r.status);
    format!(
        "record {} {} {} edge={} psi={} {}",
        r.id,
        kind.as_str().unwrap_or_default(),
        status.as_str().unwrap_or_default(),
        opt(r.edge),
        opt(r.psi),
        r.recipe
    )
}

fn run_search(path: &LedgerPath, recipes: &[Recipe], budget: &SearchBudget, out: &Out) -> Result<bool> {
    let mut ledger = Ledger::open(&path.ledger)?;
    let ids = search(&mut ledger, recipes, budget.budget(), budget.workers)?;
    let records: Vec<&PsiRecord> = ids.iter().filter_map(|&id| ledger.get(id)).collect();
    let achieved = ledger.achieved();
    out.emit(
        || {
            let mut lines: Vec<String> = records.iter().map(|r| describe_record(r)).collect();
            lines.push(format!("achieved: {}", join(&achieved)));
            lines.join("\n")
        },
        || json!({"records": to_json(&records), "achieved": achieved}),
    );
    Ok(true)
}

fn orthogonal(g: &Graph, edge: Option<usize>, pair: Option<Vec<usize>>, out: &Out) -> Result<bool> {
    let (h, new_edges) = match edge {
        Some(e) => {
            let c = contract_removed_edge(g, EdgeId(e))?;
            let d = (c.d1, c.d2);
            (c.graph, Some(d))
        }
        None => (g.clone(), None),
    };
    if let Some(p) = pair {
        let (a, b) = (EdgeId(p[0]), EdgeId(p[1]));
        let orth = are_orthogonal(&h, a, b)?;
        out.emit(
            || format!("e{} e{}: {}", a.0, b.0, if orth { "orthogonal" } else { "not orthogonal" }),
            || json!({"pair": [a.0, b.0], "orthogonal": orth}),
        );
        return Ok(true);
    }
    let pairs: Vec<[usize; 2]> = orthogonal_pairs(&h)?
        .into_iter()
        .map(|(a, b)| [a.0, b.0])
        .collect();
    let k = match (edge, new_edges) {
        (Some(e), Some(_)) => Some(condition_k(g, EdgeId(e))?),
        _ => None,
    };
    out.emit(
        || {
            let mut lines = Vec::new();
            if let (Some((d1, d2)), Some(k)) = (new_edges, k) {
                lines.push(format!("d1 = e{}, d2 = e{}", d1.0, d2.0));
                lines.push(format!("condition K: {}", if k { "holds" } else { "fails" }));
            }
            lines.push(format!("orthogonal pairs: {}", pairs.len()));
            lines.extend(pairs.iter().map(|[a, b]| format!("e{a} e{b}")));
            lines.join("\n")
        },
        || {
            let mut v = json!({"pairs": pairs});
            if let (Some((d1, d2)), Some(k)) = (new_edges, k) {
                v["d1"] = json!(d1.0);
                v["d2"] = json!(d2.0);
                v["condition_k"] = json!(k);
            }
            v
        },
    );
    Ok(true)
}

fn verify(
    input: &Input,
    theorem: Theorem,
    edge: Option<usize>,
    pentagon: Option<usize>,
) -> Result<Vec<TheoremReport>> {
    let recipe = input.recipe()?;
    let per_edge = |f: fn(&Graph, EdgeId) -> Result<TheoremReport>| -> Result<Vec<TheoremReport>> {
        let g = recipe.build()?;
        let edges = match edge {
            Some(e) => vec![EdgeId(e)],
            None => edge_orbits(&g).into_iter().map(|o| o[0]).collect(),
        };
        edges.into_iter().map(|e| f(&g, e)).collect()
    };
    match theorem {
        Theorem::T33 => per_edge(verify_thm_3_3),
        Theorem::T37 => per_edge(verify_thm_3_7),
        Theorem::T45 => {
            let g = recipe.build()?;
            let pentagons = list_pentagons(&g);
            let chosen: Vec<_> = match pentagon {
                Some(i) => match pentagons.get(i) {
                    Some(p) => vec![p.clone()],
                    None => usage_error(format!("pentagon {i} out of range ({} pentagons)", pentagons.len())),
                },
                None => pentagons,
            };
            chosen.iter().map(|p| verify_thm_4_5(&g, p)).collect()
        }
        Theorem::T48 => {
            let Recipe::Join { rotation, .. } = &recipe else {
                usage_error("theorem 4.8 needs a (join ...) recipe");
            };
            let parts = recipe.build_parts()?;
            let (Some(lp), Some(rp)) = (&parts.left_pentagon, &parts.right_pentagon) else {
                unreachable!("join parts carry both pentagons")
            };
            Ok(vec![verify_thm_4_8(&parts.left, lp, &parts.right, rp, *rotation)?])
        }
        Theorem::T53 => {
            let Recipe::Superpose { edge, u, v, .. } = &recipe else {
                usage_error("theorem 5.3 needs a (superpose52 ...) recipe");
            };
            let parts = recipe.build_parts()?;
            Ok(vec![verify_thm_5_3(&parts.left, EdgeId(*edge), &parts.right, *u, *v)?])
        }
    }
}
