mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use snark_core::{
    block, canonical_form, circumference, cycle_rank, cyclic_connectivity, diameter_radius,
    dipole_z, enumerate_four_joins, four_join, girth, invariant_report, is_colourable, oddness,
    pair_intersection, perfect_matchings, pm_index, resistance, triple_intersection,
    verify_all, weak_oddness, Cell, CubicGraph, EdgeSet, FourJoinSpec, JoinMode,
    VerificationReport,
};
use snark_core::construct::Block;

#[derive(Parser)]
#[command(name = "snarktool", version, about = "Cubic graphs, snarks, and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunConfig,
}

#[derive(Args)]
struct RunConfig {
    /// Node budget for exhaustive searches; unbounded when absent.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomised search order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of graphs given as files or built-in names.
    Invariants {
        /// Adjacency-list/graph6 files, or petersen, k4, k33, blanusa1, blanusa2.
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Restrict to these keys (comma separated); everything else is skipped.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Recompute the embedded 31-graph table and diff it against the expected values.
    VerifyDataset,
    /// Build one 4-join from a spec file, or enumerate them all.
    Fourjoin(FourjoinArgs),
    /// Convert between adjacency-list and graph6 files (by extension).
    Convert { input: PathBuf, output: PathBuf },
    /// Print a building block (i, h1, h2, t, n) or dipole (z1..z4) as multipole text.
    Blocks { name: String },
    /// Canonical graph6 string and automorphism count.
    Canon {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Minimum number of odd circuits over all 2-factors.
    Oddness {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Minimum number of removed edges that leaves a colourable graph.
    Resistance {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
}

#[derive(Args)]
struct FourjoinArgs {
    /// First graph (file or name).
    #[arg(long)]
    g1: String,
    /// Second graph (file or name).
    #[arg(long)]
    g2: String,
    /// JSON file holding the side picks and semiedge permutation.
    #[arg(long, conflicts_with = "enumerate")]
    spec: Option<PathBuf>,
    /// Try every side pick and permutation.
    #[arg(long)]
    enumerate: bool,
    /// Side picks tried on the first graph when enumerating.
    #[arg(long, value_delimiter = ',', value_enum, default_values_t = [ModeArg::Vertices, ModeArg::Edges])]
    modes1: Vec<ModeArg>,
    /// Side picks tried on the second graph when enumerating.
    #[arg(long, value_delimiter = ',', value_enum, default_values_t = [ModeArg::Vertices, ModeArg::Edges])]
    modes2: Vec<ModeArg>,
    /// Keep only results passing this filter.
    #[arg(long, value_enum, default_value_t = FilterArg::None)]
    filter: FilterArg,
    /// Drop isomorphic duplicates.
    #[arg(long)]
    dedup: bool,
    /// Output file for a single join (format by extension; default: graph6 on stdout).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Vertices,
    Edges,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    /// Keep everything.
    None,
    /// Keep only uncolourable results.
    Snark,
}

/// Exit codes: 0 success, 1 verification diff, 2 usage error, 3 budget exhausted.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Outcome {
    Clean,
    Budget,
    Diff,
}

impl Outcome {
    fn code(self) -> ExitCode {
        match self {
            Outcome::Clean => ExitCode::SUCCESS,
            Outcome::Diff => ExitCode::from(1),
            Outcome::Budget => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let run = &cli.run;
    match cli.command {
        Command::Invariants { graphs, only } => cmd_invariants(&graphs, &only, run),
        Command::VerifyDataset => cmd_verify_dataset(run),
        Command::Fourjoin(args) => cmd_fourjoin(&args, run),
        Command::Convert { input, output } => cmd_convert(&input, &output),
        Command::Blocks { name } => cmd_blocks(&name),
        Command::Canon { graphs } => cmd_canon(&graphs, run),
        Command::Oddness { graphs } => cmd_oddness(&graphs, run),
        Command::Resistance { graphs } => cmd_resistance(&graphs, run),
    }
}

const KEYS: [&str; 18] = [
    "n", "m", "graph6", "girth", "beta", "zeta", "circumference", "xi", "diameter", "radius",
    "aut", "canonical", "omega", "weak_oddness", "resistance", "pmi", "gamma2", "mu3",
];

/// Computes requested keys one at a time so that unrequested expensive
/// searches never run; shared intermediates are cached.
struct Evaluator<'g> {
    g: &'g CubicGraph,
    budget: Option<u64>,
    seed: u64,
    hit_budget: bool,
    pms: Option<Vec<EdgeSet>>,
    canon: Option<snark_core::CanonicalForm>,
    circ: Option<Option<u32>>,
    dr: Option<(u32, u32)>,
}

impl<'g> Evaluator<'g> {
    fn new(g: &'g CubicGraph, budget: Option<u64>, seed: u64) -> Self {
        Evaluator { g, budget, seed, hit_budget: false, pms: None, canon: None, circ: None, dr: None }
    }

    fn settle<T: Into<Value>>(&mut self, v: Option<T>) -> Value {
        match v {
            Some(v) => v.into(),
            None => {
                self.hit_budget = true;
                Value::Null
            }
        }
    }

    fn matchings(&mut self) -> Result<&[EdgeSet]> {
        if self.pms.is_none() {
            self.pms = Some(perfect_matchings(self.g)?);
        }
        Ok(self.pms.as_deref().unwrap())
    }

    fn canonical(&mut self) -> &snark_core::CanonicalForm {
        if self.canon.is_none() {
            self.canon = Some(canonical_form(self.g));
        }
        self.canon.as_ref().unwrap()
    }

    fn circumference(&mut self) -> Option<u32> {
        if self.circ.is_none() {
            self.circ = Some(circumference(self.g, self.budget, self.seed).map(|(c, _)| c));
        }
        self.circ.unwrap()
    }

    fn value(&mut self, key: &str) -> Result<Value> {
        Ok(match key {
            "n" => json!(self.g.n()),
            "m" => json!(self.g.m()),
            "graph6" => json!(self.g.to_graph6()),
            "girth" => json!(girth(self.g)),
            "beta" => json!(cycle_rank(self.g)),
            "zeta" => {
                let z = cyclic_connectivity(self.g, self.budget).map(|c| c.value);
                self.settle(z)
            }
            "circumference" => {
                let c = self.circumference();
                self.settle(c)
            }
            "xi" => {
                let n = self.g.n() as u32;
                let x = self.circumference().map(|c| n - c);
                self.settle(x)
            }
            "diameter" | "radius" => {
                if self.dr.is_none() {
                    self.dr = Some(diameter_radius(self.g)?);
                }
                let (d, r) = self.dr.unwrap();
                json!(if key == "diameter" { d } else { r })
            }
            "aut" => json!(self.canonical().aut_order),
            "canonical" => json!(self.canonical().graph6),
            "omega" => {
                let o = oddness(self.g, self.budget)?.map(|(o, _)| o);
                self.settle(o)
            }
            "weak_oddness" => {
                let w = weak_oddness(self.g, self.budget)?.map(|w| w.value);
                self.settle(w)
            }
            "resistance" => {
                let r = resistance(self.g, self.budget)?.map(|(r, _)| r);
                self.settle(r)
            }
            "pmi" => {
                let budget = self.budget;
                let pms = self.matchings()?.to_vec();
                let p = pm_index(self.g, &pms, budget)?.map(|(p, _)| p);
                self.settle(p)
            }
            "gamma2" => {
                let budget = self.budget;
                let pms = self.matchings()?;
                let v = pair_intersection(pms, 0, budget)?.map(|(v, _)| v);
                self.settle(v)
            }
            "mu3" => {
                let budget = self.budget;
                let pms = self.matchings()?;
                let v = triple_intersection(pms, 0, 0, budget)?.map(|(v, _)| v);
                self.settle(v)
            }
            other => bail!("unknown invariant {other:?}; expected one of {}", KEYS.join(", ")),
        })
    }
}

fn cmd_invariants(graphs: &[String], only: &[String], run: &RunConfig) -> Result<Outcome> {
    let keys: Vec<&str> = if only.is_empty() {
        KEYS.to_vec()
    } else {
        only.iter().map(String::as_str).collect()
    };
    for key in &keys {
        if !KEYS.contains(key) {
            bail!("unknown invariant {key:?}; expected one of {}", KEYS.join(", "));
        }
    }
    let mut hit_budget = false;
    let mut rows: Vec<(String, Vec<(String, Value)>, Option<Value>)> = Vec::new();
    for spec in graphs {
        let (label, g) = input::load(spec)?;
        let full = if only.is_empty() {
            // one combined report with witnesses and flags
            let report = invariant_report(&g, run.budget, run.seed)?;
            hit_budget |= report.measures.budget_flags.any();
            Some(serde_json::to_value(&report)?)
        } else {
            None
        };
        let mut ev = Evaluator::new(&g, run.budget, run.seed);
        let mut values = Vec::new();
        for key in &keys {
            values.push((key.to_string(), ev.value(key)?));
        }
        hit_budget |= ev.hit_budget;
        rows.push((label, values, full));
    }
    match run.format {
        Format::Json => {
            let out: Vec<Value> = rows
                .into_iter()
                .map(|(label, values, full)| match full {
                    Some(Value::Object(mut report)) => {
                        report.insert("input".into(), json!(label));
                        Value::Object(report)
                    }
                    _ => {
                        let mut o = Map::new();
                        o.insert("input".into(), json!(label));
                        o.extend(values);
                        Value::Object(o)
                    }
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Text => {
            for (i, (label, values, _)) in rows.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("# {label}");
                for (key, v) in values {
                    println!("{key}: {}", plain(v));
                }
            }
        }
        Format::Markdown => {
            println!("| graph | {} |", keys.join(" | "));
            println!("|{}|", vec!["---"; keys.len() + 1].join("|"));
            for (label, values, _) in &rows {
                let cells: Vec<String> = values.iter().map(|(_, v)| plain(v)).collect();
                println!("| {label} | {} |", cells.join(" | "));
            }
        }
    }
    Ok(if hit_budget { Outcome::Budget } else { Outcome::Clean })
}

fn plain(v: &Value) -> String {
    match v {
        Value::Null => "?".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cmd_verify_dataset(run: &RunConfig) -> Result<Outcome> {
    let t0 = Instant::now();
    eprintln!(
        "verifying 31 graphs (budget: {}, jobs: {})",
        run.budget.map_or("unbounded".into(), |b| b.to_string()),
        if run.jobs == 0 { "auto".into() } else { run.jobs.to_string() },
    );
    let report = verify_all(run.budget, run.jobs);
    eprintln!("finished in {:.1?}", t0.elapsed());

    match run.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => render_verify_text(&report),
        Format::Markdown => render_verify_markdown(&report),
    }
    let cells = report.rows.iter().flat_map(|r| r.cells.iter());
    let outcome = if report.rows.iter().any(|r| !r.all_match)
        || !report.pairwise_nonisomorphic
    {
        if cells.clone().any(|c| c.outcome == Cell::Mismatch) || !report.pairwise_nonisomorphic {
            Outcome::Diff
        } else {
            Outcome::Budget
        }
    } else {
        Outcome::Clean
    };
    Ok(outcome)
}

fn render_verify_text(report: &VerificationReport) {
    for row in &report.rows {
        let mut issues = Vec::new();
        for c in &row.cells {
            match c.outcome {
                Cell::Match => {}
                Cell::Mismatch => issues.push(format!(
                    "{} expected {} computed {}",
                    c.invariant,
                    c.expected,
                    c.computed.map_or("?".into(), |v| v.to_string())
                )),
                Cell::Undecided => issues.push(format!("{} undecided", c.invariant)),
            }
        }
        if issues.is_empty() {
            println!("graph {:2} ({}): ok", row.index, row.class);
        } else {
            println!("graph {:2} ({}): {}", row.index, row.class, issues.join("; "));
        }
    }
    println!("pairwise nonisomorphic: {}", report.pairwise_nonisomorphic);
    let good = report.rows.iter().filter(|r| r.all_match).count();
    println!("{good}/{} rows match", report.rows.len());
}

const TABLE_COLUMNS: [&str; 13] = [
    "aut", "genus", "diameter", "radius", "circumference", "girth", "zeta", "omega",
    "weak_oddness", "resistance", "pmi", "gamma2", "mu3",
];

fn render_verify_markdown(report: &VerificationReport) {
    let headers: Vec<&str> = TABLE_COLUMNS
        .iter()
        .map(|&c| if c == "genus" { "genus (ref only)" } else { c })
        .collect();
    println!("| # | class | {} | result |", headers.join(" | "));
    println!("|{}|", vec!["---"; TABLE_COLUMNS.len() + 3].join("|"));
    for row in &report.rows {
        let mut cells = Vec::new();
        for &col in &TABLE_COLUMNS {
            if col == "genus" {
                cells.push(row.genus.to_string());
                continue;
            }
            let c = row.cells.iter().find(|c| c.invariant == col).expect("known column");
            cells.push(match (c.outcome, c.computed) {
                (Cell::Match, Some(v)) => v.to_string(),
                (Cell::Mismatch, Some(v)) => format!("**{v}≠{}**", c.expected),
                _ => "?".into(),
            });
        }
        let result = if row.all_match { "ok" } else { "diff" };
        println!("| {} | {} | {} | {result} |", row.index, row.class, cells.join(" | "));
    }
    let good = report.rows.iter().filter(|r| r.all_match).count();
    println!();
    println!(
        "{good}/{} rows match; pairwise nonisomorphic: {}",
        report.rows.len(),
        report.pairwise_nonisomorphic
    );
}

fn cmd_fourjoin(args: &FourjoinArgs, run: &RunConfig) -> Result<Outcome> {
    let (_, g1) = input::load(&args.g1)?;
    let (_, g2) = input::load(&args.g2)?;
    if let Some(path) = &args.spec {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let spec: FourJoinSpec = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        let joined = four_join(&g1, &g2, &spec)?;
        return match &args.output {
            Some(path) => {
                input::write_graph(&joined, path)?;
                Ok(Outcome::Clean)
            }
            None => {
                match run.format {
                    Format::Json => {
                        let mut o = as_object(serde_json::to_value(&spec)?);
                        o.insert("n".into(), json!(joined.n()));
                        o.insert("graph6".into(), json!(joined.to_graph6()));
                        println!("{}", serde_json::to_string_pretty(&Value::Object(o))?);
                    }
                    _ => println!("{}", joined.to_graph6()),
                }
                Ok(Outcome::Clean)
            }
        };
    }
    if !args.enumerate {
        bail!("fourjoin needs either --spec FILE or --enumerate");
    }
    let modes = |list: &[ModeArg]| -> Vec<JoinMode> {
        list.iter()
            .map(|m| match m {
                ModeArg::Vertices => JoinMode::Vertices,
                ModeArg::Edges => JoinMode::Edges,
            })
            .collect()
    };
    let (modes1, modes2) = (modes(&args.modes1), modes(&args.modes2));
    let keep = |g: &CubicGraph| match args.filter {
        FilterArg::None => true,
        FilterArg::Snark => !is_colourable(g),
    };
    let enumerate = || enumerate_four_joins(&g1, &g2, &modes1, &modes2, keep, args.dedup);
    let found = if run.jobs == 0 {
        enumerate()
    } else {
        rayon::ThreadPoolBuilder::new().num_threads(run.jobs).build()?.install(enumerate)
    };
    eprintln!("kept {} joins", found.len());
    match run.format {
        Format::Json => {
            let rows: Vec<Value> = found
                .iter()
                .map(|(spec, g)| {
                    let mut o = as_object(serde_json::to_value(spec).expect("serialisable spec"));
                    o.insert("n".into(), json!(g.n()));
                    o.insert("graph6".into(), json!(g.to_graph6()));
                    Value::Object(o)
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        _ => {
            for (_, g) in &found {
                println!("{}", g.to_graph6());
            }
        }
    }
    Ok(Outcome::Clean)
}

fn as_object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(o) => o,
        other => {
            let mut o = Map::new();
            o.insert("value".into(), other);
            o
        }
    }
}

fn cmd_convert(input: &PathBuf, output: &PathBuf) -> Result<Outcome> {
    let (_, g) = input::load(&input.to_string_lossy())?;
    input::write_graph(&g, output)?;
    eprintln!("wrote {}", output.display());
    Ok(Outcome::Clean)
}

fn cmd_blocks(name: &str) -> Result<Outcome> {
    let m = match name.to_ascii_lowercase().as_str() {
        "i" => block(Block::I),
        "h1" => block(Block::H1),
        "h2" => block(Block::H2),
        "t" => block(Block::T),
        "n" => block(Block::N),
        "z1" => dipole_z(1)?,
        "z2" => dipole_z(2)?,
        "z3" => dipole_z(3)?,
        "z4" => dipole_z(4)?,
        other => bail!("unknown block {other:?}; expected i, h1, h2, t, n, or z1..z4"),
    };
    print!("{}", m.to_text());
    Ok(Outcome::Clean)
}

fn cmd_canon(graphs: &[String], run: &RunConfig) -> Result<Outcome> {
    let mut rows = Vec::new();
    for spec in graphs {
        let (label, g) = input::load(spec)?;
        let c = canonical_form(&g);
        rows.push((label, c));
    }
    match run.format {
        Format::Json => {
            let out: Vec<Value> = rows
                .iter()
                .map(|(label, c)| json!({"input": label, "canonical": c.graph6, "aut": c.aut_order}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Markdown => {
            println!("| graph | canonical | aut |");
            println!("|---|---|---|");
            for (label, c) in &rows {
                println!("| {label} | `{}` | {} |", c.graph6, c.aut_order);
            }
        }
        Format::Text => {
            for (label, c) in &rows {
                println!("{label}: {} aut {}", c.graph6, c.aut_order);
            }
        }
    }
    Ok(Outcome::Clean)
}

fn cmd_oddness(graphs: &[String], run: &RunConfig) -> Result<Outcome> {
    let mut outcome = Outcome::Clean;
    let mut rows = Vec::new();
    for spec in graphs {
        let (label, g) = input::load(spec)?;
        match oddness(&g, run.budget)? {
            Some((value, pm)) => {
                let factor: Vec<usize> = EdgeSet::full(g.m()).difference(&pm).iter().collect();
                rows.push((label, Some(value), factor));
            }
            None => {
                eprintln!("{label}: budget exhausted");
                outcome = outcome.max(Outcome::Budget);
                rows.push((label, None, Vec::new()));
            }
        }
    }
    render_measure("oddness", "two_factor", &rows, run);
    Ok(outcome)
}

fn cmd_resistance(graphs: &[String], run: &RunConfig) -> Result<Outcome> {
    let mut outcome = Outcome::Clean;
    let mut rows = Vec::new();
    for spec in graphs {
        let (label, g) = input::load(spec)?;
        match resistance(&g, run.budget)? {
            Some((value, removed)) => rows.push((label, Some(value), removed)),
            None => {
                eprintln!("{label}: budget exhausted");
                outcome = outcome.max(Outcome::Budget);
                rows.push((label, None, Vec::new()));
            }
        }
    }
    render_measure("resistance", "removed_edges", &rows, run);
    Ok(outcome)
}

fn render_measure(measure: &str, witness: &str, rows: &[(String, Option<u32>, Vec<usize>)], run: &RunConfig) {
    match run.format {
        Format::Json => {
            let out: Vec<Value> = rows
                .iter()
                .map(|(label, v, edges)| {
                    json!({"input": label, measure: v, witness: edges})
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out).expect("serialisable rows"));
        }
        Format::Markdown => {
            println!("| graph | {measure} |");
            println!("|---|---|");
            for (label, v, _) in rows {
                println!("| {label} | {} |", v.map_or("?".into(), |v| v.to_string()));
            }
        }
        Format::Text => {
            for (label, v, _) in rows {
                println!("{label}: {measure} {}", v.map_or("undecided".into(), |v| v.to_string()));
            }
        }
    }
}
