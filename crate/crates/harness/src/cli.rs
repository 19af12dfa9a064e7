use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indpoly_core::analysis::{detect_f_symmetry, unimodality};
use indpoly_core::engine::{ExactEngine, PolyEngine};
use indpoly_core::graph::{
    canonical_form, dsl, edgelist, enumerate_graphs, is_perfect, MAX_ENUMERATION_ORDER,
    MAX_PERFECT_ORDER,
};
use indpoly_core::{Graph, IntPolynomial};
use serde::{Deserialize, Serialize};

use crate::cache::PolyCache;
use crate::report::{SearchReport, VerificationReport};
use crate::{search, suites, HarnessError, Result};

#[derive(Debug, Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials of graphs and coronas")]
pub struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Persistent polynomial cache file.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the independence polynomial and independence number.
    Compute(Input),
    /// Symmetry, f-symmetry constant, unimodality and modes.
    Analyze(Input),
    /// Replay a result over enumerated or random instances.
    Verify(VerifyArgs),
    /// Look for graphs H whose coronas are always palindromic.
    Search(SearchArgs),
    /// List the isomorphism classes on N vertices.
    Enumerate {
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph expression, e.g. "corona(P(3), union(K(2), K(1)))".
    pub expr: Option<String>,
    /// Edge-list file instead of an expression.
    #[arg(long, conflicts_with = "expr")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Examples,
    Oracle,
    Thm3,
    Thm5,
    /// The r = 2 slice of thm5.
    #[value(name = "cor-2k1")]
    Cor2K1,
    PropPerfect,
    Lem1,
    Lem2,
    Lem3,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub theorem: Theorem,
    /// Largest G order [default: 6].
    #[arg(long)]
    pub max_g: Option<usize>,
    /// Largest H order for thm3 [default: 5].
    #[arg(long)]
    pub max_h: Option<usize>,
    /// Range of r for thm5, as A..B (inclusive) [default: 2..5].
    #[arg(long, value_parser = parse_range)]
    pub r: Option<RangeInclusive<usize>>,
    /// Seed for the randomized suites.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random instances (lem1/lem2: 1000, lem3: 100, oracle: 500).
    #[arg(long)]
    pub count: Option<usize>,
    /// A single G for prop-perfect.
    #[arg(long)]
    pub g: Option<String>,
    /// Clique size p for prop-perfect [default: 1..3].
    #[arg(long)]
    pub p: Option<usize>,
    /// Clique size q for prop-perfect [default: 1..3].
    #[arg(long)]
    pub q: Option<usize>,
    /// Skip the perfectness check on --g (required above the checker's guard).
    #[arg(long)]
    pub assume_perfect: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest H order.
    #[arg(long, default_value_t = 5)]
    pub max_h: usize,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub expression: String,
    pub order: usize,
    pub size: usize,
    pub alpha: usize,
    pub coefficients: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub expression: String,
    pub order: usize,
    pub alpha: usize,
    pub coefficients: IntPolynomial,
    pub symmetric: bool,
    pub f_symmetric: bool,
    pub c: Option<String>,
    pub failures: Vec<usize>,
    pub unimodal: bool,
    pub modes: Vec<usize>,
    pub unique_mode: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedGraph {
    pub key: String,
    pub size: usize,
    pub expr: String,
}

/// Engine that consults a [`PolyCache`] first.
struct CachedEngine<'a> {
    cache: &'a PolyCache,
    inner: &'a dyn PolyEngine,
}

impl PolyEngine for CachedEngine<'_> {
    fn indpoly(&self, g: &Graph) -> IntPolynomial {
        self.cache.indpoly(self.inner, g).unwrap_or_else(|e| {
            log::warn!("cache unavailable: {e}");
            self.inner.indpoly(g)
        })
    }
}

fn read_input(input: &Input) -> Result<(String, Graph)> {
    match (&input.expr, &input.file) {
        (Some(e), None) => Ok((e.clone(), dsl::parse(e)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok((path.display().to_string(), edgelist::parse(&text)?))
        }
        _ => Err(HarnessError::Usage("give an expression or --file".into())),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

pub fn compute(engine: &dyn PolyEngine, input: &Input) -> Result<ComputeOutput> {
    let (expression, g) = read_input(input)?;
    let p = engine.indpoly(&g);
    Ok(ComputeOutput {
        expression,
        order: g.order(),
        size: g.size(),
        alpha: p.degree(),
        coefficients: p,
    })
}

pub fn analyze(engine: &dyn PolyEngine, input: &Input) -> Result<AnalyzeOutput> {
    let (expression, g) = read_input(input)?;
    let p = engine.indpoly(&g);
    let f = detect_f_symmetry(&p);
    let u = unimodality(&p);
    Ok(AnalyzeOutput {
        expression,
        order: g.order(),
        alpha: p.degree(),
        symmetric: f.symmetric,
        f_symmetric: f.f_symmetric,
        c: f.constant_c.map(|c| format!("{}/{}", c.numer(), c.denom())),
        failures: f.failures,
        unimodal: u.unimodal,
        modes: u.modes,
        unique_mode: u.unique_mode,
        coefficients: p,
    })
}

fn guard(what: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(HarnessError::Usage(format!("{what} = {value} exceeds the guard {limit}")));
    }
    Ok(())
}

fn projected(count: usize) {
    eprintln!("projected instances: {count}");
}

pub fn verify(engine: &dyn PolyEngine, args: &VerifyArgs) -> Result<VerificationReport> {
    let max_g = args.max_g.unwrap_or(6);
    let max_h = args.max_h.unwrap_or(5);
    let seed = args.seed.unwrap_or(suites::DEFAULT_SEED);
    guard("max-g", max_g, MAX_ENUMERATION_ORDER)?;
    guard("max-h", max_h, MAX_ENUMERATION_ORDER)?;
    let r = args.r.clone().unwrap_or(2..=5);
    if *r.start() < 2 {
        return Err(HarnessError::Usage("r must be at least 2".into()));
    }
    let n_graphs = |max| suites::graphs_up_to(max).map(|v| v.len());
    Ok(match args.theorem {
        Theorem::Examples => suites::examples(engine),
        Theorem::Oracle => {
            let count = args.count.unwrap_or(500);
            projected(n_graphs(max_g)? + 1 + count);
            suites::oracle(engine, max_g, count, seed)?
        }
        Theorem::Thm3 => {
            projected(n_graphs(max_g)? * suites::alpha_two_graphs(max_h)?.len());
            suites::thm3(engine, max_g, max_h)?
        }
        Theorem::Thm5 => {
            projected(n_graphs(max_g)? * r.clone().count());
            suites::thm5(engine, "thm5", max_g, r)?
        }
        Theorem::Cor2K1 => {
            projected(n_graphs(max_g)?);
            suites::thm5(engine, "cor-2k1", max_g, 2..=2)?
        }
        Theorem::PropPerfect => {
            let gs = match &args.g {
                Some(expr) => {
                    let g = dsl::parse(expr)?;
                    if !args.assume_perfect {
                        if g.order() > MAX_PERFECT_ORDER {
                            return Err(HarnessError::Usage(format!(
                                "G has {} vertices, above the perfectness checker's guard {}; \
                                 pass --assume-perfect",
                                g.order(),
                                MAX_PERFECT_ORDER
                            )));
                        }
                        if !is_perfect(&g)? {
                            return Err(HarnessError::Usage("G is not perfect".into()));
                        }
                    }
                    vec![g]
                }
                None => suites::perfect_graphs_up_to(max_g)?,
            };
            let ps = args.p.map_or(1..=3, |p| p..=p);
            let qs = args.q.map_or(1..=3, |q| q..=q);
            projected(gs.len() * ps.clone().count() * qs.clone().count());
            suites::prop_perfect(engine, &gs, ps, qs)?
        }
        Theorem::Lem1 => suites::lem1(args.count.unwrap_or(1000), seed),
        Theorem::Lem2 => suites::lem2(args.count.unwrap_or(1000), seed),
        Theorem::Lem3 => suites::lem3(args.count.unwrap_or(100), seed),
    })
}

pub fn search(engine: &dyn PolyEngine, args: &SearchArgs) -> Result<SearchReport> {
    guard("max-h", args.max_h, search::MAX_SEARCH_H_ORDER)?;
    let pool = search::default_pool()?;
    projected(search::projected_instances(args.max_h, pool.len())?);
    search::conjecture_search(engine, args.max_h, &pool)
}

pub fn enumerate(n: usize) -> Result<Vec<EnumeratedGraph>> {
    enumerate_graphs(n)?
        .into_iter()
        .map(|g| {
            Ok(EnumeratedGraph {
                key: canonical_form(&g)?.to_string(),
                size: g.size(),
                expr: g.descriptor(),
            })
        })
        .collect()
}

fn print_report(out: &mut impl Write, r: &VerificationReport) -> std::io::Result<()> {
    writeln!(out, "theorem     {}", r.theorem_id)?;
    writeln!(out, "instances   {}", r.instances_checked)?;
    writeln!(out, "passes      {}", r.passes)?;
    if let Some(seed) = r.seed {
        writeln!(out, "seed        {seed}")?;
    }
    writeln!(out, "wall time   {} ms", r.wall_time_ms)?;
    writeln!(out, "result      {}", if r.all_passed() { "PASS" } else { "FAIL" })?;
    if let Some(f) = &r.first_failure {
        writeln!(out, "failure G   {}", f.g)?;
        if let Some(h) = &f.h {
            writeln!(out, "failure H   {h}")?;
        }
        writeln!(out, "polynomial  {}", f.polynomial)?;
        writeln!(out, "reason      {}", f.reason)?;
    }
    Ok(())
}

fn print_search(out: &mut impl Write, r: &SearchReport) -> std::io::Result<()> {
    writeln!(out, "{:<4} {:<5} {:<10} {:<10} witness G", "|H|", "|E|", "H", "verdict")?;
    for c in &r.candidates {
        let verdict = if c.survived_pool { "survives" } else { "eliminated" };
        writeln!(
            out,
            "{:<4} {:<5} {:<10} {:<10} {}",
            c.h_order,
            c.h_size,
            c.h_descriptor,
            verdict,
            c.witness_g.as_deref().unwrap_or("-")
        )?;
    }
    writeln!(out, "{} survived, {} eliminated, pool of {}", r.survivors, r.eliminated, r.pool_size)?;
    writeln!(out, "note: {}", r.verdict_scope)
}

/// Runs a parsed command line, writing results to `out`. Returns the exit
/// code: 0 when every check passes, 1 when a mathematical failure was found.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32> {
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            log::warn!("thread pool already initialised: {e}");
        }
    }
    let cache = cli.cache.as_ref().map(PolyCache::open).transpose()?;
    let exact = ExactEngine;
    let cached;
    let engine: &dyn PolyEngine = match &cache {
        Some(cache) => {
            cached = CachedEngine { cache, inner: &exact };
            &cached
        }
        None => &exact,
    };
    let io = |e: std::io::Error| HarnessError::Io {
        path: "<stdout>".into(),
        source: e,
    };
    match &cli.command {
        Command::Compute(input) => {
            let r = compute(engine, input)?;
            if cli.json {
                writeln!(out, "{}", to_json(&r)).map_err(io)?;
            } else {
                writeln!(out, "I(G;x) = {}", r.coefficients).map_err(io)?;
                writeln!(out, "coefficients {}", r.coefficients.to_decimal_strings().join(" "))
                    .map_err(io)?;
                writeln!(out, "alpha = {}", r.alpha).map_err(io)?;
            }
            Ok(0)
        }
        Command::Analyze(input) => {
            let r = analyze(engine, input)?;
            if cli.json {
                writeln!(out, "{}", to_json(&r)).map_err(io)?;
            } else {
                writeln!(out, "I(G;x)      {}", r.coefficients).map_err(io)?;
                writeln!(out, "symmetric   {}", r.symmetric).map_err(io)?;
                writeln!(out, "f-symmetric {}", r.f_symmetric).map_err(io)?;
                writeln!(out, "c           {}", r.c.as_deref().unwrap_or("-")).map_err(io)?;
                writeln!(out, "unimodal    {}", r.unimodal).map_err(io)?;
                writeln!(out, "modes       {:?}", r.modes).map_err(io)?;
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let r = verify(engine, args)?;
            if cli.json {
                writeln!(out, "{}", to_json(&r)).map_err(io)?;
            } else {
                print_report(out, &r).map_err(io)?;
            }
            Ok(if r.all_passed() { 0 } else { 1 })
        }
        Command::Search(args) => {
            let r = search(engine, args)?;
            if cli.json {
                writeln!(out, "{}", to_json(&r)).map_err(io)?;
            } else {
                print_search(out, &r).map_err(io)?;
            }
            Ok(if r.unsound().next().is_some() { 1 } else { 0 })
        }
        Command::Enumerate { n } => {
            let list = enumerate(*n)?;
            if cli.json {
                writeln!(out, "{}", to_json(&list)).map_err(io)?;
            } else {
                for g in &list {
                    writeln!(out, "{:<10} {:<3} {}", g.key, g.size, g.expr).map_err(io)?;
                }
            }
            Ok(0)
        }
    }
}

/// Entry point for the binary: usage and guard errors exit with 2.
pub fn main() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
