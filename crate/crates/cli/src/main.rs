use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use graphpart::exclusive::{recognize_bounded_a, recognize_exclusive};
use graphpart::generate::{generate, GenKind, GenParams};
use graphpart::io::{parse_certificate_file, parse_graph_file, write_certificate, write_graph_file};
use graphpart::parallel::map_items;
use graphpart::property::exclusivity_bound;
use graphpart::{oracle, verify_certificate, Bipartition, BoundMode, Execution, Graph, OrderMode, Problem, PropertySpec, SearchStats, Side};

/// Recognize monopolar and 2-subcolorable graphs, and generic vertex
/// partitions into two hereditary properties.
#[derive(Parser)]
#[command(name = "graphpart", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership and write a certificate on YES.
    Recognize(RecognizeArgs),
    /// Write a generated instance in DIMACS format.
    Gen(GenArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Exhaustive reference answer for small graphs.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Monopolar,
    SubcoloringKa,
    SubcoloringTotal,
    GenericExclusive,
    BoundedA,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Input,
    Degree,
}

#[derive(Args)]
struct ProblemOpts {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Cluster bound (or the size bound of side A for bounded-a).
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Property of side A for the generic problems, e.g. `clique`, `cluster:k=2`.
    #[arg(long)]
    spec_a: Option<String>,
    #[arg(long)]
    spec_b: Option<String>,
}

impl ProblemOpts {
    fn specs(&self) -> Result<(PropertySpec, PropertySpec)> {
        let (Some(a), Some(b)) = (&self.spec_a, &self.spec_b) else {
            bail!("this problem needs --spec-a and --spec-b");
        };
        Ok((PropertySpec::parse(a)?, PropertySpec::parse(b)?))
    }
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    opts: ProblemOpts,
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Where to write the certificate on YES.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Exclusivity order for generic-exclusive; derived from the specs if absent.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "degree")]
    order: OrderArg,
    /// Print search-tree counters as key=value lines.
    #[arg(long)]
    stats: bool,
    /// Several inputs: solve them on the worker pool and print one line each.
    #[arg(long)]
    batch: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value = "planted-monopolar")]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.3)]
    a_fraction: f64,
    #[arg(long)]
    output: PathBuf,
    /// Also write the planted certificate.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    opts: ProblemOpts,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    certificate: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    opts: ProblemOpts,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    certificate: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph_file(path).with_context(|| format!("reading {}", path.display()))
}

fn answer(found: &Option<Bipartition>, certificate: Option<&Path>) -> Result<bool> {
    match found {
        Some(p) => {
            println!("YES");
            if let Some(path) = certificate {
                write_certificate(p, path).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(true)
        }
        None => {
            println!("NO");
            Ok(false)
        }
    }
}

fn solve(g: &Graph, args: &RecognizeArgs) -> Result<(Option<Bipartition>, Option<SearchStats>)> {
    let mode = match args.order {
        OrderArg::Input => OrderMode::Input,
        OrderArg::Degree => OrderMode::DegreeSorted,
    };
    let k = args.opts.k;
    Ok(match args.opts.problem {
        ProblemArg::Monopolar => {
            let (p, s) = graphpart::recognize_monopolar_with(g, k, mode);
            (p, Some(s))
        }
        ProblemArg::SubcoloringKa => {
            let (p, s) = graphpart::recognize_subcoloring_ka_with(g, k, mode);
            (p, Some(s))
        }
        ProblemArg::SubcoloringTotal => {
            let (p, s) = graphpart::recognize_subcoloring_total_stats(g, k);
            (p, Some(s))
        }
        ProblemArg::GenericExclusive => {
            let (a, b) = args.opts.specs()?;
            let d = match args.d {
                Some(d) => d,
                None => exclusivity_bound(&a, &b)?.context("cannot derive the exclusivity order; pass --d")? as usize,
            };
            (recognize_exclusive(g, &a, &b, d)?, None)
        }
        ProblemArg::BoundedA => {
            let (a, b) = args.opts.specs()?;
            (recognize_bounded_a(g, k, &a, &b)?, None)
        }
    })
}

fn recognize(args: &RecognizeArgs) -> Result<bool> {
    if args.input.len() > 1 || args.batch {
        if args.certificate.is_some() {
            bail!("--certificate takes a single input");
        }
        let graphs = args.input.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
        let results = map_items(&graphs, Execution::Parallel, |g| solve(g, args).map(|r| r.0.is_some()));
        let mut all = true;
        for (path, r) in args.input.iter().zip(results) {
            let yes = r?;
            println!("{} {}", path.display(), if yes { "YES" } else { "NO" });
            all &= yes;
        }
        return Ok(all);
    }
    let g = read_graph(&args.input[0])?;
    let (found, stats) = solve(&g, args)?;
    let yes = answer(&found, args.certificate.as_deref())?;
    if args.stats {
        match stats {
            Some(s) => println!("{s}"),
            None => eprintln!("no search statistics for this problem"),
        }
    }
    Ok(yes)
}

fn gen(args: &GenArgs) -> Result<bool> {
    let kind: GenKind = args.kind.parse()?;
    let mut params = GenParams::new(kind, args.n, args.k, args.p, args.seed);
    params.a_fraction = args.a_fraction;
    let planted = generate(&params)?;
    write_graph_file(&planted.graph, &args.output).with_context(|| format!("writing {}", args.output.display()))?;
    if let Some(path) = &args.certificate {
        let Some(p) = &planted.certificate else { bail!("gnp instances have no planted certificate") };
        write_certificate(p, path)?;
    }
    Ok(true)
}

fn holds(g: &Graph, p: &Bipartition, opts: &ProblemOpts) -> Result<bool> {
    let k = opts.k;
    Ok(match opts.problem {
        ProblemArg::Monopolar => verify_certificate(g, p, Problem::Monopolar, k, BoundMode::ASide),
        ProblemArg::SubcoloringKa => verify_certificate(g, p, Problem::Subcoloring, k, BoundMode::ASide),
        ProblemArg::SubcoloringTotal => verify_certificate(g, p, Problem::Subcoloring, k, BoundMode::Total),
        ProblemArg::GenericExclusive | ProblemArg::BoundedA => {
            let (a, b) = opts.specs()?;
            let (av, bv) = (p.a_vertices(), p.b_vertices());
            let small = opts.problem == ProblemArg::GenericExclusive || av.len() <= k;
            p.n() == g.n() && small && a.contains_induced(g, &av) && b.contains_induced(g, &bv)
        }
    })
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let g = read_graph(&args.input)?;
    let p = parse_certificate_file(&args.certificate).with_context(|| format!("reading {}", args.certificate.display()))?;
    let ok = holds(&g, &p, &args.opts)?;
    println!("{}", if ok { "VALID" } else { "INVALID" });
    Ok(ok)
}

fn run_oracle(args: &OracleArgs) -> Result<bool> {
    let g = read_graph(&args.input)?;
    let k = args.opts.k;
    let found = match args.opts.problem {
        ProblemArg::Monopolar => oracle::brute_monopolar(&g, k)?,
        ProblemArg::SubcoloringKa => oracle::brute_subcoloring(&g, k, BoundMode::ASide)?,
        ProblemArg::SubcoloringTotal => oracle::brute_subcoloring(&g, k, BoundMode::Total)?,
        ProblemArg::GenericExclusive => {
            let (a, b) = args.opts.specs()?;
            oracle::brute_pi_partition(&g, &a, &b)?
        }
        ProblemArg::BoundedA => {
            let (a, b) = args.opts.specs()?;
            let limit = oracle::oracle_limit(oracle::DEFAULT_PI_LIMIT);
            if g.n() > limit {
                bail!("oracle refuses graphs on {} vertices (limit {limit})", g.n());
            }
            small_a_sweep(&g, k, &a, &b)
        }
    };
    answer(&found, args.certificate.as_deref())
}

/// Tries every side A of at most `k` vertices, smallest first.
fn small_a_sweep(g: &Graph, k: usize, a: &PropertySpec, b: &PropertySpec) -> Option<Bipartition> {
    use itertools::Itertools;
    (0..=k.min(g.n())).find_map(|size| {
        (0..g.n()).combinations(size).find_map(|av| {
            let mut side = vec![Side::B; g.n()];
            for &v in &av {
                side[v] = Side::A;
            }
            let bv: Vec<usize> = (0..g.n()).filter(|&v| side[v] == Side::B).collect();
            (a.contains_induced(g, &av) && b.contains_induced(g, &bv)).then(|| Bipartition::from_sides(g, &side))
        })
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Recognize(a) => recognize(a),
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => run_oracle(a),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
