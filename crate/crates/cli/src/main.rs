use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mced::gadgets::{build_kl_gadget, gen_planted, gen_random, PRNG_NAME};
use mced::kernel::{kernel_bound, kernelize, KernelStats, KernelStatus};
use mced::md::decompose;
use mced::recognition::{classify_components, find_forbidden_in, ComponentClass};
use mced::solver::{
    brute_force_oracle_with, solve_bounded_with, solve_optimal_with, Answer, OracleLimits,
    SolveOptions, SolveResult, Target,
};
use mced::{parse_graph, EditSet, Error, Graph};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mced",
    version,
    about = "Edit graphs into disjoint unions of cliques and ℓ-cliques"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Maximum number of classes of a complete multipartite component.
    #[arg(long = "l", default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    l: u64,
    /// Graph file in edge-list format, or '-' for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Print extra key=value statistics.
    #[arg(long)]
    stats: bool,
    /// Emit byte-identical output for identical input. Turned off by --parallel.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the graph is a disjoint union of cliques and ℓ-cliques.
    Recognize {
        #[command(flatten)]
        common: Common,
        /// Print the modular decomposition tree in DOT format.
        #[arg(long)]
        emit_dot: bool,
    },
    /// Shrink an instance to a kernel of bounded size.
    Kernelize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Decide whether at most k edits suffice; without --k, find the optimum.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: Option<usize>,
        /// Largest budget tried when searching for the optimum.
        #[arg(long, default_value_t = 12)]
        max_k: usize,
        /// Explore branches near the root in parallel.
        #[arg(long)]
        parallel: bool,
        /// Abort after this many search nodes.
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Exhaustive search over all edit sets of size at most k (small graphs).
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time decomposition, kernelization and (optionally) solving; CSV output.
    Bench {
        /// Edge-list files to time.
        files: Vec<PathBuf>,
        #[arg(long = "l", default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
        l: u64,
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// Also time a planted instance with this many vertices.
        #[arg(long)]
        planted_n: Option<usize>,
        #[arg(long, default_value_t = 14)]
        cluster_size: usize,
        #[arg(long, default_value_t = 10)]
        noise: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the solver with budget k.
        #[arg(long)]
        solve: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Erdős–Rényi G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cliques and ℓ-cliques of the given sizes plus random noise edits.
    Planted {
        /// Comma-separated component sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long = "l", default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
        l: u64,
        #[arg(long, default_value_t = 0)]
        noise: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Blow-up gadget of an input graph: each vertex becomes an ℓ-clique.
    Gadget {
        #[arg(long = "l", default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
        l: u64,
        #[arg(default_value = "-")]
        input: String,
    },
}

/// A finished command: text for stdout and the exit status.
struct Report {
    out: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(report.out.as_bytes());
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("mced: {e}");
            let code = match e {
                Error::ResourceLimit(_) | Error::TooLarge(_) => EXIT_LIMIT,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Recognize { common, emit_dot } => recognize(&common, emit_dot),
        Command::Kernelize { common, k } => kernel_report(&common, k),
        Command::Solve {
            common,
            k,
            max_k,
            parallel,
            max_nodes,
        } => solve(&common, k, max_k, parallel, max_nodes),
        Command::Oracle { common, k } => oracle(&common, k),
        Command::Gen { kind } => generate(kind),
        Command::Bench {
            files,
            l,
            k,
            planted_n,
            cluster_size,
            noise,
            seed,
            solve,
        } => bench(
            &files,
            l as usize,
            k,
            planted_n,
            cluster_size,
            noise,
            seed,
            solve,
        ),
    }
}

fn read_input(path: &str) -> Result<Graph, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse {
                line: 0,
                message: format!("stdin: {e}"),
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{path}: {e}"),
        })?
    };
    parse_graph(&text)
}

fn recognize(common: &Common, emit_dot: bool) -> Result<Report, Error> {
    let g = read_input(&common.input)?;
    let l = common.l as usize;
    let tree = decompose(&g);
    let witness = find_forbidden_in(&g, &tree, l);
    let mut out = String::new();
    match &witness {
        None => out.push_str("answer=yes\n"),
        Some(w) => {
            out.push_str("answer=no\n");
            let _ = writeln!(out, "{w}");
        }
    }
    if common.stats {
        let classes = classify_components(&tree, l);
        let count = |f: fn(&ComponentClass) -> bool| classes.iter().filter(|(_, c)| f(c)).count();
        let _ = writeln!(out, "n={}\nm={}", g.n(), g.m());
        let _ = writeln!(out, "components={}", classes.len());
        let _ = writeln!(
            out,
            "clique_components={}",
            count(|c| matches!(c, ComponentClass::Clique(_)))
        );
        let _ = writeln!(
            out,
            "l_clique_components={}",
            count(|c| matches!(c, ComponentClass::LClique(_)))
        );
        let _ = writeln!(out, "md_nodes={}", tree.len());
        let prime = tree
            .nodes()
            .iter()
            .filter(|n| n.label == mced::md::NodeLabel::Prime)
            .count();
        let _ = writeln!(out, "prime_nodes={prime}");
    }
    if emit_dot {
        out.push_str(&tree.to_dot());
    }
    Ok(Report {
        out,
        code: if witness.is_none() { EXIT_YES } else { EXIT_NO },
    })
}

fn write_kernel_stats(out: &mut String, stats: &KernelStats) {
    let _ = writeln!(out, "components_removed={}", stats.components_removed);
    let _ = writeln!(out, "vertices_truncated={}", stats.vertices_truncated);
    let _ = writeln!(out, "quotient_size={}", stats.quotient_size);
    let _ = writeln!(out, "p_vertices={}", stats.p_vertices);
    let _ = writeln!(out, "s_vertices={}", stats.s_vertices);
}

fn kernel_report(common: &Common, k: usize) -> Result<Report, Error> {
    let g = read_input(&common.input)?;
    let l = common.l as usize;
    let r = kernelize(&g, l, k);
    let mut out = String::new();
    let (status, code) = match &r.status {
        KernelStatus::Kernel(_) => ("kernel", EXIT_YES),
        KernelStatus::TriviallyYes => ("trivially-yes", EXIT_YES),
        KernelStatus::No(_) => ("no", EXIT_NO),
    };
    let _ = writeln!(out, "status={status}");
    if let KernelStatus::No(reason) = &r.status {
        let _ = writeln!(out, "reason={reason}");
    }
    let _ = writeln!(out, "l={l}\nk={k}");
    let _ = writeln!(out, "quotient_bound={}", (2 * l + 2) * k);
    let _ = writeln!(out, "p_bound={}\ns_bound={}", 2 * l * k, 2 * k);
    let _ = writeln!(out, "p_cap={}\ns_cap={}", k + 2, l + k + 1);
    let _ = writeln!(out, "kernel_bound={}", kernel_bound(l, k));
    write_kernel_stats(&mut out, &r.stats);
    if let KernelStatus::Kernel(h) = &r.status {
        let _ = writeln!(out, "kernel_vertices={}\nkernel_edges={}", h.n(), h.m());
        out.push_str(&h.to_edge_list());
        out.push_str("# vertex_map\n");
        for (i, v) in r.vertex_map.iter().enumerate() {
            let _ = writeln!(out, "# {i} {v}");
        }
    }
    Ok(Report { out, code })
}

fn write_answer(out: &mut String, answer: &Answer, k: usize) {
    match answer {
        Answer::Yes(f) => {
            let _ = writeln!(out, "answer=yes\nk={k}\nedits={}", f.len());
            out.push_str(&edit_lines(f));
        }
        Answer::No => {
            let _ = writeln!(out, "answer=no\nk={k}");
        }
    }
}

fn edit_lines(f: &EditSet) -> String {
    let mut s = f.to_string();
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn write_solve_stats(out: &mut String, r: &SolveResult, deterministic: bool) {
    let _ = writeln!(out, "nodes_explored={}", r.nodes_explored);
    let _ = writeln!(out, "max_branching={}", r.max_branching);
    write_kernel_stats(out, &r.kernel_stats);
    let _ = writeln!(out, "deterministic={deterministic}");
}

fn solve(
    common: &Common,
    k: Option<usize>,
    max_k: usize,
    parallel: bool,
    max_nodes: Option<u64>,
) -> Result<Report, Error> {
    let g = read_input(&common.input)?;
    let l = common.l as usize;
    if parallel && common.deterministic {
        eprintln!("mced: --parallel may change the reported edit set between runs");
    }
    let deterministic = common.deterministic && !parallel;
    let opts = SolveOptions {
        parallel,
        max_nodes,
    };
    let mut out = String::new();
    let k = match k {
        Some(k) => k,
        None => {
            let (opt, _) = solve_optimal_with(&g, l, max_k, &opts)?;
            let _ = writeln!(out, "optimum={opt}");
            opt
        }
    };
    let r = solve_bounded_with(&g, l, k, &opts)?;
    write_answer(&mut out, &r.answer, k);
    if common.stats {
        write_solve_stats(&mut out, &r, deterministic);
    }
    Ok(Report {
        out,
        code: if r.answer.is_yes() { EXIT_YES } else { EXIT_NO },
    })
}

fn oracle(common: &Common, k: usize) -> Result<Report, Error> {
    let g = read_input(&common.input)?;
    let mut limits = OracleLimits::default();
    if let Ok(v) = std::env::var("MCED_MAX_ORACLE_PAIRS") {
        limits.max_pairs = v.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            message: format!("MCED_MAX_ORACLE_PAIRS is not a number: {v}"),
        })?;
    }
    let found = brute_force_oracle_with(&g, Target::LCluster(common.l as usize), k, limits)?;
    let answer = found.map_or(Answer::No, Answer::Yes);
    let mut out = String::new();
    write_answer(&mut out, &answer, k);
    Ok(Report {
        out,
        code: if answer.is_yes() { EXIT_YES } else { EXIT_NO },
    })
}

fn generate(kind: GenKind) -> Result<Report, Error> {
    let out = match kind {
        GenKind::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("edge probability {p} not in [0, 1]"),
                });
            }
            let g = gen_random(n, p, seed);
            format!(
                "# generator=random n={n} p={p} seed={seed} prng={PRNG_NAME}\n{}",
                g.to_edge_list()
            )
        }
        GenKind::Planted {
            sizes,
            l,
            noise,
            seed,
        } => {
            let (g, bound) = gen_planted(sizes.len(), &sizes, l as usize, noise, seed)?;
            let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            format!(
                "# generator=planted sizes={} l={l} noise={noise} seed={seed} prng={PRNG_NAME} bound={bound}\n{}",
                sizes.join(","),
                g.to_edge_list()
            )
        }
        GenKind::Gadget { l, input } => {
            let g = read_input(&input)?;
            let (h, _) = build_kl_gadget(&g, l as usize)?;
            format!(
                "# generator=gadget l={l} source_n={} source_m={}\n{}",
                g.n(),
                g.m(),
                h.to_edge_list()
            )
        }
    };
    Ok(Report {
        out,
        code: EXIT_YES,
    })
}

#[allow(clippy::too_many_arguments)]
fn bench(
    files: &[PathBuf],
    l: usize,
    k: usize,
    planted_n: Option<usize>,
    cluster_size: usize,
    noise: usize,
    seed: u64,
    solve: bool,
) -> Result<Report, Error> {
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        instances.push((path.display().to_string(), parse_graph(&text)?));
    }
    if let Some(n) = planted_n {
        if cluster_size == 0 {
            return Err(Error::Invariant("cluster size must be positive".into()));
        }
        let mut sizes = vec![cluster_size; n / cluster_size];
        if n % cluster_size != 0 {
            sizes.push(n % cluster_size);
        }
        let (g, _) = gen_planted(sizes.len(), &sizes, l, noise, seed)?;
        instances.push((
            format!("planted-n{n}-s{cluster_size}-noise{noise}-seed{seed}"),
            g,
        ));
    }

    let mut out = String::from("instance,n,m,decompose_ms,kernelize_ms,solve_ms,status\n");
    let ms = |t: Instant| t.elapsed().as_secs_f64() * 1000.0;
    for (name, g) in &instances {
        let t = Instant::now();
        let tree = decompose(g);
        let decompose_ms = ms(t);
        drop(tree);
        let t = Instant::now();
        let kernel = kernelize(g, l, k);
        let kernelize_ms = ms(t);
        let mut status = match &kernel.status {
            KernelStatus::Kernel(h) => format!("kernel:{}", h.n()),
            KernelStatus::TriviallyYes => "trivially-yes".to_string(),
            KernelStatus::No(_) => "no".to_string(),
        };
        let mut solve_ms = String::new();
        if solve {
            let t = Instant::now();
            let r = solve_bounded_with(g, l, k, &SolveOptions::default())?;
            solve_ms = format!("{:.3}", ms(t));
            status = if r.answer.is_yes() { "yes" } else { "no" }.to_string();
        }
        let _ = writeln!(
            out,
            "{},{},{},{decompose_ms:.3},{kernelize_ms:.3},{solve_ms},{status}",
            name.replace(',', "_"),
            g.n(),
            g.m()
        );
    }
    Ok(Report {
        out,
        code: EXIT_YES,
    })
}
