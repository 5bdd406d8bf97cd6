//! Acceptance suite. Runs every acceptance criterion, prints one PASS/FAIL
//! line each, and exits non-zero if any fails.
//!
//! Run alone with `cargo test -p mced --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_graphs, nonisomorphic_graphs, random_small_graph, Bits};
use mced::gadgets::{
    build_kl_gadget, check_gadget_optimum, exact_optimum, gen_planted, minimum_solutions,
};
use mced::kernel::{
    build_weighted_p_quotient, build_weighted_s_quotient, kernel_bound, kernelize,
    remove_trivial_components, KernelStatus,
};
use mced::md::{count_kinds, decompose, q_quotient};
use mced::solver::{
    brute_force_oracle, brute_force_oracle_with, solve_bounded, solve_optimal, verify_solution,
    weighted_brute_force, OracleLimits, Target,
};
use mced::{is_l_cluster_graph, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Graphs used by the kernel and solver criteria: every labelled graph on up
/// to five vertices, every isomorphism class on six and seven, and 10^4
/// random graphs on six or seven vertices.
fn oracle_sample() -> Vec<Graph> {
    let mut sample: Vec<Graph> = (0..=5).flat_map(all_graphs).collect();
    sample.extend(nonisomorphic_graphs(6));
    sample.extend(nonisomorphic_graphs(7));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    sample.extend((0..10_000).map(|_| random_small_graph(6, 7, &mut rng)));
    sample
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
    let iso7 = nonisomorphic_graphs(7);
    let classes7 = iso7.len();
    graphs.extend(iso7);
    let mismatches: usize = graphs
        .par_iter()
        .map(|g| {
            let bits = Bits::from_graph(g);
            [2, 3]
                .iter()
                .filter(|&&l| is_l_cluster_graph(g, l) == bits.has_forbidden(l))
                .count()
        })
        .sum();
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(10),
        format!(
            "{} graphs (all labelled n<=6, {classes7} classes n=7), l in {{2,3}}: {mismatches} mismatches in {elapsed:.2?}",
            graphs.len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let exhaustive: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let random: Vec<Graph> = (0..10_000)
        .map(|_| random_small_graph(1, 8, &mut rng))
        .collect();
    let bad = exhaustive
        .par_iter()
        .chain(random.par_iter())
        .filter(|g| decompose(g).shape() != Bits::from_graph(g).md_shape())
        .count();
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed < Duration::from_secs(60),
        format!(
            "{} exhaustive + {} random trees: {bad} mismatches in {elapsed:.2?}",
            exhaustive.len(),
            random.len()
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let trials = 20_000u64;
    let violations: usize = (0..trials)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_small_graph(2, 12, &mut rng);
            let u = rng.gen_range(0..g.n());
            let v = (u + rng.gen_range(1..g.n())) % g.n();
            let (u0, p0, s0) = count_kinds(&q_quotient(&g));
            let after = q_quotient(&g.toggled(u, v));
            let (u1, p1, s1) = count_kinds(&after);
            let ok =
                u1 <= u0 + 4 && p1 <= p0 + 2 && s1 <= s0 + 2 && after.len() <= u0 + p0 + s0 + 2;
            usize::from(!ok)
        })
        .sum();
    let elapsed = start.elapsed();
    outcome(
        violations == 0 && elapsed < Duration::from_secs(60),
        format!("{trials} single-edit trials, n<=12: {violations} violations in {elapsed:.2?}"),
    )
}

fn criterion_4() -> Outcome {
    let trials = 4_000u64;
    let violations: usize = (0..trials)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
            let l = rng.gen_range(2..=3);
            let k = rng.gen_range(1..=4);
            let count = rng.gen_range(1..=8);
            let sizes: Vec<usize> = (0..count).map(|_| rng.gen_range(1..=7)).collect();
            let n: usize = sizes.iter().sum();
            let noise = rng.gen_range(0..=k).min(n * n.saturating_sub(1) / 2);
            let (g, _) = gen_planted(count, &sizes, l, noise, seed).unwrap();
            let reduced = remove_trivial_components(&g, l).graph;
            let q = q_quotient(&reduced);
            let (_, p, s) = count_kinds(&q);
            let ok = q.len() <= (2 * l + 2) * k && p <= 2 * l * k && s <= 2 * k;
            usize::from(!ok)
        })
        .sum();
    outcome(
        violations == 0,
        format!(
            "{trials} planted yes-instances, l in {{2,3}}, k in 1..=4: {violations} violations"
        ),
    )
}

fn criterion_5(sample: &[Graph]) -> Outcome {
    let start = Instant::now();
    let failures: usize = sample
        .par_iter()
        .map(|g| {
            let mut bad = 0;
            for l in [2, 3] {
                for k in 0..=3 {
                    let yes = brute_force_oracle(g, l, k).unwrap().is_some();
                    let ok = match kernelize(g, l, k).status {
                        KernelStatus::No(_) => !yes,
                        KernelStatus::TriviallyYes => {
                            yes && is_l_cluster_graph(&remove_trivial_components(g, l).graph, l)
                        }
                        KernelStatus::Kernel(h) => {
                            h.n() <= kernel_bound(l, k)
                                && brute_force_oracle(&h, l, k).unwrap().is_some() == yes
                        }
                    };
                    bad += usize::from(!ok);
                }
            }
            bad
        })
        .sum();
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && elapsed < Duration::from_secs(600),
        format!(
            "{} graphs x l in {{2,3}} x k in 0..=3: {failures} failures in {elapsed:.2?}",
            sample.len()
        ),
    )
}

fn criterion_6(sample: &[Graph]) -> Outcome {
    let start = Instant::now();
    let (disagree, invalid, max_branch) = sample
        .par_iter()
        .map(|g| {
            let (mut d, mut inv, mut br) = (0usize, 0usize, [0usize; 2]);
            for (i, l) in [2usize, 3].into_iter().enumerate() {
                for k in 0..=3 {
                    let oracle = brute_force_oracle(g, l, k).unwrap().is_some();
                    let r = solve_bounded(g, l, k);
                    d += usize::from(r.answer.is_yes() != oracle);
                    if let Some(f) = r.answer.edits() {
                        inv += usize::from(!verify_solution(g, l, f, k).unwrap());
                    }
                    br[i] = br[i].max(r.max_branching);
                }
            }
            (d, inv, br)
        })
        .reduce(
            || (0, 0, [0, 0]),
            |a, b| {
                (
                    a.0 + b.0,
                    a.1 + b.1,
                    [a.2[0].max(b.2[0]), a.2[1].max(b.2[1])],
                )
            },
        );
    let elapsed = start.elapsed();
    outcome(
        disagree == 0 && invalid == 0 && max_branch[0] <= 6 && max_branch[1] <= 10,
        format!(
            "{} graphs x l in {{2,3}} x k in 0..=3: {disagree} disagreements, {invalid} invalid edit sets, max branching {} (bound 6) / {} (bound 10) in {elapsed:.2?}",
            sample.len(),
            max_branch[0],
            max_branch[1]
        ),
    )
}

fn criterion_7() -> Outcome {
    let connected: Vec<Graph> = (2..=5)
        .flat_map(nonisomorphic_graphs)
        .filter(|g| g.connected_components().len() == 1)
        .collect();
    let cases: Vec<(&Graph, usize)> = connected.iter().flat_map(|g| [(g, 2), (g, 3)]).collect();
    let bad = cases
        .par_iter()
        .filter(|(g, l)| !check_gadget_optimum(g, *l).unwrap().ratio_ok)
        .count();
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let check = check_gadget_optimum(&p3, 2).unwrap();
    let (gadget, _) = build_kl_gadget(&p3, 2).unwrap();
    let sols = minimum_solutions(&gadget, Target::KlCluster(2), 4).unwrap();
    let p3_ok = check.opt_gadget == 2 && sols.len() == 3 && sols.iter().all(|s| s.len() == 2);
    outcome(
        bad == 0 && p3_ok,
        format!(
            "{} connected classes n in 2..=5 x l in {{2,3}}: {bad} ratio failures; P3 gadget optimum {} with {} minimum solutions",
            connected.len(),
            check.opt_gadget,
            sols.len()
        ),
    )
}

fn random_l_partite(rng: &mut ChaCha8Rng, l: usize) -> Graph {
    let n = rng.gen_range(2..=7);
    let color: Vec<usize> = (0..n).map(|_| rng.gen_range(0..l)).collect();
    let p = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if color[u] != color[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let instances: Vec<(Graph, usize)> = (0..400)
        .map(|i| {
            let l = 2 + i % 2;
            (random_l_partite(&mut rng, l), l)
        })
        .collect();
    let bad = instances
        .par_iter()
        .filter(|(g, l)| {
            let kl = exact_optimum(g, Target::KlCluster(*l)).unwrap();
            let mixed = exact_optimum(g, Target::LCluster(*l)).unwrap();
            let searched = solve_optimal(g, *l, 21).unwrap().0;
            kl != mixed || mixed != searched
        })
        .count();
    outcome(
        bad == 0,
        format!(
            "{} random l-partite graphs n<=7, l in {{2,3}}: {bad} optimum mismatches",
            instances.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let graphs: Vec<Graph> = (0..=7).flat_map(nonisomorphic_graphs).collect();
    let unlimited = OracleLimits {
        max_pairs: usize::MAX,
        max_k: usize::MAX,
    };
    let (cluster_bad, bicluster_bad) = graphs
        .par_iter()
        .map(|g| {
            let s = build_weighted_s_quotient(g);
            let p = build_weighted_p_quotient(g);
            let (mut cb, mut bb) = (0, 0);
            for k in 0..=3u64 {
                let direct = brute_force_oracle_with(g, Target::Cluster, k as usize, unlimited)
                    .unwrap()
                    .is_some();
                let weighted = weighted_brute_force(&s, g.n(), Target::Cluster, k, true).unwrap();
                cb += usize::from(direct != weighted);
                let direct = brute_force_oracle_with(g, Target::Bicluster, k as usize, unlimited)
                    .unwrap()
                    .is_some();
                let weighted =
                    weighted_brute_force(&p, g.n(), Target::Bicluster, k, false).unwrap();
                bb += usize::from(direct != weighted);
            }
            (cb, bb)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(
        cluster_bad == 0 && bicluster_bad == 0,
        format!(
            "{} isomorphism classes n<=7 x k in 0..=3: {cluster_bad} cluster / {bicluster_bad} bicluster mismatches",
            graphs.len()
        ),
    )
}

/// Best of three runs of decompose + kernelize on a planted instance.
fn planted_instance(n: usize) -> Graph {
    let sizes = vec![14; n / 14];
    gen_planted(sizes.len(), &sizes, 2, 10, 10).unwrap().0
}

fn time_pipeline(g: &Graph) -> Duration {
    let start = Instant::now();
    let tree = decompose(g);
    let kernel = kernelize(g, 2, 10);
    let t = start.elapsed();
    assert!(!tree.is_empty() && !matches!(kernel.status, KernelStatus::No(_)));
    t
}

fn criterion_10() -> Outcome {
    // Runs alternate between the two sizes so that background load hits both
    // alike; each size keeps its best of five.
    let (g1, g2) = (planted_instance(100_000), planted_instance(200_000));
    let (mut t1, mut t2) = (Duration::MAX, Duration::MAX);
    for _ in 0..5 {
        t1 = t1.min(time_pipeline(&g1));
        t2 = t2.min(time_pipeline(&g2));
    }
    let ratio = t2.as_secs_f64() / t1.as_secs_f64();
    outcome(
        t1 <= Duration::from_secs(10) && ratio <= 2.5,
        format!(
            "n={} m={}: {t1:.2?}; n={} m={}: {t2:.2?}; ratio {ratio:.2}",
            g1.n(),
            g1.m(),
            g2.n(),
            g2.m()
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    // Libtest passes flags such as --nocapture or a name filter; this
    // harness always runs everything.
    let sample = oracle_sample();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "recognition equals forbidden-subgraph scan",
            Box::new(criterion_1),
        ),
        (
            "modular decomposition equals brute force",
            Box::new(criterion_2),
        ),
        ("single-edit quotient growth bounds", Box::new(criterion_3)),
        (
            "quotient size bounds on yes-instances",
            Box::new(criterion_4),
        ),
        (
            "kernel soundness and size bound",
            Box::new(|| criterion_5(&sample)),
        ),
        (
            "solver agrees with oracle",
            Box::new(|| criterion_6(&sample)),
        ),
        ("gadget optimum ratio", Box::new(criterion_7)),
        ("l-partite optimum identity", Box::new(criterion_8)),
        ("weighted quotient equivalence", Box::new(criterion_9)),
        ("near-linear kernelization time", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {}: {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
