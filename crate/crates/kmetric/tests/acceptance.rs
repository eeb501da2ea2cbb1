//! End-to-end acceptance suite. Each test prints one pass/fail line; a
//! failure also panics with detail.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kmetric::blockgraph;
use kmetric::blocks::block_decomposition;
use kmetric::dimension::{distinctive_set, metric_dimensionality};
use kmetric::distance::all_pairs_distances;
use kmetric::generate::{self, Fixture};
use kmetric::geodesic;
use kmetric::graph::Graph;
use kmetric::report::{analyze, AnalyzeOptions};
use kmetric::separator;
use kmetric::verify::{oracle_dimension, run_verify};

struct Criterion {
    id: u32,
    label: &'static str,
}

impl Criterion {
    fn new(id: u32, label: &'static str) -> Self {
        Criterion { id, label }
    }

    fn finish(self, ok: bool, detail: &str) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} — {}", self.id, self.label);
        assert!(ok, "criterion {} failed: {detail}", self.id);
    }
}

fn set(names: &[usize]) -> BTreeSet<usize> {
    names.iter().copied().collect()
}

/// Seeded connected random graph: tree skeleton plus extra edges.
fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let tree = generate::random_tree(n, seed).unwrap();
    let mut edges: Vec<(usize, usize)> = tree.edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn mixed_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for seed in 0..10 {
        corpus.push(generate::random_tree(5 + seed as usize, seed).unwrap());
    }
    for n in 3..=12 {
        corpus.push(generate::cycle(n).unwrap());
    }
    for n in 2..=8 {
        corpus.push(generate::complete(n).unwrap());
    }
    for seed in 0..10 {
        corpus.push(generate::random_block(3 + seed as usize % 5, 2, 4, seed).unwrap());
    }
    for seed in 0..50u64 {
        let n = 6 + (seed as usize * 7) % 20; // up to 25
        corpus.push(random_connected(n, 2 + seed as usize % 4, seed));
    }
    corpus.push(generate::fixture(Fixture::Fig1));
    corpus.push(generate::fixture(Fixture::Fig2));
    // K_4 with a pendant on every vertex: its pendant pairs have critical
    // separators of size 2 lying in a clique that excludes the pair
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push((i, j));
        }
        edges.push((i, 4 + i));
    }
    corpus.push(Graph::new(8, &edges).unwrap());
    corpus
}

#[test]
fn criterion_1_counterexample_fixture() {
    let c = Criterion::new(1, "seven-vertex counterexample: Dim = 3 and all 21 distinctive sets");
    let g = generate::fixture(Fixture::Fig2);
    let start = Instant::now();
    let dm = all_pairs_distances(&g);
    let dim = metric_dimensionality(&g, &dm).unwrap();

    // expected distinctive sets minus the pair itself, a..g = 0..6
    let expected: [((usize, usize), &[usize]); 21] = [
        ((0, 1), &[2, 3, 4, 5, 6]),
        ((0, 2), &[3, 4, 5, 6]),
        ((0, 3), &[2, 4, 5, 6]),
        ((0, 4), &[1, 3, 5, 6]),
        ((0, 5), &[1, 3, 4, 6]),
        ((0, 6), &[1, 2, 4, 5]), // printed source has a duplicate here; true set
        ((1, 2), &[0]),
        ((1, 3), &[0, 4, 5, 6]),
        ((1, 4), &[0, 2, 5, 6]),
        ((1, 5), &[0, 2, 4, 6]),
        ((1, 6), &[0, 2, 3, 5]),
        ((2, 3), &[4, 5, 6]),
        ((2, 4), &[0, 1, 5, 6]),
        ((2, 5), &[0, 1, 4, 6]),
        ((2, 6), &[0, 1, 3, 5]),
        ((3, 4), &[0, 1, 2]),
        ((3, 5), &[0, 1, 2, 6]),
        ((3, 6), &[0, 1, 2, 4]),
        ((4, 5), &[6]),
        ((4, 6), &[0, 1, 2, 3]),
        ((5, 6), &[0, 1, 2, 3, 4]),
    ];
    let mut ok = dim.k == 3;
    let mut detail = format!("dim = {}", dim.k);
    for ((x, y), rest) in expected {
        let d = distinctive_set(&g, &dm, x, y).unwrap();
        let got: BTreeSet<usize> = d
            .members
            .iter()
            .copied()
            .filter(|&z| z != x && z != y)
            .collect();
        if got != set(rest) {
            ok = false;
            detail = format!("pair ({x},{y}): got {got:?}, want {rest:?}");
            break;
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_millis(1) {
        ok = false;
        detail = format!("runtime {elapsed:?} >= 1ms");
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_2_gap_fixture() {
    let c = Criterion::new(2, "twelve-vertex example: A = Dim = mu = eta = 2, sigma = 4");
    let g = generate::fixture(Fixture::Fig1);
    let start = Instant::now();
    let dm = all_pairs_distances(&g);
    let dim = metric_dimensionality(&g, &dm).unwrap().k;
    let a = geodesic::shortest_maximal_geodesic(&g, &dm).unwrap().a;
    let mu = separator::mu(&g, &dm).mu;
    let eta = kmetric::boundary::eta(&g, &dm).eta;
    let sigma = geodesic::landmark_structure(&g, &dm).unwrap().sigma;
    let elapsed = start.elapsed();
    let ok = a == 2
        && dim == 2
        && mu == Some(2)
        && eta == Some(2)
        && sigma == Some(4)
        && elapsed < Duration::from_millis(10);
    c.finish(
        ok,
        &format!("A={a} dim={dim} mu={mu:?} eta={eta:?} sigma={sigma:?} in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_elementary_families() {
    let c = Criterion::new(3, "complete graphs Dim = 2, paths Dim = n-1");
    let mut ok = true;
    let mut detail = String::new();
    for n in 2..=10 {
        let g = generate::complete(n).unwrap();
        let dm = all_pairs_distances(&g);
        let k = metric_dimensionality(&g, &dm).unwrap().k;
        if k != 2 {
            ok = false;
            detail = format!("K_{n}: dim {k}");
        }
    }
    // P_2 = K_2, so the n-1 formula starts at n = 3
    for n in 2..=12 {
        let g = generate::path(n).unwrap();
        let dm = all_pairs_distances(&g);
        let k = metric_dimensionality(&g, &dm).unwrap().k;
        let want = if n == 2 { 2 } else { n - 1 };
        if k != want {
            ok = false;
            detail = format!("P_{n}: dim {k}, want {want}");
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_4_trees() {
    let c = Criterion::new(4, "100 random non-path trees: Dim = sigma");
    let start = Instant::now();
    let mut checked = 0;
    let mut seed = 0u64;
    let mut ok = true;
    let mut detail = String::new();
    while checked < 100 {
        let n = 5 + (seed as usize * 11) % 36; // up to 40
        let g = generate::random_tree(n, seed).unwrap();
        seed += 1;
        if g.is_path_graph() {
            continue;
        }
        let dm = all_pairs_distances(&g);
        let dim = metric_dimensionality(&g, &dm).unwrap().k;
        let sigma = geodesic::landmark_structure(&g, &dm).unwrap().sigma;
        if sigma != Some(dim) {
            ok = false;
            detail = format!("seed {}: dim {dim}, sigma {sigma:?}", seed - 1);
            break;
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        ok = false;
        detail = format!("runtime {elapsed:?} >= 10s");
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_5_block_graph_pipeline() {
    let c = Criterion::new(
        5,
        "100 glued-clique block graphs: Dim = mu = mu_1 = fast path, 2-dim classification exact",
    );
    let start = Instant::now();
    let mut checked = 0;
    let mut seed = 0u64;
    let mut ok = true;
    let mut detail = String::new();
    while checked < 100 && ok {
        let t = 3 + (seed as usize * 5) % 11; // worst case 1 + 13*3 = 40 vertices
        let g = generate::random_block(t, 2, 4, seed).unwrap();
        seed += 1;
        if g.is_complete() || g.is_path_graph() {
            continue;
        }
        let dm = all_pairs_distances(&g);
        let dec = block_decomposition(&g).unwrap();
        let brute = oracle_dimension(&g);
        let mu = separator::mu(&g, &dm).mu;
        let mu1 = separator::mu_sweep(&g, &dm, 1..=1).mu;
        let structure = blockgraph::three_cut_structure(&g, &dm, &dec).unwrap();
        let fast = blockgraph::fast_mu(&g, &dm, &structure).unwrap().mu;
        let report = blockgraph::classify(&g, &dm, &dec).unwrap();
        let two_dim = blockgraph::is_two_dimensional(&report);
        if mu != Some(brute) || mu1 != Some(brute) || fast != Some(brute) {
            ok = false;
            detail = format!(
                "seed {}: brute {brute}, mu {mu:?}, mu1 {mu1:?}, fast {fast:?}",
                seed - 1
            );
        } else if two_dim != (brute == 2) {
            ok = false;
            detail = format!("seed {}: dim {brute}, two_dim {two_dim}", seed - 1);
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        ok = false;
        detail = format!("runtime {elapsed:?} >= 60s");
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_6_bound_suite() {
    let c = Criterion::new(6, "bound inequalities across the mixed corpus");
    let corpus = mixed_corpus();
    let report = run_verify(&corpus, 0).unwrap();
    let wanted = [
        "dim_oracle_equality",
        "a_le_dim",
        "dim_le_sigma",
        "dim_le_eta",
        "dim_le_mu",
        "mu_le_sigma",
        "diam_lower_bound",
        "eta_equality_when_tight",
        "eta_ge_mu",
    ];
    let mut ok = true;
    let mut detail = String::new();
    for id in wanted {
        let check = report.checks.iter().find(|c| c.id == id).unwrap();
        if !check.conclusion_held {
            ok = false;
            detail = format!("{id}: {:?}", check.counterexample);
            break;
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_7_separator_oracle() {
    let c = Criterion::new(7, "sphere-intersection separators match the subset oracle");
    let corpus: Vec<Graph> = mixed_corpus()
        .into_iter()
        .filter(|g| g.vertex_count() <= 10)
        .collect();
    assert!(!corpus.is_empty());
    let report = run_verify(&corpus, 10).unwrap();
    let check = report
        .checks
        .iter()
        .find(|c| c.id == "separator_subset_oracle")
        .unwrap();
    c.finish(
        check.premise_held && check.conclusion_held,
        &format!("{check:?}"),
    );
}

#[test]
fn criterion_8_lemma_suite() {
    let c = Criterion::new(8, "boundary and separator lemmas across the corpus");
    let corpus = mixed_corpus();
    let report = run_verify(&corpus, 0).unwrap();
    let wanted = [
        "boundary_outside_equidistant",
        "far_components_equidistant",
        "critical_separator_clique",
        "enclosing_clique_size",
    ];
    let mut ok = true;
    let mut detail = String::new();
    for id in wanted {
        let check = report.checks.iter().find(|c| c.id == id).unwrap();
        if !(check.premise_held && check.conclusion_held) {
            ok = false;
            detail = format!("{id}: {check:?}");
            break;
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_9_performance() {
    let c = Criterion::new(9, "200-vertex block graph: full analyze < 5s, fast path < 0.5s");
    let g = generate::random_block(80, 2, 5, 7).unwrap();
    let n = g.vertex_count();
    assert!((150..=320).contains(&n), "unexpected size {n}");

    let start = Instant::now();
    let full = analyze(&g, AnalyzeOptions { fast_block_only: false }).unwrap();
    let full_time = start.elapsed();

    let start = Instant::now();
    let fast = analyze(&g, AnalyzeOptions { fast_block_only: true }).unwrap();
    let fast_time = start.elapsed();

    let ok = full.dim == fast.dim
        && full_time < Duration::from_secs(5)
        && fast_time < Duration::from_millis(500);
    c.finish(
        ok,
        &format!(
            "n={n} dim full {} / fast {}, full {full_time:?}, fast {fast_time:?}",
            full.dim, fast.dim
        ),
    );
}
