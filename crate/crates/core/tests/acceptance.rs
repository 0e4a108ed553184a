//! Acceptance suite. Runs every criterion, prints one PASS / FAIL / SKIP
//! line per criterion, and exits non-zero if any criterion fails.
//!
//! `cargo test --test acceptance -- <substring>` runs only the criteria
//! whose name contains the substring.

use std::collections::HashSet;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::panic;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use recol::bounds::{degeneracy_color, dsatur_color, find_clique, CliqueSearchParams};
use recol::io::parse_graph;
use recol::oracle::{
    brute_force_chromatic, brute_force_coloring, brute_force_max_clique, verify_coloring,
};
use recol::reduce::{reconstruct, Reducer, ReductionConfig, ReductionEvent, ReductionTrace};
use recol::{generators, solve, Coloring, Deadline, Graph, SolverConfig, SubgraphView, Vertex};

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Criterion = (&'static str, fn() -> Verdict);

const CRITERIA: [Criterion; 8] = [
    ("reduction-exactness", reduction_exactness),
    ("properness", properness),
    ("small-instance-quality", small_instance_quality),
    ("mutual-domination-safety", mutual_domination_safety),
    ("determinism-and-protocol", determinism_and_protocol),
    ("bound-soundness", bound_soundness),
    ("dataset-spot-checks", dataset_spot_checks),
    ("throughput", throughput),
];

fn main() {
    let filters: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        if !filters.is_empty() && !filters.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let verdict = panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::Fail(format!("panicked: {msg}"))
        });
        let (tag, detail) = match verdict {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Skip(d) => ("SKIP", d),
        };
        println!(
            "{tag} {} {name}: {detail} [{:.1}s]",
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn quick_config(seed: u64, limit: Duration, max_rounds: u64) -> SolverConfig {
    SolverConfig {
        time_limit: limit,
        seed,
        max_rounds: Some(max_rounds),
        ..SolverConfig::default()
    }
}

/// Vertices removed by one event, in no particular order.
fn removed_by(event: &ReductionEvent) -> Vec<Vertex> {
    match event {
        ReductionEvent::DegreeRemoved { u, .. } | ReductionEvent::Dominated { u, .. } => vec![*u],
        ReductionEvent::Crown2 { pair_a, pair_b } => vec![pair_a.0, pair_a.1, pair_b.0, pair_b.1],
        ReductionEvent::Crown1 { members }
        | ReductionEvent::IndepClass { members }
        | ReductionEvent::ExtractedClass { members } => members.clone(),
    }
}

fn reduction_exactness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut graphs = 0;
    let mut reduced = 0;
    let mut failures = Vec::new();
    for n in 3..=10 {
        for tenth in 1..=9 {
            for _ in 0..15 {
                let g = generators::gnp(n, tenth as f64 / 10.0, &mut rng);
                let omega = brute_force_max_clique(&g).unwrap();
                let chi = brute_force_chromatic(&g).unwrap();

                let mut view = SubgraphView::new(&g);
                let mut trace = ReductionTrace::new();
                let mut reducer = Reducer::new(ReductionConfig::default(), Deadline::NONE);
                reducer.run_fixpoint(&mut view, omega, &mut trace);
                if !trace.is_empty() {
                    reduced += 1;
                }

                let (kernel_graph, ids) = view.to_induced_graph();
                let mut assignment = vec![None; n];
                if kernel_graph.num_vertices() > 0 {
                    let kc = brute_force_coloring(&kernel_graph).unwrap();
                    for (i, &v) in ids.iter().enumerate() {
                        assignment[v] = kc.color(i);
                    }
                }
                let kernel = Coloring::from_assignment(&assignment);
                match reconstruct(&g, trace.events(), &kernel) {
                    Ok(c) if verify_coloring(&g, &c) && c.num_colors() == chi => {}
                    Ok(c) => failures.push(format!(
                        "n={n} edges={:?}: {} colors, χ={chi}",
                        g.edges().collect::<Vec<_>>(),
                        c.num_colors()
                    )),
                    Err(e) => failures.push(format!("n={n}: {e}")),
                }
                graphs += 1;
            }
        }
    }
    let detail = format!(
        "{graphs} graphs, {reduced} reduced, {} mismatches",
        failures.len()
    );
    match failures.first() {
        None => Verdict::Pass(detail),
        Some(f) => Verdict::Fail(format!("{detail}; first: {f}")),
    }
}

fn structured_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=20 {
        out.push((format!("P{n}"), generators::path(n)));
        out.push((format!("K{n}"), generators::complete(n)));
    }
    for n in 3..=21 {
        out.push((format!("C{n}"), generators::cycle(n)));
    }
    for (a, b) in [(1, 1), (1, 5), (3, 3), (4, 7), (10, 10)] {
        out.push((format!("K{a},{b}"), generators::complete_bipartite(a, b)));
    }
    out.push(("petersen".into(), generators::petersen()));
    let m3 = generators::mycielski(&generators::complete(2));
    let m4 = generators::mycielski(&m3);
    let m5 = generators::mycielski(&m4);
    out.push(("mycielski-3".into(), m3));
    out.push(("mycielski-4".into(), m4));
    out.push(("mycielski-5".into(), m5));
    out
}

fn properness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut corpus = structured_corpus();
    for i in 0..150 {
        let n = rng.gen_range(1..=200);
        let g = if i % 3 == 0 {
            generators::gnm(n, rng.gen_range(0..=3 * n), &mut rng)
        } else {
            generators::gnp(n, rng.gen_range(0.01..0.6), &mut rng)
        };
        corpus.push((format!("random-{i}"), g));
    }
    let mut bad = Vec::new();
    let mut solves = 0;
    for (i, (name, g)) in corpus.iter().enumerate() {
        let r = match solve(g, &quick_config(i as u64 % 10, Duration::from_secs(5), 10)) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{name}: {e}"));
                continue;
            }
        };
        solves += 1;
        if !verify_coloring(g, &r.best_coloring) || r.best_coloring.num_colors() != r.ans {
            bad.push(format!("{name}: improper {}-coloring", r.ans));
        }
    }
    let detail = format!(
        "{solves} solves over {} graphs, {} improper",
        corpus.len(),
        bad.len()
    );
    match bad.first() {
        None => Verdict::Pass(detail),
        Some(f) => Verdict::Fail(format!("{detail}; first: {f}")),
    }
}

fn small_instance_quality() -> Verdict {
    // Rounds on graphs this small take microseconds; the round cap keeps the
    // suite fast and can only make the solver weaker than the 5 s budget.
    let config = |seed| quick_config(seed, Duration::from_secs(5), 300);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);

    let mut random_runs = 0;
    let mut random_hits = 0;
    for _ in 0..120 {
        let n = rng.gen_range(1..=12);
        let g = generators::gnp(n, rng.gen_range(1..=9) as f64 / 10.0, &mut rng);
        let chi = brute_force_chromatic(&g).unwrap();
        for seed in 0..10 {
            random_runs += 1;
            if solve(&g, &config(seed)).unwrap().ans == chi {
                random_hits += 1;
            }
        }
    }

    let mut exact: Vec<(String, Graph, usize)> = Vec::new();
    for n in 1..=12 {
        exact.push((format!("K{n}"), generators::complete(n), n));
    }
    for k in 2..=10 {
        exact.push((format!("C{}", 2 * k), generators::cycle(2 * k), 2));
        exact.push((format!("C{}", 2 * k + 1), generators::cycle(2 * k + 1), 3));
    }
    exact.push(("C3".into(), generators::cycle(3), 3));
    for i in 0..20 {
        let n = rng.gen_range(2..=60);
        exact.push((format!("tree-{i}"), generators::random_tree(n, &mut rng), 2));
    }
    exact.push(("petersen".into(), generators::petersen(), 3));

    let mut misses = Vec::new();
    for (name, g, chi) in &exact {
        for seed in 0..10 {
            let ans = solve(g, &config(seed)).unwrap().ans;
            if ans != *chi {
                misses.push(format!("{name} seed {seed}: {ans} ≠ {chi}"));
            }
        }
    }
    let rate = random_hits as f64 / random_runs as f64;
    let detail = format!(
        "random n≤12: {random_hits}/{random_runs} = {:.1}% optimal (need ≥95%); structured: {} misses over {} runs",
        100.0 * rate,
        misses.len(),
        exact.len() * 10
    );
    match misses.first() {
        Some(m) => Verdict::Fail(format!("{detail}; first: {m}")),
        None => verdict(rate >= 0.95, detail),
    }
}

/// Replays `events` on `g`, checking that every dominated vertex and its
/// dominator are alive at that point and that the live neighborhood of the
/// removed vertex is contained in the dominator's.
fn check_domination(g: &Graph, events: &[ReductionEvent]) -> Result<usize, String> {
    let mut alive = vec![true; g.num_vertices()];
    let mut count = 0;
    for e in events {
        if let ReductionEvent::Dominated { u, v } = *e {
            if !alive[u] || !alive[v] || u == v {
                return Err(format!(
                    "Dominated {{ u: {u}, v: {v} }} with a dead or equal endpoint"
                ));
            }
            if g.neighbors(u)
                .iter()
                .any(|&w| alive[w] && !g.has_edge(v, w))
            {
                return Err(format!("{v} does not dominate {u}"));
            }
            count += 1;
        }
        for w in removed_by(e) {
            if !alive[w] {
                return Err(format!("vertex {w} removed twice"));
            }
            alive[w] = false;
        }
    }
    Ok(count)
}

/// Adds `copies` vertices, each a false twin of a random existing vertex.
fn with_twins<R: Rng>(g: &Graph, copies: usize, rng: &mut R) -> (Graph, Vec<(Vertex, Vertex)>) {
    let n = g.num_vertices();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut pairs = Vec::new();
    for i in 0..copies {
        let src = rng.gen_range(0..n);
        let twin = n + i;
        edges.extend(g.neighbors(src).iter().map(|&w| (w, twin)));
        pairs.push((src, twin));
    }
    (Graph::from_edges(n + copies, edges).unwrap(), pairs)
}

fn mutual_domination_safety() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut cases: Vec<(Graph, Vec<(Vertex, Vertex)>)> = Vec::new();
    // P3 and a chain of P3s joined end to end
    cases.push((generators::path(3), vec![(0, 2)]));
    let chain = Graph::from_edges(9, (0..8).map(|i| (i, i + 1))).unwrap();
    cases.push((chain, vec![]));
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=30);
        let base = generators::gnp(n, rng.gen_range(0.05..0.7), &mut rng);
        let copies = rng.gen_range(1..=4);
        cases.push(with_twins(&base, copies, &mut rng));
    }

    let mut dominated = 0;
    let mut twin_pairs = 0;
    for (i, (g, pairs)) in cases.iter().enumerate() {
        // once with a trivial bound so only the structural rules act, once
        // with the clique bound the driver would use
        let lb = find_clique(
            &SubgraphView::new(g),
            0,
            0,
            &CliqueSearchParams::default(),
            &mut rng,
            Deadline::NONE,
        )
        .lb;
        for local_lb in [1, lb] {
            let mut view = SubgraphView::new(g);
            let mut trace = ReductionTrace::new();
            Reducer::new(ReductionConfig::default(), Deadline::NONE)
                .run_fixpoint(&mut view, local_lb, &mut trace);
            match check_domination(g, trace.events()) {
                Ok(c) => dominated += c,
                Err(e) => return Verdict::Fail(format!("case {i}: {e}")),
            }
            let dom: HashSet<(Vertex, Vertex)> = trace
                .events()
                .iter()
                .filter_map(|e| match *e {
                    ReductionEvent::Dominated { u, v } => Some((u, v)),
                    _ => None,
                })
                .collect();
            for &(a, b) in pairs {
                twin_pairs += 1;
                if dom.contains(&(a, b)) && dom.contains(&(b, a)) {
                    return Verdict::Fail(format!(
                        "case {i}: twins {a} and {b} removed each other"
                    ));
                }
            }
        }
        // the full solver must still produce a proper coloring
        if i % 50 == 0 {
            let r = solve(g, &quick_config(i as u64, Duration::from_secs(5), 5)).unwrap();
            if !verify_coloring(g, &r.best_coloring) {
                return Verdict::Fail(format!("case {i}: improper solver output"));
            }
        }
    }
    Verdict::Pass(format!(
        "{} graphs, {dominated} Dominated events replayed, {twin_pairs} injected twin pairs, no mutual removal",
        cases.len()
    ))
}

fn write_edge_list(path: &Path, g: &Graph) {
    let mut out = BufWriter::new(File::create(path).unwrap());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out.flush().unwrap();
}

fn run_cli(args: &[&str]) -> (std::process::Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_recol"))
        .args(args)
        .output()
        .unwrap();
    (out, start.elapsed())
}

fn determinism_and_protocol() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut instances: Vec<(String, Graph)> = vec![
        ("k4".into(), generators::complete(4)),
        ("petersen".into(), generators::petersen()),
    ];
    for i in 0..3 {
        instances.push((format!("gnp-{i}"), generators::gnp(150, 0.08, &mut rng)));
    }
    let mut notes = Vec::new();

    for (name, g) in &instances {
        let input = dir.path().join(format!("{name}.txt"));
        write_edge_list(&input, g);
        let input = input.to_str().unwrap();
        let mut docs = Vec::new();
        for rep in 0..2 {
            let stats = dir.path().join(format!("{name}-{rep}.json"));
            let (out, _) = run_cli(&[
                input,
                "--seeds",
                "0..9",
                "--time-limit",
                "5",
                "--max-rounds",
                "20",
                "--no-timing",
                "--stats",
                stats.to_str().unwrap(),
            ]);
            if !out.status.success() {
                return Verdict::Fail(format!(
                    "{name}: exit {:?}: {}",
                    out.status,
                    String::from_utf8_lossy(&out.stderr)
                ));
            }
            docs.push((
                fs::read_to_string(&stats).unwrap(),
                String::from_utf8(out.stdout).unwrap(),
            ));
        }
        if docs[0] != docs[1] {
            return Verdict::Fail(format!(
                "{name}: stats differ between identical invocations"
            ));
        }
        let doc: Value = serde_json::from_str(&docs[0].0).unwrap();
        let answers: Vec<u64> = doc["runs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["ans"].as_u64().unwrap())
            .collect();
        let seeds: Vec<u64> = doc["runs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["seed"].as_u64().unwrap())
            .collect();
        if seeds != (0..10).collect::<Vec<_>>() {
            return Verdict::Fail(format!("{name}: seeds {seeds:?}"));
        }
        let min = *answers.iter().min().unwrap();
        let avg = answers.iter().sum::<u64>() as f64 / 10.0;
        let hit = answers.iter().filter(|&&a| a == min).count() as u64;
        let s = &doc["summary"];
        if s["min"].as_u64() != Some(min)
            || s["avg"].as_f64() != Some(avg)
            || s["hit"].as_u64() != Some(hit)
        {
            return Verdict::Fail(format!(
                "{name}: summary {s} disagrees with runs {answers:?}"
            ));
        }
        let row = format!(
            "{name}.txt\t{}\t{}\t{min}\t{avg:.1}\t{hit}\n",
            g.num_vertices(),
            g.num_edges()
        );
        if docs[0].1 != row {
            return Verdict::Fail(format!(
                "{name}: summary row {:?}, expected {row:?}",
                docs[0].1
            ));
        }
        notes.push(format!("{name} {min}/{avg:.1}/{hit}"));
    }

    // wall-clock budget: instances that never certify optimality run until
    // the deadline
    let mut overruns = Vec::new();
    let mut max_over = 0.0f64;
    let mut budget_cases: Vec<(String, Graph)> = vec![("petersen".into(), generators::petersen())];
    budget_cases.push(("gnm-20k".into(), generators::gnm(20_000, 100_000, &mut rng)));
    for (name, g) in &budget_cases {
        let input = dir.path().join(format!("{name}-budget.txt"));
        write_edge_list(&input, g);
        for seed in 0..3 {
            let (out, wall) = run_cli(&[
                input.to_str().unwrap(),
                "--time-limit",
                "1",
                "--seed",
                &seed.to_string(),
            ]);
            if !out.status.success() {
                return Verdict::Fail(format!("{name}: exit {:?}", out.status));
            }
            // process start and file parsing are included in `wall`
            let over = wall.as_secs_f64() - 1.0;
            max_over = max_over.max(over);
            if over > 0.5 {
                overruns.push(format!("{name} seed {seed}: {:.2}s", wall.as_secs_f64()));
            }
        }
    }
    let detail = format!(
        "identical stats on repeat; summaries {}; worst overrun past a 1 s budget {:.3}s",
        notes.join(", "),
        max_over
    );
    verdict(
        overruns.is_empty(),
        if overruns.is_empty() {
            detail
        } else {
            format!("{detail}; {}", overruns.join(", "))
        },
    )
}

/// Degeneracy by repeatedly deleting a minimum-degree vertex, O(n²).
fn naive_degeneracy(g: &Graph, alive: &[bool]) -> usize {
    let n = g.num_vertices();
    let mut alive = alive.to_vec();
    let mut deg: Vec<usize> = (0..n)
        .map(|u| g.neighbors(u).iter().filter(|&&w| alive[w]).count())
        .collect();
    let mut best = 0;
    while let Some(u) = (0..n).filter(|&u| alive[u]).min_by_key(|&u| deg[u]) {
        best = best.max(deg[u]);
        alive[u] = false;
        for &w in g.neighbors(u) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

fn bound_soundness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let params = CliqueSearchParams::default();
    let mut checked = 0;
    for i in 0..1000 {
        let n = rng.gen_range(1..=14);
        let g = generators::gnp(n, rng.gen_range(0.05..0.95), &mut rng);
        let mut view = SubgraphView::new(&g);
        // every other graph is checked on a partially deleted view
        if i % 2 == 1 {
            for u in 0..n {
                if view.alive_count() > 1 && rng.gen_bool(0.2) {
                    view.delete_vertex(u);
                }
            }
        }
        let (kernel, _) = view.to_induced_graph();
        let omega = brute_force_max_clique(&kernel).unwrap();
        let alive: Vec<bool> = (0..n).map(|u| view.is_alive(u)).collect();
        let usedcol = rng.gen_range(0..3);

        let c = find_clique(&view, 0, usedcol, &params, &mut rng, Deadline::NONE);
        if !view.is_clique(&c.witness)
            || c.lb - usedcol > omega
            || c.lb - usedcol != c.witness.len()
        {
            return Verdict::Fail(format!(
                "graph {i}: clique bound {} (usedcol {usedcol}) vs ω={omega}",
                c.lb
            ));
        }

        let ub = n + usedcol + 1;
        let proper_total = |col: &Option<Coloring>| {
            col.as_ref().is_some_and(|c| {
                c.is_proper_on(&g) && (0..n).all(|u| c.color(u).is_some() == alive[u])
            })
        };
        let d = degeneracy_color(&view, ub, usedcol, Deadline::NONE);
        let degen = naive_degeneracy(&g, &alive);
        if !proper_total(&d.coloring) || d.ub - usedcol > degen + 1 {
            return Verdict::Fail(format!(
                "graph {i}: degeneracy coloring with {} colors, degeneracy {degen}",
                d.ub - usedcol
            ));
        }
        let s = dsatur_color(&view, ub, usedcol, &mut rng, Deadline::NONE);
        if !proper_total(&s.coloring) {
            return Verdict::Fail(format!("graph {i}: dsatur coloring improper"));
        }
        checked += 1;
    }
    Verdict::Pass(format!("{checked} graphs: cliques valid and ≤ ω, degeneracy colorings ≤ degeneracy+1, both colorers proper"))
}

fn dataset_spot_checks() -> Verdict {
    let Some(dir) = std::env::var_os("RECOL_DATASET_DIR").map(PathBuf::from) else {
        return Verdict::Skip("set RECOL_DATASET_DIR to a directory holding web-Google.txt, Amazon0302.txt, ca-MathSciNet.edges".into());
    };
    let targets = [
        ("web-Google.txt", 44),
        ("Amazon0302.txt", 7),
        ("ca-MathSciNet.edges", 25),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    let mut found = 0;
    for (file, expected) in targets {
        let path = dir.join(file);
        if !path.exists() {
            notes.push(format!("{file} missing"));
            continue;
        }
        found += 1;
        let parsed = parse_graph(BufReader::new(File::open(&path).unwrap()), None).unwrap();
        let answers: Vec<usize> = (0..10)
            .map(|seed| {
                let config = SolverConfig {
                    seed,
                    ..SolverConfig::default()
                };
                solve(&parsed.graph, &config).unwrap().ans
            })
            .collect();
        let min = *answers.iter().min().unwrap();
        let hit = answers.iter().filter(|&&a| a == min).count();
        ok &= min <= expected + 1;
        notes.push(format!(
            "{file}: min {min} (expected {expected}, tolerance +1), #Hit {hit}"
        ));
    }
    if found == 0 {
        return Verdict::Skip(format!("no dataset files in {}", dir.display()));
    }
    verdict(ok, notes.join("; "))
}

fn throughput() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("million.txt");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    {
        // sparse graph with a skewed degree distribution: 10⁶ edge lines
        let n: u64 = 250_000;
        let mut out = BufWriter::new(File::create(&path).unwrap());
        writeln!(out, "# 1000000 edges").unwrap();
        for _ in 0..1_000_000 {
            let u = rng.gen_range(0..n);
            let hub = rng
                .gen_range(0..n)
                .min(rng.gen_range(0..n))
                .min(rng.gen_range(0..n));
            writeln!(out, "{} {}", u * 7919 % n, hub).unwrap();
        }
        out.flush().unwrap();
    }

    let start = Instant::now();
    let parsed = parse_graph(BufReader::new(File::open(&path).unwrap()), None).unwrap();
    let parse_time = start.elapsed();
    let g = &parsed.graph;

    let start = Instant::now();
    let mut view = SubgraphView::new(g);
    let clique = find_clique(
        &view,
        0,
        0,
        &CliqueSearchParams::default(),
        &mut rng,
        Deadline::NONE,
    );
    let upper = degeneracy_color(&view, g.num_vertices(), 0, Deadline::NONE);
    let mut trace = ReductionTrace::new();
    let summary = Reducer::new(ReductionConfig::default(), Deadline::NONE)
        .run_fixpoint(&mut view, clique.lb, &mut trace);
    let round_time = start.elapsed();

    let limit = Duration::from_secs(10);
    verdict(
        parse_time < limit && round_time < limit && summary.completed,
        format!(
            "n={} m={}: parse+build {:.2}s, bounds+fixpoint {:.2}s (lb {}, ub {}, removed {}), limit 10s each",
            g.num_vertices(),
            g.num_edges(),
            parse_time.as_secs_f64(),
            round_time.as_secs_f64(),
            clique.lb,
            upper.ub,
            summary.removed_total
        ),
    )
}
