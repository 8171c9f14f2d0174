//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Timing checks in criterion 7 only warn.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trapezoid::batch::{self, median_ns, run_bench, Algorithm, BenchConfig};
use trapezoid::connectivity::{min_nxy_for_x, BoundaryArrays, SweepState};
use trapezoid::mbit::Value;
use trapezoid::oracle::{
    chordless_cycle, kappa_bruteforce, kappa_cutline_bruteforce, kappa_flow, kappa_subsets,
    naive_min_prefix_model, PrefixOp,
};
use trapezoid::structure::{
    caterpillar_to_diagram, has_triangle, is_bipartite, is_caterpillar, random_caterpillar,
    CaterpillarRefusal, OddCycle,
};
use trapezoid::{kappa_fast, kappa_quadratic, IntersectionGraph, MinPrefixTree, TrapezoidDiagram, WitnessMode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn first_error(results: Vec<Result<(), String>>) -> Result<(), String> {
    results.into_iter().collect::<Result<Vec<()>, String>>().map(|_| ())
}

// 1. Prefix tree against the plain array model.
fn mbit_equivalence() -> Outcome {
    let start = Instant::now();

    let mut t = MinPrefixTree::new(14).unwrap();
    let before = t.clone();
    t.update(6, 3);
    let touched: Vec<usize> = (1..=t.node_count()).filter(|&p| t.node(p) != before.node(p)).collect();
    check(touched == [1, 2, 5, 10, 21], || format!("update path {touched:?}"))?;
    let cover: Vec<usize> = t.cover(13).collect();
    check(cover == [2, 6, 28], || format!("cover of 13 is {cover:?}"))?;

    let sizes = [1usize, 2, 15, 16, 17, 1000];
    let trials: Vec<(usize, u64)> = sizes.iter().flat_map(|&n| (0..100).map(move |s| (n, s))).collect();
    let results = batch::map(&trials, |&(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + n as u64);
        let big = (n * n) as Value + 1;
        let ops: Vec<PrefixOp> = (0..10_000)
            .map(|_| {
                let i = rng.gen_range(1..=n);
                match rng.gen_range(0..3) {
                    0 if seed % 2 == 0 => PrefixOp::Update(i, [-big, -1, 0, 1][rng.gen_range(0..4)]),
                    0 => PrefixOp::Update(i, rng.gen_range(-big..=big)),
                    1 => PrefixOp::PrefixSum(i),
                    _ => PrefixOp::MinPrefix(i),
                }
            })
            .collect();
        let mut tree = MinPrefixTree::new(n).unwrap();
        let got: Vec<Value> = ops
            .iter()
            .filter_map(|&op| match op {
                PrefixOp::Update(i, v) => {
                    tree.update(i, v);
                    None
                }
                PrefixOp::PrefixSum(i) => Some(tree.prefix_sum(i)),
                PrefixOp::MinPrefix(i) => Some(tree.min_prefix(i)),
            })
            .collect();
        check(got == naive_min_prefix_model(n, &ops), || format!("mismatch at n = {n}, trial {seed}"))
    });
    first_error(results)?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{} trials x 10^4 ops, exact, {:.2?}", trials.len(), start.elapsed()))
}

// 2 and 3 share the small corpus.
fn small_corpus() -> Vec<(usize, u64)> {
    common::corpus(10_000, 10, 1)
}

// 2. fast = quadratic = graph oracle.
fn three_way_equivalence() -> Outcome {
    let start = Instant::now();
    let small = batch::map(&small_corpus(), |&(n, seed)| {
        let dg = TrapezoidDiagram::random(n, seed);
        let g = dg.intersection_graph();
        let (flow, subsets) = (kappa_flow(&g), kappa_subsets(&g));
        let fast = kappa_fast(&dg, WitnessMode::Skip).kappa;
        let quadratic = kappa_quadratic(&dg, WitnessMode::Skip).kappa;
        check(flow == subsets && fast == quadratic && fast == flow, || {
            format!("n = {n}, seed = {seed}: fast {fast}, quadratic {quadratic}, flow {flow}, subsets {subsets}")
        })
    });
    first_error(small)?;
    let medium = batch::map(&common::corpus(1000, 60, 2), |&(n, seed)| {
        let dg = TrapezoidDiagram::random(n, seed);
        let flow = kappa_flow(&dg.intersection_graph());
        let fast = kappa_fast(&dg, WitnessMode::Skip).kappa;
        let quadratic = kappa_quadratic(&dg, WitnessMode::Skip).kappa;
        check(fast == quadratic && fast == flow, || {
            format!("n = {n}, seed = {seed}: fast {fast}, quadratic {quadratic}, flow {flow}")
        })
    });
    first_error(medium)?;
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("10^4 (n <= 10) + 10^3 (n <= 60) diagrams, exact, {:.2?}", start.elapsed()))
}

// 3. Cut-line minimum equals graph connectivity.
fn cut_line_characterization() -> Outcome {
    let start = Instant::now();
    let results = batch::map(&small_corpus(), |&(n, seed)| {
        let dg = TrapezoidDiagram::random(n, seed);
        let lines = kappa_cutline_bruteforce(&dg);
        let graph = kappa_bruteforce(&dg.intersection_graph());
        check(lines == graph, || format!("n = {n}, seed = {seed}: lines {lines}, graph {graph}"))
    });
    first_error(results)?;
    Ok(format!("10^4 diagrams (n <= 10), exact, {:.2?}", start.elapsed()))
}

// 4. Committed eight-trapezoid reference diagram.
fn reference_fixture() -> Outcome {
    let dg = common::fixture("two_connected_8.txt");
    let pi = dg.point_index();
    let bounds = BoundaryArrays::new(&dg, &pi);
    let leftmost = bounds.leftmost_signed();
    let rightmost = bounds.rightmost_signed();
    check(leftmost == [-1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], || format!("leftmost {leftmost:?}"))?;
    check(rightmost == [7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, -1, -1, -1], || format!("rightmost {rightmost:?}"))?;
    let state = SweepState::at(&dg, &pi, 11);
    check((state.left(), state.right()) == (5, 2), || {
        format!("left {}, right {} at x = 11", state.left(), state.right())
    })?;
    let at_eleven = min_nxy_for_x(&dg, &pi, &bounds, &state).map(|(v, _)| v);
    check(at_eleven == Some(2), || format!("min N(11, y) = {at_eleven:?}"))?;
    let kappas = [
        kappa_fast(&dg, WitnessMode::Skip).kappa,
        kappa_quadratic(&dg, WitnessMode::Skip).kappa,
        kappa_bruteforce(&dg.intersection_graph()),
    ];
    check(kappas == [2, 2, 2], || format!("fast/quadratic/oracle = {kappas:?}"))?;
    Ok("kappa = 2 by all three, boundary rows and x = 11 scan exact".into())
}

// 5. Two-colourable exactly when triangle-free.
fn bipartite_iff_triangle_free() -> Outcome {
    let start = Instant::now();
    let results = batch::map(&common::corpus(10_000, 60, 5), |&(n, seed)| {
        let g = TrapezoidDiagram::random(n, seed).intersection_graph();
        let colouring = is_bipartite(&g);
        let triangle = has_triangle(&g);
        check(colouring.is_ok() == triangle.is_none(), || format!("n = {n}, seed = {seed}"))?;
        if let Err(OddCycle(cycle)) = &colouring {
            let closed = (0..cycle.len()).all(|k| g.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]));
            check(cycle.len() % 2 == 1 && closed, || format!("bad odd cycle {cycle:?}"))?;
        }
        if let Some((i, j, k)) = triangle {
            check(g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k), || {
                format!("bad triangle ({i}, {j}, {k})")
            })?;
        }
        Ok(())
    });
    first_error(results)?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("10^4 diagrams (n <= 60), exact, {:.2?}", start.elapsed()))
}

// 6. Trees are caterpillars, caterpillars have diagrams.
fn caterpillar_trees() -> Outcome {
    let seeds: Vec<u64> = (0..1000).collect();
    let round_trips = batch::map(&seeds, |&seed| {
        let n = 1 + (seed as usize * 7919) % 200;
        let g = random_caterpillar(n, seed);
        let cd = is_caterpillar(&g).map_err(|r| format!("generated caterpillar refused: {r}"))?;
        let h = caterpillar_to_diagram(&cd).intersection_graph();
        check(h == g, || format!("round trip changed the graph, seed = {seed}"))
    });
    first_error(round_trips)?;

    let samples: Vec<u64> = (0..5000).collect();
    let trees = batch::map(&samples, |&seed| {
        let n = 2 + seed as usize % 20;
        let dg = if seed % 5 == 0 {
            TrapezoidDiagram::random(n, seed)
        } else {
            common::sparse_diagram(n, seed)
        };
        let g = dg.intersection_graph();
        let is_tree = g.m() + 1 == g.n() && g.is_connected();
        if is_tree && is_caterpillar(&g).is_err() {
            return Err(format!("tree diagram rejected, seed = {seed}"));
        }
        Ok(is_tree)
    });
    let mut tree_count = 0;
    for t in trees {
        tree_count += t? as usize;
    }
    check(tree_count > 0, || "no tree-shaped diagrams sampled".into())?;

    let spider = IntersectionGraph::from_edges(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]);
    let verdict = is_caterpillar(&spider);
    check(verdict == Err(CaterpillarRefusal::NotACaterpillar), || format!("spider: {verdict:?}"))?;
    Ok(format!("10^3 round trips, {tree_count} sampled trees accepted, spider rejected"))
}

// 7. Scaling of both sweeps; the agreement check inside the bench is hard.
fn complexity_evidence() -> Outcome {
    let sizes: Vec<usize> = (12..=15).map(|p| 1usize << p).collect();
    let config = BenchConfig {
        sizes: sizes.clone(),
        seeds_per_size: 3,
        algorithms: vec![Algorithm::Fast, Algorithm::Quadratic],
        parallel: false,
    };
    let records = run_bench(&config).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    let mut warnings = Vec::new();
    for pair in sizes.windows(2) {
        let ratio = |a: Algorithm| {
            median_ns(&records, pair[1], a).unwrap() as f64 / median_ns(&records, pair[0], a).unwrap() as f64
        };
        let (fast, quadratic) = (ratio(Algorithm::Fast), ratio(Algorithm::Quadratic));
        notes.push(format!("{}->{}: fast x{fast:.2}, quadratic x{quadratic:.2}", pair[0], pair[1]));
        if fast >= 3.0 {
            warnings.push(format!("fast ratio {fast:.2} >= 3.0 at {}", pair[1]));
        }
        if quadratic <= 3.0 {
            warnings.push(format!("quadratic ratio {quadratic:.2} <= 3.0 at {}", pair[1]));
        }
    }
    for &n in &sizes[1..] {
        if median_ns(&records, n, Algorithm::Fast) >= median_ns(&records, n, Algorithm::Quadratic) {
            warnings.push(format!("fast not faster at n = {n}"));
        }
    }
    let dg = TrapezoidDiagram::random(1_000_000, 1);
    let (_, ns) = Algorithm::Fast.timed(&dg);
    let million = Duration::from_nanos(ns as u64);
    notes.push(format!("n = 10^6 fast in {million:.2?}"));
    if million >= Duration::from_secs(10) {
        warnings.push(format!("n = 10^6 took {million:.2?}"));
    }
    for w in &warnings {
        println!("WARN  [7] {w}");
    }
    Ok(notes.join("; "))
}

// 8. No induced cycles of length five or more.
fn chordal_long_cycles() -> Outcome {
    let start = Instant::now();
    let results = batch::map(&common::corpus(1000, 9, 8), |&(n, seed)| {
        let g = TrapezoidDiagram::random(n, seed).intersection_graph();
        match chordless_cycle(&g, 5) {
            None => Ok(()),
            Some(c) => Err(format!("n = {n}, seed = {seed}: chordless cycle {c:?}")),
        }
    });
    first_error(results)?;
    Ok(format!("10^3 diagrams (n <= 9), exhaustive, {:.2?}", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("MBIT oracle equivalence", mbit_equivalence),
        ("three-way kappa equivalence", three_way_equivalence),
        ("cut-line characterization", cut_line_characterization),
        ("reference diagram", reference_fixture),
        ("bipartite iff triangle-free", bipartite_iff_triangle_free),
        ("caterpillar trees", caterpillar_trees),
        ("complexity evidence", complexity_evidence),
        ("no long chordless cycles", chordal_long_cycles),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  [{}] {name}: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL  [{}] {name}: {reason}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
