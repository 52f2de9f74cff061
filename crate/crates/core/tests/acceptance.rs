//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, then a
//! non-zero exit if anything failed. Randomized parts are seeded by
//! `--seed <n>` (after `--`), else `PFOREST_SEED`, else a fixed default.
//! `ACCEPTANCE_ONLY=<id>` runs a single criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use perfect_forest::avoid_edge::{decide_avoid_edge, reduce_at_cut_vertex, AvoidOutcome};
use perfect_forest::forest::exists_f_parity_forest;
use perfect_forest::generate::{
    all_graphs, connected_graphs, random_cnf, random_connected_graph, random_even_target,
    seed_from_env,
};
use perfect_forest::graph::{self, Edge, Graph};
use perfect_forest::io::parse_graph;
use perfect_forest::matching::{min_weight_perfect_matching, WeightedGraph};
use perfect_forest::min_forest::{min_f_parity_forest, min_zero_perfect_forest};
use perfect_forest::one_forest::{is_class_b, one_perfect_forest, proper_one_perfect_forest};
use perfect_forest::oracle::{self, Limits};
use perfect_forest::reductions::{
    containing_edge_instance, indset_gadget, induced_cycle_gadget, nae_gadget, CnfInstance,
    IndSetWitness, Statement,
};
use perfect_forest::ParityTarget;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("fixture readable")
}

fn base_seed() -> u64 {
    let args: Vec<String> = std::env::args().collect();
    args.windows(2)
        .find(|w| w[0] == "--seed")
        .and_then(|w| w[1].parse().ok())
        .unwrap_or_else(|| seed_from_env(20240601))
}

fn rng(salt: u64) -> StdRng {
    StdRng::seed_from_u64(base_seed() ^ salt)
}

/// Every even-sum target on `n` vertices.
fn all_even_targets(n: usize) -> impl Iterator<Item = ParityTarget> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(move |m| ParityTarget::new((0..n).map(|v| m >> v & 1 == 1).collect()).unwrap())
}

fn c1_existence() -> Outcome {
    let mut checked = 0;
    for n in (2..=8).step_by(2) {
        for g in connected_graphs(n) {
            let ones = ParityTarget::all_ones(n).unwrap();
            let f = exists_f_parity_forest(&g, &ones).map_err(|e| format!("{e} on {g:?}"))?;
            ensure!(
                oracle::is_parity_forest(&g, f.edges(), &ones),
                "forest rejected on {g:?}"
            );
            checked += 1;
        }
    }
    let mut r = rng(1);
    for _ in 0..1000 {
        let n = 2 * r.gen_range(1..=20);
        let p = r.gen_range(0.0..0.3);
        let g = random_connected_graph(&mut r, n, p);
        let ones = ParityTarget::all_ones(n).unwrap();
        let f = exists_f_parity_forest(&g, &ones).map_err(|e| e.to_string())?;
        ensure!(
            oracle::is_parity_forest(&g, f.edges(), &ones),
            "forest rejected on random {g:?}"
        );
    }
    Ok(format!("{checked} exhaustive + 1000 random graphs"))
}

fn c2_optimality() -> Outcome {
    let limits = Limits::default().with_edges(28);
    let mut checked = 0;
    for n in (2..=8).step_by(2) {
        for g in connected_graphs(n) {
            let fast = min_zero_perfect_forest(&g).map_err(|e| e.to_string())?;
            let slow = oracle::bf_min_forest(&g, &ParityTarget::all_ones(n).unwrap(), &limits)
                .map_err(|e| e.to_string())?;
            let slow = slow.ok_or_else(|| format!("oracle found no forest on {g:?}"))?;
            ensure!(
                fast.size() == slow.len(),
                "size {} vs oracle {} on {g:?}",
                fast.size(),
                slow.len()
            );
            let matching =
                oracle::bf_has_perfect_matching(&g, &limits).map_err(|e| e.to_string())?;
            ensure!(
                (fast.size() == n / 2) == matching,
                "matching law fails on {g:?}"
            );
            checked += 1;
        }
    }
    let mut r = rng(2);
    let wide = Limits::default().with_edges(45);
    for _ in 0..500 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.0..0.35);
        let g = random_connected_graph(&mut r, n, p);
        let f = random_even_target(&mut r, n);
        let fast = min_f_parity_forest(&g, &f).map_err(|e| e.to_string())?;
        let slow = oracle::bf_min_forest(&g, &f, &wide)
            .map_err(|e| e.to_string())?
            .ok_or("oracle found no forest")?;
        ensure!(
            fast.size() == slow.len(),
            "size {} vs oracle {} on {g:?} f={f:?}",
            fast.size(),
            slow.len()
        );
    }
    Ok(format!("{checked} exhaustive + 500 random (g, f)"))
}

fn c3_small_fixture() -> Outcome {
    let (g, _) = parse_graph(&fixture("six_vertices.txt")).map_err(|e| e.to_string())?;
    let ones = ParityTarget::all_ones(6).unwrap();
    let fast = min_zero_perfect_forest(&g).map_err(|e| e.to_string())?;
    let slow = oracle::bf_min_forest(&g, &ones, &Limits::default())
        .map_err(|e| e.to_string())?
        .ok_or("no forest")?;
    let drawn: Vec<Edge> = [(0, 1), (1, 2), (1, 3), (4, 5)]
        .iter()
        .map(|&(u, v)| Edge::new(u, v))
        .collect();
    ensure!(
        oracle::is_parity_forest(&g, &drawn, &ones),
        "drawn forest rejected"
    );
    ensure!(
        fast.size() == 4 && slow.len() == 4,
        "sizes {} / {}",
        fast.size(),
        slow.len()
    );
    Ok("minimum 4".into())
}

fn c4_avoid_edge() -> Outcome {
    let limits = Limits::default();
    let mut calls = 0usize;
    for n in 2..=7 {
        for g in connected_graphs(n) {
            let mut targets: Vec<ParityTarget> = all_even_targets(n).collect();
            if n % 2 == 0 {
                targets.push(ParityTarget::all_ones(n).unwrap());
            }
            for &e in g.edges() {
                for f in &targets {
                    let out = decide_avoid_edge(&g, e, f).map_err(|err| err.to_string())?;
                    let slow = oracle::bf_exists_avoiding(&g, e, f, &limits)
                        .map_err(|err| err.to_string())?;
                    ensure!(
                        out.is_feasible() == slow.is_some(),
                        "disagree on {g:?} e={e} f={f:?}"
                    );
                    if let AvoidOutcome::Feasible(forest) = &out {
                        ensure!(
                            oracle::is_parity_forest(&g, forest.edges(), f),
                            "forest rejected on {g:?}"
                        );
                        ensure!(!forest.contains(e), "forest uses {e}");
                    }
                    calls += 1;
                }
            }
        }
    }
    let (g, f) = parse_graph(&fixture("avoid_blocked.txt")).map_err(|e| e.to_string())?;
    let f = f.ok_or("fixture lacks f")?;
    let e = Edge::new(3, 5);
    let red = reduce_at_cut_vertex(&g, e, &f, 2).map_err(|e| e.to_string())?;
    ensure!(
        red.map.parent_vertices() == [2, 3, 4, 5, 6],
        "reduced piece {:?}",
        red.map.parent_vertices()
    );
    ensure!(
        red.target.bits() == [false, true, false, true, false],
        "reduced target {:?}",
        red.target
    );
    ensure!(
        !decide_avoid_edge(&g, e, &f)
            .map_err(|e| e.to_string())?
            .is_feasible(),
        "fixture instance feasible"
    );
    Ok(format!("{calls} (g, e, f) triples, every even-sum f"))
}

fn c5_boundary_law() -> Outcome {
    let limits = Limits::default();
    let mut cases = 0;
    for n in 2..=7 {
        for g in connected_graphs(n)
            .into_iter()
            .filter(graph::is_nonseparable)
        {
            for &e in g.edges() {
                for f in all_even_targets(n).filter(|f| f.get(e.u()) && f.get(e.v())) {
                    let law = f.count_ones() >= 4;
                    let fast = decide_avoid_edge(&g, e, &f)
                        .map_err(|err| err.to_string())?
                        .is_feasible();
                    let slow = oracle::bf_exists_avoiding(&g, e, &f, &limits)
                        .map_err(|err| err.to_string())?
                        .is_some();
                    ensure!(
                        fast == law && slow == law,
                        "law fails on {g:?} e={e} f={f:?}"
                    );
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn c6_proper_one_forest() -> Outcome {
    let limits = Limits::default();
    let mut counts = [0usize; 2];
    for n in [3, 5, 7] {
        for g in connected_graphs(n) {
            let out = proper_one_perfect_forest(&g).map_err(|e| e.to_string())?;
            ensure!(
                out.is_some() == !is_class_b(&g),
                "characterization fails on {g:?}"
            );
            if let Some(f) = &out {
                let even = f.even_degree_vertices();
                ensure!(even.len() == 1, "even vertices {even:?} on {g:?}");
                ensure!(f.is_proper(), "isolated vertex on {g:?}");
                let target = ParityTarget::all_ones_except(n, even[0]).unwrap();
                ensure!(
                    oracle::is_parity_forest(&g, f.edges(), &target),
                    "forest rejected on {g:?}"
                );
            }
            if n <= 5 {
                let slow = oracle::bf_proper_one_perfect(&g, &limits).map_err(|e| e.to_string())?;
                ensure!(slow.is_some() == out.is_some(), "oracle disagrees on {g:?}");
            }
            counts[usize::from(out.is_some())] += 1;
        }
    }
    Ok(format!(
        "{} constructed, {} in the class",
        counts[1], counts[0]
    ))
}

fn c7_pinned_even_vertex() -> Outcome {
    let mut checked = 0;
    for n in (1..=7).step_by(2) {
        for g in connected_graphs(n) {
            for x in g.vertices() {
                let f = one_perfect_forest(&g, x).map_err(|e| e.to_string())?;
                ensure!(
                    f.even_degree_vertices() == [x],
                    "even vertices {:?} for x={x} on {g:?}",
                    f.even_degree_vertices()
                );
                let target = ParityTarget::all_ones_except(n, x).unwrap();
                ensure!(
                    oracle::is_parity_forest(&g, f.edges(), &target),
                    "forest rejected on {g:?}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (g, x) pairs"))
}

fn c8_round_trips() -> Outcome {
    let limits = Limits::default();
    let mut r = rng(8);
    let mut done = 0;
    while done < 50 {
        let (vars, clauses) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let cnf = random_cnf(&mut r, vars, clauses);
        let Ok(gad) = nae_gadget(&cnf) else { continue };
        let Some(a) = oracle::bf_nae_satisfiable(&cnf, &limits).map_err(|e| e.to_string())? else {
            continue;
        };
        let g = gad.graph();
        let f = gad.forest_from_assignment(&a).map_err(|e| e.to_string())?;
        ensure!(
            oracle::is_parity_forest(g, f.edges(), &ParityTarget::all_ones(g.order()).unwrap()),
            "forest rejected"
        );
        ensure!(
            f.size() == g.order() - 2,
            "size {} on |V| = {}",
            f.size(),
            g.order()
        );
        let back = gad
            .assignment_from_forest(f.edges())
            .map_err(|e| e.to_string())?;
        ensure!(
            cnf.nae_satisfied_by(&back),
            "extracted assignment not NAE-satisfying"
        );
        done += 1;
    }

    let gad = indset_gadget(&Graph::cycle(4), 4).map_err(|e| e.to_string())?;
    let path = gad
        .convert(
            &IndSetWitness::IndependentSet(vec![0, 2]),
            Statement::InducedPath,
        )
        .map_err(|e| e.to_string())?;
    let IndSetWitness::InducedPath(p) = &path else {
        return Err("wrong witness kind".into());
    };
    ensure!(
        p.len() - 1 == 10 && oracle::is_induced_path(gad.graph(), p),
        "path {p:?}"
    );
    let forest = gad
        .convert(&path, Statement::Forest)
        .map_err(|e| e.to_string())?;
    let IndSetWitness::Forest(fe) = &forest else {
        return Err("wrong witness kind".into());
    };
    let h3 = gad.graph();
    ensure!(fe.len() == h3.order() / 2 + 9, "forest size {}", fe.len());
    ensure!(
        oracle::is_parity_forest(h3, fe, &ParityTarget::all_ones(h3.order()).unwrap()),
        "forest rejected"
    );

    let cnf = CnfInstance::new(4, vec![[-1, 2, 3], [-2, -3, 4]]).unwrap();
    let gad = induced_cycle_gadget(&cnf).map_err(|e| e.to_string())?;
    let a = [true, false, true, true];
    let cycle = gad.cycle_from_assignment(&a).map_err(|e| e.to_string())?;
    ensure!(
        oracle::is_induced_cycle(gad.graph(), &cycle),
        "cycle not induced"
    );
    let back = gad
        .assignment_from_cycle(&cycle)
        .map_err(|e| e.to_string())?;
    ensure!(cnf.satisfied_by(&back), "extracted assignment unsatisfying");
    Ok("50 NAE formulas, independent-set chain, two-clause cycle".into())
}

/// Clauses over `n` variables as sorted literal multisets.
fn micro_clauses(n: i32) -> Vec<[i32; 3]> {
    let lits: Vec<i32> = (1..=n).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i..lits.len() {
            for k in j..lits.len() {
                out.push([lits[i], lits[j], lits[k]]);
            }
        }
    }
    out
}

fn c9_micro_equivalences() -> Outcome {
    let limits = Limits {
        edges: 200,
        cycle_vertices: 64,
        variables: 8,
        vertices: 20,
    };
    let mut counts = [0usize; 5];

    // Single clauses over two variables are all NAE-satisfiable once the
    // constant clauses are rejected, so pairs of clauses supply the negatives.
    let mut formulas: Vec<CnfInstance> = Vec::new();
    for n in 1..=2 {
        let cs = micro_clauses(n);
        for (i, &a) in cs.iter().enumerate() {
            formulas.push(CnfInstance::new(n as usize, vec![a]).unwrap());
            for &b in &cs[i..] {
                formulas.push(CnfInstance::new(n as usize, vec![a, b]).unwrap());
            }
        }
    }
    let mut unsat = 0;
    for cnf in &formulas {
        let Ok(gad) = nae_gadget(cnf) else {
            ensure!(
                cnf.clauses().iter().any(|c| c[0] == c[2]),
                "builder rejected {:?}",
                cnf.clauses()
            );
            continue;
        };
        let g = gad.graph();
        let sat = oracle::bf_nae_satisfiable(cnf, &limits).map_err(|e| e.to_string())?;
        let ones = ParityTarget::all_ones(g.order()).unwrap();
        let big = oracle::bf_forest_at_least(g, &ones, g.order() - 2, &limits)
            .map_err(|e| e.to_string())?;
        ensure!(
            sat.is_some() == big.is_some(),
            "NAE equivalence fails on {:?}",
            cnf.clauses()
        );
        unsat += usize::from(sat.is_none());
        if let (Some(a), Some(f)) = (sat, big) {
            gad.forest_from_assignment(&a).map_err(|e| e.to_string())?;
            let back = gad.assignment_from_forest(&f).map_err(|e| e.to_string())?;
            ensure!(
                cnf.nae_satisfied_by(&back),
                "oracle forest gives a bad assignment"
            );
        }
        counts[0] += 1;
    }

    // The path side is searched for every input; the forest side only up to
    // three input vertices, past which exhaustive forest search on the
    // pendant-laden gadget stops finishing in reasonable time.
    for n in 0..=5 {
        for g in all_graphs(n) {
            let alpha = oracle::bf_max_independent_set(&g, &limits).map_err(|e| e.to_string())?;
            for k in 2..=n + 2 {
                let gad = indset_gadget(&g, k).map_err(|e| e.to_string())?;
                let yes = alpha.len() + 2 >= k;
                let path = oracle::bf_induced_path(
                    &gad.path_host(),
                    gad.path_start(),
                    gad.path_end(),
                    gad.path_length(),
                    &limits,
                )
                .map_err(|e| e.to_string())?;
                ensure!(
                    yes == path.is_some(),
                    "path equivalence fails on {g:?}, k={k}"
                );
                if let Some(p) = path {
                    let set = gad
                        .convert(&IndSetWitness::InducedPath(p), Statement::IndependentSet)
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        matches!(set, IndSetWitness::IndependentSet(_)),
                        "wrong witness kind"
                    );
                    gad.convert(
                        &IndSetWitness::IndependentSet(alpha.clone()),
                        Statement::Forest,
                    )
                    .map_err(|e| e.to_string())?;
                }
                if n <= 3 {
                    let h3 = gad.graph();
                    let ones = ParityTarget::all_ones(h3.order()).unwrap();
                    let big =
                        oracle::bf_forest_at_least(h3, &ones, gad.forest_threshold(), &limits)
                            .map_err(|e| e.to_string())?;
                    ensure!(
                        yes == big.is_some(),
                        "forest equivalence fails on {g:?}, k={k}"
                    );
                    if let Some(f) = big {
                        gad.convert(&IndSetWitness::Forest(f), Statement::IndependentSet)
                            .map_err(|e| e.to_string())?;
                    }
                    counts[4] += 1;
                }
                counts[1] += 1;
            }
        }
    }

    for n in 1..=2 {
        for clause in micro_clauses(n) {
            let cnf = CnfInstance::new(n as usize, vec![clause]).unwrap();
            let gad = induced_cycle_gadget(&cnf).map_err(|e| e.to_string())?;
            let sat = oracle::bf_satisfiable(&cnf, &limits).map_err(|e| e.to_string())?;
            let cycle = oracle::bf_induced_cycle_through(gad.graph(), gad.e1(), gad.e2(), &limits)
                .map_err(|e| e.to_string())?;
            let inst = containing_edge_instance(gad.graph(), gad.e1(), gad.e2())
                .map_err(|e| e.to_string())?;
            let ones = ParityTarget::all_ones(inst.h.order()).unwrap();
            let forest = oracle::bf_exists_containing(&inst.h, inst.e2, &ones, &limits)
                .map_err(|e| e.to_string())?;
            ensure!(
                sat.is_some() == cycle.is_some() && cycle.is_some() == forest.is_some(),
                "cycle equivalence fails on {clause:?}"
            );
            if let (Some(a), Some(c), Some(f)) = (sat, cycle, forest) {
                gad.cycle_from_assignment(&a).map_err(|e| e.to_string())?;
                let back = gad.assignment_from_cycle(&c).map_err(|e| e.to_string())?;
                ensure!(
                    cnf.satisfied_by(&back),
                    "oracle cycle gives a bad assignment"
                );
                inst.forest_from_cycle(&c).map_err(|e| e.to_string())?;
                inst.cycle_from_forest(&f).map_err(|e| e.to_string())?;
            }
            counts[2] += 1;
        }
    }

    for n in 2..=5 {
        for g in all_graphs(n) {
            for &e1 in g.edges() {
                for &e2 in g.edges().iter().filter(|&&e| e != e1) {
                    let inst = containing_edge_instance(&g, e1, e2).map_err(|e| e.to_string())?;
                    let ones = ParityTarget::all_ones(inst.h.order()).unwrap();
                    let cycle = oracle::bf_induced_cycle_through(&g, e1, e2, &limits)
                        .map_err(|e| e.to_string())?;
                    let forest = oracle::bf_exists_containing(&inst.h, inst.e2, &ones, &limits)
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        cycle.is_some() == forest.is_some(),
                        "containing equivalence fails on {g:?} {e1} {e2}"
                    );
                    if let (Some(c), Some(f)) = (cycle, forest) {
                        inst.forest_from_cycle(&c).map_err(|e| e.to_string())?;
                        inst.cycle_from_forest(&f).map_err(|e| e.to_string())?;
                    }
                    counts[3] += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} NAE formulas ({unsat} unsatisfiable), {} (graph, k) with {} forest-side, {} 3-SAT formulas, {} (graph, e1, e2)",
        counts[0], counts[1], counts[4], counts[2], counts[3]
    ))
}

fn c10_matching() -> Outcome {
    let limits = Limits::default();
    let mut r = rng(10);
    let mut perfect = 0;
    for _ in 0..1000 {
        let n = r.gen_range(0..=10);
        let p = r.gen_range(0.1..0.9);
        let mut triples = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if r.gen_bool(p) {
                    triples.push((u, v, r.gen_range(0..=100)));
                }
            }
        }
        let wg = WeightedGraph::from_triples(n, triples).map_err(|e| e.to_string())?;
        let fast = min_weight_perfect_matching(&wg);
        let slow =
            oracle::bf_min_perfect_matching_weight(&wg, &limits).map_err(|e| e.to_string())?;
        match (&fast, slow) {
            (None, None) => {}
            (Some(m), Some(w)) => {
                ensure!(m.is_perfect(n), "matching not perfect");
                ensure!(
                    m.weight(&wg) == Some(w),
                    "weight {:?} vs oracle {w}",
                    m.weight(&wg)
                );
                perfect += 1;
            }
            _ => return Err(format!("existence disagrees on {wg:?}")),
        }
    }
    Ok(format!("1000 trials, {perfect} with a perfect matching"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "every connected even-order graph has a 0-perfect forest",
            c1_existence,
        ),
        ("minimum forests match brute force", c2_optimality),
        (
            "six-vertex fixture has minimum 0-perfect forest of size 4",
            c3_small_fixture,
        ),
        ("edge-avoiding decision matches brute force", c4_avoid_edge),
        (
            "2-connected boundary: feasible iff target sum >= 4",
            c5_boundary_law,
        ),
        (
            "proper 1-perfect forest exists iff outside the odd-complete-block class",
            c6_proper_one_forest,
        ),
        (
            "1-perfect forest with prescribed even vertex",
            c7_pinned_even_vertex,
        ),
        ("gadget witness round-trips", c8_round_trips),
        ("micro-scale reduction equivalences", c9_micro_equivalences),
        ("matching engine matches brute force", c10_matching),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .and_then(|s| s.parse().ok());
    println!("seed {}", base_seed());
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2}: PASS  {name} ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
