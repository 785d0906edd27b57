//! Acceptance suite. Runs without the libtest harness and prints one line
//! per criterion; exits non-zero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use ecperm::classes::{check_ultrametric_axioms, is_gallai, is_symbolic_ultrametric_graph, SymbolicMap};
use ecperm::fixtures;
use ecperm::graph::{ColoredGraph, SimpleGraph, Vertex};
use ecperm::io;
use ecperm::md::ModuleKind;
use ecperm::oracle::{brute_force_recognize, random_instances, Profile};
use ecperm::recognizer::{characterization_check, restrict, Characterization};
use ecperm::{decompose, recognize, verify, Certificate, Obstruction, Outcome, Permutation, Recognizer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const PROFILES: [Profile; 3] = [Profile::Uniform, Profile::GallaiSubstitution, Profile::FromPermutations];

fn certificate_ok(g: &ColoredGraph, c: &Certificate) -> bool {
    verify(g, &c.labeling, &c.permutations) == Ok(true)
}

fn pinned_reproduction() -> Check {
    let g = fixtures::eight_vertex_three_colors();
    let expected: Vec<Permutation> = fixtures::eight_vertex_permutations();
    let start = Instant::now();
    let outcome =
        Recognizer::new().pins(fixtures::eight_vertex_quotient_orders()).run(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let cert = outcome.certificate().ok_or("graph rejected")?;
    ensure(cert.labeling.order() == [4, 3, 1, 2, 0, 7, 6, 5], || format!("order {:?}", cert.labeling.order()))?;
    ensure(cert.permutations == expected, || format!("permutations {:?}", cert.permutations))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;

    // the same through the command line
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let graph_path = dir.path().join("eight.ecg");
    let pins_path = dir.path().join("pins.json");
    std::fs::write(&graph_path, io::write_ecg(&g)).map_err(|e| e.to_string())?;
    let pins: Vec<Value> = fixtures::eight_vertex_quotient_orders()
        .into_iter()
        .map(|(m, o)| serde_json::json!({ "module": m, "order": o }))
        .collect();
    std::fs::write(&pins_path, serde_json::to_string(&pins).unwrap()).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_ecperm"))
        .arg("recognize")
        .arg(&graph_path)
        .arg("--quotient-labels")
        .arg(&pins_path)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let value: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let cli_cert: Certificate = serde_json::from_value(value["certificate"].clone()).map_err(|e| e.to_string())?;
    ensure(&cli_cert == cert, || "command line certificate differs".into())?;
    Ok(format!("order e,d,b,c,a,h,g,f and all three permutations match, {elapsed:?}"))
}

fn nested_modules_tree() -> Check {
    let g = fixtures::nested_modules();
    let tree = decompose(&g);
    let mut inner: Vec<(Vec<Vertex>, ModuleKind)> =
        tree.inner_nodes().map(|id| (tree.members(id).to_vec(), tree.kind(id))).collect();
    inner.sort_by(|a, b| a.0.cmp(&b.0));
    let expected = vec![
        (vec![0, 1], ModuleKind::Series),
        (vec![0, 1, 2, 3, 4, 5, 6], ModuleKind::Prime),
        (vec![2, 3, 4], ModuleKind::Series),
        (vec![3, 4], ModuleKind::Series),
    ];
    ensure(inner == expected, || format!("inner nodes {inner:?}"))?;
    ensure(tree.len() == 11, || format!("{} nodes", tree.len()))?;

    let root = tree.quotient(tree.root()).unwrap();
    let mut children: Vec<Vec<Vertex>> = tree.children(tree.root()).iter().map(|&c| tree.members(c).to_vec()).collect();
    children.sort();
    ensure(children == [vec![0, 1], vec![2, 3, 4], vec![5], vec![6]], || format!("root children {children:?}"))?;
    ensure(root.representatives == [0, 2, 5, 6], || format!("reps {:?}", root.representatives))?;
    // the root quotient's color-1 class is the path 0-5-2-6, the rest is color 3
    let q = &root.graph;
    let quotient_colors: Vec<u64> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|&(a, b)| g.label_of(root.global_color(q.color(a, b))))
        .collect();
    ensure(quotient_colors == [3, 1, 3, 1, 1, 3], || format!("root quotient {quotient_colors:?}"))?;
    let pair = tree.parent(tree.leaf(3)).unwrap();
    let pq = tree.quotient(pair).unwrap();
    ensure(pq.graph.n() == 2 && pq.palette.iter().map(|&c| g.label_of(c)).eq([3]), || "{3,4} quotient".into())?;

    let out = Command::new(env!("CARGO_BIN_EXE_ecperm")).arg("mdtree").arg("--text").arg(write_temp(&g)?.1).output();
    let out = out.map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(text.starts_with("{0,1,2,3,4,5,6} prime"), || format!("mdtree --text printed {text:?}"))?;
    Ok("strong modules, kinds and both quotients match".into())
}

fn write_temp(g: &ColoredGraph) -> Result<(tempfile::TempDir, std::path::PathBuf), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("g.ecg");
    std::fs::write(&path, io::write_ecg(g)).map_err(|e| e.to_string())?;
    Ok((dir, path))
}

fn agree_with_oracle(g: &ColoredGraph) -> Result<bool, String> {
    let outcome = recognize(g);
    let oracle = brute_force_recognize(g).map_err(|e| e.to_string())?;
    ensure(outcome.is_member() == oracle.is_some(), || format!("disagreement on {}", io::write_ecg(g)))?;
    if let Some(c) = outcome.certificate() {
        ensure(certificate_ok(g, c), || format!("certificate fails on {}", io::write_ecg(g)))?;
    }
    if let Some(c) = &oracle {
        ensure(certificate_ok(g, c), || format!("oracle certificate fails on {}", io::write_ecg(g)))?;
    }
    Ok(outcome.is_member())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut exhaustive = 0;
    for n in [3, 4] {
        for g in common::all_colorings(n) {
            agree_with_oracle(&g)?;
            exhaustive += 1;
        }
    }
    let (mut random, mut members) = (0, 0);
    for (p, profile) in PROFILES.into_iter().enumerate() {
        for n in 2..=6 {
            for k in 1..=4 {
                let seed = (p * 100 + n * 10 + k) as u64;
                for g in random_instances(seed, n, k, profile).take(200) {
                    members += agree_with_oracle(&g)? as usize;
                    random += 1;
                }
            }
        }
    }
    ensure(exhaustive == 5 + 203, || format!("{exhaustive} exhaustive graphs"))?;
    ensure(random >= 10_000, || format!("only {random} random graphs"))?;
    Ok(format!(
        "{exhaustive} exhaustive + {random} random graphs ({members} members), zero disagreements, {:?}",
        start.elapsed()
    ))
}

fn characterization_agreement() -> Check {
    let mut count = 0;
    let mut members = 0;
    for (p, profile) in PROFILES.into_iter().enumerate() {
        for n in 1..=7 {
            for k in 1..=4 {
                for g in random_instances(1000 + (p * 100 + n * 10 + k) as u64, n, k, profile).take(15) {
                    let member = recognize(&g).is_member();
                    for which in Characterization::ALL {
                        let got = characterization_check(&g, which).map_err(|e| e.to_string())?;
                        ensure(got == member, || format!("{which:?} says {got} on {}", io::write_ecg(&g)))?;
                    }
                    members += member as usize;
                    count += 1;
                }
            }
        }
    }
    ensure(count >= 1000, || format!("only {count} graphs"))?;
    Ok(format!("{count} graphs ({members} members), all four characterizations agree"))
}

fn hereditariness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut graphs, mut subsets) = (0, 0);
    for profile in [Profile::FromPermutations, Profile::GallaiSubstitution] {
        for n in 2..=14 {
            for k in 1..=5 {
                for g in random_instances(2000 + (n * 10 + k) as u64, n, k, profile).take(12) {
                    let Outcome::Certificate(cert) = recognize(&g) else { continue };
                    graphs += 1;
                    for _ in 0..3 {
                        let w: Vec<Vertex> = loop {
                            let w: Vec<Vertex> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                            if !w.is_empty() {
                                break w;
                            }
                        };
                        let r = restrict(&g, &cert, &w).map_err(|e| e.to_string())?;
                        ensure(recognize(&r.graph).is_member(), || format!("subset {w:?} rejected"))?;
                        ensure(certificate_ok(&r.graph, &r.certificate), || {
                            format!("restricted certificate on {w:?}")
                        })?;
                        subsets += 1;
                    }
                }
            }
        }
    }
    ensure(graphs >= 1000, || format!("only {graphs} recognized graphs"))?;
    Ok(format!("{graphs} recognized graphs, {subsets} subsets, zero failures"))
}

fn class_relations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);

    // (a) symbolic ultrametric graphs are members
    let mut ultrametric = 0;
    for n in 1..=12 {
        for k in 1..=5 {
            for _ in 0..20 {
                let g = common::random_ultrametric(&mut rng, n, k);
                ensure(is_symbolic_ultrametric_graph(&g), || format!("generator broke on {}", io::write_ecg(&g)))?;
                ensure(recognize(&g).is_member(), || format!("ultrametric graph rejected: {}", io::write_ecg(&g)))?;
                ultrametric += 1;
            }
        }
    }
    for (p, profile) in PROFILES.into_iter().enumerate() {
        for g in random_instances(3000 + p as u64, 6, 3, profile).take(300) {
            if is_symbolic_ultrametric_graph(&g) {
                ensure(recognize(&g).is_member(), || format!("ultrametric graph rejected: {}", io::write_ecg(&g)))?;
                ultrametric += 1;
            }
        }
    }

    // (b) the axiom scan agrees with the graph test
    let (mut maps, mut positive) = (0, 0);
    for n in 1..=7 {
        for round in 0..150 {
            let g = match round % 3 {
                0 => common::random_ultrametric(&mut rng, n, 3),
                1 => {
                    let g = common::random_ultrametric(&mut rng, n, 3);
                    if n < 2 {
                        g
                    } else {
                        let pick = rand::seq::index::sample(&mut rng, n, 2);
                        let (x, y) = (pick.index(0).min(pick.index(1)), pick.index(0).max(pick.index(1)));
                        let bump = rng.gen_range(1..=3u64);
                        ColoredGraph::from_fn(n, |a, b| {
                            let c = g.label_of(g.color(a, b));
                            if (a, b) == (x, y) {
                                bump
                            } else {
                                c
                            }
                        })
                    }
                }
                _ => ColoredGraph::from_fn(n, |_, _| rng.gen_range(1..=3)),
            };
            let d = SymbolicMap::from_graph(&g);
            let axioms = check_ultrametric_axioms(&d);
            ensure(axioms == is_symbolic_ultrametric_graph(d.graph()), || {
                format!("axiom scan says {axioms} on {}", io::write_ecg(&g))
            })?;
            positive += axioms as usize;
            maps += 1;
        }
    }
    ensure(maps >= 1000, || format!("only {maps} maps"))?;

    // (c) strict containment
    let p4 = SimpleGraph::path(4).to_colored();
    ensure(is_gallai(&p4) && recognize(&p4).is_member() && !is_symbolic_ultrametric_graph(&p4), || {
        "two-colored P4 is not a strict containment witness".into()
    })?;

    // (d) members use at most n - 1 colors
    let mut members = 0;
    for (p, profile) in PROFILES.into_iter().enumerate() {
        for n in 1..=10 {
            for g in random_instances(4000 + (p * 100 + n) as u64, n, n + 2, profile).take(50) {
                if recognize(&g).is_member() {
                    ensure(g.k() < n, || format!("member with {} colors on {n} vertices", g.k()))?;
                    members += 1;
                }
            }
        }
    }
    Ok(format!(
        "(a) {ultrametric} ultrametric graphs recognized; (b) {maps} maps agree ({positive} ultrametric); \
         (c) two-colored P4 witnesses strict containment; (d) {members} members with k <= n-1"
    ))
}

fn timing() -> Check {
    let sizes = [250, 500, 1000, 2000];
    let mut medians = Vec::new();
    for &n in &sizes {
        let mut times: Vec<Duration> = random_instances(7000 + n as u64, n, 4, Profile::FromPermutations)
            .take(5)
            .map(|g| {
                let start = Instant::now();
                let outcome = recognize(&g);
                let t = start.elapsed();
                assert!(outcome.is_member());
                t
            })
            .collect();
        times.sort();
        medians.push(times[times.len() / 2]);
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1].as_secs_f64() / w[0].as_secs_f64()).collect();
    let summary = format!(
        "medians {}; ratios {}",
        sizes
            .iter()
            .zip(&medians)
            .map(|(n, t)| format!("n={n}: {:.3}s", t.as_secs_f64()))
            .collect::<Vec<_>>()
            .join(", "),
        ratios.iter().map(|r| format!("{r:.2}")).collect::<Vec<_>>().join(", ")
    );
    ensure(ratios.iter().all(|&r| r <= 5.0), || summary.clone())?;
    ensure(medians[3] < Duration::from_secs(30), || summary.clone())?;
    Ok(summary)
}

fn obstruction_validity() -> Check {
    let (mut rejected, mut triangles, mut wide, mut nonperm) = (0, 0, 0, 0);
    for (p, profile) in [Profile::Uniform, Profile::GallaiSubstitution].into_iter().enumerate() {
        for n in 3..=9 {
            for k in 2..=4 {
                for g in random_instances(8000 + (p * 100 + n * 10 + k) as u64, n, k, profile).take(80) {
                    let Outcome::Obstruction(o) = recognize(&g) else { continue };
                    ensure(o.validate(&g), || format!("{o:?} fails on {}", io::write_ecg(&g)))?;
                    match &o {
                        Obstruction::RainbowTriangle { triangle: t, .. } => {
                            let c = [g.color(t.u, t.v), g.color(t.u, t.w), g.color(t.v, t.w)];
                            ensure(c[0] != c[1] && c[0] != c[2] && c[1] != c[2], || format!("{t:?} is not rainbow"))?;
                            triangles += 1;
                        }
                        Obstruction::WideQuotient(_) => wide += 1,
                        Obstruction::NonPermQuotient { .. } => nonperm += 1,
                    }
                    if n <= 7 {
                        ensure(brute_force_recognize(&g).unwrap().is_none(), || "oracle accepts".into())?;
                    }
                    rejected += 1;
                }
            }
        }
    }
    ensure(rejected >= 1000, || format!("only {rejected} rejected graphs"))?;
    ensure(triangles > 0 && nonperm > 0, || "an obstruction kind was never exercised".into())?;
    Ok(format!("{rejected} rejected graphs ({triangles} rainbow triangles, {nonperm} non-permutation quotients, {wide} wide quotients), all re-validate"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("pinned eight-vertex reproduction", pinned_reproduction),
        ("nested modules decomposition", nested_modules_tree),
        ("oracle equivalence", oracle_equivalence),
        ("characterization agreement", characterization_agreement),
        ("hereditariness", hereditariness),
        ("class relations", class_relations),
        ("quadratic time trend", timing),
        ("obstruction validity", obstruction_validity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
