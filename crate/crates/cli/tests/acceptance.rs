//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::process::Command;
use std::time::Instant;

use mirrorgraph::lab::{even_cycle_union, twin_asymmetric_cubic};
use mirrorgraph::*;
use mirrorgraph_cli::GraphDocument;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Non-increasing sequences of length `len` with entries at most `max`.
fn sequences(len: usize, max: usize) -> Vec<DegreeSequence> {
    fn go(len: usize, hi: usize, prefix: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == len {
            out.push(DegreeSequence::new(prefix.clone()).unwrap());
            return;
        }
        for v in (0..=hi).rev() {
            prefix.push(v);
            go(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, &mut Vec::new(), &mut out);
    out
}

/// Sorted degree sequences of every l-graph on `n` labeled vertices.
fn loop_graphic_by_exhaustion(n: usize) -> HashSet<Vec<usize>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..1 << slots.len() {
        let mut deg = vec![0; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[i] += 1;
                if i != j {
                    deg[j] += 1;
                }
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(deg);
    }
    seen
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Mirror test by trying every bijection, straight from the definition.
fn mirror_by_exhaustion(g: &BipartiteGraph) -> bool {
    let n = g.n1();
    g.n2() == n
        && permutations(n)
            .into_iter()
            .any(|pi| (0..n).all(|u| (0..n).all(|v| g.has_edge(u, pi[v]) == g.has_edge(v, pi[u]))))
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn relabel(m: &MirrorRealization, rng: &mut ChaCha8Rng) -> MirrorRealization {
    let n = m.n();
    let (rows, cols) = (shuffled(n, rng), shuffled(n, rng));
    MirrorRealization::new(
        m.graph().relabeled(&rows, &cols),
        m.pairing().relabeled(&rows, &cols),
    )
    .expect("relabeling preserves the pairing")
}

fn degree_set_of(degrees: &[usize]) -> BTreeSet<usize> {
    degrees.iter().copied().collect()
}

struct Sweep {
    bigraphic: Vec<DegreeSequence>,
}

/// Oracle triad over every sequence of length <= 6 with entries <= 6.
fn criterion_1(sweep: &mut Sweep) -> Outcome {
    let mut checked = 0;
    for len in 0..=6 {
        let realizable = loop_graphic_by_exhaustion(len);
        for p in sequences(len, 6) {
            let brute = realizable.contains(p.as_slice());
            let gr = gale_ryser_check(&p, &p);
            let hh = hh_check(&p, &p);
            ensure!(
                gr == brute && hh == brute,
                "{p}: gale-ryser {gr}, havel-hakimi {hh}, exhaustive {brute}"
            );
            ensure!(loop_check(&p) == brute, "{p}: loop_check disagrees");
            if gr {
                sweep.bigraphic.push(p);
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} sequences, {} bigraphic, exhaustive l-graph oracle through length 6",
        sweep.bigraphic.len()
    ))
}

/// Mirror realization of every bigraphic sequence from the sweep.
fn criterion_2(sweep: &Sweep, made: &mut Vec<MirrorRealization>) -> Outcome {
    for p in &sweep.bigraphic {
        let m = mirror_realize(p).map_err(|e| format!("{p}: {e}"))?;
        ensure!(
            verify_pairing(m.graph(), m.pairing()) == Ok(true),
            "{p}: pairing fails"
        );
        ensure!(
            m.graph().left_degrees() == *p,
            "{p}: left degrees {}",
            m.graph().left_degrees()
        );
        ensure!(
            m.graph().right_degrees() == *p,
            "{p}: right degrees {}",
            m.graph().right_degrees()
        );
        made.push(m);
    }
    Ok(format!("{} realizations verified", sweep.bigraphic.len()))
}

/// fold/kron round trips.
fn criterion_3(made: &mut Vec<MirrorRealization>) -> Outcome {
    let slots: Vec<(usize, usize)> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect();
    for mask in 0u32..1 << slots.len() {
        let edges = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let h = LGraph::from_edges(4, edges).unwrap();
        let m = kronecker_k2(&h);
        ensure!(
            fold_to_lgraph(&m).as_ref() == Ok(&h),
            "fold(kron(h)) != h for mask {mask:#b}"
        );
        made.push(m);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let m = if trial % 2 == 0 {
            let n = rng.gen_range(0..=9);
            let density = rng.gen_range(0.0..=1.0);
            let coins: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(density)).collect();
            let h = LGraph::from_fn(n, |i, j| coins[i.min(j) * n + i.max(j)]).unwrap();
            relabel(&kronecker_k2(&h), &mut rng)
        } else {
            let len = rng.gen_range(1..=12);
            let p = loop {
                let p = DegreeSequence::sorted((0..len).map(|_| rng.gen_range(0..=len)).collect());
                if gale_ryser_check(&p, &p) {
                    break p;
                }
            };
            relabel(&mirror_realize(&p).unwrap(), &mut rng)
        };
        let folded = fold_to_lgraph(&m).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(
            bipartite_isomorphic(kronecker_k2(&folded).graph(), m.graph(), false),
            "trial {trial}: kron(fold(m)) not isomorphic to m"
        );
        made.push(m);
    }
    Ok("1024 l-graphs on 4 vertices, 1000 seeded relabeled realizations".into())
}

/// Complement keeps the pairing.
fn criterion_4(made: &[MirrorRealization]) -> Outcome {
    for m in made {
        let c = complement_pairing(m).map_err(|e| format!("{:?}: {e}", m.graph()))?;
        let n = m.n();
        ensure!(c.pairing() == m.pairing(), "pairing changed");
        ensure!(
            verify_pairing(c.graph(), c.pairing()) == Ok(true),
            "complement pairing fails"
        );
        for i in 0..n {
            for j in 0..n {
                ensure!(
                    c.graph().has_edge(i, j) != m.graph().has_edge(i, j),
                    "not the complement at ({i}, {j})"
                );
            }
        }
    }
    Ok(format!("{} complements verified", made.len()))
}

/// Staircase uniqueness.
fn criterion_5() -> Outcome {
    for n in 1..=5 {
        let p = DegreeSequence::staircase(n);
        let classes = enumerate_realizations(&p, &p, true).map_err(|e| e.to_string())?;
        ensure!(classes.len() == 1, "n = {n}: {} classes", classes.len());
        ensure!(mirror_by_exhaustion(&classes[0]), "n = {n}: class is not mirror");
        let s = staircase(n);
        ensure!(
            verify_pairing(s.graph(), s.pairing()) == Ok(true),
            "n = {n}: staircase pairing fails"
        );
        ensure!(
            bipartite_isomorphic(&classes[0], s.graph(), false),
            "n = {n}: not the staircase"
        );
    }
    // drawn graph: a_i joined to b_j exactly when i + j <= 3
    let drawn = BipartiteGraph::from_fn(4, 4, |i, j| i + j <= 3);
    let p4 = DegreeSequence::staircase(4);
    let class = &enumerate_realizations(&p4, &p4, true).unwrap()[0];
    ensure!(
        bipartite_isomorphic(class, &drawn, false),
        "n = 4 class differs from the drawn graph"
    );
    ensure!(
        *staircase(4).graph() == drawn,
        "staircase(4) is not the drawn matrix"
    );
    Ok("one mirror class for n = 1..5, n = 4 equals the drawn graph".into())
}

/// Regular survey.
fn criterion_6() -> Outcome {
    let opts = EnumerationOptions::default();
    let mut classes = 0;
    for n in 0..=5 {
        for r in 0..=n {
            let found = regular_survey(n, r, &opts).map_err(|e| format!("n = {n}, r = {r}: {e}"))?;
            classes += found.len();
            for w in &found {
                ensure!(w.is_mirror(), "n = {n}, r = {r}: non-mirror class {:?}", w.graph);
                ensure!(
                    mirror_by_exhaustion(&w.graph),
                    "n = {n}, r = {r}: witness rejected by exhaustive check"
                );
            }
        }
    }
    let six = regular_survey(6, 3, &opts).map_err(|e| format!("n = 6, r = 3: {e}"))?;
    let odd: Vec<&ClassWitness> = six.iter().filter(|w| !w.is_mirror()).collect();
    ensure!(!odd.is_empty(), "no non-mirror 3-regular class on 6 + 6 vertices");
    for w in &odd {
        ensure!(
            !mirror_by_exhaustion(&w.graph),
            "exhaustive check finds a pairing"
        );
        let (left, right) = twin_signature(&w.graph);
        ensure!(left != right, "non-mirror class with equal twin signatures");
    }
    for w in six.iter().filter(|w| w.is_mirror()) {
        ensure!(
            mirror_by_exhaustion(&w.graph),
            "n = 6 witness rejected by exhaustive check"
        );
    }
    let cubic = twin_asymmetric_cubic();
    ensure!(
        !mirror_by_exhaustion(&cubic),
        "twin-asymmetric cubic graph is mirror"
    );
    ensure!(
        odd.iter().any(|w| bipartite_isomorphic(&w.graph, &cubic, true)),
        "twin-asymmetric cubic graph not among the survey's non-mirror classes"
    );
    Ok(format!(
        "{classes} classes for n <= 5 all mirror; n = 6, r = 3: {} of {} classes non-mirror, twin signatures differ",
        odd.len(),
        six.len()
    ))
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (2..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Even cycles.
fn criterion_7() -> Outcome {
    // C_{2m} as v_0 … v_{2m-1}; v_{2i} is left vertex i, v_{2i+1} right vertex i
    for m in 2..=8 {
        let side = |k: usize| (k % 2, k / 2);
        let edges = (0..2 * m).map(|k| {
            let (a, b) = (side(k), side((k + 1) % (2 * m)));
            if a.0 == 0 {
                (a.1, b.1)
            } else {
                (b.1, a.1)
            }
        });
        let g = BipartiteGraph::from_edges(m, m, edges).unwrap();
        // v_{2i} -> v_{2m-1-2i}, which is right vertex m-1-i
        let phi = MirrorPairing::new((0..m).map(|i| (2 * m - 1 - 2 * i) / 2).collect()).unwrap();
        ensure!(
            verify_pairing(&g, &phi) == Ok(true),
            "reflection pairing fails on C_{}",
            2 * m
        );
    }
    let mut count = 0;
    for n in 2..=8 {
        for parts in partitions(n, n) {
            let (g, pairing) = even_cycle_union(&parts);
            ensure!(
                g.left_degrees() == DegreeSequence::constant(2, n),
                "{parts:?}: not 2-regular"
            );
            ensure!(is_mirror(&g), "{parts:?}: is_mirror false");
            ensure!(
                verify_pairing(&g, &pairing) == Ok(true),
                "{parts:?}: block pairing fails"
            );
            count += 1;
        }
    }
    Ok(format!(
        "{count} cycle unions mirror, reflection pairing verifies on C_4..C_16"
    ))
}

/// Minimum-order simple graphs for degree sets.
fn criterion_8() -> Outcome {
    let mut count = 0;
    for mask in 1u32..1 << 8 {
        let values: Vec<usize> = (1..=8).rev().filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let s = DegreeSet::new(values.clone()).unwrap();
        let g = kapoor_realize(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure!(g.n() == s.max() + 1, "{s}: order {}", g.n());
        ensure!(
            degree_set_of(&g.degree_vec()) == values.iter().copied().collect(),
            "{s}: degree set {:?}",
            degree_set_of(&g.degree_vec())
        );
        count += 1;
    }
    Ok(format!("{count} sets with max <= 8"))
}

/// Mirror degree-set realizations.
fn criterion_9() -> Outcome {
    let mut count = 0;
    for mask in 1u32..1 << 7 {
        if mask.count_ones() > 4 {
            continue;
        }
        let values: Vec<usize> = (1..=7).rev().filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let wanted: BTreeSet<usize> = values.iter().copied().collect();
        let s = DegreeSet::new(values).unwrap();
        let m = degset_mirror_realize(&s).map_err(|e| format!("{s}: {e}"))?;
        let g = m.graph();
        ensure!(
            g.n1() == s.max() && g.n2() == s.max(),
            "{s}: sides {} and {}",
            g.n1(),
            g.n2()
        );
        ensure!(verify_pairing(g, m.pairing()) == Ok(true), "{s}: pairing fails");
        ensure!(
            degree_set_of(&g.left_degree_vec()) == wanted,
            "{s}: left degree set"
        );
        ensure!(
            degree_set_of(&g.right_degree_vec()) == wanted,
            "{s}: right degree set"
        );
        count += 1;
    }

    // {3,1}: path on 3 vertices, doubled, then the centre pair joined
    let s = DegreeSet::new(vec![3, 1]).unwrap();
    let lowered = kapoor_realize(&DegreeSet::new(vec![2, 1]).unwrap()).unwrap();
    ensure!(
        lowered.n() == 3 && lowered.edge_count() == 2 && lowered.degrees().as_slice() == [2, 1, 1],
        "{{2,1}} is not a path on 3 vertices"
    );
    let path = BipartiteGraph::from_edges(3, 3, [(0, 1), (0, 2), (1, 0), (2, 0)]).unwrap();
    ensure!(
        bipartite_isomorphic(kronecker_k2(lowered.as_lgraph()).graph(), &path, false),
        "doubling is not two paths on 3 vertices"
    );
    let bumped = path.with_edge(0, 0, true);
    let m = degset_mirror_realize(&s).unwrap();
    ensure!(
        m.graph().left_degrees().as_slice() == [3, 1, 1],
        "{{3,1}} left degrees"
    );
    ensure!(
        m.graph().right_degrees().as_slice() == [3, 1, 1],
        "{{3,1}} right degrees"
    );
    ensure!(
        bipartite_isomorphic(m.graph(), &bumped, false),
        "{{3,1}} differs from the hand trace"
    );
    ensure!(
        mirror_by_exhaustion(m.graph()),
        "{{3,1}} not mirror by exhaustion"
    );
    Ok(format!(
        "{count} sets with max <= 7 and at most 4 elements, {{3,1}} trace matches"
    ))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mirrorgraph"))
        .args(args)
        .env_remove(mirrorgraph_cli::BUDGET_ENV)
        .output()
        .expect("run mirrorgraph");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

struct Drawing {
    nodes: Vec<(String, i64, i64)>,
    edges: Vec<(String, String)>,
}

/// Parses `name [pos="x,y!"];` lines and `a -- b;` lines of a bipartite drawing.
fn parse_drawing(dot: &str) -> std::result::Result<Drawing, String> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((name, rest)) = line.split_once(" [pos=\"") {
            let coords = rest.trim_end_matches("!\"];");
            let (x, y) = coords.split_once(',').ok_or(format!("bad pos in {line:?}"))?;
            nodes.push((
                name.to_string(),
                x.parse().map_err(|_| line.to_string())?,
                y.parse().map_err(|_| line.to_string())?,
            ));
        } else if let Some((a, b)) = line.trim_end_matches(';').split_once(" -- ") {
            edges.push((a.to_string(), b.to_string()));
        }
    }
    Ok(Drawing { nodes, edges })
}

/// Command-line contract.
fn criterion_10() -> Outcome {
    let (code, out, _) = cli(&["mirror", "1"]);
    ensure!(code == 0, "mirror 1 exit {code}");
    ensure!(
        out == "{\"kind\":\"bipartite\",\"n1\":1,\"n2\":1,\"edges\":[[0,0]],\"pairing\":[0]}\n",
        "mirror 1 printed {out:?}"
    );

    let (code, out, _) = cli(&["staircase", "4", "--format", "dot"]);
    ensure!(code == 0, "staircase exit {code}");
    let Drawing { nodes, edges } = parse_drawing(&out)?;
    ensure!(
        nodes.len() == 8 && edges.len() == 10,
        "drawing has {} nodes, {} edges",
        nodes.len(),
        edges.len()
    );
    let at = |name: &str| nodes.iter().find(|(n, _, _)| n == name).map(|&(_, x, y)| (x, y));
    let mut placed = HashSet::new();
    for (a, b) in &edges {
        let (pa, pb) = (at(a).ok_or(a.clone())?, at(b).ok_or(b.clone())?);
        ensure!(
            pa.0 == 0 && pb.0 == 1,
            "edge {a} -- {b} does not run from x = 0 to x = 1"
        );
        placed.insert((pa.1, pb.1));
    }
    let expected: HashSet<(i64, i64)> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|(i, j)| i + j <= 3)
        .collect();
    ensure!(placed == expected, "drawn edges {placed:?} are not the staircase");
    ensure!(
        placed.iter().all(|&(y1, y2)| placed.contains(&(y2, y1))),
        "drawing not symmetric about x = 1/2"
    );

    let (code, out, _) = cli(&["check", "3,1"]);
    ensure!(
        code == 1 && out == "not bigraphic\n",
        "check 3,1 gave {code} {out:?}"
    );

    // corpus of canonical documents produced by the tool
    let invocations: [&[&str]; 20] = [
        &["mirror", "1"],
        &["mirror", "3,3,2,2,1,1"],
        &["mirror", "4,4,4,4"],
        &["mirror", ""],
        &["staircase", "0"],
        &["staircase", "5"],
        &["loops", "3,2,2,1"],
        &["loops", "1,1,1"],
        &["loops", "5,5,5,5,5"],
        &["realize", "3,2", "2,2,1"],
        &["realize", "1", "1,0,0"],
        &["degset", "3,1"],
        &["degset", "5,4,2"],
        &["degset", "7,3,2"],
        &["degset", "6"],
        &["kapoor", "3,1"],
        &["kapoor", "8,5,2,1"],
        &["kapoor", "4,3,2,1"],
        &["staircase", "3"],
        &["realize", "2,2,2", "3,3"],
    ];
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    for (k, args) in invocations.iter().enumerate() {
        let (code, doc, err) = cli(args);
        ensure!(code == 0, "{args:?}: exit {code}: {err}");
        let parsed = GraphDocument::read(&doc).map_err(|e| format!("{args:?}: {e}"))?;
        ensure!(
            parsed.write() == doc,
            "{args:?}: library round trip not byte-exact"
        );

        // through the binary: complement twice, or kron then fold
        let path = dir.join(format!("corpus{k}.json"));
        std::fs::write(&path, &doc).unwrap();
        let p = path.to_str().unwrap();
        let back = match parsed {
            GraphDocument::Bipartite { .. } => {
                let (c1, once, _) = cli(&["complement", p]);
                ensure!(c1 == 0, "{args:?}: complement exit {c1}");
                std::fs::write(&path, &once).unwrap();
                cli(&["complement", p])
            }
            GraphDocument::Lgraph { .. } => {
                let (c1, doubled, _) = cli(&["kron", p]);
                ensure!(c1 == 0, "{args:?}: kron exit {c1}");
                std::fs::write(&path, &doubled).unwrap();
                cli(&["fold", p])
            }
        };
        ensure!(
            back.0 == 0 && back.1 == doc,
            "{args:?}: binary round trip gave {:?}",
            back.1
        );
    }
    Ok("mirror 1, staircase 4 drawing, check 3,1 exit 1, 20-document round trip".into())
}

fn main() {
    let mut sweep = Sweep {
        bigraphic: Vec::new(),
    };
    let mut made = Vec::new();
    let mut failed = 0;
    let mut report = |k: usize, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {k:>2}: PASS ({secs:.2}s) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL ({secs:.2}s) {why}");
            }
        }
    };
    report(1, &mut || criterion_1(&mut sweep));
    report(2, &mut || criterion_2(&sweep, &mut made));
    report(3, &mut || criterion_3(&mut made));
    report(4, &mut || criterion_4(&made));
    report(5, &mut criterion_5);
    report(6, &mut criterion_6);
    report(7, &mut criterion_7);
    report(8, &mut criterion_8);
    report(9, &mut criterion_9);
    report(10, &mut criterion_10);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
