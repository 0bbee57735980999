//! Exhaustive checks of the structural claims at small sizes.

use std::collections::HashSet;

use mirrorgraph::*;

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

/// Degree sequences of every l-graph on `n` vertices.
fn loop_graphic_sequences(n: usize) -> HashSet<Vec<usize>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len())
        .map(|mask| {
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
            deg
        })
        .collect()
}

#[test]
fn mirror_realize_succeeds_whenever_bigraphic() {
    for len in 0..=6 {
        for p in sequences(len, len) {
            if gale_ryser_check(&p, &p) {
                let m = mirror_realize(&p).unwrap_or_else(|e| panic!("{p}: {e}"));
                assert!(m.pairing().verify(m.graph()).unwrap());
                assert_eq!(m.graph().left_degrees(), p);
                assert_eq!(m.graph().right_degrees(), p);
            } else {
                assert_eq!(mirror_realize(&p), Err(Error::NotBigraphic));
            }
        }
    }
}

#[test]
fn loop_graphic_iff_bigraphic() {
    for n in 0..=5 {
        let realizable = loop_graphic_sequences(n);
        for p in sequences(n, n + 1) {
            let expected = realizable.contains(p.as_slice());
            assert_eq!(loop_check(&p), expected, "{p}");
            assert_eq!(hh_check(&p, &p), expected, "{p}");
            if expected {
                assert_eq!(loop_realize(&p).unwrap().degrees(), p);
            }
        }
    }
}

#[test]
fn enumerator_matches_brute_force_bucketing() {
    for n in 1..=3 {
        // bucket every n x n matrix by degree pair, then by isomorphism
        let mut by_degrees: Vec<(DegreeSequence, DegreeSequence, Vec<BipartiteGraph>)> = Vec::new();
        for mask in 0u32..1 << (n * n) {
            let g = BipartiteGraph::from_fn(n, n, |r, c| mask >> (r * n + c) & 1 == 1);
            let key = (g.left_degrees(), g.right_degrees());
            let idx = match by_degrees.iter().position(|(p, q, _)| (p, q) == (&key.0, &key.1)) {
                Some(i) => i,
                None => {
                    by_degrees.push((key.0, key.1, Vec::new()));
                    by_degrees.len() - 1
                }
            };
            let swap = by_degrees[idx].0 == by_degrees[idx].1;
            let reps = &mut by_degrees[idx].2;
            if !reps.iter().any(|r| bipartite_isomorphic(r, &g, swap)) {
                reps.push(g);
            }
        }
        for (p, q, reps) in &by_degrees {
            let classes = enumerate_realizations(p, q, true).unwrap();
            assert_eq!(classes.len(), reps.len(), "{p} {q}");
            for (a, b) in classes.iter().zip(classes.iter().skip(1)) {
                assert!(!bipartite_isomorphic(a, b, p == q));
            }
        }
    }
}

#[test]
fn enumerated_classes_are_sound_and_distinct() {
    for len in 1..=5 {
        for p in sequences(len, len) {
            if !gale_ryser_check(&p, &p) {
                continue;
            }
            for swap in [false, true] {
                let classes = enumerate_realizations(&p, &p, swap).unwrap();
                assert!(!classes.is_empty(), "{p}");
                for (i, a) in classes.iter().enumerate() {
                    assert_eq!(a.left_degrees(), p);
                    assert_eq!(a.right_degrees(), p);
                    for b in &classes[i + 1..] {
                        assert!(!bipartite_isomorphic(a, b, swap), "{p}: {a:?} ~ {b:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn unbalanced_pairs_enumerate_side_preserving() {
    let p = DegreeSequence::new(vec![2, 2, 1]).unwrap();
    let q = DegreeSequence::new(vec![3, 2]).unwrap();
    let classes = enumerate_realizations(&p, &q, true).unwrap();
    assert_eq!(classes, enumerate_realizations(&p, &q, false).unwrap());
    assert!(!classes.is_empty());
    for g in &classes {
        assert_eq!((g.left_degrees(), g.right_degrees()), (p.clone(), q.clone()));
    }
}

#[test]
fn complement_duality() {
    for len in 1..=4 {
        for p in sequences(len, len) {
            let Ok(report) = bipp_mirr_report(&p, &Default::default()) else {
                continue;
            };
            let complementary = DegreeSequence::sorted(p.iter().map(|&d| len - d).collect());
            let dual = bipp_mirr_report(&complementary, &Default::default()).unwrap();
            assert_eq!(report.bipp_count, dual.bipp_count, "{p}");
            assert_eq!(report.mirr_count, dual.mirr_count, "{p}");
            for w in &report.witnesses {
                let c = canonical_form_with_swap(&bipartite_complement(&w.graph));
                let image = dual.witnesses.iter().find(|d| d.graph == c).expect("class image");
                assert_eq!(image.is_mirror(), w.is_mirror());
            }
        }
    }
}

#[test]
fn report_verdicts_match_permutation_brute_force() {
    let p = DegreeSequence::new(vec![2, 2, 1, 1]).unwrap();
    let report = bipp_mirr_report(&p, &Default::default()).unwrap();
    assert!(report.mirr_count <= report.bipp_count);
    let perms = permutations(4);
    for w in &report.witnesses {
        assert_eq!(w.graph.left_degrees(), p);
        assert_eq!(w.graph.right_degrees(), p);
        let brute = perms
            .iter()
            .any(|pi| MirrorPairing::new(pi.clone()).unwrap().verify(&w.graph).unwrap());
        assert_eq!(w.is_mirror(), brute);
        assert_eq!(is_mirror(&w.graph), brute);
    }
}

#[test]
fn small_regular_graphs_are_mirror() {
    for n in 0..=4 {
        for r in 0..=n {
            for w in regular_survey(n, r, &Default::default()).unwrap() {
                assert!(w.is_mirror(), "n = {n}, r = {r}: {:?}", w.graph);
            }
        }
    }
}

#[test]
fn two_regular_classes_are_cycle_unions() {
    for n in 2..=6 {
        let classes = regular_survey(n, 2, &Default::default()).unwrap();
        // one class per partition of n into parts >= 2
        let expected = match n {
            2 | 3 => 1,
            4 | 5 => 2,
            6 => 4,
            _ => unreachable!(),
        };
        assert_eq!(classes.len(), expected, "n = {n}");
        assert!(classes.iter().all(ClassWitness::is_mirror));
    }
}
