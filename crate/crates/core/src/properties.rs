//! Cross-module properties on randomly generated inputs.

use crate::graph::{component_lists, min_dominating_set_bruteforce};
use crate::random::{random_cograph, random_graph, random_interval_family, random_tree};
use crate::transforms::{bandwidth_relabel, incidence_subdivision, Labeling};
use crate::{
    canonicalize, is_dominating, is_mno, mds, mno_from_intervals, mno_from_tree, reachable,
    recognize_cograph, solve_dually_chordal, verify_sequence, Configuration, DcOutcome, Graph,
    Instance, JoinReason, JoinSolver, Mno, ReconfGraph, Rule,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A dominating configuration of exactly `k` tokens, or `None` if random
/// tries do not find one.
fn random_dominating(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Option<Configuration> {
    (0..200).find_map(|_| {
        let c = Configuration::from_vertices((0..k).map(|_| rng.gen_range(0..g.n())));
        is_dominating(g, &c).unwrap().then_some(c)
    })
}

fn tree_or_interval(seed: u64, n: usize, interval: bool) -> (Graph, Mno) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if interval {
        mno_from_intervals(&random_interval_family(n, &mut rng).unwrap()).unwrap()
    } else {
        let g = random_tree(n, &mut rng).unwrap();
        let m = mno_from_tree(&g).unwrap();
        (g, m)
    }
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| **b).map(|(e, _)| e)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dually_chordal_matches_oracle_and_keeps_canonical_set(
        seed in any::<u64>(),
        n in 1usize..=8,
        interval in any::<bool>(),
        extra in 0usize..=2,
    ) {
        let (g, m) = tree_or_interval(seed, n, interval);
        let t = mds(&g, &m).unwrap();
        let k = t.gamma() + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let (Some(s), Some(d)) = (random_dominating(&g, k, &mut rng), random_dominating(&g, k, &mut rng)) else {
            return Ok(());
        };
        let inst = Instance::new(g.clone(), s.clone(), d.clone(), Rule::Ts).unwrap();
        let outcome = solve_dually_chordal(&g, &m, &s, &d).unwrap();
        prop_assert_eq!(outcome.is_yes(), reachable(&inst).unwrap().is_yes());
        if let DcOutcome::Yes { sequence, meeting, source_moves } = outcome {
            prop_assert!(verify_sequence(&inst, &sequence).is_valid());
            let confs = sequence.configurations(&g).unwrap();
            prop_assert_eq!(&confs[source_moves], &meeting);
            let lead = canonicalize(&g, &m, &t, &s).unwrap().0.len();
            let tail = canonicalize(&g, &m, &t, &d).unwrap().0.len();
            for c in &confs[lead..=sequence.len() - tail] {
                prop_assert!(t.canonical.iter().all(|&v| c.contains(v)), "{c} lost the canonical set");
            }
        }
    }

    #[test]
    fn condition_one_routes_keep_both_sides_occupied(
        b1 in proptest::collection::vec(any::<bool>(), 6),
        b2 in proptest::collection::vec(any::<bool>(), 6),
        n1 in 1usize..=4,
        n2 in 1usize..=4,
        k in 3usize..=4,
        seed in any::<u64>(),
    ) {
        let (g1, g2) = (graph_from_bits(n1, &b1), graph_from_bits(n2, &b2));
        let solver = JoinSolver::new(&g1, &g2).unwrap();
        let g = solver.graph();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (Some(s), Some(d)) = (random_dominating(g, k, &mut rng), random_dominating(g, k, &mut rng)) else {
            return Ok(());
        };
        let v = solver.solve(&s, &d).unwrap();
        let inst = Instance::new(g.clone(), s.clone(), d.clone(), Rule::Ts).unwrap();
        prop_assert_eq!(v.is_yes(), reachable(&inst).unwrap().is_yes());
        if v.reason == JoinReason::ConditionI {
            let seq = v.sequence.unwrap();
            prop_assert!(verify_sequence(&inst, &seq).is_valid());
            let confs = seq.configurations(g).unwrap();
            for c in &confs[1..confs.len().saturating_sub(1)] {
                prop_assert!(c.support().any(|x| x < n1) && c.support().any(|x| x >= n1), "{c}");
            }
        }
    }

    #[test]
    fn cotree_round_trip(seed in any::<u64>(), n in 1usize..=14) {
        let (tree, g) = random_cograph(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let found = recognize_cograph(&g).unwrap();
        prop_assert_eq!(found.to_graph(n).unwrap(), g);
        prop_assert!(found.equivalent(&tree), "{} vs {}", tree, found);
    }

    #[test]
    fn relabeling_is_compact_and_bounded(seed in any::<u64>(), n in 2usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, 0.4, &mut rng);
        prop_assume!(g.m() > 0);
        let mut labels: Vec<usize> = (1..=n).collect();
        labels.shuffle(&mut rng);
        let k = Labeling::new(labels.clone(), n).unwrap().bandwidth(&g);
        let r = incidence_subdivision(&g);
        let out = bandwidth_relabel(&Labeling::new(labels, k).unwrap(), k, &r).unwrap();
        let mut sorted = out.labels.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=r.graph.n()).collect::<Vec<_>>());
        prop_assert_eq!(out.bandwidth_bound, k * (k + 1));
        prop_assert!(out.bandwidth(&r.graph) <= k * (k + 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sliding_reachability_implies_jumping(bits in proptest::collection::vec(any::<bool>(), 15), k in 1usize..=3) {
        let g = graph_from_bits(6, &bits);
        let ts = ReconfGraph::build(&g, k, Rule::Ts).unwrap();
        let tj = ReconfGraph::build(&g, k, Rule::Tj).unwrap();
        let confs: Vec<_> = ts.configurations().collect();
        for a in &confs {
            for b in &confs {
                if ts.connected(a, b) {
                    prop_assert!(tj.connected(a, b), "{a} -> {b}");
                }
            }
        }
    }
}

/// Gathering extras never moves tokens between components.
#[test]
fn component_counts_decide_forests() {
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (5, 6)]).unwrap();
    let comps = component_lists(&g);
    assert_eq!(comps.len(), 3);
    let m = Mno::new(vec![0, 1, 2, 3, 4, 5, 6], vec![1, 2, 2, 4, 4, 6, 6]).unwrap();
    assert!(is_mno(&g, &m).unwrap().is_valid());
    let s = Configuration::from_vertices([1, 3, 3, 5]);
    let same = Configuration::from_vertices([1, 4, 4, 6]);
    let moved = Configuration::from_vertices([1, 1, 4, 6]);
    assert!(solve_dually_chordal(&g, &m, &s, &same).unwrap().is_yes());
    assert_eq!(
        solve_dually_chordal(&g, &m, &s, &moved).unwrap(),
        DcOutcome::ComponentMismatch { component: 0 }
    );
    assert_eq!(min_dominating_set_bruteforce(&g).unwrap().0, 3);
}
