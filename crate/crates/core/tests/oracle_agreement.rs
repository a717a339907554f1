use linked_domain::generate::{gen_edge_realizing, gen_impartial_culture, gen_random_graph};
use linked_domain::oracle::{all_graphs, brute_force_linked, recognize_all_pairs, DEFAULT_CAP};
use linked_domain::{
    build_graph, recognize, recognize_election, verify_certificate, verify_witness,
    ConnectivityGraph, Election, LinkedOrder, Mode, RecognitionResult,
};

fn check(g: &ConnectivityGraph) {
    let result = recognize(g);
    let oracle = brute_force_linked(g, DEFAULT_CAP).unwrap();
    assert_eq!(result.is_linked(), oracle.is_some(), "{:?}", g.edges());
    match &result {
        RecognitionResult::Linked(w) => assert!(verify_witness(g, w).unwrap()),
        RecognitionResult::NotLinked(c) => assert!(verify_certificate(g, c)),
    }
    if let Some(w) = &oracle {
        assert!(verify_witness(g, w).unwrap());
    }
    assert_eq!(result.is_linked(), recognize_all_pairs(g).is_some());
}

#[test]
fn exhaustive_up_to_five_vertices() {
    for m in 1..=5 {
        all_graphs(m).for_each(|g| check(&g));
    }
}

#[test]
fn sampled_seven_vertices() {
    for seed in 0..300 {
        let g = gen_random_graph(7, 0.3 + (seed % 5) as f64 * 0.1, seed);
        check(&g);
    }
}

#[test]
fn linked_counts_on_five_vertices() {
    // labelled graphs on 5 vertices that admit a linked order, counted by a
    // separate permutation enumeration outside this crate
    let linked = all_graphs(5).filter(|g| recognize(g).is_linked()).count();
    let oracle = all_graphs(5)
        .filter(|g| brute_force_linked(g, 5).unwrap().is_some())
        .count();
    assert_eq!(linked, oracle);
    assert_eq!(linked, 156);
}

#[test]
fn full_triangle_profile() {
    // every ordered top-two pair on three candidates
    let names = ["a", "b", "c"];
    let votes = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]]
        .iter()
        .map(|v| (v.to_vec(), 1))
        .collect();
    let e = Election::from_ids(&names, votes).unwrap();
    let g = build_graph(&e, Mode::Strong).unwrap();
    assert_eq!(g.edge_count(), 3);
    assert_eq!(
        brute_force_linked(&g, 3).unwrap(),
        Some(LinkedOrder::new(vec![0, 1, 2]))
    );
    assert_eq!(
        recognize_election(&e, Mode::Strong).unwrap(),
        RecognitionResult::Linked(LinkedOrder::new(vec![0, 1, 2]))
    );
}

#[test]
fn weak_path_profile() {
    let e = Election::from_ids(&["a", "b", "c"], vec![(vec![0, 1, 2], 1), (vec![2, 1, 0], 1)])
        .unwrap();
    let g = build_graph(&e, Mode::Weak).unwrap();
    assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    assert_eq!(brute_force_linked(&g, 3).unwrap(), None);
    assert!(!recognize_election(&e, Mode::Weak).unwrap().is_linked());
}

#[test]
fn profile_independence() {
    // an impartial-culture profile and the edge-realizing profile of its
    // strong graph have the same graph, hence the same result
    for seed in 0..200 {
        let e = gen_impartial_culture(5, 20, seed).unwrap();
        let g = build_graph(&e, Mode::Strong).unwrap();
        let twin = gen_edge_realizing(&g).unwrap();
        assert_eq!(build_graph(&twin, Mode::Strong).unwrap(), g);
        assert_eq!(
            recognize_election(&e, Mode::Strong).unwrap(),
            recognize_election(&twin, Mode::Strong).unwrap()
        );
    }
}

#[test]
fn edge_realizing_round_trip() {
    for seed in 0..200 {
        let m = 2 + (seed as usize % 9);
        let g = gen_random_graph(m, (seed % 10) as f64 / 10.0, seed);
        assert_eq!(build_graph(&gen_edge_realizing(&g).unwrap(), Mode::Strong).unwrap(), g);
    }
}
