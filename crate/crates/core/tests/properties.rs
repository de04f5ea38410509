use linedigraph::line::{
    in_split, is_line_digraph_forbidden, is_line_digraph_matrix, InSplitPartition,
};
use linedigraph::spectral::line_charpoly_sides;
use linedigraph::{line_digraph, Digraph};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn digraph(max_n: usize, loops: bool) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && (loops || i / n != i % n))
                .map(|i| (i / n, i % n));
            Digraph::with_loops(n, arcs.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn arcs_weakly_connected(d: &Digraph) -> bool {
    d.connected_components()
        .iter()
        .filter(|c| {
            c.iter()
                .any(|&v| d.out_degree(v).unwrap() + d.in_degree(v).unwrap() > 0)
        })
        .count()
        == 1
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        rng_seed: RngSeed::Fixed(0x11e5),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn degree_sums(d in digraph(8, true)) {
        let n = d.vertex_count();
        let ins: usize = (0..n).map(|v| d.in_degree(v).unwrap()).sum();
        let outs: usize = (0..n).map(|v| d.out_degree(v).unwrap()).sum();
        prop_assert_eq!(ins, d.arc_count());
        prop_assert_eq!(outs, d.arc_count());
    }

    #[test]
    fn adjacency_round_trip(d in digraph(8, true)) {
        prop_assert_eq!(Digraph::from_adjacency(&d.adjacency()).unwrap(), d.clone());
        prop_assert_eq!(d.is_strongly_connected(), d.reverse().is_strongly_connected());
        prop_assert_eq!(d.reverse().reverse(), d);
    }

    #[test]
    fn euler_circuit_is_valid(d in digraph(6, true)) {
        if d.is_eulerian() && d.arc_count() > 0 {
            let c = d.euler_circuit().unwrap();
            let mut sorted = c.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted.as_slice(), d.arcs());
            prop_assert!(c.windows(2).all(|w| w[0].1 == w[1].0));
            prop_assert_eq!(c.last().unwrap().1, c[0].0);
        }
    }

    #[test]
    fn line_digraph_structure(d in digraph(7, false)) {
        prop_assume!(d.arc_count() > 0);
        let l = line_digraph(&d).unwrap().graph;
        let n = d.vertex_count();
        let size: usize = (0..n).map(|v| d.in_degree(v).unwrap() * d.out_degree(v).unwrap()).sum();
        prop_assert_eq!(l.vertex_count(), d.arc_count());
        prop_assert_eq!(l.arc_count(), size);
        for (i, &(a, b)) in d.arcs().iter().enumerate() {
            prop_assert_eq!(l.in_degree(i).unwrap(), d.in_degree(a).unwrap());
            prop_assert_eq!(l.out_degree(i).unwrap(), d.out_degree(b).unwrap());
        }
        let no_isolated = (0..n).all(|v| d.in_degree(v).unwrap() + d.out_degree(v).unwrap() > 0);
        if no_isolated && d.arc_count() >= 2 {
            prop_assert_eq!(l.is_strongly_connected(), d.is_strongly_connected());
        }
        let degree_condition = d.arcs().iter().all(|&(a, b)| d.in_degree(a).unwrap() == d.out_degree(b).unwrap());
        prop_assert_eq!(l.is_balanced(), degree_condition);
        if d.is_strongly_connected() {
            prop_assert_eq!(l.is_eulerian(), degree_condition);
        }
        if l.is_eulerian() {
            prop_assert!(degree_condition && arcs_weakly_connected(&d));
        }
        prop_assert!(is_line_digraph_matrix(&l).unwrap());
    }

    #[test]
    fn recognisers_agree(d in digraph(7, false)) {
        prop_assert_eq!(is_line_digraph_matrix(&d).unwrap(), is_line_digraph_forbidden(&d).unwrap());
    }

    #[test]
    fn charpoly_identity(d in digraph(6, false)) {
        prop_assume!(d.arc_count() >= d.vertex_count());
        let (lhs, rhs) = line_charpoly_sides(&d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn maximal_in_split_is_line_digraph(d in digraph(6, true)) {
        prop_assume!(d.arc_count() > 0);
        let split = in_split(&d, &InSplitPartition::maximal(&d)).unwrap();
        let l = line_digraph(&d).unwrap().graph;
        prop_assert_eq!(split.graph.vertex_count(), l.vertex_count());
        prop_assert_eq!(split.graph.arc_total(), l.arc_count());
        // split vertex (v, j) stands for the j-th in-arc of v
        let arc_of = |x: usize| {
            let (v, j) = split.class_of[x];
            let tail = d.in_neighbors(v).unwrap()[j];
            d.arc_index((tail, v)).unwrap()
        };
        for (&(x, y), &count) in split.graph.arc_counts() {
            prop_assert_eq!(count, 1);
            prop_assert!(l.has_arc(arc_of(x), arc_of(y)));
        }
    }
}
