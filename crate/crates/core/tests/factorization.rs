use linedigraph::digraph::families::{dicycle, figure_eight, two_cube};
use linedigraph::factorization::{
    block_line_matrix, factor_growth, growth, line_growth, one_factorization,
    one_factorization_seeded, permutation_to_line_labels,
};
use linedigraph::iso::isomorphic;
use linedigraph::{line_digraph, random, Digraph, Error, Factorization, IntMatrix, OneFactor};
use num_bigint::BigInt;

fn swap_pairs() -> OneFactor {
    OneFactor::new(vec![1, 0, 3, 2]).unwrap()
}

fn swap_halves() -> OneFactor {
    OneFactor::new(vec![2, 3, 0, 1]).unwrap()
}

fn check(d: &Digraph, fac: &Factorization) {
    let k = d.regularity().unwrap();
    assert_eq!(fac.k(), k);
    let mut sum = IntMatrix::zeros(d.vertex_count(), d.vertex_count());
    for f in fac.factors() {
        let m = f.matrix();
        assert!(m
            .row_sums()
            .iter()
            .chain(&m.col_sums())
            .all(|s| *s == BigInt::from(1)));
        sum = &sum + &m;
    }
    assert_eq!(sum, d.adjacency());
    let block = block_line_matrix(fac);
    let kk = BigInt::from(k);
    assert!(block
        .row_sums()
        .iter()
        .chain(&block.col_sums())
        .all(|s| *s == kk));
    let relabelled = line_digraph(d)
        .unwrap()
        .graph
        .adjacency()
        .permuted(&permutation_to_line_labels(fac))
        .unwrap();
    assert_eq!(relabelled, block);
}

#[test]
fn seeding_with_one_factor_forces_the_other() {
    let fac = one_factorization_seeded(&two_cube(), &[swap_pairs()]).unwrap();
    assert_eq!(fac.factors(), &[swap_pairs(), swap_halves()]);
}

#[test]
fn cycle_has_single_factor() {
    let fac = one_factorization(&dicycle(5)).unwrap();
    assert_eq!(
        fac.factors(),
        &[OneFactor::new(vec![1, 2, 3, 4, 0]).unwrap()]
    );
    assert_eq!(block_line_matrix(&fac), dicycle(5).adjacency());
    check(&dicycle(5), &fac);
}

#[test]
fn random_regular_factorizations() {
    let mut rng = random::rng(21);
    for (n, k) in [(6, 3), (5, 3), (6, 2), (7, 3), (4, 2), (5, 1)] {
        for _ in 0..5 {
            let d = random::regular(&mut rng, n, k, n % 2 == 0);
            check(&d, &one_factorization(&d).unwrap());
        }
    }
}

#[test]
fn not_regular_rejected() {
    assert_eq!(
        one_factorization(&figure_eight()).unwrap_err(),
        Error::NotRegular
    );
    let bad = Factorization::for_digraph(&two_cube(), vec![swap_pairs(), swap_pairs()]);
    assert!(matches!(bad, Err(Error::InvalidFactorization(_))));
}

#[test]
fn grid_growth_matrices() {
    let fac = Factorization::for_digraph(&two_cube(), vec![swap_pairs(), swap_halves()]).unwrap();
    let top: Vec<Vec<i64>> = vec![
        vec![0, 1, 0, 0, 0, 0, 1, 0],
        vec![1, 0, 0, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 1, 1, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 1, 0, 0],
    ];
    let zeros = vec![vec![0i64; 8]; 4];
    let g1 = IntMatrix::from_rows(&[top.clone(), zeros.clone()].concat()).unwrap();
    let g2 = IntMatrix::from_rows(&[zeros, top].concat()).unwrap();
    assert_eq!(factor_growth(&fac, 0).unwrap().adjacency(), g1);
    assert_eq!(factor_growth(&fac, 1).unwrap().adjacency(), g2);
    assert_eq!(&g1 + &g2, block_line_matrix(&fac));
    for j in 0..2 {
        let a = factor_growth(&fac, j).unwrap();
        let b = line_growth(&fac, j).unwrap();
        assert!(isomorphic(&a, &b).unwrap().is_some());
    }
    assert!(factor_growth(&fac, 2).is_err());
}

#[test]
fn generic_growth() {
    let d = two_cube();
    let same = growth(&d, &d).unwrap();
    assert_eq!(same.graph, d);
    assert!(same.fresh.is_empty());
    let g = growth(&d, &swap_pairs().to_digraph()).unwrap();
    assert_eq!(g.graph.vertex_count(), 8);
    assert_eq!(g.graph.arc_count(), 8);
    assert!((0..4).all(|v| g.graph.out_degree(v).unwrap() == 2));
    assert!(
        g.fresh
            .iter()
            .all(|f| d.has_arc(f.anchor, f.head)
                && !swap_pairs().to_digraph().has_arc(f.anchor, f.head))
    );
    let sparse = growth(&d, &Digraph::new(4, [(0, 1)]).unwrap()).unwrap();
    assert_eq!(sparse.fresh.len(), 7);
    assert!((0..4).all(|v| sparse.graph.out_degree(v).unwrap() == 2));
    assert!(matches!(
        growth(&d, &Digraph::new(4, [(0, 3)]).unwrap()),
        Err(Error::NotSubdigraph(0, 3))
    ));
    assert!(matches!(
        growth(&d, &Digraph::empty(3)),
        Err(Error::NotSpanning(_))
    ));
}

#[test]
fn text_round_trip() {
    let fac = Factorization::for_digraph(&two_cube(), vec![swap_pairs(), swap_halves()]).unwrap();
    let text = fac.to_text();
    assert!(text.starts_with("factors 2 4\n"));
    assert_eq!(Factorization::parse(&two_cube(), &text).unwrap(), fac);
}
