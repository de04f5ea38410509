use linedigraph::digraph::families::{dicycle, dipath, figure_eight, two_cube};
use linedigraph::{Digraph, Error, IntMatrix};

fn check_circuit(d: &Digraph, circuit: &[(usize, usize)]) {
    assert_eq!(circuit.len(), d.arc_count());
    let mut used = circuit.to_vec();
    used.sort_unstable();
    assert_eq!(used, d.arcs());
    for w in circuit.windows(2) {
        assert_eq!(w[0].1, w[1].0);
    }
    assert_eq!(circuit.last().unwrap().1, circuit[0].0);
}

#[test]
fn two_cube_degrees_and_matrix() {
    let d = two_cube();
    assert_eq!(d.in_degree(0).unwrap(), 2);
    assert_eq!(d.out_degree(0).unwrap(), 2);
    let m = IntMatrix::from_rows(&[
        vec![0, 1, 1, 0],
        vec![1, 0, 0, 1],
        vec![1, 0, 0, 1],
        vec![0, 1, 1, 0],
    ])
    .unwrap();
    assert_eq!(d.adjacency(), m);
    assert!(d.is_strongly_connected());
    assert!(d.is_eulerian());
}

#[test]
fn single_vertex() {
    let d = Digraph::empty(1);
    assert_eq!(d.in_degree(0).unwrap(), 0);
    assert_eq!(d.out_degree(0).unwrap(), 0);
    assert!(matches!(
        d.in_degree(1),
        Err(Error::VertexOutOfRange { .. })
    ));
}

#[test]
fn connectivity_examples() {
    assert!(dicycle(5).is_strongly_connected());
    assert!(!dipath(3).is_strongly_connected());
    assert!(dicycle(4).is_eulerian());
    let d3 = Digraph::new(4, [(0, 1), (0, 2), (3, 1)]).unwrap();
    assert!(!d3.is_eulerian());
    assert!(d3.is_connected());
}

#[test]
fn euler_circuits() {
    assert_eq!(
        dicycle(3).euler_circuit().unwrap(),
        vec![(0, 1), (1, 2), (2, 0)]
    );
    for d in [two_cube(), figure_eight()] {
        check_circuit(&d, &d.euler_circuit().unwrap());
    }
    assert_eq!(dipath(3).euler_circuit().unwrap_err(), Error::NotEulerian);
}

#[test]
fn plumbing() {
    let d = figure_eight();
    assert_eq!(d.reverse().reverse(), d);
    assert_eq!(Digraph::from_adjacency(&d.adjacency()).unwrap(), d);
    assert_eq!(dipath(4).longest_dipath_length().unwrap(), 3);
    assert_eq!(
        dicycle(3).longest_dipath_length().unwrap_err(),
        Error::NotAcyclic
    );
    let bad = IntMatrix::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap();
    assert!(matches!(
        Digraph::from_adjacency(&bad),
        Err(Error::NonBinaryMatrix { .. })
    ));
}

#[test]
fn edge_list_round_trip() {
    let text = "# the 2-cube\n4 8\n0 1\n0 2\n1 0\n1 3\n2 0\n2 3\n3 1\n3 2\n";
    let d: Digraph = text.parse().unwrap();
    assert_eq!(d, two_cube());
    assert_eq!(d.to_edge_list().parse::<Digraph>().unwrap(), d);
    assert!("3 1\n0 0\n".parse::<Digraph>().is_ok_and(|d| d.has_loops()));
    assert!("2 1\n0 5\n".parse::<Digraph>().is_err());
    assert!(matches!(
        "2 2\n0 1\n".parse::<Digraph>(),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn invalid_construction() {
    assert_eq!(
        Digraph::new(2, [(0, 0)]).unwrap_err(),
        Error::LoopNotAllowed(0)
    );
    assert!(matches!(
        Digraph::new(2, [(0, 1), (0, 1)]),
        Err(Error::DuplicateArc(..))
    ));
    assert!(matches!(
        Digraph::new(2, [(0, 2)]),
        Err(Error::VertexOutOfRange { .. })
    ));
}
