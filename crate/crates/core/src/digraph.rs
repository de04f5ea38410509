//! Simple digraphs on vertices `0..n`, with optional loops.
//!
//! A [`Digraph`] is immutable once built. Arcs are kept sorted
//! lexicographically, and the out- and in-neighbour lists are sorted too, so
//! every traversal below is deterministic.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

pub type Arc = (usize, usize);

#[derive(Debug, Clone, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    allow_loops: bool,
}

impl PartialEq for Digraph {
    // The loop flag is construction metadata; equality is on (V, A).
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Digraph {
    /// Loopless digraph; rejects loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Self::build(n, arcs, false)
    }

    /// Digraph that may contain loops.
    pub fn with_loops(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Self::build(n, arcs, true)
    }

    pub fn empty(n: usize) -> Self {
        Self::build(n, [], false).expect("empty digraph is valid")
    }

    fn build(n: usize, arcs: impl IntoIterator<Item = Arc>, allow_loops: bool) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v && !allow_loops {
                return Err(Error::LoopNotAllowed(u));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in &mut inn {
            l.sort_unstable();
        }
        Ok(Digraph {
            n,
            arcs,
            out,
            inn,
            allow_loops,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn allows_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// Position of an arc in the lexicographic arc order.
    pub fn arc_index(&self, arc: Arc) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn out_neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.out[v])
    }

    pub fn in_neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.inn[v])
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        self.out_neighbors(v).map(<[usize]>::len)
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        self.in_neighbors(v).map(<[usize]>::len)
    }

    // Unchecked accessors for internal loops over 0..n.
    pub(crate) fn out_of(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub(crate) fn in_of(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// `Some(k)` when every vertex has in- and out-degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.out[0].len() };
        (0..self.n)
            .all(|v| self.out[v].len() == k && self.inn[v].len() == k)
            .then_some(k)
    }

    pub fn reverse(&self) -> Digraph {
        Self::build(
            self.n,
            self.arcs.iter().map(|&(u, v)| (v, u)),
            self.allow_loops,
        )
        .expect("reversal preserves validity")
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.out[u].iter().chain(&self.inn[u]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Weak connectivity: the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    fn reach_count(&self, start: usize, forward: bool) -> usize {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut count = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let next = if forward { &self.out[u] } else { &self.inn[u] };
            for &w in next {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// One strongly connected component covering every vertex.
    pub fn is_strongly_connected(&self) -> bool {
        self.n > 0 && self.reach_count(0, true) == self.n && self.reach_count(0, false) == self.n
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.n).all(|v| self.out[v].len() == self.inn[v].len())
    }

    /// Connected (weakly) with in-degree equal to out-degree everywhere.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.is_balanced()
    }

    /// Hierholzer circuit starting at the lowest vertex with an out-arc;
    /// out-neighbours are taken in ascending order.
    pub fn euler_circuit(&self) -> Result<Vec<Arc>> {
        if !self.is_eulerian() {
            return Err(Error::NotEulerian);
        }
        let Some(start) = (0..self.n).find(|&v| !self.out[v].is_empty()) else {
            return Ok(Vec::new());
        };
        let mut next = vec![0usize; self.n];
        let mut stack = vec![start];
        let mut vertices = Vec::with_capacity(self.arcs.len() + 1);
        while let Some(&u) = stack.last() {
            if next[u] < self.out[u].len() {
                let w = self.out[u][next[u]];
                next[u] += 1;
                stack.push(w);
            } else {
                vertices.push(u);
                stack.pop();
            }
        }
        vertices.reverse();
        Ok(vertices.windows(2).map(|w| (w[0], w[1])).collect())
    }

    /// Kahn order, or `None` when a directed cycle (including a loop) exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.out[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Number of arcs on a longest dipath of an acyclic digraph.
    pub fn longest_dipath_length(&self) -> Result<usize> {
        let order = self.topological_order().ok_or(Error::NotAcyclic)?;
        let mut best = vec![0usize; self.n];
        for &u in &order {
            for &w in &self.out[u] {
                best[w] = best[w].max(best[u] + 1);
            }
        }
        Ok(best.into_iter().max().unwrap_or(0))
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v, BigInt::one());
        }
        m
    }

    /// Digraph of a square (0,1)-matrix; loops come from the diagonal.
    pub fn from_adjacency(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let mut arcs = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let x = m.get(i, j);
                if x.is_one() {
                    arcs.push((i, j));
                } else if !x.is_zero() {
                    return Err(Error::NonBinaryMatrix { row: i, col: j });
                }
            }
        }
        Self::with_loops(m.rows(), arcs)
    }

    /// Subdigraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let pos: BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let pos = &pos;
            self.out[v]
                .iter()
                .filter_map(move |w| pos.get(w).map(|&j| (i, j)))
        });
        Self::build(vertices.len(), arcs.collect::<Vec<_>>(), true)
            .expect("induced subdigraph is valid")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.n;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::build(
            self.n + other.n,
            arcs.collect::<Vec<_>>(),
            self.allow_loops || other.allow_loops,
        )
        .expect("disjoint union is valid")
    }

    /// Canonical edge-list text: `n m` header then sorted `tail head` lines.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.arcs.len());
        for &(u, v) in &self.arcs {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut arcs = Vec::with_capacity(m);
        for (lineno, line) in lines {
            if arcs.len() == m {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("more than {m} arc lines"),
                });
            }
            arcs.push(parse_pair(lineno, line)?);
        }
        if arcs.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {m} arcs, found {}", arcs.len()),
            });
        }
        Self::with_loops(n, arcs)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected two non-negative integers, got `{text}`"),
        }),
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_edge_list(s)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Digraph with arc multiplicities; produced by in-splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDigraph {
    n: usize,
    arc_count: BTreeMap<Arc, usize>,
}

impl MultiDigraph {
    /// Zero multiplicities are dropped.
    pub fn new(n: usize, counts: impl IntoIterator<Item = (Arc, usize)>) -> Result<Self> {
        let mut arc_count = BTreeMap::new();
        for ((u, v), c) in counts {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if c > 0 {
                *arc_count.entry((u, v)).or_insert(0) += c;
            }
        }
        Ok(MultiDigraph { n, arc_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.arc_count.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Total number of arcs, counted with multiplicity.
    pub fn arc_total(&self) -> usize {
        self.arc_count.values().sum()
    }

    pub fn arc_counts(&self) -> &BTreeMap<Arc, usize> {
        &self.arc_count
    }

    /// The underlying simple digraph, if no arc is repeated.
    pub fn to_simple(&self) -> Option<Digraph> {
        if self.arc_count.values().any(|&c| c > 1) {
            return None;
        }
        Digraph::with_loops(self.n, self.arc_count.keys().copied()).ok()
    }
}

/// Standard small digraphs used throughout the tests and the CLI.
pub mod families {
    use super::Digraph;

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn dicycle(n: usize) -> Digraph {
        assert!(n >= 2, "a loopless dicycle needs n >= 2");
        Digraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Directed path on `n` vertices (`n - 1` arcs).
    pub fn dipath(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// Complete digraph with a loop at every vertex (all-ones adjacency).
    pub fn complete_with_loops(d: usize) -> Digraph {
        Digraph::with_loops(d, (0..d).flat_map(|u| (0..d).map(move |v| (u, v)))).unwrap()
    }

    /// The 2-regular "2-cube" on four vertices: 0,3 -> {1,2} and 1,2 -> {0,3}.
    pub fn two_cube() -> Digraph {
        Digraph::new(
            4,
            [
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 3),
                (2, 0),
                (2, 3),
                (3, 1),
                (3, 2),
            ],
        )
        .unwrap()
    }

    /// Two directed triangles sharing vertex 0.
    pub fn figure_eight() -> Digraph {
        Digraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Two directed triangles joined by a dipath of `bridge` arcs.
    pub fn cycles_joined_by_path(bridge: usize) -> Digraph {
        // first triangle 0,1,2; path 2 -> p1 -> ... -> second triangle start
        let mut arcs = vec![(0, 1), (1, 2), (2, 0)];
        let mut prev = 2;
        let mut next = 3;
        for _ in 0..bridge.saturating_sub(1) {
            arcs.push((prev, next));
            prev = next;
            next += 1;
        }
        let a = next;
        arcs.push((prev, a));
        arcs.extend([(a, a + 1), (a + 1, a + 2), (a + 2, a)]);
        Digraph::new(a + 3, arcs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn two_cube_degrees() {
        let d = two_cube();
        assert_eq!(d.in_degree(0).unwrap(), 2);
        assert_eq!(d.out_degree(0).unwrap(), 2);
        assert_eq!(d.regularity(), Some(2));
    }

    #[test]
    fn isolated_vertex_has_zero_degrees() {
        let d = Digraph::empty(1);
        assert_eq!(d.in_degree(0).unwrap(), 0);
        assert_eq!(d.out_degree(0).unwrap(), 0);
        assert!(matches!(
            d.in_degree(1),
            Err(Error::VertexOutOfRange { vertex: 1, n: 1 })
        ));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Digraph::new(2, [(0, 0)]), Err(Error::LoopNotAllowed(0)));
        assert_eq!(
            Digraph::new(2, [(0, 1), (0, 1)]),
            Err(Error::DuplicateArc(0, 1))
        );
        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(Digraph::with_loops(1, [(0, 0)]).is_ok());
    }

    #[test]
    fn strong_connectivity() {
        assert!(dicycle(5).is_strongly_connected());
        assert!(!dipath(3).is_strongly_connected());
        assert!(two_cube().is_strongly_connected());
    }

    #[test]
    fn eulerian_examples() {
        assert!(dicycle(4).is_eulerian());
        assert!(two_cube().is_eulerian());
        // D3 shifted to 0-indexing
        let d3 = Digraph::new(4, [(0, 1), (0, 2), (3, 1)]).unwrap();
        assert!(!d3.is_eulerian());
        // balanced but disconnected
        assert!(!dicycle(3).disjoint_union(&dicycle(3)).is_eulerian());
    }

    #[test]
    fn euler_circuit_of_triangle() {
        assert_eq!(
            dicycle(3).euler_circuit().unwrap(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
        assert_eq!(dipath(3).euler_circuit(), Err(Error::NotEulerian));
    }

    #[test]
    fn acyclic_and_longest_path() {
        assert_eq!(dipath(4).longest_dipath_length().unwrap(), 3);
        assert!(!dicycle(3).is_acyclic());
        assert_eq!(dicycle(3).longest_dipath_length(), Err(Error::NotAcyclic));
        let looped = Digraph::with_loops(1, [(0, 0)]).unwrap();
        assert!(!looped.is_acyclic());
    }

    #[test]
    fn adjacency_of_two_cube() {
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 1, 0],
            vec![1, 0, 0, 1],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
        ])
        .unwrap();
        assert_eq!(two_cube().adjacency(), expected);
        assert_eq!(Digraph::from_adjacency(&expected).unwrap(), two_cube());
    }

    #[test]
    fn from_adjacency_rejects_non_binary() {
        let m = IntMatrix::from_rows(&[vec![0, 2], vec![0, 0]]).unwrap();
        assert_eq!(
            Digraph::from_adjacency(&m),
            Err(Error::NonBinaryMatrix { row: 0, col: 1 })
        );
    }

    #[test]
    fn edge_list_roundtrip_with_comments() {
        let text = "# a triangle\n3 3\n2 0\n0 1\n# middle\n1 2\n";
        let d: Digraph = text.parse().unwrap();
        assert_eq!(d, dicycle(3));
        assert_eq!(d.to_edge_list(), "3 3\n0 1\n1 2\n2 0\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Digraph::parse_edge_list(""),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Digraph::parse_edge_list("2 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Digraph::parse_edge_list("2 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn components_are_weak() {
        let d = Digraph::new(4, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(d.connected_components(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn joined_cycles_shape() {
        let d = cycles_joined_by_path(2);
        assert_eq!(d.vertex_count(), 7);
        assert_eq!(d.arc_count(), 8);
        assert!(d.is_connected());
        assert!(!d.is_strongly_connected());
    }
}
