//! 1-factorizations of regular digraphs, growth digraphs and the block form
//! of the line digraph adjacency matrix.
//!
//! Block index convention: the pair `(F_j, v)` (factor `j`, vertex `v`, both
//! 0-indexed) sits at row/column `j * n + v`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};
use crate::line::line_digraph;
use crate::matrix::IntMatrix;

/// A spanning 1-regular subdigraph, stored as its successor permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneFactor {
    successor: Vec<usize>,
}

impl OneFactor {
    pub fn new(successor: Vec<usize>) -> Result<Self> {
        let n = successor.len();
        let mut hit = vec![false; n];
        for &s in &successor {
            if s >= n || hit[s] {
                return Err(Error::InvalidFactorization(format!(
                    "successor array {successor:?} is not a permutation"
                )));
            }
            hit[s] = true;
        }
        Ok(OneFactor { successor })
    }

    pub fn successor(&self, v: usize) -> usize {
        self.successor[v]
    }

    pub fn successors(&self) -> &[usize] {
        &self.successor
    }

    pub fn len(&self) -> usize {
        self.successor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successor.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.successor.iter().enumerate().map(|(v, &s)| (v, s))
    }

    /// Permutation matrix `M(F)[v][successor(v)] = 1`.
    pub fn matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zeros(n, n);
        for (v, s) in self.arcs() {
            m.set(v, s, BigInt::one());
        }
        m
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::with_loops(self.len(), self.arcs()).expect("a permutation is a simple digraph")
    }
}

/// Ordered, pairwise arc-disjoint 1-factors covering a `k`-regular digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<OneFactor>,
    host_n: usize,
}

impl Factorization {
    /// Validates that `factors` is a 1-factorization of `d`.
    pub fn for_digraph(d: &Digraph, factors: Vec<OneFactor>) -> Result<Self> {
        let n = d.vertex_count();
        let mut seen = std::collections::BTreeSet::new();
        for (j, f) in factors.iter().enumerate() {
            if f.len() != n {
                return Err(Error::InvalidFactorization(format!(
                    "factor {j} has {} vertices, host has {n}",
                    f.len()
                )));
            }
            for arc in f.arcs() {
                if !d.has_arc(arc.0, arc.1) {
                    return Err(Error::NotSubdigraph(arc.0, arc.1));
                }
                if !seen.insert(arc) {
                    return Err(Error::InvalidFactorization(format!(
                        "arc ({},{}) used by two factors",
                        arc.0, arc.1
                    )));
                }
            }
        }
        if seen.len() != d.arc_count() {
            return Err(Error::InvalidFactorization(format!(
                "factors cover {} of {} arcs",
                seen.len(),
                d.arc_count()
            )));
        }
        Ok(Factorization { factors, host_n: n })
    }

    pub fn factors(&self) -> &[OneFactor] {
        &self.factors
    }

    /// Number of factors, i.e. the regularity degree.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    /// The factored digraph, rebuilt as the union of the factors.
    pub fn host(&self) -> Digraph {
        Digraph::with_loops(self.host_n, self.factors.iter().flat_map(OneFactor::arcs))
            .expect("factors are arc-disjoint")
    }

    /// Index of the factor containing `arc`.
    pub fn factor_of(&self, arc: Arc) -> Option<usize> {
        self.factors
            .iter()
            .position(|f| f.successor.get(arc.0) == Some(&arc.1))
    }

    /// `factors k n` header followed by one successor array per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("factors {} {}\n", self.k(), self.host_n);
        for f in &self.factors {
            let line: Vec<String> = f.successor.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses [`Factorization::to_text`] output and checks it against `d`.
    pub fn parse(d: &Digraph, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let (hl, header) = lines
            .next()
            .ok_or_else(|| bad(0, "missing `factors k n` header"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let (k, n) = match parts.as_slice() {
            ["factors", k, n] => (
                k.parse::<usize>().map_err(|_| bad(hl, "bad k"))?,
                n.parse::<usize>().map_err(|_| bad(hl, "bad n"))?,
            ),
            _ => return Err(bad(hl, "expected `factors k n`")),
        };
        let mut factors = Vec::with_capacity(k);
        for (ln, line) in lines {
            let succ: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse).collect();
            let succ = succ.map_err(|_| bad(ln, "bad successor entry"))?;
            if succ.len() != n {
                return Err(bad(ln, "successor array has the wrong length"));
            }
            factors.push(OneFactor::new(succ)?);
        }
        if factors.len() != k {
            return Err(bad(0, "wrong number of factor lines"));
        }
        Self::for_digraph(d, factors)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for OneFactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let succ: std::result::Result<Vec<usize>, _> =
            s.split_whitespace().map(str::parse).collect();
        let succ = succ.map_err(|_| Error::Parse {
            line: 1,
            msg: format!("bad successor array `{s}`"),
        })?;
        OneFactor::new(succ)
    }
}

/// Splits a `k`-regular digraph into `k` arc-disjoint 1-factors.
pub fn one_factorization(d: &Digraph) -> Result<Factorization> {
    one_factorization_seeded(d, &[])
}

/// Like [`one_factorization`], but the first factors are the given ones;
/// the rest are found by repeated perfect matching.
pub fn one_factorization_seeded(d: &Digraph, seed: &[OneFactor]) -> Result<Factorization> {
    let k = d.regularity().ok_or(Error::NotRegular)?;
    let n = d.vertex_count();
    let mut remaining: Vec<Vec<usize>> = (0..n).map(|v| d.out_of(v).to_vec()).collect();
    let mut factors = Vec::with_capacity(k);
    for f in seed {
        if f.len() != n {
            return Err(Error::InvalidFactorization(
                "seed factor has the wrong size".into(),
            ));
        }
        for (v, s) in f.arcs() {
            let pos = remaining[v].binary_search(&s).map_err(|_| {
                Error::InvalidFactorization(format!("seed arc ({v},{s}) unavailable"))
            })?;
            remaining[v].remove(pos);
        }
        factors.push(f.clone());
    }
    while factors.len() < k {
        let successor = perfect_matching(&remaining).ok_or_else(|| {
            Error::InvalidFactorization("no perfect matching in the remainder".into())
        })?;
        for (v, &s) in successor.iter().enumerate() {
            let pos = remaining[v]
                .binary_search(&s)
                .expect("matched arc is present");
            remaining[v].remove(pos);
        }
        factors.push(OneFactor { successor });
    }
    Factorization::for_digraph(d, factors)
}

// Kuhn's augmenting paths on tails x heads; tails and their heads are tried
// in ascending order so the result is deterministic.
fn perfect_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn augment(u: usize, adj: &[Vec<usize>], visited: &mut [bool], tail_of: &mut [usize]) -> bool {
        for &h in &adj[u] {
            if visited[h] {
                continue;
            }
            visited[h] = true;
            if tail_of[h] == usize::MAX || augment(tail_of[h], adj, visited, tail_of) {
                tail_of[h] = u;
                return true;
            }
        }
        false
    }
    let n = adj.len();
    let mut tail_of = vec![usize::MAX; n];
    for u in 0..n {
        let mut visited = vec![false; n];
        if !augment(u, adj, &mut visited, &mut tail_of) {
            return None;
        }
    }
    let mut successor = vec![0; n];
    for (h, &t) in tail_of.iter().enumerate() {
        successor[t] = h;
    }
    Some(successor)
}

/// A pendant vertex added by [`growth`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreshVertex {
    pub vertex: usize,
    pub anchor: usize,
    /// Head of the arc of `D` at `anchor` that the fresh vertex stands for.
    pub head: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    pub graph: Digraph,
    pub fresh: Vec<FreshVertex>,
}

/// `F` plus, at each vertex, one pendant arc to a fresh vertex per arc of
/// `D` missing from `F`. Fresh vertices are numbered from `n` by anchor, then
/// by the head of the missing arc.
pub fn growth(d: &Digraph, f: &Digraph) -> Result<Growth> {
    let n = d.vertex_count();
    if f.vertex_count() != n {
        return Err(Error::NotSpanning(format!(
            "subdigraph has {} vertices, host has {n}",
            f.vertex_count()
        )));
    }
    if let Some(&(u, v)) = f.arcs().iter().find(|&&(u, v)| !d.has_arc(u, v)) {
        return Err(Error::NotSubdigraph(u, v));
    }
    let mut arcs: Vec<Arc> = f.arcs().to_vec();
    let mut fresh = Vec::new();
    for &(u, v) in d.arcs() {
        if !f.has_arc(u, v) {
            let vertex = n + fresh.len();
            fresh.push(FreshVertex {
                vertex,
                anchor: u,
                head: v,
            });
            arcs.push((u, vertex));
        }
    }
    let graph = Digraph::with_loops(n + fresh.len(), arcs).expect("growth is simple");
    Ok(Growth { graph, fresh })
}

/// Growth of factor `j` laid out on the `(F_m, v)` grid: `v` sits at
/// `(F_j, v)` and the pendant vertex for the arc `(v, w)` of factor `m` sits
/// at `(F_m, w)`. Its adjacency has block-row `j` equal to
/// `[M(F_1) ... M(F_k)]` and zeros elsewhere.
pub fn factor_growth(fac: &Factorization, j: usize) -> Result<Digraph> {
    let (k, n) = (fac.k(), fac.host_n());
    if j >= k {
        return Err(Error::BadDimension(format!(
            "factor index {j} out of range for k = {k}"
        )));
    }
    let arcs = (0..n).flat_map(|v| {
        fac.factors()
            .iter()
            .enumerate()
            .map(move |(m, f)| (j * n + v, m * n + f.successor(v)))
    });
    Ok(Digraph::with_loops(k * n, arcs.collect::<Vec<_>>()).expect("grid growth is simple"))
}

/// The spanning subdigraph of `L(D)` (lexicographic labels) formed by all
/// out-arcs of the vertices that are arcs of factor `j`.
pub fn line_growth(fac: &Factorization, j: usize) -> Result<Digraph> {
    if j >= fac.k() {
        return Err(Error::BadDimension(format!(
            "factor index {j} out of range for k = {}",
            fac.k()
        )));
    }
    let host = fac.host();
    let line = line_digraph(&host)?;
    let keep = |x: usize| {
        let (a, b) = line.base_arc(x).expect("first line digraph");
        fac.factors()[j].successor(a) == b
    };
    let arcs: Vec<Arc> = line
        .graph
        .arcs()
        .iter()
        .copied()
        .filter(|&(x, _)| keep(x))
        .collect();
    Ok(Digraph::with_loops(line.graph.vertex_count(), arcs)
        .expect("subdigraph of a simple digraph"))
}

/// The `kn x kn` matrix whose `k` block-rows all equal `[M(F_1) ... M(F_k)]`.
pub fn block_line_matrix(fac: &Factorization) -> IntMatrix {
    let (k, n) = (fac.k(), fac.host_n());
    let mut m = IntMatrix::zeros(k * n, k * n);
    for row_block in 0..k {
        for (col_block, f) in fac.factors().iter().enumerate() {
            for (v, s) in f.arcs() {
                m.set(row_block * n + v, col_block * n + s, BigInt::one());
            }
        }
    }
    m
}

/// `perm[i]` is the block index of the `i`-th arc in lexicographic order:
/// the arc `(v, w)` of factor `j` becomes `(F_j, w)`.
pub fn permutation_to_line_labels(fac: &Factorization) -> Vec<usize> {
    let n = fac.host_n();
    let host = fac.host();
    host.arcs()
        .iter()
        .map(|&arc| {
            let j = fac.factor_of(arc).expect("every arc lies in a factor");
            j * n + arc.1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::*;
    use crate::iso::isomorphic;

    fn cube_factors() -> (OneFactor, OneFactor) {
        (
            OneFactor::new(vec![1, 0, 3, 2]).unwrap(),
            OneFactor::new(vec![2, 3, 0, 1]).unwrap(),
        )
    }

    #[test]
    fn one_factor_must_be_permutation() {
        assert!(OneFactor::new(vec![1, 1]).is_err());
        assert!(OneFactor::new(vec![0, 2]).is_err());
    }

    #[test]
    fn seeded_two_cube_forces_second_factor() {
        let (f1, f2) = cube_factors();
        let fac = one_factorization_seeded(&two_cube(), std::slice::from_ref(&f1)).unwrap();
        assert_eq!(fac.factors(), &[f1, f2]);
    }

    #[test]
    fn unseeded_two_cube_is_valid() {
        let fac = one_factorization(&two_cube()).unwrap();
        assert_eq!(fac.k(), 2);
        assert_eq!(
            &fac.factors()[0].matrix() + &fac.factors()[1].matrix(),
            two_cube().adjacency()
        );
    }

    #[test]
    fn cycle_has_single_factor() {
        let fac = one_factorization(&dicycle(5)).unwrap();
        assert_eq!(fac.factors()[0].successors(), &[1, 2, 3, 4, 0]);
    }

    #[test]
    fn irregular_rejected() {
        assert_eq!(one_factorization(&dipath(3)), Err(Error::NotRegular));
    }

    #[test]
    fn factorization_validation() {
        let (f1, _) = cube_factors();
        assert!(matches!(
            Factorization::for_digraph(&two_cube(), vec![f1.clone()]),
            Err(Error::InvalidFactorization(_))
        ));
        assert!(matches!(
            Factorization::for_digraph(&two_cube(), vec![f1.clone(), f1]),
            Err(Error::InvalidFactorization(_))
        ));
    }

    #[test]
    fn text_roundtrip() {
        let fac = one_factorization(&two_cube()).unwrap();
        let text = fac.to_text();
        assert!(text.starts_with("factors 2 4\n"));
        assert_eq!(Factorization::parse(&two_cube(), &text).unwrap(), fac);
    }

    #[test]
    fn growth_of_whole_digraph_is_itself() {
        let d = two_cube();
        let g = growth(&d, &d).unwrap();
        assert_eq!(g.graph, d);
        assert!(g.fresh.is_empty());
    }

    #[test]
    fn growth_errors() {
        let d = two_cube();
        assert!(matches!(
            growth(&d, &Digraph::empty(3)),
            Err(Error::NotSpanning(_))
        ));
        let stray = Digraph::new(4, [(0, 3)]).unwrap();
        assert_eq!(growth(&d, &stray), Err(Error::NotSubdigraph(0, 3)));
    }

    #[test]
    fn growth_matches_line_growth_up_to_isomorphism() {
        let (f1, f2) = cube_factors();
        let d = two_cube();
        let fac = Factorization::for_digraph(&d, vec![f1.clone(), f2]).unwrap();
        let g = growth(&d, &f1.to_digraph()).unwrap().graph;
        let lg = line_growth(&fac, 0).unwrap();
        assert!(isomorphic(&g, &lg).unwrap().is_some());
    }

    #[test]
    fn single_factor_block_matrix_is_the_cycle() {
        let d = dicycle(4);
        let fac = one_factorization(&d).unwrap();
        assert_eq!(block_line_matrix(&fac), d.adjacency());
    }
}
