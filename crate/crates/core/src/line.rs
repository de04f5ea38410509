//! Line digraphs: construction, iteration, recognition, in-splitting,
//! de Bruijn digraphs and the Euler-circuit-to-Hamilton-dicycle lift.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::digraph::{families, Arc, Digraph, MultiDigraph};
use crate::error::{Error, Result};

/// Default bound on the vertex count produced by iteration.
pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

/// Default bound on `n` for the brute-force forbidden-subdigraph test.
pub const DEFAULT_FORBIDDEN_LIMIT: usize = 10;

/// A (possibly iterated) line digraph together with the base walk each of
/// its vertices stands for. In `L(D)` every walk has two vertices, i.e. it
/// is an arc of `D`; in `L^k(D)` walks have `k + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeledDigraph {
    pub graph: Digraph,
    pub walks: Vec<Vec<usize>>,
    pub base_n: usize,
}

impl ArcLabeledDigraph {
    /// `D` itself, each vertex labelled by the trivial walk.
    pub fn trivial(d: &Digraph) -> Self {
        ArcLabeledDigraph {
            graph: d.clone(),
            walks: (0..d.vertex_count()).map(|v| vec![v]).collect(),
            base_n: d.vertex_count(),
        }
    }

    /// Base arc of vertex `v` when this is a first line digraph.
    pub fn base_arc(&self, v: usize) -> Option<Arc> {
        match self.walks.get(v).map(Vec::as_slice) {
            Some(&[a, b]) => Some((a, b)),
            _ => None,
        }
    }

    /// Edge list followed by `# vertex k = arc (a,b)` label lines.
    pub fn to_labeled_edge_list(&self) -> String {
        let mut s = self.graph.to_edge_list();
        for (v, walk) in self.walks.iter().enumerate() {
            let body = walk
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let kind = if walk.len() == 2 { "arc" } else { "walk" };
            let _ = writeln!(s, "# vertex {v} = {kind} ({body})");
        }
        s
    }
}

/// Vertices are the arcs of `D` in lexicographic order; `(a,b) -> (b,c)`.
pub fn line_digraph(d: &Digraph) -> Result<ArcLabeledDigraph> {
    if d.arc_count() == 0 {
        return Err(Error::EmptyArcSet);
    }
    let graph = line_graph_unchecked(d);
    Ok(ArcLabeledDigraph {
        graph,
        walks: d.arcs().iter().map(|&(a, b)| vec![a, b]).collect(),
        base_n: d.vertex_count(),
    })
}

// Also used for the empty-arc case where the result has no vertices.
fn line_graph_unchecked(d: &Digraph) -> Digraph {
    let arcs = d.arcs();
    let mut line_arcs = Vec::new();
    for (i, &(_, b)) in arcs.iter().enumerate() {
        for &c in d.out_of(b) {
            let j = d.arc_index((b, c)).expect("out-neighbour arc exists");
            line_arcs.push((i, j));
        }
    }
    Digraph::with_loops(arcs.len(), line_arcs).expect("line digraph is simple")
}

pub fn iterated_line_digraph(d: &Digraph, k: usize) -> Result<ArcLabeledDigraph> {
    iterated_line_digraph_with_limit(d, k, DEFAULT_SIZE_LIMIT)
}

/// `L^k(D)`. Once an iterate has no arcs, every later iterate is the digraph
/// with no vertices.
pub fn iterated_line_digraph_with_limit(
    d: &Digraph,
    k: usize,
    limit: usize,
) -> Result<ArcLabeledDigraph> {
    let mut current = ArcLabeledDigraph::trivial(d);
    for _ in 0..k {
        let g = &current.graph;
        if g.arc_count() > limit {
            return Err(Error::SizeLimitExceeded {
                size: g.arc_count(),
                limit,
            });
        }
        let walks = g
            .arcs()
            .iter()
            .map(|&(x, y)| {
                let mut w = current.walks[x].clone();
                w.push(*current.walks[y].last().expect("walks are non-empty"));
                w
            })
            .collect();
        current = ArcLabeledDigraph {
            graph: line_graph_unchecked(g),
            walks,
            base_n: d.vertex_count(),
        };
    }
    Ok(current)
}

/// Vertex counts `|V(L^i D)|` for `i = 0..=k`.
pub fn iterate_sizes(d: &Digraph, k: usize, limit: usize) -> Result<Vec<usize>> {
    let mut sizes = vec![d.vertex_count()];
    let mut g = d.clone();
    for _ in 0..k {
        if g.arc_count() > limit {
            return Err(Error::SizeLimitExceeded {
                size: g.arc_count(),
                limit,
            });
        }
        g = line_graph_unchecked(&g);
        sizes.push(g.vertex_count());
    }
    Ok(sizes)
}

fn require_loopless(d: &Digraph) -> Result<()> {
    if d.has_loops() {
        Err(Error::LoopsPresent)
    } else {
        Ok(())
    }
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

// Rows (given as sorted neighbour lists) pairwise identical or orthogonal,
// and identical non-zero rows have orthogonal duals.
fn rows_condition(
    rows: impl Fn(usize) -> Vec<usize>,
    cols: impl Fn(usize) -> Vec<usize>,
    n: usize,
) -> bool {
    let r: Vec<Vec<usize>> = (0..n).map(&rows).collect();
    let c: Vec<Vec<usize>> = (0..n).map(&cols).collect();
    for i in 0..n {
        for j in i + 1..n {
            if r[i] == r[j] {
                if !r[i].is_empty() && !disjoint(&c[i], &c[j]) {
                    return false;
                }
            } else if !disjoint(&r[i], &r[j]) {
                return false;
            }
        }
    }
    true
}

/// Both matrix criteria: `(row form, column form)`. Loopless input only.
pub fn matrix_criteria(d: &Digraph) -> Result<(bool, bool)> {
    require_loopless(d)?;
    let n = d.vertex_count();
    let out = |v: usize| d.out_of(v).to_vec();
    let inn = |v: usize| d.in_of(v).to_vec();
    Ok((rows_condition(out, inn, n), rows_condition(inn, out, n)))
}

/// Row criterion on the adjacency matrix; the column criterion is evaluated
/// too and must agree.
pub fn is_line_digraph_matrix(d: &Digraph) -> Result<bool> {
    let (rows, cols) = matrix_criteria(d)?;
    debug_assert_eq!(rows, cols, "row and column criteria disagree");
    Ok(rows)
}

/// Which family of 3- and 4-vertex configurations the brute-force test forbids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenFamily {
    /// Superdigraphs of the 3-arc pattern on four vertices whose fourth arc
    /// is missing, superdigraphs of the transitive triangle, and the
    /// twin-arc configurations (two vertices with a common in-neighbour and a
    /// common out-neighbour). Exactly the loopless line digraphs survive.
    Complete,
    /// Every superdigraph of the two patterns except the two exceptional
    /// superdigraphs themselves, and nothing else. This family misses the
    /// twin-arc configurations and rejects some line digraphs, so it
    /// disagrees with the matrix criterion.
    PatternsOnly,
}

// D3: (0,1),(0,2),(3,1); its exception adds (3,2).
const D3: [Arc; 3] = [(0, 1), (0, 2), (3, 1)];
const D3_EXTRA: Arc = (3, 2);
// D4: (0,1),(2,0),(2,1); its exception adds the loop (0,0).
const D4: [Arc; 3] = [(0, 1), (2, 0), (2, 1)];
// twin arcs: z=0 -> u=1, w=2 -> x=3, and the variant with x = z.
const TWIN4: [Arc; 4] = [(0, 1), (0, 2), (1, 3), (2, 3)];
const TWIN3: [Arc; 4] = [(0, 1), (0, 2), (1, 0), (2, 0)];

// Off-diagonal arc (i, j) of a k-vertex digraph as a bit position.
fn bit(k: usize, (i, j): Arc) -> usize {
    i * k + j
}

fn code_has(code: u32, k: usize, arc: Arc) -> bool {
    code >> bit(k, arc) & 1 == 1
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..k {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), k, &mut out);
    out
}

// Some embedding maps every `required` arc into `code` and `absent`, if
// given, outside it.
fn embeds(code: u32, k: usize, required: &[Arc], absent: Option<Arc>) -> bool {
    permutations(k).iter().any(|p| {
        let m = |(a, b): Arc| (p[a], p[b]);
        required.iter().all(|&a| code_has(code, k, m(a)))
            && absent.is_none_or(|a| !code_has(code, k, m(a)))
    })
}

fn loopless_codes(k: usize) -> impl Iterator<Item = u32> {
    let diag: u32 = (0..k).map(|i| 1u32 << bit(k, (i, i))).sum();
    (0u32..1 << (k * k)).filter(move |c| c & diag == 0)
}

fn arcs_to_code(k: usize, arcs: &[Arc]) -> u32 {
    arcs.iter().map(|&a| 1u32 << bit(k, a)).sum()
}

fn isomorphic_codes(a: u32, b: u32, k: usize) -> bool {
    permutations(k).iter().any(|p| {
        let mut mapped = 0u32;
        for i in 0..k {
            for j in 0..k {
                if code_has(a, k, (i, j)) {
                    mapped |= 1 << bit(k, (p[i], p[j]));
                }
            }
        }
        mapped == b
    })
}

struct ForbiddenTables {
    three: Vec<bool>,
    four: Vec<bool>,
}

fn build_tables(family: ForbiddenFamily) -> ForbiddenTables {
    let mut three = vec![false; 1 << 9];
    let mut four = vec![false; 1 << 16];
    match family {
        ForbiddenFamily::Complete => {
            for c in loopless_codes(3) {
                three[c as usize] = embeds(c, 3, &D4, None) || embeds(c, 3, &TWIN3, None);
            }
            for c in loopless_codes(4) {
                four[c as usize] = embeds(c, 4, &D3, Some(D3_EXTRA)) || embeds(c, 4, &TWIN4, None);
            }
        }
        ForbiddenFamily::PatternsOnly => {
            let mut d3_prime = D3.to_vec();
            d3_prime.push(D3_EXTRA);
            let d3_prime = arcs_to_code(4, &d3_prime);
            for c in loopless_codes(3) {
                // the exception for D4 carries a loop, so it never occurs here
                three[c as usize] = embeds(c, 3, &D4, None);
            }
            for c in loopless_codes(4) {
                four[c as usize] = embeds(c, 4, &D3, None) && !isomorphic_codes(c, d3_prime, 4);
            }
        }
    }
    ForbiddenTables { three, four }
}

fn tables(family: ForbiddenFamily) -> &'static ForbiddenTables {
    static COMPLETE: OnceLock<ForbiddenTables> = OnceLock::new();
    static PATTERNS_ONLY: OnceLock<ForbiddenTables> = OnceLock::new();
    match family {
        ForbiddenFamily::Complete => COMPLETE.get_or_init(|| build_tables(family)),
        ForbiddenFamily::PatternsOnly => PATTERNS_ONLY.get_or_init(|| build_tables(family)),
    }
}

fn induced_code(d: &Digraph, vs: &[usize]) -> u32 {
    let k = vs.len();
    let mut code = 0;
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate() {
            if d.has_arc(u, v) {
                code |= 1 << bit(k, (i, j));
            }
        }
    }
    code
}

pub fn is_line_digraph_forbidden(d: &Digraph) -> Result<bool> {
    is_line_digraph_forbidden_with(d, ForbiddenFamily::Complete, DEFAULT_FORBIDDEN_LIMIT)
}

/// Brute force over every induced subdigraph on 3 and 4 vertices.
pub fn is_line_digraph_forbidden_with(
    d: &Digraph,
    family: ForbiddenFamily,
    limit: usize,
) -> Result<bool> {
    require_loopless(d)?;
    let n = d.vertex_count();
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    let t = tables(family);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if t.three[induced_code(d, &[a, b, c]) as usize] {
                    return Ok(false);
                }
                for e in c + 1..n {
                    if t.four[induced_code(d, &[a, b, c, e]) as usize] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Two general partitions `{A_i}`, `{B_i}` of `V(D)` with
/// `A(D) = U A_i x B_i` and `|A_j n B_i| <= 1 - [i = j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePartitions {
    pub a: Vec<Vec<usize>>,
    pub b: Vec<Vec<usize>>,
}

impl LinePartitions {
    /// Arcs `U A_i x B_i`, sorted.
    pub fn arcs(&self) -> Vec<Arc> {
        let set: BTreeSet<Arc> = self
            .a
            .iter()
            .zip(&self.b)
            .flat_map(|(a, b)| a.iter().flat_map(move |&u| b.iter().map(move |&v| (u, v))))
            .collect();
        set.into_iter().collect()
    }

    /// Both families partition `0..n` and the intersection bounds hold.
    pub fn is_valid(&self, n: usize) -> bool {
        let covers = |sets: &[Vec<usize>]| {
            let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
            all.sort_unstable();
            all == (0..n).collect::<Vec<_>>()
        };
        if self.a.len() != self.b.len() || !covers(&self.a) || !covers(&self.b) {
            return false;
        }
        self.a.iter().enumerate().all(|(j, aj)| {
            self.b.iter().enumerate().all(|(i, bi)| {
                let common = aj.iter().filter(|v| bi.contains(v)).count();
                common <= usize::from(i != j)
            })
        })
    }
}

/// Groups vertices with identical non-empty out-neighbourhoods; sinks and
/// sources that fall outside those groups get singleton classes paired with
/// an empty partner.
pub fn recover_partitions(d: &Digraph) -> Result<LinePartitions> {
    if !is_line_digraph_matrix(d)? {
        return Err(Error::NotLineDigraph);
    }
    let n = d.vertex_count();
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        if !d.out_of(v).is_empty() {
            groups.entry(d.out_of(v)).or_default().push(v);
        }
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = groups
        .into_iter()
        .map(|(row, vs)| (vs, row.to_vec()))
        .collect();
    groups.sort();
    for (vs, row) in groups {
        a.push(vs);
        b.push(row);
    }
    for v in (0..n).filter(|&v| d.out_of(v).is_empty()) {
        a.push(vec![v]);
        b.push(Vec::new());
    }
    for v in (0..n).filter(|&v| d.in_of(v).is_empty()) {
        a.push(Vec::new());
        b.push(vec![v]);
    }
    Ok(LinePartitions { a, b })
}

/// For each vertex, an ordered partition of its in-neighbours (tails of its
/// in-coming arcs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InSplitPartition {
    pub classes: Vec<Vec<Vec<usize>>>,
}

impl InSplitPartition {
    /// Every in-coming arc in its own class, ordered by tail.
    pub fn maximal(d: &Digraph) -> Self {
        InSplitPartition {
            classes: (0..d.vertex_count())
                .map(|v| d.in_of(v).iter().map(|&t| vec![t]).collect())
                .collect(),
        }
    }

    /// One class per vertex with in-coming arcs.
    pub fn trivial(d: &Digraph) -> Self {
        InSplitPartition {
            classes: (0..d.vertex_count())
                .map(|v| {
                    let tails = d.in_of(v);
                    if tails.is_empty() {
                        Vec::new()
                    } else {
                        vec![tails.to_vec()]
                    }
                })
                .collect(),
        }
    }

    fn validate(&self, d: &Digraph) -> Result<()> {
        if self.classes.len() != d.vertex_count() {
            return Err(Error::InvalidPartition(format!(
                "{} vertex entries for {} vertices",
                self.classes.len(),
                d.vertex_count()
            )));
        }
        for (v, classes) in self.classes.iter().enumerate() {
            if classes.iter().any(Vec::is_empty) {
                return Err(Error::InvalidPartition(format!(
                    "empty class at vertex {v}"
                )));
            }
            let mut tails: Vec<usize> = classes.iter().flatten().copied().collect();
            tails.sort_unstable();
            if tails != d.in_of(v) {
                return Err(Error::InvalidPartition(format!(
                    "classes at vertex {v} do not partition its in-coming arcs"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InSplitGraph {
    pub graph: MultiDigraph,
    /// `(vertex of D, class index)` for each split vertex.
    pub class_of: Vec<(usize, usize)>,
}

/// The in-split graph: arcs from every class of `v_l` to class `I(j, v_i)`,
/// one per arc of `I(j, v_i)` with tail `v_l`.
pub fn in_split(d: &Digraph, p: &InSplitPartition) -> Result<InSplitGraph> {
    p.validate(d)?;
    let mut class_of = Vec::new();
    let mut first = vec![0usize; d.vertex_count()];
    for (v, classes) in p.classes.iter().enumerate() {
        first[v] = class_of.len();
        class_of.extend((0..classes.len()).map(|j| (v, j)));
    }
    let mut counts: BTreeMap<Arc, usize> = BTreeMap::new();
    for (target, &(v, j)) in class_of.iter().enumerate() {
        for &tail in &p.classes[v][j] {
            for k in 0..p.classes[tail].len() {
                *counts.entry((first[tail] + k, target)).or_insert(0) += 1;
            }
        }
    }
    Ok(InSplitGraph {
        graph: MultiDigraph::new(class_of.len(), counts)?,
        class_of,
    })
}

pub fn debruijn(d: usize, k: usize) -> Result<ArcLabeledDigraph> {
    debruijn_with_limit(d, k, DEFAULT_SIZE_LIMIT)
}

/// `B(d,k) = L^(k-1)(K_d+)`; vertices are the length-`k` words over `0..d`.
pub fn debruijn_with_limit(d: usize, k: usize, limit: usize) -> Result<ArcLabeledDigraph> {
    if d < 2 || k < 1 {
        return Err(Error::BadDimension(format!(
            "de Bruijn needs d >= 2, k >= 1 (got d={d}, k={k})"
        )));
    }
    let size = u32::try_from(k)
        .ok()
        .and_then(|k| d.checked_pow(k))
        .filter(|&s| s <= limit)
        .ok_or(Error::SizeLimitExceeded {
            size: usize::MAX,
            limit,
        })?;
    let labeled =
        iterated_line_digraph_with_limit(&families::complete_with_loops(d), k - 1, limit)?;
    debug_assert_eq!(labeled.graph.vertex_count(), size);
    Ok(labeled)
}

/// Reads an Euler circuit of `D` as a Hamilton dicycle of `L(D)`, given as
/// vertex indices of [`line_digraph`].
pub fn euler_to_hamilton(d: &Digraph) -> Result<Vec<usize>> {
    let circuit = d.euler_circuit()?;
    if circuit.is_empty() {
        return Err(Error::EmptyArcSet);
    }
    Ok(circuit
        .into_iter()
        .map(|a| d.arc_index(a).expect("circuit arcs belong to D"))
        .collect())
}

/// `cycle` visits every vertex once and consecutive vertices (cyclically)
/// are joined by arcs.
pub fn is_hamilton_dicycle(g: &Digraph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_arc(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::*;
    use crate::iso::isomorphic;

    #[test]
    fn line_of_cycle_and_path() {
        for n in 2..7 {
            let l = line_digraph(&dicycle(n)).unwrap();
            assert!(isomorphic(&l.graph, &dicycle(n)).unwrap().is_some());
        }
        for n in 2..7 {
            let l = line_digraph(&dipath(n)).unwrap();
            assert!(isomorphic(&l.graph, &dipath(n - 1)).unwrap().is_some());
        }
        assert_eq!(line_digraph(&Digraph::empty(3)), Err(Error::EmptyArcSet));
    }

    #[test]
    fn line_labels_are_lexicographic() {
        let l = line_digraph(&two_cube()).unwrap();
        assert_eq!(l.graph.vertex_count(), 8);
        assert_eq!(l.graph.arc_count(), 16);
        assert_eq!(l.base_arc(0), Some((0, 1)));
        assert_eq!(l.base_arc(7), Some((3, 2)));
        assert!(l.to_labeled_edge_list().contains("# vertex 7 = arc (3,2)"));
    }

    #[test]
    fn loops_survive() {
        let d = Digraph::with_loops(2, [(0, 0), (0, 1)]).unwrap();
        let l = line_digraph(&d).unwrap();
        assert!(l.graph.has_arc(0, 0));
        assert!(l.graph.has_arc(0, 1));
    }

    #[test]
    fn iterate_path_twice() {
        let l2 = iterated_line_digraph(&dipath(4), 2).unwrap();
        assert!(isomorphic(&l2.graph, &dipath(2)).unwrap().is_some());
        assert_eq!(l2.walks[0], vec![0, 1, 2]);
    }

    #[test]
    fn iterate_zero_is_identity() {
        let l0 = iterated_line_digraph(&two_cube(), 0).unwrap();
        assert_eq!(l0.graph, two_cube());
    }

    #[test]
    fn iterate_dag_until_empty() {
        let d = dipath(4);
        let len = d.longest_dipath_length().unwrap();
        assert_eq!(iterated_line_digraph(&d, len).unwrap().graph.arc_count(), 0);
        assert_eq!(
            iterated_line_digraph(&d, len + 1)
                .unwrap()
                .graph
                .vertex_count(),
            0
        );
        assert_eq!(
            iterated_line_digraph(&d, len + 3)
                .unwrap()
                .graph
                .vertex_count(),
            0
        );
    }

    #[test]
    fn iterate_respects_limit() {
        let err = iterated_line_digraph_with_limit(&complete_with_loops(3), 5, 100).unwrap_err();
        assert!(matches!(err, Error::SizeLimitExceeded { .. }));
    }

    #[test]
    fn recognition_examples() {
        let l = line_digraph(&two_cube()).unwrap();
        assert!(is_line_digraph_matrix(&l.graph).unwrap());
        assert!(is_line_digraph_forbidden(&l.graph).unwrap());
        let d3 = Digraph::new(4, D3).unwrap();
        assert!(!is_line_digraph_matrix(&d3).unwrap());
        assert!(!is_line_digraph_forbidden(&d3).unwrap());
        assert!(is_line_digraph_matrix(&Digraph::empty(3)).unwrap());
        assert!(is_line_digraph_forbidden(&Digraph::empty(3)).unwrap());
        assert!(is_line_digraph_forbidden(&dicycle(5)).unwrap());
    }

    #[test]
    fn recognition_rejects_loops() {
        let d = Digraph::with_loops(1, [(0, 0)]).unwrap();
        assert_eq!(is_line_digraph_matrix(&d), Err(Error::LoopsPresent));
        assert_eq!(is_line_digraph_forbidden(&d), Err(Error::LoopsPresent));
    }

    #[test]
    fn forbidden_limit() {
        let d = dicycle(11);
        assert!(matches!(
            is_line_digraph_forbidden(&d),
            Err(Error::TooLarge {
                size: 11,
                limit: 10
            })
        ));
    }

    #[test]
    fn d3_prime_is_allowed() {
        let mut arcs = D3.to_vec();
        arcs.push(D3_EXTRA);
        let d = Digraph::new(4, arcs).unwrap();
        assert!(is_line_digraph_matrix(&d).unwrap());
        assert!(is_line_digraph_forbidden(&d).unwrap());
        assert!(is_line_digraph_forbidden_with(&d, ForbiddenFamily::PatternsOnly, 10).unwrap());
    }

    #[test]
    fn patterns_only_misses_twin_arcs() {
        // z -> u, z -> w, u -> x, w -> x would need two parallel base arcs
        let diamond = Digraph::new(4, TWIN4).unwrap();
        assert!(!is_line_digraph_matrix(&diamond).unwrap());
        assert!(!is_line_digraph_forbidden(&diamond).unwrap());
        assert!(is_line_digraph_forbidden_with(&diamond, ForbiddenFamily::PatternsOnly, 10).unwrap());
    }

    #[test]
    fn patterns_only_rejects_a_line_digraph() {
        // L({p->h, h->p, h->s, q->h}) contains D3 plus two further arcs
        let base = Digraph::new(4, [(0, 1), (1, 0), (1, 2), (3, 1)]).unwrap();
        let l = line_digraph(&base).unwrap().graph;
        assert!(is_line_digraph_matrix(&l).unwrap());
        assert!(!is_line_digraph_forbidden_with(&l, ForbiddenFamily::PatternsOnly, 10).unwrap());
    }

    #[test]
    fn partitions_of_two_cube_line() {
        let l = line_digraph(&two_cube()).unwrap().graph;
        let p = recover_partitions(&l).unwrap();
        assert_eq!(p.a.len(), 4);
        assert!(p.a.iter().chain(&p.b).all(|s| s.len() == 2));
        assert!(p.is_valid(8));
        assert_eq!(p.arcs(), l.arcs());
    }

    #[test]
    fn partitions_of_triangle() {
        let d = dicycle(3);
        let p = recover_partitions(&d).unwrap();
        assert!(p.a.iter().chain(&p.b).all(|s| s.len() == 1));
        assert_eq!(p.arcs(), d.arcs());
    }

    #[test]
    fn partitions_with_sources_and_sinks() {
        let d = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = recover_partitions(&d).unwrap();
        assert!(p.is_valid(4));
        assert_eq!(p.arcs(), d.arcs());
        let d3 = Digraph::new(4, D3).unwrap();
        assert_eq!(recover_partitions(&d3), Err(Error::NotLineDigraph));
    }

    #[test]
    fn maximal_split_is_line_digraph() {
        let d = two_cube();
        let split = in_split(&d, &InSplitPartition::maximal(&d)).unwrap();
        assert_eq!(split.graph.vertex_count(), 8);
        assert_eq!(split.graph.arc_total(), 16);
        assert!(split.graph.arc_counts().values().all(|&c| c == 1));
    }

    #[test]
    fn trivial_split_is_identity() {
        let d = two_cube();
        let split = in_split(&d, &InSplitPartition::trivial(&d)).unwrap();
        assert_eq!(split.graph.to_simple().unwrap(), d);
    }

    #[test]
    fn split_validation() {
        let d = dicycle(3);
        let mut p = InSplitPartition::maximal(&d);
        p.classes[0].push(vec![]);
        assert!(matches!(in_split(&d, &p), Err(Error::InvalidPartition(_))));
        let mut p = InSplitPartition::maximal(&d);
        p.classes[0] = vec![vec![1]];
        assert!(matches!(in_split(&d, &p), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn debruijn_shapes() {
        assert_eq!(debruijn(2, 1).unwrap().graph, complete_with_loops(2));
        let b = debruijn(2, 3).unwrap().graph;
        assert_eq!((b.vertex_count(), b.arc_count()), (8, 16));
        assert_eq!(b.regularity(), Some(2));
        assert!(debruijn(1, 3).is_err());
        assert!(matches!(
            debruijn_with_limit(3, 5, 100),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn hamilton_lift_examples() {
        for d in [dicycle(4), two_cube(), figure_eight()] {
            let l = line_digraph(&d).unwrap().graph;
            let cycle = euler_to_hamilton(&d).unwrap();
            assert_eq!(cycle.len(), d.arc_count());
            assert!(is_hamilton_dicycle(&l, &cycle));
        }
        assert_eq!(euler_to_hamilton(&dipath(3)), Err(Error::NotEulerian));
    }
}
