//! Cayley digraphs of cyclic and dihedral groups, and the check that the
//! line digraph of the bidirected odd cycle is the dihedral prism.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::factorization::{
    block_line_matrix, permutation_to_line_labels, Factorization, OneFactor,
};
use crate::iso::{is_isomorphism, isomorphic_with_limit};
use crate::line::line_digraph;
use crate::matrix::IntMatrix;
use crate::report::{Assertion, Report};

/// Largest odd `n` accepted by [`verify_cycle_example`].
pub const CYCLE_EXAMPLE_LIMIT: usize = 9;

/// A permutation of `0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; map.len()];
        for &x in &map {
            if x >= map.len() || hit[x] {
                return Err(Error::BadGenerators(format!(
                    "{map:?} is not a permutation"
                )));
            }
            hit[x] = true;
        }
        Ok(Perm(map))
    }

    pub fn identity(m: usize) -> Self {
        Perm((0..m).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other` (left-to-right composition).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn pow(&self, e: usize) -> Perm {
        (0..e).fold(Perm::identity(self.0.len()), |acc, _| acc.then(self))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&x| self.0[x] == x).collect()
    }
}

#[derive(Debug, Clone)]
pub struct CayleyDigraph {
    pub graph: Digraph,
    pub element_of: Vec<Perm>,
    pub generators: Vec<Perm>,
}

/// Rotation `x -> x + s (mod n)`.
pub fn rotation(n: usize, s: usize) -> Perm {
    Perm((0..n).map(|x| (x + s) % n).collect())
}

/// Reflection `x -> -x (mod n)`; fixes 0.
pub fn negation(n: usize) -> Perm {
    Perm((0..n).map(|x| (n - x) % n).collect())
}

/// `Cay(Z_n, S)`: arcs `(v, v + s mod n)`.
pub fn cayley_cyclic(n: usize, gens: &[usize]) -> Result<CayleyDigraph> {
    if n < 3 {
        return Err(Error::BadGenerators(format!("need n >= 3, got {n}")));
    }
    if gens.is_empty() {
        return Err(Error::BadGenerators("empty generating set".into()));
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != gens.len() || sorted.iter().any(|&s| s == 0 || s >= n) {
        return Err(Error::BadGenerators(format!(
            "{gens:?} must be distinct residues in 1..{n}"
        )));
    }
    let arcs = (0..n).flat_map(|v| gens.iter().map(move |&s| (v, (v + s) % n)));
    Ok(CayleyDigraph {
        graph: Digraph::new(n, arcs.collect::<Vec<_>>())?,
        element_of: (0..n).map(|v| rotation(n, v)).collect(),
        generators: gens.iter().map(|&s| rotation(n, s)).collect(),
    })
}

/// Closes `generators` under right multiplication from the identity (BFS);
/// vertices are numbered in discovery order and `u -> u·s` for each `s`.
pub fn cayley_from_generators(degree: usize, generators: &[Perm]) -> Result<CayleyDigraph> {
    if generators.is_empty() || generators.iter().any(|g| g.0.len() != degree) {
        return Err(Error::BadGenerators(
            "generators must be permutations of one set".into(),
        ));
    }
    let mut index: HashMap<Perm, usize> = HashMap::new();
    let mut elements = vec![Perm::identity(degree)];
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut arcs = Vec::new();
    while let Some(u) = queue.pop_front() {
        for s in generators {
            let next = elements[u].then(s);
            let v = match index.get(&next) {
                Some(&v) => v,
                None => {
                    let v = elements.len();
                    index.insert(next.clone(), v);
                    elements.push(next);
                    queue.push_back(v);
                    v
                }
            };
            arcs.push((u, v));
        }
    }
    arcs.sort_unstable();
    arcs.dedup();
    Ok(CayleyDigraph {
        graph: Digraph::with_loops(elements.len(), arcs)?,
        element_of: elements,
        generators: generators.to_vec(),
    })
}

/// `a = x -> x+1` and `b = a·σ = x -> n-1-x`.
pub fn dihedral_generators(n: usize) -> (Perm, Perm) {
    let a = rotation(n, 1);
    let b = a.then(&negation(n));
    (a, b)
}

/// `Cay(D_n, {a, b})` for odd `n >= 3`.
pub fn cayley_dihedral(n: usize) -> Result<CayleyDigraph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadOrder(n));
    }
    let (a, b) = dihedral_generators(n);
    cayley_from_generators(n, &[a, b])
}

/// Right regular representation matrix of `x -> x + s` on `Z_n`.
pub fn rho_reg(n: usize, s: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for x in 0..n {
        m.set(x, (x + s) % n, BigInt::from(1));
    }
    m
}

/// `[[ρ(g), ρ(g^(n-1))], [ρ(g), ρ(g^(n-1))]]`.
pub fn dihedral_block_matrix(n: usize) -> IntMatrix {
    let (p, q) = (rho_reg(n, 1), rho_reg(n, n - 1));
    let mut m = IntMatrix::zeros(2 * n, 2 * n);
    for rb in 0..2 {
        for x in 0..n {
            for y in 0..n {
                m.set(rb * n + x, y, p.get(x, y).clone());
                m.set(rb * n + x, n + y, q.get(x, y).clone());
            }
        }
    }
    m
}

/// Checks group structure and the three identifications for odd `n` in
/// `3..=9`: the line digraph of `Cay(Z_n, {1, n-1})` is isomorphic to the
/// dihedral prism, the prism is permutation-similar to the block matrix of
/// regular representations, and that block matrix is the block form of the
/// `±1` rotation factorization.
pub fn verify_cycle_example(n: usize) -> Result<Report> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadOrder(n));
    }
    if n > CYCLE_EXAMPLE_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: CYCLE_EXAMPLE_LIMIT,
        });
    }
    let mut report = Report::new("cayley-demo");
    let cycle = cayley_cyclic(n, &[1, n - 1])?;
    let prism = cayley_dihedral(n)?;
    let (a, b) = dihedral_generators(n);
    let sigma = negation(n);

    report.push(Assertion::check(
        "group-closure",
        "dihedral group has 2n elements",
        prism.element_of.len() == 2 * n,
        format!("{} elements", prism.element_of.len()),
    ));
    let relations =
        a.pow(n).is_identity() && b.pow(2).is_identity() && b.then(&a).then(&b) == a.pow(n - 1);
    report.push(Assertion::check(
        "relations",
        "a^n = b^2 = e and b a b = a^(n-1)",
        relations,
        String::new(),
    ));
    let fixed_ok = b.fixed_points() == vec![(n - 1) / 2] && sigma.fixed_points() == vec![0];
    report.push(Assertion::check(
        "fixed-points",
        "g.sigma fixes only (n-1)/2, sigma fixes only 0",
        fixed_ok,
        format!("b fixes {:?}", b.fixed_points()),
    ));
    report.push(Assertion::check(
        "cycle-regular",
        "Cay(Z_n, {1, n-1}) is 2-regular and strongly connected",
        cycle.graph.regularity() == Some(2) && cycle.graph.is_strongly_connected(),
        String::new(),
    ));

    let line = line_digraph(&cycle.graph)?;
    let iso = isomorphic_with_limit(&line.graph, &prism.graph, 2 * n)?;
    report.push(Assertion::check(
        "line-is-prism",
        "line digraph of the bidirected cycle is the dihedral Cayley prism",
        iso.as_ref()
            .is_some_and(|m| is_isomorphism(&line.graph, &prism.graph, m)),
        String::new(),
    ));

    let block = dihedral_block_matrix(n);
    let block_graph = Digraph::from_adjacency(&block)?;
    let similar = isomorphic_with_limit(&prism.graph, &block_graph, 2 * n)?;
    report.push(Assertion::check(
        "prism-block-similar",
        "prism adjacency is permutation-similar to the regular-representation block matrix",
        similar.is_some(),
        String::new(),
    ));

    let fac = Factorization::for_digraph(
        &cycle.graph,
        vec![
            OneFactor::new(rotation(n, 1).0)?,
            OneFactor::new(rotation(n, n - 1).0)?,
        ],
    )?;
    let from_factors = block_line_matrix(&fac);
    let relabelled = line
        .graph
        .adjacency()
        .permuted(&permutation_to_line_labels(&fac))?;
    report.push(Assertion::check(
        "block-is-factor-form",
        "block matrix equals the block form of the +1/-1 rotation factorization",
        from_factors == block && relabelled == block,
        String::new(),
    ));
    let two = BigInt::from(2);
    report.push(Assertion::check(
        "block-row-sums",
        "block matrix rows sum to 2",
        block.row_sums().iter().all(|s| *s == two),
        String::new(),
    ));
    Ok(report)
}
