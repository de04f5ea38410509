//! Seeded random instances for property checks and `verify --random`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;

/// Deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each ordered pair independently with probability `p`.
pub fn digraph<R: Rng>(rng: &mut R, n: usize, p: f64, loops: bool) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| loops || u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::with_loops(n, arcs).expect("distinct pairs")
}

/// Loopless digraph with exactly `m` arcs.
pub fn digraph_with_arcs<R: Rng>(rng: &mut R, n: usize, m: usize) -> Digraph {
    let mut pairs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect();
    assert!(m <= pairs.len(), "too many arcs requested");
    pairs.shuffle(rng);
    pairs.truncate(m);
    Digraph::new(n, pairs).expect("distinct pairs")
}

/// Arcs only from lower to higher index of a random vertex order.
pub fn dag<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let arcs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .map(|(i, j)| (order[i], order[j]))
        .collect();
    Digraph::new(n, arcs).expect("distinct pairs")
}

/// Union of `k` arc-disjoint random permutations, retried until disjoint.
/// With `loopless`, fixed points are excluded too.
pub fn regular<R: Rng>(rng: &mut R, n: usize, k: usize, loopless: bool) -> Digraph {
    let cap = if loopless { n.saturating_sub(1) } else { n };
    assert!(
        k <= cap,
        "cannot build a {k}-regular digraph on {n} vertices"
    );
    'outer: loop {
        let mut arcs = std::collections::BTreeSet::new();
        for _ in 0..k {
            let mut ok = false;
            for _ in 0..200 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                let fits = perm
                    .iter()
                    .enumerate()
                    .all(|(v, &w)| !(loopless && v == w) && !arcs.contains(&(v, w)));
                if fits {
                    arcs.extend(perm.into_iter().enumerate());
                    ok = true;
                    break;
                }
            }
            if !ok {
                continue 'outer;
            }
        }
        return Digraph::with_loops(n, arcs).expect("distinct pairs");
    }
}

/// Strongly connected regular digraph; retries [`regular`].
pub fn regular_strongly_connected<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    loopless: bool,
) -> Digraph {
    loop {
        let d = regular(rng, n, k, loopless);
        if d.is_strongly_connected() {
            return d;
        }
    }
}

/// Loopless eulerian (hence strongly connected) digraph with at least one
/// arc: a union of arc-disjoint random dicycles, kept when connected.
pub fn eulerian<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    assert!(n >= 2);
    loop {
        let mut arcs = std::collections::BTreeSet::new();
        let cycles = rng.gen_range(1..=n);
        for _ in 0..cycles {
            let len = rng.gen_range(2..=n);
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs.truncate(len);
            let cyc: Vec<_> = (0..len).map(|i| (vs[i], vs[(i + 1) % len])).collect();
            if cyc.iter().all(|a| !arcs.contains(a)) {
                arcs.extend(cyc);
            }
        }
        let touched: std::collections::BTreeSet<usize> =
            arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
        // relabel onto the touched vertices so there are no isolated ones
        let relabel: std::collections::BTreeMap<usize, usize> =
            touched.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let d = Digraph::new(
            touched.len(),
            arcs.iter()
                .map(|(u, v)| (relabel[u], relabel[v]))
                .collect::<Vec<_>>(),
        )
        .expect("distinct pairs");
        if d.is_eulerian() {
            return d;
        }
    }
}
