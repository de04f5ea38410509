//! Runs every applicable property check on one digraph.

use std::collections::BTreeMap;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::factorization::{block_line_matrix, one_factorization, permutation_to_line_labels};
use crate::iso::isomorphic;
use crate::line::{
    euler_to_hamilton, in_split, is_hamilton_dicycle, is_line_digraph_forbidden,
    is_line_digraph_matrix, iterated_line_digraph, line_digraph, InSplitPartition,
    DEFAULT_FORBIDDEN_LIMIT,
};
use crate::random;
use crate::report::{Assertion, Digest, Report};
use crate::spectral::{
    line_charpoly_sides, penrose_witness_regular, permanent_positivity_check, PERMANENT_LIMIT,
};
use crate::walk::{build_walk, verify_walk_support, CoinKind};

/// Vertex-count cap for the isomorphism-based self-similarity check.
const SELF_ISO_LIMIT: usize = 8;

pub fn verify_digraph(d: &Digraph) -> Result<Report> {
    let mut r = Report::new("verify");
    let (n, m) = (d.vertex_count(), d.arc_count());
    r.digest = Some(Digest {
        n,
        m,
        regularity: d.regularity(),
    });
    let outs: Vec<usize> = (0..n).map(|v| d.out_of(v).len()).collect();
    let ins: Vec<usize> = (0..n).map(|v| d.in_of(v).len()).collect();

    r.push(Assertion::check(
        "degree-sum",
        "sum of out-degrees = sum of in-degrees = arcs",
        outs.iter().sum::<usize>() == m && ins.iter().sum::<usize>() == m,
        format!("m={m}"),
    ));

    if m == 0 {
        r.push(Assertion::skip(
            "line-counts",
            "line digraph order and size",
            "no arcs",
        ));
        return Ok(r);
    }
    let line = line_digraph(d)?;
    let lg = &line.graph;
    let expected_arcs: usize = (0..n).map(|v| outs[v] * ins[v]).sum();
    r.push(Assertion::check(
        "line-counts",
        "line digraph has m vertices and sum d+ d- arcs",
        lg.vertex_count() == m && lg.arc_count() == expected_arcs,
        format!("{} vertices, {} arcs", lg.vertex_count(), lg.arc_count()),
    ));
    let degrees_ok = d
        .arcs()
        .iter()
        .enumerate()
        .all(|(i, &(a, b))| lg.out_of(i).len() == outs[b] && lg.in_of(i).len() == ins[a]);
    r.push(Assertion::check(
        "line-degrees",
        "vertex (u,v) of the line digraph has in-degree d-(u), out-degree d+(v)",
        degrees_ok,
        String::new(),
    ));

    let isolated = (0..n).any(|v| outs[v] + ins[v] == 0);
    if isolated || m == 1 {
        r.push(Assertion::skip(
            "strong-connectivity",
            "line digraph strongly connected iff D is",
            if isolated {
                "isolated vertices"
            } else {
                "single arc"
            },
        ));
    } else {
        let (a, b) = (d.is_strongly_connected(), lg.is_strongly_connected());
        r.push(Assertion::check(
            "strong-connectivity",
            "line digraph strongly connected iff D is",
            a == b,
            format!("D: {a}, line: {b}"),
        ));
    }

    let balanced_arcs = d.arcs().iter().all(|&(a, b)| ins[a] == outs[b]);
    r.push(Assertion::check(
        "line-eulerian",
        "line digraph balanced iff d-(u) = d+(v) on every arc (u,v)",
        lg.is_balanced() == balanced_arcs,
        format!("balanced: {balanced_arcs}"),
    ));

    if d.is_eulerian() {
        let cycle = euler_to_hamilton(d)?;
        r.push(Assertion::check(
            "hamilton-lift",
            "Euler circuit of D is a Hamilton dicycle of the line digraph",
            is_hamilton_dicycle(lg, &cycle),
            format!("length {}", cycle.len()),
        ));
    } else {
        r.push(Assertion::skip(
            "hamilton-lift",
            "Euler circuit of D is a Hamilton dicycle of the line digraph",
            "not eulerian",
        ));
    }

    if d.has_loops() {
        r.push(Assertion::skip(
            "recognition",
            "line digraph is recognised",
            "loops present",
        ));
    } else {
        r.push(Assertion::check(
            "recognition",
            "line digraph satisfies the row/column criterion",
            is_line_digraph_matrix(lg)?,
            String::new(),
        ));
        if n <= DEFAULT_FORBIDDEN_LIMIT {
            let a = is_line_digraph_matrix(d)?;
            let b = is_line_digraph_forbidden(d)?;
            r.push(Assertion::check(
                "recognition-agree",
                "matrix criterion agrees with forbidden subdigraphs on D",
                a == b,
                format!("D is a line digraph: {a}"),
            ));
        }
    }

    if m < n {
        r.push(Assertion::skip(
            "charpoly",
            "P(L D, x) = x^(m-n) P(D, x)",
            Error::ExponentNegative {
                arcs: m,
                vertices: n,
            }
            .name(),
        ));
    } else {
        let (lhs, rhs) = line_charpoly_sides(d)?;
        r.push(Assertion::check(
            "charpoly",
            "P(L D, x) = x^(m-n) P(D, x)",
            lhs == rhs,
            lhs.to_factored_string(),
        ));
    }

    if m > PERMANENT_LIMIT {
        r.push(Assertion::skip(
            "permanent",
            "per M(L D) > 0 iff every component is eulerian",
            format!("m > {PERMANENT_LIMIT}"),
        ));
    } else {
        let p = permanent_positivity_check(d)?;
        r.push(Assertion::check(
            "permanent",
            "per M(L D) > 0 iff every component is eulerian",
            p.agrees(),
            format!("per = {}", p.permanent),
        ));
    }

    let split = in_split(d, &InSplitPartition::maximal(d))?;
    let index: BTreeMap<(usize, usize), usize> =
        d.arcs().iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let to_line: Vec<usize> = split
        .class_of
        .iter()
        .map(|&(v, j)| index[&(d.in_of(v)[j], v)])
        .collect();
    let mut split_arcs: Vec<(usize, usize)> = split
        .graph
        .arc_counts()
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&(u, v), _)| (to_line[u], to_line[v]))
        .collect();
    split_arcs.sort_unstable();
    let simple = split.graph.arc_counts().values().all(|&c| c == 1);
    r.push(Assertion::check(
        "in-split",
        "maximal in-split graph is the line digraph",
        simple && split_arcs == lg.arcs(),
        String::new(),
    ));

    if d.is_acyclic() {
        let ell = d.longest_dipath_length()?;
        let it = iterated_line_digraph(d, ell)?;
        r.push(Assertion::check(
            "dag-empties",
            "iterating an acyclic D leaves no arcs after longest-dipath-length steps",
            it.graph.arc_count() == 0,
            format!("longest dipath {ell}"),
        ));
    }

    if m == n && d.is_strongly_connected() && n <= SELF_ISO_LIMIT {
        let same = isomorphic(lg, d)?.is_some();
        let is_cycle = d.regularity() == Some(1);
        r.push(Assertion::check(
            "self-line",
            "strongly connected D with L D isomorphic to D is a dicycle",
            !same || is_cycle,
            format!("isomorphic: {same}"),
        ));
    }

    if let Some(k) = d.regularity().filter(|&k| k >= 1) {
        regular_checks(d, k, &mut r)?;
    }
    Ok(r)
}

fn regular_checks(d: &Digraph, k: usize, r: &mut Report) -> Result<()> {
    let line = line_digraph(d)?;
    let fac = one_factorization(d)?;
    let block = block_line_matrix(&fac);
    let relabelled = line
        .graph
        .adjacency()
        .permuted(&permutation_to_line_labels(&fac))?;
    r.push(Assertion::check(
        "block-matrix",
        "line digraph adjacency in factor labelling is the k-fold block row of factor matrices",
        relabelled == block,
        format!("k={k}"),
    ));

    let witness = penrose_witness_regular(d);
    r.push(Assertion::check(
        "penrose",
        "M^T / k^2 is the Moore-Penrose inverse of M(L D)",
        witness.is_ok(),
        match witness {
            Err(e) => e.to_string(),
            Ok(_) => String::new(),
        },
    ));

    if k * d.vertex_count() <= 64 {
        let coin = CoinKind::Fourier.build(k)?;
        let w = build_walk(d, &coin)?;
        for a in verify_walk_support(&w)?.assertions {
            r.push(a);
        }
    } else {
        r.push(Assertion::skip(
            "walk-support",
            "walk operator support",
            "dimension above 64",
        ));
    }

    if d.is_strongly_connected() {
        let l2 = iterated_line_digraph(d, 2)?;
        let l1 = &line.graph;
        let ok = [l1, &l2.graph]
            .iter()
            .all(|g| g.regularity() == Some(k) && g.is_eulerian());
        let ham = l2.graph.vertex_count() <= 10_000
            && euler_to_hamilton(l1).is_ok_and(|c| is_hamilton_dicycle(&l2.graph, &c));
        r.push(Assertion::check(
            "regular-iterates",
            "L D and L^2 D are k-regular, eulerian and hamiltonian",
            ok && ham,
            String::new(),
        ));
    }
    Ok(())
}

/// `count` random loopless digraphs from `seed`, one report per instance,
/// in instance order.
pub fn verify_random(count: usize, seed: u64) -> Result<Vec<(Digraph, Report)>> {
    let mut rng = random::rng(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        use rand::Rng;
        let n = rng.gen_range(2..=7);
        let d = match i % 3 {
            0 => random::digraph(&mut rng, n, 0.35, false),
            1 => random::eulerian(&mut rng, n),
            _ => {
                let k = rng.gen_range(1..=2.min(n - 1));
                random::regular(&mut rng, n, k, true)
            }
        };
        let r = verify_digraph(&d)?;
        out.push((d, r));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::{dicycle, dipath, two_cube};
    use crate::report::Status;

    #[test]
    fn two_cube_passes() {
        let r = verify_digraph(&two_cube()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.assertions.iter().any(|a| a.id == "block-matrix"));
    }

    #[test]
    fn path_skips_hamilton() {
        let r = verify_digraph(&dipath(3)).unwrap();
        let h = r
            .assertions
            .iter()
            .find(|a| a.id == "hamilton-lift")
            .unwrap();
        assert_eq!(h.status, Status::Skipped("not eulerian".into()));
        assert!(r.to_string().contains("skipped: not eulerian"));
        assert!(r.passed());
    }

    #[test]
    fn cycle_passes() {
        assert!(verify_digraph(&dicycle(5)).unwrap().passed());
    }

    #[test]
    fn random_batch_passes() {
        for (d, r) in verify_random(12, 3).unwrap() {
            assert!(r.passed(), "{d}\n{r}");
        }
    }
}
