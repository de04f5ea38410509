//! Backtracking isomorphism search for small digraphs.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Default vertex cap for [`isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 10;

/// An arc-preserving bijection `map[v1] = v2`, or `None`.
pub fn isomorphic(d1: &Digraph, d2: &Digraph) -> Result<Option<Vec<usize>>> {
    isomorphic_with_limit(d1, d2, DEFAULT_ISO_LIMIT)
}

pub fn isomorphic_with_limit(
    d1: &Digraph,
    d2: &Digraph,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    let size = d1.vertex_count().max(d2.vertex_count());
    if size > limit {
        return Err(Error::TooLarge { size, limit });
    }
    if d1.vertex_count() != d2.vertex_count() || d1.arc_count() != d2.arc_count() {
        return Ok(None);
    }
    let n = d1.vertex_count();
    let sig1: Vec<_> = (0..n).map(|v| signature(d1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| signature(d2, v)).collect();
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }

    let order = search_order(d1);
    let mut search = Search {
        d1,
        d2,
        sig1: &sig1,
        sig2: &sig2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(search.extend(0).then(|| search.map.clone()))
}

/// Checks that `map` sends the arcs of `d1` exactly onto the arcs of `d2`.
pub fn is_isomorphism(d1: &Digraph, d2: &Digraph, map: &[usize]) -> bool {
    let n = d1.vertex_count();
    if n != d2.vertex_count() || map.len() != n || d1.arc_count() != d2.arc_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    d1.arcs().iter().all(|&(u, v)| d2.has_arc(map[u], map[v]))
}

fn signature(d: &Digraph, v: usize) -> (usize, usize, bool) {
    (d.out_of(v).len(), d.in_of(v).len(), d.has_arc(v, v))
}

// Visit vertices so each new one is adjacent to an already placed one when
// possible; this prunes early on connected inputs.
fn search_order(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (d.out_of(v).len() + d.in_of(v).len(), std::cmp::Reverse(v)))
            .unwrap();
        placed[seed] = true;
        order.push(seed);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            for &w in d.out_of(u).iter().chain(d.in_of(u)) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

struct Search<'a> {
    d1: &'a Digraph,
    d2: &'a Digraph,
    sig1: &'a [(usize, usize, bool)],
    sig2: &'a [(usize, usize, bool)],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.order.len() {
            if self.used[w] || self.sig1[v] != self.sig2[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let x = self.map[u];
            self.d1.has_arc(u, v) == self.d2.has_arc(x, w)
                && self.d1.has_arc(v, u) == self.d2.has_arc(w, x)
        })
    }
}
