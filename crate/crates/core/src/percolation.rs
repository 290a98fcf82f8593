//! The P3 interval operator and 2-neighbor bootstrap percolation.
//!
//! One round of the interval operator adds every vertex with at least two
//! neighbors in the current set. Iterating it from a seed set `R_0` yields the
//! monotone chain `R_0 ⊆ R_1 ⊆ ...` whose fixpoint is the convex hull of the
//! seeds.

use crate::error::Result;
use crate::graph::Graph;

/// Round-by-round record of a percolation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PercolationTrace {
    /// `layers[k]` holds the vertices first infected in round `k` (seeds at 0).
    /// The last layer is nonempty; the run stops at the first round adding nothing.
    layers: Vec<Vec<usize>>,
    time_of: Vec<Option<usize>>,
}

impl PercolationTrace {
    /// Round at which `v` became infected, `None` if it never did.
    pub fn time_of(&self, v: usize) -> Option<usize> {
        self.time_of[v]
    }

    pub fn times(&self) -> &[Option<usize>] {
        &self.time_of
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// The cumulative sets `R_0, R_1, ..., R_t`, each sorted.
    pub fn rounds(&self) -> Vec<Vec<usize>> {
        let mut acc: Vec<usize> = Vec::new();
        self.layers
            .iter()
            .map(|layer| {
                acc.extend_from_slice(layer);
                let mut r = acc.clone();
                r.sort_unstable();
                r
            })
            .collect()
    }

    pub fn percolated(&self) -> bool {
        self.time_of.iter().all(Option::is_some)
    }

    /// Number of rounds to reach the fixpoint; equals `τ_S(G)` when percolated.
    pub fn final_round(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    /// The fixpoint (hull of the seeds), sorted.
    pub fn closure(&self) -> Vec<usize> {
        (0..self.time_of.len()).filter(|&v| self.time_of[v].is_some()).collect()
    }
}

fn membership(g: &Graph, s: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; g.n()];
    for &v in s {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    Ok(inside)
}

/// `S` together with every outside vertex having at least two neighbors in `S`.
pub fn interval(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    let inside = membership(g, s)?;
    Ok((0..g.n())
        .filter(|&v| {
            inside[v] || g.neighbors(v).iter().filter(|&&w| inside[w]).count() >= 2
        })
        .collect())
}

/// Iterates the interval operator from `s` to its fixpoint.
pub fn percolate(g: &Graph, s: &[usize]) -> Result<PercolationTrace> {
    let inside = membership(g, s)?;
    let n = g.n();
    let mut time_of = vec![None; n];
    let mut hits = vec![0usize; n];
    let seeds: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    let mut layers = Vec::new();
    let mut frontier = seeds;
    let mut round = 0;
    while !frontier.is_empty() {
        for &v in &frontier {
            time_of[v] = Some(round);
        }
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if time_of[w].is_none() {
                    hits[w] += 1;
                    if hits[w] == 2 {
                        next.push(w);
                    }
                }
            }
        }
        next.sort_unstable();
        layers.push(frontier);
        frontier = next;
        round += 1;
    }
    if layers.is_empty() {
        layers.push(Vec::new());
    }
    Ok(PercolationTrace { layers, time_of })
}

/// The smallest P3-convex set containing `s`.
pub fn hull_closure(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    Ok(percolate(g, s)?.closure())
}

/// Whether `s` is P3-convex: no outside vertex has two neighbors inside.
pub fn is_convex(g: &Graph, s: &[usize]) -> Result<bool> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(interval(g, &sorted)? == sorted)
}

/// Bitmask form of a graph with at most 64 vertices, used by the exhaustive
/// searches.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub adj: Vec<u64>,
    pub full: u64,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        assert!(n <= 64, "mask engine supports at most 64 vertices");
        MaskGraph {
            adj: g.masks(),
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        }
    }

    /// One interval round.
    #[inline]
    pub fn step(&self, s: u64) -> u64 {
        let mut once = 0u64;
        let mut twice = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice |= once & self.adj[v];
            once |= self.adj[v];
        }
        s | (twice & self.full)
    }

    /// Rounds until `s` infects everything, or `None` if it stalls.
    #[inline]
    pub fn time(&self, mut s: u64) -> Option<usize> {
        let mut t = 0;
        while s != self.full {
            let next = self.step(s);
            if next == s {
                return None;
            }
            s = next;
            t += 1;
        }
        Some(t)
    }

    pub fn closure(&self, mut s: u64) -> u64 {
        loop {
            let next = self.step(s);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Round in which `target` is infected, provided `s` percolates the whole graph.
    pub fn vertex_time(&self, mut s: u64, target: usize) -> Option<usize> {
        let bit = 1u64 << target;
        let mut t = 0;
        let mut hit = None;
        loop {
            if hit.is_none() && s & bit != 0 {
                hit = Some(t);
            }
            if s == self.full {
                return hit;
            }
            let next = self.step(s);
            if next == s {
                return None;
            }
            s = next;
            t += 1;
        }
    }
}

#[cfg(test)]
pub(crate) fn to_mask(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub(crate) fn from_mask(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}
