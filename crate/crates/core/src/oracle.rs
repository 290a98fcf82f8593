//! Exhaustive ground truth for the hull number `h(G)`, the geodetic number
//! `g(G)`, the percolation time `τ(G)` and property 𝒫.
//!
//! Every search runs over vertex subsets. Vertices of degree below two can
//! never be infected, so they are forced into every percolating (and every
//! geodetic) set and only the remaining "free" vertices are enumerated.
//! Minimum-cardinality searches visit subsets by ascending size and
//! lexicographically within a size; the first hit is reported.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{next_combination, Graph};
use crate::percolation::{from_mask, MaskGraph};

/// Largest searches each oracle accepts, counted in enumerated vertices
/// (degree at least two; every vertex for property 𝒫).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub hull: usize,
    pub geodetic: usize,
    pub time: usize,
    pub property_p: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { hull: 20, geodetic: 20, time: 18, property_p: 16 }
    }
}

impl OracleCaps {
    /// The same cap for every search (clamped to the 64-vertex mask engine).
    pub fn uniform(cap: usize) -> Self {
        let cap = cap.min(64);
        OracleCaps { hull: cap, geodetic: cap, time: cap, property_p: cap }
    }
}

/// Subset counts above this are split across the rayon pool.
const PARALLEL_THRESHOLD: u32 = 12;

#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub caps: OracleCaps,
}

struct Prepared {
    mg: MaskGraph,
    forced: u64,
    free: Vec<usize>,
}

impl Prepared {
    fn new(g: &Graph) -> Self {
        let mg = MaskGraph::new(g);
        let mut forced = 0u64;
        let mut free = Vec::new();
        for v in 0..g.n() {
            if g.neighbors(v).len() < 2 {
                forced |= 1 << v;
            } else {
                free.push(v);
            }
        }
        Prepared { mg, forced, free }
    }

    #[inline]
    fn scatter(&self, mut bits: u64) -> u64 {
        let mut s = self.forced;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            s |= 1u64 << self.free[i];
        }
        s
    }

    /// Max of `f` over all seed sets `forced ∪ X`, `X ⊆ free`.
    fn max_over_subsets<F>(&self, f: F) -> usize
    where
        F: Fn(u64) -> Option<usize> + Sync,
    {
        let k = self.free.len() as u32;
        let total = 1u64 << k;
        let eval = |bits: u64| f(self.scatter(bits)).unwrap_or(0);
        if k > PARALLEL_THRESHOLD {
            (0..total).into_par_iter().map(eval).max().unwrap_or(0)
        } else {
            (0..total).map(eval).max().unwrap_or(0)
        }
    }

    /// First set in ascending-size, lexicographic order satisfying `accept`.
    fn first_minimum<F>(&self, accept: F) -> Vec<usize>
    where
        F: Fn(u64) -> bool,
    {
        let k = self.free.len();
        for size in 0..=k {
            let mut comb: Vec<usize> = (0..size).collect();
            loop {
                let s = comb.iter().fold(self.forced, |m, &i| m | (1u64 << self.free[i]));
                if accept(s) {
                    return from_mask(s);
                }
                if !next_combination(&mut comb, k) {
                    break;
                }
            }
        }
        unreachable!("the full vertex set always qualifies")
    }
}

/// Caps bound the number of enumerated vertices; forced vertices are free of
/// charge, but the mask engine limits the whole graph to 64 vertices.
fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let enumerated = g.degrees().iter().filter(|&&d| d >= 2).count();
    if g.n() > 64 {
        Err(Error::CapExceeded { n: g.n(), cap: 64 })
    } else if enumerated > cap {
        Err(Error::CapExceeded { n: enumerated, cap })
    } else {
        Ok(())
    }
}

impl Oracle {
    pub fn new(caps: OracleCaps) -> Self {
        Oracle { caps }
    }

    /// A minimum P3-hull set (first in search order).
    pub fn minimum_hull_set(&self, g: &Graph) -> Result<Vec<usize>> {
        check_cap(g, self.caps.hull)?;
        let p = Prepared::new(g);
        Ok(p.first_minimum(|s| p.mg.closure(s) == p.mg.full))
    }

    /// `h(G)`.
    pub fn hull_number(&self, g: &Graph) -> Result<usize> {
        Ok(self.minimum_hull_set(g)?.len())
    }

    /// Every hull set of minimum size, in search order.
    pub fn all_minimum_hull_sets(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        let h = self.hull_number(g)?;
        let p = Prepared::new(g);
        let extra = h - p.forced.count_ones() as usize;
        let mut out = Vec::new();
        let mut comb: Vec<usize> = (0..extra).collect();
        loop {
            let s = comb.iter().fold(p.forced, |m, &i| m | (1u64 << p.free[i]));
            if p.mg.closure(s) == p.mg.full {
                out.push(from_mask(s));
            }
            if !next_combination(&mut comb, p.free.len()) {
                break;
            }
        }
        Ok(out)
    }

    /// A minimum P3-geodetic (2-dominating) set.
    pub fn minimum_geodetic_set(&self, g: &Graph) -> Result<Vec<usize>> {
        check_cap(g, self.caps.geodetic)?;
        let p = Prepared::new(g);
        Ok(p.first_minimum(|s| p.mg.step(s) == p.mg.full))
    }

    /// `g(G)`.
    pub fn geodetic_number(&self, g: &Graph) -> Result<usize> {
        Ok(self.minimum_geodetic_set(g)?.len())
    }

    /// `τ(G)`: the largest number of rounds any percolating set needs.
    pub fn percolation_time(&self, g: &Graph) -> Result<usize> {
        check_cap(g, self.caps.time)?;
        let p = Prepared::new(g);
        Ok(p.max_over_subsets(|s| p.mg.time(s)))
    }

    /// Largest infection round of `v` over all sets percolating `G`.
    pub fn vertex_percolation_time(&self, g: &Graph, v: usize) -> Result<usize> {
        g.check_vertex(v)?;
        check_cap(g, self.caps.time)?;
        let p = Prepared::new(g);
        Ok(p.max_over_subsets(|s| p.mg.vertex_time(s, v)))
    }

    /// Per-vertex worst-case infection rounds, computed in a single sweep.
    pub fn vertex_percolation_times(&self, g: &Graph) -> Result<Vec<usize>> {
        check_cap(g, self.caps.time)?;
        let p = Prepared::new(g);
        let n = g.n();
        let k = p.free.len() as u32;
        let sweep = |bits: u64| -> Vec<usize> {
            let mut s = p.scatter(bits);
            let mut times = vec![0usize; n];
            let mut t = 0;
            while s != p.mg.full {
                let next = p.mg.step(s);
                if next == s {
                    return vec![0; n];
                }
                t += 1;
                for v in from_mask(next & !s) {
                    times[v] = t;
                }
                s = next;
            }
            times
        };
        let merge = |mut a: Vec<usize>, b: Vec<usize>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x = (*x).max(y);
            }
            a
        };
        let total = 1u64 << k;
        Ok(if k > PARALLEL_THRESHOLD {
            (0..total).into_par_iter().map(sweep).reduce(|| vec![0; n], merge)
        } else {
            (0..total).map(sweep).fold(vec![0; n], merge)
        })
    }

    /// Property 𝒫: `I(I(S)) = I(S)` for every `S ⊆ V`.
    pub fn property_p(&self, g: &Graph) -> Result<bool> {
        Ok(self.property_p_witness(g)?.is_none())
    }

    /// A set `S` with `I(I(S)) ≠ I(S)`, if any.
    pub fn property_p_witness(&self, g: &Graph) -> Result<Option<Vec<usize>>> {
        if g.n() > self.caps.property_p.min(64) {
            return Err(Error::CapExceeded { n: g.n(), cap: self.caps.property_p.min(64) });
        }
        let mg = MaskGraph::new(g);
        let total = 1u64 << g.n();
        let bad = |s: &u64| {
            let once = mg.step(*s);
            mg.step(once) != once
        };
        let hit = if g.n() as u32 > PARALLEL_THRESHOLD {
            (0..total).into_par_iter().find_first(bad)
        } else {
            (0..total).find(bad)
        };
        Ok(hit.map(from_mask))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle() -> Oracle {
        Oracle::default()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn hull_numbers() {
        let o = oracle();
        assert_eq!(o.hull_number(&Graph::complete(2)), Ok(2));
        assert_eq!(o.hull_number(&Graph::path(4)), Ok(3));
        assert_eq!(o.hull_number(&Graph::star(3)), Ok(3));
        assert_eq!(o.hull_number(&Graph::complete(5)), Ok(2));
        assert_eq!(o.hull_number(&Graph::complete(1)), Ok(1));
        // P_4: the forced leaves plus the lexicographically first interior vertex
        assert_eq!(o.minimum_hull_set(&Graph::path(4)).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn geodetic_numbers() {
        let o = oracle();
        assert_eq!(o.geodetic_number(&Graph::complete(2)), Ok(2));
        assert_eq!(o.geodetic_number(&Graph::path(4)), Ok(3));
        assert_eq!(o.geodetic_number(&Graph::star(3)), Ok(3));
        assert_eq!(o.geodetic_number(&Graph::cycle(4)), Ok(2));
        assert_eq!(o.geodetic_number(&Graph::cycle(5)), Ok(3));
    }

    #[test]
    fn percolation_times() {
        let o = oracle();
        for n in 2..7 {
            let expect = if n == 2 { 0 } else { 1 };
            assert_eq!(o.percolation_time(&Graph::complete(n)), Ok(expect));
        }
        assert_eq!(o.percolation_time(&Graph::path(4)), Ok(1));
        assert_eq!(o.vertex_percolation_time(&Graph::path(4), 1), Ok(1));
        assert_eq!(o.vertex_percolation_time(&Graph::path(4), 0), Ok(0));
        // per-vertex sweep agrees with the global maximum
        let t = o.percolation_time(&Graph::cycle(6)).unwrap();
        let per_vertex = o.vertex_percolation_times(&Graph::cycle(6)).unwrap();
        assert_eq!(per_vertex.iter().copied().max(), Some(t));
    }

    #[test]
    fn property_p_examples() {
        let o = oracle();
        assert_eq!(o.property_p(&Graph::complete(5)), Ok(true));
        assert_eq!(o.property_p(&diamond()), Ok(false));
        assert_eq!(o.property_p(&Graph::path(5)), Ok(true));
        let w = o.property_p_witness(&diamond()).unwrap().unwrap();
        let mg = MaskGraph::new(&diamond());
        let s = crate::percolation::to_mask(&w);
        assert_ne!(mg.step(mg.step(s)), mg.step(s));
    }

    #[test]
    fn caps_are_enforced() {
        let o = Oracle::new(OracleCaps::uniform(5));
        let g = Graph::cycle(6);
        assert_eq!(o.hull_number(&g), Err(Error::CapExceeded { n: 6, cap: 5 }));
        // leaves are forced, so a long-legged star stays within the cap
        assert_eq!(o.hull_number(&Graph::star(30)), Ok(30));
        assert!(o.geodetic_number(&g).is_err());
        assert!(o.percolation_time(&g).is_err());
        assert!(o.vertex_percolation_time(&g, 0).is_err());
        assert!(o.property_p(&g).is_err());
    }
}
