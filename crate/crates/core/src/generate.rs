//! Instance generators for cross-validation. Random generators take an
//! explicit RNG so that a fixed seed reproduces the same corpus.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caterpillar::{realize, realize_with_leaves, ReducedDegreeSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::unit_interval::UnitIntervalModel;

/// Seeded RNG used by every generator entry point.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every caterpillar sequence `1 x_2 ... x_{k-1} 1` with `2 ≤ k ≤ max_spine`,
/// shortest first and lexicographic within a length.
pub fn all_rds(max_spine: usize) -> Vec<ReducedDegreeSequence> {
    let mut out = Vec::new();
    for k in 2..=max_spine {
        let inner = k - 2;
        for code in 0..3usize.pow(inner as u32) {
            let mut terms = vec![1u8; k];
            let mut c = code;
            for slot in terms[1..k - 1].iter_mut().rev() {
                *slot = (c % 3) as u8 + 2;
                c /= 3;
            }
            out.push(ReducedDegreeSequence::new(terms).expect("terms are in range"));
        }
    }
    out
}

/// One caterpillar per caterpillar sequence with spine length at most
/// `max_spine`, each 4 carrying two pendant vertices.
pub fn caterpillar_exhaustive(max_spine: usize) -> Vec<Graph> {
    all_rds(max_spine).iter().map(|r| realize(r, 2).expect("valid sequence")).collect()
}

/// A uniformly chosen caterpillar sequence of spine length `k` realized with
/// random pendant counts, keeping the total order at most `max_n`.
pub fn random_caterpillar<R: Rng>(rng: &mut R, max_n: usize) -> Result<Graph> {
    if max_n < 2 {
        return Err(Error::TooSmall { what: "a caterpillar", min: 2, n: max_n });
    }
    let k = rng.gen_range(2..=max_n);
    let mut terms = vec![1u8; k];
    let mut leaves = vec![0usize; k];
    let mut budget = max_n - k;
    let mut interior: Vec<usize> = (1..k - 1).collect();
    interior.shuffle(rng);
    for i in interior {
        let want: usize = match budget {
            0 => 0,
            1 => rng.gen_range(0..=1),
            _ => rng.gen_range(0..=budget.min(4)),
        };
        leaves[i] = want;
        budget -= want;
        terms[i] = (2 + want).min(4) as u8;
    }
    let rds = ReducedDegreeSequence::new(terms)?;
    realize_with_leaves(&rds, &leaves)
}

/// Random nondecreasing reach sequence with `r(i) > i` for `i < n - 1`; the
/// window bounds how far right a vertex reaches.
fn random_reach<R: Rng>(rng: &mut R, n: usize, window: usize, min_ahead: usize) -> Vec<usize> {
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let lo = (i + min_ahead).min(n - 1).max(r.last().copied().unwrap_or(0));
        let hi = (i + window).min(n - 1).max(lo);
        r.push(rng.gen_range(lo..=hi));
    }
    r
}

fn model_from_reach<R: Rng>(rng: &mut R, r: &[usize]) -> UnitIntervalModel {
    let n = r.len();
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::new(n);
    for (p, &hi) in r.iter().enumerate() {
        for q in p + 1..=hi {
            g.add_edge(labels[p], labels[q]).expect("distinct positions");
        }
    }
    UnitIntervalModel::new(&g, &labels).expect("reach sequences give unit interval orders")
}

/// Random connected unit interval graph on `n` vertices with shuffled labels;
/// the model records the generating order.
pub fn random_uig<R: Rng>(rng: &mut R, n: usize) -> Result<UnitIntervalModel> {
    if n == 0 {
        return Err(Error::TooSmall { what: "a unit interval graph", min: 1, n });
    }
    let window = rng.gen_range(1..=n.clamp(1, 4));
    let r = random_reach(rng, n, window, 1);
    Ok(model_from_reach(rng, &r))
}

/// Random 2-connected unit interval graph: every position but the last two
/// reaches at least two positions ahead, so no position separates the order.
pub fn random_uig_2connected<R: Rng>(rng: &mut R, n: usize) -> Result<UnitIntervalModel> {
    if n < 3 {
        return Err(Error::TooSmall { what: "a 2-connected unit interval graph", min: 3, n });
    }
    let window = rng.gen_range(2..=n.clamp(2, 5));
    let r = random_reach(rng, n, window, 2);
    Ok(model_from_reach(rng, &r))
}

/// Connected `G(n, p)`-style graph: a random spanning tree plus independent
/// extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).expect("tree edges are new");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("checked");
            }
        }
    }
    g
}

/// Adjacency upper triangle as a bit string, row by row.
fn code_of(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | u64::from(g.has_edge(perm[i], perm[j]));
        }
    }
    code
}

/// Canonical code: the smallest adjacency code over relabelings that list the
/// vertices by descending degree, permuting freely within each degree class.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are packed into 64 bits");
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.neighbors(v).len()));
    let classes: Vec<Vec<usize>> = verts
        .iter()
        .copied()
        .chunk_by(|&v| g.neighbors(v).len())
        .into_iter()
        .map(|(_, c)| c.collect())
        .collect();
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    canonical_rec(g, &classes, 0, &mut perm, &mut best);
    best
}

fn canonical_rec(g: &Graph, classes: &[Vec<usize>], idx: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if idx == classes.len() {
        *best = (*best).min(code_of(g, perm));
        return;
    }
    let k = classes[idx].len();
    for p in classes[idx].iter().copied().permutations(k) {
        let len = perm.len();
        perm.extend(p);
        canonical_rec(g, classes, idx + 1, perm, best);
        perm.truncate(len);
    }
}

/// Every connected graph on `n` vertices up to isomorphism, grown one vertex
/// at a time (each connected graph has a vertex whose removal keeps it
/// connected) and deduplicated by [`canonical_code`].
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1)];
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << m) {
                let mut h = Graph::new(m + 1);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("copied edge");
                }
                for u in (0..m).filter(|&u| mask >> u & 1 == 1) {
                    h.add_edge(u, m).expect("new vertex");
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rds_counts() {
        // 3^(k-2) sequences per spine length k
        assert_eq!(all_rds(2).len(), 1);
        assert_eq!(all_rds(4).len(), 1 + 3 + 9);
        assert!(all_rds(6).iter().all(|r| r.is_caterpillar_sequence()));
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=7).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert!(all_connected_graphs(5).iter().all(Graph::is_connected));
    }

    #[test]
    fn canonical_code_is_label_free() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            let g = random_connected_graph(&mut rng, 7, 0.3);
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let h = g.induced_subgraph(&perm);
            assert_eq!(canonical_code(&g), canonical_code(&h));
        }
        assert_ne!(canonical_code(&Graph::path(4)), canonical_code(&Graph::star(3)));
    }

    #[test]
    fn random_generators_respect_their_contracts() {
        let mut rng = seeded(7);
        for _ in 0..200 {
            let g = random_caterpillar(&mut rng, 14).unwrap();
            assert!(g.n() <= 14 && g.is_connected());
            assert_eq!(g.edge_count(), g.n() - 1);
            let m = random_uig(&mut rng, 8).unwrap();
            assert!(m.graph().is_connected());
            let m = random_uig_2connected(&mut rng, 9).unwrap();
            assert!(m.graph().blocks().cut_vertices.is_empty());
            let g = random_connected_graph(&mut rng, 10, 0.2);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_uig(&mut seeded(11), 9).unwrap();
        let b = random_uig(&mut seeded(11), 9).unwrap();
        assert_eq!(a, b);
    }
}
