//! Unit interval graphs given by a unit interval order, and their percolation
//! time.
//!
//! Throughout, a model fixes a linear order of the vertices in which every
//! closed neighborhood is a run of consecutive positions. All formula-level
//! operations work on positions: the maximal cliques are position intervals
//! `[lo, hi]`, `a_L`/`a_R` are the extreme neighbors of a position and `v_L`,
//! `v_R` are positions `0` and `n - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with a validated unit interval order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalModel {
    graph: Graph,
    /// `order[p]` is the vertex at position `p`.
    order: Vec<usize>,
    position: Vec<usize>,
    /// Graph relabeled so that vertex `p` is the vertex at position `p`.
    ordered: Graph,
    /// `(a_L(p), a_R(p))` per position, including `p` itself.
    reach: Vec<(usize, usize)>,
    cliques: Vec<(usize, usize)>,
}

impl UnitIntervalModel {
    /// Validates that every closed neighborhood is consecutive under `order`
    /// and derives the maximal cliques.
    pub fn new(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::InvalidPermutation(n));
        }
        let mut position = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidPermutation(n));
            }
            position[v] = p;
        }
        let ordered = g.induced_subgraph(order);
        let mut reach = Vec::with_capacity(n);
        for p in 0..n {
            let nb = ordered.neighbors(p);
            let lo = nb.first().map_or(p, |&w| w.min(p));
            let hi = nb.last().map_or(p, |&w| w.max(p));
            if hi - lo != nb.len() {
                return Err(Error::NotUnitIntervalOrder(order[p]));
            }
            reach.push((lo, hi));
        }
        let cliques = (0..n)
            .filter(|&p| p == 0 || reach[p].1 > reach[p - 1].1)
            .map(|p| (p, reach[p].1))
            .collect();
        Ok(UnitIntervalModel { graph: g.clone(), order: order.to_vec(), position, ordered, reach, cliques })
    }

    /// Model on positions `0..n` whose adjacency is "some listed interval
    /// contains both endpoints".
    pub fn from_cliques(n: usize, cliques: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(lo, hi) in cliques {
            if hi >= n || lo > hi {
                return Err(Error::VertexOutOfRange { vertex: hi, n });
            }
            for u in lo..=hi {
                for v in u + 1..=hi {
                    if !g.has_edge(u, v) {
                        g.add_edge(u, v)?;
                    }
                }
            }
        }
        let order: Vec<usize> = (0..n).collect();
        UnitIntervalModel::new(&g, &order)
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The graph relabeled by position.
    pub fn ordered_graph(&self) -> &Graph {
        &self.ordered
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Maximal cliques as position intervals, sorted; both endpoints strictly increase.
    pub fn cliques(&self) -> &[(usize, usize)] {
        &self.cliques
    }

    /// Leftmost position in the closed neighborhood of position `p`.
    pub fn a_left(&self, p: usize) -> usize {
        self.reach[p].0
    }

    /// Rightmost position in the closed neighborhood of position `p`.
    pub fn a_right(&self, p: usize) -> usize {
        self.reach[p].1
    }

    /// Degree of the vertex at position `p`.
    pub fn degree_at(&self, p: usize) -> usize {
        self.ordered.neighbors(p).len()
    }

    /// Model induced by the positions `lo..=hi`, in the same order.
    pub fn sub_model(&self, lo: usize, hi: usize) -> UnitIntervalModel {
        let keep: Vec<usize> = (lo..=hi).collect();
        let g = self.ordered.induced_subgraph(&keep);
        let order: Vec<usize> = (0..keep.len()).collect();
        UnitIntervalModel::new(&g, &order).expect("an interval of a unit interval order is one")
    }

    /// Position chain `v_L, a_R(v_L), a_R(a_R(v_L)), ..., v_R`.
    pub fn right_chain(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let mut chain = Vec::new();
        if n == 0 {
            return Ok(chain);
        }
        let mut cur = 0;
        chain.push(cur);
        while cur + 1 < n {
            let next = self.a_right(cur);
            if next == cur {
                return Err(Error::Disconnected);
            }
            cur = next;
            chain.push(cur);
        }
        Ok(chain)
    }

    /// Position chain `v_R, a_L(v_R), ..., v_L`.
    pub fn left_chain(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let mut chain = Vec::new();
        if n == 0 {
            return Ok(chain);
        }
        let mut cur = n - 1;
        chain.push(cur);
        while cur > 0 {
            let next = self.a_left(cur);
            if next == cur {
                return Err(Error::Disconnected);
            }
            cur = next;
            chain.push(cur);
        }
        Ok(chain)
    }

    fn is_two_connected(&self) -> bool {
        self.n() >= 3 && self.ordered.is_connected() && self.ordered.blocks().cut_vertices.is_empty()
    }
}

/// Whether `order` is a unit interval order of `g`.
pub fn is_unit_interval_order(g: &Graph, order: &[usize]) -> bool {
    UnitIntervalModel::new(g, order).is_ok()
}

/// Lexicographic BFS over `g` by partition refinement. With `prev`, ties
/// inside the leading class go to the vertex appearing last in `prev` (LBFS+).
fn lex_bfs(g: &Graph, start: usize, prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0usize; n];
    if let Some(p) = prev {
        for (i, &v) in p.iter().enumerate() {
            rank[v] = i;
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut out = Vec::with_capacity(n);
    let mut first = true;
    while !classes.is_empty() {
        let head = &mut classes[0];
        let idx = if first {
            head.iter().position(|&v| v == start).unwrap()
        } else if prev.is_some() {
            (0..head.len()).max_by_key(|&i| rank[head[i]]).unwrap()
        } else {
            0
        };
        first = false;
        let v = head.remove(idx);
        if head.is_empty() {
            classes.remove(0);
        }
        out.push(v);
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&w| g.has_edge(v, w));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        classes = refined;
    }
    out
}

fn three_sweep(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let s1 = lex_bfs(g, 0, None);
    let s2 = lex_bfs(g, *s1.last().unwrap(), Some(&s1));
    lex_bfs(g, *s2.last().unwrap(), Some(&s2))
}

/// Backtracking search for a unit interval order, pruning any prefix in which
/// a placed vertex's neighborhood is broken or cannot be completed.
fn exhaustive_order(g: &Graph) -> Option<Vec<usize>> {
    fn extend(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = g.n();
        if order.len() == n {
            return is_unit_interval_order(g, order);
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            order.push(v);
            used[v] = true;
            if prefix_ok(g, order, used) && extend(g, order, used) {
                return true;
            }
            used[v] = false;
            order.pop();
        }
        false
    }
    fn prefix_ok(g: &Graph, order: &[usize], used: &[bool]) -> bool {
        let len = order.len();
        order.iter().enumerate().all(|(i, &v)| {
            let placed: Vec<usize> = (0..len).filter(|&j| j == i || g.has_edge(v, order[j])).collect();
            let (lo, hi) = (placed[0], *placed.last().unwrap());
            let consecutive = hi - lo + 1 == placed.len();
            let pending = g.neighbors(v).iter().any(|&w| !used[w]);
            consecutive && (!pending || hi == len - 1)
        })
    }
    let mut order = Vec::new();
    let mut used = vec![false; g.n()];
    extend(g, &mut order, &mut used).then_some(order)
}

/// Size up to which recognition falls back to an exhaustive search.
pub const EXHAUSTIVE_RECOGNITION_LIMIT: usize = 10;

/// Finds a unit interval order of `g`, or `Ok(None)` if none exists.
///
/// Each component is ordered by three LexBFS sweeps (LBFS, LBFS+, LBFS+);
/// components are concatenated. Small graphs whose sweep order fails
/// validation get an exhaustive search as a second opinion.
pub fn recognize(g: &Graph) -> Result<Option<UnitIntervalModel>> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        order.extend(three_sweep(&sub).into_iter().map(|i| comp[i]));
    }
    if let Ok(m) = UnitIntervalModel::new(g, &order) {
        return Ok(Some(m));
    }
    if g.n() <= EXHAUSTIVE_RECOGNITION_LIMIT {
        if let Some(order) = exhaustive_order(g) {
            return UnitIntervalModel::new(g, &order).map(Some);
        }
    }
    Ok(None)
}

/// `d(v_L, v_R)` measured along the greedy `a_R` chain; equals the diameter
/// of a connected model.
pub fn diameter_endpoints(m: &UnitIntervalModel) -> Result<usize> {
    Ok(m.right_chain()?.len().saturating_sub(1))
}

/// Result of expanding every singular vertex of a 2-connected model.
#[derive(Debug, Clone)]
pub struct StarTransform {
    pub model: UnitIntervalModel,
    /// Positions (in the input model) of the singular vertices, in processing order.
    pub singular: Vec<usize>,
    /// For each output position, the input position it came from (`None` for inserted vertices).
    pub origin: Vec<Option<usize>>,
}

/// Rewrites the clique intervals so that intersecting maximal cliques share at
/// least two vertices, inserting one vertex per singular vertex.
///
/// Positions are scanned left to right. At a singular position `w` (some
/// clique ends at `w` and another starts there) a vertex is inserted right
/// after `w`: cliques ending by `w` stay, cliques straddling `w` grow by one
/// on the right and cliques starting at or after `w` shift right by one.
pub fn star_transform(m: &UnitIntervalModel) -> Result<StarTransform> {
    if m.n() < 3 {
        return Err(Error::TooSmall { what: "the G* construction", min: 3, n: m.n() });
    }
    if !m.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let (cliques, origin, singular) = expand_singular(m.n(), m.cliques());
    let model = UnitIntervalModel::from_cliques(origin.len(), &cliques)?;
    debug_assert_eq!(model.cliques(), &cliques[..]);
    Ok(StarTransform { model, singular, origin })
}

type Expansion = (Vec<(usize, usize)>, Vec<Option<usize>>, Vec<usize>);

fn expand_singular(n: usize, cliques: &[(usize, usize)]) -> Expansion {
    let mut cliques = cliques.to_vec();
    let mut origin: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut singular = Vec::new();
    let mut w = 0;
    while w < origin.len() {
        let ends = cliques.iter().any(|&(lo, hi)| hi == w && lo < w);
        let starts = cliques.iter().any(|&(lo, hi)| lo == w && hi > w);
        if ends && starts {
            for c in cliques.iter_mut() {
                if c.1 <= w {
                    continue;
                } else if c.0 < w {
                    c.1 += 1;
                } else {
                    c.0 += 1;
                    c.1 += 1;
                }
            }
            singular.push(origin[w].expect("singular vertices are original"));
            origin.insert(w + 1, None);
        }
        w += 1;
    }
    (cliques, origin, singular)
}

/// `τ(G) = diam(G*)` for a 2-connected model with at least three vertices.
pub fn percolation_time_2connected(m: &UnitIntervalModel) -> Result<usize> {
    diameter_endpoints(&star_transform(m)?.model)
}

/// The 2-connected components of a connected model as position intervals,
/// left to right; consecutive blocks share their cut vertex.
pub fn block_intervals(m: &UnitIntervalModel) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = m
        .ordered_graph()
        .blocks()
        .blocks
        .into_iter()
        .map(|b| (b[0], *b.last().unwrap()))
        .collect();
    out.sort_unstable();
    out
}

/// `Σ diam(C_i*)` over the blocks of a connected model; a bridge counts 1 and
/// a single vertex 0. This is the percolation time of a connected model with
/// no degree-1 vertex and no degree-2 cut vertex.
pub fn block_sum_time(m: &UnitIntervalModel) -> Result<usize> {
    if !m.ordered_graph().is_connected() {
        return Err(Error::Disconnected);
    }
    if m.n() <= 1 {
        return Ok(0);
    }
    block_intervals(m)
        .into_iter()
        .map(|(lo, hi)| match hi - lo + 1 {
            2 => Ok(1),
            _ => percolation_time_2connected(&m.sub_model(lo, hi)),
        })
        .sum()
}

/// Which of the six `t(H)` formulas applies to a special segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SegmentCase {
    /// Two vertices: `t = 1`.
    Edge,
    /// The whole graph, both extremes of degree ≥ 2: `t = τ(H*)`.
    Whole,
    /// Left end removable (a leaf or a degree-2 cut vertex), right end is an
    /// extreme of degree ≥ 2: `t = τ((H - a)*) + 1`.
    TrimLeft,
    /// Mirror of `TrimLeft`: `t = τ((H - b)*) + 1`.
    TrimRight,
    /// Both ends are leaves of the whole graph: `t = τ((H - {a,b})*) + 1`.
    TrimBothLeaves,
    /// At least one end is a degree-2 cut vertex and the other is removable:
    /// `t = τ((H - {a,b})*) + 2`.
    TrimBothCut,
}

/// A maximal position interval between consecutive breakpoints (the extremes
/// and the degree-2 cut vertices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialSegment {
    pub lo: usize,
    pub hi: usize,
    pub case: SegmentCase,
    pub t: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    /// An extreme of the order with degree at least 2.
    Thick,
    /// An extreme of degree 1.
    Leaf,
    /// A degree-2 cut vertex strictly inside the order.
    Cut,
}

/// Splits a connected model at its degree-2 cut vertices and evaluates `t(H)`
/// on every piece.
pub fn special_segments(m: &UnitIntervalModel) -> Result<Vec<SpecialSegment>> {
    let n = m.n();
    if n < 3 {
        return Err(Error::TooSmall { what: "special segments", min: 3, n });
    }
    if !m.ordered_graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let blocks = m.ordered_graph().blocks();
    let mut breaks = vec![0];
    breaks.extend((1..n - 1).filter(|&p| m.degree_at(p) == 2 && blocks.is_cut_vertex(p)));
    breaks.push(n - 1);

    let end_kind = |p: usize| {
        if p != 0 && p != n - 1 {
            End::Cut
        } else if m.degree_at(p) == 1 {
            End::Leaf
        } else {
            End::Thick
        }
    };

    breaks
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let (left, right) = (end_kind(lo), end_kind(hi));
            let size = hi - lo + 1;
            let removable = |e: End| e != End::Thick;
            let candidates = [
                (SegmentCase::Edge, size == 2),
                (SegmentCase::Whole, size > 2 && left == End::Thick && right == End::Thick),
                (SegmentCase::TrimLeft, size > 2 && removable(left) && right == End::Thick),
                (SegmentCase::TrimRight, size > 2 && left == End::Thick && removable(right)),
                (SegmentCase::TrimBothLeaves, size > 2 && left == End::Leaf && right == End::Leaf),
                (
                    SegmentCase::TrimBothCut,
                    size > 2
                        && removable(left)
                        && removable(right)
                        && (left == End::Cut || right == End::Cut),
                ),
            ];
            let matched: Vec<SegmentCase> =
                candidates.iter().filter(|(_, hit)| *hit).map(|(c, _)| *c).collect();
            if matched.len() != 1 {
                return Err(Error::SegmentCase { lo, hi, matched: matched.len() });
            }
            let case = matched[0];
            let t = match case {
                SegmentCase::Edge => 1,
                SegmentCase::Whole => block_sum_time(&m.sub_model(lo, hi))?,
                SegmentCase::TrimLeft => percolation_time_uig(&m.sub_model(lo + 1, hi))? + 1,
                SegmentCase::TrimRight => percolation_time_uig(&m.sub_model(lo, hi - 1))? + 1,
                SegmentCase::TrimBothLeaves => percolation_time_uig(&m.sub_model(lo + 1, hi - 1))? + 1,
                SegmentCase::TrimBothCut => percolation_time_uig(&m.sub_model(lo + 1, hi - 1))? + 2,
            };
            Ok(SpecialSegment { lo, hi, case, t })
        })
        .collect()
}

/// Whether the model has a degree-1 vertex or a degree-2 cut vertex.
pub fn has_weak_vertex(m: &UnitIntervalModel) -> bool {
    let blocks = m.ordered_graph().blocks();
    (0..m.n()).any(|p| match m.degree_at(p) {
        1 => true,
        2 => blocks.is_cut_vertex(p),
        _ => false,
    })
}

/// `τ(G) = ε(G)` for a connected model: the block sum when there is no weak
/// vertex, otherwise the largest `t(H)` over the special segments. The inner
/// `τ((H - a)^*)` terms recurse through this function. One- and two-vertex
/// graphs percolate in 0 rounds.
pub fn percolation_time_uig(m: &UnitIntervalModel) -> Result<usize> {
    if !m.ordered_graph().is_connected() {
        return Err(Error::Disconnected);
    }
    if m.n() <= 2 {
        return Ok(0);
    }
    if !has_weak_vertex(m) {
        return block_sum_time(m);
    }
    Ok(special_segments(m)?.iter().map(|s| s.t).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn model(n: usize, cliques: &[(usize, usize)]) -> UnitIntervalModel {
        UnitIntervalModel::from_cliques(n, cliques).unwrap()
    }

    fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn build_model_examples() {
        let m = UnitIntervalModel::new(&Graph::path(4), &identity(4)).unwrap();
        assert_eq!(m.cliques(), &[(0, 1), (1, 2), (2, 3)]);
        let m = UnitIntervalModel::new(&Graph::complete(4), &[2, 0, 3, 1]).unwrap();
        assert_eq!(m.cliques(), &[(0, 3)]);
        assert!(matches!(
            UnitIntervalModel::new(&Graph::path(3), &[0, 1]),
            Err(Error::InvalidPermutation(3))
        ));
        assert!(UnitIntervalModel::new(&Graph::path(3), &[0, 0, 1]).is_err());
        assert!(matches!(
            UnitIntervalModel::new(&Graph::path(3), &[0, 2, 1]),
            Err(Error::NotUnitIntervalOrder(_))
        ));
    }

    #[test]
    fn c4_has_no_unit_interval_order() {
        let c4 = Graph::cycle(4);
        let mut perm = identity(4);
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            count += 1;
            assert!(!is_unit_interval_order(&c4, p));
        });
        assert_eq!(count, 24);
        assert_eq!(recognize(&c4).unwrap(), None);
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn recognition_examples() {
        let m = recognize(&Graph::path(6)).unwrap().unwrap();
        assert_eq!(m.cliques().len(), 5);
        assert_eq!(recognize(&Graph::star(3)).unwrap(), None);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(recognize(&diamond).unwrap().is_some());
        let mut two = Graph::new(5);
        for (u, v) in [(0, 1), (3, 4), (2, 4)] {
            two.add_edge(u, v).unwrap();
        }
        assert!(recognize(&two).unwrap().is_some());
        assert!(exhaustive_order(&Graph::star(3)).is_none());
        assert!(exhaustive_order(&diamond).is_some());
    }

    #[test]
    fn lex_bfs_sweep_agrees_with_exhaustive_search() {
        for n in 1..=7 {
            for g in crate::generate::all_connected_graphs(n) {
                let swept = is_unit_interval_order(&g, &three_sweep(&g));
                assert_eq!(swept, exhaustive_order(&g).is_some(), "{:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn chains_and_diameter() {
        for n in 1..7 {
            let m = UnitIntervalModel::new(&Graph::complete(n), &identity(n)).unwrap();
            assert_eq!(diameter_endpoints(&m).unwrap(), usize::from(n > 1));
            let m = UnitIntervalModel::new(&Graph::path(n), &identity(n)).unwrap();
            assert_eq!(diameter_endpoints(&m).unwrap(), n - 1);
            assert_eq!(m.left_chain().unwrap().len(), n);
        }
        let m = UnitIntervalModel::new(&Graph::new(2), &identity(2)).unwrap();
        assert_eq!(diameter_endpoints(&m), Err(Error::Disconnected));
    }

    #[test]
    fn star_transform_fixpoint() {
        // cliques overlap in two vertices already
        let m = model(5, &[(0, 2), (1, 3), (2, 4)]);
        let m2 = model(6, &[(0, 3), (2, 5)]);
        let s = star_transform(&m2).unwrap();
        assert!(s.singular.is_empty());
        assert_eq!(s.model, m2);
        // [0,2] and [2,4] meet only in position 2
        let s = star_transform(&m).unwrap();
        assert_eq!(s.singular, vec![2]);
        assert_eq!(s.model.n(), 6);
        assert_eq!(s.model.cliques(), &[(0, 2), (1, 4), (3, 5)]);
        assert_eq!(s.origin, vec![Some(0), Some(1), Some(2), None, Some(3), Some(4)]);
    }

    #[test]
    fn star_transform_preconditions() {
        let tt = model(5, &[(0, 2), (2, 4)]);
        assert_eq!(star_transform(&tt).unwrap_err(), Error::NotTwoConnected);
        let k2 = model(2, &[(0, 1)]);
        assert!(matches!(star_transform(&k2), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn two_connected_time_matches_oracle() {
        let o = Oracle::default();
        for n in 3..7 {
            let m = UnitIntervalModel::new(&Graph::complete(n), &identity(n)).unwrap();
            assert_eq!(percolation_time_2connected(&m), Ok(1));
        }
        // triangle strip with a singular vertex
        let m = model(5, &[(0, 2), (1, 3), (2, 4)]);
        let tau = o.percolation_time(m.ordered_graph()).unwrap();
        assert_eq!(percolation_time_2connected(&m), Ok(tau));
        let star = star_transform(&m).unwrap();
        assert_eq!(o.percolation_time(star.model.ordered_graph()), Ok(tau));
    }

    #[test]
    fn path_segments() {
        for n in 3..8 {
            let m = UnitIntervalModel::new(&Graph::path(n), &identity(n)).unwrap();
            let segs = special_segments(&m).unwrap();
            assert_eq!(segs.len(), n - 1);
            assert!(segs.iter().all(|s| s.t == 1 && s.case == SegmentCase::Edge));
            assert_eq!(percolation_time_uig(&m), Ok(1));
        }
    }

    #[test]
    fn small_cases() {
        let k2 = model(2, &[(0, 1)]);
        assert_eq!(percolation_time_uig(&k2), Ok(0));
        let k1 = model(1, &[(0, 0)]);
        assert_eq!(percolation_time_uig(&k1), Ok(0));
        let m = UnitIntervalModel::new(&Graph::new(3), &identity(3)).unwrap();
        assert_eq!(percolation_time_uig(&m), Err(Error::Disconnected));
    }

    #[test]
    fn barbell_segments_against_oracle() {
        // triangle, path of length 3, triangle
        let m = model(8, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 7)]);
        let segs = special_segments(&m).unwrap();
        assert_eq!(segs.len(), 3);
        assert_eq!(segs[0].case, SegmentCase::TrimRight);
        assert_eq!((segs[1].case, segs[1].t), (SegmentCase::Edge, 1));
        assert_eq!(segs[2].case, SegmentCase::TrimLeft);
        let tau = Oracle::default().percolation_time(m.ordered_graph()).unwrap();
        assert_eq!(percolation_time_uig(&m), Ok(tau));
    }

    #[test]
    fn block_sum_without_weak_vertices() {
        // triangle, bridge, triangle: every cut vertex has degree 3
        let m = model(6, &[(0, 2), (2, 3), (3, 5)]);
        assert_eq!(block_sum_time(&m), Ok(3));
        let tau = Oracle::default().percolation_time(m.ordered_graph()).unwrap();
        assert_eq!(tau, 3);
        assert_eq!(percolation_time_uig(&m), Ok(3));
    }
}
