//! Caterpillars: recognition, reduced degree sequences and the closed forms for
//! the geodetic number, the hull number and the percolation time.
//!
//! A caterpillar is read along a dominating path `v_1..v_k` whose endpoints are
//! leaves. Its reduced degree sequence records `min(deg(v_i), 4)`; all three
//! parameters are functions of that sequence and the leaf count.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Spine degrees capped at 4, read from one leaf end of the spine to the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedDegreeSequence(Vec<u8>);

impl ReducedDegreeSequence {
    /// Accepts any sequence over `{1,2,3,4}`; structural checks happen where
    /// they matter (`decompose`, `percolation_sequence`).
    pub fn new(terms: Vec<u8>) -> Result<Self> {
        if let Some(bad) = terms.iter().find(|t| !(1..=4).contains(*t)) {
            return Err(Error::MalformedSequence(format!("term {bad} outside 1..=4")));
        }
        Ok(ReducedDegreeSequence(terms))
    }

    pub fn terms(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        ReducedDegreeSequence(self.0.iter().rev().copied().collect())
    }

    /// Whether this is the sequence of some caterpillar: `1,1` or
    /// `1, x_2, ..., x_{k-1}, 1` with interior terms in `{2,3,4}`.
    pub fn is_caterpillar_sequence(&self) -> bool {
        let t = &self.0;
        t.len() >= 2
            && t[0] == 1
            && t[t.len() - 1] == 1
            && (t.len() == 2 || t[1..t.len() - 1].iter().all(|&x| x >= 2))
    }
}

impl fmt::Display for ReducedDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for ReducedDegreeSequence {
    type Err = Error;

    /// Either packed digits (`14342331`) or separated terms (`1,4,3,4`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let pieces: Vec<&str> = if s.contains([',', ' ']) {
            s.split([',', ' ']).filter(|p| !p.is_empty()).collect()
        } else {
            s.split("").filter(|p| !p.is_empty()).collect()
        };
        let terms = pieces
            .iter()
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::MalformedSequence(format!("bad term {p:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        ReducedDegreeSequence::new(terms)
    }
}

/// A recognized caterpillar: a leaf-to-leaf dominating path and its sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Caterpillar {
    /// `v_1..v_k`; both ends are leaves of the tree.
    pub spine: Vec<usize>,
    /// All leaves (degree-1 vertices), sorted.
    pub leaves: Vec<usize>,
    pub rds: ReducedDegreeSequence,
}

impl Caterpillar {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// The same caterpillar read along the spine in the opposite direction.
    pub fn reversed(&self) -> Caterpillar {
        Caterpillar {
            spine: self.spine.iter().rev().copied().collect(),
            leaves: self.leaves.clone(),
            rds: self.rds.reversed(),
        }
    }
}

/// Recognizes a caterpillar and extracts a spine; `Ok(None)` for any other graph.
pub fn recognize_caterpillar(g: &Graph) -> Result<Option<Caterpillar>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { what: "a caterpillar", min: 2, n });
    }
    if g.edge_count() != n - 1 || !g.is_connected() {
        return Ok(None);
    }
    let deg = g.degrees();
    let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let inner: Vec<usize> = (0..n).filter(|&v| deg[v] > 1).collect();

    let spine = match inner.len() {
        0 => vec![0, 1],
        1 => {
            let c = inner[0];
            let nb = g.neighbors(c);
            vec![nb[0], c, nb[1]]
        }
        _ => {
            // inner-degree of each non-leaf; the remainder must be a path
            let inner_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| deg[w] > 1).count();
            if inner.iter().any(|&v| inner_deg(v) > 2) {
                return Ok(None);
            }
            let start = *inner.iter().find(|&&v| inner_deg(v) == 1).unwrap();
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = g.neighbors(cur).iter().copied().find(|&w| deg[w] > 1 && w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        path.push(w);
                    }
                    None => break,
                }
            }
            let first_leaf = |v: usize| *g.neighbors(v).iter().find(|&&w| deg[w] == 1).unwrap();
            let mut spine = vec![first_leaf(path[0])];
            spine.extend_from_slice(&path);
            spine.push(first_leaf(*path.last().unwrap()));
            spine
        }
    };
    let rds = spine.iter().map(|&v| deg[v].min(4) as u8).collect();
    Ok(Some(Caterpillar { spine, leaves, rds: ReducedDegreeSequence(rds) }))
}

/// Builds a caterpillar realizing `rds`: spine vertices are `0..k`, then
/// leaves. Interior terms 2, 3, 4 receive 0, 1 and `leaves_per_four` (≥ 2)
/// pendant leaves respectively.
pub fn realize(rds: &ReducedDegreeSequence, leaves_per_four: usize) -> Result<Graph> {
    let leaf_counts: Vec<usize> = rds
        .terms()
        .iter()
        .map(|&t| match t {
            1 => 0,
            4 => leaves_per_four.max(2),
            t => t as usize - 2,
        })
        .collect();
    realize_with_leaves(rds, &leaf_counts)
}

/// Like [`realize`] but with an explicit pendant count per interior spine
/// position (entries for the two end positions are ignored).
pub fn realize_with_leaves(rds: &ReducedDegreeSequence, leaf_counts: &[usize]) -> Result<Graph> {
    if !rds.is_caterpillar_sequence() {
        return Err(Error::MalformedSequence(format!("{rds} is not a caterpillar sequence")));
    }
    let k = rds.len();
    let interior = 1..k - 1;
    let extra: usize = interior.clone().map(|i| leaf_counts[i]).sum();
    let mut g = Graph::new(k + extra);
    for i in 1..k {
        g.add_edge(i - 1, i)?;
    }
    let mut next = k;
    for i in interior {
        let want = rds.terms()[i] as usize;
        let have = 2 + leaf_counts[i];
        if have.min(4) != want {
            return Err(Error::MalformedSequence(format!(
                "position {i}: {} leaves do not give reduced degree {want}",
                leaf_counts[i]
            )));
        }
        for _ in 0..leaf_counts[i] {
            g.add_edge(i, next)?;
            next += 1;
        }
    }
    Ok(g)
}

/// The unique factorization `s = 1 λ¹ ... λᵖ` into basic sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicDecomposition {
    pub factors: Vec<Vec<u8>>,
}

impl BasicDecomposition {
    /// The basic sequence number `p`.
    pub fn p(&self) -> usize {
        self.factors.len()
    }

    /// The factorization of the whole sequence, leading `[1]` included; it has
    /// `p + 1` factors.
    pub fn full_factorization(&self) -> Vec<Vec<u8>> {
        std::iter::once(vec![1]).chain(self.factors.iter().cloned()).collect()
    }

    /// `1` followed by every factor.
    pub fn concatenated(&self) -> Vec<u8> {
        std::iter::once(1).chain(self.factors.iter().flatten().copied()).collect()
    }
}

/// Membership in the family of basic sequences:
/// `1, 21, 22, 23, 24` and `xγ1, xγ2, xγ3y` for `x ∈ {3,4}`, `γ` a run of 4s
/// and `y ∈ {1,2,3,4}`.
pub fn is_basic(seq: &[u8]) -> bool {
    match seq {
        [1] => true,
        [2, y] => (1..=4).contains(y),
        [x, rest @ ..] if *x == 3 || *x == 4 => {
            let run = rest.iter().take_while(|&&t| t == 4).count();
            match &rest[run..] {
                [1] | [2] => true,
                [3, y] => (1..=4).contains(y),
                _ => false,
            }
        }
        _ => false,
    }
}

/// Greedy left-to-right factorization of a reduced degree sequence (leading
/// `1` stripped) into basic sequences.
pub fn decompose(rds: &ReducedDegreeSequence) -> Result<BasicDecomposition> {
    let s = rds.terms();
    match s {
        [] => return Err(Error::MalformedSequence("empty sequence".into())),
        [first, ..] if *first != 1 => {
            return Err(Error::MalformedSequence("first term must be 1".into()))
        }
        [_] => return Err(Error::MalformedSequence("nothing follows the leading 1".into())),
        _ => {}
    }
    let mut factors = Vec::new();
    let mut i = 1;
    let truncated = || Error::MalformedSequence(format!("{rds}: trailing terms form no basic sequence"));
    while i < s.len() {
        let len = match s[i] {
            1 => 1,
            2 => 2,
            _ => {
                let mut j = i + 1;
                while j < s.len() && s[j] == 4 {
                    j += 1;
                }
                match s.get(j) {
                    Some(1) | Some(2) => j - i + 1,
                    Some(3) => j - i + 2,
                    _ => return Err(truncated()),
                }
            }
        };
        if i + len > s.len() {
            return Err(truncated());
        }
        factors.push(s[i..i + len].to_vec());
        i += len;
    }
    Ok(BasicDecomposition { factors })
}

/// `g(T) = p(T) + ℓ(T) - 1`.
pub fn geodetic_number(cat: &Caterpillar) -> Result<usize> {
    Ok(decompose(&cat.rds)?.p() + cat.leaf_count() - 1)
}

/// Sum of `⌊z/2⌋` over the lengths `z` of the maximal runs of 2s in `seq`.
pub fn z_value(seq: &[u8]) -> usize {
    seq.split(|&t| t != 2).map(|run| run.len() / 2).sum()
}

/// `h(T) = ℓ(T) + Z(s')`, where `s'` drops every 3 from the sequence (so runs
/// of 2s separated only by 3s merge).
pub fn hull_number(cat: &Caterpillar) -> usize {
    let without_threes: Vec<u8> = cat.rds.terms().iter().copied().filter(|&t| t != 3).collect();
    cat.leaf_count() + z_value(&without_threes)
}

/// The auxiliary sequences and per-position worst-case infection times.
///
/// Positions are 0-based; `ell` keeps the 1-based labels (`ell[0] = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PercolationSequence {
    pub ell: Vec<usize>,
    /// First position sharing `ell[i]`.
    pub block_start: Vec<usize>,
    /// Last position sharing `ell[i]`.
    pub block_end: Vec<usize>,
    pub f: Vec<usize>,
    /// `F(T) = max f`.
    pub max: usize,
}

/// Evaluates the percolation sequence of a caterpillar sequence.
///
/// Positions with reduced degree 1, 3 or 4 have closed forms and are filled
/// first; a degree-2 position then reads its already-computed neighbors
/// (a degree-2 neighbor only occurs in the closed-form "both neighbors in
/// {1,2}" case, so no cycle arises).
pub fn percolation_sequence(rds: &ReducedDegreeSequence) -> Result<PercolationSequence> {
    if !rds.is_caterpillar_sequence() {
        return Err(Error::MalformedSequence(format!("{rds} is not a caterpillar sequence")));
    }
    let d = rds.terms();
    let k = d.len();

    let mut ell = vec![1usize; k];
    for i in 1..k {
        ell[i] = if d[i] == 3 && d[i - 1] == 3 { ell[i - 1] } else { ell[i - 1] + 1 };
    }
    let mut block_start = vec![0usize; k];
    let mut block_end = vec![0usize; k];
    for i in 0..k {
        block_start[i] = if i > 0 && ell[i - 1] == ell[i] { block_start[i - 1] } else { i };
    }
    for i in (0..k).rev() {
        block_end[i] = if i + 1 < k && ell[i + 1] == ell[i] { block_end[i + 1] } else { i };
    }

    let mut f = vec![0usize; k];
    for i in 0..k {
        f[i] = match d[i] {
            1 => 0,
            4 => 1,
            3 => {
                let (lo, hi) = (block_start[i], block_end[i]);
                // distances to the block ends, 1-based style: i - n(i), m(i) - i
                let (from_lo, to_hi) = (i - lo, hi - i);
                match (d[lo - 1], d[hi + 1]) {
                    (1, 1) => from_lo.min(to_hi) + 1,
                    (2, 2) => from_lo.max(to_hi) + 1,
                    (1, 2) => from_lo + 1,
                    (2, 1) => to_hi + 1,
                    (1, 4) => (from_lo + 1).min(to_hi + 2),
                    (4, 1) => (from_lo + 2).min(to_hi + 1),
                    (4, 2) => from_lo + 2,
                    (2, 4) => to_hi + 2,
                    (4, 4) => from_lo.min(to_hi) + 2,
                    (l, r) => unreachable!("3-block flanked by {l} and {r}"),
                }
            }
            _ => continue,
        };
    }
    let low = |t: u8| t <= 2;
    for i in 1..k.saturating_sub(1) {
        if d[i] != 2 {
            continue;
        }
        f[i] = match (low(d[i - 1]), low(d[i + 1])) {
            (true, true) => 1,
            (true, false) => f[i + 1] + 1,
            (false, true) => f[i - 1] + 1,
            (false, false) => f[i - 1].max(f[i + 1]) + 1,
        };
    }
    let max = f.iter().copied().max().unwrap_or(0);
    Ok(PercolationSequence { ell, block_start, block_end, f, max })
}

/// `τ(T) = F(T)`.
pub fn percolation_time(cat: &Caterpillar) -> Result<usize> {
    Ok(percolation_sequence(&cat.rds)?.max)
}
