//! Cohen-Macaulay decision procedure for bipartite graphs.
//!
//! A bipartite graph is Cohen-Macaulay iff it has a perfect matching
//! `{x_1, y_1}, ..., {x_n, y_n}` (with every `x_i` on the A side) such that
//!
//! 1. for every `i`, each vertex of `N(y_i)` is adjacent to each vertex of
//!    `N(x_i)`, and
//! 2. no two pairs `i != j` have both cross edges `x_i ~ y_j` and `x_j ~ y_i`.
//!
//! Condition 1 alone is equivalent to the graph being unmixed. The matching is
//! found by peeling: repeatedly remove a degree-one vertex together with its
//! only neighbor. A Cohen-Macaulay graph always peels completely, so a stuck
//! peel is already a negative answer.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{BipartiteGraph, Completeness};
use crate::matching::{self, HallViolator, Matching, MatchingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Peeled,
    Supplied,
}

/// A perfect matching with an explicit pair order: pair `i` is
/// `(x_i, y_i)` with `x_i` an A index and `y_i` a B index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedMatching {
    pairs: Vec<(usize, usize)>,
    provenance: Provenance,
}

impl OrderedMatching {
    /// Validates that `pairs` is a perfect matching of `g`, keeping the order.
    pub fn supplied(g: &BipartiteGraph, pairs: Vec<(usize, usize)>) -> Result<Self, MatchingError> {
        let m = Matching::new(g, pairs.clone())?;
        if !m.is_perfect_in(g) {
            if g.part_a() != g.part_b() {
                return Err(MatchingError::Unbalanced {
                    part_a: g.part_a(),
                    part_b: g.part_b(),
                });
            }
            let v = m.first_uncovered(g).expect("non-perfect matching leaves a vertex uncovered");
            return Err(MatchingError::NotPerfect(v));
        }
        Ok(OrderedMatching {
            pairs,
            provenance: Provenance::Supplied,
        })
    }

    pub fn from_matching(g: &BipartiteGraph, m: &Matching) -> Result<Self, MatchingError> {
        Self::supplied(g, m.pairs().to_vec())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The same pairs as an unordered [`Matching`].
    pub fn to_matching(&self) -> Matching {
        let mut pairs = self.pairs.clone();
        pairs.sort_unstable();
        Matching::from_sorted_unchecked(pairs)
    }

    /// `pair_of_b[y]` is the index of the pair whose B vertex is `y`.
    fn pair_of_b(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.pairs.len()];
        for (i, &(_, y)) in self.pairs.iter().enumerate() {
            out[y] = i;
        }
        out
    }

    /// Checks that this is still a perfect matching of `g`.
    fn ensure_perfect_in(&self, g: &BipartiteGraph) -> Result<(), MatchingError> {
        Self::supplied(g, self.pairs.clone()).map(|_| ())
    }
}

/// Why peeling stopped before consuming every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelFailure {
    OddVertexCount { vertices: usize },
    /// No vertex of degree one is left.
    Stuck {
        peeled_pairs: usize,
        remaining_vertices: usize,
        remaining_edges: usize,
        min_degree: usize,
    },
}

/// Peels degree-one vertices. On success the pairs are in peel order.
///
/// Among degree-one vertices the lowest is taken, A side before B side, so
/// the result is a fixed function of the graph. Runs in `O(E log V)`.
pub fn peel(g: &BipartiteGraph) -> Result<OrderedMatching, PeelFailure> {
    let na = g.part_a();
    let total = g.vertex_count();
    if total % 2 == 1 {
        return Err(PeelFailure::OddVertexCount { vertices: total });
    }
    // unified ids: A vertex a is a, B vertex b is na + b
    let neighbors = |v: usize| -> Box<dyn Iterator<Item = usize> + '_> {
        if v < na {
            Box::new(g.neighbors_of_a(v).iter().map(move |&b| na + b))
        } else {
            Box::new(g.neighbors_of_b(v - na).iter().copied())
        }
    };
    let mut degree: Vec<usize> = (0..total).map(|v| neighbors(v).count()).collect();
    let mut alive = vec![true; total];
    let mut leaves: BTreeSet<usize> = (0..total).filter(|&v| degree[v] == 1).collect();
    let mut remaining_edges = g.edge_count();
    let mut remaining = total;
    let mut pairs = Vec::with_capacity(total / 2);

    while remaining > 0 {
        let Some(v) = leaves.pop_first() else {
            let min_degree = (0..total).filter(|&v| alive[v]).map(|v| degree[v]).min().unwrap_or(0);
            return Err(PeelFailure::Stuck {
                peeled_pairs: pairs.len(),
                remaining_vertices: remaining,
                remaining_edges,
                min_degree,
            });
        };
        let u = neighbors(v)
            .find(|&w| alive[w])
            .expect("degree-one vertex has a live neighbor");
        leaves.remove(&u);
        for dead in [v, u] {
            alive[dead] = false;
            remaining -= 1;
        }
        for dead in [v, u] {
            for w in neighbors(dead) {
                if !alive[w] {
                    continue;
                }
                remaining_edges -= 1;
                degree[w] -= 1;
                match degree[w] {
                    1 => {
                        leaves.insert(w);
                    }
                    0 => {
                        leaves.remove(&w);
                    }
                    _ => {}
                }
            }
        }
        remaining_edges -= 1; // the peeled edge itself
        pairs.push(if v < na { (v, u - na) } else { (u, v - na) });
    }
    Ok(OrderedMatching {
        pairs,
        provenance: Provenance::Peeled,
    })
}

/// A self-validating reason why a graph is not Cohen-Macaulay (or not
/// unmixed). Pair indices are 0-based positions in the matching that was
/// checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    OddOrUnbalanced { part_a: usize, part_b: usize },
    NoPerfectMatching(HallViolator),
    /// `a ∈ N(y)` and `b ∈ N(x)` but `a` and `b` are not adjacent.
    Condition1 {
        pair_index: usize,
        pair: (usize, usize),
        a: usize,
        b: usize,
    },
    /// Both cross edges `x_i ~ y_j` and `x_j ~ y_i` are present.
    Condition2 {
        i: usize,
        j: usize,
        pair_i: (usize, usize),
        pair_j: (usize, usize),
    },
    /// Peeling stopped but no classical witness was found. Never produced
    /// on a graph for which the characterization holds.
    PeelStuck { remaining_vertices: usize, min_degree: usize },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::OddOrUnbalanced { .. } => "odd_or_unbalanced",
            Witness::NoPerfectMatching(_) => "no_perfect_matching",
            Witness::Condition1 { .. } => "condition1",
            Witness::Condition2 { .. } => "condition2",
            Witness::PeelStuck { .. } => "peel_stuck",
        }
    }

    /// Re-checks the carried data against `g`.
    pub fn validate(&self, g: &BipartiteGraph) -> bool {
        match *self {
            Witness::OddOrUnbalanced { part_a, part_b } => {
                part_a == g.part_a() && part_b == g.part_b() && part_a != part_b
            }
            Witness::NoPerfectMatching(ref h) => h.validate(g),
            Witness::Condition1 { pair: (x, y), a, b, .. } => {
                g.has_edge(x, y) && g.has_edge(a, y) && g.has_edge(x, b) && !g.has_edge(a, b)
            }
            Witness::Condition2 {
                i,
                j,
                pair_i: (xi, yi),
                pair_j: (xj, yj),
            } => {
                i != j
                    && xi != xj
                    && yi != yj
                    && g.has_edge(xi, yi)
                    && g.has_edge(xj, yj)
                    && g.has_edge(xi, yj)
                    && g.has_edge(xj, yi)
            }
            Witness::PeelStuck { .. } => peel(g).is_err(),
        }
    }
}

/// Condition 1 on every pair: `N(y_i) × N(x_i)` must be complete. Returns the
/// first failing pair with a missing edge.
pub fn check_condition1(g: &BipartiteGraph, m: &OrderedMatching) -> Result<Option<Witness>, MatchingError> {
    m.ensure_perfect_in(g)?;
    Ok(condition1(g, m))
}

fn condition1(g: &BipartiteGraph, m: &OrderedMatching) -> Option<Witness> {
    m.pairs.iter().enumerate().find_map(|(i, &(x, y))| {
        match g.completeness_bits(g.neighbor_bits_b(y), g.neighbor_bits_a(x)) {
            Completeness::Complete => None,
            Completeness::Missing(a, b) => Some(Witness::Condition1 {
                pair_index: i,
                pair: (x, y),
                a,
                b,
            }),
        }
    })
}

/// Condition 2: returns the lexicographically first `(i, j)`, `i < j`, with
/// both cross edges present.
pub fn check_condition2(g: &BipartiteGraph, m: &OrderedMatching) -> Result<Option<Witness>, MatchingError> {
    m.ensure_perfect_in(g)?;
    Ok(condition2(g, m))
}

fn condition2(g: &BipartiteGraph, m: &OrderedMatching) -> Option<Witness> {
    let pair_of_b = m.pair_of_b();
    for (i, &(xi, yi)) in m.pairs.iter().enumerate() {
        let j = g
            .neighbors_of_a(xi)
            .iter()
            .map(|&b| pair_of_b[b])
            .filter(|&j| j > i && g.has_edge(m.pairs[j].0, yi))
            .min();
        if let Some(j) = j {
            return Some(Witness::Condition2 {
                i,
                j,
                pair_i: (xi, yi),
                pair_j: m.pairs[j],
            });
        }
    }
    None
}

/// Result of [`is_unmixed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unmixedness {
    /// Carries a perfect matching satisfying condition 1.
    Unmixed(OrderedMatching),
    Mixed(Witness),
}

impl Unmixedness {
    pub fn is_unmixed(&self) -> bool {
        matches!(self, Unmixedness::Unmixed(_))
    }
}

/// Unmixed iff the parts are balanced, a perfect matching exists, and
/// condition 1 holds for it. Any perfect matching will do.
pub fn is_unmixed(g: &BipartiteGraph) -> Unmixedness {
    if g.part_a() != g.part_b() {
        return Unmixedness::Mixed(Witness::OddOrUnbalanced {
            part_a: g.part_a(),
            part_b: g.part_b(),
        });
    }
    let mm = matching::max_matching(g);
    if !mm.is_perfect_in(g) {
        let h = matching::hall_violator(g)
            .expect("parts are balanced")
            .expect("no perfect matching implies a Hall violator");
        return Unmixedness::Mixed(Witness::NoPerfectMatching(h));
    }
    let m = OrderedMatching {
        pairs: mm.pairs().to_vec(),
        provenance: Provenance::Supplied,
    };
    match condition1(g, &m) {
        Some(w) => Unmixedness::Mixed(w),
        None => Unmixedness::Unmixed(m),
    }
}

/// A positive verdict: the matching with a relabeling satisfying the ordered
/// characterization. `hh_order[p]` is the matching index placed at position
/// `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub matching: OrderedMatching,
    pub hh_order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Certified(Certificate),
    Refuted(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_cm: bool,
    pub is_unmixed: bool,
    pub outcome: Outcome,
    /// Set when the decision came from a stuck peel.
    pub peel_failure: Option<PeelFailure>,
}

impl Verdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Certified(c) => Some(c),
            Outcome::Refuted(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Certified(_) => None,
            Outcome::Refuted(w) => Some(w),
        }
    }

    /// Re-checks the certificate or witness against `g`.
    pub fn validate(&self, g: &BipartiteGraph) -> bool {
        match &self.outcome {
            Outcome::Certified(c) => {
                self.is_cm
                    && self.is_unmixed
                    && c.matching.ensure_perfect_in(g).is_ok()
                    && check_order(g, &c.matching, &c.hh_order, OrderKind::HerzogHibi).is_ok()
            }
            Outcome::Refuted(w) => !self.is_cm && w.validate(g),
        }
    }
}

/// Decides Cohen-Macaulayness by peeling, then checking both conditions on
/// the peeled matching.
pub fn is_cohen_macaulay(g: &BipartiteGraph) -> Verdict {
    match peel(g) {
        Ok(m) => decide_with(g, m),
        Err(failure @ PeelFailure::OddVertexCount { .. }) => Verdict {
            is_cm: false,
            is_unmixed: false,
            outcome: Outcome::Refuted(Witness::OddOrUnbalanced {
                part_a: g.part_a(),
                part_b: g.part_b(),
            }),
            peel_failure: Some(failure),
        },
        Err(failure) => {
            // the decision is already made; look for a typed witness
            let (is_unmixed, witness) = match is_unmixed(g) {
                Unmixedness::Mixed(w) => (false, w),
                Unmixedness::Unmixed(m) => {
                    let w = condition2(g, &m).unwrap_or_else(|| match failure {
                        PeelFailure::Stuck {
                            remaining_vertices,
                            min_degree,
                            ..
                        } => Witness::PeelStuck {
                            remaining_vertices,
                            min_degree,
                        },
                        PeelFailure::OddVertexCount { .. } => unreachable!(),
                    });
                    (true, w)
                }
            };
            Verdict {
                is_cm: false,
                is_unmixed,
                outcome: Outcome::Refuted(witness),
                peel_failure: Some(failure),
            }
        }
    }
}

/// Checks both conditions against a caller-supplied perfect matching instead
/// of the peeled one.
pub fn is_cohen_macaulay_with(g: &BipartiteGraph, m: &OrderedMatching) -> Result<Verdict, MatchingError> {
    m.ensure_perfect_in(g)?;
    Ok(decide_with(g, m.clone()))
}

fn decide_with(g: &BipartiteGraph, m: OrderedMatching) -> Verdict {
    let refuted = |is_unmixed, w| Verdict {
        is_cm: false,
        is_unmixed,
        outcome: Outcome::Refuted(w),
        peel_failure: None,
    };
    if let Some(w) = condition1(g, &m) {
        return refuted(false, w);
    }
    if let Some(w) = condition2(g, &m) {
        return refuted(true, w);
    }
    // condition 1 makes the arc relation transitive and condition 2 rules
    // out 2-cycles, so the arcs form a strict partial order
    let hh_order = find_hh_order(g, &m).expect("both conditions hold, so the pair digraph is a partial order");
    Verdict {
        is_cm: true,
        is_unmixed: true,
        outcome: Outcome::Certified(Certificate { matching: m, hh_order }),
        peel_failure: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Diagonal edges and transitivity only.
    Villarreal,
    /// Additionally every cross edge `x_p ~ y_q` has `p <= q`.
    HerzogHibi,
}

/// A failed ordering check. Positions are 0-based positions in the order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("order is not a permutation of the pair indices")]
    NotAPermutation,
    #[error("x and y at position {0} are not adjacent")]
    Unmatched(usize),
    #[error("cross edge from position {from} back to position {to}")]
    Backward { from: usize, to: usize },
    #[error("positions {p} < {q} < {r}: x_p ~ y_q and x_q ~ y_r but x_p is not adjacent to y_r")]
    Intransitive { p: usize, q: usize, r: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HhOrderError {
    /// Pair indices `c_0 -> c_1 -> ... -> c_0`, each arc meaning
    /// `x_{c_k} ~ y_{c_{k+1}}`.
    #[error("pair digraph has a cycle through {0:?}")]
    Cycle(Vec<usize>),
    #[error(transparent)]
    Violation(#[from] OrderViolation),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// Orders the pairs so that every cross edge `x_i ~ y_j` goes forward.
///
/// Topologically sorts the digraph with an arc `i -> j` for each cross edge,
/// breaking ties by lowest pair index, and verifies the result against all
/// three ordering conditions before returning it.
pub fn find_hh_order(g: &BipartiteGraph, m: &OrderedMatching) -> Result<Vec<usize>, HhOrderError> {
    m.ensure_perfect_in(g)?;
    let n = m.len();
    let pair_of_b = m.pair_of_b();
    let successors = |i: usize| {
        g.neighbors_of_a(m.pairs[i].0)
            .iter()
            .map(|&b| pair_of_b[b])
            .filter(move |&j| j != i)
    };
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in successors(i) {
            indegree[j] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for j in successors(i) {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(Reverse(j));
            }
        }
    }
    if order.len() < n {
        return Err(HhOrderError::Cycle(extract_cycle(g, m, &indegree)));
    }
    check_order(g, m, &order, OrderKind::HerzogHibi)?;
    Ok(order)
}

/// Walks predecessors among the pairs Kahn's algorithm could not place.
fn extract_cycle(g: &BipartiteGraph, m: &OrderedMatching, indegree: &[usize]) -> Vec<usize> {
    let n = m.len();
    let stuck = |i: usize| indegree[i] > 0;
    // predecessor of j: some stuck i with x_i ~ y_j
    let predecessor = |j: usize| {
        g.neighbors_of_b(m.pairs[j].1)
            .iter()
            .filter_map(|&a| m.pairs.iter().position(|&(x, _)| x == a))
            .find(|&i| i != j && stuck(i))
            .expect("stuck pair has a stuck predecessor")
    };
    let start = (0..n).find(|&i| stuck(i)).expect("some pair is stuck");
    let mut seen = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut cur = start;
    while seen[cur] == usize::MAX {
        seen[cur] = walk.len();
        walk.push(cur);
        cur = predecessor(cur);
    }
    let mut cycle = walk[seen[cur]..].to_vec();
    cycle.reverse();
    cycle
}

/// Checks `order` against the Villarreal or Herzog–Hibi conditions.
pub fn check_order(
    g: &BipartiteGraph,
    m: &OrderedMatching,
    order: &[usize],
    kind: OrderKind,
) -> Result<(), OrderViolation> {
    let n = m.len();
    let mut position = vec![usize::MAX; n];
    if order.len() != n {
        return Err(OrderViolation::NotAPermutation);
    }
    for (p, &i) in order.iter().enumerate() {
        if i >= n || position[i] != usize::MAX {
            return Err(OrderViolation::NotAPermutation);
        }
        position[i] = p;
    }
    let pair_of_b = m.pair_of_b();
    // row[p] holds the positions q with x at p adjacent to y at q
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for (p, &i) in order.iter().enumerate() {
        let (x, y) = m.pairs[i];
        if !g.has_edge(x, y) {
            return Err(OrderViolation::Unmatched(p));
        }
        for &b in g.neighbors_of_a(x) {
            let q = position[pair_of_b[b]];
            if kind == OrderKind::HerzogHibi && q < p {
                return Err(OrderViolation::Backward { from: p, to: q });
            }
            rows[p].insert(q);
        }
    }
    let mut later = FixedBitSet::with_capacity(n);
    for q in 0..n {
        later.clear();
        later.union_with(&rows[q]);
        later.remove_range(..q + 1);
        if later.is_clear() {
            continue;
        }
        for p in 0..q {
            if rows[p].contains(q) && !later.is_subset(&rows[p]) {
                let r = later.difference(&rows[p]).next().expect("non-subset has a difference");
                return Err(OrderViolation::Intransitive { p, q, r });
            }
        }
    }
    Ok(())
}

pub fn verify_villarreal_order(g: &BipartiteGraph, m: &OrderedMatching, order: &[usize]) -> bool {
    check_order(g, m, order, OrderKind::Villarreal).is_ok()
}

pub fn verify_hh_order(g: &BipartiteGraph, m: &OrderedMatching, order: &[usize]) -> bool {
    check_order(g, m, order, OrderKind::HerzogHibi).is_ok()
}
