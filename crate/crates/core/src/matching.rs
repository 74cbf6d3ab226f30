//! Maximum matchings, Hall violators and perfect-matching enumeration.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Side, VertexRef};

/// Default cap for [`enumerate_perfect_matchings`].
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// A set of vertex-disjoint edges, stored as 0-based `(a, b)` pairs sorted by
/// `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("parts differ in size ({part_a} vs {part_b})")]
    Unbalanced { part_a: usize, part_b: usize },
    #[error("(a{}, b{}) is not an edge", .0 .0 + 1, .0 .1 + 1)]
    NotAnEdge((usize, usize)),
    #[error("vertex {0} is matched twice")]
    VertexReused(VertexRef),
    #[error("matching does not cover {0}")]
    NotPerfect(VertexRef),
}

impl Matching {
    /// Validates `pairs` against `g`.
    pub fn new(g: &BipartiteGraph, mut pairs: Vec<(usize, usize)>) -> Result<Self, MatchingError> {
        let mut used_a = vec![false; g.part_a()];
        let mut used_b = vec![false; g.part_b()];
        for &(a, b) in &pairs {
            if !g.has_edge(a, b) {
                return Err(MatchingError::NotAnEdge((a, b)));
            }
            if std::mem::replace(&mut used_a[a], true) {
                return Err(MatchingError::VertexReused(VertexRef::a(a)));
            }
            if std::mem::replace(&mut used_b[b], true) {
                return Err(MatchingError::VertexReused(VertexRef::b(b)));
            }
        }
        pairs.sort_unstable();
        Ok(Matching { pairs })
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        Matching { pairs }
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

    /// Covers every vertex of both parts.
    pub fn is_perfect_in(&self, g: &BipartiteGraph) -> bool {
        g.part_a() == g.part_b() && self.pairs.len() == g.part_a()
    }

    /// First uncovered vertex, A side first.
    pub fn first_uncovered(&self, g: &BipartiteGraph) -> Option<VertexRef> {
        let mut cov_a = vec![false; g.part_a()];
        let mut cov_b = vec![false; g.part_b()];
        for &(a, b) in &self.pairs {
            cov_a[a] = true;
            cov_b[b] = true;
        }
        cov_a
            .iter()
            .position(|c| !c)
            .map(VertexRef::a)
            .or_else(|| cov_b.iter().position(|c| !c).map(VertexRef::b))
    }
}

/// A set of A vertices whose joint neighborhood is smaller than the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolator {
    /// Ascending A indices.
    pub subset: Vec<usize>,
    /// Ascending B indices; the union of the neighborhoods of `subset`.
    pub neighborhood: Vec<usize>,
}

impl HallViolator {
    /// Re-checks the violator against `g`.
    pub fn validate(&self, g: &BipartiteGraph) -> bool {
        if self.subset.iter().any(|&a| a >= g.part_a()) {
            return false;
        }
        let mut nbhd: Vec<usize> = self
            .subset
            .iter()
            .flat_map(|&a| g.neighbors_of_a(a).iter().copied())
            .collect();
        nbhd.sort_unstable();
        nbhd.dedup();
        nbhd == self.neighborhood && self.neighborhood.len() < self.subset.len()
    }
}

/// Mate arrays maintained by the augmenting-path search.
struct Mates {
    of_a: Vec<Option<usize>>,
    of_b: Vec<Option<usize>>,
}

/// Maximum-cardinality matching by Hopcroft–Karp phases.
///
/// A vertices are scanned in ascending order and each scan tries neighbors in
/// ascending order, so the result is a fixed function of the graph.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let mates = hopcroft_karp(g);
    let pairs = mates
        .of_a
        .iter()
        .enumerate()
        .filter_map(|(a, m)| m.map(|b| (a, b)))
        .collect();
    Matching { pairs }
}

fn hopcroft_karp(g: &BipartiteGraph) -> Mates {
    const INF: usize = usize::MAX;
    let n_a = g.part_a();
    let mut mates = Mates {
        of_a: vec![None; n_a],
        of_b: vec![None; g.part_b()],
    };
    let mut dist = vec![INF; n_a];
    let mut cursor = vec![0usize; n_a];

    loop {
        // BFS layering from free A vertices
        let mut queue = VecDeque::new();
        for a in 0..n_a {
            if mates.of_a[a].is_none() {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = INF;
            }
        }
        let mut reachable_free_b = false;
        while let Some(a) = queue.pop_front() {
            for &b in g.neighbors_of_a(a) {
                match mates.of_b[b] {
                    None => reachable_free_b = true,
                    Some(next) if dist[next] == INF => {
                        dist[next] = dist[a] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free_b {
            break;
        }

        cursor.iter_mut().for_each(|c| *c = 0);
        for a in 0..n_a {
            if mates.of_a[a].is_none() {
                augment(g, a, &mut mates, &mut dist, &mut cursor);
            }
        }
    }
    mates
}

/// Iterative layered DFS; avoids recursion depth limits on long paths.
fn augment(
    g: &BipartiteGraph,
    root: usize,
    mates: &mut Mates,
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    const INF: usize = usize::MAX;
    // stack of (a vertex, b vertex used to reach the next level)
    let mut stack: Vec<usize> = vec![root];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&a) = stack.last() {
        let nbrs = g.neighbors_of_a(a);
        let mut advanced = false;
        while cursor[a] < nbrs.len() {
            let b = nbrs[cursor[a]];
            cursor[a] += 1;
            match mates.of_b[b] {
                None => {
                    // flip the path
                    via.push(b);
                    for (&a, &b) in stack.iter().zip(via.iter()) {
                        mates.of_a[a] = Some(b);
                        mates.of_b[b] = Some(a);
                    }
                    return true;
                }
                Some(next) if dist[next] != INF && dist[next] == dist[a] + 1 => {
                    via.push(b);
                    stack.push(next);
                    advanced = true;
                    break;
                }
                Some(_) => {}
            }
        }
        if !advanced {
            dist[a] = INF;
            stack.pop();
            via.pop();
        }
    }
    false
}

/// `None` iff `g` has a perfect matching; otherwise a subset `S` of A with
/// `|N(S)| < |S|`.
///
/// The violator is the set of A vertices reachable by alternating paths from
/// the lowest unmatched A vertex of [`max_matching`].
pub fn hall_violator(g: &BipartiteGraph) -> Result<Option<HallViolator>, MatchingError> {
    if g.part_a() != g.part_b() {
        return Err(MatchingError::Unbalanced {
            part_a: g.part_a(),
            part_b: g.part_b(),
        });
    }
    let mates = hopcroft_karp(g);
    let Some(root) = mates.of_a.iter().position(Option::is_none) else {
        return Ok(None);
    };
    let mut seen_a = vec![false; g.part_a()];
    let mut seen_b = vec![false; g.part_b()];
    seen_a[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors_of_a(a) {
            if seen_b[b] {
                continue;
            }
            seen_b[b] = true;
            let next = mates.of_b[b].expect("maximum matching admits no augmenting path");
            if !seen_a[next] {
                seen_a[next] = true;
                queue.push_back(next);
            }
        }
    }
    let collect = |seen: &[bool]| seen.iter().enumerate().filter(|(_, s)| **s).map(|(i, _)| i).collect();
    Ok(Some(HallViolator {
        subset: collect(&seen_a),
        neighborhood: collect(&seen_b),
    }))
}

/// Result of [`enumerate_perfect_matchings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub matchings: Vec<Matching>,
    /// Set iff the graph has more than `cap` perfect matchings.
    pub truncated: bool,
}

/// Lists perfect matchings, at most `cap` of them.
///
/// Backtracks on the uncovered vertex with the fewest uncovered neighbors
/// (ties: A side first, then lowest index), trying partners in ascending order.
pub fn enumerate_perfect_matchings(g: &BipartiteGraph, cap: usize) -> Enumeration {
    assert!(cap >= 1, "enumeration cap must be at least 1");
    let mut out = Enumeration {
        matchings: Vec::new(),
        truncated: false,
    };
    if g.part_a() != g.part_b() {
        return out;
    }
    let mut search = PmSearch {
        g,
        cap,
        covered_a: vec![false; g.part_a()],
        covered_b: vec![false; g.part_b()],
        current: Vec::with_capacity(g.part_a()),
        out: &mut out,
    };
    search.run();
    out
}

struct PmSearch<'a> {
    g: &'a BipartiteGraph,
    cap: usize,
    covered_a: Vec<bool>,
    covered_b: Vec<bool>,
    current: Vec<(usize, usize)>,
    out: &'a mut Enumeration,
}

impl PmSearch<'_> {
    /// Returns false once the search should stop.
    fn run(&mut self) -> bool {
        let Some(v) = self.pick() else {
            if self.out.matchings.len() == self.cap {
                self.out.truncated = true;
                return false;
            }
            let mut pairs = self.current.clone();
            pairs.sort_unstable();
            self.out.matchings.push(Matching { pairs });
            return true;
        };
        let partners: Vec<usize> = match v.side {
            Side::A => self.g.neighbors_of_a(v.index).iter().copied().filter(|&b| !self.covered_b[b]).collect(),
            Side::B => self.g.neighbors_of_b(v.index).iter().copied().filter(|&a| !self.covered_a[a]).collect(),
        };
        for u in partners {
            let (a, b) = match v.side {
                Side::A => (v.index, u),
                Side::B => (u, v.index),
            };
            self.covered_a[a] = true;
            self.covered_b[b] = true;
            self.current.push((a, b));
            let go_on = self.run();
            self.current.pop();
            self.covered_a[a] = false;
            self.covered_b[b] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn pick(&self) -> Option<VertexRef> {
        let mut best: Option<(usize, VertexRef)> = None;
        let mut consider = |deg: usize, v: VertexRef| {
            if best.is_none_or(|(d, _)| deg < d) {
                best = Some((deg, v));
            }
        };
        for a in (0..self.g.part_a()).filter(|&a| !self.covered_a[a]) {
            let deg = self.g.neighbors_of_a(a).iter().filter(|&&b| !self.covered_b[b]).count();
            consider(deg, VertexRef::a(a));
        }
        for b in (0..self.g.part_b()).filter(|&b| !self.covered_b[b]) {
            let deg = self.g.neighbors_of_b(b).iter().filter(|&&a| !self.covered_a[a]).count();
            consider(deg, VertexRef::b(b));
        }
        best.map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    Multiple,
    NoPerfectMatching,
}

pub fn has_unique_perfect_matching(g: &BipartiteGraph) -> Uniqueness {
    match enumerate_perfect_matchings(g, 2).matchings.len() {
        0 => Uniqueness::NoPerfectMatching,
        1 => Uniqueness::Unique,
        _ => Uniqueness::Multiple,
    }
}
