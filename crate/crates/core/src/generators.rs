//! Instance generation: exhaustive small graphs, seeded random graphs,
//! poset-derived Cohen-Macaulay graphs and single-edge perturbations.
//!
//! Every random generator draws from ChaCha8 seeded with `seed_from_u64`, so
//! outputs depend only on the parameters and the seed.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::BipartiteGraph;

/// Identifier of the pseudo-random stream, recorded in generated files.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Largest grid (`part_a * part_b`) that [`all_bipartite_graphs`] enumerates.
pub const MAX_GRID_EDGES: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("grid {part_a}x{part_b} has more than {MAX_GRID_EDGES} positions")]
    GridTooLarge { part_a: usize, part_b: usize },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("poset element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("relation is not a strict partial order: {0} precedes itself")]
    Cyclic(usize),
    #[error("no position to {0}")]
    NoApplicablePosition(PerturbOp),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::InvalidProbability(p))
    }
}

/// The raw (unnormalized) subgraph of the `part_a x part_b` grid whose edge
/// set is encoded by `rank`: bit `k` stands for the edge
/// `(k / part_b, k % part_b)`.
pub fn grid_graph(part_a: usize, part_b: usize, rank: u32) -> BipartiteGraph {
    assert!(part_a * part_b <= 32, "rank does not fit the grid");
    let edges = (0..part_a * part_b)
        .filter(|&k| rank >> k & 1 == 1)
        .map(|k| (k / part_b, k % part_b));
    BipartiteGraph::new(part_a, part_b, edges).expect("grid edges are in range")
}

/// Inverse of [`grid_graph`] for graphs on the full grid.
pub fn grid_rank(g: &BipartiteGraph) -> u32 {
    g.edges()
        .iter()
        .fold(0, |acc, &(a, b)| acc | 1 << (a * g.part_b() + b))
}

/// Every edge subset of the grid in ascending rank order, paired with its
/// rank and normalized.
pub fn all_bipartite_graphs(
    part_a: usize,
    part_b: usize,
) -> Result<impl Iterator<Item = (u32, BipartiteGraph)> + Clone, GeneratorError> {
    if part_a * part_b > MAX_GRID_EDGES {
        return Err(GeneratorError::GridTooLarge { part_a, part_b });
    }
    let count = 1u32 << (part_a * part_b);
    Ok((0..count).map(move |rank| (rank, grid_graph(part_a, part_b, rank).normalize().graph)))
}

/// Each grid edge independently with probability `p`, in row-major order;
/// normalized.
pub fn random_bipartite(part_a: usize, part_b: usize, p: f64, seed: u64) -> Result<BipartiteGraph, GeneratorError> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for a in 0..part_a {
        for b in 0..part_b {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Ok(BipartiteGraph::new(part_a, part_b, edges)
        .expect("grid edges are in range")
        .normalize()
        .graph)
}

/// A strict partial order on `0..element_count`, stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetSpec {
    element_count: usize,
    relation: BTreeSet<(usize, usize)>,
}

impl PosetSpec {
    /// Builds the transitive closure of `relations`; `(i, j)` means `i < j`.
    pub fn new<I>(element_count: usize, relations: I) -> Result<Self, GeneratorError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = element_count;
        let mut less = vec![vec![false; n]; n];
        for (i, j) in relations {
            for v in [i, j] {
                if v >= n {
                    return Err(GeneratorError::ElementOutOfRange(v));
                }
            }
            less[i][j] = true;
        }
        // Floyd–Warshall closure
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            return Err(GeneratorError::Cyclic(i));
        }
        let relation = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| less[i][j])
            .collect();
        Ok(PosetSpec {
            element_count: n,
            relation,
        })
    }

    pub fn antichain(n: usize) -> Self {
        PosetSpec {
            element_count: n,
            relation: BTreeSet::new(),
        }
    }

    pub fn chain(n: usize) -> Self {
        PosetSpec {
            element_count: n,
            relation: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }

    pub fn element_count(&self) -> usize {
        self.element_count
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.relation
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.relation.contains(&(i, j))
    }
}

/// `x_i ~ y_j` iff `i = j` or `i < j`; A index `i` is `x_i`, B index `j` is
/// `y_j`.
pub fn poset_graph(ps: &PosetSpec) -> BipartiteGraph {
    let n = ps.element_count;
    let edges = (0..n).map(|i| (i, i)).chain(ps.relation.iter().copied());
    BipartiteGraph::new(n, n, edges).expect("poset relation is irreflexive and in range")
}

/// Relates each pair `i < j` (natural order) with probability `p`, then
/// closes transitively.
pub fn random_poset(n: usize, p: f64, seed: u64) -> Result<PosetSpec, GeneratorError> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                relations.push((i, j));
            }
        }
    }
    PosetSpec::new(n, relations)
}

/// Renumbers each side by an independent seeded permutation.
pub fn shuffle_labels(g: &BipartiteGraph, seed: u64) -> BipartiteGraph {
    let mut rng = rng(seed);
    let mut perm_a: Vec<usize> = (0..g.part_a()).collect();
    let mut perm_b: Vec<usize> = (0..g.part_b()).collect();
    perm_a.shuffle(&mut rng);
    perm_b.shuffle(&mut rng);
    let edges = g.edges().iter().map(|&(a, b)| (perm_a[a], perm_b[b]));
    BipartiteGraph::new(g.part_a(), g.part_b(), edges).expect("permuted edges are distinct and in range")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerturbOp {
    AddEdge,
    RemoveEdge,
}

impl std::fmt::Display for PerturbOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PerturbOp::AddEdge => "add an edge",
            PerturbOp::RemoveEdge => "remove an edge",
        })
    }
}

/// Adds or removes one uniformly chosen grid edge, then normalizes.
pub fn perturb(g: &BipartiteGraph, op: PerturbOp, seed: u64) -> Result<BipartiteGraph, GeneratorError> {
    let candidates: Vec<(usize, usize)> = match op {
        PerturbOp::AddEdge => (0..g.part_a())
            .flat_map(|a| (0..g.part_b()).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect(),
        PerturbOp::RemoveEdge => g.edges().to_vec(),
    };
    if candidates.is_empty() {
        return Err(GeneratorError::NoApplicablePosition(op));
    }
    let pick = candidates[rng(seed).random_range(0..candidates.len())];
    let edges: Vec<(usize, usize)> = match op {
        PerturbOp::AddEdge => g.edges().iter().copied().chain([pick]).collect(),
        PerturbOp::RemoveEdge => g.edges().iter().copied().filter(|&e| e != pick).collect(),
    };
    Ok(BipartiteGraph::new(g.part_a(), g.part_b(), edges)
        .expect("perturbed edges are distinct and in range")
        .normalize()
        .graph)
}
