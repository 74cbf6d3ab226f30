//! Exhaustive cross-check of the checker against the purity and Reisner
//! oracles over every subgraph of a small grid.

use rayon::prelude::*;

use crate::cm::{is_cohen_macaulay, is_unmixed};
use crate::generators::{all_bipartite_graphs, GeneratorError};
use crate::oracles::{independence_complex, is_pure, reisner_is_cm, OracleError};
use crate::graph::BipartiteGraph;

/// Checker and oracle verdicts for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossCheck {
    pub is_cm: bool,
    pub is_unmixed: bool,
    pub reisner_cm: bool,
    pub pure: bool,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.is_cm == self.reisner_cm && self.is_unmixed == self.pure
    }
}

pub fn cross_check(g: &BipartiteGraph) -> Result<CrossCheck, OracleError> {
    let complex = independence_complex(g)?;
    Ok(CrossCheck {
        is_cm: is_cohen_macaulay(g).is_cm,
        is_unmixed: is_unmixed(g).is_unmixed(),
        reisner_cm: reisner_is_cm(&complex)?.is_none(),
        pure: is_pure(&complex).is_pure(),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub cm: usize,
    pub unmixed_not_cm: usize,
    /// Grid ranks where the checker and an oracle disagree.
    pub disagreements: Vec<u32>,
    /// Grid ranks where an oracle gave up.
    pub oracle_failures: Vec<u32>,
}

impl SweepSummary {
    fn record(mut self, rank: u32, outcome: Result<CrossCheck, OracleError>) -> Self {
        self.total += 1;
        match outcome {
            Ok(c) => {
                self.cm += c.is_cm as usize;
                self.unmixed_not_cm += (c.is_unmixed && !c.is_cm) as usize;
                if !c.agrees() {
                    self.disagreements.push(rank);
                }
            }
            Err(_) => self.oracle_failures.push(rank),
        }
        self
    }

    fn merge(mut self, other: SweepSummary) -> Self {
        self.total += other.total;
        self.cm += other.cm;
        self.unmixed_not_cm += other.unmixed_not_cm;
        self.disagreements.extend(other.disagreements);
        self.oracle_failures.extend(other.oracle_failures);
        self.disagreements.sort_unstable();
        self.oracle_failures.sort_unstable();
        self
    }
}

/// Cross-checks every graph of the `part_a x part_b` grid on the current
/// rayon pool.
pub fn sweep(part_a: usize, part_b: usize) -> Result<SweepSummary, GeneratorError> {
    let graphs: Vec<(u32, BipartiteGraph)> = all_bipartite_graphs(part_a, part_b)?.collect();
    Ok(graphs
        .par_iter()
        .fold(SweepSummary::default, |acc, (rank, g)| acc.record(*rank, cross_check(g)))
        .reduce(SweepSummary::default, SweepSummary::merge))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweeps() {
        let s = sweep(1, 1).unwrap();
        assert_eq!((s.total, s.cm), (2, 2));
        let s = sweep(2, 2).unwrap();
        assert_eq!(s.total, 16);
        assert!(s.disagreements.is_empty() && s.oracle_failures.is_empty());
    }
}
