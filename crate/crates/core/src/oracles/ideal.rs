//! Zero-divisor test for sums of two variables modulo a square-free
//! quadratic monomial ideal.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("variable {0} is outside 1..={1}")]
    VariableOutOfRange(usize, usize),
    #[error("generator x{0}^2 is not square-free")]
    Square(usize),
    #[error("the two variables must differ")]
    SameVariable,
}

/// An ideal generated by square-free quadratic monomials `x_k x_l`, stored as
/// 1-based pairs `k < l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticMonomialIdeal {
    variable_count: usize,
    generators: BTreeSet<(usize, usize)>,
    // dense membership table, row-major over 0-based variables
    table: Vec<bool>,
}

impl QuadraticMonomialIdeal {
    pub fn new<I>(variable_count: usize, generators: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        let mut table = vec![false; variable_count * variable_count];
        for (k, l) in generators {
            for v in [k, l] {
                if v == 0 || v > variable_count {
                    return Err(IdealError::VariableOutOfRange(v, variable_count));
                }
            }
            if k == l {
                return Err(IdealError::Square(k));
            }
            set.insert((k.min(l), k.max(l)));
            table[(k - 1) * variable_count + (l - 1)] = true;
            table[(l - 1) * variable_count + (k - 1)] = true;
        }
        Ok(QuadraticMonomialIdeal {
            variable_count,
            generators: set,
            table,
        })
    }

    /// The edge ideal: A vertex `a` is variable `a + 1`, B vertex `b` is
    /// variable `part_a + b + 1`.
    pub fn edge_ideal(g: &BipartiteGraph) -> Self {
        let na = g.part_a();
        Self::new(g.vertex_count(), g.edges().iter().map(|&(a, b)| (a + 1, na + b + 1)))
            .expect("graph edges give square-free generators")
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn generators(&self) -> &BTreeSet<(usize, usize)> {
        &self.generators
    }

    /// Whether `x_k x_l` is a generator (1-based, `k != l`).
    pub fn contains(&self, k: usize, l: usize) -> bool {
        k != l
            && (1..=self.variable_count).contains(&k)
            && (1..=self.variable_count).contains(&l)
            && self.table[(k - 1) * self.variable_count + (l - 1)]
    }

    /// Whether `x_k x_l x_i` lies in the ideal, given `x_k x_l` does not and
    /// `k, l != i`.
    fn kills(&self, k: usize, l: usize, i: usize) -> bool {
        self.contains(k, i) || self.contains(l, i)
    }

    /// A monomial annihilating `x_i + x_j`, if there is one.
    pub fn zero_divisor_witness(&self, i: usize, j: usize) -> Result<Option<Annihilator>, IdealError> {
        for v in [i, j] {
            if v == 0 || v > self.variable_count {
                return Err(IdealError::VariableOutOfRange(v, self.variable_count));
            }
        }
        if i == j {
            return Err(IdealError::SameVariable);
        }
        let others = || (1..=self.variable_count).filter(|&k| k != i && k != j);
        if let Some(k) = others().find(|&k| self.contains(k, i) && self.contains(k, j)) {
            return Ok(Some(Annihilator::Variable(k)));
        }
        for k in others() {
            for l in others().filter(|&l| l > k) {
                if !self.contains(k, l) && self.kills(k, l, i) && self.kills(k, l, j) {
                    return Ok(Some(Annihilator::Product(k, l)));
                }
            }
        }
        Ok(None)
    }

    /// Whether the image of `x_i + x_j` is a zero-divisor in `S / I`.
    pub fn is_zero_divisor_sum(&self, i: usize, j: usize) -> Result<bool, IdealError> {
        self.zero_divisor_witness(i, j).map(|w| w.is_some())
    }
}

/// A monomial of degree one or two, not in the ideal, whose product with
/// `x_i + x_j` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annihilator {
    Variable(usize),
    /// `x_k x_l` with `k < l`.
    Product(usize, usize),
}
