//! Serializable forms of certificates and witnesses. All vertex labels and
//! pair indices are 1-based.

use serde::{Deserialize, Serialize};

use crate::cm::{Certificate, OrderedMatching, Verdict, Witness};
use crate::graph::BipartiteGraph;
use crate::matching::{HallViolator, MatchingError};

/// A positive verdict. `matching` is sorted by A vertex; `hh_order` lists
/// positions in `matching`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub matching: Vec<[usize; 2]>,
    pub hh_order: Vec<usize>,
    pub conditions: ConditionsRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsRecord {
    pub c1: String,
    pub c2: String,
}

impl From<&Certificate> for CertificateRecord {
    fn from(c: &Certificate) -> Self {
        let pairs = c.matching.pairs();
        let mut sorted: Vec<usize> = (0..pairs.len()).collect();
        sorted.sort_by_key(|&i| pairs[i]);
        let mut position = vec![0; pairs.len()];
        for (p, &i) in sorted.iter().enumerate() {
            position[i] = p;
        }
        CertificateRecord {
            matching: sorted.iter().map(|&i| [pairs[i].0 + 1, pairs[i].1 + 1]).collect(),
            hh_order: c.hh_order.iter().map(|&i| position[i] + 1).collect(),
            conditions: ConditionsRecord {
                c1: "ok".into(),
                c2: "ok".into(),
            },
        }
    }
}

impl CertificateRecord {
    /// Rebuilds the certificate against `g`; the order itself is not checked.
    pub fn to_certificate(&self, g: &BipartiteGraph) -> Result<Certificate, MatchingError> {
        let pairs = self
            .matching
            .iter()
            .map(|&[a, b]| (a.wrapping_sub(1), b.wrapping_sub(1)))
            .collect();
        Ok(Certificate {
            matching: OrderedMatching::supplied(g, pairs)?,
            hh_order: self.hh_order.iter().map(|&p| p.wrapping_sub(1)).collect(),
        })
    }
}

/// A negative verdict, serialized as `{"kind": ..., "data": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum WitnessRecord {
    OddOrUnbalanced {
        part_a: usize,
        part_b: usize,
    },
    NoPerfectMatching {
        subset: Vec<usize>,
        neighborhood: Vec<usize>,
    },
    Condition1 {
        pair_index: usize,
        pair: [usize; 2],
        a: usize,
        b: usize,
    },
    Condition2 {
        i: usize,
        j: usize,
        pair_i: [usize; 2],
        pair_j: [usize; 2],
    },
    PeelStuck {
        remaining_vertices: usize,
        min_degree: usize,
    },
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&x| x + 1).collect()
}

fn zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&x| x.wrapping_sub(1)).collect()
}

fn pair_up((x, y): (usize, usize)) -> [usize; 2] {
    [x + 1, y + 1]
}

fn pair_down([x, y]: [usize; 2]) -> (usize, usize) {
    (x.wrapping_sub(1), y.wrapping_sub(1))
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        match *w {
            Witness::OddOrUnbalanced { part_a, part_b } => WitnessRecord::OddOrUnbalanced { part_a, part_b },
            Witness::NoPerfectMatching(ref h) => WitnessRecord::NoPerfectMatching {
                subset: one_based(&h.subset),
                neighborhood: one_based(&h.neighborhood),
            },
            Witness::Condition1 { pair_index, pair, a, b } => WitnessRecord::Condition1 {
                pair_index: pair_index + 1,
                pair: pair_up(pair),
                a: a + 1,
                b: b + 1,
            },
            Witness::Condition2 { i, j, pair_i, pair_j } => WitnessRecord::Condition2 {
                i: i + 1,
                j: j + 1,
                pair_i: pair_up(pair_i),
                pair_j: pair_up(pair_j),
            },
            Witness::PeelStuck {
                remaining_vertices,
                min_degree,
            } => WitnessRecord::PeelStuck {
                remaining_vertices,
                min_degree,
            },
        }
    }
}

impl From<&WitnessRecord> for Witness {
    fn from(r: &WitnessRecord) -> Self {
        match *r {
            WitnessRecord::OddOrUnbalanced { part_a, part_b } => Witness::OddOrUnbalanced { part_a, part_b },
            WitnessRecord::NoPerfectMatching {
                ref subset,
                ref neighborhood,
            } => Witness::NoPerfectMatching(HallViolator {
                subset: zero_based(subset),
                neighborhood: zero_based(neighborhood),
            }),
            WitnessRecord::Condition1 { pair_index, pair, a, b } => Witness::Condition1 {
                pair_index: pair_index.wrapping_sub(1),
                pair: pair_down(pair),
                a: a.wrapping_sub(1),
                b: b.wrapping_sub(1),
            },
            WitnessRecord::Condition2 { i, j, pair_i, pair_j } => Witness::Condition2 {
                i: i.wrapping_sub(1),
                j: j.wrapping_sub(1),
                pair_i: pair_down(pair_i),
                pair_j: pair_down(pair_j),
            },
            WitnessRecord::PeelStuck {
                remaining_vertices,
                min_degree,
            } => Witness::PeelStuck {
                remaining_vertices,
                min_degree,
            },
        }
    }
}

/// The decision part of a verdict report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub is_cm: bool,
    pub is_unmixed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessRecord>,
    /// Whether a failed peel decided the verdict.
    pub peel_failed: bool,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            is_cm: v.is_cm,
            is_unmixed: v.is_unmixed,
            certificate: v.certificate().map(CertificateRecord::from),
            witness: v.witness().map(WitnessRecord::from),
            peel_failed: v.peel_failure.is_some(),
        }
    }
}

impl VerdictRecord {
    /// Re-checks the carried certificate or witness against `g`.
    pub fn validate(&self, g: &BipartiteGraph) -> bool {
        match (&self.certificate, &self.witness) {
            (Some(c), None) => {
                self.is_cm
                    && self.is_unmixed
                    && c.to_certificate(g)
                        .is_ok_and(|c| crate::cm::verify_hh_order(g, &c.matching, &c.hh_order))
            }
            (None, Some(w)) => !self.is_cm && Witness::from(w).validate(g),
            _ => false,
        }
    }
}
