//! Brute-force ground truth, independent of the matching criterion.

mod complex;
mod homology;
mod ideal;
mod shelling;

pub use complex::{
    independence_complex, independence_complex_capped, is_completely_balanced, is_pure, Purity,
    SimplicialComplex, DEFAULT_FACE_CAP,
};
pub use homology::{
    exact_rank, faces_by_size, reduced_homology, reduced_homology_capped, reisner_is_cm, reisner_is_cm_capped,
    BettiVector, ReisnerFailure,
};
pub use ideal::{Annihilator, IdealError, QuadraticMonomialIdeal};
pub use shelling::{is_shellable_bruteforce, Shellability, DEFAULT_SHELLING_FACET_CAP};

use thiserror::Error;

use crate::cm::OrderedMatching;
use crate::graph::BipartiteGraph;
use crate::matching::max_matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle unavailable: more than {limit} {what}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("homology self-check failed: face Euler characteristic {faces}, Betti Euler characteristic {betti}")]
    EulerMismatch { faces: i64, betti: i64 },
}

/// Everything the oracles say about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub complex: SimplicialComplex,
    pub purity: Purity,
    /// `None` when the graph has no perfect matching.
    pub balanced: Option<bool>,
    pub betti: Option<BettiVector>,
    pub reisner: Option<ReisnerFailure>,
    pub shellable: Option<Shellability>,
}

impl OracleReport {
    pub fn is_pure(&self) -> bool {
        self.purity.is_pure()
    }

    pub fn is_cm(&self) -> bool {
        self.reisner.is_none()
    }
}

/// Which optional parts of an [`OracleReport`] to compute.
#[derive(Debug, Clone, Copy, Default)]
pub struct OracleOptions {
    pub betti: bool,
    pub shellable: bool,
    pub face_cap: Option<usize>,
    pub shelling_cap: Option<usize>,
}

pub fn oracle_report(g: &BipartiteGraph, opts: OracleOptions) -> Result<OracleReport, OracleError> {
    let cap = opts.face_cap.unwrap_or(DEFAULT_FACE_CAP);
    let c = independence_complex_capped(g, cap)?;
    let balanced = OrderedMatching::from_matching(g, &max_matching(g))
        .ok()
        .map(|m| is_completely_balanced(&c, &m));
    let betti = if opts.betti {
        Some(reduced_homology_capped(&c, cap)?)
    } else {
        None
    };
    let reisner = reisner_is_cm_capped(&c, cap)?;
    let shellable = opts
        .shellable
        .then(|| is_shellable_bruteforce(&c, opts.shelling_cap.unwrap_or(DEFAULT_SHELLING_FACET_CAP)));
    Ok(OracleReport {
        purity: is_pure(&c),
        balanced,
        betti,
        reisner,
        shellable,
        complex: c,
    })
}
