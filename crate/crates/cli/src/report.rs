//! Documents printed by the subcommands, in JSON and text form.

use std::fmt::Write as _;

use serde::Serialize;

use cmbip::oracles::{OracleReport, Purity, Shellability};
use cmbip::report::{VerdictRecord, WitnessRecord};
use cmbip::sweep::SweepSummary;
use cmbip::{GraphRecord, StripReport};

/// Vertex label of the unified oracle numbering: A vertices first.
pub fn vertex_label(v: usize, part_a: usize) -> String {
    if v < part_a {
        format!("a{}", v + 1)
    } else {
        format!("b{}", v - part_a + 1)
    }
}

fn labels(face: &[usize], part_a: usize) -> Vec<String> {
    face.iter().map(|&v| vertex_label(v, part_a)).collect()
}

#[derive(Debug, Serialize)]
pub struct OracleCheck {
    pub pure: bool,
    pub reisner_cm: bool,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct VerdictReport {
    pub input: String,
    pub graph: GraphRecord,
    /// Isolated vertices removed before deciding, in input labels.
    pub stripped: Vec<String>,
    #[serde(flatten)]
    pub verdict: VerdictRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    pub timing_ms: f64,
}

pub fn stripped_labels(report: &StripReport) -> Vec<String> {
    report.stripped.iter().map(|v| v.to_string()).collect()
}

fn pair(p: [usize; 2]) -> String {
    format!("a{}-b{}", p[0], p[1])
}

fn describe_witness(w: &WitnessRecord) -> String {
    match w {
        WitnessRecord::OddOrUnbalanced { part_a, part_b } => {
            format!("parts have sizes {part_a} and {part_b}")
        }
        WitnessRecord::NoPerfectMatching { subset, neighborhood } => format!(
            "no perfect matching: A vertices {:?} have only {} neighbors {:?}",
            subset,
            neighborhood.len(),
            neighborhood
        ),
        WitnessRecord::Condition1 { pair_index, pair: p, a, b } => format!(
            "condition 1 fails at pair {pair_index} ({}): a{a} ~ b{} and a{} ~ b{b} but a{a} and b{b} are not adjacent",
            pair(*p),
            p[1],
            p[0]
        ),
        WitnessRecord::Condition2 { i, j, pair_i, pair_j } => format!(
            "condition 2 fails at pairs {i} ({}) and {j} ({}): both cross edges present",
            pair(*pair_i),
            pair(*pair_j)
        ),
        WitnessRecord::PeelStuck {
            remaining_vertices,
            min_degree,
        } => format!("peeling stuck with {remaining_vertices} vertices left, minimum degree {min_degree}"),
    }
}

impl VerdictReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let v = &self.verdict;
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(
            out,
            "graph: {}x{}, {} edges",
            self.graph.part_a,
            self.graph.part_b,
            self.graph.edges.len()
        );
        if !self.stripped.is_empty() {
            let _ = writeln!(out, "stripped: {}", self.stripped.join(" "));
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            if v.is_cm { "Cohen-Macaulay" } else { "not Cohen-Macaulay" }
        );
        let _ = writeln!(out, "unmixed: {}", if v.is_unmixed { "yes" } else { "no" });
        if let Some(c) = &v.certificate {
            let m: Vec<String> = c.matching.iter().map(|&p| pair(p)).collect();
            let order: Vec<String> = c.hh_order.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "matching: {}", m.join(" "));
            let _ = writeln!(out, "order: {}", order.join(" "));
        }
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "witness: {}", describe_witness(w));
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle: pure={} reisner={} {}",
                o.pure,
                o.reisner_cm,
                if o.agrees { "agrees" } else { "DISAGREES" }
            );
        }
        let _ = writeln!(out, "time: {:.3} ms", self.timing_ms);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FailingFace {
    pub face: Vec<String>,
    pub dimension: isize,
}

#[derive(Debug, Serialize)]
pub struct OracleDocument {
    pub input: String,
    pub graph: GraphRecord,
    pub facets: usize,
    pub pure: bool,
    /// A smallest and a largest facet when the complex is not pure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub purity_witness: Option<[Vec<String>; 2]>,
    pub balanced: Option<bool>,
    /// Reduced Betti numbers from dimension -1 upwards.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<u64>>,
    pub reisner: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_face: Option<FailingFace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shellable: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shelling_order: Option<Vec<Vec<String>>>,
    pub timing_ms: f64,
}

impl OracleDocument {
    pub fn new(input: String, graph: GraphRecord, r: &OracleReport, timing_ms: f64) -> Self {
        let facets = r.complex.facets();
        let na = graph.part_a;
        let purity_witness = match &r.purity {
            Purity::Pure => None,
            Purity::Mixed { smaller, larger } => Some([labels(smaller, na), labels(larger, na)]),
        };
        let (shellable, shelling_order) = match &r.shellable {
            None => (None, None),
            Some(Shellability::Yes(order)) => (
                Some("yes"),
                Some(order.iter().map(|&k| labels(&facets[k], na)).collect()),
            ),
            Some(Shellability::No) => (Some("no"), None),
            Some(Shellability::CapExceeded) => (Some("cap_exceeded"), None),
        };
        OracleDocument {
            input,
            facets: facets.len(),
            pure: r.is_pure(),
            purity_witness,
            balanced: r.balanced,
            betti: r.betti.as_ref().map(|b| b.0.clone()),
            reisner: r.is_cm(),
            failing_face: r.reisner.as_ref().map(|f| FailingFace {
                face: labels(&f.face, na),
                dimension: f.dimension,
            }),
            shellable,
            shelling_order,
            timing_ms,
            graph,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(out, "facets: {}", self.facets);
        let _ = writeln!(out, "pure: {}", self.pure);
        if let Some([s, l]) = &self.purity_witness {
            let _ = writeln!(out, "facets of different sizes: {{{}}} {{{}}}", s.join(","), l.join(","));
        }
        match self.balanced {
            Some(b) => {
                let _ = writeln!(out, "balanced: {b}");
            }
            None => {
                let _ = writeln!(out, "balanced: n/a (no perfect matching)");
            }
        }
        if let Some(betti) = &self.betti {
            let dims: Vec<String> = betti
                .iter()
                .enumerate()
                .map(|(k, b)| format!("H~{}={b}", k as isize - 1))
                .collect();
            let _ = writeln!(out, "betti: {}", dims.join(" "));
        }
        let _ = writeln!(out, "reisner: {}", self.reisner);
        if let Some(f) = &self.failing_face {
            let _ = writeln!(
                out,
                "failing face: {{{}}} in dimension {}",
                f.face.join(","),
                f.dimension
            );
        }
        if let Some(s) = self.shellable {
            let _ = writeln!(out, "shellable: {s}");
        }
        let _ = writeln!(out, "time: {:.3} ms", self.timing_ms);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SweepDocument {
    pub part_a: usize,
    pub part_b: usize,
    pub total: usize,
    pub cm: usize,
    pub unmixed_not_cm: usize,
    pub disagreements: usize,
    /// Grid ranks of disagreeing graphs.
    pub disagreeing_ranks: Vec<u32>,
    pub oracle_failures: usize,
    pub timing_ms: f64,
}

impl SweepDocument {
    pub fn new(part_a: usize, part_b: usize, s: SweepSummary, timing_ms: f64) -> Self {
        SweepDocument {
            part_a,
            part_b,
            total: s.total,
            cm: s.cm,
            unmixed_not_cm: s.unmixed_not_cm,
            disagreements: s.disagreements.len(),
            disagreeing_ranks: s.disagreements,
            oracle_failures: s.oracle_failures.len(),
            timing_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "grid:            {}x{}", self.part_a, self.part_b);
        let _ = writeln!(out, "total:           {}", self.total);
        let _ = writeln!(out, "cm:              {}", self.cm);
        let _ = writeln!(out, "unmixed, not cm: {}", self.unmixed_not_cm);
        let _ = writeln!(out, "disagreements:   {}", self.disagreements);
        if self.oracle_failures > 0 {
            let _ = writeln!(out, "oracle failures: {}", self.oracle_failures);
        }
        let _ = writeln!(out, "time:            {:.1} ms", self.timing_ms);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct MatchingsDocument {
    pub input: String,
    pub count: usize,
    pub truncated: bool,
    pub matchings: Vec<Vec<[usize; 2]>>,
}

impl MatchingsDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.matchings {
            let pairs: Vec<String> = m.iter().map(|&p| pair(p)).collect();
            let _ = writeln!(out, "{}", pairs.join(" "));
        }
        let _ = writeln!(
            out,
            "{} perfect matching{}{}",
            self.count,
            if self.count == 1 { "" } else { "s" },
            if self.truncated { " (truncated)" } else { "" }
        );
        out
    }
}

#[derive(Debug, Serialize)]
pub struct OrderDocument {
    pub input: String,
    /// The matching pairs in certificate order, so position `p` holds
    /// `x_p, y_p`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordered_pairs: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

impl OrderDocument {
    pub fn to_text(&self) -> String {
        match (&self.ordered_pairs, &self.witness) {
            (Some(pairs), _) => pairs
                .iter()
                .enumerate()
                .map(|(p, &[a, b])| format!("x{} = a{a}, y{} = b{b}\n", p + 1, p + 1))
                .collect(),
            (None, Some(w)) => format!("no order: {}\n", describe_witness(w)),
            (None, None) => String::new(),
        }
    }
}
