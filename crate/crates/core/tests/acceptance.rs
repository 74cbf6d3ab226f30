//! Acceptance criteria. Each test prints one PASS/FAIL line straight to the
//! process stderr so the line survives libtest's output capture.

use std::io::Write;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cmbip::generators::{
    all_bipartite_graphs, perturb, poset_graph, random_bipartite, random_poset, shuffle_labels, PerturbOp, PosetSpec,
};
use cmbip::oracles::{
    faces_by_size, independence_complex, is_pure, reduced_homology, reisner_is_cm, QuadraticMonomialIdeal,
    SimplicialComplex, DEFAULT_FACE_CAP,
};
use cmbip::{
    enumerate_perfect_matchings, find_hh_order, has_unique_perfect_matching, is_cohen_macaulay, is_unmixed, max_matching,
    peel, verify_hh_order, BipartiteGraph, OrderedMatching, Side, Uniqueness, VertexRef,
};

/// Criteria run one at a time so the timing criterion is not measured
/// under load from the others.
static SERIAL: Mutex<()> = Mutex::new(());

fn report(criterion: u32, title: &str, outcome: Result<String, String>) {
    let line = match &outcome {
        Ok(detail) => format!("acceptance criterion {criterion} ({title}): PASS: {detail}\n"),
        Err(detail) => format!("acceptance criterion {criterion} ({title}): FAIL: {detail}\n"),
    };
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    if let Err(detail) = outcome {
        panic!("criterion {criterion} failed: {detail}");
    }
}

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

/// Everything the sweep-based criteria need about one 4x4 grid subgraph.
struct Row {
    rank: u32,
    graph: BipartiteGraph,
    is_cm: bool,
    is_unmixed: bool,
    reisner_cm: bool,
    pure: bool,
    uniqueness: Uniqueness,
    /// Condition 2 and complement connectivity on every pair of the maximum
    /// matching; `None` without a perfect matching.
    condition2_ok: Option<bool>,
    complement_connected: Option<bool>,
    /// Pairs where the two disagree.
    remark_mismatches: usize,
    /// Perfect matchings where condition 1 and the zero-divisor test disagree.
    zero_divisor_mismatches: usize,
    perfect_matchings: usize,
}

struct Sweep {
    rows: Vec<Row>,
    elapsed: Duration,
}

fn sweep() -> &'static Sweep {
    static SWEEP: OnceLock<Sweep> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let start = Instant::now();
        let graphs: Vec<(u32, BipartiteGraph)> = all_bipartite_graphs(4, 4).unwrap().collect();
        let rows = graphs.into_par_iter().map(|(rank, g)| row(rank, g)).collect();
        Sweep {
            rows,
            elapsed: start.elapsed(),
        }
    })
}

fn row(rank: u32, g: BipartiteGraph) -> Row {
    let complex = independence_complex(&g).unwrap();
    let verdict = is_cohen_macaulay(&g);
    let mm = max_matching(&g);
    let mut remark_mismatches = 0;
    let (condition2_ok, complement_connected) = match OrderedMatching::from_matching(&g, &mm) {
        Ok(m) => {
            let pairs = m.pairs();
            let mut c2 = true;
            let mut cc = true;
            for i in 0..pairs.len() {
                for j in i + 1..pairs.len() {
                    let (xi, yi) = pairs[i];
                    let (xj, yj) = pairs[j];
                    let pair_c2 = !(g.has_edge(xi, yj) && g.has_edge(xj, yi));
                    let pair_cc = g.complement_connected_on_pairs(pairs[i], pairs[j]).unwrap();
                    remark_mismatches += (pair_c2 != pair_cc) as usize;
                    c2 &= pair_c2;
                    cc &= pair_cc;
                }
            }
            (Some(c2), Some(cc))
        }
        Err(_) => (None, None),
    };
    let pms = enumerate_perfect_matchings(&g, 1000);
    assert!(!pms.truncated);
    let ideal = QuadraticMonomialIdeal::edge_ideal(&g);
    let na = g.part_a();
    let zero_divisor_mismatches = pms
        .matchings
        .iter()
        .filter(|m| {
            let condition1 = brute_condition1(&g, m.pairs());
            let some_zero_divisor = m
                .pairs()
                .iter()
                .any(|&(x, y)| ideal.is_zero_divisor_sum(x + 1, na + y + 1).unwrap());
            condition1 == some_zero_divisor
        })
        .count();
    Row {
        rank,
        is_cm: verdict.is_cm,
        is_unmixed: is_unmixed(&g).is_unmixed(),
        reisner_cm: reisner_is_cm(&complex).unwrap().is_none(),
        pure: is_pure(&complex).is_pure(),
        uniqueness: has_unique_perfect_matching(&g),
        condition2_ok,
        complement_connected,
        remark_mismatches,
        zero_divisor_mismatches,
        perfect_matchings: pms.matchings.len(),
        graph: g,
    }
}

/// Condition 1 straight from the definition: `a ~ y` and `x ~ b` force
/// `a ~ b`.
fn brute_condition1(g: &BipartiteGraph, pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(x, y)| {
        (0..g.part_a())
            .filter(|&a| g.has_edge(a, y))
            .all(|a| (0..g.part_b()).filter(|&b| g.has_edge(x, b)).all(|b| g.has_edge(a, b)))
    })
}

fn first_ranks(ranks: impl Iterator<Item = u32>) -> String {
    let ranks: Vec<u32> = ranks.take(5).collect();
    format!("{ranks:?}")
}

#[test]
fn criterion_1_exhaustive_equivalence() {
    let _guard = serial();
    let s = sweep();
    let cm_bad = s.rows.iter().filter(|r| r.is_cm != r.reisner_cm);
    let unmixed_bad = s.rows.iter().filter(|r| r.is_unmixed != r.pure);
    let (cm_count, cm_bad_count) = (s.rows.iter().filter(|r| r.is_cm).count(), cm_bad.clone().count());
    let unmixed_bad_count = unmixed_bad.clone().count();
    let outcome = if s.rows.len() == 1 << 16 && cm_bad_count == 0 && unmixed_bad_count == 0 {
        Ok(format!(
            "{} graphs, {cm_count} CM, 0 disagreements with Reisner or purity, sweep {:.1}s",
            s.rows.len(),
            s.elapsed.as_secs_f64()
        ))
    } else {
        Err(format!(
            "{} graphs; CM vs Reisner mismatches {cm_bad_count} (ranks {}), unmixed vs purity mismatches {unmixed_bad_count} (ranks {})",
            s.rows.len(),
            first_ranks(cm_bad.map(|r| r.rank)),
            first_ranks(unmixed_bad.map(|r| r.rank))
        ))
    };
    report(1, "exhaustive 4x4 equivalence", outcome);
}

#[test]
fn criterion_2_unmixed_corollaries() {
    let _guard = serial();
    let s = sweep();
    let unmixed: Vec<&Row> = s.rows.iter().filter(|r| r.is_unmixed).collect();
    let unique_bad: Vec<u32> = unmixed
        .iter()
        .filter(|r| r.is_cm != (r.uniqueness == Uniqueness::Unique))
        .map(|r| r.rank)
        .collect();
    let remark_bad: Vec<u32> = unmixed
        .iter()
        .filter(|r| r.complement_connected != Some(r.is_cm) || r.condition2_ok != r.complement_connected)
        .map(|r| r.rank)
        .collect();
    // the remark equivalence also holds pair by pair on every graph with a PM
    let pairwise_bad: Vec<u32> = s
        .rows
        .iter()
        .filter(|r| r.remark_mismatches > 0)
        .map(|r| r.rank)
        .collect();
    let cm_not_unique: Vec<u32> = s
        .rows
        .iter()
        .filter(|r| r.is_cm && r.uniqueness != Uniqueness::Unique)
        .map(|r| r.rank)
        .collect();
    let outcome = if unique_bad.is_empty() && remark_bad.is_empty() && pairwise_bad.is_empty() && cm_not_unique.is_empty()
    {
        Ok(format!(
            "{} unmixed graphs: CM <=> unique PM <=> all pairs complement-connected, 0 exceptions",
            unmixed.len()
        ))
    } else {
        Err(format!(
            "unique-PM exceptions {unique_bad:?}, complement exceptions {remark_bad:?}, pairwise {pairwise_bad:?}, CM without unique PM {cm_not_unique:?}"
        ))
    };
    report(2, "corollary equivalences on unmixed graphs", outcome);
}

#[test]
fn criterion_3_zero_divisor_equivalence() {
    let _guard = serial();
    let s = sweep();
    let with_pm: Vec<&Row> = s.rows.iter().filter(|r| r.perfect_matchings > 0).collect();
    let matchings: usize = with_pm.iter().map(|r| r.perfect_matchings).sum();
    let bad: Vec<u32> = with_pm
        .iter()
        .filter(|r| r.zero_divisor_mismatches > 0)
        .map(|r| r.rank)
        .collect();
    let outcome = if bad.is_empty() {
        Ok(format!(
            "{} graphs with a PM, {matchings} perfect matchings: condition 1 <=> no x_i + y_i is a zero-divisor, 0 exceptions",
            with_pm.len()
        ))
    } else {
        Err(format!("{} exceptions, ranks {}", bad.len(), first_ranks(bad.into_iter())))
    };
    report(3, "zero-divisor equivalence", outcome);
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[derive(Default)]
struct OrderSearch {
    herzog_hibi: bool,
    /// Ordered condition, transitivity only for `i < j < k`.
    villarreal_ordered: bool,
    /// Transitivity for all distinct `i, j, k`.
    transitive: bool,
}

/// Brute force over every labeling `x_k = a_{xs[k]}`, `y_k = b_{ys[k]}`.
fn search_orders(g: &BipartiteGraph, perms: &[Vec<usize>]) -> OrderSearch {
    let n = g.part_a();
    let mut found = OrderSearch::default();
    if n != g.part_b() {
        return found;
    }
    for xs in perms {
        for ys in perms {
            let adj = |i: usize, j: usize| g.has_edge(xs[i], ys[j]);
            if !(0..n).all(|i| adj(i, i)) {
                continue;
            }
            let mut ordered = true;
            let mut transitive = true;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let holds = !(adj(i, j) && adj(j, k)) || adj(i, k);
                        transitive &= holds;
                        if i < j && j < k {
                            ordered &= holds;
                        }
                    }
                }
            }
            let forward = (0..n).all(|i| (0..n).all(|j| !adj(i, j) || i <= j));
            found.villarreal_ordered |= ordered;
            found.transitive |= transitive;
            found.herzog_hibi |= ordered && forward;
        }
    }
    found
}

/// Seeded instances on at most 5 + 5 vertices: random graphs at several
/// densities, poset graphs, and perturbed poset graphs.
fn small_instances(count: usize) -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0D3E);
    (0..count)
        .map(|k| {
            let n = rng.random_range(1..=5);
            let seed = rng.random::<u64>();
            match k % 4 {
                0 | 1 => {
                    let p = [0.3, 0.5, 0.7][rng.random_range(0..3)];
                    random_bipartite(n, n, p, seed).unwrap()
                }
                2 => shuffle_labels(&poset_graph(&random_poset(n, rng.random::<f64>(), seed).unwrap()), seed),
                _ => {
                    let base = poset_graph(&random_poset(n, rng.random::<f64>(), seed).unwrap());
                    let op = if rng.random_bool(0.5) { PerturbOp::AddEdge } else { PerturbOp::RemoveEdge };
                    let g = perturb(&base, op, seed).unwrap_or(base);
                    shuffle_labels(&g, seed ^ 1)
                }
            }
        })
        .collect()
}

#[test]
fn criterion_4_ordering_criteria() {
    let _guard = serial();
    let perms: Vec<Vec<Vec<usize>>> = (0..=5).map(permutations).collect();
    let instances = small_instances(12_000);
    let results: Vec<(bool, bool, OrderSearch, bool)> = instances
        .par_iter()
        .map(|g| {
            let v = is_cohen_macaulay(g);
            let constructive_ok = match v.certificate() {
                Some(c) => {
                    find_hh_order(g, &c.matching).is_ok_and(|order| verify_hh_order(g, &c.matching, &order))
                }
                None => true,
            };
            (v.is_cm, v.is_unmixed, search_orders(g, &perms[g.part_a().min(5)]), constructive_ok)
        })
        .collect();
    let n = results.len();
    let cm = results.iter().filter(|r| r.0).count();
    let unmixed = results.iter().filter(|r| r.1).count();
    let hh_bad = results.iter().filter(|r| r.0 != r.2.herzog_hibi).count();
    let transitive_bad = results.iter().filter(|r| r.1 != r.2.transitive).count();
    let unmixed_without_order = results.iter().filter(|r| r.1 && !r.2.villarreal_ordered).count();
    let mixed_with_order = results.iter().filter(|r| !r.1 && r.2.villarreal_ordered).count();
    let constructive_bad = results.iter().filter(|r| !r.3).count();
    let holding = hh_bad == 0 && transitive_bad == 0 && unmixed_without_order == 0 && constructive_bad == 0;
    let outcome = if !holding {
        Err(format!(
            "{n} instances: HH mismatches {hh_bad}, find_hh_order failures {constructive_bad}, unmixed without Villarreal order {unmixed_without_order}, unordered transitivity mismatches {transitive_bad}"
        ))
    } else if mixed_with_order > 0 {
        // the ordered Villarreal condition cannot characterize unmixedness;
        // report the clause as unmet instead of passing it
        Err(format!(
            "{n} instances ({cm} CM, {unmixed} unmixed): HH order exists <=> CM and find_hh_order verifies, 0 exceptions; \
             Villarreal clause UNATTAINABLE as stated: unmixed => order holds, but {mixed_with_order} mixed instances also admit an i<j<k-transitive order; \
             transitivity over all distinct triples <=> unmixed, 0 exceptions"
        ))
    } else {
        Ok(format!(
            "{n} instances ({cm} CM, {unmixed} unmixed): HH order <=> CM, Villarreal order <=> unmixed, find_hh_order verifies"
        ))
    };
    match outcome {
        Err(detail) if holding => {
            // printed as a failure line, but the suite keeps running: the
            // clause is false, and the ledger records why
            let line = format!("acceptance criterion 4 (ordering criteria): FAIL: {detail}\n");
            let _ = std::io::stderr().lock().write_all(line.as_bytes());
            assert!(mixed_with_order > 0);
        }
        other => report(4, "ordering criteria", other),
    }
}

/// Degree-one vertices on both sides, CM after deleting any matched pair, and
/// the peeled matching is the only perfect matching.
fn structural_check(g: &BipartiteGraph) -> Result<(), String> {
    if g.is_empty() {
        return Ok(());
    }
    for side in [Side::A, Side::B] {
        if !(0..g.part_size(side)).any(|i| g.degree(VertexRef { side, index: i }) == 1) {
            return Err(format!("no degree-one vertex on side {side:?}"));
        }
    }
    let peeled = peel(g).map_err(|f| format!("CM graph failed to peel: {f:?}"))?;
    let all = enumerate_perfect_matchings(g, 2);
    if all.matchings.len() != 1 || all.matchings[0] != peeled.to_matching() {
        return Err(format!("{} perfect matchings, peeled one not unique", all.matchings.len()));
    }
    for &(a, b) in peeled.pairs() {
        if !is_cohen_macaulay(&g.delete_pair(a, b)).is_cm {
            return Err(format!("deleting pair ({a}, {b}) loses CM"));
        }
    }
    Ok(())
}

fn poset_instance(k: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(k);
    let n = rng.random_range(1..=50);
    let p = rng.random::<f64>().powi(2);
    poset_graph(&random_poset(n, p, rng.random()).unwrap())
}

#[test]
fn criterion_5_structural_consequences() {
    let _guard = serial();
    let s = sweep();
    let mut graphs: Vec<&BipartiteGraph> = s.rows.iter().filter(|r| r.is_cm).map(|r| &r.graph).collect();
    let small = small_instances(12_000);
    let posets: Vec<BipartiteGraph> = (0..2_000u64).map(|k| shuffle_labels(&poset_instance(k), k)).collect();
    graphs.extend(small.iter().filter(|g| is_cohen_macaulay(g).is_cm));
    graphs.extend(posets.iter());
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| structural_check(g).err().map(|e| format!("{e} in\n{}", g.to_text())))
        .collect();
    let outcome = if failures.is_empty() {
        Ok(format!(
            "{} CM graphs (4x4 sweep, ordering samples, poset graphs): degree-one vertex in each part, pair deletion keeps CM, peeled PM is the unique PM",
            graphs.len()
        ))
    } else {
        Err(format!("{} failures; first: {}", failures.len(), failures[0]))
    };
    report(5, "structural consequences", outcome);
}

#[test]
fn criterion_6_generator_soundness() {
    let _guard = serial();
    let results: Vec<(usize, bool, Option<bool>)> = (0..10_000u64)
        .into_par_iter()
        .map(|k| {
            let g = poset_instance(k);
            let n = g.part_a();
            let ok = is_cohen_macaulay(&g).is_cm && is_cohen_macaulay(&shuffle_labels(&g, k)).is_cm;
            let reisner = (n <= 6).then(|| reisner_is_cm(&independence_complex(&g).unwrap()).unwrap().is_none());
            (n, ok, reisner)
        })
        .collect();
    let rejected = results.iter().filter(|r| !r.1).count();
    let small = results.iter().filter(|r| r.2.is_some()).count();
    let reisner_rejected = results.iter().filter(|r| r.2 == Some(false)).count();
    let max_n = results.iter().map(|r| r.0).max().unwrap_or(0);
    let outcome = if rejected == 0 && reisner_rejected == 0 {
        Ok(format!(
            "10000 poset graphs (n up to {max_n}) accepted by the checker, {small} with n <= 6 also by Reisner"
        ))
    } else {
        Err(format!("{rejected} rejected by the checker, {reisner_rejected} by Reisner"))
    };
    report(6, "generator soundness", outcome);
}

/// `k` disjoint chains of five pairs each, shuffled.
fn chain_forest(pairs: usize, seed: u64) -> BipartiteGraph {
    let chains = pairs / 5;
    let relations = (0..chains).flat_map(|c| {
        let base = 5 * c;
        (0..5).flat_map(move |i| (i + 1..5).map(move |j| (base + i, base + j)))
    });
    shuffle_labels(&poset_graph(&PosetSpec::new(pairs, relations).unwrap()), seed)
}

fn best_of<F: FnMut()>(runs: usize, mut f: F) -> Duration {
    (0..runs)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_7_performance() {
    let _guard = serial();
    let chain = poset_graph(&PosetSpec::chain(2000));
    let start = Instant::now();
    let verdict = is_cohen_macaulay(&chain);
    let chain_time = start.elapsed();

    let sizes = [250, 500, 1000, 2000];
    let times: Vec<Duration> = sizes
        .iter()
        .map(|&n| {
            let g = chain_forest(n, n as u64);
            best_of(40, || {
                assert!(peel(&g).is_ok());
            })
        })
        .collect();
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1].as_secs_f64() / w[0].as_secs_f64()).collect();
    let detail = format!(
        "chain n=2000 ({} edges) decided in {:.3}s; peel times {:?} for n={sizes:?}, doubling ratios {:.2?}",
        chain.edge_count(),
        chain_time.as_secs_f64(),
        times,
        ratios
    );
    let outcome = if verdict.is_cm && chain_time <= Duration::from_secs(2) && ratios.iter().all(|&r| r < 4.0) {
        Ok(detail)
    } else {
        Err(detail)
    };
    report(7, "performance", outcome);
}

fn face_euler(c: &SimplicialComplex) -> i64 {
    faces_by_size(c, DEFAULT_FACE_CAP)
        .unwrap()
        .iter()
        .enumerate()
        .map(|(s, faces)| if s % 2 == 1 { faces.len() as i64 } else { -(faces.len() as i64) })
        .sum()
}

#[test]
fn criterion_8_homology_self_checks() {
    let _guard = serial();
    let hollow = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
    let two_edges = SimplicialComplex::from_facets(4, vec![vec![0, 1], vec![2, 3]]);
    let hollow_betti = reduced_homology(&hollow).unwrap();
    let two_betti = reduced_homology(&two_edges).unwrap();
    let graphs: Vec<(u32, BipartiteGraph)> = all_bipartite_graphs(4, 4).unwrap().collect();
    // every complex and every link goes through the engine's own Euler
    // check; the face count here is an independent recount
    let mismatches: Vec<u32> = graphs
        .par_iter()
        .filter(|(_, g)| {
            let c = independence_complex(g).unwrap();
            let engine = reduced_homology(&c).and_then(|b| reisner_is_cm(&c).map(|_| b));
            match engine {
                Ok(b) => b.euler_characteristic() != face_euler(&c),
                Err(_) => true,
            }
        })
        .map(|(rank, _)| *rank)
        .collect();
    let ok = hollow_betti.from_dim0() == [0, 1] && two_betti.from_dim0() == [1, 0] && mismatches.is_empty();
    let detail = format!(
        "hollow triangle {:?}, two disjoint edges {:?}, Euler identity on {} sweep complexes and their links, {} mismatches",
        hollow_betti.from_dim0(),
        two_betti.from_dim0(),
        graphs.len(),
        mismatches.len()
    );
    report(8, "homology self-checks", if ok { Ok(detail) } else { Err(detail) });
}
