use fixedbitset::FixedBitSet;

use super::OracleError;
use crate::cm::OrderedMatching;
use crate::graph::BipartiteGraph;

/// Default cap on the number of facets (and faces) an oracle will materialize.
pub const DEFAULT_FACE_CAP: usize = 1 << 20;

/// A simplicial complex given by its facets.
///
/// Facets are sorted vertex lists, mutually inclusion-incomparable, in
/// lexicographic order. An empty facet list is the void complex; the single
/// facet `[]` is the complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, discarding non-maximal ones.
    pub fn from_facets(vertex_count: usize, faces: Vec<Vec<usize>>) -> Self {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        for f in &faces {
            assert!(f.iter().all(|&v| v < vertex_count), "facet vertex out of range");
        }
        // longer faces first so containment only needs to look backwards
        faces.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        faces.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| is_subset_sorted(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { vertex_count, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Link of `face`: `{G \ face : G ⊇ face}` over the facets `G`. Void if
    /// `face` is not a face.
    pub fn link(&self, face: &[usize]) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|g| is_subset_sorted(face, g))
            .map(|g| g.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
            .collect();
        // links of a face inherit incomparability from the facets
        SimplicialComplex {
            vertex_count: self.vertex_count,
            facets,
        }
    }
}

pub(crate) fn is_subset_sorted(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.by_ref().any(|w| w == v))
}

/// Facets of the independence complex (the maximal independent sets), with
/// the default cap. A vertex `a` keeps its index; B vertex `b` becomes
/// `part_a + b`.
pub fn independence_complex(g: &BipartiteGraph) -> Result<SimplicialComplex, OracleError> {
    independence_complex_capped(g, DEFAULT_FACE_CAP)
}

/// Enumerates maximal independent sets by Bron–Kerbosch with pivoting on the
/// complement graph.
pub fn independence_complex_capped(g: &BipartiteGraph, cap: usize) -> Result<SimplicialComplex, OracleError> {
    let n = g.vertex_count();
    let na = g.part_a();
    // compatible[v]: vertices that may share an independent set with v
    let mut compatible = vec![FixedBitSet::with_capacity(n); n];
    for (v, row) in compatible.iter_mut().enumerate() {
        row.insert_range(..);
        row.set(v, false);
        if v < na {
            for &b in g.neighbors_of_a(v) {
                row.set(na + b, false);
            }
        } else {
            for &a in g.neighbors_of_b(v - na) {
                row.set(a, false);
            }
        }
    }
    let mut search = MaximalSets {
        compatible: &compatible,
        cap,
        found: Vec::new(),
        current: Vec::new(),
    };
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    search.expand(candidates, FixedBitSet::with_capacity(n))?;
    let mut facets = search.found;
    for f in &mut facets {
        f.sort_unstable();
    }
    facets.sort();
    Ok(SimplicialComplex {
        vertex_count: n,
        facets,
    })
}

struct MaximalSets<'a> {
    compatible: &'a [FixedBitSet],
    cap: usize,
    found: Vec<Vec<usize>>,
    current: Vec<usize>,
}

impl MaximalSets<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet, mut excluded: FixedBitSet) -> Result<(), OracleError> {
        if candidates.is_clear() {
            if excluded.is_clear() {
                if self.found.len() == self.cap {
                    return Err(OracleError::CapExceeded {
                        what: "facets",
                        limit: self.cap,
                    });
                }
                self.found.push(self.current.clone());
            }
            return Ok(());
        }
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| candidates.intersection(&self.compatible[u]).count())
            .expect("candidates are non-empty");
        let mut branch = candidates.clone();
        branch.difference_with(&self.compatible[pivot]);
        for v in branch.ones() {
            let mut next_c = candidates.clone();
            next_c.intersect_with(&self.compatible[v]);
            let mut next_x = excluded.clone();
            next_x.intersect_with(&self.compatible[v]);
            self.current.push(v);
            self.expand(next_c, next_x)?;
            self.current.pop();
            candidates.set(v, false);
            excluded.insert(v);
        }
        Ok(())
    }
}

/// Outcome of [`is_pure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Purity {
    Pure,
    /// A smallest and a largest facet.
    Mixed { smaller: Vec<usize>, larger: Vec<usize> },
}

impl Purity {
    pub fn is_pure(&self) -> bool {
        matches!(self, Purity::Pure)
    }
}

pub fn is_pure(c: &SimplicialComplex) -> Purity {
    let smallest = c.facets.iter().min_by_key(|f| f.len());
    let largest = c.facets.iter().max_by_key(|f| f.len());
    match (smallest, largest) {
        (Some(s), Some(l)) if s.len() != l.len() => Purity::Mixed {
            smaller: s.clone(),
            larger: l.clone(),
        },
        _ => Purity::Pure,
    }
}

/// Every facet meets every matched pair `{x_i, y_i}` in exactly one vertex.
///
/// `c` must use the vertex numbering of [`independence_complex`] for the
/// graph `m` was built on.
pub fn is_completely_balanced(c: &SimplicialComplex, m: &OrderedMatching) -> bool {
    let part_a = m.len();
    c.facets.iter().all(|f| {
        m.pairs().iter().all(|&(x, y)| {
            let hits = f.binary_search(&x).is_ok() as u8 + f.binary_search(&(part_a + y)).is_ok() as u8;
            hits == 1
        })
    })
}
