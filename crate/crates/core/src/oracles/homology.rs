//! Reduced simplicial homology over the rationals and the Reisner criterion.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use super::OracleError;

/// Reduced Betti numbers; entry `k` is the rank of `H̃_{k-1}`, so the vector
/// starts at dimension −1 and ends at the dimension of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector(pub Vec<u64>);

impl BettiVector {
    /// Rank of `H̃_dim`; zero outside the stored range.
    pub fn get(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// Betti numbers from dimension 0 upwards.
    pub fn from_dim0(&self) -> &[u64] {
        self.0.get(1..).unwrap_or(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(self.0.iter().map(|&b| b as i64))
    }
}

/// `Σ (-1)^k x_k` with the first entry at dimension −1.
fn alternating_sum(xs: impl Iterator<Item = i64>) -> i64 {
    xs.enumerate()
        .map(|(k, x)| if k % 2 == 1 { x } else { -x })
        .sum()
}

/// All faces grouped by size: `faces[s]` holds the sorted faces with `s`
/// vertices, in lexicographic order. Empty for the void complex.
pub fn faces_by_size(c: &SimplicialComplex, cap: usize) -> Result<Vec<Vec<Vec<usize>>>, OracleError> {
    let Some(dim) = c.dimension() else {
        return Ok(Vec::new());
    };
    let mut seen: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); (dim + 2) as usize];
    let mut total = 0usize;
    for facet in c.facets() {
        if facet.len() >= usize::BITS as usize - 1 || (1usize << facet.len()) > cap {
            return Err(OracleError::CapExceeded { what: "faces", limit: cap });
        }
        for mask in 0usize..1 << facet.len() {
            let face: Vec<usize> = facet
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let size = face.len();
            if seen[size].insert(face) {
                total += 1;
                if total > cap {
                    return Err(OracleError::CapExceeded { what: "faces", limit: cap });
                }
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|set| {
            let mut v: Vec<_> = set.into_iter().collect();
            v.sort();
            v
        })
        .collect())
}

pub fn reduced_homology(c: &SimplicialComplex) -> Result<BettiVector, OracleError> {
    reduced_homology_capped(c, DEFAULT_FACE_CAP)
}

/// Reduced Betti numbers over Q from exact ranks of the boundary maps.
///
/// Checks the Euler identity between face counts and Betti numbers before
/// returning.
pub fn reduced_homology_capped(c: &SimplicialComplex, cap: usize) -> Result<BettiVector, OracleError> {
    let faces = faces_by_size(c, cap)?;
    if faces.is_empty() {
        return Ok(BettiVector(Vec::new()));
    }
    // rank[s] is the rank of the boundary from size-s faces to size-(s-1)
    // faces; rank[0] and rank[len] are zero
    let mut rank = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let index: HashMap<&[usize], usize> = faces[s - 1]
            .iter()
            .enumerate()
            .map(|(k, f)| (f.as_slice(), k))
            .collect();
        let columns = faces[s].iter().map(|f| {
            let mut col: Vec<(usize, i64)> = (0..f.len())
                .map(|drop| {
                    let boundary: Vec<usize> = f
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    (index[boundary.as_slice()], sign)
                })
                .collect();
            col.sort_unstable();
            col
        });
        rank[s] = exact_rank(columns);
    }
    let mut betti = Vec::with_capacity(faces.len());
    for s in 0..faces.len() {
        let b = faces[s].len() as i64 - rank[s] as i64 - rank[s + 1] as i64;
        if b < 0 {
            return Err(OracleError::EulerMismatch {
                faces: faces[s].len() as i64,
                betti: b,
            });
        }
        betti.push(b as u64);
    }
    let betti = BettiVector(betti);
    let face_euler = alternating_sum(faces.iter().map(|f| f.len() as i64));
    if face_euler != betti.euler_characteristic() {
        return Err(OracleError::EulerMismatch {
            faces: face_euler,
            betti: betti.euler_characteristic(),
        });
    }
    Ok(betti)
}

/// Rank over Q of an integer matrix given as sparse vectors (sorted by index).
///
/// Vectors are reduced one at a time against an echelon basis keyed by
/// leading index. Each elimination step cross-multiplies by the two leading
/// coefficients and divides the result by its content, so all arithmetic
/// stays in exact integers.
pub fn exact_rank<I>(vectors: I) -> usize
where
    I: IntoIterator<Item = Vec<(usize, i64)>>,
{
    let mut basis: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for v in vectors {
        let mut row: Vec<(usize, BigInt)> = v
            .into_iter()
            .filter(|(_, x)| *x != 0)
            .map(|(k, x)| (k, BigInt::from(x)))
            .collect();
        while let Some((lead, _)) = row.first() {
            match basis.get(lead) {
                None => {
                    basis.insert(*lead, row);
                    break;
                }
                Some(pivot) => row = eliminate(&row, pivot),
            }
        }
    }
    basis.len()
}

/// `p_lead * row - r_lead * pivot`, divided by its content. Both inputs share
/// the same leading index, which cancels.
fn eliminate(row: &[(usize, BigInt)], pivot: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let g = gcd(&row[0].1, &pivot[0].1);
    let row_scale = &pivot[0].1 / &g;
    let pivot_scale = &row[0].1 / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let (k, x) = match (row.get(i), pivot.get(j)) {
            (Some((kr, xr)), Some((kp, _))) if kr < kp => {
                i += 1;
                (*kr, xr * &row_scale)
            }
            (Some((kr, _)), Some((kp, xp))) if kp < kr => {
                j += 1;
                (*kp, -(xp * &pivot_scale))
            }
            (Some((kr, xr)), Some((_, xp))) => {
                i += 1;
                j += 1;
                (*kr, xr * &row_scale - xp * &pivot_scale)
            }
            (Some((kr, xr)), None) => {
                i += 1;
                (*kr, xr * &row_scale)
            }
            (None, Some((kp, xp))) => {
                j += 1;
                (*kp, -(xp * &pivot_scale))
            }
            (None, None) => unreachable!(),
        };
        if !x.is_zero() {
            out.push((k, x));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, (_, x)| gcd(&acc, x));
    if !content.is_zero() && !content.is_one() {
        for (_, x) in &mut out {
            *x /= &content;
        }
    }
    out
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// A face whose link has non-vanishing homology below the link's dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReisnerFailure {
    pub face: Vec<usize>,
    pub dimension: isize,
}

pub fn reisner_is_cm(c: &SimplicialComplex) -> Result<Option<ReisnerFailure>, OracleError> {
    reisner_is_cm_capped(c, DEFAULT_FACE_CAP)
}

/// Checks that every link has vanishing reduced homology below its
/// dimension. Returns the first failing face (by size, then
/// lexicographically) and the offending dimension, or `None` when the
/// complex is Cohen-Macaulay.
pub fn reisner_is_cm_capped(c: &SimplicialComplex, cap: usize) -> Result<Option<ReisnerFailure>, OracleError> {
    for faces in faces_by_size(c, cap)? {
        for face in faces {
            let link = c.link(&face);
            // a simplex (or {∅}) has no reduced homology at all
            if link.facets().len() <= 1 {
                continue;
            }
            let dim = link.dimension().expect("link of a face is not void");
            let betti = reduced_homology_capped(&link, cap)?;
            if let Some(d) = (-1..dim).find(|&d| betti.get(d) != 0) {
                return Ok(Some(ReisnerFailure { face, dimension: d }));
            }
        }
    }
    Ok(None)
}
