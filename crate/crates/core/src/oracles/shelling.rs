use std::collections::HashSet;

use super::complex::SimplicialComplex;

/// Default limit on the number of facets the shelling search accepts.
pub const DEFAULT_SHELLING_FACET_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shellability {
    /// A shelling order, as indices into the complex's facet list.
    Yes(Vec<usize>),
    No,
    CapExceeded,
}

/// Searches for a shelling order by backtracking over facet prefixes.
///
/// Facet `F` may follow a prefix iff every intersection of `F` with an
/// earlier facet lies inside some earlier facet meeting `F` in a
/// codimension-one face. Whether `F` may be appended depends only on the set
/// of facets already placed, so failed sets are memoized.
pub fn is_shellable_bruteforce(c: &SimplicialComplex, facet_cap: usize) -> Shellability {
    let facets = c.facets();
    let n = facets.len();
    if n > facet_cap || n > 64 {
        return Shellability::CapExceeded;
    }
    if n == 0 {
        return Shellability::Yes(Vec::new());
    }
    // inter[k][i] = facets[k] ∩ facets[i] as a bitmask over positions in facets[k]
    let inter: Vec<Vec<u64>> = facets
        .iter()
        .map(|fk| {
            facets
                .iter()
                .map(|fi| {
                    fk.iter()
                        .enumerate()
                        .filter(|(_, v)| fi.binary_search(v).is_ok())
                        .fold(0u64, |acc, (p, _)| acc | 1 << p)
                })
                .collect()
        })
        .collect();
    let search = ShellSearch { facets, inter };
    let mut failed = HashSet::new();
    let mut order = Vec::with_capacity(n);
    if search.extend(0, &mut order, &mut failed) {
        Shellability::Yes(order)
    } else {
        Shellability::No
    }
}

struct ShellSearch<'a> {
    facets: &'a [Vec<usize>],
    inter: Vec<Vec<u64>>,
}

impl ShellSearch<'_> {
    fn extend(&self, placed: u64, order: &mut Vec<usize>, failed: &mut HashSet<u64>) -> bool {
        let n = self.facets.len();
        if order.len() == n {
            return true;
        }
        if failed.contains(&placed) {
            return false;
        }
        for k in 0..n {
            if placed >> k & 1 == 1 || !self.attaches(placed, k) {
                continue;
            }
            order.push(k);
            if self.extend(placed | 1 << k, order, failed) {
                return true;
            }
            order.pop();
        }
        failed.insert(placed);
        false
    }

    fn attaches(&self, placed: u64, k: usize) -> bool {
        if placed == 0 {
            return true;
        }
        let size = self.facets[k].len();
        let mut earlier = (0..self.facets.len()).filter(|&i| placed >> i & 1 == 1);
        let ridges: Vec<u64> = earlier
            .clone()
            .map(|i| self.inter[k][i])
            .filter(|m| m.count_ones() as usize + 1 == size)
            .collect();
        earlier.all(|i| {
            let m = self.inter[k][i];
            ridges.iter().any(|r| m & !r == 0)
        })
    }
}
