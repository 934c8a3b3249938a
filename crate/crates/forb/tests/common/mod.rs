//! Brute-force reference implementations for cross-checking the fast
//! paths. These favor obviousness over speed: every injective row map is
//! tried, and column matching reduces to multiset counting.

use std::collections::HashMap;

use forb::BinaryMatrix;

/// Reference containment decision: `F` embeds in `A` iff some injective
/// row map sends every column of `F` to a distinct equal column of `A`.
pub fn brute_force_contains(a: &BinaryMatrix, f: &BinaryMatrix) -> bool {
    if f.num_rows() > a.num_rows() || f.num_cols() > a.num_cols() {
        return false;
    }
    let mut used = vec![false; a.num_rows()];
    let mut map = Vec::with_capacity(f.num_rows());
    descend(a, f, &mut map, &mut used)
}

fn descend(a: &BinaryMatrix, f: &BinaryMatrix, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if map.len() == f.num_rows() {
        return columns_embed(a, f, map);
    }
    for r in 0..a.num_rows() {
        if used[r] {
            continue;
        }
        used[r] = true;
        map.push(r);
        if descend(a, f, map, used) {
            return true;
        }
        map.pop();
        used[r] = false;
    }
    false
}

/// With the row map fixed, the columns of `F` match injectively iff no
/// column value is demanded more often than `A` supplies it (columns agree
/// exactly, so compatibility classes are equality classes).
fn columns_embed(a: &BinaryMatrix, f: &BinaryMatrix, map: &[usize]) -> bool {
    let mut supply: HashMap<u64, usize> = HashMap::new();
    for col in 0..a.num_cols() {
        let mut v = 0u64;
        for (i, &r) in map.iter().enumerate() {
            if a.get(r, col) {
                v |= 1 << i;
            }
        }
        *supply.entry(v).or_insert(0) += 1;
    }
    let mut demand: HashMap<u64, usize> = HashMap::new();
    for col in 0..f.num_cols() {
        *demand.entry(f.col_bits(col)).or_insert(0) += 1;
    }
    demand
        .iter()
        .all(|(v, need)| supply.get(v).copied().unwrap_or(0) >= *need)
}

/// `forb(3, family)` by checking all 2^8 subsets of the eight possible
/// three-rowed columns against the brute-force containment test.
pub fn naive_forb3(family: &[BinaryMatrix]) -> usize {
    let mut best = 0;
    for mask in 0u32..256 {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let cols: Vec<u64> = (0..8u64).filter(|j| mask >> j & 1 == 1).collect();
        let candidate = BinaryMatrix::from_columns(3, cols).unwrap();
        if family.iter().all(|f| !brute_force_contains(&candidate, f)) {
            best = candidate.num_cols();
        }
    }
    best
}
