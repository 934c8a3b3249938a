//! Configuration containment: deciding `F ≺ A` and reporting witnesses.
//!
//! `F ≺ A` holds when some submatrix of `A` is a row and column permutation
//! of `F`; equivalently, when there are injective maps from `F`'s rows to
//! `A`'s rows and from `F`'s columns to `A`'s columns that make every entry
//! agree. The decision procedure backtracks over injective row maps in
//! lexicographic order. At each partial map it restricts both matrices to
//! the mapped rows and compares column fingerprints: distinct fingerprints
//! are disjoint classes, so `F`'s columns embed exactly when every class is
//! at least as frequent in `A` as in `F`. That count check prunes dead
//! prefixes and, on a complete row map, certifies that a greedy column
//! assignment succeeds.
//!
//! The worst case is exponential in the number of rows of `F` — containment
//! testing is NP-hard in general — but the class counting keeps the search
//! shallow on everything desk-sized this crate targets.

use std::collections::HashMap;

use thiserror::Error;

use crate::matrix::{row_mask, BinaryMatrix, Column, MatrixError};

/// Errors from the pair-analysis operations (containment itself never
/// fails: a configuration taller than the target is simply absent).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContainmentError {
    #[error("row-pair analysis needs at least 2 rows, got {num_rows}")]
    TooFewRows { num_rows: usize },
    #[error("family member {index} has {found} rows, expected {expected}")]
    HeightMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("family member {index} is not simple")]
    NotSimple { index: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A concrete embedding certifying `F ≺ A`.
///
/// `row_map[i]` is the `A`-row playing `F`'s row `i`;
/// `column_assignment[j]` is the `A`-column playing `F`'s column `j`.
/// Both maps are injective. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigWitness {
    pub row_map: Vec<usize>,
    pub column_assignment: Vec<usize>,
}

impl ConfigWitness {
    /// Re-check this witness against the matrices it claims to relate:
    /// shapes, injectivity, and every entry.
    pub fn validate(&self, a: &BinaryMatrix, f: &BinaryMatrix) -> bool {
        if self.row_map.len() != f.num_rows() || self.column_assignment.len() != f.num_cols() {
            return false;
        }
        let mut used_rows = 0u64;
        for &r in &self.row_map {
            if r >= a.num_rows() || used_rows >> r & 1 == 1 {
                return false;
            }
            used_rows |= 1 << r;
        }
        let mut used_cols = vec![false; a.num_cols()];
        for &c in &self.column_assignment {
            if c >= a.num_cols() || used_cols[c] {
                return false;
            }
            used_cols[c] = true;
        }
        for (j, &aj) in self.column_assignment.iter().enumerate() {
            for (i, &ai) in self.row_map.iter().enumerate() {
                if f.get(i, j) != a.get(ai, aj) {
                    return false;
                }
            }
        }
        true
    }
}

/// Decide `F ≺ A`, returning the first witness in lexicographic row-map
/// order, or `None` when `A` avoids `F`. Deterministic for fixed storage
/// order of the arguments; the answer itself does not depend on storage
/// order at all.
pub fn contains_configuration(a: &BinaryMatrix, f: &BinaryMatrix) -> Option<ConfigWitness> {
    Embedder::new(a, f, None).search()
}

/// Like [`contains_configuration`], but only admits embeddings whose column
/// assignment uses `A`'s column `required_col`. This is what incremental
/// search wants: when a column is appended to a matrix that previously
/// avoided `F`, any new embedding must involve the new column.
pub fn contains_configuration_using(
    a: &BinaryMatrix,
    f: &BinaryMatrix,
    required_col: usize,
) -> Option<ConfigWitness> {
    assert!(required_col < a.num_cols(), "required column out of range");
    Embedder::new(a, f, Some(required_col)).search()
}

/// True when `A` avoids every member of the family. An empty family is
/// avoided vacuously.
pub fn avoids_family(a: &BinaryMatrix, family: &[BinaryMatrix]) -> bool {
    family.iter().all(|f| contains_configuration(a, f).is_none())
}

struct Embedder<'x> {
    a: &'x BinaryMatrix,
    f: &'x BinaryMatrix,
    k: usize,
    required: Option<usize>,
    /// `afp[d][i]`: bits of `A`-column `i` on the first `d` mapped rows.
    afp: Vec<Vec<u64>>,
    row_map: Vec<usize>,
    used_rows: u64,
    /// Scratch for the class-count feasibility check.
    counts: HashMap<u64, i64>,
}

impl<'x> Embedder<'x> {
    fn new(a: &'x BinaryMatrix, f: &'x BinaryMatrix, required: Option<usize>) -> Self {
        let k = f.num_rows();
        Embedder {
            a,
            f,
            k,
            required,
            afp: vec![vec![0u64; a.num_cols()]; k + 1],
            row_map: Vec::with_capacity(k),
            used_rows: 0,
            counts: HashMap::new(),
        }
    }

    fn search(&mut self) -> Option<ConfigWitness> {
        if self.k > self.a.num_rows() || self.f.num_cols() > self.a.num_cols() {
            return None;
        }
        if !self.feasible(0) {
            return None;
        }
        self.descend(0)
    }

    fn descend(&mut self, depth: usize) -> Option<ConfigWitness> {
        if depth == self.k {
            return self.assignment().map(|column_assignment| ConfigWitness {
                row_map: self.row_map.clone(),
                column_assignment,
            });
        }
        for s in 0..self.a.num_rows() {
            if self.used_rows >> s & 1 == 1 {
                continue;
            }
            self.row_map.push(s);
            self.used_rows |= 1 << s;
            for i in 0..self.a.num_cols() {
                let bit = (self.a.col_bits(i) >> s & 1) << depth;
                self.afp[depth + 1][i] = self.afp[depth][i] | bit;
            }
            if self.feasible(depth + 1) {
                if let Some(w) = self.descend(depth + 1) {
                    return Some(w);
                }
            }
            self.row_map.pop();
            self.used_rows &= !(1u64 << s);
        }
        None
    }

    /// Can `F`'s columns, restricted to its first `depth` rows, still embed
    /// into `A`'s columns restricted to the mapped rows? Exact at full
    /// depth, a sound pruning condition before that.
    fn feasible(&mut self, depth: usize) -> bool {
        let mask = fingerprint_mask(depth);
        self.counts.clear();
        for j in 0..self.f.num_cols() {
            *self.counts.entry(self.f.col_bits(j) & mask).or_insert(0) += 1;
        }
        if let Some(req) = self.required {
            // The required column can only participate if some F-column
            // matches it on the mapped rows.
            if !self.counts.contains_key(&self.afp[depth][req]) {
                return false;
            }
        }
        for &fp in &self.afp[depth] {
            if let Some(c) = self.counts.get_mut(&fp) {
                *c -= 1;
            }
        }
        self.counts.values().all(|&c| c <= 0)
    }

    /// Build the column assignment for the completed row map. Feasibility
    /// at full depth guarantees success; the greedy "smallest unused index"
    /// rule keeps the witness deterministic.
    fn assignment(&self) -> Option<Vec<usize>> {
        let mask = fingerprint_mask(self.k);
        let full = &self.afp[self.k];
        let nf = self.f.num_cols();
        let mut pool: HashMap<u64, Vec<usize>> = HashMap::new();
        // Push in reverse so popping takes the smallest index first.
        for i in (0..self.a.num_cols()).rev() {
            pool.entry(full[i]).or_default().push(i);
        }
        let mut out = vec![usize::MAX; nf];
        if let Some(req) = self.required {
            let fp = full[req];
            let j = (0..nf).find(|&j| self.f.col_bits(j) & mask == fp)?;
            out[j] = req;
            pool.get_mut(&fp)?.retain(|&i| i != req);
        }
        for j in 0..nf {
            if out[j] != usize::MAX {
                continue;
            }
            let fp = self.f.col_bits(j) & mask;
            out[j] = pool.get_mut(&fp)?.pop()?;
        }
        Some(out)
    }
}

#[inline]
fn fingerprint_mask(depth: usize) -> u64 {
    row_mask(depth)
}

/// Which of the three 2-rowed building blocks are absent on one row pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowPairPattern {
    /// The unordered pair, as (lower index, higher index).
    pub rows: (usize, usize),
    /// No column reads (0,0) on this pair.
    pub lacks_zero_zero: bool,
    /// No column reads (1,1) on this pair.
    pub lacks_one_one: bool,
    /// The 2×2 identity cannot embed: (1,0) or (0,1) never occurs.
    pub lacks_identity: bool,
}

/// Classify every unordered row pair of `F` by which 2-rowed patterns it
/// lacks. Needs at least two rows.
pub fn row_pair_patterns(f: &BinaryMatrix) -> Result<Vec<RowPairPattern>, ContainmentError> {
    let m = f.num_rows();
    if m < 2 {
        return Err(ContainmentError::TooFewRows { num_rows: m });
    }
    let mut out = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let mut seen = [false; 4];
            for c in 0..f.num_cols() {
                let pat = (f.get(i, c) as usize) | (f.get(j, c) as usize) << 1;
                seen[pat] = true;
            }
            out.push(RowPairPattern {
                rows: (i, j),
                lacks_zero_zero: !seen[0b00],
                lacks_one_one: !seen[0b11],
                lacks_identity: !(seen[0b01] && seen[0b10]),
            });
        }
    }
    Ok(out)
}

/// The triple condition under which the `f(m, k)` upper bound applies to a
/// family of `k`-rowed simple matrices: some member has a row pair on which
/// (0,0) never occurs, some member a pair on which (1,1) never occurs, and
/// some member a pair on which the 2×2 identity cannot embed. One member
/// may supply several of these.
pub fn hypothesis_check(family: &[BinaryMatrix], k: usize) -> Result<bool, ContainmentError> {
    if k < 2 {
        return Err(ContainmentError::TooFewRows { num_rows: k });
    }
    let mut no_zero = false;
    let mut no_one = false;
    let mut no_identity = false;
    for (index, f) in family.iter().enumerate() {
        if f.num_rows() != k {
            return Err(ContainmentError::HeightMismatch {
                index,
                expected: k,
                found: f.num_rows(),
            });
        }
        if !f.is_simple() {
            return Err(ContainmentError::NotSimple { index });
        }
        for p in row_pair_patterns(f)? {
            no_zero |= p.lacks_zero_zero;
            no_one |= p.lacks_one_one;
            no_identity |= p.lacks_identity;
        }
    }
    Ok(no_zero && no_one && no_identity)
}

/// Coverage of the balanced complementary column pairs by a `k`-rowed
/// configuration.
///
/// A balanced pair is a column of weight `⌈k/2⌉` together with its
/// complement (weight `⌊k/2⌋`). There are `½·C(k, k/2)` such pairs for even
/// `k` and `C(k, ⌈k/2⌉)` for odd `k`. A pair is *covered* when `F` has a
/// column exactly equal to one of its members (no row permutation here —
/// this is a statement about `F`'s literal columns).
#[derive(Clone, Debug)]
pub struct ComplementaryPairReport {
    pub k: usize,
    /// Every balanced pair, as (representative, complement). For odd `k`
    /// the representative is the heavier column; for even `k` it is the
    /// member with a 1 in the first row.
    pub pairs: Vec<(Column, Column)>,
    pub covered: Vec<(Column, Column)>,
    pub missing: Vec<(Column, Column)>,
}

/// Enumerate the balanced complementary pairs of `F`'s height and sort them
/// into covered and missing. Needs at least two rows.
pub fn missing_complementary_pairs(
    f: &BinaryMatrix,
) -> Result<ComplementaryPairReport, ContainmentError> {
    let k = f.num_rows();
    if k < 2 {
        return Err(ContainmentError::TooFewRows { num_rows: k });
    }
    let heavy = k.div_ceil(2);
    let candidates = BinaryMatrix::columns_of_weight(k, heavy)?;
    let column_set: std::collections::HashSet<u64> = (0..f.num_cols()).map(|j| f.col_bits(j)).collect();
    let mut pairs = Vec::new();
    let mut covered = Vec::new();
    let mut missing = Vec::new();
    for rep in candidates.columns() {
        let partner = rep.complement();
        if k % 2 == 0 && !rep.get(0) {
            // Even k: each pair shows up twice among the weight-k/2
            // columns; keep the copy whose representative has a 1 on top.
            continue;
        }
        let pair = (rep, partner);
        pairs.push(pair);
        if column_set.contains(&rep.bits()) || column_set.contains(&partner.bits()) {
            covered.push(pair);
        } else {
            missing.push(pair);
        }
    }
    Ok(ComplementaryPairReport {
        k,
        pairs,
        covered,
        missing,
    })
}

/// True when `F` covers every balanced complementary pair of its height.
/// This certifies that the transition-bounded matrix of matching height
/// avoids `F` on any number of rows: each `k`-set of that matrix's rows is
/// missing one balanced pair, and a full covering forces any embedding of
/// `F` to hit the missing pair.
pub fn covers_all_pairs_certificate(f: &BinaryMatrix) -> Result<bool, ContainmentError> {
    Ok(missing_complementary_pairs(f)?.missing.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn small_positive_cases() {
        let k3 = BinaryMatrix::all_columns(3).unwrap();
        let i2 = BinaryMatrix::identity(2).unwrap();
        let w = contains_configuration(&k3, &i2).expect("I_2 embeds in K_3");
        assert!(w.validate(&k3, &i2));

        let t2 = BinaryMatrix::triangular(2).unwrap();
        let w = contains_configuration(&k3, &t2).expect("T_2 embeds in K_3");
        assert!(w.validate(&k3, &t2));

        // Containment sees through both row and column permutations.
        let f = m(&["01", "11"]);
        let a = m(&["110", "100"]);
        let w = contains_configuration(&a, &f).expect("permuted copy found");
        assert!(w.validate(&a, &f));
    }

    #[test]
    fn small_negative_cases() {
        let a = m(&["10", "01"]);
        let k2 = BinaryMatrix::all_columns(2).unwrap();
        assert!(contains_configuration(&a, &k2).is_none());

        // Taller configuration than target: absent, not an error.
        let f = BinaryMatrix::identity(3).unwrap();
        assert!(contains_configuration(&a, &f).is_none());

        // Too few columns.
        assert!(contains_configuration(&a, &m(&["100", "010"])).is_none());
    }

    #[test]
    fn repeated_columns_need_multiplicity() {
        let f = m(&["11"]); // one row, the column `1` twice
        assert!(contains_configuration(&m(&["10"]), &f).is_none());
        let w = contains_configuration(&m(&["101"]), &f).expect("two 1-columns");
        assert!(w.validate(&m(&["101"]), &f));
        assert_ne!(w.column_assignment[0], w.column_assignment[1]);
    }

    #[test]
    fn zero_rowed_configurations_count_columns() {
        let a = m(&["10", "01"]);
        let k0 = BinaryMatrix::all_columns(0).unwrap(); // 0×1
        let w = contains_configuration(&a, &k0).expect("empty column fits");
        assert!(w.validate(&a, &k0));
        let wide = BinaryMatrix::from_columns(0, vec![0, 0, 0]).unwrap(); // 0×3
        assert!(contains_configuration(&a, &wide).is_none());
    }

    #[test]
    fn witness_is_first_in_lexicographic_row_order() {
        let a = m(&["00", "10", "01"]);
        let i2 = BinaryMatrix::identity(2).unwrap();
        let w = contains_configuration(&a, &i2).unwrap();
        assert_eq!(w.row_map, vec![1, 2]);
        assert_eq!(w.column_assignment, vec![0, 1]);
    }

    #[test]
    fn required_column_restricts_embeddings() {
        // A = [I_2 | extra 10 column]; I_2 embeds without column 2, but an
        // embedding using column 2 also exists (columns 2 and 1).
        let a = m(&["101", "010"]);
        let i2 = BinaryMatrix::identity(2).unwrap();
        let w = contains_configuration_using(&a, &i2, 2).expect("usable");
        assert!(w.validate(&a, &i2));
        assert!(w.column_assignment.contains(&2));

        // The all-ones column can never participate in an I_2 embedding.
        let a = m(&["101", "011"]);
        assert!(contains_configuration(&a, &i2).is_some());
        assert!(contains_configuration_using(&a, &i2, 2).is_none());
    }

    #[test]
    fn complement_duality() {
        let a = m(&["1100", "0110", "1011"]);
        let f = m(&["10", "01"]);
        assert_eq!(
            contains_configuration(&a, &f).is_some(),
            contains_configuration(&a.complement(), &f.complement()).is_some()
        );
    }

    #[test]
    fn row_pair_patterns_of_small_configs() {
        // Columns (1,1,0) and (1,0,1).
        let f3 = m(&["11", "10", "01"]);
        let pats = row_pair_patterns(&f3).unwrap();
        assert_eq!(pats.len(), 3);
        let p01 = pats.iter().find(|p| p.rows == (0, 1)).unwrap();
        assert!(p01.lacks_zero_zero && !p01.lacks_one_one && p01.lacks_identity);
        let p12 = pats.iter().find(|p| p.rows == (1, 2)).unwrap();
        assert!(p12.lacks_zero_zero && p12.lacks_one_one && !p12.lacks_identity);

        assert!(matches!(
            row_pair_patterns(&m(&["101"])),
            Err(ContainmentError::TooFewRows { num_rows: 1 })
        ));
    }

    #[test]
    fn hypothesis_on_two_rowed_families() {
        // The three 2-rowed matrices that together satisfy all three
        // conditions while none does alone.
        let g1 = m(&["010", "001"]);
        let g2 = m(&["011", "001"]);
        let g3 = m(&["011", "101"]);
        let family = vec![g1.clone(), g2.clone(), g3.clone()];
        assert!(hypothesis_check(&family, 2).unwrap());
        // K_2 shows every 2-rowed pattern, so nothing is lacking.
        let k2 = BinaryMatrix::all_columns(2).unwrap();
        assert!(!hypothesis_check(&[k2], 2).unwrap());

        assert!(matches!(
            hypothesis_check(&[g1], 3),
            Err(ContainmentError::HeightMismatch { .. })
        ));
        let dup = m(&["00", "11"]);
        assert!(matches!(
            hypothesis_check(&[dup], 2),
            Err(ContainmentError::NotSimple { index: 0 })
        ));
    }

    #[test]
    fn complementary_pairs_counts() {
        // k = 4: three balanced pairs of weight-2 columns.
        let k42 = BinaryMatrix::columns_of_weight(4, 2).unwrap();
        let report = missing_complementary_pairs(&k42).unwrap();
        assert_eq!(report.pairs.len(), 3);
        assert!(report.missing.is_empty());
        assert!(covers_all_pairs_certificate(&k42).unwrap());

        // I_4 has only weight-1 columns: nothing covered.
        let i4 = BinaryMatrix::identity(4).unwrap();
        let report = missing_complementary_pairs(&i4).unwrap();
        assert_eq!(report.missing.len(), 3);

        // k = 3: pairs are (weight-2, weight-1); F_3 covers 2 of 3.
        let f3 = m(&["11", "10", "01"]);
        let report = missing_complementary_pairs(&f3).unwrap();
        assert_eq!(report.pairs.len(), 3);
        assert_eq!(report.covered.len(), 2);
        assert_eq!(report.missing.len(), 1);
        let (rep, partner) = report.missing[0];
        assert_eq!(rep.weight(), 2);
        assert_eq!(rep.complement(), partner);
    }

    #[test]
    fn pair_report_representative_convention() {
        let k42 = BinaryMatrix::columns_of_weight(4, 2).unwrap();
        let report = missing_complementary_pairs(&k42).unwrap();
        for (rep, partner) in &report.pairs {
            assert!(rep.get(0), "even k: representative has a 1 on top");
            assert_eq!(rep.complement(), *partner);
        }
        let k53 = BinaryMatrix::columns_of_weight(5, 3).unwrap();
        let report = missing_complementary_pairs(&k53).unwrap();
        assert_eq!(report.pairs.len(), 10);
        for (rep, partner) in &report.pairs {
            assert_eq!(rep.weight(), 3);
            assert_eq!(partner.weight(), 2);
        }
    }
}
