//! Column-major (0,1)-matrices with at most 64 rows.
//!
//! A matrix is stored as one `u64` bitmask per column, with bit `i` holding
//! row `i`. That covers every matrix this crate works with (the interesting
//! instances have well under 20 rows) while keeping column operations at
//! word speed. All indices in this API are 0-based; user-facing output
//! (witnesses, CLI records) shifts to 1-based at the printing layer.
//!
//! Column order is significant for storage and round-tripping but never for
//! semantics: two matrices are "the same configuration source" when their
//! column multisets agree, which is what [`BinaryMatrix::eq_columns`]
//! checks. Generators in this crate emit columns in a canonical order —
//! ascending weight, and within a weight class the column whose 1s sit in
//! earlier rows first — so generated output is deterministic and diffs are
//! stable.

use std::fmt;

use thiserror::Error;

/// Hard cap on matrix height: one machine word per column.
pub const MAX_ROWS: usize = 64;

/// Errors from matrix construction, indexing, and text parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix height {0} exceeds the supported maximum of {MAX_ROWS} rows")]
    TooManyRows(usize),
    #[error("row index {index} out of range for a matrix with {num_rows} rows")]
    RowIndexOutOfRange { index: usize, num_rows: usize },
    #[error("duplicate row index {0} in row selection")]
    DuplicateRowIndex(usize),
    #[error("column has bits set beyond row {num_rows}")]
    ColumnOutOfRange { num_rows: usize },
    #[error("stacking {top} and {bottom} rows exceeds the {MAX_ROWS}-row limit")]
    ProductTooTall { top: usize, bottom: usize },
    #[error("malformed header line {0:?}: expected `<rows> <cols>`")]
    MalformedHeader(String),
    #[error("row {line} has {found} characters, expected {expected}")]
    RaggedRow { line: usize, expected: usize, found: usize },
    #[error("row {line} contains {found:?}; only '0' and '1' are allowed")]
    BadCharacter { line: usize, found: char },
    #[error("matrix text must end with a newline")]
    MissingTrailingNewline,
    #[error("unexpected trailing data after row {0}")]
    TrailingData(usize),
    #[error("cannot concatenate a {left}-row matrix with a {right}-row matrix")]
    HeightMismatch { left: usize, right: usize },
    #[error("matrix is too large to materialize: {0}")]
    TooLarge(String),
}

/// All-ones mask over the low `num_rows` bits.
#[inline]
pub(crate) fn row_mask(num_rows: usize) -> u64 {
    debug_assert!(num_rows <= MAX_ROWS);
    if num_rows == MAX_ROWS {
        u64::MAX
    } else {
        (1u64 << num_rows) - 1
    }
}

/// A single column of a matrix with a fixed number of rows.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Column {
    bits: u64,
    num_rows: usize,
}

impl Column {
    pub fn new(bits: u64, num_rows: usize) -> Result<Self, MatrixError> {
        if num_rows > MAX_ROWS {
            return Err(MatrixError::TooManyRows(num_rows));
        }
        if bits & !row_mask(num_rows) != 0 {
            return Err(MatrixError::ColumnOutOfRange { num_rows });
        }
        Ok(Column { bits, num_rows })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn get(&self, row: usize) -> bool {
        assert!(row < self.num_rows, "row {row} out of range");
        self.bits >> row & 1 == 1
    }

    /// Number of 1-entries (the column sum).
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Number of adjacent row pairs `(i, i+1)` whose entries differ.
    pub fn transitions(&self) -> u32 {
        if self.num_rows < 2 {
            return 0;
        }
        ((self.bits ^ (self.bits >> 1)) & row_mask(self.num_rows - 1)).count_ones()
    }

    pub fn complement(&self) -> Column {
        Column {
            bits: !self.bits & row_mask(self.num_rows),
            num_rows: self.num_rows,
        }
    }

    /// The column's bits read top row first, as an integer. Orders columns
    /// the way their printed strings order lexicographically.
    pub fn lex_value(&self) -> u64 {
        lex_value(self.bits, self.num_rows)
    }

    /// Canonical generator order: ascending weight, then 1s in earlier rows
    /// first within a weight class.
    pub fn canonical_cmp(&self, other: &Column) -> std::cmp::Ordering {
        debug_assert_eq!(self.num_rows, other.num_rows);
        canonical_key(self.bits, self.num_rows).cmp(&canonical_key(other.bits, other.num_rows))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.num_rows {
            write!(f, "{}", if self.get(row) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

#[inline]
fn lex_value(bits: u64, num_rows: usize) -> u64 {
    if num_rows == 0 {
        0
    } else {
        bits.reverse_bits() >> (MAX_ROWS - num_rows)
    }
}

/// Sort key for the canonical generator order (see module docs).
#[inline]
pub(crate) fn canonical_key(bits: u64, num_rows: usize) -> (u32, u64) {
    // Flipping the lex value turns "larger lex value first" into an
    // ascending key, so a plain tuple sort works.
    (
        bits.count_ones(),
        lex_value(bits, num_rows) ^ row_mask(num_rows),
    )
}

/// A (0,1)-matrix stored as a list of column bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryMatrix {
    num_rows: usize,
    cols: Vec<u64>,
}

impl BinaryMatrix {
    /// Matrix with `num_rows` rows and no columns.
    pub fn new(num_rows: usize) -> Result<Self, MatrixError> {
        if num_rows > MAX_ROWS {
            return Err(MatrixError::TooManyRows(num_rows));
        }
        Ok(BinaryMatrix {
            num_rows,
            cols: Vec::new(),
        })
    }

    pub fn from_columns(num_rows: usize, cols: Vec<u64>) -> Result<Self, MatrixError> {
        if num_rows > MAX_ROWS {
            return Err(MatrixError::TooManyRows(num_rows));
        }
        if cols.iter().any(|&c| c & !row_mask(num_rows) != 0) {
            return Err(MatrixError::ColumnOutOfRange { num_rows });
        }
        Ok(BinaryMatrix { num_rows, cols })
    }

    /// Build from row strings like `["110", "101"]`, top row first.
    pub fn from_rows(rows: &[&str]) -> Result<Self, MatrixError> {
        let num_rows = rows.len();
        if num_rows > MAX_ROWS {
            return Err(MatrixError::TooManyRows(num_rows));
        }
        let num_cols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![0u64; num_cols];
        for (i, row) in rows.iter().enumerate() {
            if row.chars().count() != num_cols {
                return Err(MatrixError::RaggedRow {
                    line: i + 1,
                    expected: num_cols,
                    found: row.chars().count(),
                });
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => cols[j] |= 1u64 << i,
                    _ => {
                        return Err(MatrixError::BadCharacter {
                            line: i + 1,
                            found: ch,
                        })
                    }
                }
            }
        }
        Ok(BinaryMatrix { num_rows, cols })
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.num_rows, "row {row} out of range");
        self.cols[col] >> row & 1 == 1
    }

    pub fn col_bits(&self, col: usize) -> u64 {
        self.cols[col]
    }

    pub fn column(&self, col: usize) -> Column {
        Column {
            bits: self.cols[col],
            num_rows: self.num_rows,
        }
    }

    pub fn columns(&self) -> impl Iterator<Item = Column> + '_ {
        let num_rows = self.num_rows;
        self.cols.iter().map(move |&bits| Column { bits, num_rows })
    }

    pub fn push_column(&mut self, bits: u64) -> Result<(), MatrixError> {
        if bits & !row_mask(self.num_rows) != 0 {
            return Err(MatrixError::ColumnOutOfRange {
                num_rows: self.num_rows,
            });
        }
        self.cols.push(bits);
        Ok(())
    }

    pub fn pop_column(&mut self) -> Option<u64> {
        self.cols.pop()
    }

    /// True when no column repeats.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.cols.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Entry-wise 0/1 swap.
    pub fn complement(&self) -> BinaryMatrix {
        let mask = row_mask(self.num_rows);
        BinaryMatrix {
            num_rows: self.num_rows,
            cols: self.cols.iter().map(|&c| !c & mask).collect(),
        }
    }

    /// Stack every column of `self` on top of every column of `bottom`:
    /// the result has one column per pairing, `self`'s rows first.
    pub fn product(&self, bottom: &BinaryMatrix) -> Result<BinaryMatrix, MatrixError> {
        let top_rows = self.num_rows;
        let total = top_rows + bottom.num_rows;
        if total > MAX_ROWS {
            return Err(MatrixError::ProductTooTall {
                top: top_rows,
                bottom: bottom.num_rows,
            });
        }
        let mut cols = Vec::with_capacity(self.cols.len() * bottom.cols.len());
        for &a in &self.cols {
            for &b in &bottom.cols {
                cols.push(a | b << top_rows);
            }
        }
        Ok(BinaryMatrix {
            num_rows: total,
            cols,
        })
    }

    /// Keep the given rows, in the given order, every column retained.
    pub fn restrict_rows(&self, rows: &[usize]) -> Result<BinaryMatrix, MatrixError> {
        let mut seen = 0u64;
        for &r in rows {
            if r >= self.num_rows {
                return Err(MatrixError::RowIndexOutOfRange {
                    index: r,
                    num_rows: self.num_rows,
                });
            }
            if seen >> r & 1 == 1 {
                return Err(MatrixError::DuplicateRowIndex(r));
            }
            seen |= 1u64 << r;
        }
        let cols = self
            .cols
            .iter()
            .map(|&c| {
                rows.iter()
                    .enumerate()
                    .fold(0u64, |acc, (new_i, &old_i)| acc | (c >> old_i & 1) << new_i)
            })
            .collect();
        Ok(BinaryMatrix {
            num_rows: rows.len(),
            cols,
        })
    }

    /// Sort columns into the canonical generator order.
    pub fn canonicalize(&mut self) {
        let num_rows = self.num_rows;
        self.cols.sort_by_key(|&c| canonical_key(c, num_rows));
    }

    pub fn canonicalized(mut self) -> BinaryMatrix {
        self.canonicalize();
        self
    }

    /// Equality as column multisets: same rows, same columns with the same
    /// multiplicities, storage order ignored.
    pub fn eq_columns(&self, other: &BinaryMatrix) -> bool {
        if self.num_rows != other.num_rows || self.cols.len() != other.cols.len() {
            return false;
        }
        let mut a = self.cols.clone();
        let mut b = other.cols.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Append the columns of `other` (same height) after `self`'s.
    pub fn concat(&self, other: &BinaryMatrix) -> Result<BinaryMatrix, MatrixError> {
        if self.num_rows != other.num_rows {
            return Err(MatrixError::HeightMismatch {
                left: self.num_rows,
                right: other.num_rows,
            });
        }
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        Ok(BinaryMatrix {
            num_rows: self.num_rows,
            cols,
        })
    }

    // ---- standard matrices ----

    /// `k`-by-`k` identity.
    pub fn identity(k: usize) -> Result<Self, MatrixError> {
        if k > MAX_ROWS {
            return Err(MatrixError::TooManyRows(k));
        }
        Ok(BinaryMatrix {
            num_rows: k,
            cols: (0..k).map(|j| 1u64 << j).collect(),
        })
    }

    /// Complement of the identity: all columns of weight `k - 1`.
    pub fn identity_complement(k: usize) -> Result<Self, MatrixError> {
        Ok(Self::identity(k)?.complement().canonicalized())
    }

    /// Upper-triangular matrix: column `j` has 1s in rows `0..=j`.
    pub fn triangular(k: usize) -> Result<Self, MatrixError> {
        if k > MAX_ROWS {
            return Err(MatrixError::TooManyRows(k));
        }
        Ok(BinaryMatrix {
            num_rows: k,
            cols: (0..k).map(|j| row_mask(j + 1)).collect(),
        })
    }

    /// All `2^k` distinct columns on `k` rows, canonical order.
    pub fn all_columns(k: usize) -> Result<Self, MatrixError> {
        if k > 20 {
            return Err(MatrixError::TooLarge(format!(
                "2^{k} columns; the complete column matrix is capped at 20 rows"
            )));
        }
        let mut cols: Vec<u64> = (0..1u64 << k).collect();
        cols.sort_by_key(|&c| canonical_key(c, k));
        Ok(BinaryMatrix { num_rows: k, cols })
    }

    /// All columns on `k` rows with exactly `s` ones, canonical order.
    pub fn columns_of_weight(k: usize, s: usize) -> Result<Self, MatrixError> {
        if k > MAX_ROWS {
            return Err(MatrixError::TooManyRows(k));
        }
        if s > k {
            return Err(MatrixError::ColumnOutOfRange { num_rows: k });
        }
        let mut cols = Vec::new();
        let mut too_many = false;
        for_each_column_of_weight(k, s, |c| {
            if cols.len() >= 1 << 24 {
                too_many = true;
            } else {
                cols.push(c);
            }
        });
        if too_many {
            return Err(MatrixError::TooLarge(format!(
                "more than 2^24 columns of weight {s} on {k} rows"
            )));
        }
        cols.sort_by_key(|&c| canonical_key(c, k));
        Ok(BinaryMatrix { num_rows: k, cols })
    }

    /// Single all-zero column on `k` rows.
    pub fn zeros(k: usize) -> Result<Self, MatrixError> {
        Self::from_columns(k, vec![0])
    }

    /// Single all-one column on `k` rows.
    pub fn ones(k: usize) -> Result<Self, MatrixError> {
        if k > MAX_ROWS {
            return Err(MatrixError::TooManyRows(k));
        }
        Ok(BinaryMatrix {
            num_rows: k,
            cols: vec![row_mask(k)],
        })
    }

    /// Single column of `k` ones stacked on `l` zeros.
    pub fn ones_over_zeros(k: usize, l: usize) -> Result<Self, MatrixError> {
        if k + l > MAX_ROWS {
            return Err(MatrixError::TooManyRows(k + l));
        }
        Ok(BinaryMatrix {
            num_rows: k + l,
            cols: vec![row_mask(k)],
        })
    }

    // ---- text format ----

    /// Serialize: header `<rows> <cols>`, then one line per row, trailing
    /// newline. Inverse of [`BinaryMatrix::parse_bm`].
    pub fn to_bm(&self) -> String {
        let mut out = format!("{} {}\n", self.num_rows, self.cols.len());
        for row in 0..self.num_rows {
            for &c in &self.cols {
                out.push(if c >> row & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parse the text format produced by [`BinaryMatrix::to_bm`].
    pub fn parse_bm(text: &str) -> Result<Self, MatrixError> {
        if !text.ends_with('\n') {
            return Err(MatrixError::MissingTrailingNewline);
        }
        let mut lines = text.split('\n');
        let header = lines.next().unwrap_or("");
        let mut parts = header.split_ascii_whitespace();
        let (m, n) = match (parts.next(), parts.next(), parts.next()) {
            (Some(m), Some(n), None) => {
                let m: usize = m
                    .parse()
                    .map_err(|_| MatrixError::MalformedHeader(header.to_string()))?;
                let n: usize = n
                    .parse()
                    .map_err(|_| MatrixError::MalformedHeader(header.to_string()))?;
                (m, n)
            }
            _ => return Err(MatrixError::MalformedHeader(header.to_string())),
        };
        if m > MAX_ROWS {
            return Err(MatrixError::TooManyRows(m));
        }
        let mut cols = vec![0u64; n];
        for i in 0..m {
            let line = lines.next().ok_or(MatrixError::RaggedRow {
                line: i + 1,
                expected: n,
                found: 0,
            })?;
            if line.chars().count() != n {
                return Err(MatrixError::RaggedRow {
                    line: i + 1,
                    expected: n,
                    found: line.chars().count(),
                });
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => cols[j] |= 1u64 << i,
                    _ => {
                        return Err(MatrixError::BadCharacter {
                            line: i + 1,
                            found: ch,
                        })
                    }
                }
            }
        }
        // After m rows the final newline leaves exactly one empty fragment;
        // anything else is junk past the end of the matrix.
        match lines.next() {
            Some("") => {}
            _ => return Err(MatrixError::TrailingData(m)),
        }
        if lines.next().is_some() {
            return Err(MatrixError::TrailingData(m));
        }
        Ok(BinaryMatrix { num_rows: m, cols })
    }

    /// Parse an inline literal like `"110/101/011"`, rows separated by `/`.
    pub fn parse_inline(text: &str) -> Result<Self, MatrixError> {
        let rows: Vec<&str> = text.split('/').collect();
        Self::from_rows(&rows)
    }
}

impl fmt::Display for BinaryMatrix {
    /// Rows only, one line each, no header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.num_rows {
            for &c in &self.cols {
                write!(f, "{}", if c >> row & 1 == 1 { '1' } else { '0' })?;
            }
            if row + 1 < self.num_rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Call `visit` for every `k`-row column bitmask with exactly `s` ones, in
/// ascending integer order (Gosper's hack).
pub(crate) fn for_each_column_of_weight(k: usize, s: usize, mut visit: impl FnMut(u64)) {
    debug_assert!(k <= MAX_ROWS && s <= k);
    if s == 0 {
        visit(0);
        return;
    }
    if s == k {
        visit(row_mask(k));
        return;
    }
    let last = row_mask(s) << (k - s);
    let mut v = row_mask(s);
    loop {
        visit(v);
        if v == last {
            return;
        }
        // Gosper's hack: smallest value above v with the same popcount.
        let t = v | (v - 1);
        let lowest_unset = !t & (!t).wrapping_neg();
        v = (t + 1) | ((lowest_unset - 1) >> (v.trailing_zeros() + 1));
    }
}
