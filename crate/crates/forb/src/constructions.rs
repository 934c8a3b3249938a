//! Generators for the matrix families and counting functions the rest of
//! the crate studies: the count `f(m, k)` with its closed forms, the
//! transition-bounded matrix `A(k)`, the six boundary configurations, the
//! small named matrices, identity product powers, the triangular pair, and
//! the constant-weight-code constructions.
//!
//! Everything here is a pure generator. Matrices that exist as displayed
//! literals (boundary blocks, named matrices) are embedded bit for bit and
//! keep their displayed column order; set-like constructions (`A(k)`,
//! codes) are returned in canonical column order.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use thiserror::Error;

use crate::matrix::{for_each_column_of_weight, BinaryMatrix, MatrixError};

/// Largest `m` or `k` the counting functions accept. The values grow like
/// `m^(k-2)`, so anything near this limit is already astronomically large;
/// the cap only guards against unbounded loops on nonsense input.
const MAX_COUNT_ARG: usize = 1 << 16;

/// Columns a single generated matrix may hold before we refuse.
const MAX_GENERATED_COLS: usize = 1 << 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{op}: argument out of domain: {detail}")]
    OutOfDomain { op: &'static str, detail: String },
    #[error("unknown named matrix tag `{0}`")]
    UnknownTag(String),
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("malformed construction spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },
    #[error("construction `{name}` requires parameter `{param}`")]
    MissingParam { name: String, param: &'static str },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn out_of_domain(op: &'static str, detail: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfDomain {
        op,
        detail: detail.into(),
    }
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        // Multiply before dividing: the running value after i steps is
        // C(n, i+1) scaled along the way, so each division is exact.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn check_count_args(op: &'static str, m: usize, k: usize) -> Result<(), ConstructionError> {
    if m < 2 || k < 2 {
        return Err(out_of_domain(op, format!("need m ≥ 2 and k ≥ 2, got m={m}, k={k}")));
    }
    if m > MAX_COUNT_ARG || k > MAX_COUNT_ARG {
        return Err(out_of_domain(
            op,
            format!("m and k are capped at {MAX_COUNT_ARG}, got m={m}, k={k}"),
        ));
    }
    Ok(())
}

fn f_memo() -> &'static Mutex<HashMap<(usize, usize), BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The count `f(m, k)`, defined by the recurrence
/// `f(m, k) = f(m-1, k) + f(m-1, k-1)` with `f(m, 2) = 2` and `f(2, k) = 4`
/// for `k > 2`.
///
/// The two-row base is 4 because a 2-rowed simple matrix has at most four
/// columns and the closed form `2·Σ_{i≤k-2} C(1, i)` evaluates to 4; a base
/// of 2 would contradict the recurrence everywhere above it.
///
/// Computed by the recurrence itself (one dynamic-programming row per value
/// of `m`), so that comparing against [`f_closed`] is a genuine check and
/// not a tautology. Results are memoized; `m` and `k` must be at least 2.
pub fn f(m: usize, k: usize) -> Result<BigUint, ConstructionError> {
    check_count_args("f", m, k)?;
    if let Some(v) = f_memo().lock().unwrap().get(&(m, k)) {
        return Ok(v.clone());
    }
    // prev[j - 2] holds f(row, j) for j = 2..=k, starting at row = 2.
    let mut prev: Vec<BigUint> = (2..=k)
        .map(|j| BigUint::from(if j == 2 { 2u32 } else { 4u32 }))
        .collect();
    for _row in 3..=m {
        let mut cur = Vec::with_capacity(prev.len());
        cur.push(BigUint::from(2u32));
        for j in 1..prev.len() {
            cur.push(&prev[j] + &prev[j - 1]);
        }
        prev = cur;
    }
    let value = prev[k - 2].clone();
    f_memo().lock().unwrap().insert((m, k), value.clone());
    Ok(value)
}

/// The two closed forms of `f(m, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    /// `2 · Σ_{i=0}^{k-2} C(m-1, i)`
    pub doubled_sum: BigUint,
    /// `C(m-1, k-2) + Σ_{i=0}^{k-2} C(m, i)`
    pub mixed: BigUint,
}

/// Evaluate both closed forms of `f(m, k)`. They agree with the recurrence
/// on the whole domain; tests check that, this function just evaluates.
pub fn f_closed(m: usize, k: usize) -> Result<ClosedForms, ConstructionError> {
    check_count_args("f_closed", m, k)?;
    let mut doubled = BigUint::ZERO;
    let mut tail = BigUint::ZERO;
    for i in 0..=k - 2 {
        doubled += binomial(m - 1, i);
        tail += binomial(m, i);
    }
    Ok(ClosedForms {
        doubled_sum: doubled * 2u32,
        mixed: binomial(m - 1, k - 2) + tail,
    })
}

/// The alternating-step form `2·(C(m, k-2) + C(m, k-4) + …)`, descending in
/// steps of two down to `C(m, 1)` or `C(m, 0)`.
pub fn f_alternating(m: usize, k: usize) -> Result<BigUint, ConstructionError> {
    check_count_args("f_alternating", m, k)?;
    let mut acc = BigUint::ZERO;
    let mut j = k - 2;
    loop {
        acc += binomial(m, j);
        if j < 2 {
            break;
        }
        j -= 2;
    }
    Ok(acc * 2u32)
}

/// The transition-bounded matrix `A(k)` on `m` rows: every `m`-bit column
/// with at most `k-2` transitions (adjacent-row disagreements), in
/// canonical order.
///
/// Generated output-sensitively: choose `t ≤ k-2` of the `m-1` gaps as
/// transition positions and one of two starting phases. Each column arises
/// exactly once (its phase is its first bit, its gap set its transition
/// set), so the column count is `2·Σ_{t≤k-2} C(m-1, t) = f(m, k)` — a fact
/// the tests confirm against an independent filter of all `2^m` columns.
pub fn a_k(m: usize, k: usize) -> Result<BinaryMatrix, ConstructionError> {
    check_count_args("A_k", m, k)?;
    let expected = f(m, k)?;
    if expected > BigUint::from(MAX_GENERATED_COLS) {
        return Err(ConstructionError::Matrix(MatrixError::TooLarge(format!(
            "A({k}) on {m} rows has {expected} columns"
        ))));
    }
    let gaps = m - 1;
    let mut cols = Vec::new();
    for t in 0..=(k - 2).min(gaps) {
        for_each_column_of_weight(gaps, t, |gap_mask| {
            for phase in 0..2u64 {
                let mut bits = phase;
                let mut cur = phase;
                for r in 1..m {
                    cur ^= gap_mask >> (r - 1) & 1;
                    bits |= cur << r;
                }
                cols.push(bits);
            }
        });
    }
    let mut a = BinaryMatrix::from_columns(m, cols)?;
    a.canonicalize();
    Ok(a)
}

/// Display literals for the six boundary configurations: the base blocks
/// whose product with `K_{k-c}` gives the `k`-rowed boundary configuration
/// `F_{i,k}`, and the minimal `k` at which each is defined.
const BOUNDARY_BLOCKS: [(&[&[&str]], usize); 6] = [
    (&[&["1110", "1001", "0100"]], 3),
    (&[&["10", "01"], &["011", "001"]], 4),
    (
        &[&["00001001", "00010110", "01100111", "10111011"]],
        4,
    ),
    (
        &[&["00110", "00001", "01011"], &["101", "011"]],
        5,
    ),
    (
        &[&[
            "111000000111111",
            "000111111111111",
            "000000111000111",
            "010010010010010",
            "001001001001001",
        ]],
        5,
    ),
    (
        &[&["010", "001"], &["101", "011"], &["011", "001"]],
        6,
    ),
];

/// The smallest height at which boundary configuration `i` is defined.
pub fn boundary_min_k(i: usize) -> Result<usize, ConstructionError> {
    if !(1..=6).contains(&i) {
        return Err(out_of_domain(
            "boundary_min_k",
            format!("family index must be 1..=6, got {i}"),
        ));
    }
    Ok(BOUNDARY_BLOCKS[i - 1].1)
}

/// The `k`-rowed boundary configuration `F_{i,k}` for `i ∈ 1..=6`: the
/// literal base blocks multiplied together and with `K_{k-c}`, where `c` is
/// the total base height. Column order follows the product of the displayed
/// blocks. Minimal heights: `F_1` needs `k ≥ 3`; `F_2`, `F_3` need `k ≥ 4`;
/// `F_4`, `F_5` need `k ≥ 5`; `F_6` needs `k ≥ 6`.
pub fn boundary_family(i: usize, k: usize) -> Result<BinaryMatrix, ConstructionError> {
    if !(1..=6).contains(&i) {
        return Err(out_of_domain("boundary_family", format!("family index must be 1..=6, got {i}")));
    }
    let (blocks, min_k) = BOUNDARY_BLOCKS[i - 1];
    if k < min_k {
        return Err(out_of_domain(
            "boundary_family",
            format!("family {i} is defined for k ≥ {min_k}, got k={k}"),
        ));
    }
    let mut acc: Option<BinaryMatrix> = None;
    for rows in blocks {
        let block = BinaryMatrix::from_rows(rows).expect("embedded block literal");
        acc = Some(match acc {
            None => block,
            Some(a) => a.product(&block)?,
        });
    }
    let base = acc.expect("at least one block per family");
    let tail = BinaryMatrix::all_columns(k - min_k)?;
    Ok(base.product(&tail)?)
}

/// Tags for the small matrices that exist only as displayed literals.
///
/// The names `F_5` and `F_6` are used in the literature for both a 3-rowed
/// and a 4-rowed matrix; the tags keep the height explicit instead of
/// guessing a canonical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedTag {
    F3,
    F4,
    F5ThreeRow,
    F5FourRow,
    F6FourRow,
    Min5A,
    Min5B,
    Min5C,
    Min5D,
    Min6A,
    Min6B,
    Min6C,
    Min6D,
}

impl NamedTag {
    pub const ALL: [NamedTag; 13] = [
        NamedTag::F3,
        NamedTag::F4,
        NamedTag::F5ThreeRow,
        NamedTag::F5FourRow,
        NamedTag::F6FourRow,
        NamedTag::Min5A,
        NamedTag::Min5B,
        NamedTag::Min5C,
        NamedTag::Min5D,
        NamedTag::Min6A,
        NamedTag::Min6B,
        NamedTag::Min6C,
        NamedTag::Min6D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedTag::F3 => "F_3",
            NamedTag::F4 => "F_4",
            NamedTag::F5ThreeRow => "F_5_3row",
            NamedTag::F5FourRow => "F_5_4row",
            NamedTag::F6FourRow => "F_6_4row",
            NamedTag::Min5A => "min5_a",
            NamedTag::Min5B => "min5_b",
            NamedTag::Min5C => "min5_c",
            NamedTag::Min5D => "min5_d",
            NamedTag::Min6A => "min6_a",
            NamedTag::Min6B => "min6_b",
            NamedTag::Min6C => "min6_c",
            NamedTag::Min6D => "min6_d",
        }
    }
}

impl FromStr for NamedTag {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| ConstructionError::UnknownTag(s.to_string()))
    }
}

/// The literal rows of each named matrix.
///
/// The `min5_*` matrices are 5×10 and the `min6_*` matrices 6×10; each
/// covers every balanced complementary pair of its height with exactly one
/// representative per pair outside the fixed common block — properties the
/// test suite re-derives rather than trusts.
fn named_rows(tag: NamedTag) -> &'static [&'static str] {
    match tag {
        NamedTag::F3 => &["11", "10", "01"],
        NamedTag::F4 => &["111", "100", "010"],
        NamedTag::F5ThreeRow => &["110", "101", "000"],
        NamedTag::F5FourRow => &["110", "101", "011", "000"],
        NamedTag::F6FourRow => &["100", "010", "001", "111"],
        NamedTag::Min5A => &[
            "0000000111",
            "0000111000",
            "0111001100",
            "1011111111",
            "1101010001",
        ],
        NamedTag::Min5B => &[
            "0000000110",
            "0000111001",
            "0111001101",
            "1011111110",
            "1101010000",
        ],
        NamedTag::Min5C => &[
            "0000000100",
            "0000111011",
            "0111001111",
            "1011111100",
            "1101010001",
        ],
        NamedTag::Min5D => &[
            "0000000101",
            "0000111010",
            "0111001110",
            "1011111101",
            "1101010011",
        ],
        NamedTag::Min6A => &[
            "0000000111",
            "0000111000",
            "0111001100",
            "1011111111",
            "1110100010",
            "1101010001",
        ],
        NamedTag::Min6B => &[
            "0000000110",
            "0000111001",
            "0111001101",
            "1011111110",
            "1110100011",
            "1101010000",
        ],
        NamedTag::Min6C => &[
            "0000000110",
            "0000111001",
            "0111001101",
            "1011111110",
            "1110100000",
            "1101010011",
        ],
        NamedTag::Min6D => &[
            "0000000100",
            "0000111011",
            "0111001111",
            "1011111100",
            "1110100010",
            "1101010001",
        ],
    }
}

/// Build the named literal matrix for `tag`, in its displayed column order.
pub fn named(tag: NamedTag) -> BinaryMatrix {
    BinaryMatrix::from_rows(named_rows(tag)).expect("embedded literal")
}

/// The `(k-2)`-fold identity product `I_{b_1} × … × I_{b_{k-2}}` on `m`
/// rows. Block sizes are as equal as possible, with the remainder of
/// `m / (k-2)` spread one row at a time over the leading blocks. Requires
/// `m ≥ k-2 ≥ 1`.
pub fn product_power_identity(m: usize, k: usize) -> Result<BinaryMatrix, ConstructionError> {
    if k < 3 || m < k - 2 {
        return Err(out_of_domain(
            "product_power_identity",
            format!("need m ≥ k-2 ≥ 1, got m={m}, k={k}"),
        ));
    }
    let factors = k - 2;
    let base = m / factors;
    let remainder = m % factors;
    let mut total_cols = 1usize;
    for j in 0..factors {
        let b = base + usize::from(j < remainder);
        total_cols = total_cols
            .checked_mul(b)
            .filter(|&c| c <= MAX_GENERATED_COLS)
            .ok_or_else(|| {
                ConstructionError::Matrix(MatrixError::TooLarge(format!(
                    "identity product power on {m} rows with {factors} blocks"
                )))
            })?;
    }
    let mut acc: Option<BinaryMatrix> = None;
    for j in 0..factors {
        let block = BinaryMatrix::identity(base + usize::from(j < remainder))?;
        acc = Some(match acc {
            None => block,
            Some(a) => a.product(&block)?,
        });
    }
    Ok(acc.expect("k ≥ 3 gives at least one factor"))
}

/// The `m × 2m` matrix `[T_m | T_m^c]`: every top-run column together with
/// every bottom-run column. Simple for all `m ≥ 1` (top runs all start at
/// the first row; bottom runs never reach it).
pub fn triangular_pair(m: usize) -> Result<BinaryMatrix, ConstructionError> {
    if m < 1 {
        return Err(out_of_domain("triangular_pair", "need m ≥ 1".to_string()));
    }
    let t = BinaryMatrix::triangular(m)?;
    let tc = t.complement();
    Ok(t.concat(&tc)?)
}

/// An `m × 2m` laminar witness avoiding the 3-rowed configuration with
/// columns (1,1,0) and (1,0,1): the zero column, the identity, the
/// bottom-run columns of lengths `2..m-1`, and the all-ones column.
///
/// Any two of these columns are nested or disjoint as subsets of the rows,
/// and a laminar family can never show the crossing pattern that
/// configuration needs: two columns sharing a 1 on one row while each has a
/// private 1 on another. The run block stops at length `m-1` and skips
/// length 1 because the full run duplicates the all-ones column and the
/// length-1 run duplicates the last identity column; with the zero column
/// that makes exactly `2m` distinct columns. Requires `m ≥ 2`.
pub fn thm_f1_extremal(m: usize) -> Result<BinaryMatrix, ConstructionError> {
    if m < 2 {
        return Err(out_of_domain("thm_f1_extremal", "need m ≥ 2".to_string()));
    }
    let mut cols = vec![0u64];
    for r in 0..m {
        cols.push(1 << r);
    }
    for len in 2..m {
        // Bottom run of `len` ones: rows m-len .. m-1.
        let run = ((1u64 << len) - 1) << (m - len);
        cols.push(run);
    }
    cols.push(crate::matrix::row_mask(m));
    Ok(BinaryMatrix::from_columns(m, cols)?)
}

/// A constant-weight code as a matrix: all weight-`w` columns `c` on `m`
/// rows with `Σ_i i·c_i ≡ a (mod m)` (positions numbered from 1), for the
/// residue `a` with the largest class, ties broken toward the smallest `a`.
/// Pigeonhole gives at least `C(m, w) / m` columns, and any two distinct
/// codewords differ in at least 4 positions. Requires `1 ≤ w ≤ m`.
pub fn gs_code(m: usize, w: usize) -> Result<BinaryMatrix, ConstructionError> {
    if m < 1 || w < 1 || w > m {
        return Err(out_of_domain(
            "gs_code",
            format!("need 1 ≤ w ≤ m, got m={m}, w={w}"),
        ));
    }
    let candidates = BinaryMatrix::columns_of_weight(m, w)?;
    let residue = |bits: u64| -> usize {
        let mut sum = 0usize;
        for i in 0..m {
            if bits >> i & 1 == 1 {
                sum += i + 1;
            }
        }
        sum % m
    };
    let mut class_sizes = vec![0usize; m];
    for j in 0..candidates.num_cols() {
        class_sizes[residue(candidates.col_bits(j))] += 1;
    }
    let best = (0..m)
        .max_by_key(|&a| (class_sizes[a], std::cmp::Reverse(a)))
        .expect("m ≥ 1");
    let cols: Vec<u64> = (0..candidates.num_cols())
        .map(|j| candidates.col_bits(j))
        .filter(|&bits| residue(bits) == best)
        .collect();
    Ok(BinaryMatrix::from_columns(m, cols)?)
}

/// All columns of weight at most `k-2` together with the weight-`(k-1)`
/// codewords of [`gs_code`]. The code's distance-4 property means no two
/// weight-`(k-1)` columns agree on `k-2` ones, which is exactly what makes
/// this matrix avoid `I_2 × 1_{k-2}`. Requires `m ≥ k ≥ 3`.
pub fn low_weight_plus_code(m: usize, k: usize) -> Result<BinaryMatrix, ConstructionError> {
    if k < 3 || m < k {
        return Err(out_of_domain(
            "low_weight_plus_code",
            format!("need m ≥ k ≥ 3, got m={m}, k={k}"),
        ));
    }
    let mut cols = Vec::new();
    for i in 0..=k - 2 {
        let layer = BinaryMatrix::columns_of_weight(m, i)?;
        cols.extend((0..layer.num_cols()).map(|j| layer.col_bits(j)));
    }
    let code = gs_code(m, k - 1)?;
    cols.extend((0..code.num_cols()).map(|j| code.col_bits(j)));
    Ok(BinaryMatrix::from_columns(m, cols)?)
}

/// A parsed `name:key=val,...` construction request, addressable from the
/// command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

/// What a construction evaluates to: most produce a matrix, `f` produces a
/// count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built {
    Matrix(BinaryMatrix),
    Count(BigUint),
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| ConstructionError::MalformedSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        if name.is_empty() {
            return Err(malformed("empty construction name"));
        }
        let mut params = BTreeMap::new();
        if let Some(rest) = rest {
            for part in rest.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| malformed("parameters must look like key=value"))?;
                if key.is_empty() || value.is_empty() {
                    return Err(malformed("empty parameter key or value"));
                }
                if params.insert(key.to_string(), value.to_string()).is_some() {
                    return Err(malformed("duplicate parameter"));
                }
            }
        }
        Ok(ConstructionSpec {
            name: name.to_string(),
            params,
        })
    }
}

impl ConstructionSpec {
    fn int_param(&self, param: &'static str) -> Result<usize, ConstructionError> {
        let raw = self
            .params
            .get(param)
            .ok_or_else(|| ConstructionError::MissingParam {
                name: self.name.clone(),
                param,
            })?;
        raw.parse().map_err(|_| ConstructionError::MalformedSpec {
            spec: format!("{}:{param}={raw}", self.name),
            reason: format!("`{raw}` is not a non-negative integer"),
        })
    }

    fn str_param(&self, param: &'static str) -> Result<&str, ConstructionError> {
        self.params
            .get(param)
            .map(String::as_str)
            .ok_or_else(|| ConstructionError::MissingParam {
                name: self.name.clone(),
                param,
            })
    }

    fn check_params(&self, allowed: &[&str]) -> Result<(), ConstructionError> {
        for key in self.params.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(ConstructionError::MalformedSpec {
                    spec: format!("{}:{key}=...", self.name),
                    reason: format!("unknown parameter `{key}` for construction `{}`", self.name),
                });
            }
        }
        Ok(())
    }

    /// Evaluate this construction spec. Recognized names: the generators in this module
    /// (`f`, `A_k`, `boundary`, `named`, `product_power`, `triangular_pair`,
    /// `thmF1_extremal`, `gs_code`, `low_weight_plus_code`) plus the stock
    /// shapes `I`, `Ic`, `T`, `K` (parameter `m`) and `Ks` (parameters `m`,
    /// `w`).
    pub fn build(&self) -> Result<Built, ConstructionError> {
        use Built::{Count, Matrix};
        let built = match self.name.as_str() {
            "f" => {
                self.check_params(&["m", "k"])?;
                Count(f(self.int_param("m")?, self.int_param("k")?)?)
            }
            "A_k" => {
                self.check_params(&["m", "k"])?;
                Matrix(a_k(self.int_param("m")?, self.int_param("k")?)?)
            }
            "boundary" => {
                self.check_params(&["i", "k"])?;
                Matrix(boundary_family(self.int_param("i")?, self.int_param("k")?)?)
            }
            "named" => {
                self.check_params(&["tag"])?;
                Matrix(named(self.str_param("tag")?.parse()?))
            }
            "product_power" => {
                self.check_params(&["m", "k"])?;
                Matrix(product_power_identity(
                    self.int_param("m")?,
                    self.int_param("k")?,
                )?)
            }
            "triangular_pair" => {
                self.check_params(&["m"])?;
                Matrix(triangular_pair(self.int_param("m")?)?)
            }
            "thmF1_extremal" => {
                self.check_params(&["m"])?;
                Matrix(thm_f1_extremal(self.int_param("m")?)?)
            }
            "gs_code" => {
                self.check_params(&["m", "w"])?;
                Matrix(gs_code(self.int_param("m")?, self.int_param("w")?)?)
            }
            "low_weight_plus_code" => {
                self.check_params(&["m", "k"])?;
                Matrix(low_weight_plus_code(
                    self.int_param("m")?,
                    self.int_param("k")?,
                )?)
            }
            "I" => {
                self.check_params(&["m"])?;
                Matrix(BinaryMatrix::identity(self.int_param("m")?)?)
            }
            "Ic" => {
                self.check_params(&["m"])?;
                Matrix(BinaryMatrix::identity_complement(self.int_param("m")?)?)
            }
            "T" => {
                self.check_params(&["m"])?;
                Matrix(BinaryMatrix::triangular(self.int_param("m")?)?)
            }
            "K" => {
                self.check_params(&["m"])?;
                Matrix(BinaryMatrix::all_columns(self.int_param("m")?)?)
            }
            "Ks" => {
                self.check_params(&["m", "w"])?;
                Matrix(BinaryMatrix::columns_of_weight(
                    self.int_param("m")?,
                    self.int_param("w")?,
                )?)
            }
            other => return Err(ConstructionError::UnknownConstruction(other.to_string())),
        };
        Ok(built)
    }
}
