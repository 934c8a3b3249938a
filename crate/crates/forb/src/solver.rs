//! Exact computation of `forb(m, family)` — the most columns an `m`-rowed
//! simple matrix can have while avoiding every member of a family — by
//! branch and bound over the `2^m` column universe, plus a bound reporter
//! that combines the `f(m, k)` upper bound with construction-based lower
//! bounds.
//!
//! The search adds columns in increasing canonical order only, so each
//! candidate set is visited once (sets, not sequences) and column
//! permutations never recur. When a column is appended to a prefix that
//! already avoids the family, only embeddings through the new column need
//! checking. Pruning uses `|A| + columns still available ≤ incumbent`, and
//! optionally stops the whole search once the incumbent reaches the
//! `f(m, k)` cap that is valid whenever the family passes
//! [`hypothesis_check`](crate::containment::hypothesis_check).

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use thiserror::Error;

use crate::constructions::{
    f, low_weight_plus_code, product_power_identity, ConstructionError,
};
use crate::containment::{
    avoids_family, contains_configuration, contains_configuration_using,
    covers_all_pairs_certificate, hypothesis_check,
};
use crate::matrix::{BinaryMatrix, MatrixError};

/// Exhaustive search keeps the whole `2^m` column universe in play and can
/// recurse as deep as the answer; past this many rows we refuse rather than
/// pretend.
pub const MAX_SEARCH_ROWS: usize = 16;

/// Stack size for search threads: the recursion can get as deep as the
/// universe is wide.
const SEARCH_STACK_BYTES: usize = 256 << 20;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("exact search supports at most {max} rows (universe 2^m), got m={m}")]
    UniverseTooLarge { m: usize, max: usize },
    #[error(
        "family member {index} has no columns and at most m rows; every matrix \
         contains it, so nothing avoids the family"
    )]
    EmptyMember { index: usize },
    #[error("family members have heights {heights:?}; a uniform height is required here")]
    MixedHeights { heights: Vec<usize> },
    #[error("the family is empty; bounds need at least one member")]
    EmptyFamily,
    #[error("matrix is not in Avoid: it is non-simple or contains a family member")]
    NotInAvoid,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Caps on how much work the search may do before giving up with a
/// lower-bound-only answer. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Worker threads. 1 (the default) searches sequentially and returns
    /// the lexicographically first extremal witness deterministically.
    pub threads: usize,
    /// Stop as soon as the incumbent reaches the `f(m, k)` column cap,
    /// when the family qualifies for it. Sound (the cap is an upper
    /// bound), and the result is still reported as exact.
    pub use_column_cap: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: SearchBudget::default(),
            threads: 1,
            use_column_cap: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// The search tree was exhausted (or the sound column cap was
    /// reached): `value` is `forb(m, family)`.
    Exact,
    /// A budget expired first: `value` only bounds `forb` from below.
    LowerBoundOnly,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub containment_calls: u64,
    pub wall: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub value: usize,
    /// A matrix realizing `value`: simple, avoids the family. With one
    /// thread this is the lexicographically first maximum-size avoider in
    /// canonical column order; with several threads ties may resolve
    /// differently between runs (the value never varies).
    pub witness: BinaryMatrix,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// True iff `a` is simple and avoids every family member — membership in
/// Avoid(m, family).
pub fn is_in_avoid(a: &BinaryMatrix, family: &[BinaryMatrix]) -> bool {
    a.is_simple() && avoids_family(a, family)
}

struct Shared<'x> {
    universe: &'x [u64],
    family: &'x [BinaryMatrix],
    cap: Option<usize>,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    calls: AtomicU64,
    stop: AtomicBool,
    budget_exhausted: AtomicBool,
    incumbent: AtomicUsize,
    /// Best (size, universe indices) found so far; indices are strictly
    /// increasing, so lexicographic comparison orders equal-size ties.
    best: Mutex<(usize, Vec<usize>)>,
}

impl Shared<'_> {
    fn record(&self, chosen: &[usize]) {
        let v = chosen.len();
        self.incumbent.fetch_max(v, Ordering::Relaxed);
        let mut best = self.best.lock().unwrap();
        if v > best.0 || (v == best.0 && chosen < &best.1[..]) {
            *best = (v, chosen.to_vec());
        }
        drop(best);
        if self.cap.is_some_and(|cap| v >= cap) {
            self.stop.store(true, Ordering::Relaxed);
        }
    }

    /// Charges one node and reports whether the search must unwind.
    fn charge_node(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|mx| n > mx);
        // The clock costs a syscall; sample it.
        let over_time = n % 256 == 0
            && self.deadline.is_some_and(|dl| Instant::now() > dl);
        if over_nodes || over_time {
            self.budget_exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn admissible(&self, a: &BinaryMatrix, new_col: usize) -> bool {
        for f in self.family {
            self.calls.fetch_add(1, Ordering::Relaxed);
            if contains_configuration_using(a, f, new_col).is_some() {
                return false;
            }
        }
        true
    }
}

fn dfs(sh: &Shared<'_>, a: &mut BinaryMatrix, chosen: &mut Vec<usize>, start: usize) {
    for i in start..sh.universe.len() {
        if sh.stop.load(Ordering::Relaxed) {
            return;
        }
        // Even taking every remaining column cannot beat the incumbent;
        // later i only have fewer left, so stop the whole level.
        if chosen.len() + (sh.universe.len() - i) <= sh.incumbent.load(Ordering::Relaxed) {
            break;
        }
        if sh.charge_node() {
            return;
        }
        a.push_column(sh.universe[i]).expect("universe column fits");
        chosen.push(i);
        if sh.admissible(a, a.num_cols() - 1) {
            sh.record(chosen);
            if !sh.stop.load(Ordering::Relaxed) {
                dfs(sh, a, chosen, i + 1);
            }
        }
        a.pop_column();
        chosen.pop();
    }
}

/// Compute `forb(m, family)` exactly by exhaustive branch and bound, or a
/// lower bound when the budget runs out first.
///
/// The value is deterministic regardless of thread count or schedule.
/// Errors: more than [`MAX_SEARCH_ROWS`] rows, or a family member with no
/// columns on at most `m` rows (such a member embeds in everything,
/// leaving nothing to maximize over).
pub fn max_avoid_exact(
    m: usize,
    family: &[BinaryMatrix],
    options: &SearchOptions,
) -> Result<SearchResult, SolverError> {
    if m > MAX_SEARCH_ROWS {
        return Err(SolverError::UniverseTooLarge {
            m,
            max: MAX_SEARCH_ROWS,
        });
    }
    for (index, f) in family.iter().enumerate() {
        if f.num_cols() == 0 && f.num_rows() <= m {
            return Err(SolverError::EmptyMember { index });
        }
    }
    let started = Instant::now();
    let mut prefilter_calls = 0u64;
    // A column inadmissible on its own stays inadmissible in any superset,
    // so drop it from the universe up front.
    let full = BinaryMatrix::all_columns(m)?;
    let mut universe = Vec::with_capacity(full.num_cols());
    let mut probe = BinaryMatrix::from_columns(m, Vec::new())?;
    for j in 0..full.num_cols() {
        let bits = full.col_bits(j);
        probe.push_column(bits)?;
        prefilter_calls += family.len() as u64;
        if avoids_family(&probe, family) {
            universe.push(bits);
        }
        probe.pop_column();
    }

    let cap = if options.use_column_cap {
        column_cap(m, family)?.filter(|&c| c <= universe.len())
    } else {
        None
    };

    let shared = Shared {
        universe: &universe,
        family,
        cap,
        max_nodes: options.budget.max_nodes,
        deadline: options.budget.max_duration.map(|d| started + d),
        nodes: AtomicU64::new(0),
        calls: AtomicU64::new(prefilter_calls),
        stop: AtomicBool::new(false),
        budget_exhausted: AtomicBool::new(false),
        incumbent: AtomicUsize::new(0),
        best: Mutex::new((0, Vec::new())),
    };
    // The empty matrix always qualifies (members reaching this point have
    // at least one column or more rows than m).
    if shared.cap == Some(0) {
        shared.stop.store(true, Ordering::Relaxed);
    }

    let threads = options.threads.max(1);
    if threads == 1 {
        std::thread::scope(|scope| {
            std::thread::Builder::new()
                .name("forb-search".into())
                .stack_size(SEARCH_STACK_BYTES)
                .spawn_scoped(scope, || {
                    let mut a = BinaryMatrix::from_columns(m, Vec::new()).expect("m checked");
                    let mut chosen = Vec::new();
                    dfs(&shared, &mut a, &mut chosen, 0);
                })
                .expect("spawn search thread")
                .join()
                .expect("search thread");
        });
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .stack_size(SEARCH_STACK_BYTES)
            .thread_name(|i| format!("forb-search-{i}"))
            .build()
            .expect("build search pool");
        pool.install(|| {
            use rayon::prelude::*;
            (0..universe.len()).into_par_iter().for_each(|i| {
                if shared.stop.load(Ordering::Relaxed)
                    || 1 + (universe.len() - i) <= shared.incumbent.load(Ordering::Relaxed)
                    || shared.charge_node()
                {
                    return;
                }
                let mut a = BinaryMatrix::from_columns(m, vec![universe[i]]).expect("m checked");
                let mut chosen = vec![i];
                // Universe columns are singly admissible by the prefilter.
                shared.record(&chosen);
                if !shared.stop.load(Ordering::Relaxed) {
                    dfs(&shared, &mut a, &mut chosen, i + 1);
                }
            });
        });
    }

    let (value, chosen) = shared.best.into_inner().unwrap();
    let witness = BinaryMatrix::from_columns(m, chosen.iter().map(|&i| universe[i]).collect())?;
    let status = if shared.budget_exhausted.load(Ordering::Relaxed) {
        SearchStatus::LowerBoundOnly
    } else {
        SearchStatus::Exact
    };
    Ok(SearchResult {
        value,
        witness,
        status,
        stats: SearchStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            containment_calls: shared.calls.load(Ordering::Relaxed),
            wall: started.elapsed(),
        },
    })
}

/// The `f(m, k)` column cap, when the family qualifies: uniform height
/// `k ≥ 2`, simple members, and the three pair-pattern conditions hold.
fn column_cap(m: usize, family: &[BinaryMatrix]) -> Result<Option<usize>, SolverError> {
    if m < 2 || family.is_empty() {
        return Ok(None);
    }
    let k = family[0].num_rows();
    if k < 2 || family.iter().any(|f| f.num_rows() != k) {
        return Ok(None);
    }
    if !matches!(hypothesis_check(family, k), Ok(true)) {
        return Ok(None);
    }
    let cap = f(m, k)?;
    Ok(usize::try_from(&cap).ok())
}

/// Is `a` maximal in Avoid: does appending any universe column either
/// repeat a column or create a forbidden configuration? Errors when `a`
/// itself is not in Avoid.
pub fn verify_maximal(a: &BinaryMatrix, family: &[BinaryMatrix]) -> Result<bool, SolverError> {
    let m = a.num_rows();
    if m > MAX_SEARCH_ROWS {
        return Err(SolverError::UniverseTooLarge {
            m,
            max: MAX_SEARCH_ROWS,
        });
    }
    if !is_in_avoid(a, family) {
        return Err(SolverError::NotInAvoid);
    }
    let present: HashSet<u64> = (0..a.num_cols()).map(|j| a.col_bits(j)).collect();
    let universe = BinaryMatrix::all_columns(m)?;
    let mut candidate = a.clone();
    for j in 0..universe.num_cols() {
        let bits = universe.col_bits(j);
        if present.contains(&bits) {
            continue;
        }
        candidate.push_column(bits)?;
        let new_col = candidate.num_cols() - 1;
        let extendable = family
            .iter()
            .all(|f| contains_configuration_using(&candidate, f, new_col).is_none());
        candidate.pop_column();
        if extendable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One side of a bound sandwich: the value and the generator or argument
/// that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: BigUint,
    pub provenance: String,
}

/// Lower and upper bounds on `forb(m, family)` from constructions and the
/// `f(m, k)` column bound, with `exact` filled when they meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub m: usize,
    pub k: usize,
    pub lower: Bound,
    pub upper: Bound,
    pub exact: Option<BigUint>,
}

/// Bound `forb(m, family)` without searching.
///
/// Upper bound: `f(m, k)` when the family passes the pair-pattern check,
/// otherwise the trivial `2^m`. Lower bound: the best of — the
/// transition-bounded construction `A(k)` (valid when every member covers
/// all balanced complementary pairs), the low-weight-plus-code matrix
/// (valid when `I_2 × 1_{k-2}` embeds in every member), an identity
/// product power checked directly against the family, any user-supplied
/// avoider on `m` rows, and the empty matrix. All members must share one
/// height.
pub fn bounds_report(
    m: usize,
    family: &[BinaryMatrix],
    witnesses: &[BinaryMatrix],
) -> Result<BoundReport, SolverError> {
    if family.is_empty() {
        return Err(SolverError::EmptyFamily);
    }
    let k = family[0].num_rows();
    if family.iter().any(|f| f.num_rows() != k) {
        return Err(SolverError::MixedHeights {
            heights: family.iter().map(BinaryMatrix::num_rows).collect(),
        });
    }
    for (index, f) in family.iter().enumerate() {
        if f.num_cols() == 0 && f.num_rows() <= m {
            return Err(SolverError::EmptyMember { index });
        }
    }

    let theorem_applies = m >= 2 && k >= 2 && matches!(hypothesis_check(family, k), Ok(true));
    let upper = if theorem_applies {
        Bound {
            value: f(m, k)?,
            provenance: format!("f({m},{k}) column bound (pair-pattern conditions hold)"),
        }
    } else {
        Bound {
            value: BigUint::from(1u32) << m,
            provenance: format!("trivial bound: all 2^{m} columns"),
        }
    };

    let mut lower = Bound {
        value: BigUint::ZERO,
        provenance: "empty matrix".to_string(),
    };
    // Candidates are screened by value before their (possibly expensive)
    // validity check runs: a construction that cannot beat the current
    // lower bound is never verified.
    fn offer(lower: &mut Bound, value: BigUint, provenance: String, applies: impl FnOnce() -> bool) {
        if value > lower.value && applies() {
            *lower = Bound { value, provenance };
        }
    }

    if m >= 2 && k >= 2 {
        offer(
            &mut lower,
            f(m, k)?,
            format!("transition-bounded construction A({k}) on {m} rows"),
            || {
                family
                    .iter()
                    .all(|f| matches!(covers_all_pairs_certificate(f), Ok(true)))
            },
        );
    }
    if k >= 3 && m >= k {
        let code = low_weight_plus_code(m, k)?;
        let pattern = BinaryMatrix::identity(2)?.product(&BinaryMatrix::ones(k - 2)?)?;
        offer(
            &mut lower,
            BigUint::from(code.num_cols()),
            "low-weight columns plus distance-4 code".to_string(),
            || {
                family
                    .iter()
                    .all(|f| contains_configuration(f, &pattern).is_some())
            },
        );
    }
    if k >= 3 && m >= k - 2 {
        let power = product_power_identity(m, k)?;
        offer(
            &mut lower,
            BigUint::from(power.num_cols()),
            "identity product power".to_string(),
            || is_in_avoid(&power, family),
        );
    }
    for w in witnesses {
        if w.num_rows() == m {
            offer(
                &mut lower,
                BigUint::from(w.num_cols()),
                "user-supplied witness".to_string(),
                || is_in_avoid(w, family),
            );
        }
    }

    let exact = (lower.value == upper.value).then(|| lower.value.clone());
    Ok(BoundReport {
        m,
        k,
        lower,
        upper,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a_k, boundary_family, named, triangular_pair, NamedTag};

    fn seq() -> SearchOptions {
        SearchOptions::default()
    }

    fn no_cap() -> SearchOptions {
        SearchOptions {
            use_column_cap: false,
            ..SearchOptions::default()
        }
    }

    #[test]
    fn forb_of_single_small_patterns_on_three_rows() {
        // Frozen values from independent brute force over all subsets of
        // the 8-column universe.
        let cases = [
            (named(NamedTag::F3), 6usize),
            (BinaryMatrix::all_columns(2).unwrap(), 4),
            (BinaryMatrix::identity(2).unwrap(), 4),
            (BinaryMatrix::triangular(2).unwrap(), 4),
            (named(NamedTag::F5ThreeRow), 6),
        ];
        for (f, expected) in cases {
            let res = max_avoid_exact(3, std::slice::from_ref(&f), &no_cap()).unwrap();
            assert_eq!(res.value, expected, "forb(3, .) mismatch");
            assert_eq!(res.status, SearchStatus::Exact);
            assert!(is_in_avoid(&res.witness, std::slice::from_ref(&f)));
            assert!(verify_maximal(&res.witness, std::slice::from_ref(&f)).unwrap());
        }
    }

    #[test]
    fn forb_f3_matches_2m_and_its_complement() {
        for m in 3..=4 {
            let f3 = named(NamedTag::F3);
            let res = max_avoid_exact(m, &[f3.clone()], &no_cap()).unwrap();
            assert_eq!(res.value, 2 * m);
            let resc = max_avoid_exact(m, &[f3.complement()], &no_cap()).unwrap();
            assert_eq!(resc.value, 2 * m);
        }
    }

    #[test]
    fn cap_agrees_with_plain_search() {
        let f3 = named(NamedTag::F3);
        let with_cap = max_avoid_exact(4, &[f3.clone()], &seq()).unwrap();
        let without = max_avoid_exact(4, &[f3.clone()], &no_cap()).unwrap();
        assert_eq!(with_cap.value, without.value);
        assert_eq!(with_cap.status, SearchStatus::Exact);
        // The cap hits as soon as the incumbent reaches f(4,3) = 8.
        assert!(with_cap.stats.nodes <= without.stats.nodes);
    }

    #[test]
    fn two_rowed_family_with_value_two() {
        let family = vec![
            BinaryMatrix::from_rows(&["010", "001"]).unwrap(),
            BinaryMatrix::from_rows(&["011", "001"]).unwrap(),
            BinaryMatrix::from_rows(&["011", "101"]).unwrap(),
        ];
        let res = max_avoid_exact(4, &family, &no_cap()).unwrap();
        assert_eq!(res.value, 2);
        assert!(verify_maximal(&res.witness, &family).unwrap());
    }

    #[test]
    fn empty_family_fills_the_universe() {
        let res = max_avoid_exact(3, &[], &seq()).unwrap();
        assert_eq!(res.value, 8);
        assert_eq!(res.status, SearchStatus::Exact);
        assert!(res.witness.is_simple());
    }

    #[test]
    fn parallel_value_matches_sequential() {
        let f3 = named(NamedTag::F3);
        let par = SearchOptions {
            threads: 4,
            ..SearchOptions::default()
        };
        let a = max_avoid_exact(4, &[f3.clone()], &seq()).unwrap();
        let b = max_avoid_exact(4, &[f3], &par).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(b.status, SearchStatus::Exact);
    }

    #[test]
    fn sequential_witness_is_deterministic() {
        let fam = [BinaryMatrix::identity(2).unwrap()];
        let a = max_avoid_exact(3, &fam, &seq()).unwrap();
        let b = max_avoid_exact(3, &fam, &seq()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.value, 4);
    }

    #[test]
    fn budget_degrades_to_lower_bound() {
        let f3 = named(NamedTag::F3);
        let opts = SearchOptions {
            budget: SearchBudget {
                max_nodes: Some(3),
                max_duration: None,
            },
            use_column_cap: false,
            ..SearchOptions::default()
        };
        let res = max_avoid_exact(4, &[f3.clone()], &opts).unwrap();
        assert_eq!(res.status, SearchStatus::LowerBoundOnly);
        assert!(res.value < 8);
        assert!(is_in_avoid(&res.witness, &[f3]));
    }

    #[test]
    fn solver_guards() {
        assert!(matches!(
            max_avoid_exact(17, &[], &seq()),
            Err(SolverError::UniverseTooLarge { .. })
        ));
        let empty_member = BinaryMatrix::from_columns(2, Vec::new()).unwrap();
        assert!(matches!(
            max_avoid_exact(3, &[empty_member.clone()], &seq()),
            Err(SolverError::EmptyMember { index: 0 })
        ));
        // A member taller than m with no columns can never embed; fine.
        let tall_empty = BinaryMatrix::from_columns(5, Vec::new()).unwrap();
        let res = max_avoid_exact(3, &[tall_empty], &seq()).unwrap();
        assert_eq!(res.value, 8);
    }

    #[test]
    fn maximality_checks() {
        // The lone zero column cannot be extended when the single-one
        // pattern is forbidden: every other column has a 1 somewhere.
        let family = [BinaryMatrix::ones(1).unwrap()];
        let a = BinaryMatrix::zeros(3).unwrap();
        assert!(verify_maximal(&a, &family).unwrap());

        // A(3) meets the 2m bound for the 3-rowed boundary configuration.
        let f13 = boundary_family(1, 3).unwrap();
        for m in 3..=4 {
            let a = a_k(m, 3).unwrap();
            assert!(verify_maximal(&a, std::slice::from_ref(&f13)).unwrap());
        }

        // Not maximal: a 2-rowed matrix missing the all-ones column
        // extends, because the 4-rowed family member cannot embed at all.
        let partial = BinaryMatrix::from_rows(&["010", "001"]).unwrap();
        let tall = BinaryMatrix::from_columns(4, vec![0b1111]).unwrap();
        assert!(!verify_maximal(&partial, &[tall]).unwrap());

        let k2 = BinaryMatrix::all_columns(2).unwrap();
        let not_avoiding = BinaryMatrix::all_columns(3).unwrap();
        assert!(matches!(
            verify_maximal(&not_avoiding, &[k2]),
            Err(SolverError::NotInAvoid)
        ));
    }

    #[test]
    fn bounds_close_for_the_transition_family() {
        let report = bounds_report(10, &[boundary_family(3, 5).unwrap()], &[]).unwrap();
        assert_eq!(report.exact, Some(BigUint::from(260u32)));
        assert_eq!(report.lower.value, report.upper.value);
        assert!(report.lower.provenance.contains("A(5)"));
    }

    #[test]
    fn bounds_stay_open_for_the_eight_rowed_case() {
        let f38 = boundary_family(3, 8).unwrap();
        let report = bounds_report(8, &[f38], &[]).unwrap();
        assert!(report.exact.is_none());
        assert_eq!(report.upper.value, BigUint::from(254u32));
        let code_cols = low_weight_plus_code(8, 8).unwrap().num_cols();
        assert_eq!(report.lower.value, BigUint::from(code_cols));
        assert!(report.lower.value < report.upper.value);
    }

    #[test]
    fn bounds_fall_back_to_trivial_upper() {
        let k2 = BinaryMatrix::all_columns(2).unwrap();
        let report = bounds_report(5, &[k2], &[]).unwrap();
        assert_eq!(report.upper.value, BigUint::from(32u32));
        assert!(report.upper.provenance.contains("trivial"));
        // A(2) = {zero column, ones column} still avoids K_2.
        assert_eq!(report.lower.value, BigUint::from(2u32));
        assert!(report.exact.is_none());
    }

    #[test]
    fn bounds_use_user_witnesses() {
        // For {K_2} the construction routes only reach 2 columns (A(2));
        // a hand-made 4-column avoider must win as the lower bound.
        let k2 = BinaryMatrix::all_columns(2).unwrap();
        let witness = BinaryMatrix::from_rows(&["0100", "0010", "0001"]).unwrap();
        let report = bounds_report(3, &[k2], &[witness]).unwrap();
        assert_eq!(report.lower.value, BigUint::from(4u32));
        assert!(report.lower.provenance.contains("user-supplied"));
        assert!(report.exact.is_none());
    }

    #[test]
    fn bounds_close_via_triangular_witness() {
        // [T_6 | T_6^c] avoids the 3-rowed boundary configuration and
        // meets the f(6,3) = 12 upper bound, so the report closes.
        let f13 = boundary_family(1, 3).unwrap();
        let report = bounds_report(6, &[f13], &[triangular_pair(6).unwrap()]).unwrap();
        assert_eq!(report.exact, Some(BigUint::from(12u32)));
    }

    #[test]
    fn bounds_errors() {
        assert!(matches!(
            bounds_report(4, &[], &[]),
            Err(SolverError::EmptyFamily)
        ));
        let mixed = [
            named(NamedTag::F3),
            BinaryMatrix::all_columns(2).unwrap(),
        ];
        assert!(matches!(
            bounds_report(4, &mixed, &[]),
            Err(SolverError::MixedHeights { .. })
        ));
    }
}
