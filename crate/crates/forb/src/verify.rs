//! Named verification suites that replay the library's central
//! mathematical claims end to end: counting identities, avoidance facts,
//! certificates, and small exhaustive searches. Each suite produces a
//! [`VerificationReport`] of independent claims; a claim records the
//! statement it checks and, on failure, the first few counterexamples.
//!
//! The suites are deterministic and self-contained: solver claims run
//! single-threaded, and nothing depends on external data.

use num_bigint::BigUint;
use thiserror::Error;

use crate::constructions::{
    a_k, binomial, boundary_family, boundary_min_k, f, f_closed, gs_code,
    low_weight_plus_code, named, thm_f1_extremal, triangular_pair, NamedTag,
};
use crate::containment::{
    contains_configuration, covers_all_pairs_certificate, hypothesis_check,
    missing_complementary_pairs,
};
use crate::matrix::{row_mask, BinaryMatrix};
use crate::solver::{
    bounds_report, is_in_avoid, max_avoid_exact, SearchOptions, SearchStatus,
};

/// The available suite names, in the order they are usually run.
pub const SUITES: [&str; 7] = [
    "lemma-ak",
    "thm-f1",
    "main-thm",
    "code-construction",
    "f38-gap",
    "hypothesis",
    "minimal-matrices",
];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown verification suite `{0}`; available: lemma-ak, thm-f1, main-thm, code-construction, f38-gap, hypothesis, minimal-matrices")]
    UnknownSuite(String),
}

/// One verified claim: what was checked and how it went.
#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: &'static str,
    /// The mathematical statement this claim checks.
    pub anchor: &'static str,
    pub pass: bool,
    /// How many atomic checks ran, plus counterexamples on failure.
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Run one named suite. Errors only on an unknown name; claim failures are
/// reported inside the result.
pub fn run_suite(name: &str) -> Result<VerificationReport, VerifyError> {
    let claims = match name {
        "lemma-ak" => suite_lemma_ak(),
        "thm-f1" => suite_thm_f1(),
        "main-thm" => suite_main_thm(),
        "code-construction" => suite_code_construction(),
        "f38-gap" => suite_f38_gap(),
        "hypothesis" => suite_hypothesis(),
        "minimal-matrices" => suite_minimal_matrices(),
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    };
    Ok(VerificationReport {
        suite: name.to_string(),
        claims,
    })
}

/// Accumulates atomic checks for one claim.
struct Check {
    checked: usize,
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn ok(&mut self, cond: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond && self.failures.len() < 4 {
            self.failures.push(context());
        }
    }

    fn claim(self, id: &'static str, anchor: &'static str) -> ClaimResult {
        let pass = self.failures.is_empty();
        let details = if pass {
            format!("{} checks", self.checked)
        } else {
            format!(
                "{} checks, failed: {}",
                self.checked,
                self.failures.join("; ")
            )
        };
        ClaimResult {
            id,
            anchor,
            pass,
            details,
        }
    }
}

fn suite_lemma_ak() -> Vec<ClaimResult> {
    let mut claims = Vec::new();

    let mut c = Check::new();
    for k in 3..=6usize {
        for m in k..=14 {
            let a = a_k(m, k).expect("domain checked");
            let recurrence = f(m, k).expect("domain checked");
            let closed = f_closed(m, k).expect("domain checked");
            c.ok(
                BigUint::from(a.num_cols()) == recurrence && closed.doubled_sum == recurrence,
                || format!("(m,k)=({m},{k}): ‖A‖={} f={recurrence}", a.num_cols()),
            );
            c.ok(a.is_simple(), || format!("A({k}) on {m} rows not simple"));
        }
    }
    claims.push(c.claim(
        "ak-count",
        "the transition-generated A(k) has exactly f(m,k) columns for k in 3..=6, k ≤ m ≤ 14",
    ));

    let mut c = Check::new();
    for k in 3..=5usize {
        for m in k..=8 {
            let a = a_k(m, k).expect("domain checked");
            for mask in 0u64..(1 << m) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let rows: Vec<usize> = (0..m).filter(|&r| mask >> r & 1 == 1).collect();
                let restricted = a.restrict_rows(&rows).expect("rows valid");
                let present: std::collections::HashSet<u64> =
                    (0..restricted.num_cols())
                        .map(|j| restricted.col_bits(j))
                        .collect();
                let heavy = k.div_ceil(2);
                let mut absent = Vec::new();
                for w in [heavy, k - heavy] {
                    let layer = BinaryMatrix::columns_of_weight(k, w).expect("small");
                    for col in layer.columns() {
                        if !present.contains(&col.bits()) && !absent.contains(&col.bits()) {
                            absent.push(col.bits());
                        }
                    }
                }
                let is_one_pair = absent.len() == 2 && absent[0] == absent[1] ^ row_mask(k);
                c.ok(is_one_pair, || {
                    format!("(m,k)=({m},{k}) rows {rows:?}: absent balanced columns {absent:?}")
                });
            }
        }
    }
    claims.push(c.claim(
        "ak-missing-pair",
        "every k-subset of rows of A(k) is missing exactly one complementary balanced pair (k in 3..=5, m ≤ 8)",
    ));

    claims
}

fn suite_thm_f1() -> Vec<ClaimResult> {
    let mut claims = Vec::new();
    let f3 = named(NamedTag::F3);

    let mut c = Check::new();
    for m in 2..=8usize {
        let a = thm_f1_extremal(m).expect("m ≥ 2");
        c.ok(
            a.num_cols() == 2 * m && is_in_avoid(&a, std::slice::from_ref(&f3)),
            || format!("m={m}: {} columns", a.num_cols()),
        );
    }
    claims.push(c.claim(
        "extremal-2m",
        "an m×2m simple matrix avoiding the configuration {(1,1,0),(1,0,1)} exists for every m, so forb(m, F_3) ≥ 2m",
    ));

    let mut c = Check::new();
    let f13 = boundary_family(1, 3).expect("valid");
    for m in 1..=8usize {
        let a = triangular_pair(m).expect("m ≥ 1");
        c.ok(
            a.num_cols() == 2 * m && is_in_avoid(&a, std::slice::from_ref(&f13)),
            || format!("m={m}: {} columns", a.num_cols()),
        );
    }
    claims.push(c.claim(
        "triangular-pair-2m",
        "[T_m | T_m^c] is an m×2m simple matrix avoiding the 3-rowed boundary configuration F_{1,3}",
    ));

    let mut c = Check::new();
    let opts = SearchOptions::default();
    for m in 3..=5usize {
        for (label, pattern) in [("F_3", f3.clone()), ("F_3^c", f3.complement())] {
            match max_avoid_exact(m, std::slice::from_ref(&pattern), &opts) {
                Ok(res) => c.ok(
                    res.value == 2 * m && res.status == SearchStatus::Exact,
                    || format!("m={m} {label}: value {} status {:?}", res.value, res.status),
                ),
                Err(e) => c.ok(false, || format!("m={m} {label}: {e}")),
            }
        }
    }
    claims.push(c.claim(
        "solver-2m",
        "exhaustive search gives forb(m, F_3) = forb(m, F_3^c) = 2m for m = 3, 4, 5",
    ));

    claims
}

fn main_thm_families() -> Vec<(&'static str, BinaryMatrix, usize)> {
    vec![
        ("F_{1,4}", boundary_family(1, 4).expect("valid"), 4),
        ("F_{3,4}", boundary_family(3, 4).expect("valid"), 4),
        ("F_{3,5}", boundary_family(3, 5).expect("valid"), 5),
        ("F_{3,6}", boundary_family(3, 6).expect("valid"), 6),
    ]
}

fn suite_main_thm() -> Vec<ClaimResult> {
    let mut claims = Vec::new();

    let mut c = Check::new();
    for (label, fam, k) in main_thm_families() {
        c.ok(
            hypothesis_check(std::slice::from_ref(&fam), k) == Ok(true),
            || format!("{label}: pair-pattern conditions do not hold"),
        );
    }
    claims.push(c.claim(
        "upper-hypothesis",
        "{F_{1,4}}, {F_{3,4}}, {F_{3,5}}, {F_{3,6}} satisfy the pair-pattern conditions, so forb(m, ·) ≤ f(m,k)",
    ));

    let coverers: Vec<(&'static str, BinaryMatrix, usize)> = vec![
        ("F_5 (4-rowed)", named(NamedTag::F5FourRow), 4),
        ("F_6 (4-rowed)", named(NamedTag::F6FourRow), 4),
        ("F_{3,5}", boundary_family(3, 5).expect("valid"), 5),
        ("F_{3,6}", boundary_family(3, 6).expect("valid"), 6),
    ];

    let mut c = Check::new();
    for (label, fm, _) in &coverers {
        c.ok(
            covers_all_pairs_certificate(fm) == Ok(true),
            || format!("{label}: some balanced pair has no representative"),
        );
    }
    claims.push(c.claim(
        "pair-coverage",
        "F_5, F_6 (4-rowed), F_{3,5} and F_{3,6} carry a representative of every balanced complementary pair",
    ));

    let mut c = Check::new();
    for (label, fm, k) in &coverers {
        for m in *k..=10 {
            let a = a_k(m, *k).expect("domain checked");
            c.ok(
                contains_configuration(&a, fm).is_none(),
                || format!("{label} embeds in A({k}) on {m} rows"),
            );
        }
    }
    claims.push(c.claim(
        "ak-avoids-coverers",
        "A(k) avoids each pair-covering configuration, checked directly for m ≤ 10",
    ));

    let mut c = Check::new();
    let f14 = boundary_family(1, 4).expect("valid");
    let f34 = boundary_family(3, 4).expect("valid");
    for (label, small) in [
        ("F_5 (4-rowed)", named(NamedTag::F5FourRow)),
        ("F_6 (4-rowed)", named(NamedTag::F6FourRow)),
    ] {
        for (parent_label, parent) in [("F_{1,4}", &f14), ("F_{3,4}", &f34)] {
            c.ok(
                contains_configuration(parent, &small).is_some(),
                || format!("{label} does not embed in {parent_label}"),
            );
        }
    }
    claims.push(c.claim(
        "small-configs-embed",
        "the 4-rowed F_5 and F_6 embed in both F_{1,4} and F_{3,4}",
    ));

    let mut c = Check::new();
    for (label, fam, k) in main_thm_families() {
        for m in 2..=12usize {
            let expected = f(m, k).expect("domain checked");
            match bounds_report(m, std::slice::from_ref(&fam), &[]) {
                Ok(rep) => c.ok(
                    rep.exact.as_ref() == Some(&expected),
                    || format!("{label} m={m}: exact {:?}, want {expected}", rep.exact),
                ),
                Err(e) => c.ok(false, || format!("{label} m={m}: {e}")),
            }
        }
    }
    claims.push(c.claim(
        "bounds-meet",
        "construction lower bounds meet the f(m,k) upper bound: forb(m, F_{1,4}) = f(m,4) and forb(m, F_{3,k}) = f(m,k) for k = 4,5,6, m ≤ 12",
    ));

    let mut c = Check::new();
    let opts = SearchOptions {
        use_column_cap: false,
        ..SearchOptions::default()
    };
    match max_avoid_exact(4, std::slice::from_ref(&f14), &opts) {
        Ok(res) => c.ok(
            res.value == 14 && res.status == SearchStatus::Exact,
            || format!("value {} status {:?}", res.value, res.status),
        ),
        Err(e) => c.ok(false, || e.to_string()),
    }
    claims.push(c.claim(
        "exhaustive-14",
        "branch and bound with no column cap exhausts m = 4 and confirms forb(4, F_{1,4}) = 14 = f(4,4)",
    ));

    claims
}

fn suite_code_construction() -> Vec<ClaimResult> {
    let mut claims = Vec::new();

    let mut c = Check::new();
    for (m, w) in [(7usize, 3usize), (8, 3), (9, 4), (10, 3), (12, 4), (8, 7)] {
        match gs_code(m, w) {
            Ok(code) => {
                c.ok(
                    code.columns().all(|col| col.weight() as usize == w),
                    || format!("({m},{w}): wrong weight"),
                );
                let mut min_dist = usize::MAX;
                for i in 0..code.num_cols() {
                    for j in i + 1..code.num_cols() {
                        let d = (code.col_bits(i) ^ code.col_bits(j)).count_ones() as usize;
                        min_dist = min_dist.min(d);
                    }
                }
                c.ok(code.num_cols() < 2 || min_dist >= 4, || {
                    format!("({m},{w}): minimum distance {min_dist}")
                });
                c.ok(
                    BigUint::from(code.num_cols() * m) >= binomial(m, w),
                    || format!("({m},{w}): {} columns < C({m},{w})/{m}", code.num_cols()),
                );
            }
            Err(e) => c.ok(false, || format!("({m},{w}): {e}")),
        }
    }
    claims.push(c.claim(
        "gs-distance",
        "the best residue class of weight-w columns has pairwise Hamming distance ≥ 4 and at least C(m,w)/m members",
    ));

    let mut c = Check::new();
    for (m, k) in [(8usize, 4usize), (10, 4), (9, 5), (12, 5)] {
        match low_weight_plus_code(m, k) {
            Ok(a) => {
                c.ok(a.is_simple(), || format!("({m},{k}): not simple"));
                let pattern = BinaryMatrix::identity(2)
                    .expect("small")
                    .product(&BinaryMatrix::ones(k - 2).expect("small"))
                    .expect("heights fit");
                c.ok(
                    contains_configuration(&a, &pattern).is_none(),
                    || format!("({m},{k}): I_2 × 1_{{k-2}} embeds"),
                );
                let mut low_sum = BigUint::ZERO;
                for i in 0..=k - 2 {
                    low_sum += binomial(m, i);
                }
                // ‖A‖ ≥ C(m,k-1)/m + Σ C(m,i), compared exactly as
                // m·‖A‖ ≥ C(m,k-1) + m·Σ.
                let lhs = BigUint::from(a.num_cols() * m);
                let rhs = binomial(m, k - 1) + low_sum * m;
                c.ok(lhs >= rhs, || {
                    format!("({m},{k}): {} columns below the bound", a.num_cols())
                });
            }
            Err(e) => c.ok(false, || format!("({m},{k}): {e}")),
        }
    }
    claims.push(c.claim(
        "low-weight-plus-code",
        "low-weight columns plus the distance-4 code form a simple matrix avoiding I_2 × 1_{k-2} with at least C(m,k-1)/m + Σ_{i≤k-2} C(m,i) columns",
    ));

    claims
}

fn suite_f38_gap() -> Vec<ClaimResult> {
    let mut claims = Vec::new();
    let f38 = boundary_family(3, 8).expect("valid");

    let mut c = Check::new();
    match missing_complementary_pairs(&f38) {
        Ok(rep) => {
            c.ok(
                rep.pairs.len() == 35 && rep.covered.len() == 34 && rep.missing.len() == 1,
                || {
                    format!(
                        "pairs {} covered {} missing {}",
                        rep.pairs.len(),
                        rep.covered.len(),
                        rep.missing.len()
                    )
                },
            );
        }
        Err(e) => c.ok(false, || e.to_string()),
    }
    claims.push(c.claim(
        "f38-coverage",
        "F_{3,8} has representatives of exactly 34 of the 35 balanced complementary pairs on 8 rows",
    ));

    let mut c = Check::new();
    match bounds_report(8, std::slice::from_ref(&f38), &[]) {
        Ok(rep) => {
            c.ok(rep.exact.is_none(), || "bounds unexpectedly met".to_string());
            c.ok(
                rep.lower.value < rep.upper.value,
                || format!("lower {} upper {}", rep.lower.value, rep.upper.value),
            );
            c.ok(
                rep.upper.value == f(8, 8).expect("domain checked"),
                || format!("upper {} is not f(8,8)", rep.upper.value),
            );
        }
        Err(e) => c.ok(false, || e.to_string()),
    }
    claims.push(c.claim(
        "f38-open-interval",
        "at (m,k) = (8,8) the lower bound comes from the code construction and stays below the f(8,8) upper bound",
    ));

    claims
}

fn suite_hypothesis() -> Vec<ClaimResult> {
    let mut claims = Vec::new();

    let mut c = Check::new();
    for i in 1..=6usize {
        let min_k = boundary_min_k(i).expect("valid index");
        for k in [min_k, min_k + 1] {
            let fam = boundary_family(i, k).expect("valid");
            let pattern = BinaryMatrix::identity(2)
                .expect("small")
                .product(&BinaryMatrix::ones(k - 2).expect("small"))
                .expect("heights fit");
            c.ok(
                contains_configuration(&fam, &pattern).is_some(),
                || format!("I_2 × 1_{{{}}} does not embed in F_{{{i},{k}}}", k - 2),
            );
        }
    }
    claims.push(c.claim(
        "boundary-contains-pattern",
        "I_2 × 1_{k-2} embeds in every boundary configuration F_{i,k} at its minimal height and one above",
    ));

    let mut c = Check::new();
    for i in 1..=6usize {
        let min_k = boundary_min_k(i).expect("valid index");
        for k in [min_k, min_k + 1] {
            let fam = boundary_family(i, k).expect("valid");
            c.ok(
                hypothesis_check(std::slice::from_ref(&fam), k) == Ok(true),
                || format!("F_{{{i},{k}}} fails the pair-pattern conditions"),
            );
        }
    }
    claims.push(c.claim(
        "boundary-hypothesis",
        "every boundary configuration satisfies the pair-pattern conditions at its minimal height and one above",
    ));

    claims
}

fn minimal_tags() -> [(NamedTag, usize); 8] {
    [
        (NamedTag::Min5A, 5),
        (NamedTag::Min5B, 5),
        (NamedTag::Min5C, 5),
        (NamedTag::Min5D, 5),
        (NamedTag::Min6A, 6),
        (NamedTag::Min6B, 6),
        (NamedTag::Min6C, 6),
        (NamedTag::Min6D, 6),
    ]
}

fn suite_minimal_matrices() -> Vec<ClaimResult> {
    let mut claims = Vec::new();

    let mut c = Check::new();
    for (tag, k) in minimal_tags() {
        let m = named(tag);
        c.ok(
            m.num_rows() == k && m.num_cols() == 10 && m.is_simple(),
            || format!("{}: {}×{}", tag.name(), m.num_rows(), m.num_cols()),
        );
    }
    claims.push(c.claim(
        "shapes",
        "the eight minimal matrices are simple with 10 columns on 5 and 6 rows",
    ));

    let mut c = Check::new();
    for (tag, k) in minimal_tags() {
        let small = named(tag);
        let parent = boundary_family(3, k).expect("valid");
        c.ok(
            contains_configuration(&parent, &small).is_some(),
            || format!("{} does not embed in F_{{3,{k}}}", tag.name()),
        );
    }
    claims.push(c.claim(
        "embed-in-boundary",
        "each minimal matrix embeds in F_{3,5} or F_{3,6} respectively",
    ));

    let mut c = Check::new();
    for (tag, _) in minimal_tags() {
        let m = named(tag);
        match missing_complementary_pairs(&m) {
            Ok(rep) => c.ok(
                rep.pairs.len() == 10 && rep.missing.is_empty(),
                || {
                    format!(
                        "{}: {} of {} pairs covered",
                        tag.name(),
                        rep.covered.len(),
                        rep.pairs.len()
                    )
                },
            ),
            Err(e) => c.ok(false, || format!("{}: {e}", tag.name())),
        }
    }
    claims.push(c.claim(
        "pair-coverage",
        "each minimal matrix covers all 10 balanced complementary pairs of its height",
    ));

    let mut c = Check::new();
    for (tag, k) in minimal_tags() {
        let small = named(tag);
        for m in k..=8 {
            let a = a_k(m, k).expect("domain checked");
            c.ok(
                contains_configuration(&a, &small).is_none(),
                || format!("{} embeds in A({k}) on {m} rows", tag.name()),
            );
        }
    }
    claims.push(c.claim(
        "ak-avoids-minimal",
        "A(5) and A(6) avoid every minimal matrix, checked directly for m ≤ 8",
    ));

    let mut c = Check::new();
    for (tag, k) in minimal_tags() {
        let m = named(tag);
        c.ok(
            hypothesis_check(std::slice::from_ref(&m), k) == Ok(true),
            || format!("{} fails the pair-pattern conditions", tag.name()),
        );
    }
    claims.push(c.claim(
        "minimal-hypothesis",
        "every minimal matrix satisfies the pair-pattern conditions on its own",
    ));

    claims
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("nope"),
            Err(VerifyError::UnknownSuite(_))
        ));
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["f38-gap", "hypothesis", "minimal-matrices"] {
            let report = run_suite(name).unwrap();
            assert!(
                report.passed(),
                "suite {name}: {:?}",
                report
                    .claims
                    .iter()
                    .filter(|c| !c.pass)
                    .collect::<Vec<_>>()
            );
            assert!(!report.claims.is_empty());
        }
    }
}
