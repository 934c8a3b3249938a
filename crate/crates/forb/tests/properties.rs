//! Randomized structural properties of the matrix, containment, and
//! counting layers.

use forb::constructions::{f, f_alternating, f_closed};
use forb::containment::contains_configuration_using;
use forb::{contains_configuration, BinaryMatrix};
use proptest::prelude::*;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_rows).prop_flat_map(move |m| {
        proptest::collection::vec(0..1u64 << m, 0..=max_cols)
            .prop_map(move |cols| BinaryMatrix::from_columns(m, cols).unwrap())
    })
}

fn arb_matrix_and_perms() -> impl Strategy<Value = (BinaryMatrix, Vec<usize>, Vec<usize>)> {
    arb_matrix(5, 6).prop_flat_map(|m| {
        let rows: Vec<usize> = (0..m.num_rows()).collect();
        let cols: Vec<usize> = (0..m.num_cols()).collect();
        (Just(m), Just(rows).prop_shuffle(), Just(cols).prop_shuffle())
    })
}

/// Rebuild `m` with row `i` of the result taken from row `row_perm[i]` and
/// column `j` taken from column `col_perm[j]`.
fn apply_perms(m: &BinaryMatrix, row_perm: &[usize], col_perm: &[usize]) -> BinaryMatrix {
    let cols: Vec<u64> = col_perm
        .iter()
        .map(|&j| {
            let mut bits = 0u64;
            for (new_row, &old_row) in row_perm.iter().enumerate() {
                if m.get(old_row, j) {
                    bits |= 1 << new_row;
                }
            }
            bits
        })
        .collect();
    BinaryMatrix::from_columns(m.num_rows(), cols).unwrap()
}

fn same_column_sequence(a: &BinaryMatrix, b: &BinaryMatrix) -> bool {
    a.num_rows() == b.num_rows()
        && a.num_cols() == b.num_cols()
        && (0..a.num_cols()).all(|j| a.col_bits(j) == b.col_bits(j))
}

proptest! {
    #[test]
    fn bm_text_round_trips(m in arb_matrix(6, 8)) {
        let parsed = BinaryMatrix::parse_bm(&m.to_bm()).unwrap();
        prop_assert!(same_column_sequence(&m, &parsed));
    }

    #[test]
    fn inline_literal_round_trips(m in arb_matrix(6, 8)) {
        prop_assume!(m.num_cols() >= 1);
        let literal = m.to_string().trim_end().replace('\n', "/");
        let parsed = BinaryMatrix::parse_inline(&literal).unwrap();
        prop_assert!(same_column_sequence(&m, &parsed));
    }

    #[test]
    fn complement_is_an_involution(m in arb_matrix(6, 8)) {
        prop_assert!(same_column_sequence(&m, &m.complement().complement()));
    }

    #[test]
    fn containment_respects_complement_duality(
        a in arb_matrix(5, 6),
        config in arb_matrix(3, 4),
    ) {
        prop_assert_eq!(
            contains_configuration(&a, &config).is_some(),
            contains_configuration(&a.complement(), &config.complement()).is_some()
        );
    }

    #[test]
    fn witnesses_validate(a in arb_matrix(5, 6), config in arb_matrix(3, 4)) {
        if let Some(witness) = contains_configuration(&a, &config) {
            prop_assert!(witness.validate(&a, &config));
        }
    }

    #[test]
    fn containment_is_permutation_invariant(
        (a, row_perm, col_perm) in arb_matrix_and_perms(),
        config in arb_matrix(3, 4),
    ) {
        let shuffled = apply_perms(&a, &row_perm, &col_perm);
        prop_assert_eq!(
            contains_configuration(&a, &config).is_some(),
            contains_configuration(&shuffled, &config).is_some()
        );
    }

    #[test]
    fn containment_via_any_required_column(
        a in arb_matrix(4, 5),
        config in arb_matrix(3, 3),
    ) {
        prop_assume!(config.num_cols() >= 1);
        let direct = contains_configuration(&a, &config).is_some();
        let via_required =
            (0..a.num_cols()).any(|j| contains_configuration_using(&a, &config, j).is_some());
        prop_assert_eq!(direct, via_required);
    }

    #[test]
    fn product_multiplies_columns(a in arb_matrix(3, 4), b in arb_matrix(3, 4)) {
        let p = a.product(&b).unwrap();
        prop_assert_eq!(p.num_rows(), a.num_rows() + b.num_rows());
        prop_assert_eq!(p.num_cols(), a.num_cols() * b.num_cols());
        if a.is_simple() && b.is_simple() {
            prop_assert!(p.is_simple());
        }
    }

    #[test]
    fn transitions_are_bounded_and_complement_invariant(m in arb_matrix(6, 8)) {
        for col in m.columns() {
            prop_assert!((col.transitions() as usize) <= m.num_rows().saturating_sub(1));
            prop_assert_eq!(col.transitions(), col.complement().transitions());
        }
    }

    #[test]
    fn canonicalize_is_idempotent_and_order_insensitive(
        (m, _row_perm, col_perm) in arb_matrix_and_perms(),
    ) {
        let identity_rows: Vec<usize> = (0..m.num_rows()).collect();
        let shuffled = apply_perms(&m, &identity_rows, &col_perm);
        let canonical = m.clone().canonicalized();
        prop_assert!(same_column_sequence(&canonical, &shuffled.canonicalized()));
        prop_assert!(same_column_sequence(&canonical, &canonical.clone().canonicalized()));
    }

    #[test]
    fn counting_forms_agree(m in 2..=40usize, k in 2..=10usize) {
        let value = f(m, k).unwrap();
        let closed = f_closed(m, k).unwrap();
        prop_assert_eq!(&value, &closed.doubled_sum);
        prop_assert_eq!(&value, &closed.mixed);
        prop_assert_eq!(&value, &f_alternating(m, k).unwrap());
    }

    #[test]
    fn counting_recurrence_holds(m in 3..=40usize, k in 3..=10usize) {
        prop_assert_eq!(
            f(m, k).unwrap(),
            f(m - 1, k).unwrap() + f(m - 1, k - 1).unwrap()
        );
    }
}
