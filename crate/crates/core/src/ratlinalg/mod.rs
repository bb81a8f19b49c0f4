//! Exact rational arithmetic and linear algebra.
//!
//! Every rank decision in the crate is an exact-zero decision, so nothing
//! here ever touches floating point.

mod echelon;
mod matrix;
mod rational;

pub use echelon::{integer_row, EchelonBasis, IntRow};
pub use matrix::{intersect_row_spaces, RatMatrix, SPARSE_DENSITY};
pub use rational::{common_denominator, Rational};

use crate::error::{Error, Result};

/// Binomial coefficient with the convention `binom(a, b) = 0` whenever `a < b`,
/// including negative `a`.
pub fn binom(a: i64, b: i64) -> Result<i64> {
    if b < 0 {
        return Err(Error::InvalidArgument(format!("binom lower index {b} < 0")));
    }
    Ok(binom0(a, b))
}

/// Infallible `binom` for the nonnegative lower indices used in the dimension formulas.
pub(crate) fn binom0(a: i64, b: i64) -> i64 {
    debug_assert!(b >= 0);
    if a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// `binom(a, 2)` under the same convention; the workhorse of the closed forms.
pub(crate) fn c2(a: i64) -> i64 {
    binom0(a, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2).unwrap(), 10);
        assert_eq!(binom(1, 2).unwrap(), 0);
        assert_eq!(binom(0, 0).unwrap(), 1);
        assert_eq!(binom(-3, 2).unwrap(), 0);
        assert!(matches!(binom(4, -1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn binom_matches_factorials() {
        fn fact(n: i64) -> u128 {
            (1..=n as u128).product()
        }
        for a in 0..=30 {
            for b in 0..=a {
                let expect = fact(a) / (fact(b) * fact(a - b));
                assert_eq!(binom(a, b).unwrap() as u128, expect, "({a},{b})");
            }
        }
        for a in -10..=10 {
            for b in 0..=10 {
                if a < b {
                    assert_eq!(binom(a, b).unwrap(), 0);
                }
            }
        }
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec((-3i64..4, 1i64..4), c), r).prop_map(
                move |rows| {
                    let dense = rows
                        .into_iter()
                        .map(|row| row.into_iter().map(|(p, q)| Rational::new(p, q)).collect())
                        .collect();
                    RatMatrix::from_dense(c, dense)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_dim(), m.ncols());
            prop_assert_eq!(m.nullspace().len(), m.kernel_dim());
            prop_assert_eq!(m.rref().1.len(), m.rank());
        }

        #[test]
        fn rank_row_operations(m in small_matrix(), p in 1i64..7, q in 1i64..7, seed in 0usize..100) {
            let i = seed % m.nrows();
            let scaled = m.scale_row(i, &Rational::new(-p, q));
            prop_assert_eq!(scaled.rank(), m.rank());
            let mut perm: Vec<usize> = (0..m.nrows()).collect();
            perm.rotate_left(seed % m.nrows());
            prop_assert_eq!(m.permute_rows(&perm).rank(), m.rank());
        }
    }
}
