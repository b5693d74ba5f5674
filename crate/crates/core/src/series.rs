//! Exact power-series helpers, generic over the integer scalar.

use crate::scalar::{int, IntScalar};

/// Terms `u_1..=u_n` of `u_s = 3q u_{s-2} + qc u_{s-3}` from the seeds `u_1, u_2, u_3`.
pub fn cubic_recurrence<T: IntScalar>(seeds: [T; 3], q: &T, c: &T, n: usize) -> Vec<T> {
    let three_q = int::<T>(3) * q.clone();
    let qc = q.clone() * c.clone();
    let mut out: Vec<T> = seeds.into_iter().take(n).collect();
    while out.len() < n {
        let s = out.len();
        let next = three_q.clone() * out[s - 2].clone() + qc.clone() * out[s - 3].clone();
        out.push(next);
    }
    out
}

/// First `n` coefficients (degrees `0..n`) of the power series `num / den`.
///
/// `den[0]` must be 1, so the expansion stays in the integers.
pub fn expand_rational<T: IntScalar>(num: &[T], den: &[T], n: usize) -> Vec<T> {
    assert!(
        den.first().is_some_and(|d| d.is_one()),
        "denominator must have constant term 1"
    );
    let mut out: Vec<T> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = num.get(i).cloned().unwrap_or_else(T::zero);
        for (j, dj) in den.iter().enumerate().skip(1).take(i) {
            v = v - dj.clone() * out[i - j].clone();
        }
        out.push(v);
    }
    out
}

/// `1 - 3q x² - qc x³`.
pub fn cubic_denominator<T: IntScalar>(q: &T, c: &T) -> Vec<T> {
    vec![
        T::one(),
        T::zero(),
        -(int::<T>(3) * q.clone()),
        -(q.clone() * c.clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let v = expand_rational::<i64>(&[0, 1], &[1, -7], 5);
        assert_eq!(v, vec![0, 1, 7, 49, 343]);
    }

    #[test]
    fn recurrence_truncates_short_requests() {
        assert_eq!(cubic_recurrence::<i64>([2, -1, 41], &7, &1, 2), vec![2, -1]);
        // F_7, cube target: u_4 = 3·7·(c - 2) + 7·c·2
        assert_eq!(cubic_recurrence::<i64>([2, -1, 41], &7, &1, 4)[3], -7);
    }

    proptest! {
        // the recurrence is exactly the expansion of f(x)/(1 - 3qx² - qcx³)
        // with f = u1 x + u2 x² + (u3 - 3q u1) x³
        #[test]
        fn recurrence_matches_rational_expansion(
            u in prop::array::uniform3(-50i64..50), q in 2i64..60, c in -15i64..15, n in 1usize..12
        ) {
            let num = vec![0, u[0], u[1], u[2] - 3 * q * u[0]];
            let den = cubic_denominator(&q, &c);
            let expanded = expand_rational(&num, &den, n + 1);
            prop_assert_eq!(&expanded[1..], &cubic_recurrence(u, &q, &c, n)[..]);
        }

        #[test]
        fn scalar_types_agree(u in prop::array::uniform3(-50i64..50), q in 2i64..60, c in -15i64..15) {
            let small = cubic_recurrence(u, &q, &c, 8);
            let wide = cubic_recurrence(u.map(i128::from), &(q as i128), &(c as i128), 8);
            let big = cubic_recurrence(u.map(BigInt::from), &BigInt::from(q), &BigInt::from(c), 8);
            for i in 0..8 {
                prop_assert_eq!(small[i] as i128, wide[i]);
                prop_assert_eq!(BigInt::from(small[i]), big[i].clone());
            }
        }
    }
}
