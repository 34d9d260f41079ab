//! Index ranges for quadratic-exponent sums.
//!
//! Every double series here has a q-exponent that is a convex quadratic in its
//! summation indices. A term can only matter when its exponent is below the
//! truncation order, and convexity makes that set of indices contiguous. These
//! helpers find it exactly; a missed index would silently corrupt a check, so
//! they are tested against a brute-force scan over a much larger box.

/// All `n >= 0` with `f(n) < trunc`, for `f` convex on the nonnegative integers.
///
/// Scans upward and stops once `f` has reached `trunc` while no longer decreasing.
pub fn convex_indices_below(f: impl Fn(i64) -> i64, trunc: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut n = 0;
    loop {
        let v = f(n);
        if v < trunc {
            out.push(n);
        } else if f(n + 1) >= v {
            return out;
        }
        n += 1;
    }
}

/// Largest `n >= 0` with `f(n) < trunc` for convex `f`, or `None` if there is none.
pub fn last_index_below(f: impl Fn(i64) -> i64, trunc: i64) -> Option<i64> {
    convex_indices_below(f, trunc).last().copied()
}

/// All pairs `(outer, inner)` of nonnegative integers with `f(outer, inner) < trunc`,
/// for `f` jointly convex.
///
/// The outer scan stops once the inner range is empty and the minimum over the inner
/// index has stopped decreasing.
pub fn convex_pairs_below(f: impl Fn(i64, i64) -> i64, trunc: i64) -> Vec<(i64, i64)> {
    let inner_min = |k: i64| {
        let g = |m: i64| f(k, m);
        let mut m = 0;
        while g(m + 1) < g(m) {
            m += 1;
        }
        g(m)
    };
    let mut out = Vec::new();
    let mut k = 0;
    loop {
        let row = convex_indices_below(|m| f(k, m), trunc);
        if row.is_empty() && inner_min(k + 1) >= inner_min(k) {
            return out;
        }
        out.extend(row.into_iter().map(|m| (k, m)));
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_pairs(f: impl Fn(i64, i64) -> i64, trunc: i64, boxsize: i64) -> Vec<(i64, i64)> {
        let mut v = Vec::new();
        for k in 0..boxsize {
            for m in 0..boxsize {
                if f(k, m) < trunc {
                    v.push((k, m));
                }
            }
        }
        v
    }

    #[test]
    fn single_index_matches_naive() {
        let fs: Vec<Box<dyn Fn(i64) -> i64>> = vec![
            Box::new(|n| n * (3 * n - 1) / 2),
            Box::new(|n| 3 * n * (n - 1) / 2 - 8 * n),
            Box::new(|n| n * n - 10 * n + 3),
            Box::new(|n| 2 * n),
        ];
        for f in &fs {
            for trunc in [-30, -1, 0, 1, 7, 40, 150] {
                let naive: Vec<i64> = (0..2000).filter(|&n| f(n) < trunc).collect();
                assert_eq!(convex_indices_below(f, trunc), naive, "trunc {trunc}");
            }
        }
    }

    #[test]
    fn double_index_matches_naive() {
        let fs: Vec<Box<dyn Fn(i64, i64) -> i64>> = vec![
            // (k, m) for the Schur, Gollnitz-Gordon, Gollnitz and Alladi-Berkovich exponents
            Box::new(|n, m| 3 * n * (3 * n + 2 * m) + m * (3 * m - 1) / 2),
            Box::new(|k, m| m * m + 4 * m * k + 6 * k * k),
            Box::new(|k, m| m * m + 4 * m * k + 6 * k * k - 2 * k),
            Box::new(|k, m| m * m + 2 * m * k + 2 * k * k + m - k),
            Box::new(|k, m| m * m + 2 * m * k + 2 * k * k + m + k),
            Box::new(|k, m| (k - 4) * (k - 4) + (m - 3) * (m - 3) - 5),
        ];
        for f in &fs {
            for trunc in [-10, 0, 1, 13, 60, 100] {
                assert_eq!(
                    convex_pairs_below(f, trunc),
                    naive_pairs(f, trunc, 200),
                    "trunc {trunc}"
                );
            }
        }
    }
}
