use super::poly::Polynomial;
use crate::error::Error;
use std::collections::HashMap;

/// Division-free determinant by Laplace expansion over column subsets.
///
/// Minors over the first `r` rows are memoized per column subset, so each
/// of the `2^n` subsets is expanded once instead of once per permutation.
pub fn determinant(rows: &[Vec<Polynomial>]) -> Result<Polynomial, Error> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let ctx = rows[0][0].ctx();
    for row in rows {
        for entry in row {
            ctx.check_same(&entry.ctx())?;
        }
    }
    assert!(n < 32, "determinant dimension out of range");

    // Expand the smallest rows first: deep minors collapse by cancellation,
    // so the biggest entries should only ever multiply collapsed minors.
    // Sorting permutes the rows; the sign is restored at the end.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| rows[i].iter().map(|p| p.num_terms()).sum::<usize>());
    let inversions =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| order[i] > order[j]);
    let negate = inversions.count() % 2 == 1;

    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(ctx));
    for r in 0..n {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != r + 1 {
                continue;
            }
            let mut acc = Polynomial::zero(ctx);
            let mut pos = 0; // index of j among the set bits of mask
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = &rows[order[r]][j];
                if !entry.is_zero() {
                    let minor = &minors[&(mask & !(1 << j))];
                    let term = entry.checked_mul(minor)?;
                    // cofactor sign along the last row of the r+1 submatrix
                    acc = if (r + pos) % 2 == 0 {
                        acc.checked_add(&term)?
                    } else {
                        acc.checked_sub(&term)?
                    };
                }
                pos += 1;
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    let det = minors.remove(&((1u32 << n) - 1)).expect("full minor");
    Ok(if negate { det.negate() } else { det })
}
