//! Exact determinants over an [`ExactRing`].

use crate::coeffs::{CoeffError, ExactRing};

/// Largest size handled by cofactor expansion in [`determinant`].
pub const COFACTOR_LIMIT: usize = 6;

/// Determinant of a square matrix given as rows; `one` supplies the ring
/// (needed for the empty matrix).
///
/// Sizes up to [`COFACTOR_LIMIT`] use cofactor expansion, larger ones
/// fraction-free Bareiss elimination.
pub fn determinant<R: ExactRing>(m: &[Vec<R>], one: &R) -> Result<R, CoeffError> {
    if m.len() <= COFACTOR_LIMIT {
        Ok(det_cofactor(m, one))
    } else {
        det_bareiss(m, one)
    }
}

/// Laplace expansion along rows, memoised over column subsets
/// (`O(n·2ⁿ)` ring operations instead of `n!`).
pub fn det_cofactor<R: ExactRing>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    assert!(n < 24, "cofactor expansion is exponential");
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return one.clone();
    }
    let zero = one.zero_like();
    // minors[S] = det(rows 0..|S|, columns S)
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(one.clone());
    for set in 1usize..(1 << n) {
        let k = set.count_ones() as usize;
        let row = &m[k - 1];
        let mut acc = zero.clone();
        let mut pos = 0;
        for j in 0..n {
            if set & (1 << j) == 0 {
                continue;
            }
            let sub = minors[set & !(1 << j)].as_ref().unwrap();
            if !row[j].is_zero() && !sub.is_zero() {
                let term = row[j].mul_ref(sub);
                acc = if (k - 1 + pos).is_multiple_of(2) {
                    acc.add_ref(&term)
                } else {
                    acc.sub_ref(&term)
                };
            }
            pos += 1;
        }
        minors[set] = Some(acc);
    }
    minors.pop().unwrap().unwrap()
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
pub fn det_bareiss<R: ExactRing>(m: &[Vec<R>], one: &R) -> Result<R, CoeffError> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Ok(one.clone());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    match eliminate(&mut a, n - 1, one)? {
        None => Ok(one.zero_like()),
        Some(negate) => {
            let d = a[n - 1][n - 1].clone();
            Ok(if negate { d.neg_ref() } else { d })
        }
    }
}

/// Runs Bareiss on the first `k` columns of `a` (at least `k + 1` rows).
///
/// Afterwards entry `(k, j)` for `j ≥ k` is the `(k+1)`-minor on rows
/// `0..=k` and columns `0..k, j` of the row-permuted input. Returns whether
/// the permutation was odd, or `None` if the first `k` columns are
/// linearly dependent.
pub(crate) fn eliminate<R: ExactRing>(
    a: &mut [Vec<R>],
    k: usize,
    one: &R,
) -> Result<Option<bool>, CoeffError> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut negate = false;
    let mut prev = one.clone();
    for p in 0..k {
        let Some(piv) = (p..rows).find(|&i| !a[i][p].is_zero()) else {
            return Ok(None);
        };
        if piv != p {
            a.swap(piv, p);
            negate = !negate;
        }
        for i in p + 1..rows {
            for j in p + 1..cols {
                let t = a[p][p]
                    .mul_ref(&a[i][j])
                    .sub_ref(&a[i][p].mul_ref(&a[p][j]));
                a[i][j] = t.exact_div(&prev)?;
            }
            a[i][p] = one.zero_like();
        }
        prev = a[p][p].clone();
    }
    Ok(Some(negate))
}

/// Signed cofactors of the last column for an `r × (r-1)` matrix `lead`:
/// `cof[i] = det([lead | eᵢ])`, so that `det([lead | v]) = Σ cof[i]·v[i]`.
pub fn last_column_cofactors<R: ExactRing>(lead: &[Vec<R>], one: &R) -> Result<Vec<R>, CoeffError> {
    let r = lead.len();
    assert!(lead.iter().all(|row| row.len() + 1 == r), "need r x (r-1)");
    if r <= COFACTOR_LIMIT + 1 {
        (0..r)
            .map(|i| {
                let minor: Vec<Vec<R>> = lead
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, row)| row.clone())
                    .collect();
                let d = determinant(&minor, one)?;
                Ok(if (i + r - 1).is_multiple_of(2) {
                    d
                } else {
                    d.neg_ref()
                })
            })
            .collect()
    } else {
        last_column_cofactors_bareiss(lead, one)
    }
}

/// All last-column cofactors from a single elimination of `[lead | I]`.
pub fn last_column_cofactors_bareiss<R: ExactRing>(
    lead: &[Vec<R>],
    one: &R,
) -> Result<Vec<R>, CoeffError> {
    let r = lead.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<R>> = lead
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..r).map(|k| if k == i { one.clone() } else { one.zero_like() }));
            v
        })
        .collect();
    match eliminate(&mut a, r - 1, one)? {
        None => Ok(vec![one.zero_like(); r]),
        Some(negate) => Ok((0..r)
            .map(|i| {
                let d = a[r - 1][r - 1 + i].clone();
                if negate {
                    d.neg_ref()
                } else {
                    d
                }
            })
            .collect()),
    }
}
