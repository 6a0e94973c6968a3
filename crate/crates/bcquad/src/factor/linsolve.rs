//! Fraction-free Gauss-Jordan elimination over `ℚ[symbols]`.

use crate::coeffs::{CoeffError, ParamScalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Solved {
    /// `x = num / den`, free unknowns set to zero. `den` is the rank minor;
    /// the solution is valid wherever it does not vanish.
    Solution {
        num: Vec<ParamScalar>,
        den: ParamScalar,
    },
    /// Some equation reduced to `0 = nonzero constant`.
    Inconsistent,
    /// Solvable only where every listed polynomial vanishes.
    Conditional {
        vanishing: Vec<ParamScalar>,
        den: ParamScalar,
    },
}

fn pivot_rank(p: &ParamScalar) -> (bool, usize) {
    (!p.is_constant(), p.num_terms())
}

/// Solves `a · x = b` for `x` over the fraction field of the coefficient
/// ring, keeping every intermediate entry in the ring.
///
/// After processing a pivot column every pivot entry equals the current
/// pivot, so the divisions by the previous pivot are exact (the Sylvester
/// identity), above and below the pivot row alike.
pub fn solve(
    a: &[Vec<ParamScalar>],
    b: &[ParamScalar],
    one: &ParamScalar,
) -> Result<Solved, CoeffError> {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    let k = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<ParamScalar>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            assert_eq!(r.len(), k, "ragged system");
            let mut v = r.clone();
            v.push(bi.clone());
            v
        })
        .collect();
    let mut prev = one.clone();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..k {
        let rank = pivots.len();
        // constant pivots keep the solution free of spurious denominators
        let Some(pr) = (rank..m)
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| pivot_rank(&rows[i][col]))
        else {
            continue;
        };
        rows.swap(rank, pr);
        let prow = rows[rank].clone();
        let p = prow[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let f = row[col].clone();
            for j in 0..=k {
                if j == col {
                    continue;
                }
                let t = &(&p * &row[j]) - &(&f * &prow[j]);
                row[j] = t.exact_div(&prev)?;
            }
            row[col] = ParamScalar::zero(one.table());
        }
        prev = p;
        pivots.push(col);
        if pivots.len() == m {
            break;
        }
    }
    let rank = pivots.len();
    let leftover: Vec<ParamScalar> = rows[rank..]
        .iter()
        .map(|r| r[k].clone())
        .filter(|e| !e.is_zero())
        .collect();
    if leftover.iter().any(|e| e.is_constant()) {
        return Ok(Solved::Inconsistent);
    }
    if !leftover.is_empty() {
        return Ok(Solved::Conditional {
            vanishing: leftover,
            den: prev,
        });
    }
    let mut num = vec![ParamScalar::zero(one.table()); k];
    for (r, &c) in pivots.iter().enumerate() {
        num[c] = rows[r][k].clone();
    }
    Ok(Solved::Solution { num, den: prev })
}
