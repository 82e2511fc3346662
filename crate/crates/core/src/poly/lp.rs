//! Exact cone-membership test: is `target = Σ t_j·gen_j` for some `t ≥ 0`?
//!
//! Phase-one simplex over rationals with Bland's rule. Kept independent of
//! the double-description code so each can check the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub fn cone_contains(generators: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    let rows = target.len();
    let cols = generators.len();
    debug_assert!(generators.iter().all(|g| g.len() == rows));
    if target.iter().all(|t| t.is_zero()) {
        return true;
    }
    if cols == 0 {
        return false;
    }

    // Columns: generators, then one artificial per row, then the rhs.
    let width = cols + rows + 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let flip = target[i].is_negative();
        let sign = |v: &BigInt| {
            let q = BigRational::from_integer(v.clone());
            if flip {
                -q
            } else {
                q
            }
        };
        let mut row = vec![BigRational::zero(); width];
        for j in 0..cols {
            row[j] = sign(&generators[j][i]);
        }
        row[cols + i] = BigRational::from_integer(1.into());
        row[width - 1] = sign(&target[i]);
        tab.push(row);
    }
    // Reduced costs of `min Σ artificials`, expressed in the non-basic columns.
    let mut cost = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..cols {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    while let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded below is impossible for a sum of nonnegatives
            unreachable!("phase-one objective is bounded");
        };
        let pivot = tab[pr][enter].clone();
        for x in tab[pr].iter_mut() {
            *x /= &pivot;
        }
        let prow = tab[pr].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    cost[width - 1].is_zero()
}
