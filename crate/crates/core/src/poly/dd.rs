//! Double description over exact integers.
//!
//! Computes a generating system of the cone `{y ∈ R^d : ⟨g, y⟩ ≥ 0 for all g}`
//! by adding one constraint at a time. Lineality directions are kept as a
//! separate basis; extreme rays are combined pairwise only when adjacent,
//! using the combinatorial test on their sets of tight constraints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) struct Cone {
    /// Basis of the lineality space.
    pub lineality: Vec<Vec<BigInt>>,
    /// Extreme rays modulo lineality, each primitive.
    pub rays: Vec<Vec<BigInt>>,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the positive gcd of the entries; the zero vector is unchanged.
pub(crate) fn primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a·u − b·v`.
fn combine(a: &BigInt, u: &[BigInt], b: &BigInt, v: &[BigInt]) -> Vec<BigInt> {
    u.iter().zip(v).map(|(x, y)| a * x - b * y).collect()
}

struct Generator {
    vec: Vec<BigInt>,
    tight: Vec<bool>,
}

fn is_subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub(crate) fn solve(constraints: &[Vec<BigInt>], d: usize) -> Cone {
    let n = constraints.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<Generator> = Vec::new();

    for (k, g) in constraints.iter().enumerate() {
        debug_assert_eq!(g.len(), d);
        if let Some(pos) = lineality.iter().position(|l| !dot(g, l).is_zero()) {
            let mut pivot = lineality.swap_remove(pos);
            let mut a0 = dot(g, &pivot);
            if a0.is_negative() {
                pivot.iter_mut().for_each(|x| *x = -&*x);
                a0 = -a0;
            }
            for l in lineality.iter_mut() {
                let s = dot(g, l);
                if !s.is_zero() {
                    *l = combine(&a0, l, &s, &pivot);
                    primitive(l);
                }
            }
            for r in rays.iter_mut() {
                let s = dot(g, &r.vec);
                if !s.is_zero() {
                    r.vec = combine(&a0, &r.vec, &s, &pivot);
                    primitive(&mut r.vec);
                }
                r.tight[k] = true;
            }
            let mut tight = vec![false; n];
            tight[..k].iter_mut().for_each(|t| *t = true);
            primitive(&mut pivot);
            rays.push(Generator { vec: pivot, tight });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(g, &r.vec)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight[k] = true;
                }
            }
            continue;
        }

        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let pointed_dim = d - lineality.len();
        let mut fresh = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common: Vec<bool> = rays[p]
                    .tight
                    .iter()
                    .zip(&rays[q].tight)
                    .map(|(&a, &b)| a && b)
                    .collect();
                if pointed_dim >= 2 && common.iter().filter(|&&t| t).count() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&i| i != p && i != q)
                    .all(|i| !is_subset(&common, &rays[i].tight));
                if !adjacent {
                    continue;
                }
                // value is zero on g: vp·q − vq·p with vp > 0, vq < 0
                let mut vec = combine(&values[p], &rays[q].vec, &values[q], &rays[p].vec);
                primitive(&mut vec);
                let mut tight = common;
                tight[k] = true;
                fresh.push(Generator { vec, tight });
            }
        }
        let mut next: Vec<Generator> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.tight[k] = true;
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.vec).collect();
    out.sort();
    out.dedup();
    Cone {
        lineality,
        rays: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn no_constraints_is_whole_space() {
        let c = solve(&[], 3);
        assert_eq!(c.lineality.len(), 3);
        assert!(c.rays.is_empty());
    }

    #[test]
    fn orthant() {
        let c = solve(&[v(&[1, 0]), v(&[0, 1])], 2);
        assert!(c.lineality.is_empty());
        assert_eq!(c.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn wedge_in_plane() {
        // x ≥ 0, y ≥ x, and a redundant y ≥ 0
        let c = solve(&[v(&[1, 0]), v(&[-1, 1]), v(&[0, 1])], 2);
        assert!(c.lineality.is_empty());
        assert_eq!(c.rays, vec![v(&[0, 1]), v(&[1, 1])]);
    }

    #[test]
    fn equality_pair_leaves_line() {
        // x ≥ 0, −x ≥ 0 in R^2: the y-axis
        let c = solve(&[v(&[1, 0]), v(&[-1, 0])], 2);
        assert_eq!(c.lineality.len(), 1);
        assert!(c.lineality[0][0].is_zero());
        assert!(c.rays.is_empty());
    }

    #[test]
    fn square_pyramid() {
        // cone over the square with corners (±1, ±1) at height 1
        let cons = vec![
            v(&[1, 0, 1]),
            v(&[-1, 0, 1]),
            v(&[0, 1, 1]),
            v(&[0, -1, 1]),
        ];
        let c = solve(&cons, 3);
        assert!(c.lineality.is_empty());
        assert_eq!(
            c.rays,
            vec![v(&[-1, -1, 1]), v(&[-1, 1, 1]), v(&[1, -1, 1]), v(&[1, 1, 1])]
        );
    }
}
